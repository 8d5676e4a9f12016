//! Simple undirected graphs on dense vertex labels `0..n`.
//!
//! Every other module consumes [`Graph`]. The edge list is kept canonical
//! (`u < v`, sorted, no duplicates), so two graphs with the same vertex
//! count and edge set compare equal and share a [`Graph::content_hash`].

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};
use thiserror::Error;

/// Largest vertex count [`enumerate_small_graphs`] accepts.
pub const MAX_ENUMERATION_N: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: malformed input {content:?}")]
    Malformed { line: usize, content: String },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("invalid generator parameters: {0}")]
    InvalidParameters(String),
    #[error("enumeration supports 1 <= n <= {MAX_ENUMERATION_N}, got {0}")]
    UnsupportedOrder(usize),
}

/// A finite simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list in any order and orientation.
    ///
    /// Self-loops, out-of-range endpoints and repeated pairs are rejected;
    /// the `line` field of those errors is the 1-based position in `edges`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut canonical = Vec::new();
        for (i, (u, v)) in edges.into_iter().enumerate() {
            let line = i + 1;
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { line, vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { line, vertex: u });
            }
            canonical.push((u.min(v), u.max(v), line));
        }
        canonical.sort_unstable();
        for pair in canonical.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            if (a.0, a.1) == (b.0, b.1) {
                return Err(GraphError::DuplicateEdge {
                    line: a.2.max(b.2),
                    u: a.0,
                    v: a.1,
                });
            }
        }
        let edges: Vec<_> = canonical.into_iter().map(|(u, v, _)| (u, v)).collect();
        Ok(Self::from_canonical(n, edges))
    }

    /// `edges` must already be sorted, deduplicated and oriented `u < v`.
    pub(crate) fn from_canonical(n: usize, edges: Vec<(usize, usize)>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&(u, v)| u < v && v < n));
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Self {
            n,
            edges,
            adjacency,
        }
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_canonical(n, Vec::new())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list, sorted, each pair `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> DegreeSequence {
        DegreeSequence(self.adjacency.iter().map(Vec::len).collect())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Position of `{u, v}` in the canonical edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2 - self.size());
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Self::from_canonical(self.n, edges)
    }

    /// Breadth-first connectivity. The empty graph on zero vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.n
    }

    /// `Some(r)` iff every vertex has degree `r`. `None` for the null graph.
    pub fn is_regular(&self) -> Option<usize> {
        let first = self.adjacency.first()?.len();
        self.adjacency
            .iter()
            .all(|list| list.len() == first)
            .then_some(first)
    }

    /// Stable identifier: SHA-256 over `n` and the sorted edge list, first 16 hex digits.
    pub fn content_hash(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(self.n.to_string().as_bytes());
        hasher.update(b";");
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                hasher.update(b",");
            }
            hasher.update(format!("{u}-{v}").as_bytes());
        }
        let digest = hasher.finalize();
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Edge-list text: header `n m`, then one `u v` line per canonical edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.size());
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Graphviz rendering: every vertex declared, then one `u -- v` line per edge.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n {
            out.push_str(&format!("  {v}\n"));
        }
        for (u, v) in &self.edges {
            out.push_str(&format!("  {u} -- {v}\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl FromStr for Graph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_edge_list(s)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

/// Vertex degrees indexed by vertex label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence(pub Vec<usize>);

impl DegreeSequence {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}

impl std::ops::Index<usize> for DegreeSequence {
    type Output = usize;

    fn index(&self, v: usize) -> &usize {
        &self.0[v]
    }
}

/// Parses the line-oriented edge-list format.
///
/// The first non-blank line is `n m`; each following non-blank line is an
/// edge `u v`. Text after `#` is ignored. Errors carry 1-based line numbers
/// of the input text.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(GraphError::Malformed {
        line: 1,
        content: String::new(),
    })?;
    let (n, declared) = parse_pair(header_line, header)?;

    let mut seen = std::collections::HashSet::new();
    let mut edges = Vec::with_capacity(declared);
    for (line, content) in lines {
        let (u, v) = parse_pair(line, content)?;
        for vertex in [u, v] {
            if vertex >= n {
                return Err(GraphError::VertexOutOfRange { line, vertex, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { line, vertex: u });
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(GraphError::DuplicateEdge {
                line,
                u: key.0,
                v: key.1,
            });
        }
        edges.push(key);
    }
    if edges.len() != declared {
        return Err(GraphError::EdgeCountMismatch {
            declared,
            found: edges.len(),
        });
    }
    edges.sort_unstable();
    Ok(Graph::from_canonical(n, edges))
}

fn parse_pair(line: usize, content: &str) -> Result<(usize, usize), GraphError> {
    let malformed = || GraphError::Malformed {
        line,
        content: content.to_string(),
    };
    let mut fields = content.split_whitespace();
    let a = fields.next().ok_or_else(malformed)?;
    let b = fields.next().ok_or_else(malformed)?;
    if fields.next().is_some() {
        return Err(malformed());
    }
    Ok((
        a.parse().map_err(|_| malformed())?,
        b.parse().map_err(|_| malformed())?,
    ))
}

/// Named graph families understood by [`generate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Cycle(usize),
    Complete(usize),
    Path(usize),
    /// `Star(n)` has `n` vertices: centre `0` and `n - 1` leaves.
    Star(usize),
    CompleteBipartite(usize, usize),
    Empty(usize),
    Gnm {
        n: usize,
        m: usize,
        seed: u64,
    },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Star(n) => write!(f, "star:{n}"),
            Family::CompleteBipartite(a, b) => write!(f, "bipartite:{a},{b}"),
            Family::Empty(n) => write!(f, "empty:{n}"),
            Family::Gnm { n, m, seed } => write!(f, "gnm:{n},{m},{seed}"),
        }
    }
}

impl Family {
    /// Parses `family:params` shorthand, e.g. `cycle:7` or `gnm:10,15,3`.
    ///
    /// A `gnm` spec without a seed takes `default_seed`.
    pub fn parse(spec: &str, default_seed: u64) -> Result<Self, GraphError> {
        let bad = || GraphError::InvalidParameters(format!("unrecognised generator spec {spec:?}"));
        let (name, params) = spec.split_once(':').ok_or_else(bad)?;
        let nums: Vec<u64> = params
            .split(',')
            .map(|p| p.trim().parse::<u64>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        let one = |ctor: fn(usize) -> Family| match nums.as_slice() {
            [n] => Ok(ctor(*n as usize)),
            _ => Err(bad()),
        };
        match name {
            "cycle" => one(Family::Cycle),
            "complete" => one(Family::Complete),
            "path" => one(Family::Path),
            "star" => one(Family::Star),
            "empty" => one(Family::Empty),
            "bipartite" | "complete_bipartite" => match nums.as_slice() {
                [a, b] => Ok(Family::CompleteBipartite(*a as usize, *b as usize)),
                _ => Err(bad()),
            },
            "gnm" => match nums.as_slice() {
                [n, m] => Ok(Family::Gnm {
                    n: *n as usize,
                    m: *m as usize,
                    seed: default_seed,
                }),
                [n, m, seed] => Ok(Family::Gnm {
                    n: *n as usize,
                    m: *m as usize,
                    seed: *seed,
                }),
                _ => Err(bad()),
            },
            _ => Err(bad()),
        }
    }
}

/// Builds a member of a named family.
pub fn generate(family: Family) -> Result<Graph, GraphError> {
    let invalid = |why: &str| Err(GraphError::InvalidParameters(format!("{family}: {why}")));
    let graph = match family {
        Family::Cycle(n) => {
            if n < 3 {
                return invalid("cycle needs n >= 3");
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?
        }
        Family::Complete(n) => {
            if n < 1 {
                return invalid("complete graph needs n >= 1");
            }
            let edges = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            Graph::from_canonical(n, edges)
        }
        Family::Path(n) => {
            if n < 1 {
                return invalid("path needs n >= 1");
            }
            Graph::from_canonical(n, (1..n).map(|i| (i - 1, i)).collect())
        }
        Family::Star(n) => {
            if n < 2 {
                return invalid("star needs n >= 2");
            }
            Graph::from_canonical(n, (1..n).map(|i| (0, i)).collect())
        }
        Family::CompleteBipartite(a, b) => {
            if a < 1 || b < 1 {
                return invalid("both parts must be non-empty");
            }
            let edges = (0..a)
                .flat_map(|u| (a..a + b).map(move |v| (u, v)))
                .collect();
            Graph::from_canonical(a + b, edges)
        }
        Family::Empty(n) => Graph::empty(n),
        Family::Gnm { n, m, seed } => {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            if m > pairs.len() {
                return invalid("m exceeds n(n-1)/2");
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut edges: Vec<_> = sample(&mut rng, pairs.len(), m)
                .into_iter()
                .map(|i| pairs[i])
                .collect();
            edges.sort_unstable();
            Graph::from_canonical(n, edges)
        }
    };
    Ok(graph)
}

/// Every labeled simple graph on `n` vertices, optionally only the connected ones.
///
/// Graph `k` in the unfiltered stream has edge `i` (in lexicographic pair
/// order) present iff bit `i` of `k` is set.
pub fn enumerate_small_graphs(
    n: usize,
    connected_only: bool,
) -> Result<impl Iterator<Item = Graph>, GraphError> {
    if !(1..=MAX_ENUMERATION_N).contains(&n) {
        return Err(GraphError::UnsupportedOrder(n));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total: u64 = 1 << pairs.len();
    Ok((0..total)
        .map(move |mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            Graph::from_canonical(n, edges)
        })
        .filter(move |g| !connected_only || g.is_connected()))
}
