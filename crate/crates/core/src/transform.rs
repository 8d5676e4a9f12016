//! Explicit construction of transformation graphs on `V(G) ∪ E(G)`.
//!
//! [`build`] decides adjacency by testing every pair of transformed
//! vertices against the rule of the requested [`TransformKind`]. It never
//! consults a degree formula, which is what makes it usable as the
//! reference the closed forms in [`crate::formulas`] are checked against.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("unknown transformation {0:?} (expected one of: {names})", names = TransformKind::NAMES.join(", "))]
    UnknownKind(String),
    #[error("{0} is not a vertex or edge of the source graph")]
    UnknownRole(Role),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// Applies the sign to a relation: `+` keeps it, `-` complements it.
    fn apply(self, related: bool) -> bool {
        related ^ (self == Sign::Minus)
    }
}

/// The fifteen transformation variants.
///
/// `Gab(a, b)`: `a` keeps/complements vertex-vertex adjacency, `b`
/// keeps/complements vertex-edge incidence, edge-edge pairs are never
/// adjacent. `Gxyz(x, y, z)`: `x` acts on vertex-vertex adjacency, `y` on
/// edge-edge adjacency, `z` on vertex-edge incidence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TransformKind {
    Total,
    SemitotalPoint,
    SemitotalLine,
    Gab(Sign, Sign),
    Gxyz(Sign, Sign, Sign),
}

use Sign::{Minus, Plus};

impl TransformKind {
    pub const ALL: [TransformKind; 15] = [
        TransformKind::Total,
        TransformKind::SemitotalPoint,
        TransformKind::SemitotalLine,
        TransformKind::Gab(Plus, Plus),
        TransformKind::Gab(Plus, Minus),
        TransformKind::Gab(Minus, Plus),
        TransformKind::Gab(Minus, Minus),
        TransformKind::Gxyz(Plus, Plus, Plus),
        TransformKind::Gxyz(Plus, Plus, Minus),
        TransformKind::Gxyz(Plus, Minus, Plus),
        TransformKind::Gxyz(Plus, Minus, Minus),
        TransformKind::Gxyz(Minus, Plus, Plus),
        TransformKind::Gxyz(Minus, Plus, Minus),
        TransformKind::Gxyz(Minus, Minus, Plus),
        TransformKind::Gxyz(Minus, Minus, Minus),
    ];

    /// Command-line spellings, in the order of [`TransformKind::ALL`].
    pub const NAMES: [&'static str; 15] = [
        "total", "t1", "t2", "g++", "g+-", "g-+", "g--", "g+++", "g++-", "g+-+", "g+--", "g-++",
        "g-+-", "g--+", "g---",
    ];

    pub const GXYZ: [TransformKind; 8] = [
        TransformKind::Gxyz(Plus, Plus, Plus),
        TransformKind::Gxyz(Plus, Plus, Minus),
        TransformKind::Gxyz(Plus, Minus, Plus),
        TransformKind::Gxyz(Plus, Minus, Minus),
        TransformKind::Gxyz(Minus, Plus, Plus),
        TransformKind::Gxyz(Minus, Plus, Minus),
        TransformKind::Gxyz(Minus, Minus, Plus),
        TransformKind::Gxyz(Minus, Minus, Minus),
    ];

    pub fn name(self) -> &'static str {
        let i = Self::ALL
            .iter()
            .position(|&k| k == self)
            .expect("ALL lists every kind");
        Self::NAMES[i]
    }

    /// The `Gxyz` variant whose graph is the complement of this one's.
    pub fn complementary(self) -> Option<TransformKind> {
        match self {
            TransformKind::Gxyz(x, y, z) => Some(TransformKind::Gxyz(x.flip(), y.flip(), z.flip())),
            TransformKind::Total => Some(TransformKind::Gxyz(Minus, Minus, Minus)),
            _ => None,
        }
    }

    /// Signs acting on (vertex-vertex, edge-edge, vertex-edge) pairs; `None`
    /// means that class of pair is never adjacent.
    fn rule(self) -> (Option<Sign>, Option<Sign>, Option<Sign>) {
        match self {
            TransformKind::Total => (Some(Plus), Some(Plus), Some(Plus)),
            TransformKind::SemitotalPoint => (Some(Plus), None, Some(Plus)),
            TransformKind::SemitotalLine => (None, Some(Plus), Some(Plus)),
            TransformKind::Gab(a, b) => (Some(a), None, Some(b)),
            TransformKind::Gxyz(x, y, z) => (Some(x), Some(y), Some(z)),
        }
    }
}

impl fmt::Display for TransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TransformKind {
    type Err = TransformError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase();
        Self::NAMES
            .iter()
            .position(|&name| name == key)
            .map(|i| Self::ALL[i])
            .ok_or_else(|| TransformError::UnknownKind(s.to_string()))
    }
}

impl Serialize for TransformKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// What a transformed vertex stands for in the source graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    Vertex(usize),
    /// Canonical edge, `u < v`.
    Edge(usize, usize),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Vertex(v) => write!(f, "v{v}"),
            Role::Edge(u, v) => write!(f, "e{u}-{v}"),
        }
    }
}

impl Serialize for Role {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A transformation graph together with the role of each of its vertices.
///
/// Vertices `0..n` are the source vertices in order; vertices `n..n+m` are
/// the source edges in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformedGraph {
    pub graph: Graph,
    pub roles: Vec<Role>,
    pub kind: TransformKind,
    pub source_hash: String,
}

impl TransformedGraph {
    pub fn index_of(&self, role: Role) -> Option<usize> {
        let n = self.roles.len() - self.edge_count_in_source();
        match role {
            Role::Vertex(v) => (v < n).then_some(v),
            Role::Edge(u, v) => self.roles[n..]
                .binary_search(&Role::Edge(u.min(v), u.max(v)))
                .ok()
                .map(|i| n + i),
        }
    }

    fn edge_count_in_source(&self) -> usize {
        self.roles
            .iter()
            .filter(|r| matches!(r, Role::Edge(..)))
            .count()
    }

    pub fn degree_of(&self, role: Role) -> Result<usize, TransformError> {
        self.index_of(role)
            .map(|i| self.graph.degree(i))
            .ok_or(TransformError::UnknownRole(role))
    }

    /// Graphviz rendering with role labels (`v3`, `e1-2`) as node ids.
    pub fn to_dot(&self) -> String {
        let mut out = format!("graph \"{}\" {{\n", self.kind);
        for role in &self.roles {
            out.push_str(&format!("  \"{role}\"\n"));
        }
        for &(a, b) in self.graph.edges() {
            out.push_str(&format!(
                "  \"{}\" -- \"{}\"\n",
                self.roles[a], self.roles[b]
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn degree_dump(&self) -> DegreeDump {
        DegreeDump {
            kind: self.kind,
            source_hash: self.source_hash.clone(),
            order: self.graph.order(),
            size: self.graph.size(),
            degrees: self
                .roles
                .iter()
                .enumerate()
                .map(|(i, &role)| RoleDegree {
                    role,
                    degree: self.graph.degree(i),
                })
                .collect(),
        }
    }
}

/// JSON shape of a transformed graph's degree sequence, keyed by role.
#[derive(Debug, Clone, Serialize)]
pub struct DegreeDump {
    pub kind: TransformKind,
    pub source_hash: String,
    pub order: usize,
    pub size: usize,
    pub degrees: Vec<RoleDegree>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RoleDegree {
    pub role: Role,
    pub degree: usize,
}

/// Constructs the transformation graph of `g` by exhaustive pair testing.
pub fn build(g: &Graph, kind: TransformKind) -> TransformedGraph {
    let n = g.order();
    let roles: Vec<Role> = (0..n)
        .map(Role::Vertex)
        .chain(g.edges().iter().map(|&(u, v)| Role::Edge(u, v)))
        .collect();
    let (vertex_vertex, edge_edge, vertex_edge) = kind.rule();

    let mut edges = Vec::new();
    for i in 0..roles.len() {
        for j in i + 1..roles.len() {
            let adjacent = match (roles[i], roles[j]) {
                (Role::Vertex(u), Role::Vertex(v)) => {
                    vertex_vertex.is_some_and(|s| s.apply(g.has_edge(u, v)))
                }
                (Role::Edge(a, b), Role::Edge(c, d)) => {
                    let share = a == c || a == d || b == c || b == d;
                    edge_edge.is_some_and(|s| s.apply(share))
                }
                (Role::Vertex(w), Role::Edge(a, b)) | (Role::Edge(a, b), Role::Vertex(w)) => {
                    vertex_edge.is_some_and(|s| s.apply(w == a || w == b))
                }
            };
            if adjacent {
                edges.push((i, j));
            }
        }
    }

    TransformedGraph {
        graph: Graph::from_canonical(roles.len(), edges),
        roles,
        kind,
        source_hash: g.content_hash(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn family(f: Family) -> Graph {
        generate(f).unwrap()
    }

    #[test]
    fn names_round_trip() {
        for (kind, name) in TransformKind::ALL.iter().zip(TransformKind::NAMES) {
            assert_eq!(kind.name(), name);
            assert_eq!(name.parse::<TransformKind>().unwrap(), *kind);
        }
        assert!(matches!(
            "g+".parse::<TransformKind>(),
            Err(TransformError::UnknownKind(_))
        ));
        let mut sorted = TransformKind::ALL;
        sorted.sort();
        assert_eq!(sorted, TransformKind::ALL);
    }

    #[test]
    fn semitotal_point_of_triangle() {
        let t = build(&family(Family::Complete(3)), TransformKind::SemitotalPoint);
        assert_eq!(t.graph.order(), 6);
        assert_eq!(t.graph.size(), 9);
    }

    #[test]
    fn semitotal_line_of_p3() {
        let t = build(&family(Family::Path(3)), TransformKind::SemitotalLine);
        assert_eq!(t.graph.size(), 5);
    }

    #[test]
    fn full_complement_of_triangle_is_a_perfect_matching() {
        let t = build(
            &family(Family::Complete(3)),
            TransformKind::Gxyz(Minus, Minus, Minus),
        );
        assert_eq!(t.graph.order(), 6);
        assert_eq!(t.graph.is_regular(), Some(1));
    }

    #[test]
    fn degree_lookup_by_role() {
        let c4 = family(Family::Cycle(4));
        let t1 = build(&c4, TransformKind::SemitotalPoint);
        assert_eq!(t1.degree_of(Role::Vertex(0)), Ok(4));

        let gpm = build(&c4, TransformKind::Gab(Plus, Minus));
        assert_eq!(gpm.degree_of(Role::Vertex(0)), Ok(4));

        let p3 = family(Family::Path(3));
        let t = build(&p3, TransformKind::Gxyz(Minus, Minus, Plus));
        assert_eq!(t.degree_of(Role::Edge(0, 1)), Ok(2));
        assert_eq!(t.degree_of(Role::Edge(1, 0)), Ok(2));

        assert_eq!(
            t.degree_of(Role::Vertex(3)),
            Err(TransformError::UnknownRole(Role::Vertex(3)))
        );
        assert_eq!(
            t.degree_of(Role::Edge(0, 2)),
            Err(TransformError::UnknownRole(Role::Edge(0, 2)))
        );
    }

    #[test]
    fn total_matches_plus_plus_plus() {
        let g = family(Family::Gnm {
            n: 6,
            m: 8,
            seed: 3,
        });
        assert_eq!(
            build(&g, TransformKind::Total).graph,
            build(&g, TransformKind::Gxyz(Plus, Plus, Plus)).graph
        );
    }

    #[test]
    fn dot_uses_role_labels() {
        let t = build(&family(Family::Path(2)), TransformKind::Total);
        let dot = t.to_dot();
        assert!(dot.contains("\"v0\" -- \"e0-1\""));
        assert!(dot.contains("\"v0\" -- \"v1\""));
    }

    #[test]
    fn degree_dump_json() {
        let t = build(&family(Family::Path(2)), TransformKind::SemitotalPoint);
        let json = serde_json::to_value(t.degree_dump()).unwrap();
        assert_eq!(json["kind"], "t1");
        assert_eq!(json["degrees"][2]["role"], "e0-1");
        assert_eq!(json["degrees"][2]["degree"], 2);
    }
}
