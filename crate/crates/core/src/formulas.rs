//! Closed-form transformed degrees, exact NK values, AM-GM upper bounds and
//! regular-graph specialisations, all computed from `(n, m, degrees)` of the
//! source graph without constructing any transformation graph.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::graph::Graph;
use crate::indices::{self, product};
use crate::transform::Sign::{Minus, Plus};
use crate::transform::TransformKind;
use crate::{BigNat, ExactRational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("{0} has no AM-GM bound")]
    NotBounded(TransformKind),
    #[error("{0} has no regular-graph closed form")]
    NoCorollary(TransformKind),
    #[error("no printed {family} example for {kind}")]
    NoExample {
        family: ExampleFamily,
        kind: TransformKind,
    },
    #[error("no {r}-regular graph has n = {n} and m = {m}")]
    Inconsistent { n: usize, m: usize, r: usize },
    #[error("closed form for {0} disagrees with its degree product")]
    LiteralDisagreement(TransformKind),
    #[error("{0}")]
    InvalidParameters(String),
}

/// A vertex of the source graph, or one of its edges, described by degrees only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeRole {
    Vertex { d: usize },
    Edge { du: usize, dv: usize },
}

/// Degree of a transformed vertex as a function of source-graph degrees.
///
/// Not clamped: inputs that no real graph produces can give negative values.
pub fn closed_degree(kind: TransformKind, role: DegreeRole, n: usize, m: usize) -> i64 {
    let (n, m) = (n as i64, m as i64);
    match role {
        DegreeRole::Vertex { d } => {
            let d = d as i64;
            match kind {
                TransformKind::SemitotalPoint | TransformKind::Gab(Plus, Plus) => 2 * d,
                TransformKind::SemitotalLine => d,
                TransformKind::Gab(Plus, Minus) => m,
                TransformKind::Gab(Minus, Plus) => n - 1,
                TransformKind::Gab(Minus, Minus) => n + m - 1 - 2 * d,
                TransformKind::Total | TransformKind::Gxyz(Plus, Plus, Plus) => 2 * d,
                TransformKind::Gxyz(Minus, Minus, Minus) => m + n - 1 - 2 * d,
                TransformKind::Gxyz(Plus, Plus, Minus) => m,
                TransformKind::Gxyz(Minus, Minus, Plus) => n - 1,
                TransformKind::Gxyz(Minus, Plus, Plus) => n - 1,
                TransformKind::Gxyz(Plus, Minus, Minus) => m,
                TransformKind::Gxyz(Plus, Minus, Plus) => 2 * d,
                TransformKind::Gxyz(Minus, Plus, Minus) => m + n - 1 - 2 * d,
            }
        }
        DegreeRole::Edge { du, dv } => {
            let s = (du + dv) as i64;
            match kind {
                TransformKind::SemitotalPoint | TransformKind::Gab(Plus, Plus) => 2,
                TransformKind::SemitotalLine => s,
                TransformKind::Gab(Plus, Minus) => n - 2,
                TransformKind::Gab(Minus, Plus) => 2,
                TransformKind::Gab(Minus, Minus) => n - 2,
                TransformKind::Total | TransformKind::Gxyz(Plus, Plus, Plus) => s,
                TransformKind::Gxyz(Minus, Minus, Minus) => m + n - 1 - s,
                TransformKind::Gxyz(Plus, Plus, Minus) => s + n - 4,
                TransformKind::Gxyz(Minus, Minus, Plus) => m + 3 - s,
                TransformKind::Gxyz(Minus, Plus, Plus) => s,
                TransformKind::Gxyz(Plus, Minus, Minus) => m + n - 1 - s,
                TransformKind::Gxyz(Plus, Minus, Plus) => m + 3 - s,
                TransformKind::Gxyz(Minus, Plus, Minus) => n - 4 + s,
            }
        }
    }
}

/// Closed-form degrees of the original vertices, then of the original edges.
fn closed_degrees(kind: TransformKind, g: &Graph) -> (Vec<i64>, Vec<i64>) {
    let (n, m) = (g.order(), g.size());
    let vertex = (0..n)
        .map(|v| closed_degree(kind, DegreeRole::Vertex { d: g.degree(v) }, n, m))
        .collect();
    let edge = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            closed_degree(
                kind,
                DegreeRole::Edge {
                    du: g.degree(u),
                    dv: g.degree(v),
                },
                n,
                m,
            )
        })
        .collect();
    (vertex, edge)
}

fn non_negative(kind: TransformKind, factors: &[i64]) -> Result<Vec<u64>, FormulaError> {
    factors
        .iter()
        .map(|&f| {
            u64::try_from(f).map_err(|_| {
                FormulaError::NotApplicable(format!("{kind} closed degree {f} is negative"))
            })
        })
        .collect()
}

fn pow(base: u64, exp: usize) -> BigNat {
    num_traits::pow(BigNat::from(base), exp)
}

/// The closed form in `n`, `m`, `NK` and `Pi1*`, where one exists, for the NK index of
/// `kind` applied to `g`.
///
/// `Gab(+,+)` shares the semitotal-point degrees, so it takes the
/// `2^(n+m)·NK(G)` form; `NK(G)·Π1*(G)` belongs to the semitotal-line graph.
pub fn literal_closed_form(kind: TransformKind, g: &Graph) -> Option<BigNat> {
    let (n, m) = (g.order(), g.size());
    let nk = || indices::nk(g);
    let pi1star = || indices::pi1star(g);
    let value = match kind {
        TransformKind::SemitotalPoint | TransformKind::Gab(Plus, Plus) => pow(2, n + m) * nk(),
        TransformKind::SemitotalLine => nk() * pi1star(),
        TransformKind::Gab(Plus, Minus) => {
            pow(m as u64, n) * num_traits::pow(BigInt::from(n as i64 - 2), m).to_biguint()?
        }
        TransformKind::Gab(Minus, Plus) => {
            pow(2, m) * num_traits::pow(BigInt::from(n as i64 - 1), n).to_biguint()?
        }
        TransformKind::Total | TransformKind::Gxyz(Plus, Plus, Plus) => {
            pow(2, n) * nk() * pi1star()
        }
        TransformKind::Gxyz(Minus, Plus, Plus) => {
            num_traits::pow(BigInt::from(n as i64 - 1), n).to_biguint()? * pi1star()
        }
        _ => return None,
    };
    Some(value)
}

/// Exact NK index of the transformation graph, as the product of closed-form degrees.
///
/// Where [`literal_closed_form`] has a value it is evaluated too and must agree.
pub fn nk_exact(kind: TransformKind, g: &Graph) -> Result<BigNat, FormulaError> {
    let (vertex, edge) = closed_degrees(kind, g);
    let value = product(non_negative(kind, &vertex)?) * product(non_negative(kind, &edge)?);
    if let Some(literal) = literal_closed_form(kind, g) {
        if literal != value {
            return Err(FormulaError::LiteralDisagreement(kind));
        }
    }
    Ok(value)
}

/// The seven variants whose NK index is only bounded from above.
pub const BOUNDED: [TransformKind; 7] = [
    TransformKind::Gab(Minus, Minus),
    TransformKind::Gxyz(Minus, Minus, Minus),
    TransformKind::Gxyz(Plus, Plus, Minus),
    TransformKind::Gxyz(Minus, Minus, Plus),
    TransformKind::Gxyz(Plus, Minus, Minus),
    TransformKind::Gxyz(Plus, Minus, Plus),
    TransformKind::Gxyz(Minus, Plus, Minus),
];

pub fn is_bounded(kind: TransformKind) -> bool {
    BOUNDED.contains(&kind)
}

/// One half (vertex factors or edge factors) of an NK product and its bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartBound {
    pub product: BigNat,
    pub bound: ExactRational,
    /// `true` when `bound` is the AM-GM mean power; otherwise the part is
    /// bounded by itself.
    pub averaged: bool,
}

impl PartBound {
    fn exact(factors: &[u64]) -> Self {
        let product = product(factors.iter().copied());
        Self {
            bound: ExactRational::from_integer(product.clone().into()),
            product,
            averaged: false,
        }
    }

    /// AM-GM: `Π f ≤ (Σ f / k)^k`.
    fn averaged(factors: &[u64]) -> Self {
        let k = factors.len();
        let sum: u64 = factors.iter().sum();
        let bound = if k == 0 {
            ExactRational::from_integer(1.into())
        } else {
            let mean = ExactRational::new(sum.into(), (k as u64).into());
            num_traits::pow(mean, k)
        };
        Self {
            product: product(factors.iter().copied()),
            bound,
            averaged: true,
        }
    }

    pub fn is_tight(&self) -> bool {
        ExactRational::from_integer(self.product.clone().into()) == self.bound
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundOutcome {
    Tight,
    Strict,
    Violated,
}

/// NK of a bounded variant next to its AM-GM upper bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundResult {
    pub kind: TransformKind,
    pub exact: BigNat,
    pub bound: ExactRational,
    pub vertex_part: PartBound,
    pub edge_part: PartBound,
    /// Equality is expected whenever the source graph is regular.
    pub regular: Option<usize>,
}

impl BoundResult {
    pub fn outcome(&self) -> BoundOutcome {
        let exact = ExactRational::from_integer(self.exact.clone().into());
        match exact.cmp(&self.bound) {
            std::cmp::Ordering::Equal => BoundOutcome::Tight,
            std::cmp::Ordering::Less => BoundOutcome::Strict,
            std::cmp::Ordering::Greater => BoundOutcome::Violated,
        }
    }
}

/// AM-GM upper bound on the NK index of a bounded variant.
///
/// Requires `n ≥ 1` and `m ≥ 1`; the mean edge factor involves `M1/m`.
pub fn nk_bound(kind: TransformKind, g: &Graph) -> Result<BoundResult, FormulaError> {
    if !is_bounded(kind) {
        return Err(FormulaError::NotBounded(kind));
    }
    if g.order() == 0 || g.size() == 0 {
        return Err(FormulaError::NotApplicable(format!(
            "{kind} bound needs n >= 1 and m >= 1"
        )));
    }
    let (vertex, edge) = closed_degrees(kind, g);
    let vertex = non_negative(kind, &vertex)?;
    let edge = non_negative(kind, &edge)?;

    // Parts whose factors are constant (or exactly NK-shaped) are not averaged.
    let (vertex_part, edge_part) = match kind {
        TransformKind::Gab(Minus, Minus) => (PartBound::averaged(&vertex), PartBound::exact(&edge)),
        TransformKind::Gxyz(Minus, Minus, Minus) | TransformKind::Gxyz(Minus, Plus, Minus) => {
            (PartBound::averaged(&vertex), PartBound::averaged(&edge))
        }
        _ => (PartBound::exact(&vertex), PartBound::averaged(&edge)),
    };
    Ok(BoundResult {
        kind,
        exact: &vertex_part.product * &edge_part.product,
        bound: &vertex_part.bound * &edge_part.bound,
        vertex_part,
        edge_part,
        regular: g.is_regular(),
    })
}

/// Closed form of the NK index for an `r`-regular source graph with `n`
/// vertices and `m = nr/2` edges.
pub fn regular_corollary(
    kind: TransformKind,
    n: usize,
    m: usize,
    r: usize,
) -> Result<BigNat, FormulaError> {
    if n == 0 || r >= n || n * r != 2 * m {
        return Err(FormulaError::Inconsistent { n, m, r });
    }
    let (ni, mi, ri) = (n as i64, m as i64, r as i64);
    let p = |base: i64, exp: usize| num_traits::pow(BigInt::from(base), exp);
    let value = match kind {
        TransformKind::Gab(Minus, Minus) => p(ni - 2, m) * p(ni + mi - 1 - 2 * ri, n),
        TransformKind::Gxyz(Minus, Minus, Minus) => p(mi + ni - 2 * ri - 1, m + n),
        TransformKind::Gxyz(Plus, Plus, Minus) => p(mi, n) * p(2 * ri + ni - 4, m),
        TransformKind::Gxyz(Minus, Minus, Plus) => p(ni - 1, n) * p(mi + 3 - 2 * ri, m),
        TransformKind::Gxyz(Plus, Minus, Minus) => p(mi, n) * p(mi + ni - 2 * ri - 1, m),
        TransformKind::Gxyz(Plus, Minus, Plus) => p(2, n) * p(ri, n) * p(mi + 3 - 2 * ri, m),
        TransformKind::Gxyz(Minus, Plus, Minus) => {
            p(mi + ni - 2 * ri - 1, n) * p(ni + 2 * ri - 4, m)
        }
        _ => return Err(FormulaError::NoCorollary(kind)),
    };
    if value.is_negative() {
        return Err(FormulaError::NotApplicable(format!(
            "{kind} corollary is negative for n = {n}, r = {r}"
        )));
    }
    Ok(value.to_biguint().expect("checked non-negative"))
}

/// Families that carry printed worked examples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExampleFamily {
    Cycle,
    Complete,
}

impl std::fmt::Display for ExampleFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ExampleFamily::Cycle => "cycle",
            ExampleFamily::Complete => "complete",
        })
    }
}

/// Evaluates the printed worked-example formula for `C_n` or `K_n` literally.
///
/// Printed formulas are kept as printed, so the result may disagree with
/// [`nk_exact`]; it is rational because some of them divide before
/// exponentiating and signed because some bases go negative for small `n`.
pub fn family_example(
    family: ExampleFamily,
    kind: TransformKind,
    n: usize,
) -> Result<ExactRational, FormulaError> {
    if n < 3 {
        return Err(FormulaError::InvalidParameters(format!(
            "{family} examples need n >= 3, got {n}"
        )));
    }
    let claim = crate::claims::example_claim(family, kind)
        .ok_or(FormulaError::NoExample { family, kind })?;
    let m = match family {
        ExampleFamily::Cycle => n,
        ExampleFamily::Complete => n * (n - 1) / 2,
    };
    let r = match family {
        ExampleFamily::Cycle => 2,
        ExampleFamily::Complete => n - 1,
    };
    // Printed examples only use n, m and r.
    let inv = crate::claims::Invariants {
        n: n as i64,
        m: m as i64,
        m1: (n * r * r) as i64,
        r: Some(r as i64),
        nk: BigInt::zero(),
        pi1star: BigInt::zero(),
    };
    Ok(claim.evaluate(&inv))
}

/// Converts a rational known to be a non-negative integer.
pub fn rational_to_nat(q: &ExactRational) -> Option<BigNat> {
    if !q.is_integer() || q.is_negative() {
        return None;
    }
    q.to_integer().to_biguint()
}

/// `f64` view for display only.
pub fn approx(q: &ExactRational) -> f64 {
    q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};
    use crate::transform::build;

    fn g(f: Family) -> Graph {
        generate(f).unwrap()
    }

    fn nat(v: u64) -> BigNat {
        v.into()
    }

    #[test]
    fn closed_degree_examples() {
        let vertex = |d| DegreeRole::Vertex { d };
        let edge = |du, dv| DegreeRole::Edge { du, dv };
        assert_eq!(
            closed_degree(TransformKind::Gxyz(Minus, Minus, Minus), vertex(2), 5, 5),
            5
        );
        assert_eq!(
            closed_degree(TransformKind::Gxyz(Plus, Plus, Minus), edge(2, 2), 5, 5),
            5
        );
        for (du, dv, n, m) in [(1, 1, 2, 1), (3, 4, 9, 12), (0, 0, 1, 0)] {
            assert_eq!(
                closed_degree(TransformKind::SemitotalPoint, edge(du, dv), n, m),
                2
            );
        }
        assert_eq!(
            closed_degree(TransformKind::Gxyz(Minus, Plus, Minus), edge(2, 2), 3, 3),
            3
        );
    }

    #[test]
    fn closed_degree_complement_duality() {
        for n in 2..7usize {
            for m in 1..=n * (n - 1) / 2 {
                for d in 0..n {
                    for kind in TransformKind::GXYZ {
                        let dual = kind.complementary().unwrap();
                        let a = closed_degree(kind, DegreeRole::Vertex { d }, n, m);
                        let b = closed_degree(dual, DegreeRole::Vertex { d }, n, m);
                        assert_eq!(a + b, (n + m - 1) as i64, "{kind} vertex d={d}");
                        let a = closed_degree(kind, DegreeRole::Edge { du: d, dv: 1 }, n, m);
                        let b = closed_degree(dual, DegreeRole::Edge { du: d, dv: 1 }, n, m);
                        assert_eq!(a + b, (n + m - 1) as i64, "{kind} edge");
                    }
                }
            }
        }
    }

    #[test]
    fn exact_examples() {
        assert_eq!(
            nk_exact(TransformKind::SemitotalPoint, &g(Family::Complete(3))),
            Ok(nat(512))
        );
        assert_eq!(
            nk_exact(TransformKind::Gxyz(Plus, Plus, Plus), &g(Family::Path(3))),
            Ok(nat(144))
        );
        assert_eq!(
            nk_exact(TransformKind::Gab(Minus, Plus), &g(Family::Complete(3))),
            Ok(nat(64))
        );
        assert_eq!(
            nk_exact(TransformKind::Gab(Minus, Minus), &g(Family::Cycle(5))),
            Ok(nat(759_375))
        );
    }

    #[test]
    fn exact_matches_construction_on_a_random_graph() {
        let graph = g(Family::Gnm {
            n: 7,
            m: 11,
            seed: 5,
        });
        for kind in TransformKind::ALL {
            let built = indices::nk(&build(&graph, kind).graph);
            assert_eq!(nk_exact(kind, &graph).unwrap(), built, "{kind}");
        }
    }

    #[test]
    fn negative_closed_degrees_are_not_applicable() {
        // Degree 3 on a 2-vertex "graph" is not realisable; force it through closed_degree.
        assert!(
            closed_degree(
                TransformKind::Gab(Minus, Minus),
                DegreeRole::Vertex { d: 3 },
                2,
                1
            ) < 0
        );
        assert!(matches!(
            non_negative(TransformKind::Gab(Minus, Minus), &[1, -1]),
            Err(FormulaError::NotApplicable(_))
        ));
    }

    #[test]
    fn bound_examples() {
        let k3 = nk_bound(
            TransformKind::Gxyz(Minus, Minus, Minus),
            &g(Family::Complete(3)),
        )
        .unwrap();
        assert_eq!(k3.exact, nat(1));
        assert_eq!(k3.outcome(), BoundOutcome::Tight);

        let c4 = nk_bound(TransformKind::Gxyz(Plus, Plus, Minus), &g(Family::Cycle(4))).unwrap();
        assert_eq!(c4.exact, nat(65536));
        assert_eq!(c4.bound, ExactRational::from_integer(65536.into()));

        let p3 = nk_bound(TransformKind::Gxyz(Minus, Minus, Plus), &g(Family::Path(3))).unwrap();
        assert_eq!(p3.exact, nat(32));
        assert_eq!(p3.bound, ExactRational::from_integer(32.into()));
        assert_eq!(p3.regular, None);
        assert!(p3.edge_part.is_tight());

        let p4 = nk_bound(
            TransformKind::Gxyz(Minus, Minus, Minus),
            &g(Family::Path(4)),
        )
        .unwrap();
        assert_eq!(p4.outcome(), BoundOutcome::Strict);
    }

    #[test]
    fn bound_errors() {
        assert_eq!(
            nk_bound(TransformKind::Total, &g(Family::Cycle(4))),
            Err(FormulaError::NotBounded(TransformKind::Total))
        );
        assert!(matches!(
            nk_bound(TransformKind::Gab(Minus, Minus), &Graph::empty(3)),
            Err(FormulaError::NotApplicable(_))
        ));
    }

    #[test]
    fn corollary_examples() {
        let ppm = TransformKind::Gxyz(Plus, Plus, Minus);
        let mmm = TransformKind::Gxyz(Minus, Minus, Minus);
        let mmp = TransformKind::Gxyz(Minus, Minus, Plus);
        let mpm = TransformKind::Gxyz(Minus, Plus, Minus);
        assert_eq!(regular_corollary(mmm, 5, 5, 2), Ok(nat(9_765_625)));
        assert_eq!(regular_corollary(mmp, 4, 4, 2), Ok(nat(6561)));
        assert_eq!(regular_corollary(mpm, 5, 5, 2), Ok(nat(9_765_625)));
        assert_eq!(regular_corollary(ppm, 4, 4, 2), Ok(nat(65536)));
        assert_eq!(
            regular_corollary(mmm, 5, 6, 2),
            Err(FormulaError::Inconsistent { n: 5, m: 6, r: 2 })
        );
        assert_eq!(
            regular_corollary(TransformKind::Total, 5, 5, 2),
            Err(FormulaError::NoCorollary(TransformKind::Total))
        );
    }

    #[test]
    fn printed_family_examples() {
        let q = |v: u64| ExactRational::from_integer(v.into());
        assert_eq!(
            family_example(ExampleFamily::Cycle, TransformKind::Gab(Plus, Plus), 4),
            Ok(q(4096))
        );
        assert_eq!(
            family_example(
                ExampleFamily::Cycle,
                TransformKind::Gxyz(Plus, Plus, Plus),
                3
            ),
            Ok(q(4096))
        );
        assert_eq!(
            family_example(
                ExampleFamily::Complete,
                TransformKind::Gxyz(Plus, Plus, Plus),
                4
            ),
            Ok(q(1_679_616))
        );
        assert!(matches!(
            family_example(ExampleFamily::Cycle, TransformKind::SemitotalLine, 4),
            Err(FormulaError::NoExample { .. })
        ));
        assert!(family_example(ExampleFamily::Cycle, TransformKind::Total, 2).is_err());
    }

    #[test]
    fn rational_helpers() {
        assert_eq!(
            rational_to_nat(&ExactRational::new(6.into(), 3.into())),
            Some(nat(2))
        );
        assert_eq!(
            rational_to_nat(&ExactRational::new(1.into(), 2.into())),
            None
        );
        assert_eq!(
            rational_to_nat(&ExactRational::from_integer((-2).into())),
            None
        );
        assert_eq!(approx(&ExactRational::new(1.into(), 4.into())), 0.25);
    }
}
