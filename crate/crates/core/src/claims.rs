//! Catalog of printed closed forms, each checked against construction.
//!
//! Every entry is written exactly as printed, including the ones that turn
//! out to be wrong. Claim ids are `<kind>/<variant>`:
//!
//! | prefix             | meaning                                                  |
//! |--------------------|----------------------------------------------------------|
//! | `exact/`           | equality valid for every graph                           |
//! | `exact-printed/`   | a printed equality that conflicts with the degree rules  |
//! | `bound/`           | AM-GM upper bound, tight on regular graphs               |
//! | `bound-printed/`   | printed bound whose exponent disagrees with the degrees  |
//! | `regular/`         | specialisation to `r`-regular graphs                     |
//! | `regular-printed/` | printed specialisation with the same exponent slip       |
//! | `cycle/`           | worked example for `C_n`                                 |
//! | `complete/`        | worked example for `K_n`                                 |

use num_bigint::BigInt;
use serde::Serialize;

use crate::formulas::ExampleFamily;
use crate::graph::Graph;
use crate::indices;
use crate::transform::Sign::{Minus, Plus};
use crate::transform::TransformKind;
use crate::{BigNat, ExactRational};

/// Source-graph quantities a printed formula may refer to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invariants {
    pub n: i64,
    pub m: i64,
    pub m1: i64,
    pub r: Option<i64>,
    pub nk: BigInt,
    pub pi1star: BigInt,
}

impl Invariants {
    pub fn of(g: &Graph) -> Self {
        Self {
            n: g.order() as i64,
            m: g.size() as i64,
            m1: indices::m1(g) as i64,
            r: g.is_regular().map(|r| r as i64),
            nk: indices::nk(g).into(),
            pi1star: indices::pi1star(g).into(),
        }
    }
}

/// Which source graphs a claim speaks about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimScope {
    AnyGraph,
    /// `m ≥ 1`, needed wherever `M1/m` appears.
    HasEdges,
    Regular,
    Cycle,
    Complete,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimForm {
    Equals,
    /// `NK ≤ value`, with equality on regular graphs.
    UpperBound,
}

pub struct Claim {
    pub id: &'static str,
    pub kind: TransformKind,
    pub scope: ClaimScope,
    pub form: ClaimForm,
    pub printed: &'static str,
    eval: fn(&Invariants) -> ExactRational,
}

impl std::fmt::Debug for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Claim")
            .field("id", &self.id)
            .field("printed", &self.printed)
            .finish()
    }
}

/// Result of checking one claim on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimOutcome {
    pub printed: ExactRational,
    pub confirmed: bool,
}

impl Claim {
    /// `families` lists the example families `g` was generated as.
    pub fn applies_to(&self, g: &Graph, families: &[ExampleFamily]) -> bool {
        match self.scope {
            ClaimScope::AnyGraph => true,
            ClaimScope::HasEdges => g.order() >= 1 && g.size() >= 1,
            ClaimScope::Regular => g.is_regular().is_some(),
            ClaimScope::Cycle => families.contains(&ExampleFamily::Cycle),
            ClaimScope::Complete => families.contains(&ExampleFamily::Complete) && g.order() >= 3,
        }
    }

    pub fn evaluate(&self, inv: &Invariants) -> ExactRational {
        (self.eval)(inv)
    }

    /// Compares the printed value with `oracle`, the NK index of the constructed graph.
    pub fn check(&self, inv: &Invariants, oracle: &BigNat) -> ClaimOutcome {
        let printed = self.evaluate(inv);
        let actual = ExactRational::from_integer(oracle.clone().into());
        let confirmed = match self.form {
            ClaimForm::Equals => printed == actual,
            ClaimForm::UpperBound => actual <= printed && (inv.r.is_none() || actual == printed),
        };
        ClaimOutcome { printed, confirmed }
    }
}

fn q(x: i64) -> ExactRational {
    ExactRational::from_integer(x.into())
}

fn big(x: &BigInt) -> ExactRational {
    ExactRational::from_integer(x.clone())
}

fn frac(num: i64, den: i64) -> ExactRational {
    ExactRational::new(num.into(), den.into())
}

fn pw(base: ExactRational, exp: i64) -> ExactRational {
    num_traits::pow(base, usize::try_from(exp).expect("exponents are counts"))
}

fn r(i: &Invariants) -> i64 {
    i.r.expect("regular scope")
}

/// `(n + m − 1) − 4m/n`
fn mean_vertex_complement(i: &Invariants) -> ExactRational {
    q(i.n + i.m - 1) - frac(4 * i.m, i.n)
}

/// `M1/m`
fn mean_edge_sum(i: &Invariants) -> ExactRational {
    frac(i.m1, i.m)
}

const G_PP: TransformKind = TransformKind::Gab(Plus, Plus);
const G_PM: TransformKind = TransformKind::Gab(Plus, Minus);
const G_MP: TransformKind = TransformKind::Gab(Minus, Plus);
const G_MM: TransformKind = TransformKind::Gab(Minus, Minus);
const G_PPP: TransformKind = TransformKind::Gxyz(Plus, Plus, Plus);
const G_PPM: TransformKind = TransformKind::Gxyz(Plus, Plus, Minus);
const G_PMP: TransformKind = TransformKind::Gxyz(Plus, Minus, Plus);
const G_PMM: TransformKind = TransformKind::Gxyz(Plus, Minus, Minus);
const G_MPP: TransformKind = TransformKind::Gxyz(Minus, Plus, Plus);
const G_MPM: TransformKind = TransformKind::Gxyz(Minus, Plus, Minus);
const G_MMP: TransformKind = TransformKind::Gxyz(Minus, Minus, Plus);
const G_MMM: TransformKind = TransformKind::Gxyz(Minus, Minus, Minus);

macro_rules! claim {
    ($id:literal, $kind:expr, $scope:ident, $form:ident, $printed:literal, $eval:expr) => {
        Claim {
            id: $id,
            kind: $kind,
            scope: ClaimScope::$scope,
            form: ClaimForm::$form,
            printed: $printed,
            eval: $eval,
        }
    };
}

pub static CLAIMS: &[Claim] = &[
    // Exact forms.
    claim!(
        "exact/t1",
        TransformKind::SemitotalPoint,
        AnyGraph,
        Equals,
        "2^(n+m) NK(G)",
        |i| pw(q(2), i.n + i.m) * big(&i.nk)
    ),
    claim!(
        "exact/g++",
        G_PP,
        AnyGraph,
        Equals,
        "2^(n+m) NK(G)",
        |i| pw(q(2), i.n + i.m) * big(&i.nk)
    ),
    claim!(
        "exact-printed/g++",
        G_PP,
        AnyGraph,
        Equals,
        "NK(G) Pi1*(G)",
        |i| big(&i.nk) * big(&i.pi1star)
    ),
    claim!(
        "exact/t2",
        TransformKind::SemitotalLine,
        AnyGraph,
        Equals,
        "NK(G) Pi1*(G)",
        |i| big(&i.nk) * big(&i.pi1star)
    ),
    claim!("exact/g+-", G_PM, AnyGraph, Equals, "m^n (n-2)^m", |i| pw(
        q(i.m),
        i.n
    )
        * pw(q(i.n - 2), i.m)),
    claim!("exact/g-+", G_MP, AnyGraph, Equals, "2^m (n-1)^n", |i| pw(
        q(2),
        i.m
    )
        * pw(q(i.n - 1), i.n)),
    claim!(
        "exact/g+++",
        G_PPP,
        AnyGraph,
        Equals,
        "2^n NK(G) Pi1*(G)",
        |i| pw(q(2), i.n) * big(&i.nk) * big(&i.pi1star)
    ),
    claim!(
        "exact/total",
        TransformKind::Total,
        AnyGraph,
        Equals,
        "2^n NK(G) Pi1*(G)",
        |i| pw(q(2), i.n) * big(&i.nk) * big(&i.pi1star)
    ),
    claim!(
        "exact-printed/total",
        TransformKind::Total,
        AnyGraph,
        Equals,
        "2^(n+m) NK(G)  [vertex degree 2d(v), edge degree 2]",
        |i| pw(q(2), i.n + i.m) * big(&i.nk)
    ),
    claim!(
        "exact/g-++",
        G_MPP,
        AnyGraph,
        Equals,
        "(n-1)^n Pi1*(G)",
        |i| pw(q(i.n - 1), i.n) * big(&i.pi1star)
    ),
    // AM-GM bounds.
    claim!(
        "bound/g--",
        G_MM,
        HasEdges,
        UpperBound,
        "(n-2)^m [(n+m-1) - 4m/n]^n",
        |i| pw(q(i.n - 2), i.m) * pw(mean_vertex_complement(i), i.n)
    ),
    claim!(
        "bound-printed/g--",
        G_MM,
        HasEdges,
        UpperBound,
        "(n-2)^n [(n+m-1) - 4m/n]^n",
        |i| pw(q(i.n - 2), i.n) * pw(mean_vertex_complement(i), i.n)
    ),
    claim!(
        "bound/g---",
        G_MMM,
        HasEdges,
        UpperBound,
        "[(m+n-1) - 4m/n]^n [(m+n-1) - M1/m]^m",
        |i| pw(mean_vertex_complement(i), i.n) * pw(q(i.m + i.n - 1) - mean_edge_sum(i), i.m)
    ),
    claim!(
        "bound/g++-",
        G_PPM,
        HasEdges,
        UpperBound,
        "m^n [M1/m + (n-4)]^m",
        |i| pw(q(i.m), i.n) * pw(mean_edge_sum(i) + q(i.n - 4), i.m)
    ),
    claim!(
        "bound/g--+",
        G_MMP,
        HasEdges,
        UpperBound,
        "(n-1)^n [m + 3 - M1/m]^m",
        |i| pw(q(i.n - 1), i.n) * pw(q(i.m + 3) - mean_edge_sum(i), i.m)
    ),
    claim!(
        "bound/g+--",
        G_PMM,
        HasEdges,
        UpperBound,
        "m^n [(m+n-1) - M1/m]^m",
        |i| pw(q(i.m), i.n) * pw(q(i.m + i.n - 1) - mean_edge_sum(i), i.m)
    ),
    claim!(
        "bound/g+-+",
        G_PMP,
        HasEdges,
        UpperBound,
        "2^n NK(G) [(m+3) - M1/m]^m",
        |i| pw(q(2), i.n) * big(&i.nk) * pw(q(i.m + 3) - mean_edge_sum(i), i.m)
    ),
    claim!(
        "bound/g-+-",
        G_MPM,
        HasEdges,
        UpperBound,
        "[m+n-1 - 4m/n]^n [(n-4) + M1/m]^m",
        |i| pw(mean_vertex_complement(i), i.n) * pw(q(i.n - 4) + mean_edge_sum(i), i.m)
    ),
    // Regular specialisations.
    claim!(
        "regular/g--",
        G_MM,
        Regular,
        Equals,
        "(n-2)^m (n+m-1-2r)^n",
        |i| pw(q(i.n - 2), i.m) * pw(q(i.n + i.m - 1 - 2 * r(i)), i.n)
    ),
    claim!(
        "regular-printed/g--",
        G_MM,
        Regular,
        Equals,
        "(n-2)^n [(n+m-1) - 4m/n]^n",
        |i| pw(q(i.n - 2), i.n) * pw(mean_vertex_complement(i), i.n)
    ),
    claim!(
        "regular/g---",
        G_MMM,
        Regular,
        Equals,
        "(m+n-2r-1)^(m+n)",
        |i| pw(q(i.m + i.n - 2 * r(i) - 1), i.m + i.n)
    ),
    claim!(
        "regular/g++-",
        G_PPM,
        Regular,
        Equals,
        "m^n (2r+n-4)^m",
        |i| pw(q(i.m), i.n) * pw(q(2 * r(i) + i.n - 4), i.m)
    ),
    claim!(
        "regular/g--+",
        G_MMP,
        Regular,
        Equals,
        "(n-1)^n (m+3-2r)^m",
        |i| pw(q(i.n - 1), i.n) * pw(q(i.m + 3 - 2 * r(i)), i.m)
    ),
    claim!(
        "regular/g+--",
        G_PMM,
        Regular,
        Equals,
        "m^n (m+n-2r-1)^m",
        |i| pw(q(i.m), i.n) * pw(q(i.m + i.n - 2 * r(i) - 1), i.m)
    ),
    claim!(
        "regular/g+-+",
        G_PMP,
        Regular,
        Equals,
        "2^n r^n (m+3-2r)^m",
        |i| pw(q(2), i.n) * pw(q(r(i)), i.n) * pw(q(i.m + 3 - 2 * r(i)), i.m)
    ),
    claim!(
        "regular/g-+-",
        G_MPM,
        Regular,
        Equals,
        "(m+n-2r-1)^n (n+2r-4)^m",
        |i| pw(q(i.m + i.n - 2 * r(i) - 1), i.n) * pw(q(i.n + 2 * r(i) - 4), i.m)
    ),
    // Cycles.
    claim!("cycle/g++", G_PP, Cycle, Equals, "2^(3n)", |i| pw(
        q(2),
        3 * i.n
    )),
    claim!("cycle/g+-", G_PM, Cycle, Equals, "n^n (n-2)^n", |i| pw(
        q(i.n),
        i.n
    ) * pw(
        q(i.n - 2),
        i.n
    )),
    claim!("cycle/g-+", G_MP, Cycle, Equals, "2^n (n-1)^n", |i| pw(
        q(2),
        i.n
    ) * pw(
        q(i.n - 1),
        i.n
    )),
    claim!(
        "cycle/g--",
        G_MM,
        Cycle,
        Equals,
        "(n-2)^n (2n-5)^n",
        |i| pw(q(i.n - 2), i.n) * pw(q(2 * i.n - 5), i.n)
    ),
    claim!("cycle/g+++", G_PPP, Cycle, Equals, "4^(2n)", |i| pw(
        q(4),
        2 * i.n
    )),
    claim!("cycle/g---", G_MMM, Cycle, Equals, "(2n-5)^(2n)", |i| pw(
        q(2 * i.n - 5),
        2 * i.n
    )),
    claim!("cycle/g++-", G_PPM, Cycle, Equals, "n^(2n)", |i| pw(
        q(i.n),
        2 * i.n
    )),
    claim!("cycle/g--+", G_MMP, Cycle, Equals, "(n-1)^(2n)", |i| pw(
        q(i.n - 1),
        2 * i.n
    )),
    claim!("cycle/g+--", G_PMM, Cycle, Equals, "n^n (2n-5)^n", |i| pw(
        q(i.n),
        i.n
    )
        * pw(q(2 * i.n - 5), i.n)),
    claim!("cycle/g-+-", G_MPM, Cycle, Equals, "n^n (2n-5)^n", |i| pw(
        q(i.n),
        i.n
    )
        * pw(q(2 * i.n - 5), i.n)),
    claim!("cycle/g+-+", G_PMP, Cycle, Equals, "4^n (n-1)^n", |i| pw(
        q(4),
        i.n
    )
        * pw(q(i.n - 1), i.n)),
    claim!("cycle/g-++", G_MPP, Cycle, Equals, "4^n (n-1)^n", |i| pw(
        q(4),
        i.n
    )
        * pw(q(i.n - 1), i.n)),
    // Complete graphs.
    claim!(
        "complete/g++",
        G_PP,
        Complete,
        Equals,
        "2^(n(n+1)/2) (n-1)^n",
        |i| pw(q(2), i.n * (i.n + 1) / 2) * pw(q(i.n - 1), i.n)
    ),
    claim!(
        "complete/g+-",
        G_PM,
        Complete,
        Equals,
        "[n(n-1)/2]^n (n-2)^(n(n-1)/2)",
        |i| pw(frac(i.n * (i.n - 1), 2), i.n) * pw(q(i.n - 2), i.n * (i.n - 1) / 2)
    ),
    claim!(
        "complete/g-+",
        G_MP,
        Complete,
        Equals,
        "2^(n(n-1)/2) (n-1)^n",
        |i| pw(q(2), i.n * (i.n - 1) / 2) * pw(q(i.n - 1), i.n)
    ),
    claim!(
        "complete/g--",
        G_MM,
        Complete,
        Equals,
        "(n-2)^(n(n+1)/2) [(n-1)/2]^n",
        |i| pw(q(i.n - 2), i.n * (i.n + 1) / 2) * pw(frac(i.n - 1, 2), i.n)
    ),
    claim!(
        "complete/g+++",
        G_PPP,
        Complete,
        Equals,
        "4^n (n-1)^(2n)",
        |i| pw(q(4), i.n) * pw(q(i.n - 1), 2 * i.n)
    ),
    claim!(
        "complete/g---",
        G_MMM,
        Complete,
        Equals,
        "[(n-1)(n-2)/2]^(n(n+1)/2)",
        |i| pw(frac((i.n - 1) * (i.n - 2), 2), i.n * (i.n + 1) / 2)
    ),
    claim!(
        "complete/g++-",
        G_PPM,
        Complete,
        Equals,
        "[n(n-1)/2]^n (3n-8)^m",
        |i| pw(frac(i.n * (i.n - 1), 2), i.n) * pw(q(3 * i.n - 8), i.m)
    ),
    claim!(
        "complete/g--+",
        G_MMP,
        Complete,
        Equals,
        "(n-1)^n [n(n-1)/2 - 2n + 1]^m",
        |i| pw(q(i.n - 1), i.n) * pw(frac(i.n * (i.n - 1), 2) - q(2 * i.n - 1), i.m)
    ),
    claim!(
        "complete/g-++",
        G_MPP,
        Complete,
        Equals,
        "2^(n(n-1)/2) (n-1)^(n(n+1)/2)",
        |i| pw(q(2), i.n * (i.n - 1) / 2) * pw(q(i.n - 1), i.n * (i.n + 1) / 2)
    ),
    claim!(
        "complete/g+--",
        G_PMM,
        Complete,
        Equals,
        "[n(n-1)/2]^n [(n-1)(n-2)/2]^(n(n-1)/2)",
        |i| pw(frac(i.n * (i.n - 1), 2), i.n)
            * pw(frac((i.n - 1) * (i.n - 2), 2), i.n * (i.n - 1) / 2)
    ),
    claim!(
        "complete/g+-+",
        G_PMP,
        Complete,
        Equals,
        "2^n (n-1)^n [n(n-1)/2 - 2n + 5]^(n(n-1)/2)",
        |i| pw(q(2), i.n)
            * pw(q(i.n - 1), i.n)
            * pw(
                frac(i.n * (i.n - 1), 2) - q(2 * i.n - 5),
                i.n * (i.n - 1) / 2
            )
    ),
    claim!(
        "complete/g-+-",
        G_MPM,
        Complete,
        Equals,
        "[(n-1)(n+6)/2]^n {3(n-2)}^(n(n-1)/2)",
        |i| pw(frac((i.n - 1) * (i.n + 6), 2), i.n) * pw(q(3 * (i.n - 2)), i.n * (i.n - 1) / 2)
    ),
];

pub fn find(id: &str) -> Option<&'static Claim> {
    CLAIMS.iter().find(|c| c.id == id)
}

pub(crate) fn example_claim(family: ExampleFamily, kind: TransformKind) -> Option<&'static Claim> {
    let scope = match family {
        ExampleFamily::Cycle => ClaimScope::Cycle,
        ExampleFamily::Complete => ClaimScope::Complete,
    };
    CLAIMS.iter().find(|c| c.scope == scope && c.kind == kind)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<_> = CLAIMS.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), CLAIMS.len());
    }

    #[test]
    fn cycle_example_values() {
        let c5 = generate(Family::Cycle(5)).unwrap();
        let inv = Invariants::of(&c5);
        assert_eq!(find("cycle/g++").unwrap().evaluate(&inv), q(32768));
        assert_eq!(find("cycle/g--").unwrap().evaluate(&inv), q(759_375));
    }

    #[test]
    fn regrouped_example_is_integral() {
        let k4 = generate(Family::Complete(4)).unwrap();
        let v = find("complete/g--").unwrap().evaluate(&Invariants::of(&k4));
        // 2^10 (3/2)^4
        assert_eq!(v, q(5184));
    }

    #[test]
    fn upper_bound_check_requires_equality_on_regular_graphs() {
        let k4 = generate(Family::Complete(4)).unwrap();
        let inv = Invariants::of(&k4);
        let claim = find("bound-printed/g--").unwrap();
        // oracle: (n-2)^m (m-n+1)^n = 2^6 3^4
        let outcome = claim.check(&inv, &BigNat::from(5184u32));
        assert_eq!(outcome.printed, q(1296));
        assert!(!outcome.confirmed);
        assert!(
            find("bound/g--")
                .unwrap()
                .check(&inv, &BigNat::from(5184u32))
                .confirmed
        );
    }
}
