//! Degree-based indices: Zagreb (`M1`, `M2`), Narumi-Katayama (`NK`), and
//! the multiplicative Zagreb family (`Π1`, `Π2`, `Π1*`).
//!
//! Everything here is exact integer arithmetic. Empty products are 1 and a
//! zero degree zeroes the vertex products.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::graph::Graph;
use crate::BigNat;

pub fn nk(g: &Graph) -> BigNat {
    product((0..g.order()).map(|v| g.degree(v) as u64))
}

/// First Zagreb index as the vertex sum `Σ d(v)²`.
pub fn m1(g: &Graph) -> u64 {
    (0..g.order()).map(|v| (g.degree(v) as u64).pow(2)).sum()
}

/// First Zagreb index as the edge sum `Σ_{uv} (d(u) + d(v))`.
pub fn m1_by_edges(g: &Graph) -> u64 {
    g.edges()
        .iter()
        .map(|&(u, v)| (g.degree(u) + g.degree(v)) as u64)
        .sum()
}

pub fn m2(g: &Graph) -> u64 {
    g.edges()
        .iter()
        .map(|&(u, v)| (g.degree(u) * g.degree(v)) as u64)
        .sum()
}

/// First multiplicative Zagreb index `Π_v d(v)²`.
pub fn pi1(g: &Graph) -> BigNat {
    product((0..g.order()).map(|v| (g.degree(v) as u64).pow(2)))
}

/// Second multiplicative Zagreb index `Π_{uv} d(u)·d(v)`.
pub fn pi2(g: &Graph) -> BigNat {
    product(
        g.edges()
            .iter()
            .map(|&(u, v)| (g.degree(u) * g.degree(v)) as u64),
    )
}

/// Multiplicative sum Zagreb index `Π_{uv} (d(u) + d(v))`.
pub fn pi1star(g: &Graph) -> BigNat {
    product(
        g.edges()
            .iter()
            .map(|&(u, v)| (g.degree(u) + g.degree(v)) as u64),
    )
}

pub(crate) fn product<I: IntoIterator<Item = u64>>(factors: I) -> BigNat {
    factors
        .into_iter()
        .fold(BigUint::one(), |acc, f| acc * BigUint::from(f))
}

/// All six indices of one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub n: usize,
    pub m: usize,
    #[serde(rename = "M1")]
    pub m1: u64,
    #[serde(rename = "M2")]
    pub m2: u64,
    #[serde(rename = "NK", serialize_with = "crate::serde_decimal")]
    pub nk: BigNat,
    #[serde(rename = "Pi1", serialize_with = "crate::serde_decimal")]
    pub pi1: BigNat,
    #[serde(rename = "Pi2", serialize_with = "crate::serde_decimal")]
    pub pi2: BigNat,
    #[serde(rename = "Pi1star", serialize_with = "crate::serde_decimal")]
    pub pi1star: BigNat,
}

impl IndexReport {
    pub fn new(g: &Graph) -> Self {
        let m1_vertex = m1(g);
        assert_eq!(
            m1_vertex,
            m1_by_edges(g),
            "vertex and edge forms of M1 disagree"
        );
        Self {
            n: g.order(),
            m: g.size(),
            m1: m1_vertex,
            m2: m2(g),
            nk: nk(g),
            pi1: pi1(g),
            pi2: pi2(g),
            pi1star: pi1star(g),
        }
    }

    pub fn to_text(&self) -> String {
        format!(
            "n {}\nm {}\nM1 {}\nM2 {}\nNK {}\nPi1 {}\nPi2 {}\nPi1star {}\n",
            self.n, self.m, self.m1, self.m2, self.nk, self.pi1, self.pi2, self.pi1star
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn g(f: Family) -> Graph {
        generate(f).unwrap()
    }

    #[test]
    fn narumi_katayama() {
        assert_eq!(nk(&g(Family::Cycle(4))), 16u32.into());
        assert_eq!(nk(&g(Family::Complete(4))), 81u32.into());
        assert_eq!(nk(&g(Family::Path(4))), 4u32.into());
        assert_eq!(nk(&Graph::empty(0)), 1u32.into());
        assert_eq!(nk(&Graph::empty(3)), 0u32.into());
    }

    #[test]
    fn zagreb() {
        let c5 = g(Family::Cycle(5));
        assert_eq!((m1(&c5), m2(&c5)), (20, 20));
        let k3 = g(Family::Complete(3));
        assert_eq!((m1(&k3), m2(&k3)), (12, 12));
        let s4 = g(Family::Star(4));
        assert_eq!((m1(&s4), m2(&s4)), (12, 9));
        assert_eq!(m1_by_edges(&s4), 12);
    }

    #[test]
    fn multiplicative() {
        let c4 = g(Family::Cycle(4));
        assert_eq!(pi1(&c4), 256u32.into());
        assert_eq!(pi2(&c4), 256u32.into());
        assert_eq!(pi1star(&c4), 256u32.into());

        let p3 = g(Family::Path(3));
        assert_eq!(pi1(&p3), 4u32.into());
        assert_eq!(pi2(&p3), 4u32.into());
        assert_eq!(pi1star(&p3), 9u32.into());

        let k2 = g(Family::Complete(2));
        // One edge, both endpoints of degree 1: the single factor is 1 + 1.
        assert_eq!(
            (pi1(&k2), pi2(&k2), pi1star(&k2)),
            (1u32.into(), 1u32.into(), 2u32.into())
        );
    }

    #[test]
    fn report_for_k4() {
        let r = IndexReport::new(&g(Family::Complete(4)));
        assert_eq!(r.nk, 81u32.into());
        assert_eq!(r.m1, 36);
        assert_eq!(r.m2, 54);
        assert_eq!(r.pi1star, 46656u32.into());
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["NK"], "81");
        assert_eq!(json["Pi1star"], "46656");
    }
}
