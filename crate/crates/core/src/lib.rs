//! Transformation graphs on `V(G) ∪ E(G)` and the Narumi-Katayama index.
//!
//! The crate has two independent routes to the NK index of every
//! transformation graph:
//!
//! * [`transform::build`] materialises the transformed graph by testing
//!   every pair of its vertices, and [`indices::nk`] multiplies its degrees;
//! * [`formulas::nk_exact`] multiplies closed-form degrees computed from the
//!   source graph alone.
//!
//! [`verify::run_suite`] runs both over corpora of small graphs and checks
//! the printed closed forms of [`claims`] against the constructed values.
//!
//! ```
//! use transgraph::{formulas, generate, indices, transform, Family, TransformKind};
//!
//! let p3 = generate(Family::Path(3)).unwrap();
//! let kind: TransformKind = "g+++".parse().unwrap();
//! let built = transform::build(&p3, kind);
//! assert_eq!(indices::nk(&built.graph), 144u32.into());
//! assert_eq!(formulas::nk_exact(kind, &p3).unwrap(), 144u32.into());
//! ```

pub mod claims;
pub mod cli;
pub mod formulas;
pub mod graph;
pub mod indices;
pub mod transform;
pub mod verify;

pub use graph::{enumerate_small_graphs, generate, parse_edge_list, Family, Graph, GraphError};
pub use transform::{build, Role, Sign, TransformKind, TransformedGraph};

/// Exact non-negative integer.
pub type BigNat = num_bigint::BigUint;
/// Exact rational, always in lowest terms with a positive denominator.
pub type ExactRational = num_rational::BigRational;

pub(crate) fn serde_decimal<T: std::fmt::Display, S: serde::Serializer>(
    value: &T,
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}

pub(crate) fn serde_decimal_opt<T: std::fmt::Display, S: serde::Serializer>(
    value: &Option<T>,
    s: S,
) -> Result<S::Ok, S::Error> {
    match value {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}
