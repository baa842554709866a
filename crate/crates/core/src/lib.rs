//! Exact classification of the complex-root multiplicity structure of a
//! univariate polynomial.
//!
//! For `F = a_n x^n + ... + a_0` and every partition `gamma` of `n`, the
//! gamma-discriminant `D(gamma)` is the determinant of the stacked,
//! right-aligned coefficient rows
//!
//! ```text
//! F^(0) x^(g0-1) .. F^(0) x^0 | F^(1) x^(g1-1) .. F^(1) x^0 | ... | F^(s) x^(gs-1) .. F^(s) x^0
//! ```
//!
//! (with `g0 = g1 - 1`) divided by `a_n`. Scanning the partitions in
//! decreasing lexicographic order, the first `gamma` with `D(gamma) != 0`
//! is the conjugate of the multiplicity vector of `F`.
//!
//! Modules:
//! - [`arith`]: exact rationals, dense univariate and sparse symbolic polynomials.
//! - [`partitions`]: enumeration, conjugation and ordering of partitions.
//! - [`engine`]: discriminant matrices and fraction-free determinants.
//! - [`classifier`]: the discriminant chain.
//! - [`roots`]: root-side ground truth used to cross-check the engine.
//! - [`degrees`]: maximal-degree formulas for three competing condition systems.
//! - [`selftest`]: randomized property sweeps shared by the CLI and tests.

pub mod arith;
pub mod classifier;
pub mod degrees;
pub mod engine;
pub mod error;
pub mod partitions;
pub mod roots;
pub mod selftest;

pub use arith::{Rational, SymPoly, UniPoly};
pub use classifier::{classify, classify_trace, conditions, ClassificationTrace};
pub use engine::{disc_symbolic, disc_value, DiscMatrix, DiscValue, SymbolicConfig};
pub use error::{Error, Result};
pub use partitions::Partition;
pub use roots::RootSpec;
