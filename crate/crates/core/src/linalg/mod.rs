//! Exact linear algebra: prime-field and rational ranks, sparse polynomials,
//! fraction-free elimination and the persistence column reduction.

pub mod matrix;
pub mod poly;
pub mod reduce;
pub mod scalar;

pub use matrix::{bareiss_rank, rank_kernel, ExactMatrix, RankKernel};
pub use poly::{Exponent, Polynomial};
pub use reduce::{persistence_reduce, BoundaryColumn, Pairing};
pub use scalar::{Field, FieldKind, Fp, IntegralDomain};
