//! Exact linear algebra over the rationals.

mod map;
pub mod scalar;
mod sparse;
mod subspace;

pub use map::LinearMap;
pub use scalar::{format_scalar, int, one, parse_scalar, rat, zero, Scalar};
pub use sparse::SparseVec;
pub use subspace::{intersect, kernel, quotient_dim, rref, solve, Subspace};
