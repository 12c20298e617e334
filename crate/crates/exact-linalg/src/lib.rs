//! Exact rational scalars and sparse linear maps between tensor products
//! of labeled finite-dimensional spaces.
//!
//! All arithmetic is over arbitrary-precision rationals; equality of maps
//! is bit-exact equality of reduced coefficient tables. Tensor indices are
//! row-major with the leftmost factor most significant.

#![forbid(unsafe_code)]

mod linmap;
mod scalar;
mod solve;
mod space;

pub use linmap::{lin_compose, lin_invert, lin_tensor, lin_transpose, LinError, LinMap, Vect};
pub use scalar::{format_scalar, int, parse_scalar, ratio, Scalar, ScalarParseError};
pub use solve::{invert_dense, LinearSystem, SolveResult};
pub use space::{shape_permutation, Space, TensorShape};
