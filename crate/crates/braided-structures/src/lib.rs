//! Braided vector spaces, algebras, coalgebras, bialgebras and Hopf
//! algebras over exact rationals, with per-equation axiom checkers.
//!
//! Every structure constructor runs its own checker and refuses to build a
//! value whose axioms fail; `from_parts_unchecked` escape hatches exist for
//! diagnostics and deliberately broken fixtures. Checkers run on
//! [`PartialMap`]s so degree-truncated structures report identities that
//! leave the computed range as skipped rather than passed.

#![forbid(unsafe_code)]

mod algebra;
mod bialgebra;
mod braiding;
mod coalgebra;
#[cfg(test)]
pub(crate) mod fixtures;
mod partial;
mod report;
mod tensor_bialgebra;

pub use algebra::{check_mult_compat, BraidedAlgebra};
pub use bialgebra::{
    check_antipode_identities, check_bialgebra, convolution, convolution_unit, solve_antipode,
    BraidedBialgebra, BraidedHopf,
};
pub use braiding::{
    check_hexagons, check_yang_baxter, Braiding, CrossBraiding, HexSide, Provenance,
};
pub use coalgebra::{check_comult_compat, BraidedCoalgebra};
pub use partial::{chain, compare, tensor_all, PartialMap};
pub use report::{eq, CheckEntry, CheckReport, Verdict, Witness};
pub use tensor_bialgebra::braided_tensor_bialgebra;

use exact_linalg::LinError;

/// Which factor of a cross-braiding carries the structure under test, and
/// which side an action or coaction sits on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// Errors raised by structure constructors and transforms.
#[derive(Debug, thiserror::Error)]
pub enum StructureError {
    #[error(transparent)]
    Lin(#[from] LinError),
    /// A constructor's own axiom suite failed.
    #[error("structure checks failed:\n{0}")]
    CheckFailed(CheckReport),
    /// A compatibility precondition of a compound construction failed.
    #[error("precheck failed on {equation}:\n{report}")]
    PrecheckFailed {
        equation: &'static str,
        report: CheckReport,
    },
    /// The convolution inverse of the identity does not exist.
    #[error("no antipode: {0}")]
    NoAntipode(String),
    /// A construction needs the inverse antipode and none is available.
    #[error("antipode not invertible: {0}")]
    AntipodeNotInvertible(String),
}
