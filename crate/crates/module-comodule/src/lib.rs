//! Actions and coactions of braided algebras and coalgebras on separate
//! carrier spaces, with per-equation checkers.
//!
//! A [`BraidedModule`] is a carrier space together with an action of a
//! braided algebra and the cross-braiding that moves algebra elements past
//! carrier elements; a [`BraidedComodule`] is the coalgebra counterpart.
//! [`ModuleAlgebra`] and [`ComoduleAlgebra`] add a product on the carrier
//! and the extra compatibility laws that come with it.
//!
//! Beyond checking, the crate transforms these structures:
//!
//! * [`BraidedModule::flip_side`] / [`BraidedComodule::flip_side`] switch a
//!   left structure to a right one (and back) over the inverse braiding,
//!   and `antipode_flip` does the same via an invertible antipode.
//! * [`comodule_to_module`] turns a comodule of a coalgebra into a module
//!   of its dual algebra, [`module_to_comodule`] goes the other way, and
//!   [`natural_action`] is the special case of a bialgebra acting on
//!   itself through its dual.
//! * [`round_trip_comodule`] / [`round_trip_module`] compose the two
//!   conversions and compare the result against closed formulas.
//! * [`dualize_coaction`] / [`dualize_action`] move a (co)action to the
//!   dual carrier space.

#![forbid(unsafe_code)]

use braided_structures::{CheckReport, StructureError};
use exact_linalg::LinError;

mod checks;
mod convert;
mod dualize;
mod flips;
mod mixed;
mod roundtrip;
mod types;

pub use checks::{check_comodule, check_comodule_algebra, check_module, check_module_algebra};
pub use convert::{
    comodule_to_module, module_to_comodule, module_to_comodule_graded, natural_action,
    solve_right_coaction,
};
pub use dualize::{dualize_action, dualize_action_graded, dualize_coaction};
pub use roundtrip::{
    round_trip_comodule, round_trip_module, round_trip_module_graded, ComoduleRoundTrip,
    ModuleRoundTrip,
};
pub use types::{
    coproduct_comodule, regular_module, trivial_comodule, trivial_module, BraidedComodule,
    BraidedModule, ComoduleAlgebra, ModuleAlgebra,
};

#[derive(Debug, thiserror::Error)]
pub enum ModComError {
    #[error(transparent)]
    Lin(#[from] LinError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    /// The arguments do not describe the same underlying structure.
    #[error("{0}")]
    Mismatch(String),
    /// The declared shapes of the parts do not fit together.
    #[error("{0}")]
    ShapeMismatch(String),
    /// The assembled structure fails its axiom checks.
    #[error("structure checks failed:\n{0}")]
    CheckFailed(CheckReport),
    /// A braiding induced on a dual space is not invertible.
    #[error("{0}")]
    NotClosed(String),
    #[error("{0}")]
    Unsupported(String),
    /// Two constructions that must agree produced different maps.
    #[error("{0}")]
    Inconsistent(String),
}
