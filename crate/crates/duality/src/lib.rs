//! Dualizes finite-dimensional braided structures.
//!
//! The dual space of `H` carries five braidings induced from the one on `H`:
//! one on the dual against itself and four mixed ones that move dual vectors
//! past primal ones (each in a direct and an inverse flavour). With those in
//! hand, transposing the comultiplication yields a product on the dual,
//! transposing the multiplication yields a coproduct, and the two assemble
//! into a braided bialgebra paired with the original through the canonical
//! evaluation. Everything here is exact; every construction is re-verified
//! against the pairing identities that define it.

#![forbid(unsafe_code)]

use braided_structures::StructureError;
use exact_linalg::{int, LinError, LinMap, Space, TensorShape};

mod induced;
mod pairing;
mod reflexive;
pub mod solved;
mod structures;

pub use induced::{induce_dual_braidings, InducedBraidings};
pub use pairing::{verify_dual_pairing, verify_dual_pairing_hopf};
pub use reflexive::{
    double_dual_iso, double_dual_iso_graded, dual_of_twist, dual_of_twist_graded,
};
pub use structures::{
    dual_algebra, dual_bialgebra, dual_bialgebra_graded, dual_coalgebra, dual_hopf,
    dual_hopf_graded, CoproductVariant, DualBialgebra, DualHopf, ProductVariant, Truncation,
};

#[derive(Debug, thiserror::Error)]
pub enum DualityError {
    #[error(transparent)]
    Lin(#[from] LinError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    /// An induced braiding could not be inverted.
    #[error("induced braiding is not invertible: {0}")]
    NotClosed(String),
    /// The input lacks data the operation needs (a unit, a grading, ...).
    #[error("{0}")]
    Unsupported(String),
    /// Two derivations of the same map disagree.
    #[error("{0}")]
    Inconsistent(String),
}

/// A dual space together with the evaluation against its primal.
#[derive(Clone, Debug)]
pub struct DualSpace {
    primal: Space,
    space: Space,
    pairing_gram: LinMap,
}

impl DualSpace {
    pub fn of(primal: &Space) -> DualSpace {
        let space = primal.dual();
        let dom = TensorShape::pair(&space, primal);
        let n = primal.dim();
        let pairing_gram = LinMap::from_entries(
            dom,
            TensorShape::unit(),
            (0..n).map(|j| (0, j * n + j, int(1))),
        )
        .expect("gram entries are in range");
        DualSpace {
            primal: primal.clone(),
            space,
            pairing_gram,
        }
    }

    pub fn primal(&self) -> &Space {
        &self.primal
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    /// Evaluation as a map from dual-tensor-primal to the ground field. In
    /// the dual basis this is the identity gram.
    pub fn gram(&self) -> &LinMap {
        &self.pairing_gram
    }
}

/// A pairing between two braided bialgebras: the evaluation and the
/// cross braiding that the pairing axioms are stated with.
#[derive(Clone, Debug)]
pub struct DualPairing {
    left: Space,
    right: Space,
    eval: LinMap,
    upsilon: braided_structures::CrossBraiding,
}

impl DualPairing {
    pub fn new(
        left: Space,
        right: Space,
        eval: LinMap,
        upsilon: braided_structures::CrossBraiding,
    ) -> Result<DualPairing, DualityError> {
        let dom = TensorShape::pair(&left, &right);
        if eval.domain().dim() != dom.dim() || eval.codomain().dim() != 1 {
            return Err(LinError::ShapeMismatch(format!(
                "evaluation must map {}⊗{} to the ground field",
                left.name(),
                right.name()
            ))
            .into());
        }
        if upsilon.left_space().dim() != left.dim() || upsilon.right_space().dim() != right.dim() {
            return Err(LinError::ShapeMismatch(format!(
                "the pairing braiding must live on {}⊗{}",
                left.name(),
                right.name()
            ))
            .into());
        }
        Ok(DualPairing {
            left,
            right,
            eval,
            upsilon,
        })
    }

    /// The identity-gram pairing of a dual space against its primal.
    pub fn canonical(
        dual: &DualSpace,
        upsilon: braided_structures::CrossBraiding,
    ) -> Result<DualPairing, DualityError> {
        DualPairing::new(
            dual.space().clone(),
            dual.primal().clone(),
            dual.gram().clone(),
            upsilon,
        )
    }

    pub fn left(&self) -> &Space {
        &self.left
    }

    pub fn right(&self) -> &Space {
        &self.right
    }

    pub fn eval(&self) -> &LinMap {
        &self.eval
    }

    pub fn upsilon(&self) -> &braided_structures::CrossBraiding {
        &self.upsilon
    }
}
