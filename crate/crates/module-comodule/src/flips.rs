//! Moving an action or coaction to the other side with the inverse
//! braiding. A left action becomes a right action over the same space with
//! the inverse-braided multiplication, and dually for coactions; composing
//! with the inverse antipode instead leaves the product untouched but
//! twists the coproduct side. Either way the cross-braiding is replaced by
//! its inverse.

use braided_structures::{
    BraidedAlgebra, BraidedBialgebra, BraidedCoalgebra, BraidedHopf, PartialMap, Side,
    StructureError,
};
use exact_linalg::{LinMap, TensorShape};
use twist_family::twist;

use crate::{BraidedComodule, BraidedModule, ComoduleAlgebra, ModComError, ModuleAlgebra};

fn total(lin: &LinMap) -> PartialMap {
    PartialMap::total(lin.clone())
}

fn opposite(side: Side) -> Side {
    match side {
        Side::Left => Side::Right,
        Side::Right => Side::Left,
    }
}

impl BraidedModule {
    /// Rewrites the action on the other side as ν∘Ψ⁻¹. The acting algebra
    /// keeps its space but multiplies through the inverse braiding.
    pub fn flip_side(&self) -> Result<BraidedModule, ModComError> {
        let alg = self.algebra();
        let mult_flipped = PartialMap::compose(alg.mult(), &total(alg.braiding().psi_inv()))?;
        let acting = BraidedAlgebra::new_partial(
            alg.braiding().inverse(),
            mult_flipped,
            alg.unit().cloned(),
        )?;
        let action = PartialMap::compose(self.action(), &total(self.cross().psi_inv()))?;
        BraidedModule::new_partial(
            acting,
            self.carrier().clone(),
            action,
            opposite(self.side()),
            self.cross().inverse(),
        )
    }

    /// Rewrites the action on the other side as ν∘Ψ⁻¹∘S⁻¹ on the acting
    /// leg. The acting algebra keeps its multiplication but is braided by
    /// the inverse braiding.
    pub fn antipode_flip(&self, hopf: &BraidedHopf) -> Result<BraidedModule, ModComError> {
        let alg = self.algebra();
        let halg = hopf.bialgebra().algebra();
        if halg.braiding() != alg.braiding()
            || halg.mult() != alg.mult()
            || halg.unit_map() != alg.unit_map()
        {
            return Err(ModComError::Mismatch(
                "the module is not an action of this Hopf algebra".into(),
            ));
        }
        let s_inv = hopf
            .antipode_inv()
            .ok_or(ModComError::Structure(StructureError::AntipodeNotInvertible))?;
        let acting =
            BraidedAlgebra::new_partial(alg.braiding().inverse(), alg.mult().clone(), alg.unit().cloned())?;
        let id_v = PartialMap::identity(&TensorShape::of(self.carrier()));
        let feed = match self.side() {
            Side::Left => PartialMap::tensor(&id_v, &total(s_inv)),
            Side::Right => PartialMap::tensor(&total(s_inv), &id_v),
        };
        let action = braided_structures::chain(&[
            self.action(),
            &total(self.cross().psi_inv()),
            &feed,
        ])?;
        BraidedModule::new_partial(
            acting,
            self.carrier().clone(),
            action,
            opposite(self.side()),
            self.cross().inverse(),
        )
    }
}

impl BraidedComodule {
    /// Rewrites the coaction on the other side as Ψ⁻¹∘ρ. The coalgebra
    /// keeps its space but comultiplies through the inverse braiding.
    pub fn flip_side(&self) -> Result<BraidedComodule, ModComError> {
        let coalg = self.coalgebra();
        let comult_flipped =
            PartialMap::compose(&total(coalg.braiding().psi_inv()), coalg.comult())?;
        let new_coalg = BraidedCoalgebra::new_partial(
            coalg.braiding().inverse(),
            comult_flipped,
            coalg.counit().clone(),
        )?;
        let coaction = PartialMap::compose(&total(self.cross().psi_inv()), self.coaction())?;
        BraidedComodule::new_partial(
            new_coalg,
            self.carrier().clone(),
            coaction,
            opposite(self.side()),
            self.cross().inverse(),
        )
    }

    /// Rewrites the coaction on the other side as S⁻¹∘Ψ⁻¹∘ρ on the
    /// coalgebra leg. The coalgebra keeps its coproduct but is braided by
    /// the inverse braiding.
    pub fn antipode_flip(&self, hopf: &BraidedHopf) -> Result<BraidedComodule, ModComError> {
        let coalg = self.coalgebra();
        let hco = hopf.bialgebra().coalgebra();
        if hco.braiding() != coalg.braiding()
            || hco.comult() != coalg.comult()
            || hco.counit() != coalg.counit()
        {
            return Err(ModComError::Mismatch(
                "the comodule is not a coaction of this Hopf algebra".into(),
            ));
        }
        let s_inv = hopf
            .antipode_inv()
            .ok_or(ModComError::Structure(StructureError::AntipodeNotInvertible))?;
        let new_coalg = BraidedCoalgebra::new_partial(
            coalg.braiding().inverse(),
            coalg.comult().clone(),
            coalg.counit().clone(),
        )?;
        let id_v = PartialMap::identity(&TensorShape::of(self.carrier()));
        // After Ψ⁻¹ the coalgebra leg sits second when flipping left to
        // right, first when flipping right to left.
        let extract = match self.side() {
            Side::Left => PartialMap::tensor(&id_v, &total(s_inv)),
            Side::Right => PartialMap::tensor(&total(s_inv), &id_v),
        };
        let coaction = braided_structures::chain(&[
            &extract,
            &total(self.cross().psi_inv()),
            self.coaction(),
        ])?;
        BraidedComodule::new_partial(
            new_coalg,
            self.carrier().clone(),
            coaction,
            opposite(self.side()),
            self.cross().inverse(),
        )
    }
}

impl ModuleAlgebra {
    /// Side-flips the underlying module and rechecks the equivariance laws
    /// over the correspondingly twisted bialgebra.
    pub fn flip_side(&self, acting: &BraidedBialgebra) -> Result<ModuleAlgebra, ModComError> {
        let twisted = twist(acting, -1, 0).assemble()?;
        ModuleAlgebra::new(
            self.module().flip_side()?,
            self.carrier_algebra().clone(),
            &twisted,
        )
    }

    pub fn antipode_flip(&self, hopf: &BraidedHopf) -> Result<ModuleAlgebra, ModComError> {
        let twisted = twist(hopf.bialgebra(), 0, -1).assemble()?;
        ModuleAlgebra::new(
            self.module().antipode_flip(hopf)?,
            self.carrier_algebra().clone(),
            &twisted,
        )
    }
}

impl ComoduleAlgebra {
    /// Side-flips the underlying comodule and rechecks multiplicativity
    /// over the correspondingly twisted bialgebra.
    pub fn flip_side(&self, acting: &BraidedBialgebra) -> Result<ComoduleAlgebra, ModComError> {
        let twisted = twist(acting, 0, -1).assemble()?;
        ComoduleAlgebra::new(
            self.comodule().flip_side()?,
            self.carrier_algebra().clone(),
            &twisted,
        )
    }

    pub fn antipode_flip(&self, hopf: &BraidedHopf) -> Result<ComoduleAlgebra, ModComError> {
        let twisted = twist(hopf.bialgebra(), -1, 0).assemble()?;
        ComoduleAlgebra::new(
            self.comodule().antipode_flip(hopf)?,
            self.carrier_algebra().clone(),
            &twisted,
        )
    }
}
