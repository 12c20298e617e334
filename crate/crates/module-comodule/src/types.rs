use braided_structures::{
    BraidedAlgebra, BraidedBialgebra, BraidedCoalgebra, CrossBraiding, PartialMap, Side,
};
use exact_linalg::{lin_tensor, LinMap, Space, TensorShape};

use crate::{checks, ModComError};

/// A carrier space with an action of a braided algebra.
///
/// `side` says which tensor factor the algebra occupies: a left module
/// carries an action A⊗V → V, a right module V⊗A → V. The cross-braiding
/// reads in the same order as the action: A⊗V → V⊗A for a left module,
/// V⊗A → A⊗V for a right one.
#[derive(Clone, Debug)]
pub struct BraidedModule {
    algebra: BraidedAlgebra,
    carrier: Space,
    action: PartialMap,
    side: Side,
    cross: CrossBraiding,
}

impl BraidedModule {
    pub fn new(
        algebra: BraidedAlgebra,
        carrier: Space,
        action: LinMap,
        side: Side,
        cross: CrossBraiding,
    ) -> Result<BraidedModule, ModComError> {
        Self::new_partial(algebra, carrier, PartialMap::total(action), side, cross)
    }

    pub fn new_partial(
        algebra: BraidedAlgebra,
        carrier: Space,
        action: PartialMap,
        side: Side,
        cross: CrossBraiding,
    ) -> Result<BraidedModule, ModComError> {
        validate_module_shapes(&algebra, &carrier, &action, side, &cross)?;
        let module = BraidedModule {
            algebra,
            carrier,
            action,
            side,
            cross,
        };
        let report = checks::check_module(&module);
        if report.passed() {
            Ok(module)
        } else {
            Err(ModComError::CheckFailed(report))
        }
    }

    /// Skips all validation; for diagnostics and deliberately broken
    /// fixtures. The shapes must still line up or the checkers will panic.
    pub fn from_parts_unchecked(
        algebra: BraidedAlgebra,
        carrier: Space,
        action: PartialMap,
        side: Side,
        cross: CrossBraiding,
    ) -> BraidedModule {
        BraidedModule {
            algebra,
            carrier,
            action,
            side,
            cross,
        }
    }

    pub fn algebra(&self) -> &BraidedAlgebra {
        &self.algebra
    }

    pub fn carrier(&self) -> &Space {
        &self.carrier
    }

    pub fn action(&self) -> &PartialMap {
        &self.action
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn cross(&self) -> &CrossBraiding {
        &self.cross
    }

    pub fn check(&self) -> braided_structures::CheckReport {
        checks::check_module(self)
    }
}

/// A carrier space with a coaction of a braided coalgebra.
///
/// A left comodule carries a coaction V → H⊗V and a cross-braiding
/// V⊗H → H⊗V; a right comodule carries V → V⊗H and H⊗V → V⊗H. In both
/// cases the cross-braiding moves carrier elements into the position the
/// coaction puts them in.
#[derive(Clone, Debug)]
pub struct BraidedComodule {
    coalgebra: BraidedCoalgebra,
    carrier: Space,
    coaction: PartialMap,
    side: Side,
    cross: CrossBraiding,
}

impl BraidedComodule {
    pub fn new(
        coalgebra: BraidedCoalgebra,
        carrier: Space,
        coaction: LinMap,
        side: Side,
        cross: CrossBraiding,
    ) -> Result<BraidedComodule, ModComError> {
        Self::new_partial(coalgebra, carrier, PartialMap::total(coaction), side, cross)
    }

    pub fn new_partial(
        coalgebra: BraidedCoalgebra,
        carrier: Space,
        coaction: PartialMap,
        side: Side,
        cross: CrossBraiding,
    ) -> Result<BraidedComodule, ModComError> {
        validate_comodule_shapes(&coalgebra, &carrier, &coaction, side, &cross)?;
        let comodule = BraidedComodule {
            coalgebra,
            carrier,
            coaction,
            side,
            cross,
        };
        let report = checks::check_comodule(&comodule);
        if report.passed() {
            Ok(comodule)
        } else {
            Err(ModComError::CheckFailed(report))
        }
    }

    /// Skips all validation; for diagnostics and deliberately broken
    /// fixtures. The shapes must still line up or the checkers will panic.
    pub fn from_parts_unchecked(
        coalgebra: BraidedCoalgebra,
        carrier: Space,
        coaction: PartialMap,
        side: Side,
        cross: CrossBraiding,
    ) -> BraidedComodule {
        BraidedComodule {
            coalgebra,
            carrier,
            coaction,
            side,
            cross,
        }
    }

    pub fn coalgebra(&self) -> &BraidedCoalgebra {
        &self.coalgebra
    }

    pub fn carrier(&self) -> &Space {
        &self.carrier
    }

    pub fn coaction(&self) -> &PartialMap {
        &self.coaction
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn cross(&self) -> &CrossBraiding {
        &self.cross
    }

    pub fn check(&self) -> braided_structures::CheckReport {
        checks::check_comodule(self)
    }
}

/// A module whose carrier is itself a braided algebra, acted on by a
/// bialgebra so that the product and unit of the carrier are equivariant.
#[derive(Clone, Debug)]
pub struct ModuleAlgebra {
    module: BraidedModule,
    carrier_algebra: BraidedAlgebra,
}

impl ModuleAlgebra {
    /// Checks the extra compatibility laws against `acting`, whose algebra
    /// part must coincide with the module's acting algebra.
    pub fn new(
        module: BraidedModule,
        carrier_algebra: BraidedAlgebra,
        acting: &BraidedBialgebra,
    ) -> Result<ModuleAlgebra, ModComError> {
        let value = ModuleAlgebra {
            module,
            carrier_algebra,
        };
        let report = checks::check_module_algebra(&value, acting)?;
        if report.passed() {
            Ok(value)
        } else {
            Err(ModComError::CheckFailed(report))
        }
    }

    pub fn from_parts_unchecked(
        module: BraidedModule,
        carrier_algebra: BraidedAlgebra,
    ) -> ModuleAlgebra {
        ModuleAlgebra {
            module,
            carrier_algebra,
        }
    }

    pub fn module(&self) -> &BraidedModule {
        &self.module
    }

    pub fn carrier_algebra(&self) -> &BraidedAlgebra {
        &self.carrier_algebra
    }
}

/// A comodule whose carrier is a braided algebra and whose coaction is an
/// algebra map in the braided sense.
#[derive(Clone, Debug)]
pub struct ComoduleAlgebra {
    comodule: BraidedComodule,
    carrier_algebra: BraidedAlgebra,
}

impl ComoduleAlgebra {
    /// Checks the extra compatibility laws against `acting`, whose
    /// coalgebra part must coincide with the comodule's coalgebra.
    pub fn new(
        comodule: BraidedComodule,
        carrier_algebra: BraidedAlgebra,
        acting: &BraidedBialgebra,
    ) -> Result<ComoduleAlgebra, ModComError> {
        let value = ComoduleAlgebra {
            comodule,
            carrier_algebra,
        };
        let report = checks::check_comodule_algebra(&value, acting)?;
        if report.passed() {
            Ok(value)
        } else {
            Err(ModComError::CheckFailed(report))
        }
    }

    pub fn from_parts_unchecked(
        comodule: BraidedComodule,
        carrier_algebra: BraidedAlgebra,
    ) -> ComoduleAlgebra {
        ComoduleAlgebra {
            comodule,
            carrier_algebra,
        }
    }

    pub fn comodule(&self) -> &BraidedComodule {
        &self.comodule
    }

    pub fn carrier_algebra(&self) -> &BraidedAlgebra {
        &self.carrier_algebra
    }
}

fn validate_module_shapes(
    algebra: &BraidedAlgebra,
    carrier: &Space,
    action: &PartialMap,
    side: Side,
    cross: &CrossBraiding,
) -> Result<(), ModComError> {
    let (dom, xl, xr) = match side {
        Side::Left => (
            TensorShape::pair(algebra.space(), carrier),
            algebra.space(),
            carrier,
        ),
        Side::Right => (
            TensorShape::pair(carrier, algebra.space()),
            carrier,
            algebra.space(),
        ),
    };
    if *action.domain() != dom || *action.codomain() != TensorShape::of(carrier) {
        return Err(ModComError::ShapeMismatch(format!(
            "action must map {dom} to {}, got {} -> {}",
            TensorShape::of(carrier),
            action.domain(),
            action.codomain()
        )));
    }
    if cross.left_space() != xl || cross.right_space() != xr {
        return Err(ModComError::ShapeMismatch(format!(
            "cross-braiding must live on {xl}⊗{xr}, got {}⊗{}",
            cross.left_space(),
            cross.right_space()
        )));
    }
    Ok(())
}

fn validate_comodule_shapes(
    coalgebra: &BraidedCoalgebra,
    carrier: &Space,
    coaction: &PartialMap,
    side: Side,
    cross: &CrossBraiding,
) -> Result<(), ModComError> {
    let (cod, xl, xr) = match side {
        Side::Left => (
            TensorShape::pair(coalgebra.space(), carrier),
            carrier,
            coalgebra.space(),
        ),
        Side::Right => (
            TensorShape::pair(carrier, coalgebra.space()),
            coalgebra.space(),
            carrier,
        ),
    };
    if *coaction.domain() != TensorShape::of(carrier) || *coaction.codomain() != cod {
        return Err(ModComError::ShapeMismatch(format!(
            "coaction must map {} to {cod}, got {} -> {}",
            TensorShape::of(carrier),
            coaction.domain(),
            coaction.codomain()
        )));
    }
    if cross.left_space() != xl || cross.right_space() != xr {
        return Err(ModComError::ShapeMismatch(format!(
            "cross-braiding must live on {xl}⊗{xr}, got {}⊗{}",
            cross.left_space(),
            cross.right_space()
        )));
    }
    Ok(())
}

/// An algebra acting on itself by multiplication, braided by its own
/// braiding.
pub fn regular_module(a: &BraidedAlgebra, side: Side) -> Result<BraidedModule, ModComError> {
    BraidedModule::new_partial(
        a.clone(),
        a.space().clone(),
        a.mult().clone(),
        side,
        CrossBraiding::from_braiding(a.braiding()),
    )
}

/// A coalgebra coacting on itself by its coproduct, braided by its own
/// braiding.
pub fn coproduct_comodule(
    c: &BraidedCoalgebra,
    side: Side,
) -> Result<BraidedComodule, ModComError> {
    BraidedComodule::new_partial(
        c.clone(),
        c.space().clone(),
        c.comult().clone(),
        side,
        CrossBraiding::from_braiding(c.braiding()),
    )
}

/// The action through the counit, `a⊗v -> ε(a)v`, on an arbitrary carrier
/// with the flip as cross-braiding.
pub fn trivial_module(
    h: &BraidedBialgebra,
    carrier: &Space,
    side: Side,
) -> Result<BraidedModule, ModComError> {
    let id = LinMap::identity(&TensorShape::of(carrier));
    let (action, cross) = match side {
        Side::Left => (
            lin_tensor(h.counit(), &id),
            CrossBraiding::flip(h.space(), carrier),
        ),
        Side::Right => (
            lin_tensor(&id, h.counit()),
            CrossBraiding::flip(carrier, h.space()),
        ),
    };
    BraidedModule::new(h.algebra().clone(), carrier.clone(), action, side, cross)
}

/// The coaction through the unit, `v -> v⊗1`, on an arbitrary carrier with
/// the flip as cross-braiding.
pub fn trivial_comodule(
    h: &BraidedBialgebra,
    carrier: &Space,
    side: Side,
) -> Result<BraidedComodule, ModComError> {
    let unit = h.unit_map().ok_or_else(|| {
        ModComError::Unsupported("the trivial coaction needs a unit".into())
    })?;
    let id = LinMap::identity(&TensorShape::of(carrier));
    let (coaction, cross) = match side {
        Side::Left => (
            lin_tensor(&unit, &id),
            CrossBraiding::flip(carrier, h.space()),
        ),
        Side::Right => (
            lin_tensor(&id, &unit),
            CrossBraiding::flip(h.space(), carrier),
        ),
    };
    BraidedComodule::new(h.coalgebra().clone(), carrier.clone(), coaction, side, cross)
}
