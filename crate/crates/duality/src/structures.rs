//! Dual products, dual coproducts, and the dual (Hopf) bialgebra.

use std::collections::BTreeSet;

use braided_structures::{
    solve_antipode, BraidedAlgebra, BraidedBialgebra, BraidedCoalgebra, BraidedHopf, PartialMap,
};
use exact_linalg::{lin_compose, lin_transpose, LinMap, Space, TensorShape, Vect};

use crate::{induce_dual_braidings, DualPairing, DualityError, InducedBraidings};

/// Which composite of the primal comultiplication a dual product transposes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductVariant {
    /// Transpose of the inverse braiding followed after the comultiplication.
    /// This is the product the dual bialgebra carries.
    UnderlineM,
    /// Transpose of the braiding after the comultiplication, the twisted
    /// convolution-style product on the dual.
    Star,
}

/// Which composite of the primal multiplication a dual coproduct transposes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoproductVariant {
    /// Transpose of the multiplication composed with the braiding. This is
    /// the coproduct the dual bialgebra carries.
    UnderlineDelta,
    /// Transpose of the multiplication composed with the inverse braiding.
    Circ,
}

/// Degree data of a truncated graded structure. Products of total degree
/// beyond the cutoff are missing from the primal, so their duals must stay
/// undefined too; conversely gradedness is what makes the dual coproduct of
/// a partial multiplication computable, because every missing product lies
/// in degrees that pair to zero against the stored functionals.
#[derive(Clone, Copy, Debug)]
pub struct Truncation<'a> {
    pub degrees: &'a [usize],
    pub cutoff: usize,
}

/// A dual bialgebra together with the canonical evaluation pairing and the
/// full family of induced braidings.
#[derive(Clone, Debug)]
pub struct DualBialgebra {
    bialgebra: BraidedBialgebra,
    pairing: DualPairing,
    braidings: InducedBraidings,
}

impl DualBialgebra {
    pub fn bialgebra(&self) -> &BraidedBialgebra {
        &self.bialgebra
    }

    pub fn pairing(&self) -> &DualPairing {
        &self.pairing
    }

    pub fn braidings(&self) -> &InducedBraidings {
        &self.braidings
    }
}

/// Like [`DualBialgebra`], with the transposed antipode on top.
#[derive(Clone, Debug)]
pub struct DualHopf {
    hopf: BraidedHopf,
    pairing: DualPairing,
    braidings: InducedBraidings,
}

impl DualHopf {
    pub fn hopf(&self) -> &BraidedHopf {
        &self.hopf
    }

    pub fn bialgebra(&self) -> &BraidedBialgebra {
        self.hopf.bialgebra()
    }

    pub fn pairing(&self) -> &DualPairing {
        &self.pairing
    }

    pub fn braidings(&self) -> &InducedBraidings {
        &self.braidings
    }
}

fn check_truncation(trunc: Option<&Truncation>, dim: usize) -> Result<(), DualityError> {
    if let Some(t) = trunc {
        if t.degrees.len() != dim {
            return Err(DualityError::Unsupported(format!(
                "the degree vector has length {}, the space has dimension {}",
                t.degrees.len(),
                dim
            )));
        }
    }
    Ok(())
}

/// Transposes a map H → H⊗H into a product U⊗U → U, reversing the pair of
/// dual legs. With a truncation, input pairs of total degree beyond the
/// cutoff are left undefined: their products live above the cutoff.
fn dual_mult_map(k: &LinMap, u: &Space, trunc: Option<&Truncation>) -> PartialMap {
    let n = u.dim();
    let lin = LinMap::from_entries(
        TensorShape::pair(u, u),
        TensorShape::of(u),
        k.entries().map(|(out, inp, c)| {
            let (c1, c2) = (out / n, out % n);
            (inp, c2 * n + c1, c.clone())
        }),
    )
    .expect("transposed entries stay in range");
    match trunc {
        Some(t) => {
            let mut undefined = BTreeSet::new();
            for r in 0..n {
                for s in 0..n {
                    if t.degrees[r] + t.degrees[s] > t.cutoff {
                        undefined.insert(r * n + s);
                    }
                }
            }
            PartialMap::with_undefined(lin, undefined)
        }
        None => PartialMap::total(lin),
    }
}

/// Transposes a (possibly partial) composite H⊗H → H into a coproduct
/// U → U⊗U, reversing the pair of dual legs. A partial multiplication is
/// only acceptable with grading data: the missing columns then carry
/// degrees beyond the cutoff and pair to zero against every stored
/// functional, so dropping them loses nothing.
fn dual_comult_map(
    m: &PartialMap,
    psi_leg: &LinMap,
    u: &Space,
    trunc: Option<&Truncation>,
) -> Result<LinMap, DualityError> {
    if !m.is_total() && trunc.is_none() {
        return Err(DualityError::Unsupported(
            "dualizing a partial multiplication needs its grading".into(),
        ));
    }
    let n = u.dim();
    let l = lin_compose(m.lin(), psi_leg)?;
    Ok(LinMap::from_entries(
        TensorShape::of(u),
        TensorShape::pair(u, u),
        l.entries().map(|(out, inp, c)| {
            let (k, j) = (inp / n, inp % n);
            (j * n + k, out, c.clone())
        }),
    )
    .expect("transposed entries stay in range"))
}

/// The counit, read as a vector of the dual space: the unit of every dual
/// product.
fn counit_vector(counit: &LinMap, u: &Space) -> Vect {
    Vect::from_coeffs(
        &TensorShape::of(u),
        counit.entries().map(|(_, a, c)| (a, c.clone())),
    )
}

/// The unit vector, read as the counit of the dual space.
fn unit_functional(unit: &Vect, u: &Space) -> LinMap {
    LinMap::from_entries(
        TensorShape::of(u),
        TensorShape::unit(),
        unit.iter().map(|(a, c)| (0, a, c.clone())),
    )
    .expect("functional entries stay in range")
}

/// The product dual to a braided coalgebra, on the full dual space. The
/// unit is the counit. Both variants are braided algebras for the induced
/// dual braiding; they differ by a double twist.
pub fn dual_algebra(
    h: &BraidedCoalgebra,
    variant: ProductVariant,
) -> Result<BraidedAlgebra, DualityError> {
    let comult = h.comult().as_total().ok_or_else(|| {
        DualityError::Unsupported("dualizing a product needs a total comultiplication".into())
    })?;
    let braidings = induce_dual_braidings(h.braiding())?;
    let u = braidings.dual().space().clone();
    let leg = match variant {
        ProductVariant::UnderlineM => h.braiding().psi_inv(),
        ProductVariant::Star => h.braiding().psi(),
    };
    let k = lin_compose(leg, comult)?;
    let mult = dual_mult_map(&k, &u, None);
    let unit = counit_vector(h.counit(), &u);
    Ok(BraidedAlgebra::new_partial(
        braidings.psi_uu().clone(),
        mult,
        Some(unit),
    )?)
}

/// The coproduct dual to a braided algebra, on the full dual space. The
/// counit is evaluation at the unit. Requires a total multiplication; a
/// truncated one is handled by [`dual_bialgebra_graded`].
pub fn dual_coalgebra(
    h: &BraidedAlgebra,
    variant: CoproductVariant,
) -> Result<BraidedCoalgebra, DualityError> {
    let unit = h.unit().ok_or_else(|| {
        DualityError::Unsupported("dualizing a coproduct needs a unit".into())
    })?;
    let braidings = induce_dual_braidings(h.braiding())?;
    let u = braidings.dual().space().clone();
    let leg = match variant {
        CoproductVariant::UnderlineDelta => h.braiding().psi(),
        CoproductVariant::Circ => h.braiding().psi_inv(),
    };
    let comult = dual_comult_map(h.mult(), leg, &u, None)?;
    let counit = unit_functional(unit, &u);
    Ok(BraidedCoalgebra::new(
        braidings.psi_uu().clone(),
        comult,
        counit,
    )?)
}

pub(crate) fn dualize(
    h: &BraidedBialgebra,
    trunc: Option<&Truncation>,
) -> Result<DualBialgebra, DualityError> {
    check_truncation(trunc, h.shape().dim())?;
    let comult = h.comult().as_total().ok_or_else(|| {
        DualityError::Unsupported("dualizing needs a total comultiplication".into())
    })?;
    let unit = h.algebra().unit().ok_or_else(|| {
        DualityError::Unsupported("dualizing needs a unit".into())
    })?;
    let braidings = induce_dual_braidings(h.braiding())?;
    let u = braidings.dual().space().clone();

    let k = lin_compose(h.braiding().psi_inv(), comult)?;
    let mult = dual_mult_map(&k, &u, trunc);
    let comult_u = dual_comult_map(h.mult(), h.braiding().psi(), &u, trunc)?;

    let algebra = BraidedAlgebra::new_partial(
        braidings.psi_uu().clone(),
        mult,
        Some(counit_vector(h.counit(), &u)),
    )?;
    let coalgebra = BraidedCoalgebra::new(
        braidings.psi_uu().clone(),
        comult_u,
        unit_functional(unit, &u),
    )?;
    let bialgebra = BraidedBialgebra::new(algebra, coalgebra)?;
    let pairing = DualPairing::canonical(braidings.dual(), braidings.psi_uh_circ().clone())?;
    Ok(DualBialgebra {
        bialgebra,
        pairing,
        braidings,
    })
}

/// The dual of a braided bialgebra with total structure maps. The product
/// transposes the inverse braiding after the comultiplication, the
/// coproduct transposes the multiplication after the braiding, and the
/// braiding is the induced dual one. Construction re-runs all bialgebra
/// checks; a failure is an error, not a report.
pub fn dual_bialgebra(h: &BraidedBialgebra) -> Result<DualBialgebra, DualityError> {
    dualize(h, None)
}

/// The dual of a degree-truncated braided bialgebra. The dual is truncated
/// the same way: dual products beyond the cutoff stay undefined, while the
/// dual coproduct is total because everything the primal is missing pairs
/// to zero below the cutoff.
pub fn dual_bialgebra_graded(
    h: &BraidedBialgebra,
    degrees: &[usize],
    cutoff: usize,
) -> Result<DualBialgebra, DualityError> {
    dualize(h, Some(&Truncation { degrees, cutoff }))
}

pub(crate) fn dualize_hopf(
    h: &BraidedHopf,
    trunc: Option<&Truncation>,
) -> Result<DualHopf, DualityError> {
    let d = dualize(h.bialgebra(), trunc)?;
    let antipode = lin_transpose(h.antipode());
    let antipode_inv = h.antipode_inv().map(lin_transpose);
    if d.bialgebra.mult().is_total() {
        let solved = solve_antipode(&d.bialgebra)?;
        if solved != antipode {
            return Err(DualityError::Inconsistent(
                "the transposed antipode disagrees with the convolution inverse".into(),
            ));
        }
    }
    let hopf = BraidedHopf::new(d.bialgebra, antipode, antipode_inv)?;
    Ok(DualHopf {
        hopf,
        pairing: d.pairing,
        braidings: d.braidings,
    })
}

/// The dual Hopf algebra: the dual bialgebra with the transposed antipode.
/// When the dual product is total the transpose is also cross-checked
/// against the convolution inverse of the identity.
pub fn dual_hopf(h: &BraidedHopf) -> Result<DualHopf, DualityError> {
    dualize_hopf(h, None)
}

/// Dual Hopf algebra of a degree-truncated instance.
pub fn dual_hopf_graded(
    h: &BraidedHopf,
    degrees: &[usize],
    cutoff: usize,
) -> Result<DualHopf, DualityError> {
    dualize_hopf(h, Some(&Truncation { degrees, cutoff }))
}
