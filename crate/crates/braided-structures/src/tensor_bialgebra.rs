//! The braided tensor product of two braided bialgebras.

use crate::algebra::{check_mult_compat, BraidedAlgebra};
use crate::bialgebra::BraidedBialgebra;
use crate::braiding::{check_hexagons, Braiding, CrossBraiding, HexSide};
use crate::coalgebra::{check_comult_compat, BraidedCoalgebra};
use crate::partial::{chain, tensor_all, PartialMap};
use crate::report::CheckReport;
use crate::{Side, StructureError};
use exact_linalg::{lin_tensor, LinError, Space, TensorShape, Vect};

/// Fuses two braided bialgebras along a cross-braiding Ψ: A⊗B → B⊗A into
/// a braided bialgebra on the tensor product space.
///
/// The product braids the inner legs back with Ψ⁻¹, the coproduct braids
/// them with Ψ, and the braiding of the result conjugates the two ambient
/// braidings by Ψ. The hypotheses (both hexagons, compatibility with both
/// multiplications and both comultiplications) are verified first; the
/// assembled structure then passes through the ordinary constructors, so
/// the result carries a full clean report or does not exist.
pub fn braided_tensor_bialgebra(
    a: &BraidedBialgebra,
    b: &BraidedBialgebra,
    x: &CrossBraiding,
) -> Result<BraidedBialgebra, StructureError> {
    if x.left_space() != a.space() || x.right_space() != b.space() {
        return Err(LinError::ShapeMismatch(format!(
            "cross-braiding connects {}⊗{}, expected {}⊗{}",
            x.left_space(),
            x.right_space(),
            a.space(),
            b.space()
        ))
        .into());
    }
    precheck(check_hexagons(x, HexSide::LeftVBraided, a.braiding(), b.braiding())?)?;
    precheck(check_hexagons(x, HexSide::RightWBraided, a.braiding(), b.braiding())?)?;
    precheck(check_mult_compat(x, Side::Left, a.algebra())?)?;
    precheck(check_mult_compat(x, Side::Right, b.algebra())?)?;
    precheck(check_comult_compat(x, Side::Left, a.coalgebra())?)?;
    precheck(check_comult_compat(x, Side::Right, b.coalgebra())?)?;

    let fused = fuse_spaces(a.space(), b.space());
    let f = TensorShape::of(&fused);
    let ff = TensorShape::pair(&fused, &fused);
    let id_a = PartialMap::identity(&a.shape());
    let id_b = PartialMap::identity(&b.shape());
    let psi_ab = PartialMap::total(x.psi().clone());
    let psi_ba = PartialMap::total(x.psi_inv().clone());
    let psi_aa = PartialMap::total(a.braiding().psi().clone());
    let psi_bb = PartialMap::total(b.braiding().psi().clone());

    let mult = chain(&[
        &PartialMap::tensor(a.mult(), b.mult()),
        &tensor_all(&[&id_a, &psi_ba, &id_b]),
    ])?
    .relabel(ff.clone(), f.clone())?;
    let comult = chain(&[
        &tensor_all(&[&id_a, &psi_ab, &id_b]),
        &PartialMap::tensor(a.comult(), b.comult()),
    ])?
    .relabel(f.clone(), ff.clone())?;
    let unit = match (a.algebra().unit(), b.algebra().unit()) {
        (Some(ua), Some(ub)) => {
            let t = ua.tensor(ub);
            Some(Vect::from_coeffs(&f, t.iter().map(|(i, c)| (i, c.clone()))))
        }
        _ => None,
    };
    let counit = lin_tensor(a.counit(), b.counit()).with_shapes(f.clone(), TensorShape::unit())?;
    let psi = chain(&[
        &tensor_all(&[&id_a, &psi_ab, &id_b]),
        &tensor_all(&[&id_a, &id_a, &psi_bb]),
        &tensor_all(&[&psi_aa, &id_b, &id_b]),
        &tensor_all(&[&id_a, &psi_ba, &id_b]),
    ])?
    .relabel(ff.clone(), ff)?;

    let braiding = Braiding::new(
        fused,
        psi.as_total().expect("braiding components are total").clone(),
    )?;
    let algebra = BraidedAlgebra::new_partial(braiding.clone(), mult, unit)?;
    let coalgebra = BraidedCoalgebra::new_partial(braiding, comult, counit)?;
    BraidedBialgebra::new(algebra, coalgebra)
}

fn precheck(report: CheckReport) -> Result<(), StructureError> {
    match report.failures().next() {
        Some(fail) => Err(StructureError::PrecheckFailed {
            equation: fail.equation,
            report: report.clone(),
        }),
        None => Ok(()),
    }
}

fn fuse_spaces(a: &Space, b: &Space) -> Space {
    let labels = a
        .labels()
        .iter()
        .flat_map(|la| b.labels().iter().map(move |lb| format!("{la}⊗{lb}")))
        .collect();
    Space::new(format!("{}⊗{}", a.name(), b.name()), labels)
}
