//! Verifies that an evaluation pairing really is a duality of braided
//! bialgebras.

use braided_structures::{
    chain, check_comult_compat, check_hexagons, check_mult_compat, compare, eq, tensor_all,
    BraidedBialgebra, BraidedHopf, CheckEntry, CheckReport, HexSide, PartialMap, Side, Verdict,
};
use exact_linalg::{invert_dense, lin_tensor, LinError, LinMap};

use crate::{DualPairing, DualityError};

fn missing_unit(equation: &'static str, context: &str, dim: usize) -> CheckEntry {
    CheckEntry {
        equation,
        context: context.to_string(),
        verdict: Verdict::Skipped,
        checked: 0,
        skipped: dim,
        witness: None,
    }
}

/// Checks the pairing axioms: each side's product against the other's
/// coproduct through the pairing braiding, units against counits,
/// nondegeneracy, and compatibility of the pairing braiding with all four
/// structure maps and both ambient braidings.
pub fn verify_dual_pairing(
    p: &DualPairing,
    u: &BraidedBialgebra,
    h: &BraidedBialgebra,
) -> Result<CheckReport, DualityError> {
    let nu = u.shape().dim();
    let nh = h.shape().dim();
    if p.eval().domain().dim() != nu * nh {
        return Err(LinError::ShapeMismatch(format!(
            "the pairing evaluates {}⊗{}, the structures have dimensions {nu} and {nh}",
            p.left().name(),
            p.right().name()
        ))
        .into());
    }

    let ev = PartialMap::total(p.eval().clone());
    let evev = PartialMap::total(lin_tensor(p.eval(), p.eval()));
    let id_u = PartialMap::total(LinMap::identity(&u.shape()));
    let id_h = PartialMap::total(LinMap::identity(&h.shape()));
    let ups = PartialMap::total(p.upsilon().psi().clone());
    let sandwich = tensor_all(&[&id_u, &ups, &id_h]);

    let mut report = CheckReport::new();

    let lhs = chain(&[&ev, &PartialMap::tensor(u.mult(), &id_h)])?;
    let rhs = chain(&[&evev, &sandwich, &tensor_all(&[&id_u, &id_u, h.comult()])])?;
    report.push(compare(
        eq::MD,
        "the left product against the right coproduct",
        &lhs,
        &rhs,
    ));

    let lhs = chain(&[&ev, &PartialMap::tensor(&id_u, h.mult())])?;
    let rhs = chain(&[&evev, &sandwich, &tensor_all(&[u.comult(), &id_h, &id_h])])?;
    report.push(compare(
        eq::DM,
        "the left coproduct against the right product",
        &lhs,
        &rhs,
    ));

    match u.unit_map() {
        Some(unit) => {
            let lhs = chain(&[&ev, &PartialMap::tensor(&PartialMap::total(unit), &id_h)])?;
            report.push(compare(
                eq::ONE_A,
                "the left unit against the right counit",
                &lhs,
                &PartialMap::total(h.counit().clone()),
            ));
        }
        None => report.push(missing_unit(
            eq::ONE_A,
            "the left unit against the right counit",
            nh,
        )),
    }
    match h.unit_map() {
        Some(unit) => {
            let lhs = chain(&[&ev, &PartialMap::tensor(&id_u, &PartialMap::total(unit))])?;
            report.push(compare(
                eq::ONE_A,
                "the right unit against the left counit",
                &lhs,
                &PartialMap::total(u.counit().clone()),
            ));
        }
        None => report.push(missing_unit(
            eq::ONE_A,
            "the right unit against the left counit",
            nu,
        )),
    }

    let square_and_regular = nu == nh
        && invert_dense(nu, |i, j| p.eval().coeff(0, i * nh + j)).is_some();
    report.push(CheckEntry {
        equation: eq::NONDEG,
        context: "the evaluation pairing".to_string(),
        verdict: if square_and_regular {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        checked: nu.max(nh),
        skipped: 0,
        witness: None,
    });

    for side in [HexSide::LeftVBraided, HexSide::RightWBraided] {
        report.merge(check_hexagons(p.upsilon(), side, u.braiding(), h.braiding())?);
    }
    report.merge(check_mult_compat(p.upsilon(), Side::Left, u.algebra())?);
    report.merge(check_mult_compat(p.upsilon(), Side::Right, h.algebra())?);
    report.merge(check_comult_compat(p.upsilon(), Side::Left, u.coalgebra())?);
    report.merge(check_comult_compat(p.upsilon(), Side::Right, h.coalgebra())?);
    Ok(report)
}

/// [`verify_dual_pairing`] plus the antipodes: moving an antipode through
/// the pairing must not matter.
pub fn verify_dual_pairing_hopf(
    p: &DualPairing,
    u: &BraidedHopf,
    h: &BraidedHopf,
) -> Result<CheckReport, DualityError> {
    let mut report = verify_dual_pairing(p, u.bialgebra(), h.bialgebra())?;
    let ev = PartialMap::total(p.eval().clone());
    let id_u = PartialMap::total(LinMap::identity(&u.shape()));
    let id_h = PartialMap::total(LinMap::identity(&h.shape()));
    let s_u = PartialMap::total(u.antipode().clone());
    let s_h = PartialMap::total(h.antipode().clone());
    let lhs = chain(&[&ev, &PartialMap::tensor(&s_u, &id_h)])?;
    let rhs = chain(&[&ev, &PartialMap::tensor(&id_u, &s_h)])?;
    report.push(compare(
        eq::SPAIR,
        "the antipodes across the pairing",
        &lhs,
        &rhs,
    ));
    Ok(report)
}
