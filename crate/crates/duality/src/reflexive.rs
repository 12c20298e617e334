//! The double dual and duals of twisted structures.

use braided_structures::{
    chain, compare, eq, BraidedBialgebra, BraidedHopf, CheckEntry, CheckReport, PartialMap,
    Verdict,
};
use exact_linalg::{int, LinMap};
use twist_family::{twist, DEFAULT_TWIST_BOUND};

use crate::structures::{dualize, dualize_hopf, Truncation};
use crate::{verify_dual_pairing, DualPairing, DualityError};

fn skipped(equation: &'static str, context: &str, dim: usize) -> CheckEntry {
    CheckEntry {
        equation,
        context: context.to_string(),
        verdict: Verdict::Skipped,
        checked: 0,
        skipped: dim,
        witness: None,
    }
}

fn double_dual(h: &BraidedHopf, trunc: Option<&Truncation>) -> Result<CheckReport, DualityError> {
    let once = dualize_hopf(h, trunc)?;
    let twice = dualize_hopf(once.hopf(), trunc)?;
    let b1 = h.bialgebra();
    let b2 = twice.hopf().bialgebra();

    // Dualizing is involutive on spaces, so the embedding into the double
    // dual sends each basis vector to the functional with the same index.
    let n = h.shape().dim();
    let iota = PartialMap::total(
        LinMap::from_entries(h.shape(), b2.shape(), (0..n).map(|j| (j, j, int(1))))
            .expect("diagonal entries are in range"),
    );
    let ii = PartialMap::tensor(&iota, &iota);

    let mut report = CheckReport::new();
    report.push(compare(
        eq::DUD,
        "products",
        &chain(&[&iota, b1.mult()])?,
        &chain(&[b2.mult(), &ii])?,
    ));
    report.push(compare(
        eq::DUD,
        "coproducts",
        &chain(&[&ii, b1.comult()])?,
        &chain(&[b2.comult(), &iota])?,
    ));
    report.push(compare(
        eq::DUD,
        "counits",
        &chain(&[&PartialMap::total(b2.counit().clone()), &iota])?,
        &PartialMap::total(b1.counit().clone()),
    ));
    match (b1.unit_map(), b2.unit_map()) {
        (Some(u1), Some(u2)) => report.push(compare(
            eq::DUD,
            "units",
            &chain(&[&iota, &PartialMap::total(u1)])?,
            &PartialMap::total(u2),
        )),
        _ => report.push(skipped(eq::DUD, "units", 1)),
    }
    report.push(compare(
        eq::DUD,
        "braidings",
        &chain(&[&ii, &PartialMap::total(b1.braiding().psi().clone())])?,
        &chain(&[&PartialMap::total(b2.braiding().psi().clone()), &ii])?,
    ));
    report.push(compare(
        eq::DUD,
        "antipodes",
        &chain(&[&iota, &PartialMap::total(h.antipode().clone())])?,
        &chain(&[&PartialMap::total(twice.hopf().antipode().clone()), &iota])?,
    ));
    Ok(report)
}

/// Verifies that the canonical embedding into the double dual carries every
/// structure map onto its double-dualized counterpart: products, coproducts,
/// units, counits, braidings, and antipodes.
pub fn double_dual_iso(h: &BraidedHopf) -> Result<CheckReport, DualityError> {
    double_dual(h, None)
}

/// [`double_dual_iso`] for a degree-truncated instance; undefined products
/// line up on both sides and are skipped, everything else is exact.
pub fn double_dual_iso_graded(
    h: &BraidedHopf,
    degrees: &[usize],
    cutoff: usize,
) -> Result<CheckReport, DualityError> {
    double_dual(h, Some(&Truncation { degrees, cutoff }))
}

fn dual_of_twist_impl(
    h: &BraidedBialgebra,
    trunc: Option<&Truncation>,
    n: i64,
) -> Result<CheckReport, DualityError> {
    if n.abs() > DEFAULT_TWIST_BOUND {
        return Err(DualityError::Unsupported(format!(
            "twist level {n} exceeds the bound {DEFAULT_TWIST_BOUND}"
        )));
    }
    let d = dualize(h, trunc)?;
    let mut report = CheckReport::new();

    // Twisting the dual product down by n and the dual coproduct up by n
    // pairs with the primal twisted the opposite way, through the braiding
    // induced from the inverse.
    let u_tw = twist(d.bialgebra(), -n, n).assemble_unchecked();
    let h_tw = twist(h, n, -n).assemble_unchecked();
    report.merge(
        verify_dual_pairing(d.pairing(), &u_tw, &h_tw)?.prefixed(&format!(
            "U^({},{}) against H^({},{})",
            -n, n, n, -n
        )),
    );

    // Against the directly induced braiding the coproduct side drops one
    // level and the primal side shifts two: the braiding swap replaces the
    // inverse in both transposed legs.
    let u_tw = twist(d.bialgebra(), -n, n - 1).assemble_unchecked();
    let h_tw = twist(h, n + 1, -(n + 2)).assemble_unchecked();
    let direct = DualPairing::new(
        d.pairing().left().clone(),
        d.pairing().right().clone(),
        d.pairing().eval().clone(),
        d.braidings().psi_uh().clone(),
    )?;
    report.merge(
        verify_dual_pairing(&direct, &u_tw, &h_tw)?.prefixed(&format!(
            "U^({},{}) against H^({},{})",
            -n,
            n - 1,
            n + 1,
            -(n + 2)
        )),
    );
    Ok(report)
}

/// Verifies that dualizing commutes with twisting at level `n`, once against
/// the braiding induced from the inverse and once against the directly
/// induced one.
pub fn dual_of_twist(h: &BraidedBialgebra, n: i64) -> Result<CheckReport, DualityError> {
    dual_of_twist_impl(h, None, n)
}

/// [`dual_of_twist`] for a degree-truncated instance.
pub fn dual_of_twist_graded(
    h: &BraidedBialgebra,
    degrees: &[usize],
    cutoff: usize,
    n: i64,
) -> Result<CheckReport, DualityError> {
    dual_of_twist_impl(h, Some(&Truncation { degrees, cutoff }), n)
}
