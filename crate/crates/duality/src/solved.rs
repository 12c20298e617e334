//! Reference constructions that recover the dual structure maps by solving
//! their defining pairing identities as linear systems, one column at a
//! time. These share no index arithmetic with the direct constructions, so
//! agreement between the two is a real consistency check.

use braided_structures::{Braiding, BraidedAlgebra, BraidedCoalgebra};
use exact_linalg::{int, LinMap, LinearSystem, SolveResult, TensorShape, Vect};

use crate::{DualSpace, DualityError};

fn unique(system: &LinearSystem, what: &str) -> Result<Vec<exact_linalg::Scalar>, DualityError> {
    match system.solve() {
        SolveResult::Unique(sol) => Ok(sol),
        SolveResult::Inconsistent => Err(DualityError::Inconsistent(format!(
            "the defining identities for {what} are inconsistent"
        ))),
        SolveResult::Underdetermined(_) => Err(DualityError::Inconsistent(format!(
            "the defining identities do not determine {what}"
        ))),
    }
}

/// Recovers the dual braiding column by column: the coefficients of the
/// braided pair of functionals are pinned down by evaluating against every
/// primal pair.
pub fn solve_dual_braiding(h: &Braiding) -> Result<LinMap, DualityError> {
    let n = h.space().dim();
    let dual = DualSpace::of(h.space());
    let uu = TensorShape::pair(dual.space(), dual.space());
    let hh = TensorShape::pair(h.space(), h.space());
    let mut entries = Vec::new();
    for r in 0..n {
        for s in 0..n {
            let mut system = LinearSystem::new(n * n);
            for a in 0..n {
                for b in 0..n {
                    let braided = h.psi().apply(&Vect::basis(&hh, a * n + b))?;
                    let rhs = braided.coeff(s * n + r);
                    system.push_sparse([(b * n + a, int(1))], rhs);
                }
            }
            let sol = unique(&system, "the dual braiding")?;
            for (out, c) in sol.into_iter().enumerate() {
                if c != int(0) {
                    entries.push((out, r * n + s, c));
                }
            }
        }
    }
    Ok(LinMap::from_entries(uu.clone(), uu, entries).expect("solved entries are in range"))
}

/// Recovers the dual product column by column from its pairing against the
/// comultiplication composed with the inverse braiding.
pub fn solve_dual_product(h: &BraidedCoalgebra) -> Result<LinMap, DualityError> {
    let comult = h.comult().as_total().ok_or_else(|| {
        DualityError::Unsupported("solving for a dual product needs a total comultiplication".into())
    })?;
    let n = h.space().dim();
    let dual = DualSpace::of(h.space());
    let uu = TensorShape::pair(dual.space(), dual.space());
    let hs = TensorShape::of(h.space());
    let mut entries = Vec::new();
    for r in 0..n {
        for s in 0..n {
            let mut system = LinearSystem::new(n);
            for a in 0..n {
                let split = h
                    .braiding()
                    .psi_inv()
                    .apply(&comult.apply(&Vect::basis(&hs, a))?)?;
                system.push_sparse([(a, int(1))], split.coeff(s * n + r));
            }
            let sol = unique(&system, "the dual product")?;
            for (out, c) in sol.into_iter().enumerate() {
                if c != int(0) {
                    entries.push((out, r * n + s, c));
                }
            }
        }
    }
    Ok(
        LinMap::from_entries(uu, TensorShape::of(dual.space()), entries)
            .expect("solved entries are in range"),
    )
}

/// Recovers the dual coproduct column by column from its pairing against
/// the multiplication composed after the braiding.
pub fn solve_dual_coproduct(h: &BraidedAlgebra) -> Result<LinMap, DualityError> {
    let n = h.space().dim();
    let dual = DualSpace::of(h.space());
    let uu = TensorShape::pair(dual.space(), dual.space());
    let hh = TensorShape::pair(h.space(), h.space());
    let mut entries = Vec::new();
    for r in 0..n {
        let mut system = LinearSystem::new(n * n);
        for a in 0..n {
            for b in 0..n {
                let braided = h.braiding().psi().apply(&Vect::basis(&hh, a * n + b))?;
                let product = h.mult().apply(&braided)?.ok_or_else(|| {
                    DualityError::Unsupported(
                        "solving for a dual coproduct needs a total multiplication".into(),
                    )
                })?;
                system.push_sparse([(b * n + a, int(1))], product.coeff(r));
            }
        }
        let sol = unique(&system, "the dual coproduct")?;
        for (out, c) in sol.into_iter().enumerate() {
            if c != int(0) {
                entries.push((out, r, c));
            }
        }
    }
    Ok(
        LinMap::from_entries(TensorShape::of(dual.space()), uu, entries)
            .expect("solved entries are in range"),
    )
}
