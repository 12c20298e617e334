//! Turning coactions into actions of the dual and back. A coaction
//! ρ: V → V⊗H becomes the action of U on V that pairs the U-leg against
//! the H-leg after undoing the cross-braiding; conversely an action
//! ν: H⊗V → V transcribes into a coaction of U with a twisted coproduct.

use braided_structures::{eq, BraidedBialgebra, BraidedCoalgebra, PartialMap, Side};
use duality::DualBialgebra;
use exact_linalg::{lin_compose, shape_permutation, LinMap, Scalar, SolveResult, TensorShape};
use num_traits::Zero;

use crate::{mixed, BraidedComodule, BraidedModule, ModComError, ModuleAlgebra};

fn total(lin: &LinMap) -> PartialMap {
    PartialMap::total(lin.clone())
}

fn ensure_dual_of(
    u: &DualBialgebra,
    space: &exact_linalg::Space,
    braiding: &braided_structures::Braiding,
) -> Result<(), ModComError> {
    if u.pairing().right() != space || u.braidings().primal() != braiding {
        return Err(ModComError::Mismatch(
            "the dual bialgebra was not built from this structure's braided space".into(),
        ));
    }
    Ok(())
}

/// Pairs the dual against the coalgebra leg of a coaction, giving an
/// action of the dual bialgebra on the same carrier. A right comodule
/// yields a left module and a left comodule a right one; in both cases the
/// cross-braiding is induced by dualizing the acting factor.
pub fn comodule_to_module(
    c: &BraidedComodule,
    u: &DualBialgebra,
) -> Result<BraidedModule, ModComError> {
    let coalg = c.coalgebra();
    ensure_dual_of(u, coalg.space(), coalg.braiding())?;
    let nv = c.carrier().dim();
    let nh = coalg.space().dim();
    let id_v = PartialMap::identity(&TensorShape::of(c.carrier()));
    let id_u = PartialMap::identity(&TensorShape::of(u.pairing().left()));
    let ev = total(u.pairing().eval());
    let rho = c.coaction();
    let q = c.cross().psi_inv();

    match c.side() {
        Side::Right => {
            let action = braided_structures::chain(&[
                &PartialMap::tensor(&ev, &id_v),
                &PartialMap::tensor(&id_u, &total(q)),
                &PartialMap::tensor(&id_u, rho),
            ])?;
            // Independent transcription of the pairing, guarding the
            // composite above against shuffled tensor legs.
            for i in 0..nv {
                if !rho.is_defined_at(i) {
                    continue;
                }
                for r in 0..nh {
                    for l in 0..nv {
                        let mut want = Scalar::zero();
                        for k in 0..nv {
                            for a in 0..nh {
                                let rc = rho.lin().coeff(k * nh + a, i);
                                if !rc.is_zero() {
                                    want += rc * q.coeff(r * nv + l, k * nh + a);
                                }
                            }
                        }
                        if action.lin().coeff(l, r * nv + i) != want {
                            return Err(ModComError::Inconsistent(format!(
                                "composite action disagrees with its defining pairing ({})",
                                eq::NUL
                            )));
                        }
                    }
                }
            }
            let cross = mixed::dualize_left_factor(c.cross())?;
            BraidedModule::new_partial(
                u.bialgebra().algebra().clone(),
                c.carrier().clone(),
                action,
                Side::Left,
                cross,
            )
        }
        Side::Left => {
            let swap = shape_permutation(
                &TensorShape::pair(coalg.space(), u.pairing().left()),
                &[1, 0],
            );
            let ev_swapped = PartialMap::compose(&ev, &total(&swap))?;
            let unbraided = PartialMap::compose(&total(q), rho)?;
            let action = braided_structures::chain(&[
                &PartialMap::tensor(&id_v, &ev_swapped),
                &PartialMap::tensor(&unbraided, &id_u),
            ])?;
            for i in 0..nv {
                if !rho.is_defined_at(i) {
                    continue;
                }
                for r in 0..nh {
                    for l in 0..nv {
                        let mut want = Scalar::zero();
                        for a in 0..nh {
                            for k in 0..nv {
                                let rc = rho.lin().coeff(a * nv + k, i);
                                if !rc.is_zero() {
                                    want += rc * q.coeff(l * nh + r, a * nv + k);
                                }
                            }
                        }
                        if action.lin().coeff(l, i * nh + r) != want {
                            return Err(ModComError::Inconsistent(format!(
                                "composite action disagrees with its defining pairing ({})",
                                eq::NUR
                            )));
                        }
                    }
                }
            }
            let cross = mixed::dualize_right_factor(c.cross())?;
            BraidedModule::new_partial(
                u.bialgebra().algebra().clone(),
                c.carrier().clone(),
                action,
                Side::Right,
                cross,
            )
        }
    }
}

/// The two coproduct actions of the dual on the bialgebra itself: the left
/// one acts as g⊳a = (g⊗id)(Ψ⁻¹Δa), the right one as a⊲f = (id⊗f)(Ψ⁻¹Δa).
/// Both make the bialgebra a module algebra over its dual.
pub fn natural_action(
    h: &BraidedBialgebra,
    u: &DualBialgebra,
) -> Result<(ModuleAlgebra, ModuleAlgebra), ModComError> {
    ensure_dual_of(u, h.space(), h.braiding())?;
    let delta = h.comult().as_total().ok_or_else(|| {
        ModComError::Unsupported("the coproduct actions need a total coproduct".into())
    })?;
    let nh = h.space().dim();
    let c = lin_compose(h.braiding().psi_inv(), delta)?;
    let u_space = u.pairing().left();
    let h_shape = TensorShape::of(h.space());

    let act_l = LinMap::from_entries(
        TensorShape::pair(u_space, h.space()),
        h_shape.clone(),
        (0..nh).flat_map(|i| {
            let c = &c;
            (0..nh).flat_map(move |r| {
                (0..nh).map(move |j| (j, r * nh + i, c.coeff(r * nh + j, i)))
            })
        }),
    )?;
    let act_r = LinMap::from_entries(
        TensorShape::pair(h.space(), u_space),
        h_shape,
        (0..nh).flat_map(|i| {
            let c = &c;
            (0..nh).flat_map(move |r| {
                (0..nh).map(move |b| (b, i * nh + r, c.coeff(b * nh + r, i)))
            })
        }),
    )?;

    let left_module = BraidedModule::new(
        u.bialgebra().algebra().clone(),
        h.space().clone(),
        act_l,
        Side::Left,
        u.braidings().psi_uh_circ().clone(),
    )?;
    let right_module = BraidedModule::new(
        u.bialgebra().algebra().clone(),
        h.space().clone(),
        act_r,
        Side::Right,
        u.braidings().psi_hu_circ().clone(),
    )?;
    let left = ModuleAlgebra::new(left_module, h.algebra().clone(), u.bialgebra())?;
    let right = ModuleAlgebra::new(right_module, h.algebra().clone(), u.bialgebra())?;
    Ok((left, right))
}

fn twisted_dual_coalgebra(u: &DualBialgebra) -> Result<BraidedCoalgebra, ModComError> {
    let psi_uu = u.braidings().psi_uu();
    let comult = PartialMap::compose(&total(&psi_uu.power(-2)), u.bialgebra().comult())?;
    Ok(BraidedCoalgebra::new_partial(
        psi_uu.clone(),
        comult,
        u.bialgebra().counit().clone(),
    )?)
}

struct Grading<'a> {
    algebra_degrees: &'a [usize],
    carrier_degrees: &'a [usize],
    cutoff: usize,
}

fn convert_action(
    m: &BraidedModule,
    u: &DualBialgebra,
    grading: Option<Grading<'_>>,
) -> Result<BraidedComodule, ModComError> {
    let alg = m.algebra();
    ensure_dual_of(u, alg.space(), alg.braiding())?;
    let nv = m.carrier().dim();
    let nh = alg.space().dim();
    if let Some(g) = &grading {
        if g.algebra_degrees.len() != nh || g.carrier_degrees.len() != nv {
            return Err(ModComError::ShapeMismatch(
                "degree lists must match the algebra and carrier dimensions".into(),
            ));
        }
    }
    let u_space = u.pairing().left();
    let coalg = twisted_dual_coalgebra(u)?;
    // D reads the action with the acting leg moved behind the carrier.
    let d = PartialMap::compose(m.action(), &total(m.cross().psi_inv()))?;

    // An undefined column of D may only be treated as zero when a degree
    // truncation is in force and the column's degree exceeds the cutoff,
    // so nothing it produces could land inside the window.
    let ensure_skippable = |i: usize, j: usize| -> Result<(), ModComError> {
        match &grading {
            Some(g) if g.carrier_degrees[i] + g.algebra_degrees[j] > g.cutoff => Ok(()),
            Some(_) => Err(ModComError::Unsupported(
                "the action is undefined inside the degree window; \
                 cannot transcribe it into a coaction"
                    .into(),
            )),
            None => Err(ModComError::Unsupported(
                "the action is not total; use the degree-aware conversion".into(),
            )),
        }
    };

    match m.side() {
        Side::Left => {
            let mut entries = Vec::new();
            for i in 0..nv {
                for j in 0..nh {
                    if !d.is_defined_at(i * nh + j) {
                        ensure_skippable(i, j)?;
                        continue;
                    }
                    for k in 0..nv {
                        let coeff = d.lin().coeff(k, i * nh + j);
                        if !coeff.is_zero() {
                            entries.push((k * nh + j, i, coeff));
                        }
                    }
                }
            }
            let coaction = LinMap::from_entries(
                TensorShape::of(m.carrier()),
                TensorShape::pair(m.carrier(), u_space),
                entries,
            )?;
            let cross = mixed::dualize_left_factor(m.cross())?;
            BraidedComodule::new(coalg, m.carrier().clone(), coaction, Side::Right, cross)
        }
        Side::Right => {
            let mut entries = Vec::new();
            for j in 0..nh {
                for i in 0..nv {
                    if !d.is_defined_at(j * nv + i) {
                        ensure_skippable(i, j)?;
                        continue;
                    }
                    for k in 0..nv {
                        let coeff = d.lin().coeff(k, j * nv + i);
                        if !coeff.is_zero() {
                            entries.push((j * nv + k, i, coeff));
                        }
                    }
                }
            }
            let coaction = LinMap::from_entries(
                TensorShape::of(m.carrier()),
                TensorShape::pair(u_space, m.carrier()),
                entries,
            )?;
            let cross = mixed::dualize_right_factor(m.cross())?;
            BraidedComodule::new(coalg, m.carrier().clone(), coaction, Side::Left, cross)
        }
    }
}

/// Transcribes a total action into a coaction of the dual, whose coalgebra
/// carries the doubly inverse-braided coproduct. A left module becomes a
/// right comodule and vice versa.
pub fn module_to_comodule(
    m: &BraidedModule,
    u: &DualBialgebra,
) -> Result<BraidedComodule, ModComError> {
    convert_action(m, u, None)
}

/// Like [`module_to_comodule`] for degree-truncated structures: action
/// columns that fall outside the degree window count as zero.
pub fn module_to_comodule_graded(
    m: &BraidedModule,
    u: &DualBialgebra,
    algebra_degrees: &[usize],
    carrier_degrees: &[usize],
    cutoff: usize,
) -> Result<BraidedComodule, ModComError> {
    convert_action(
        m,
        u,
        Some(Grading {
            algebra_degrees,
            carrier_degrees,
            cutoff,
        }),
    )
}

/// Finds the unique right coaction of the dual that reproduces a total
/// left action through the evaluation pairing, by solving the defining
/// linear system instead of transcribing entries.
pub fn solve_right_coaction(m: &BraidedModule) -> Result<LinMap, ModComError> {
    if m.side() != Side::Left {
        return Err(ModComError::Unsupported(
            "the coaction solver expects a left action".into(),
        ));
    }
    let nu = m.action().as_total().ok_or_else(|| {
        ModComError::Unsupported("the coaction solver expects a total action".into())
    })?;
    let nv = m.carrier().dim();
    let nh = m.algebra().space().dim();
    let q = m.cross().psi_inv();

    let mut system = exact_linalg::LinearSystem::new(nv * nh * nv);
    for i in 0..nv {
        for r in 0..nh {
            for l in 0..nv {
                let row = (0..nv).flat_map(|k| {
                    (0..nh).filter_map(move |b| {
                        let coeff = q.coeff(r * nv + l, k * nh + b);
                        if coeff.is_zero() {
                            None
                        } else {
                            Some(((k * nh + b) * nv + i, coeff))
                        }
                    })
                });
                system.push_sparse(row, nu.coeff(l, r * nv + i));
            }
        }
    }
    let solution = match system.solve() {
        SolveResult::Unique(sol) => sol,
        SolveResult::Inconsistent => {
            return Err(ModComError::Inconsistent(
                "no coaction reproduces this action through the pairing".into(),
            ))
        }
        SolveResult::Underdetermined(_) => {
            return Err(ModComError::Inconsistent(
                "the defining system for the coaction is underdetermined".into(),
            ))
        }
    };
    let u_space = m.algebra().space().dual();
    Ok(LinMap::from_entries(
        TensorShape::of(m.carrier()),
        TensorShape::pair(m.carrier(), &u_space),
        solution
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(idx, c)| (idx / nv, idx % nv, c)),
    )?)
}
