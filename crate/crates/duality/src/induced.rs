//! The five braidings a braiding on H induces on and against its dual.

use braided_structures::{
    check_hexagons, eq, Braiding, CheckEntry, CheckReport, CrossBraiding, HexSide, Provenance,
    StructureError, Verdict, Witness,
};
use exact_linalg::{lin_compose, LinMap, Scalar, Space, TensorShape};

use crate::{DualSpace, DualityError};

/// The braiding on the dual of H together with the four mixed braidings
/// that move dual vectors past primal ones.
#[derive(Clone, Debug)]
pub struct InducedBraidings {
    primal: Braiding,
    dual: DualSpace,
    psi_uu: Braiding,
    psi_uh: CrossBraiding,
    psi_uh_circ: CrossBraiding,
    psi_hu: CrossBraiding,
    psi_hu_circ: CrossBraiding,
}

/// Both tensor legs dualized: the coefficient on e^j⊗e^k against input
/// e^r⊗e^s is the source coefficient on e_s⊗e_r against e_k⊗e_j.
fn both_legs_dual(src: &LinMap, uu: &TensorShape, n: usize) -> LinMap {
    LinMap::from_entries(
        uu.clone(),
        uu.clone(),
        src.entries().map(|(out, inp, c)| {
            let (o1, o2) = (out / n, out % n);
            let (i1, i2) = (inp / n, inp % n);
            (i2 * n + i1, o2 * n + o1, c.clone())
        }),
    )
    .expect("transposed entries stay in range")
}

/// Dual-past-primal leg swap: source entry on (out₁,out₂) against (in₁,in₂)
/// lands on output (out₂,in₂) against input (out₁,in₁).
fn dual_past_primal(src: &LinMap, dom: &TensorShape, cod: &TensorShape, n: usize) -> LinMap {
    LinMap::from_entries(
        dom.clone(),
        cod.clone(),
        src.entries().map(|(out, inp, c)| {
            let (o1, o2) = (out / n, out % n);
            let (i1, i2) = (inp / n, inp % n);
            (o2 * n + i2, o1 * n + i1, c.clone())
        }),
    )
    .expect("transposed entries stay in range")
}

/// Primal-past-dual leg swap: source entry on (out₁,out₂) against (in₁,in₂)
/// lands on output (in₁,out₁) against input (in₂,out₂).
fn primal_past_dual(src: &LinMap, dom: &TensorShape, cod: &TensorShape, n: usize) -> LinMap {
    LinMap::from_entries(
        dom.clone(),
        cod.clone(),
        src.entries().map(|(out, inp, c)| {
            let (o1, o2) = (out / n, out % n);
            let (i1, i2) = (inp / n, inp % n);
            (i1 * n + o1, i2 * n + o2, c.clone())
        }),
    )
    .expect("transposed entries stay in range")
}

/// Packages a cross braiding whose inverse candidate comes from applying the
/// same index pattern to the other power of the primal braiding. That guess
/// is only checked, not assumed; a wrong guess falls back to dense inversion.
fn cross_from_candidate(
    left: &Space,
    right: &Space,
    psi: LinMap,
    candidate_inv: LinMap,
    provenance: Provenance,
    what: &str,
) -> Result<CrossBraiding, DualityError> {
    let forward = lin_compose(&candidate_inv, &psi).expect("inverse candidate shapes agree");
    let backward = lin_compose(&psi, &candidate_inv).expect("inverse candidate shapes agree");
    if forward.is_identity() && backward.is_identity() {
        return Ok(CrossBraiding::from_parts_unchecked(
            left.clone(),
            right.clone(),
            psi,
            candidate_inv,
            provenance,
        ));
    }
    CrossBraiding::new(left.clone(), right.clone(), psi, provenance).map_err(|e| match e {
        StructureError::Lin(_) => DualityError::NotClosed(format!(
            "the {what} braiding between {} and {} is singular",
            left.name(),
            right.name()
        )),
        other => DualityError::Structure(other),
    })
}

/// Builds all five induced braidings and verifies them: the braiding on the
/// dual is run through the full braiding checks, every map is compared with
/// its defining pairing identity, and the mixed ones through both hexagons.
pub fn induce_dual_braidings(h: &Braiding) -> Result<InducedBraidings, DualityError> {
    let primal_space = h.space().clone();
    let dual = DualSpace::of(&primal_space);
    let u = dual.space().clone();
    let n = primal_space.dim();
    let p = h.psi();
    let q = h.psi_inv();

    let uu = TensorShape::pair(&u, &u);
    let uh = TensorShape::pair(&u, &primal_space);
    let hu = TensorShape::pair(&primal_space, &u);

    let psi_uu = Braiding::from_parts_unchecked(
        u.clone(),
        both_legs_dual(p, &uu, n),
        both_legs_dual(q, &uu, n),
    );

    let psi_uh = cross_from_candidate(
        &u,
        &primal_space,
        dual_past_primal(p, &uh, &hu, n),
        primal_past_dual(q, &hu, &uh, n),
        Provenance::InducedDual,
        "dual-past-primal",
    )?;
    let psi_uh_circ = cross_from_candidate(
        &u,
        &primal_space,
        dual_past_primal(q, &uh, &hu, n),
        primal_past_dual(p, &hu, &uh, n),
        Provenance::InducedDualCirc,
        "dual-past-primal inverse-variant",
    )?;
    let psi_hu = cross_from_candidate(
        &primal_space,
        &u,
        primal_past_dual(p, &hu, &uh, n),
        dual_past_primal(q, &uh, &hu, n),
        Provenance::InducedDual,
        "primal-past-dual",
    )?;
    let psi_hu_circ = cross_from_candidate(
        &primal_space,
        &u,
        primal_past_dual(q, &hu, &uh, n),
        dual_past_primal(p, &uh, &hu, n),
        Provenance::InducedDualCirc,
        "primal-past-dual inverse-variant",
    )?;

    let induced = InducedBraidings {
        primal: h.clone(),
        dual,
        psi_uu,
        psi_uh,
        psi_uh_circ,
        psi_hu,
        psi_hu_circ,
    };
    let report = induced.check();
    if !report.passed() {
        return Err(StructureError::CheckFailed(report).into());
    }
    Ok(induced)
}

impl InducedBraidings {
    pub fn primal(&self) -> &Braiding {
        &self.primal
    }

    pub fn dual(&self) -> &DualSpace {
        &self.dual
    }

    /// The braiding of the dual space against itself.
    pub fn psi_uu(&self) -> &Braiding {
        &self.psi_uu
    }

    /// Dual past primal, induced from the primal braiding.
    pub fn psi_uh(&self) -> &CrossBraiding {
        &self.psi_uh
    }

    /// Dual past primal, induced from the inverse of the primal braiding.
    pub fn psi_uh_circ(&self) -> &CrossBraiding {
        &self.psi_uh_circ
    }

    /// Primal past dual, induced from the primal braiding.
    pub fn psi_hu(&self) -> &CrossBraiding {
        &self.psi_hu
    }

    /// Primal past dual, induced from the inverse of the primal braiding.
    pub fn psi_hu_circ(&self) -> &CrossBraiding {
        &self.psi_hu_circ
    }

    /// Full verification: defining pairing identities for all five maps,
    /// the leg-exchange identities tying them together, braiding axioms on
    /// the dual, and both hexagons for each mixed braiding.
    pub fn check(&self) -> CheckReport {
        let n = self.primal.space().dim();
        let p = self.primal.psi();
        let q = self.primal.psi_inv();
        let m = self.psi_uu.psi();
        let m_inv = self.psi_uu.psi_inv();
        let x = self.psi_uh.psi();
        let xc = self.psi_uh_circ.psi();
        let y = self.psi_hu.psi();
        let yc = self.psi_hu_circ.psi();
        let u_labels = self.dual.space().labels();
        let h_labels = self.primal.space().labels();

        // Evaluated at dual pair (r,s) and primal pair (a,b). The closures
        // below read the coefficient each side of an identity assigns to
        // that quadruple.
        let quad = |lhs: &dyn Fn(usize, usize, usize, usize) -> Scalar,
                    rhs: &dyn Fn(usize, usize, usize, usize) -> Scalar,
                    equation: &'static str,
                    context: &str| {
            let mut witness = None;
            'scan: for r in 0..n {
                for s in 0..n {
                    for a in 0..n {
                        for b in 0..n {
                            let lv = lhs(r, s, a, b);
                            let rv = rhs(r, s, a, b);
                            if lv != rv {
                                witness = Some(Witness {
                                    input: a * n + b,
                                    output: r * n + s,
                                    lhs: lv,
                                    rhs: rv,
                                    input_label: format!("{}⊗{}", h_labels[a], h_labels[b]),
                                    output_label: format!("{}⊗{}", u_labels[r], u_labels[s]),
                                });
                                break 'scan;
                            }
                        }
                    }
                }
            }
            CheckEntry {
                equation,
                context: context.to_string(),
                verdict: if witness.is_none() {
                    Verdict::Pass
                } else {
                    Verdict::Fail
                },
                checked: n * n * n * n,
                skipped: 0,
                witness,
            }
        };

        let mut report = CheckReport::new();
        report.push(quad(
            &|r, s, a, b| m.coeff(b * n + a, r * n + s),
            &|r, s, a, b| p.coeff(s * n + r, a * n + b),
            eq::UU,
            "both legs dualized",
        ));
        report.push(quad(
            &|r, s, a, b| x.coeff(r * n + b, s * n + a),
            &|r, s, a, b| p.coeff(s * n + r, a * n + b),
            eq::PSIHH,
            "dual past primal",
        ));
        report.push(quad(
            &|r, s, a, b| xc.coeff(r * n + b, s * n + a),
            &|r, s, a, b| q.coeff(s * n + r, a * n + b),
            eq::PSIHH_CIRC,
            "dual past primal, inverse variant",
        ));
        report.push(quad(
            &|r, s, a, b| y.coeff(a * n + s, b * n + r),
            &|r, s, a, b| p.coeff(s * n + r, a * n + b),
            eq::PHU,
            "primal past dual",
        ));
        report.push(quad(
            &|r, s, a, b| yc.coeff(a * n + s, b * n + r),
            &|r, s, a, b| q.coeff(s * n + r, a * n + b),
            eq::PHU,
            "primal past dual, inverse variant",
        ));
        report.push(quad(
            &|r, s, a, b| m.coeff(b * n + a, r * n + s),
            &|r, s, a, b| x.coeff(r * n + b, s * n + a),
            eq::PHH_ID,
            "dual pair form against the mixed form",
        ));
        report.push(quad(
            &|r, s, a, b| x.coeff(r * n + b, s * n + a),
            &|r, s, a, b| y.coeff(a * n + s, b * n + r),
            eq::PHH_ID,
            "the two mixed forms agree",
        ));
        report.push(quad(
            &|r, s, a, b| m_inv.coeff(b * n + a, r * n + s),
            &|r, s, a, b| xc.coeff(r * n + b, s * n + a),
            eq::CPHH,
            "dual pair form against the mixed form",
        ));
        report.push(quad(
            &|r, s, a, b| xc.coeff(r * n + b, s * n + a),
            &|r, s, a, b| yc.coeff(a * n + s, b * n + r),
            eq::CPHH,
            "the two mixed forms agree",
        ));
        report.push(quad(
            &|r, s, a, b| x.coeff(r * n + b, s * n + a),
            &|r, s, a, b| m.coeff(b * n + a, r * n + s),
            eq::PHCPH,
            "output leg in the dual space",
        ));
        report.push(quad(
            &|r, s, a, b| x.coeff(r * n + b, s * n + a),
            &|r, s, a, b| p.coeff(s * n + r, a * n + b),
            eq::PHCPH,
            "output leg in the primal space",
        ));
        report.push(quad(
            &|r, s, a, b| xc.coeff(r * n + b, s * n + a),
            &|r, s, a, b| m_inv.coeff(b * n + a, r * n + s),
            eq::OPHCPH,
            "output leg in the dual space",
        ));
        report.push(quad(
            &|r, s, a, b| xc.coeff(r * n + b, s * n + a),
            &|r, s, a, b| q.coeff(s * n + r, a * n + b),
            eq::OPHCPH,
            "output leg in the primal space",
        ));

        report.merge(self.psi_uu.check().prefixed("dual braiding"));

        for (x, label) in [
            (&self.psi_uh, "dual past primal"),
            (&self.psi_uh_circ, "dual past primal, inverse variant"),
        ] {
            for side in [HexSide::LeftVBraided, HexSide::RightWBraided] {
                report.merge(
                    check_hexagons(x, side, &self.psi_uu, &self.primal)
                        .expect("induced shapes agree")
                        .prefixed(label),
                );
            }
        }
        for (x, label) in [
            (&self.psi_hu, "primal past dual"),
            (&self.psi_hu_circ, "primal past dual, inverse variant"),
        ] {
            for side in [HexSide::LeftVBraided, HexSide::RightWBraided] {
                report.merge(
                    check_hexagons(x, side, &self.primal, &self.psi_uu)
                        .expect("induced shapes agree")
                        .prefixed(label),
                );
            }
        }
        report
    }
}
