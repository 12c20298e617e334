//! Braidings, cross-braidings and their defining checks.

use crate::partial::{chain, compare, PartialMap};
use crate::report::{eq, CheckReport};
use crate::StructureError;
use exact_linalg::{lin_compose, lin_invert, LinError, LinMap, Space, TensorShape};

/// An invertible solution of the Yang–Baxter equation on V⊗V.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Braiding {
    space: Space,
    psi: LinMap,
    psi_inv: LinMap,
}

impl Braiding {
    /// Validates shape, invertibility and the Yang–Baxter equation.
    pub fn new(space: Space, psi: LinMap) -> Result<Braiding, StructureError> {
        let vv = TensorShape::pair(&space, &space);
        if *psi.domain() != vv || *psi.codomain() != vv {
            return Err(LinError::ShapeMismatch(format!(
                "braiding must map {vv} to itself, got {} -> {}",
                psi.domain(),
                psi.codomain()
            ))
            .into());
        }
        let psi_inv = lin_invert(&psi)?;
        let b = Braiding {
            space,
            psi,
            psi_inv,
        };
        let report = b.check();
        if !report.passed() {
            return Err(StructureError::CheckFailed(report));
        }
        Ok(b)
    }

    /// Assembles without running any checks; for diagnostics and
    /// deliberately broken fixtures.
    pub fn from_parts_unchecked(space: Space, psi: LinMap, psi_inv: LinMap) -> Braiding {
        Braiding {
            space,
            psi,
            psi_inv,
        }
    }

    /// The flip braiding v⊗w ↦ w⊗v.
    pub fn flip(space: &Space) -> Braiding {
        let psi = exact_linalg::shape_permutation(&TensorShape::pair(space, space), &[1, 0]);
        Braiding {
            space: space.clone(),
            psi_inv: psi.clone(),
            psi,
        }
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn psi(&self) -> &LinMap {
        &self.psi
    }

    pub fn psi_inv(&self) -> &LinMap {
        &self.psi_inv
    }

    /// The inverse braiding, which satisfies the same axioms.
    pub fn inverse(&self) -> Braiding {
        Braiding {
            space: self.space.clone(),
            psi: self.psi_inv.clone(),
            psi_inv: self.psi.clone(),
        }
    }

    /// The k-th power of the braiding; negative powers use the inverse.
    pub fn power(&self, k: i64) -> LinMap {
        let base = if k >= 0 { &self.psi } else { &self.psi_inv };
        let mut acc = LinMap::identity(self.psi.domain());
        for _ in 0..k.unsigned_abs() {
            acc = lin_compose(base, &acc).expect("braiding powers compose");
        }
        acc
    }

    /// Yang–Baxter plus exactness of the stored inverse.
    pub fn check(&self) -> CheckReport {
        let mut report = CheckReport::new();
        report.push(compare(
            eq::INVERSE,
            format!("psi_inv on {}", self.space),
            &PartialMap::total(lin_compose(&self.psi, &self.psi_inv).expect("same shape")),
            &PartialMap::total(LinMap::identity(self.psi.domain())),
        ));
        report.merge(check_yang_baxter(&self.psi).expect("shape validated"));
        report
    }
}

/// Checks the Yang–Baxter equation for a square map on V⊗V.
pub fn check_yang_baxter(psi: &LinMap) -> Result<CheckReport, LinError> {
    let dom = psi.domain();
    if psi.codomain() != dom || dom.rank() != 2 || dom.factors()[0] != dom.factors()[1] {
        return Err(LinError::ShapeMismatch(format!(
            "Yang-Baxter needs a map on V⊗V, got {} -> {}",
            dom,
            psi.codomain()
        )));
    }
    let v = &dom.factors()[0];
    let id = PartialMap::total(LinMap::identity(&TensorShape::of(v)));
    let p = PartialMap::total(psi.clone());
    let p1 = PartialMap::tensor(&p, &id);
    let p2 = PartialMap::tensor(&id, &p);
    let lhs = chain(&[&p1, &p2, &p1])?;
    let rhs = chain(&[&p2, &p1, &p2])?;
    let mut report = CheckReport::new();
    report.push(compare(eq::YBE, format!("braiding on {v}"), &lhs, &rhs));
    Ok(report)
}

/// Where a cross-braiding came from; downstream constructions insist on
/// the right variant.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Provenance {
    /// Supplied directly.
    Given,
    /// Induced on the dual by dualizing the primal braiding.
    InducedDual,
    /// Induced from the inverse of the primal braiding (the ° variant).
    InducedDualCirc,
    /// Built through the double dual (the • variant).
    DoubleDualBullet,
}

/// An invertible map V⊗W → W⊗V between two (possibly equal) spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossBraiding {
    left: Space,
    right: Space,
    psi: LinMap,
    psi_inv: LinMap,
    provenance: Provenance,
}

impl CrossBraiding {
    pub fn new(
        left: Space,
        right: Space,
        psi: LinMap,
        provenance: Provenance,
    ) -> Result<CrossBraiding, StructureError> {
        let dom = TensorShape::pair(&left, &right);
        let cod = TensorShape::pair(&right, &left);
        if *psi.domain() != dom || *psi.codomain() != cod {
            return Err(LinError::ShapeMismatch(format!(
                "cross-braiding must map {dom} to {cod}, got {} -> {}",
                psi.domain(),
                psi.codomain()
            ))
            .into());
        }
        let psi_inv = lin_invert(&psi)?;
        Ok(CrossBraiding {
            left,
            right,
            psi,
            psi_inv,
            provenance,
        })
    }

    pub fn from_parts_unchecked(
        left: Space,
        right: Space,
        psi: LinMap,
        psi_inv: LinMap,
        provenance: Provenance,
    ) -> CrossBraiding {
        CrossBraiding {
            left,
            right,
            psi,
            psi_inv,
            provenance,
        }
    }

    /// The flip as a cross-braiding.
    pub fn flip(left: &Space, right: &Space) -> CrossBraiding {
        let psi = exact_linalg::shape_permutation(&TensorShape::pair(left, right), &[1, 0]);
        let psi_inv = exact_linalg::shape_permutation(&TensorShape::pair(right, left), &[1, 0]);
        CrossBraiding {
            left: left.clone(),
            right: right.clone(),
            psi,
            psi_inv,
            provenance: Provenance::Given,
        }
    }

    /// A braiding viewed as the cross-braiding of a space with itself.
    pub fn from_braiding(b: &Braiding) -> CrossBraiding {
        CrossBraiding {
            left: b.space().clone(),
            right: b.space().clone(),
            psi: b.psi().clone(),
            psi_inv: b.psi_inv().clone(),
            provenance: Provenance::Given,
        }
    }

    pub fn left_space(&self) -> &Space {
        &self.left
    }

    pub fn right_space(&self) -> &Space {
        &self.right
    }

    pub fn psi(&self) -> &LinMap {
        &self.psi
    }

    pub fn psi_inv(&self) -> &LinMap {
        &self.psi_inv
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// The inverse map W⊗V → V⊗W as a cross-braiding in its own right.
    pub fn inverse(&self) -> CrossBraiding {
        CrossBraiding {
            left: self.right.clone(),
            right: self.left.clone(),
            psi: self.psi_inv.clone(),
            psi_inv: self.psi.clone(),
            provenance: self.provenance,
        }
    }
}

/// Which hexagon to verify for a cross-braiding.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HexSide {
    /// The right space is braided by the left one: hexagon against Ψ_VV.
    LeftVBraided,
    /// The left space is braided by the right one: hexagon against Ψ_WW.
    RightWBraided,
}

/// Verifies the hexagon identity of `x` on the chosen side, against the
/// ambient braidings of the two spaces.
pub fn check_hexagons(
    x: &CrossBraiding,
    side: HexSide,
    left_braiding: &Braiding,
    right_braiding: &Braiding,
) -> Result<CheckReport, LinError> {
    if left_braiding.space() != x.left_space() || right_braiding.space() != x.right_space() {
        return Err(LinError::ShapeMismatch(
            "ambient braidings must live on the cross-braiding's spaces".to_string(),
        ));
    }
    let id_v = PartialMap::total(LinMap::identity(&TensorShape::of(x.left_space())));
    let id_w = PartialMap::total(LinMap::identity(&TensorShape::of(x.right_space())));
    let pvw = PartialMap::total(x.psi().clone());
    let mut report = CheckReport::new();
    let context = format!("{} over {}", x.right_space(), x.left_space());
    match side {
        HexSide::LeftVBraided => {
            let pvv = PartialMap::total(left_braiding.psi().clone());
            let lhs = chain(&[
                &PartialMap::tensor(&pvw, &id_v),
                &PartialMap::tensor(&id_v, &pvw),
                &PartialMap::tensor(&pvv, &id_w),
            ])?;
            let rhs = chain(&[
                &PartialMap::tensor(&id_w, &pvv),
                &PartialMap::tensor(&pvw, &id_v),
                &PartialMap::tensor(&id_v, &pvw),
            ])?;
            report.push(compare(eq::VW, context, &lhs, &rhs));
        }
        HexSide::RightWBraided => {
            let pww = PartialMap::total(right_braiding.psi().clone());
            let lhs = chain(&[
                &PartialMap::tensor(&id_w, &pvw),
                &PartialMap::tensor(&pvw, &id_w),
                &PartialMap::tensor(&id_v, &pww),
            ])?;
            let rhs = chain(&[
                &PartialMap::tensor(&pww, &id_v),
                &PartialMap::tensor(&id_w, &pvw),
                &PartialMap::tensor(&pvw, &id_w),
            ])?;
            report.push(compare(eq::WV, context, &lhs, &rhs));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Verdict;
    use exact_linalg::int;

    fn superline_space() -> Space {
        Space::new("H", vec!["1".to_string(), "x".to_string()])
    }

    fn superline_psi(space: &Space) -> LinMap {
        let hh = TensorShape::pair(space, space);
        LinMap::from_entries(
            hh.clone(),
            hh,
            vec![(0, 0, int(1)), (2, 1, int(1)), (1, 2, int(1)), (3, 3, int(-1))],
        )
        .unwrap()
    }

    #[test]
    fn flip_satisfies_yang_baxter() {
        for dim in 1..=4 {
            let v = Space::with_dim("V", dim);
            let b = Braiding::flip(&v);
            assert!(b.check().all_pass(), "flip on dim {dim}");
        }
    }

    #[test]
    fn signed_flip_satisfies_yang_baxter() {
        let h = superline_space();
        let b = Braiding::new(h.clone(), superline_psi(&h)).unwrap();
        assert!(b.check().all_pass());
    }

    #[test]
    fn perturbed_identity_fails_with_witness() {
        // id plus the nilpotent perturbation e0⊗e1 -> e0⊗e0 stays invertible
        // but breaks Yang-Baxter.
        let v = Space::with_dim("V", 2);
        let vv = TensorShape::pair(&v, &v);
        let psi = LinMap::identity(&vv)
            .add(&LinMap::from_entries(vv.clone(), vv.clone(), vec![(0, 1, int(1))]).unwrap())
            .unwrap();
        let report = check_yang_baxter(&psi).unwrap();
        let entry = report.entry(eq::YBE).unwrap();
        assert_eq!(entry.verdict, Verdict::Fail);
        assert!(entry.witness.is_some());
    }

    #[test]
    fn rectangular_input_is_a_shape_error() {
        let v = Space::with_dim("V", 2);
        let w = Space::with_dim("W", 3);
        let m = LinMap::zero(TensorShape::pair(&v, &w), TensorShape::pair(&w, &v));
        assert!(check_yang_baxter(&m).is_err());
    }

    #[test]
    fn flip_cross_braiding_passes_both_hexagons() {
        let v = Space::with_dim("V", 2);
        let w = Space::with_dim("W", 3);
        let x = CrossBraiding::flip(&v, &w);
        let bv = Braiding::flip(&v);
        let bw = Braiding::flip(&w);
        assert!(check_hexagons(&x, HexSide::LeftVBraided, &bv, &bw).unwrap().all_pass());
        assert!(check_hexagons(&x, HexSide::RightWBraided, &bv, &bw).unwrap().all_pass());
    }

    #[test]
    fn self_braiding_hexagons_reduce_to_yang_baxter() {
        let h = superline_space();
        let b = Braiding::new(h.clone(), superline_psi(&h)).unwrap();
        let x = CrossBraiding::from_braiding(&b);
        assert!(check_hexagons(&x, HexSide::LeftVBraided, &b, &b).unwrap().all_pass());
        assert!(check_hexagons(&x, HexSide::RightWBraided, &b, &b).unwrap().all_pass());
    }

    #[test]
    fn braiding_powers_compose() {
        let h = superline_space();
        let b = Braiding::new(h.clone(), superline_psi(&h)).unwrap();
        // The signed flip squares to the identity.
        assert!(b.power(2).is_identity());
        assert_eq!(b.power(-1), *b.psi_inv());
        assert_eq!(b.power(3), *b.psi());
    }
}
