//! Braided coalgebras and cross-braiding/comultiplication compatibility.

use crate::braiding::{Braiding, CrossBraiding};
use crate::partial::{chain, compare, PartialMap};
use crate::report::{eq, CheckReport};
use crate::{Side, StructureError};
use exact_linalg::{LinError, LinMap, Space, TensorShape};

/// A coassociative counital coalgebra whose comultiplication is compatible
/// with a braiding on the same space. The comultiplication may be partial
/// for duals of degree-truncated structures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidedCoalgebra {
    braiding: Braiding,
    comult: PartialMap,
    counit: LinMap,
}

impl BraidedCoalgebra {
    /// Builds from a total comultiplication and runs the full checker.
    pub fn new(
        braiding: Braiding,
        comult: LinMap,
        counit: LinMap,
    ) -> Result<BraidedCoalgebra, StructureError> {
        BraidedCoalgebra::new_partial(braiding, PartialMap::total(comult), counit)
    }

    pub fn new_partial(
        braiding: Braiding,
        comult: PartialMap,
        counit: LinMap,
    ) -> Result<BraidedCoalgebra, StructureError> {
        let h = TensorShape::of(braiding.space());
        let hh = TensorShape::pair(braiding.space(), braiding.space());
        if *comult.domain() != h || *comult.codomain() != hh {
            return Err(LinError::ShapeMismatch(format!(
                "comultiplication must map {h} to {hh}, got {} -> {}",
                comult.domain(),
                comult.codomain()
            ))
            .into());
        }
        if *counit.domain() != h || *counit.codomain() != TensorShape::unit() {
            return Err(LinError::ShapeMismatch(format!(
                "counit must map {h} to the scalars, got {} -> {}",
                counit.domain(),
                counit.codomain()
            ))
            .into());
        }
        let c = BraidedCoalgebra {
            braiding,
            comult,
            counit,
        };
        let report = c.check();
        if !report.passed() {
            return Err(StructureError::CheckFailed(report));
        }
        Ok(c)
    }

    pub fn from_parts_unchecked(
        braiding: Braiding,
        comult: PartialMap,
        counit: LinMap,
    ) -> BraidedCoalgebra {
        BraidedCoalgebra {
            braiding,
            comult,
            counit,
        }
    }

    pub fn space(&self) -> &Space {
        self.braiding.space()
    }

    pub fn shape(&self) -> TensorShape {
        TensorShape::of(self.space())
    }

    pub fn braiding(&self) -> &Braiding {
        &self.braiding
    }

    pub fn comult(&self) -> &PartialMap {
        &self.comult
    }

    pub fn counit(&self) -> &LinMap {
        &self.counit
    }

    /// Coassociativity, counit laws, the compatibility identities with the
    /// ambient braiding, and the derived coproduct-of-coproducts identity.
    pub fn check(&self) -> CheckReport {
        let mut report = CheckReport::new();
        let id = PartialMap::identity(&self.shape());
        let d = &self.comult;
        let lhs = chain(&[&PartialMap::tensor(d, &id), d]).expect("coassoc shapes");
        let rhs = chain(&[&PartialMap::tensor(&id, d), d]).expect("coassoc shapes");
        report.push(compare(eq::COASSOC, self.space().to_string(), &lhs, &rhs));
        let e = PartialMap::total(self.counit.clone());
        let left = chain(&[&PartialMap::tensor(&e, &id), d]).expect("counit shapes");
        let right = chain(&[&PartialMap::tensor(&id, &e), d]).expect("counit shapes");
        report.push(compare(eq::COUNIT, "left".to_string(), &left, &id));
        report.push(compare(eq::COUNIT, "right".to_string(), &right, &id));
        let x = CrossBraiding::from_braiding(&self.braiding);
        report.merge(
            check_comult_compat(&x, Side::Left, self).expect("self-cross shapes agree"),
        );
        let right = check_comult_compat(&x, Side::Right, self).expect("self-cross shapes agree");
        for entry in right.entries() {
            if entry.equation != eq::PDD {
                report.push(entry.clone());
            }
        }
        report
    }
}

/// Checks that a cross-braiding is compatible with the comultiplication of
/// the coalgebra sitting on the designated side. For a self-braiding this
/// also verifies the derived identity on coproducts of coproducts.
pub fn check_comult_compat(
    x: &CrossBraiding,
    which_side_is_coalgebra: Side,
    coalg: &BraidedCoalgebra,
) -> Result<CheckReport, LinError> {
    let (v, w) = (x.left_space(), x.right_space());
    let designated = match which_side_is_coalgebra {
        Side::Left => v,
        Side::Right => w,
    };
    if designated != coalg.space() {
        return Err(LinError::ShapeMismatch(format!(
            "coalgebra lives on {}, designated side of the cross-braiding is {designated}",
            coalg.space()
        )));
    }
    let id_v = PartialMap::identity(&TensorShape::of(v));
    let id_w = PartialMap::identity(&TensorShape::of(w));
    let psi = PartialMap::total(x.psi().clone());
    let d = coalg.comult();
    let e = PartialMap::total(coalg.counit().clone());
    let mut report = CheckReport::new();
    match which_side_is_coalgebra {
        Side::Left => {
            let lhs = chain(&[&PartialMap::tensor(&id_w, d), &psi])?;
            let rhs = chain(&[
                &PartialMap::tensor(&psi, &id_v),
                &PartialMap::tensor(&id_v, &psi),
                &PartialMap::tensor(d, &id_w),
            ])?;
            report.push(compare(eq::PHW, format!("{v} past {w}"), &lhs, &rhs));
            let lhs = chain(&[&PartialMap::tensor(&id_w, &e), &psi])?;
            let rhs = PartialMap::tensor(&e, &id_w);
            report.push(compare(eq::PHW, format!("counit of {v}"), &lhs, &rhs));
        }
        Side::Right => {
            let lhs = chain(&[&PartialMap::tensor(d, &id_v), &psi])?;
            let rhs = chain(&[
                &PartialMap::tensor(&id_w, &psi),
                &PartialMap::tensor(&psi, &id_w),
                &PartialMap::tensor(&id_v, d),
            ])?;
            report.push(compare(eq::PVH, format!("{w} past {v}"), &lhs, &rhs));
            let lhs = chain(&[&PartialMap::tensor(&e, &id_v), &psi])?;
            let rhs = PartialMap::tensor(&id_v, &e);
            report.push(compare(eq::PVH, format!("counit of {w}"), &lhs, &rhs));
        }
    }
    if v == w && x.psi() == coalg.braiding().psi() {
        let dd = PartialMap::tensor(d, d);
        let mid = PartialMap::tensor(&PartialMap::tensor(&id_v, &psi), &id_v);
        let lhs = chain(&[&dd, &psi])?;
        let rhs = chain(&[&mid, &PartialMap::tensor(&psi, &psi), &mid, &dd])?;
        report.push(compare(eq::PDD, v.to_string(), &lhs, &rhs));
    }
    Ok(report)
}
