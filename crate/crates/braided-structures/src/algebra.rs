//! Braided algebras and cross-braiding/multiplication compatibility.

use crate::braiding::{Braiding, CrossBraiding};
use crate::partial::{chain, compare, PartialMap};
use crate::report::{eq, CheckEntry, CheckReport, Verdict};
use crate::{Side, StructureError};
use exact_linalg::{LinError, LinMap, Space, TensorShape, Vect};

/// An associative algebra whose multiplication is compatible with a
/// braiding on the same space. The multiplication may be partial for
/// degree-truncated structures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidedAlgebra {
    braiding: Braiding,
    mult: PartialMap,
    unit: Option<Vect>,
}

impl BraidedAlgebra {
    /// Builds from a total multiplication and runs the full checker.
    pub fn new(
        braiding: Braiding,
        mult: LinMap,
        unit: Option<Vect>,
    ) -> Result<BraidedAlgebra, StructureError> {
        BraidedAlgebra::new_partial(braiding, PartialMap::total(mult), unit)
    }

    /// Builds from a possibly partial multiplication; identities that touch
    /// undefined blocks are skipped, failures still reject.
    pub fn new_partial(
        braiding: Braiding,
        mult: PartialMap,
        unit: Option<Vect>,
    ) -> Result<BraidedAlgebra, StructureError> {
        let h = TensorShape::of(braiding.space());
        let hh = TensorShape::pair(braiding.space(), braiding.space());
        if *mult.domain() != hh || *mult.codomain() != h {
            return Err(LinError::ShapeMismatch(format!(
                "multiplication must map {hh} to {h}, got {} -> {}",
                mult.domain(),
                mult.codomain()
            ))
            .into());
        }
        if let Some(u) = &unit {
            if *u.shape() != h {
                return Err(LinError::ShapeMismatch(format!(
                    "unit must live in {h}, got {}",
                    u.shape()
                ))
                .into());
            }
        }
        let a = BraidedAlgebra {
            braiding,
            mult,
            unit,
        };
        let report = a.check();
        if !report.passed() {
            return Err(StructureError::CheckFailed(report));
        }
        Ok(a)
    }

    pub fn from_parts_unchecked(
        braiding: Braiding,
        mult: PartialMap,
        unit: Option<Vect>,
    ) -> BraidedAlgebra {
        BraidedAlgebra {
            braiding,
            mult,
            unit,
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

    pub fn mult(&self) -> &PartialMap {
        &self.mult
    }

    pub fn unit(&self) -> Option<&Vect> {
        self.unit.as_ref()
    }

    /// The unit as a map from the one-dimensional tensor unit.
    pub fn unit_map(&self) -> Option<LinMap> {
        self.unit.as_ref().map(|u| {
            LinMap::from_basis_images(TensorShape::unit(), self.shape(), |_| u.clone())
                .expect("unit shape validated")
        })
    }

    /// Associativity, unit laws, the four compatibility identities with the
    /// ambient braiding, and the derived product-of-products identity.
    pub fn check(&self) -> CheckReport {
        let mut report = CheckReport::new();
        let id = PartialMap::identity(&self.shape());
        let m = &self.mult;
        let lhs = chain(&[m, &PartialMap::tensor(m, &id)]).expect("assoc shapes");
        let rhs = chain(&[m, &PartialMap::tensor(&id, m)]).expect("assoc shapes");
        report.push(compare(eq::ASSOC, self.space().to_string(), &lhs, &rhs));
        match self.unit_map() {
            Some(u) => {
                let u = PartialMap::total(u);
                let left = chain(&[m, &PartialMap::tensor(&u, &id)]).expect("unit shapes");
                let right = chain(&[m, &PartialMap::tensor(&id, &u)]).expect("unit shapes");
                report.push(compare(eq::UNIT, "left".to_string(), &left, &id));
                report.push(compare(eq::UNIT, "right".to_string(), &right, &id));
            }
            None => report.push(skipped_entry(
                eq::UNIT,
                "no unit present".to_string(),
                self.shape().dim(),
            )),
        }
        let x = CrossBraiding::from_braiding(&self.braiding);
        report.merge(check_mult_compat(&x, Side::Left, self).expect("self-cross shapes agree"));
        let right = check_mult_compat(&x, Side::Right, self).expect("self-cross shapes agree");
        for entry in right.entries() {
            if entry.equation != eq::PMM {
                report.push(entry.clone());
            }
        }
        report
    }
}

pub(crate) fn skipped_entry(
    equation: &'static str,
    context: String,
    skipped: usize,
) -> CheckEntry {
    CheckEntry {
        equation,
        context,
        verdict: Verdict::Skipped,
        checked: 0,
        skipped,
        witness: None,
    }
}

/// Checks that a cross-braiding is compatible with the multiplication of
/// the algebra sitting on the designated side. For a self-braiding this
/// also verifies the derived identity on products of products.
pub fn check_mult_compat(
    x: &CrossBraiding,
    which_side_is_algebra: Side,
    alg: &BraidedAlgebra,
) -> Result<CheckReport, LinError> {
    let (v, w) = (x.left_space(), x.right_space());
    let designated = match which_side_is_algebra {
        Side::Left => v,
        Side::Right => w,
    };
    if designated != alg.space() {
        return Err(LinError::ShapeMismatch(format!(
            "algebra lives on {}, designated side of the cross-braiding is {designated}",
            alg.space()
        )));
    }
    let id_v = PartialMap::identity(&TensorShape::of(v));
    let id_w = PartialMap::identity(&TensorShape::of(w));
    let psi = PartialMap::total(x.psi().clone());
    let m = alg.mult();
    let mut report = CheckReport::new();
    match which_side_is_algebra {
        Side::Left => {
            let lhs = chain(&[&psi, &PartialMap::tensor(m, &id_w)])?;
            let rhs = chain(&[
                &PartialMap::tensor(&id_w, m),
                &PartialMap::tensor(&psi, &id_v),
                &PartialMap::tensor(&id_v, &psi),
            ])?;
            report.push(compare(eq::AWM, format!("{v} past {w}"), &lhs, &rhs));
            match alg.unit_map() {
                Some(u) => {
                    let u = PartialMap::total(u);
                    let lhs = chain(&[&psi, &PartialMap::tensor(&u, &id_w)])?;
                    let rhs = PartialMap::tensor(&id_w, &u);
                    report.push(compare(eq::UNIT_W, format!("{v} past {w}"), &lhs, &rhs));
                }
                None => report.push(skipped_entry(
                    eq::UNIT_W,
                    "no unit present".to_string(),
                    id_w.domain().dim(),
                )),
            }
        }
        Side::Right => {
            let lhs = chain(&[&psi, &PartialMap::tensor(&id_v, m)])?;
            let rhs = chain(&[
                &PartialMap::tensor(m, &id_v),
                &PartialMap::tensor(&id_w, &psi),
                &PartialMap::tensor(&psi, &id_w),
            ])?;
            report.push(compare(eq::VAM, format!("{w} past {v}"), &lhs, &rhs));
            match alg.unit_map() {
                Some(u) => {
                    let u = PartialMap::total(u);
                    let lhs = chain(&[&psi, &PartialMap::tensor(&id_v, &u)])?;
                    let rhs = PartialMap::tensor(&u, &id_v);
                    report.push(compare(eq::V_UNIT, format!("{w} past {v}"), &lhs, &rhs));
                }
                None => report.push(skipped_entry(
                    eq::V_UNIT,
                    "no unit present".to_string(),
                    id_v.domain().dim(),
                )),
            }
        }
    }
    if v == w && x.psi() == alg.braiding().psi() {
        let mm = PartialMap::tensor(m, m);
        let mid = PartialMap::tensor(&PartialMap::tensor(&id_v, &psi), &id_v);
        let lhs = chain(&[&psi, &mm])?;
        let rhs = chain(&[&mm, &mid, &PartialMap::tensor(&psi, &psi), &mid])?;
        report.push(compare(eq::PMM, v.to_string(), &lhs, &rhs));
    }
    Ok(report)
}
