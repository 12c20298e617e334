//! Linear maps with an explicit undefined region.
//!
//! Degree-truncated structures know their multiplication only on inputs
//! whose result stays below the cutoff; everything above is undefined, not
//! zero. A `PartialMap` carries that undefined set of domain basis indices
//! and propagates it through composition and tensoring, so identity checks
//! can skip exactly the basis inputs that would touch missing blocks.

use crate::report::{CheckEntry, Verdict, Witness};
use exact_linalg::{lin_compose, lin_tensor, LinError, LinMap, TensorShape, Vect};
use std::collections::BTreeSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialMap {
    lin: LinMap,
    undefined: BTreeSet<usize>,
}

impl PartialMap {
    /// A map defined on every basis input.
    pub fn total(lin: LinMap) -> PartialMap {
        PartialMap {
            lin,
            undefined: BTreeSet::new(),
        }
    }

    /// The identity on a shape, total.
    pub fn identity(shape: &TensorShape) -> PartialMap {
        PartialMap::total(LinMap::identity(shape))
    }

    /// A map undefined on the given domain indices. Coefficients stored in
    /// undefined columns are dropped; they carry no meaning.
    pub fn with_undefined(lin: LinMap, undefined: BTreeSet<usize>) -> PartialMap {
        let mut lin = lin;
        if !undefined.is_empty() {
            let dom = lin.domain().clone();
            let cod = lin.codomain().clone();
            let entries: Vec<(usize, usize, exact_linalg::Scalar)> = lin
                .entries()
                .filter(|(_, j, _)| !undefined.contains(j))
                .map(|(i, j, c)| (i, j, c.clone()))
                .collect();
            lin = LinMap::from_entries(dom, cod, entries).expect("filtered entries stay in bounds");
        }
        PartialMap { lin, undefined }
    }

    /// Reinterprets the factor lists without touching indices or the
    /// undefined set; total dimensions must match.
    pub fn relabel(
        &self,
        domain: TensorShape,
        codomain: TensorShape,
    ) -> Result<PartialMap, LinError> {
        Ok(PartialMap {
            lin: self.lin.with_shapes(domain, codomain)?,
            undefined: self.undefined.clone(),
        })
    }

    pub fn domain(&self) -> &TensorShape {
        self.lin.domain()
    }

    pub fn codomain(&self) -> &TensorShape {
        self.lin.codomain()
    }

    pub fn is_total(&self) -> bool {
        self.undefined.is_empty()
    }

    /// The underlying total map, if there is no undefined region.
    pub fn as_total(&self) -> Option<&LinMap> {
        self.is_total().then_some(&self.lin)
    }

    /// The coefficient table. Undefined columns read as zero; consult
    /// [`PartialMap::undefined`] before trusting them.
    pub fn lin(&self) -> &LinMap {
        &self.lin
    }

    pub fn undefined(&self) -> &BTreeSet<usize> {
        &self.undefined
    }

    pub fn is_defined_at(&self, index: usize) -> bool {
        !self.undefined.contains(&index)
    }

    /// Applies the map; `None` if the vector meets the undefined region.
    pub fn apply(&self, v: &Vect) -> Result<Option<Vect>, LinError> {
        if v.support().any(|i| self.undefined.contains(&i)) {
            if *v.shape() != *self.lin.domain() {
                return Err(LinError::ShapeMismatch(format!(
                    "partial map on {} applied to vector in {}",
                    self.lin.domain(),
                    v.shape()
                )));
            }
            return Ok(None);
        }
        self.lin.apply(v).map(Some)
    }

    /// Composition `g∘f`; a column is undefined when `f` is undefined there
    /// or the image of that basis vector meets the undefined region of `g`.
    pub fn compose(g: &PartialMap, f: &PartialMap) -> Result<PartialMap, LinError> {
        let lin = lin_compose(&g.lin, &f.lin)?;
        let mut undefined = f.undefined.clone();
        if !g.undefined.is_empty() {
            for j in 0..f.lin.domain().dim() {
                if undefined.contains(&j) {
                    continue;
                }
                if f.lin.column(j).support().any(|k| g.undefined.contains(&k)) {
                    undefined.insert(j);
                }
            }
        }
        Ok(PartialMap::with_undefined(lin, undefined))
    }

    /// Tensor product; a combined column is undefined when either factor
    /// column is.
    pub fn tensor(f: &PartialMap, g: &PartialMap) -> PartialMap {
        let lin = lin_tensor(&f.lin, &g.lin);
        let gdim = g.lin.domain().dim();
        let mut undefined = BTreeSet::new();
        if !f.undefined.is_empty() || !g.undefined.is_empty() {
            for jf in 0..f.lin.domain().dim() {
                for jg in 0..gdim {
                    if f.undefined.contains(&jf) || g.undefined.contains(&jg) {
                        undefined.insert(jf * gdim + jg);
                    }
                }
            }
        }
        PartialMap::with_undefined(lin, undefined)
    }
}

/// Composes a chain of maps right to left: `chain([h, g, f]) = h∘g∘f`.
pub fn chain(maps: &[&PartialMap]) -> Result<PartialMap, LinError> {
    let (last, rest) = maps.split_last().expect("chain of at least one map");
    let mut acc = (*last).clone();
    for m in rest.iter().rev() {
        acc = PartialMap::compose(m, &acc)?;
    }
    Ok(acc)
}

/// Tensors a sequence of maps left to right.
pub fn tensor_all(maps: &[&PartialMap]) -> PartialMap {
    let (first, rest) = maps.split_first().expect("tensor of at least one map");
    let mut acc = (*first).clone();
    for m in rest {
        acc = PartialMap::tensor(&acc, m);
    }
    acc
}

/// Compares two composite maps column by column and produces a report
/// entry. Columns undefined on either side are skipped; the verdict is
/// `Pass` only when nothing was skipped and nothing differed.
pub fn compare(equation: &'static str, context: impl Into<String>, lhs: &PartialMap, rhs: &PartialMap) -> CheckEntry {
    assert_eq!(
        lhs.domain().dim(),
        rhs.domain().dim(),
        "comparing maps with different domains: {} vs {}",
        lhs.domain(),
        rhs.domain()
    );
    assert_eq!(
        lhs.codomain().dim(),
        rhs.codomain().dim(),
        "comparing maps with different codomains: {} vs {}",
        lhs.codomain(),
        rhs.codomain()
    );
    let mut checked = 0;
    let mut skipped = 0;
    let mut witness = None;
    for j in 0..lhs.domain().dim() {
        if !lhs.is_defined_at(j) || !rhs.is_defined_at(j) {
            skipped += 1;
            continue;
        }
        checked += 1;
        if witness.is_some() {
            continue;
        }
        let a = lhs.lin().column(j);
        let b = rhs.lin().column(j);
        if a != b {
            let output = a
                .support()
                .chain(b.support())
                .find(|&i| a.coeff(i) != b.coeff(i))
                .expect("differing columns have a differing coefficient");
            witness = Some(Witness {
                input: j,
                output,
                lhs: a.coeff(output),
                rhs: b.coeff(output),
                input_label: lhs.domain().label(j),
                output_label: lhs.codomain().label(output),
            });
        }
    }
    let verdict = if witness.is_some() {
        Verdict::Fail
    } else if skipped > 0 {
        Verdict::Skipped
    } else {
        Verdict::Pass
    };
    CheckEntry {
        equation,
        context: context.into(),
        verdict,
        checked,
        skipped,
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_linalg::{int, Space};

    fn line(dim: usize) -> TensorShape {
        TensorShape::of(&Space::with_dim("V", dim))
    }

    #[test]
    fn undefined_columns_poison_composition() {
        let v = line(2);
        // f: e0 -> e1, e1 undefined; g: e1 undefined.
        let f = PartialMap::with_undefined(
            LinMap::from_entries(v.clone(), v.clone(), vec![(1, 0, int(1))]).unwrap(),
            [1].into(),
        );
        let g = PartialMap::with_undefined(LinMap::zero(v.clone(), v.clone()), [1].into());
        let gf = PartialMap::compose(&g, &f).unwrap();
        // Column 0 feeds e1, which g does not define; column 1 was already undefined.
        assert_eq!(gf.undefined(), &[0, 1].into());
    }

    #[test]
    fn zero_coefficient_does_not_touch_undefined_region() {
        let v = line(2);
        let f = PartialMap::total(LinMap::from_entries(v.clone(), v.clone(), vec![(0, 0, int(1))]).unwrap());
        let g = PartialMap::with_undefined(
            LinMap::from_entries(v.clone(), v.clone(), vec![(0, 0, int(1))]).unwrap(),
            [1].into(),
        );
        // f maps e0 to e0 and e1 to 0; the zero image never meets g's gap.
        let gf = PartialMap::compose(&g, &f).unwrap();
        assert!(gf.is_total());
    }

    #[test]
    fn compare_reports_skips_and_witnesses() {
        let v = line(2);
        let id = PartialMap::total(LinMap::identity(&v));
        let partial_id = PartialMap::with_undefined(LinMap::identity(&v), [1].into());
        let entry = compare(crate::report::eq::YBE, "", &id, &partial_id);
        assert_eq!(entry.verdict, Verdict::Skipped);
        assert_eq!((entry.checked, entry.skipped), (1, 1));

        let neg = PartialMap::total(LinMap::identity(&v).scale(&int(-1)));
        let entry = compare(crate::report::eq::YBE, "", &id, &neg);
        assert_eq!(entry.verdict, Verdict::Fail);
        let w = entry.witness.unwrap();
        assert_eq!((w.input, w.output), (0, 0));
        assert_eq!(w.lhs, int(1));
        assert_eq!(w.rhs, int(-1));
    }
}
