//! Sparse vectors and linear maps over tensor shapes.

use crate::solve::invert_dense;
use crate::{int, Scalar, TensorShape};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("singular map: {0}")]
    Singular(String),
}

/// A sparse vector in a tensor shape. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Vect {
    shape: TensorShape,
    coeffs: BTreeMap<usize, Scalar>,
}

impl Vect {
    pub fn zero(shape: &TensorShape) -> Vect {
        Vect {
            shape: shape.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(shape: &TensorShape, index: usize) -> Vect {
        assert!(index < shape.dim(), "basis index out of range");
        let mut coeffs = BTreeMap::new();
        coeffs.insert(index, int(1));
        Vect {
            shape: shape.clone(),
            coeffs,
        }
    }

    /// The canonical basis vector of the ground field.
    pub fn one() -> Vect {
        Vect::basis(&TensorShape::unit(), 0)
    }

    pub fn from_coeffs(
        shape: &TensorShape,
        coeffs: impl IntoIterator<Item = (usize, Scalar)>,
    ) -> Vect {
        let mut v = Vect::zero(shape);
        for (i, c) in coeffs {
            v.add_to(i, c);
        }
        v
    }

    pub fn shape(&self) -> &TensorShape {
        &self.shape
    }

    pub fn coeff(&self, index: usize) -> Scalar {
        self.coeffs.get(&index).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_to(&mut self, index: usize, c: Scalar) {
        assert!(index < self.shape.dim(), "coefficient index out of range");
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(index).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&index);
        }
    }

    pub fn add(&self, other: &Vect) -> Result<Vect, LinError> {
        if self.shape != other.shape {
            return Err(LinError::ShapeMismatch(format!(
                "cannot add vector in {} to vector in {}",
                other.shape, self.shape
            )));
        }
        let mut out = self.clone();
        for (i, c) in other.iter() {
            out.add_to(i, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Vect) -> Result<Vect, LinError> {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> Vect {
        if s.is_zero() {
            return Vect::zero(&self.shape);
        }
        Vect {
            shape: self.shape.clone(),
            coeffs: self.coeffs.iter().map(|(&i, c)| (i, c * s)).collect(),
        }
    }

    pub fn tensor(&self, other: &Vect) -> Vect {
        let shape = self.shape.concat(&other.shape);
        let rdim = other.shape.dim();
        let mut coeffs = BTreeMap::new();
        for (i, a) in self.iter() {
            for (j, b) in other.iter() {
                coeffs.insert(i * rdim + j, a * b);
            }
        }
        Vect { shape, coeffs }
    }
}

impl fmt::Display for Vect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .iter()
            .map(|(i, c)| format!("{}·{}", crate::format_scalar(c), self.shape.label(i)))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// A linear map between tensor shapes, stored column-sparse: for each
/// domain basis index the image vector's nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinMap {
    domain: TensorShape,
    codomain: TensorShape,
    cols: BTreeMap<usize, BTreeMap<usize, Scalar>>,
}

impl LinMap {
    pub fn zero(domain: TensorShape, codomain: TensorShape) -> LinMap {
        LinMap {
            domain,
            codomain,
            cols: BTreeMap::new(),
        }
    }

    pub fn identity(shape: &TensorShape) -> LinMap {
        let mut m = LinMap::zero(shape.clone(), shape.clone());
        for i in 0..shape.dim() {
            m.set(i, i, int(1));
        }
        m
    }

    /// Builds a map from `(out_index, in_index, scalar)` triples. Indices are
    /// bounds-checked; repeated positions accumulate; zeros are dropped.
    pub fn from_entries(
        domain: TensorShape,
        codomain: TensorShape,
        entries: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<LinMap, LinError> {
        let mut m = LinMap::zero(domain, codomain);
        for (out, inp, c) in entries {
            if out >= m.codomain.dim() || inp >= m.domain.dim() {
                return Err(LinError::ShapeMismatch(format!(
                    "entry ({out}, {inp}) out of bounds for {} -> {} ({}x{})",
                    m.domain,
                    m.codomain,
                    m.codomain.dim(),
                    m.domain.dim()
                )));
            }
            m.add_entry(out, inp, c);
        }
        Ok(m)
    }

    /// Builds a map by giving the image of every domain basis vector.
    pub fn from_basis_images(
        domain: TensorShape,
        codomain: TensorShape,
        image: impl Fn(usize) -> Vect,
    ) -> Result<LinMap, LinError> {
        let mut m = LinMap::zero(domain.clone(), codomain.clone());
        for j in 0..domain.dim() {
            let v = image(j);
            if *v.shape() != codomain {
                return Err(LinError::ShapeMismatch(format!(
                    "image of basis vector {j} lies in {}, expected {}",
                    v.shape(),
                    codomain
                )));
            }
            for (i, c) in v.iter() {
                m.add_entry(i, j, c.clone());
            }
        }
        Ok(m)
    }

    pub(crate) fn set(&mut self, out: usize, inp: usize, c: Scalar) {
        if c.is_zero() {
            if let Some(col) = self.cols.get_mut(&inp) {
                col.remove(&out);
                if col.is_empty() {
                    self.cols.remove(&inp);
                }
            }
            return;
        }
        self.cols.entry(inp).or_default().insert(out, c);
    }

    fn add_entry(&mut self, out: usize, inp: usize, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let col = self.cols.entry(inp).or_default();
        let entry = col.entry(out).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            col.remove(&out);
            if col.is_empty() {
                self.cols.remove(&inp);
            }
        }
    }

    pub fn domain(&self) -> &TensorShape {
        &self.domain
    }

    pub fn codomain(&self) -> &TensorShape {
        &self.codomain
    }

    pub fn coeff(&self, out: usize, inp: usize) -> Scalar {
        self.cols
            .get(&inp)
            .and_then(|col| col.get(&out))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// Iterates stored entries as `(out_index, in_index, scalar)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.cols
            .iter()
            .flat_map(|(&inp, col)| col.iter().map(move |(&out, c)| (out, inp, c)))
    }

    pub fn nnz(&self) -> usize {
        self.cols.values().map(BTreeMap::len).sum()
    }

    /// The image of the `j`-th domain basis vector.
    pub fn column(&self, j: usize) -> Vect {
        assert!(j < self.domain.dim(), "column index out of range");
        Vect {
            shape: self.codomain.clone(),
            coeffs: self.cols.get(&j).cloned().unwrap_or_default(),
        }
    }

    pub fn apply(&self, v: &Vect) -> Result<Vect, LinError> {
        if *v.shape() != self.domain {
            return Err(LinError::ShapeMismatch(format!(
                "map {} -> {} applied to vector in {}",
                self.domain,
                self.codomain,
                v.shape()
            )));
        }
        let mut out = Vect::zero(&self.codomain);
        for (j, c) in v.iter() {
            if let Some(col) = self.cols.get(&j) {
                for (&i, a) in col {
                    out.add_to(i, a * c);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &LinMap) -> Result<LinMap, LinError> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(LinError::ShapeMismatch(
                "cannot add maps with different shapes".to_string(),
            ));
        }
        let mut out = self.clone();
        for (i, j, c) in other.entries() {
            out.add_entry(i, j, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &LinMap) -> Result<LinMap, LinError> {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> LinMap {
        if s.is_zero() {
            return LinMap::zero(self.domain.clone(), self.codomain.clone());
        }
        let mut out = LinMap::zero(self.domain.clone(), self.codomain.clone());
        for (i, j, c) in self.entries() {
            out.set(i, j, c * s);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.domain == self.codomain && *self == LinMap::identity(&self.domain)
    }

    /// Relabels domain and codomain without touching coefficients. The new
    /// shapes must have the same total dimensions.
    pub fn with_shapes(&self, domain: TensorShape, codomain: TensorShape) -> Result<LinMap, LinError> {
        if domain.dim() != self.domain.dim() || codomain.dim() != self.codomain.dim() {
            return Err(LinError::ShapeMismatch(format!(
                "cannot reshape {}x{} map to {}x{}",
                self.codomain.dim(),
                self.domain.dim(),
                codomain.dim(),
                domain.dim()
            )));
        }
        Ok(LinMap {
            domain,
            codomain,
            cols: self.cols.clone(),
        })
    }
}

impl fmt::Display for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} -> {} ({} entries)",
            self.domain,
            self.codomain,
            self.nnz()
        )
    }
}

/// Composition `g∘f`. The factor lists of `f.codomain` and `g.domain` must
/// agree exactly.
pub fn lin_compose(g: &LinMap, f: &LinMap) -> Result<LinMap, LinError> {
    if f.codomain != g.domain {
        return Err(LinError::ShapeMismatch(format!(
            "cannot compose {} -> {} after {} -> {}",
            g.domain, g.codomain, f.domain, f.codomain
        )));
    }
    let mut out = LinMap::zero(f.domain.clone(), g.codomain.clone());
    for (&j, fcol) in &f.cols {
        for (&k, fc) in fcol {
            if let Some(gcol) = g.cols.get(&k) {
                for (&i, gc) in gcol {
                    out.add_entry(i, j, gc * fc);
                }
            }
        }
    }
    Ok(out)
}

/// Tensor product `f⊗g`: acts factorwise, shapes concatenate.
pub fn lin_tensor(f: &LinMap, g: &LinMap) -> LinMap {
    let domain = f.domain.concat(&g.domain);
    let codomain = f.codomain.concat(&g.codomain);
    let gdom = g.domain.dim();
    let gcod = g.codomain.dim();
    let mut out = LinMap::zero(domain, codomain);
    for (fi, fj, fc) in f.entries() {
        for (gi, gj, gc) in g.entries() {
            out.set(fi * gcod + gi, fj * gdom + gj, fc * gc);
        }
    }
    out
}

/// Exact inverse by Gaussian elimination over the rationals.
pub fn lin_invert(f: &LinMap) -> Result<LinMap, LinError> {
    let n = f.domain.dim();
    if n != f.codomain.dim() {
        return Err(LinError::ShapeMismatch(format!(
            "cannot invert a {}x{} map",
            f.codomain.dim(),
            n
        )));
    }
    let inv = invert_dense(n, |i, j| f.coeff(i, j))
        .ok_or_else(|| LinError::Singular(format!("{} -> {} is rank-deficient", f.domain, f.codomain)))?;
    let mut out = LinMap::zero(f.codomain.clone(), f.domain.clone());
    for (i, row) in inv.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            out.set(i, j, c.clone());
        }
    }
    Ok(out)
}

/// Transpose: coefficient table flipped, domain and codomain swapped with
/// every factor replaced by its dual space.
pub fn lin_transpose(f: &LinMap) -> LinMap {
    let domain = TensorShape::new(f.codomain.factors().iter().map(|s| s.dual()).collect());
    let codomain = TensorShape::new(f.domain.factors().iter().map(|s| s.dual()).collect());
    let mut out = LinMap::zero(domain, codomain);
    for (i, j, c) in f.entries() {
        out.set(j, i, c.clone());
    }
    out
}
