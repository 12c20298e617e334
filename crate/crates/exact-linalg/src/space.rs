//! Labeled finite-dimensional spaces and tensor shapes.

use std::fmt;

/// A finite-dimensional vector space with a named basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Space {
    name: String,
    labels: Vec<String>,
}

impl Space {
    /// A space with explicit basis labels. Panics if empty or labels repeat;
    /// callers construct spaces from static data, not user input.
    pub fn new(name: impl Into<String>, labels: Vec<String>) -> Space {
        assert!(!labels.is_empty(), "space must have dim >= 1");
        for (i, a) in labels.iter().enumerate() {
            for b in &labels[..i] {
                assert_ne!(a, b, "basis labels must be distinct");
            }
        }
        Space {
            name: name.into(),
            labels,
        }
    }

    /// A space with generated labels `e0..e{dim-1}`.
    pub fn with_dim(name: impl Into<String>, dim: usize) -> Space {
        Space::new(name, (0..dim).map(|i| format!("e{i}")).collect())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The dual space: name primed, labels starred. Involutive, so the
    /// double dual is the original space again.
    pub fn dual(&self) -> Space {
        let name = match self.name.strip_suffix('\'') {
            Some(base) => base.to_string(),
            None => format!("{}'", self.name),
        };
        let labels = self
            .labels
            .iter()
            .map(|l| match l.strip_suffix('*') {
                Some(base) => base.to_string(),
                None => format!("{l}*"),
            })
            .collect();
        Space { name, labels }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// An ordered tensor product of spaces. The empty product is the ground
/// field, with a single basis vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TensorShape {
    factors: Vec<Space>,
}

impl TensorShape {
    pub fn new(factors: Vec<Space>) -> TensorShape {
        TensorShape { factors }
    }

    /// The ground field as a tensor shape (no factors, dimension 1).
    pub fn unit() -> TensorShape {
        TensorShape { factors: vec![] }
    }

    pub fn of(space: &Space) -> TensorShape {
        TensorShape {
            factors: vec![space.clone()],
        }
    }

    pub fn pair(a: &Space, b: &Space) -> TensorShape {
        TensorShape {
            factors: vec![a.clone(), b.clone()],
        }
    }

    pub fn factors(&self) -> &[Space] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(Space::dim).product()
    }

    pub fn concat(&self, other: &TensorShape) -> TensorShape {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        TensorShape { factors }
    }

    /// Flattens a multi-index: row-major, leftmost factor most significant.
    pub fn index(&self, multi: &[usize]) -> usize {
        assert_eq!(multi.len(), self.factors.len(), "multi-index rank mismatch");
        let mut flat = 0;
        for (i, space) in self.factors.iter().enumerate() {
            assert!(multi[i] < space.dim(), "component index out of range");
            flat = flat * space.dim() + multi[i];
        }
        flat
    }

    /// Inverse of [`TensorShape::index`].
    pub fn multi_index(&self, flat: usize) -> Vec<usize> {
        assert!(flat < self.dim(), "flat index out of range");
        let mut rest = flat;
        let mut multi = vec![0; self.factors.len()];
        for (i, space) in self.factors.iter().enumerate().rev() {
            multi[i] = rest % space.dim();
            rest /= space.dim();
        }
        multi
    }

    /// Human-readable label of a basis vector, e.g. `x⊗1`.
    pub fn label(&self, flat: usize) -> String {
        if self.factors.is_empty() {
            return "1".to_string();
        }
        let multi = self.multi_index(flat);
        multi
            .iter()
            .zip(&self.factors)
            .map(|(&i, space)| space.labels()[i].clone())
            .collect::<Vec<_>>()
            .join("⊗")
    }
}

impl fmt::Display for TensorShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "K");
        }
        let names: Vec<&str> = self.factors.iter().map(Space::name).collect();
        write!(f, "{}", names.join("⊗"))
    }
}

/// The linear map permuting tensor factors: codomain factor `k` is domain
/// factor `perm[k]`, and basis vectors are rearranged accordingly.
pub fn shape_permutation(shape: &TensorShape, perm: &[usize]) -> crate::LinMap {
    assert_eq!(perm.len(), shape.rank(), "permutation rank mismatch");
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        assert!(p < perm.len() && !seen[p], "not a permutation");
        seen[p] = true;
    }
    let codomain = TensorShape::new(perm.iter().map(|&p| shape.factors[p].clone()).collect());
    let mut entries = Vec::with_capacity(shape.dim());
    for j in 0..shape.dim() {
        let multi = shape.multi_index(j);
        let out_multi: Vec<usize> = perm.iter().map(|&p| multi[p]).collect();
        entries.push((codomain.index(&out_multi), j, crate::int(1)));
    }
    crate::LinMap::from_entries(shape.clone(), codomain, entries).expect("permutation entries are in bounds")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leftmost_factor_is_most_significant() {
        let a = Space::with_dim("A", 2);
        let b = Space::with_dim("B", 3);
        let shape = TensorShape::pair(&a, &b);
        assert_eq!(shape.index(&[1, 0]), 3);
        assert_eq!(shape.index(&[0, 2]), 2);
        assert_eq!(shape.multi_index(5), vec![1, 2]);
    }

    #[test]
    fn unit_shape_is_one_dimensional() {
        let unit = TensorShape::unit();
        assert_eq!(unit.dim(), 1);
        assert_eq!(unit.index(&[]), 0);
        assert_eq!(unit.multi_index(0), Vec::<usize>::new());
    }

    #[test]
    fn dual_is_involutive() {
        let h = Space::new("H", vec!["1".into(), "x".into()]);
        let d = h.dual();
        assert_eq!(d.name(), "H'");
        assert_eq!(d.labels(), ["1*", "x*"]);
        assert_eq!(d.dual(), h);
    }

    #[test]
    fn permutation_map_swaps_factors() {
        let a = Space::with_dim("A", 2);
        let b = Space::with_dim("B", 3);
        let shape = TensorShape::pair(&a, &b);
        let swap = shape_permutation(&shape, &[1, 0]);
        assert_eq!(swap.codomain().factors()[0], b);
        let v = crate::Vect::basis(&shape, shape.index(&[1, 2]));
        let out = swap.apply(&v).unwrap();
        assert_eq!(out, crate::Vect::basis(swap.codomain(), swap.codomain().index(&[2, 1])));
    }
}
