//! Finite-dimensional instances: group algebras and the superline.

use crate::CatalogError;
use braided_structures::{Braiding, BraidedAlgebra, BraidedBialgebra, BraidedCoalgebra, BraidedHopf};
use exact_linalg::{int, LinMap, Space, TensorShape, Vect};

/// The group algebra of Z_n with the flip braiding, grouplike coproduct
/// and inversion antipode.
pub fn make_group_bialgebra(n: usize) -> Result<BraidedHopf, CatalogError> {
    if n == 0 {
        return Err(CatalogError::InvalidParameter(
            "the group order must be at least 1".into(),
        ));
    }
    let mut labels = vec!["1".to_string()];
    for k in 1..n {
        labels.push(if k == 1 { "g".into() } else { format!("g{k}") });
    }
    let space = Space::new(format!("Z{n}"), labels);
    let h = TensorShape::of(&space);
    let hh = TensorShape::pair(&space, &space);
    let braiding = Braiding::flip(&space);
    let mult = LinMap::from_basis_images(hh.clone(), h.clone(), |j| {
        Vect::basis(&TensorShape::of(&space), (j / n + j % n) % n)
    })?;
    let comult = LinMap::from_basis_images(h.clone(), hh.clone(), |j| {
        Vect::basis(&TensorShape::pair(&space, &space), j * n + j)
    })?;
    let counit =
        LinMap::from_basis_images(h.clone(), TensorShape::unit(), |_| Vect::one())?;
    let antipode = LinMap::from_basis_images(h.clone(), h.clone(), |k| {
        Vect::basis(&TensorShape::of(&space), (n - k) % n)
    })?;
    let algebra = BraidedAlgebra::new(braiding.clone(), mult, Some(Vect::basis(&h, 0)))?;
    let coalgebra = BraidedCoalgebra::new(braiding, comult, counit)?;
    let bialgebra = BraidedBialgebra::new(algebra, coalgebra)?;
    Ok(BraidedHopf::new(bialgebra, antipode.clone(), Some(antipode))?)
}

/// Basis {1, x} with x² = 0, the braiding that flips with a sign on x⊗x,
/// primitive x and antipode S(x) = −x.
pub fn make_superline() -> BraidedHopf {
    let space = Space::new("SLine", vec!["1".into(), "x".into()]);
    let h = TensorShape::of(&space);
    let hh = TensorShape::pair(&space, &space);
    let psi = LinMap::from_entries(
        hh.clone(),
        hh.clone(),
        vec![(0, 0, int(1)), (2, 1, int(1)), (1, 2, int(1)), (3, 3, int(-1))],
    )
    .expect("superline braiding table");
    let braiding = Braiding::new(space, psi).expect("superline braiding");
    let mult = LinMap::from_entries(
        hh.clone(),
        h.clone(),
        vec![(0, 0, int(1)), (1, 1, int(1)), (1, 2, int(1))],
    )
    .expect("superline product table");
    let comult = LinMap::from_entries(
        h.clone(),
        hh,
        vec![(0, 0, int(1)), (2, 1, int(1)), (1, 1, int(1))],
    )
    .expect("superline coproduct table");
    let counit = LinMap::from_entries(h.clone(), TensorShape::unit(), vec![(0, 0, int(1))])
        .expect("superline counit table");
    let antipode = LinMap::from_entries(
        h.clone(),
        h.clone(),
        vec![(0, 0, int(1)), (1, 1, int(-1))],
    )
    .expect("superline antipode table");
    let algebra = BraidedAlgebra::new(braiding.clone(), mult, Some(Vect::basis(&h, 0)))
        .expect("superline algebra");
    let coalgebra = BraidedCoalgebra::new(braiding, comult, counit).expect("superline coalgebra");
    let bialgebra = BraidedBialgebra::new(algebra, coalgebra).expect("superline bialgebra");
    BraidedHopf::new(bialgebra, antipode.clone(), Some(antipode)).expect("superline antipode")
}
