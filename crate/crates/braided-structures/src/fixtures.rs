//! Shared test fixtures with hand-checked structure tables.

use crate::algebra::BraidedAlgebra;
use crate::bialgebra::{BraidedBialgebra, BraidedHopf};
use crate::braiding::Braiding;
use crate::coalgebra::BraidedCoalgebra;
use exact_linalg::{int, LinMap, Space, TensorShape, Vect};

pub(crate) fn zn_space(n: usize) -> Space {
    let labels = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g{k}"),
        })
        .collect();
    Space::new("H", labels)
}

pub(crate) fn zn_algebra(n: usize) -> BraidedAlgebra {
    let space = zn_space(n);
    let shape = TensorShape::of(&space);
    let mult = LinMap::from_basis_images(
        TensorShape::pair(&space, &space),
        shape.clone(),
        |j| Vect::basis(&shape, (j / n + j % n) % n),
    )
    .unwrap();
    BraidedAlgebra::new(Braiding::flip(&space), mult, Some(Vect::basis(&shape, 0)))
        .expect("group algebra is a braided algebra")
}

pub(crate) fn zn_coalgebra(n: usize) -> BraidedCoalgebra {
    let space = zn_space(n);
    let shape = TensorShape::of(&space);
    let pair = TensorShape::pair(&space, &space);
    let comult = LinMap::from_basis_images(shape.clone(), pair, |k| {
        Vect::basis(&shape, k).tensor(&Vect::basis(&shape, k))
    })
    .unwrap();
    let counit =
        LinMap::from_basis_images(shape, TensorShape::unit(), |_| Vect::one()).unwrap();
    BraidedCoalgebra::new(Braiding::flip(&space), comult, counit)
        .expect("group coalgebra is a braided coalgebra")
}

pub(crate) fn zn_bialgebra(n: usize) -> BraidedBialgebra {
    BraidedBialgebra::new(zn_algebra(n), zn_coalgebra(n)).expect("group bialgebra")
}

pub(crate) fn zn_antipode(n: usize) -> LinMap {
    let space = zn_space(n);
    let shape = TensorShape::of(&space);
    LinMap::from_basis_images(shape.clone(), shape.clone(), |k| {
        Vect::basis(&shape, (n - k) % n)
    })
    .unwrap()
}

pub(crate) fn zn_hopf(n: usize) -> BraidedHopf {
    // S(g^k) = g^{n-k} inverts itself.
    BraidedHopf::new(zn_bialgebra(n), zn_antipode(n), Some(zn_antipode(n)))
        .expect("group Hopf algebra")
}

pub(crate) fn superline_space() -> Space {
    Space::new("H", vec!["1".to_string(), "x".to_string()])
}

pub(crate) fn superline_braiding() -> Braiding {
    let space = superline_space();
    let hh = TensorShape::pair(&space, &space);
    let psi = LinMap::from_entries(
        hh.clone(),
        hh,
        vec![(0, 0, int(1)), (2, 1, int(1)), (1, 2, int(1)), (3, 3, int(-1))],
    )
    .unwrap();
    Braiding::new(space, psi).expect("signed flip braids")
}

pub(crate) fn superline_mult() -> LinMap {
    let space = superline_space();
    // 1·1 = 1, 1·x = x·1 = x, x·x = 0.
    LinMap::from_entries(
        TensorShape::pair(&space, &space),
        TensorShape::of(&space),
        vec![(0, 0, int(1)), (1, 1, int(1)), (1, 2, int(1))],
    )
    .unwrap()
}

pub(crate) fn superline_comult() -> LinMap {
    let space = superline_space();
    // Δ(1) = 1⊗1, Δ(x) = x⊗1 + 1⊗x.
    LinMap::from_entries(
        TensorShape::of(&space),
        TensorShape::pair(&space, &space),
        vec![(0, 0, int(1)), (2, 1, int(1)), (1, 1, int(1))],
    )
    .unwrap()
}

pub(crate) fn superline_counit() -> LinMap {
    LinMap::from_entries(
        TensorShape::of(&superline_space()),
        TensorShape::unit(),
        vec![(0, 0, int(1))],
    )
    .unwrap()
}

pub(crate) fn superline_antipode() -> LinMap {
    let shape = TensorShape::of(&superline_space());
    LinMap::from_entries(shape.clone(), shape, vec![(0, 0, int(1)), (1, 1, int(-1))]).unwrap()
}

pub(crate) fn superline_algebra() -> BraidedAlgebra {
    let shape = TensorShape::of(&superline_space());
    BraidedAlgebra::new(
        superline_braiding(),
        superline_mult(),
        Some(Vect::basis(&shape, 0)),
    )
    .expect("superline algebra")
}

pub(crate) fn superline_coalgebra() -> BraidedCoalgebra {
    BraidedCoalgebra::new(superline_braiding(), superline_comult(), superline_counit())
        .expect("superline coalgebra")
}

pub(crate) fn superline_bialgebra() -> BraidedBialgebra {
    BraidedBialgebra::new(superline_algebra(), superline_coalgebra())
        .expect("superline bialgebra")
}

pub(crate) fn superline_hopf() -> BraidedHopf {
    BraidedHopf::new(
        superline_bialgebra(),
        superline_antipode(),
        Some(superline_antipode()),
    )
    .expect("superline Hopf algebra")
}

/// Bialgebra of the monoid ({0,1}, max): valid, but e1 has no inverse, so
/// no antipode exists.
pub(crate) fn max_monoid_bialgebra() -> BraidedBialgebra {
    let space = Space::new("M", vec!["e0".to_string(), "e1".to_string()]);
    let shape = TensorShape::of(&space);
    let pair = TensorShape::pair(&space, &space);
    let mult = LinMap::from_basis_images(pair.clone(), shape.clone(), |j| {
        Vect::basis(&shape, (j / 2).max(j % 2))
    })
    .unwrap();
    let comult = LinMap::from_basis_images(shape.clone(), pair, |k| {
        Vect::basis(&shape, k).tensor(&Vect::basis(&shape, k))
    })
    .unwrap();
    let counit =
        LinMap::from_basis_images(shape.clone(), TensorShape::unit(), |_| Vect::one()).unwrap();
    let algebra = BraidedAlgebra::new(
        Braiding::flip(&space),
        mult,
        Some(Vect::basis(&shape, 0)),
    )
    .expect("max monoid algebra");
    let coalgebra =
        BraidedCoalgebra::new(Braiding::flip(&space), comult, counit).expect("max monoid coalgebra");
    BraidedBialgebra::new(algebra, coalgebra).expect("max monoid bialgebra")
}
