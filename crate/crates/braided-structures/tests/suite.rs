//! End-to-end checks through the public API: structures built from raw
//! tables, the inverse-braiding lemma, and cross-braiding verdicts.

use std::collections::BTreeSet;

use braided_structures::{
    check_bialgebra, check_hexagons, solve_antipode, Braiding, BraidedAlgebra, BraidedBialgebra,
    BraidedCoalgebra, BraidedHopf, CrossBraiding, HexSide, PartialMap, Provenance, Verdict,
};
use exact_linalg::{int, ratio, LinMap, Space, TensorShape, Vect};
use proptest::prelude::*;

fn group_bialgebra(n: usize) -> BraidedBialgebra {
    let mut labels = vec!["1".to_string()];
    for k in 1..n {
        labels.push(if k == 1 { "g".into() } else { format!("g{k}") });
    }
    let space = Space::new("H", labels);
    let h = TensorShape::of(&space);
    let hh = TensorShape::pair(&space, &space);
    let braiding = Braiding::flip(&space);
    let mult = LinMap::from_basis_images(hh, h.clone(), |j| {
        Vect::basis(&TensorShape::of(&space), (j / n + j % n) % n)
    })
    .unwrap();
    let comult = LinMap::from_basis_images(h.clone(), TensorShape::pair(&space, &space), |j| {
        Vect::basis(&space_pair(&space), j * n + j)
    })
    .unwrap();
    let counit = LinMap::from_basis_images(h.clone(), TensorShape::unit(), |_| Vect::one()).unwrap();
    let algebra =
        BraidedAlgebra::new(braiding.clone(), mult, Some(Vect::basis(&h, 0))).unwrap();
    let coalgebra = BraidedCoalgebra::new(braiding, comult, counit).unwrap();
    BraidedBialgebra::new(algebra, coalgebra).unwrap()
}

fn space_pair(space: &Space) -> TensorShape {
    TensorShape::pair(space, space)
}

fn group_antipode(n: usize, space: &Space) -> LinMap {
    let h = TensorShape::of(space);
    LinMap::from_basis_images(h.clone(), h, |k| {
        Vect::basis(&TensorShape::of(space), (n - k) % n)
    })
    .unwrap()
}

fn superline_bialgebra() -> BraidedBialgebra {
    let space = Space::new("H", vec!["1".into(), "x".into()]);
    let h = TensorShape::of(&space);
    let hh = TensorShape::pair(&space, &space);
    let psi = LinMap::from_entries(
        hh.clone(),
        hh.clone(),
        vec![(0, 0, int(1)), (2, 1, int(1)), (1, 2, int(1)), (3, 3, int(-1))],
    )
    .unwrap();
    let braiding = Braiding::new(space, psi).unwrap();
    let mult = LinMap::from_entries(
        hh.clone(),
        h.clone(),
        vec![(0, 0, int(1)), (1, 1, int(1)), (1, 2, int(1))],
    )
    .unwrap();
    let comult = LinMap::from_entries(
        h.clone(),
        hh,
        vec![(0, 0, int(1)), (2, 1, int(1)), (1, 1, int(1))],
    )
    .unwrap();
    let counit = LinMap::from_entries(h.clone(), TensorShape::unit(), vec![(0, 0, int(1))]).unwrap();
    let algebra =
        BraidedAlgebra::new(braiding.clone(), mult, Some(Vect::basis(&h, 0))).unwrap();
    let coalgebra = BraidedCoalgebra::new(braiding, comult, counit).unwrap();
    BraidedBialgebra::new(algebra, coalgebra).unwrap()
}

fn swap_braiding(h: &BraidedBialgebra) -> Result<BraidedBialgebra, braided_structures::StructureError> {
    let algebra = BraidedAlgebra::new_partial(
        h.braiding().inverse(),
        h.mult().clone(),
        h.algebra().unit().cloned(),
    )?;
    let coalgebra = BraidedCoalgebra::new_partial(
        h.braiding().inverse(),
        h.comult().clone(),
        h.counit().clone(),
    )?;
    BraidedBialgebra::new(algebra, coalgebra)
}

#[test]
fn inverse_braiding_keeps_group_bialgebras_valid() {
    for n in 1..=4 {
        let h = group_bialgebra(n);
        let swapped = swap_braiding(&h).unwrap();
        assert!(check_bialgebra(&swapped).all_pass());
        // The antipode does not see the braiding, so it survives the swap.
        let s = solve_antipode(&swapped).unwrap();
        assert_eq!(s, group_antipode(n, h.space()));
    }
}

#[test]
fn inverse_braiding_keeps_the_superline_valid() {
    let h = superline_bialgebra();
    let swapped = swap_braiding(&h).unwrap();
    assert!(check_bialgebra(&swapped).all_pass());
    let s = solve_antipode(&swapped).unwrap();
    let hopf = BraidedHopf::new(swapped, s.clone(), Some(s)).unwrap();
    assert!(hopf.check().all_pass());
}

#[test]
fn inverse_braiding_of_a_nonsymmetric_partial_structure() {
    // One nilpotent-to-be generator with the scaling braiding
    // Ψ(x⊗x) = 2·x⊗x and the product of x with itself left undefined:
    // the structure passes with skips, and so does its inverse, whose
    // braiding genuinely differs (the scale becomes 1/2).
    let space = Space::new("H", vec!["1".into(), "x".into()]);
    let h = TensorShape::of(&space);
    let hh = TensorShape::pair(&space, &space);
    let psi = LinMap::from_entries(
        hh.clone(),
        hh.clone(),
        vec![(0, 0, int(1)), (2, 1, int(1)), (1, 2, int(1)), (3, 3, int(2))],
    )
    .unwrap();
    let braiding = Braiding::new(space, psi).unwrap();
    let mult_lin = LinMap::from_entries(
        hh.clone(),
        h.clone(),
        vec![(0, 0, int(1)), (1, 1, int(1)), (1, 2, int(1))],
    )
    .unwrap();
    let mult = PartialMap::with_undefined(mult_lin, BTreeSet::from([3]));
    let comult = LinMap::from_entries(
        h.clone(),
        hh,
        vec![(0, 0, int(1)), (2, 1, int(1)), (1, 1, int(1))],
    )
    .unwrap();
    let counit = LinMap::from_entries(h.clone(), TensorShape::unit(), vec![(0, 0, int(1))]).unwrap();

    let algebra = BraidedAlgebra::new_partial(
        braiding.clone(),
        mult,
        Some(Vect::basis(&h, 0)),
    )
    .unwrap();
    let coalgebra = BraidedCoalgebra::new(braiding, comult, counit).unwrap();
    let h2 = BraidedBialgebra::new(algebra, coalgebra).unwrap();

    let report = check_bialgebra(&h2);
    assert!(report.passed());
    assert!(!report.all_pass());
    assert_eq!(
        report.entry(braided_structures::eq::DCM).unwrap().verdict,
        Verdict::Skipped
    );

    let swapped = swap_braiding(&h2).unwrap();
    assert_eq!(
        swapped.braiding().psi().coeff(3, 3),
        ratio(1, 2),
        "the inverse braiding scales x⊗x by 1/2"
    );
    let report = check_bialgebra(&swapped);
    assert!(report.passed());
}

#[test]
fn sign_flipped_cross_between_superline_and_group_line_passes_hexagons() {
    // The cross picks up −1 exactly on x⊗g. Both ambient braidings are
    // diagonal signs, so both hexagon sides act by a product of the same
    // signs and agree.
    let v = superline_bialgebra();
    let w = group_bialgebra(2);
    let vw = TensorShape::pair(v.space(), w.space());
    let wv = TensorShape::pair(w.space(), v.space());
    let psi = LinMap::from_entries(
        vw,
        wv,
        vec![(0, 0, int(1)), (2, 1, int(1)), (1, 2, int(1)), (3, 3, int(-1))],
    )
    .unwrap();
    let x = CrossBraiding::new(
        v.space().clone(),
        w.space().clone(),
        psi,
        Provenance::Given,
    )
    .unwrap();
    let left = check_hexagons(&x, HexSide::LeftVBraided, v.braiding(), w.braiding()).unwrap();
    assert!(left.all_pass());
    let right = check_hexagons(&x, HexSide::RightWBraided, v.braiding(), w.braiding()).unwrap();
    assert!(right.all_pass());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // Diagonal braidings Ψ(e_i⊗e_j) = λ_{ij}·e_j⊗e_i satisfy Yang-Baxter
    // for any nonzero scalars: both triple composites act on e_i⊗e_j⊗e_k
    // by λ_{ij}λ_{ik}λ_{jk}.
    #[test]
    fn diagonal_braidings_satisfy_yang_baxter(
        dim in 1usize..=3,
        nums in proptest::collection::vec((-6i64..=6, 1i64..=4), 9),
    ) {
        let space = Space::with_dim("V", dim);
        let vv = TensorShape::pair(&space, &space);
        let entries = (0..dim * dim)
            .map(|col| {
                let (i, j) = (col / dim, col % dim);
                let (p, q) = nums[i * dim + j];
                let coeff = if p == 0 { int(1) } else { ratio(p, q) };
                (j * dim + i, col, coeff)
            })
            .collect::<Vec<_>>();
        let psi = LinMap::from_entries(vv.clone(), vv, entries).unwrap();
        let braiding = Braiding::new(space, psi);
        prop_assert!(braiding.is_ok());
    }
}
