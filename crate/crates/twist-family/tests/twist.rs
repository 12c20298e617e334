use braided_structures::{check_bialgebra, eq, BraidedHopf, StructureError, Verdict};
use catalog::{make_braided_line_truncated, make_group_bialgebra, make_superline};
use exact_linalg::int;
use proptest::prelude::*;
use twist_family::{
    antipode_power, antipode_power_morphism, check_twist_bialgebra, check_twist_hopf, twist,
    WhichBraiding,
};

#[test]
fn the_zero_twist_is_the_identity() {
    let h = make_superline();
    let t = twist(h.bialgebra(), 0, 0);
    assert_eq!(t.assemble().unwrap(), *h.bialgebra());
}

#[test]
fn twists_compose_by_adding_exponents() {
    let line = make_braided_line_truncated(int(2), 3).unwrap();
    let base = line.bialgebra();
    let once = twist(base, 1, -1).assemble().unwrap();
    let twice = twist(&once, 1, -1);
    let direct = twist(base, 2, -2);
    assert_eq!(twice.mult(), direct.mult());
    assert_eq!(twice.comult(), direct.comult());

    let h = make_superline();
    let there = twist(h.bialgebra(), 2, -2).assemble().unwrap();
    let back = twist(&there, -2, 2);
    assert_eq!(back.mult(), h.bialgebra().mult());
    assert_eq!(back.comult(), h.bialgebra().comult());
}

#[test]
fn the_guaranteed_pairings_are_recognized() {
    let h = make_superline();
    let b = h.bialgebra();
    assert_eq!(twist(b, 1, -1).guaranteed_braiding(), Some(WhichBraiding::Psi));
    assert_eq!(twist(b, 0, -1).guaranteed_braiding(), Some(WhichBraiding::PsiInv));
    assert_eq!(twist(b, 0, -1).which_braiding(), WhichBraiding::PsiInv);
    assert_eq!(twist(b, 1, 0).guaranteed_braiding(), None);
    assert_eq!(twist(b, 1, 0).which_braiding(), WhichBraiding::Psi);
}

#[test]
fn the_superline_twist_family_passes_at_every_level() {
    let h = make_superline();
    for n in -2..=2 {
        let report = check_twist_bialgebra(h.bialgebra(), n);
        assert!(report.all_pass(), "superline level {n}:\n{report}");
    }
}

#[test]
fn group_bialgebra_twists_collapse_onto_the_base() {
    // the flip braiding and a commutative product absorb every power
    let h = make_group_bialgebra(3).unwrap();
    let b = h.bialgebra();
    assert_eq!(twist(b, 1, -1).mult(), b.mult());
    assert!(check_twist_bialgebra(b, 2).all_pass());
}

#[test]
fn truncated_line_twists_pass_with_skips_above_the_cutoff() {
    let line = make_braided_line_truncated(int(2), 3).unwrap();
    for n in -2..=2 {
        let report = check_twist_bialgebra(line.bialgebra(), n);
        assert!(report.passed(), "braided line level {n}:\n{report}");
        assert!(!report.all_pass());
    }
}

#[test]
fn mispaired_exponents_fail_where_the_braiding_is_not_involutive() {
    // Ψ² = id on the superline collapses the k = 1 product twist onto the
    // original product, so this mispairing cannot fail there
    let h = make_superline();
    let t = twist(h.bialgebra(), 1, 0);
    assert_eq!(t.guaranteed_braiding(), None);
    assert_eq!(t.mult(), h.bialgebra().mult());
    assert!(check_bialgebra(&t.assemble_unchecked()).all_pass());

    let line = make_braided_line_truncated(int(2), 3).unwrap();
    let t = twist(line.bialgebra(), 1, 0);
    let report = check_bialgebra(&t.assemble_unchecked());
    let dcm = report.entry(eq::DCM).unwrap();
    assert_eq!(dcm.verdict, Verdict::Fail);
    assert_eq!(dcm.witness.as_ref().unwrap().input_label, "x⊗x");
    assert!(matches!(t.assemble(), Err(StructureError::CheckFailed(_))));
}

#[test]
fn twisted_hopf_families_keep_their_antipodes() {
    let h = make_superline();
    for n in -1..=1 {
        let report = check_twist_hopf(&h, n);
        assert!(report.all_pass(), "superline level {n}:\n{report}");
    }

    let group = make_group_bialgebra(4).unwrap();
    assert!(check_twist_hopf(&group, 2).all_pass());

    let line = make_braided_line_truncated(int(2), 3).unwrap();
    let report = check_twist_hopf(line.hopf(), 1);
    assert!(report.passed(), "{report}");
    assert!(!report.all_pass());
}

#[test]
fn a_missing_inverse_antipode_degrades_to_a_skipped_entry() {
    let h = make_superline();
    let stripped =
        BraidedHopf::from_parts_unchecked(h.bialgebra().clone(), h.antipode().clone(), None);
    let report = check_twist_hopf(&stripped, 0);
    assert!(report.passed(), "{report}");
    assert!(report
        .entries()
        .iter()
        .any(|e| e.equation == eq::ANTIPODE && e.verdict == Verdict::Skipped));
}

#[test]
fn antipode_powers_are_twist_morphisms() {
    let h = make_superline();
    for k in -2..=2 {
        for n in -1..=1 {
            let report = antipode_power_morphism(&h, k, n).unwrap();
            assert!(report.all_pass(), "superline k = {k}, n = {n}:\n{report}");
        }
    }

    let group = make_group_bialgebra(3).unwrap();
    assert!(antipode_power_morphism(&group, 1, 0).unwrap().all_pass());

    let line = make_braided_line_truncated(int(2), 3).unwrap();
    let report = antipode_power_morphism(line.hopf(), 1, 0).unwrap();
    assert!(report.passed(), "{report}");
    let back = antipode_power_morphism(line.hopf(), -1, 0).unwrap();
    assert!(back.passed(), "{back}");
}

#[test]
fn negative_powers_need_the_inverse_antipode() {
    let h = make_superline();
    let stripped =
        BraidedHopf::from_parts_unchecked(h.bialgebra().clone(), h.antipode().clone(), None);
    assert!(matches!(
        antipode_power_morphism(&stripped, -1, 0),
        Err(StructureError::AntipodeNotInvertible(_))
    ));
    assert!(antipode_power(&stripped, 2).is_ok());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    // both guaranteed pairings survive the checked constructors for any
    // line parameter, cutoff and level
    #[test]
    fn guaranteed_pairings_always_assemble(
        num in 1i64..=5,
        neg in any::<bool>(),
        cutoff in 1usize..=3,
        n in -2i64..=2,
        inverse_family in any::<bool>(),
    ) {
        let q = int(if neg { -num } else { num });
        let line = make_braided_line_truncated(q, cutoff).unwrap();
        let t = if inverse_family {
            twist(line.bialgebra(), n - 1, -n)
        } else {
            twist(line.bialgebra(), n, -n)
        };
        prop_assert!(t.guaranteed_braiding().is_some());
        prop_assert!(t.assemble().is_ok());
    }
}
