use logarr::arrangement::Multiplicity;
use logarr::cli::corpus::ex10;
use logarr::deletion_restriction::{
    deletion_theorem_verify, euler_sequence, is_surjective, les_consistency, local_triple, nd_set, Side, Verdict,
};

fn triple(h: usize) -> logarr::deletion_restriction::EulerTriple {
    logarr::deletion_restriction::EulerTriple::new(&ex10(), &Multiplicity::ones(10), h).unwrap()
}

#[test]
fn spog_deletions_of_ex10() {
    for (h, verdict) in [(0, Verdict::Spog), (3, Verdict::Free), (9, Verdict::Spog)] {
        let r = deletion_theorem_verify(&triple(h)).unwrap();
        assert!(r.violations.is_empty(), "{r:?}");
        let c = r.derivations.classification.unwrap();
        assert_eq!(c.verdict, verdict);
        if verdict == Verdict::Spog {
            assert_eq!(c.po_exp, Some(vec![1, 3, 3, 3]));
            assert_eq!(c.level, Some(3));
        }
    }
}

#[test]
fn restriction_onto_h10() {
    let t = triple(9);
    assert!(is_surjective(&t, Side::Derivation, 1).unwrap());
    let r = euler_sequence(&t, Side::Form, 1, 8).unwrap();
    assert!(r.healthy() && r.surjective, "{r:?}");
}

#[test]
fn nd_at_h1_contains_a_line() {
    let t = triple(0);
    let nd = nd_set(&t).unwrap();
    let line = nd.iter().find(|f| f.dim == 1).expect("a 1-dimensional flat");
    assert_eq!(line.members, vec![0, 4, 5, 6, 7]);
    // the localized restriction misses a degree-1 generator
    let flat = ex10()
        .lattice()
        .flats
        .into_iter()
        .find(|f| f.members == line.members)
        .unwrap();
    let local = local_triple(&t, &flat).unwrap();
    let s = euler_sequence(&local, Side::Derivation, 1, 4).unwrap();
    assert!(s.cokernel_hilbert.iter().any(|&(d, c)| d == 1 && c == 1), "{s:?}");
}

#[test]
fn long_exact_sequence_at_h10() {
    let r = les_consistency(&triple(9), 13).unwrap();
    assert!(r.violations.is_empty(), "{r:?}");
    assert!(r.ext1_forms_deletion_zero);
    let e = r.ext2_comparison.unwrap();
    assert!(e.agree && e.left_nonzero && e.right_nonzero);
    assert!(r.base_change.iter().all(|b| b.agree));
}
