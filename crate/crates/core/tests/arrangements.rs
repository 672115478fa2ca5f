use logarr::arrangement::{canonicalize, format_int_poly, Arrangement, Multiplicity};
use logarr::cli::corpus::{braid4, ex10, g3, near_pencil};
use logarr::deletion_restriction::{locus_descriptor, nonfree_locus};

#[test]
fn canonical_normals() {
    assert_eq!(canonicalize(&[0, -2, 0, 0]).unwrap().normal(), &[0, 1, 0, 0]);
    assert_eq!(canonicalize(&[2, 2, 0, 2]).unwrap().normal(), &[1, 1, 0, 1]);
    assert_eq!(canonicalize(&[-1, 1]).unwrap().normal(), &[1, -1]);
    assert!(canonicalize(&[0, 0]).is_err());
}

#[test]
fn characteristic_polynomials() {
    assert_eq!(format_int_poly(&g3().char_poly()), "(t-1)(t-2)");
    // braid arrangement: t(t-1)(t-2)(t-3)
    assert_eq!(braid4().char_poly(), vec![0, -6, 11, -6, 1]);
    assert_eq!(ex10().reduced_char_poly().unwrap(), vec![-27, 27, -9, 1]);
    assert_eq!(near_pencil(4).unwrap().char_poly(), vec![-2, 5, -4, 1]);
}

#[test]
fn mobius_of_the_top_flat() {
    let lat = g3().lattice();
    assert_eq!(lat.len(), 5);
    assert_eq!(lat.mobius_of(&[0, 1, 2]), Some(2));
}

#[test]
fn deletion_and_restriction() {
    let a = g3();
    let d = a.delete(2).unwrap();
    assert_eq!(d, Arrangement::from_normals(2, &[vec![1, 0], vec![0, 1]]).unwrap());
    let r = ex10().restrict(9).unwrap();
    assert_eq!(r.arrangement.len(), 6);
    assert_eq!(r.trace[9], None);
}

#[test]
fn nonfree_loci_of_ex10_deletions() {
    let a = ex10();
    let ones = Multiplicity::ones(9);
    let nf = |h: usize| locus_descriptor(&nonfree_locus(&a.delete(h).unwrap(), &ones).unwrap());
    assert_eq!(nf(0), "1-dimensional");
    assert_eq!(nf(3), "∅");
    assert_eq!(nf(9), "{0}");
}
