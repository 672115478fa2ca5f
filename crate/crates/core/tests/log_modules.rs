use logarr::arrangement::Multiplicity;
use logarr::cli::corpus::{b2, ex10, g3};
use logarr::exact_algebra::Scalar;
use logarr::log_modules::{derivation_module, duality_check, euler_multiplicity, exponents, form_module, freeness};

#[test]
fn plane_modules() {
    let m = Multiplicity::new(vec![2, 1]).unwrap();
    let d = derivation_module(&b2(), &m, 1).unwrap();
    assert_eq!(d.generator_degrees(), vec![1, 2]);
    assert_eq!(d.hilbert(1), 1);
    assert_eq!(d.hilbert(2), 3);
    let w = form_module(&b2(), &Multiplicity::ones(2), 1).unwrap();
    assert_eq!(w.generator_degrees(), vec![-1, -1]);
}

#[test]
fn ex10_is_free() {
    let a = ex10();
    let v = freeness(&a, &Multiplicity::ones(10)).unwrap();
    assert!(v.free);
    assert_eq!(v.exponents, Some(vec![1, 3, 3, 3]));
    assert_eq!(v.saito_constant, Some(Scalar::new(-1, 2).to_string()));
}

#[test]
fn three_lines_with_multiplicity() {
    assert_eq!(exponents(&g3(), &Multiplicity::new(vec![2, 2, 2]).unwrap()).unwrap(), vec![3, 3]);
    assert_eq!(exponents(&g3(), &Multiplicity::new(vec![3, 1, 1]).unwrap()).unwrap(), vec![2, 3]);
}

#[test]
fn euler_multiplicity_of_simple_arrangements() {
    let a = ex10();
    for h in 0..10 {
        let ms = euler_multiplicity(&a, &Multiplicity::ones(10), h).unwrap();
        assert!(ms.values().iter().all(|&v| v == 1));
    }
}

#[test]
fn ex10_duality() {
    for p in [1, 3] {
        assert!(duality_check(&ex10(), &Multiplicity::ones(10), p, 6).unwrap().passes());
    }
}
