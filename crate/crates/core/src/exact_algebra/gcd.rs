//! Multivariate polynomial gcd by primitive remainder sequences.

use super::monomial::Monomial;
use super::polynomial::Polynomial;

/// Coefficients of `f` viewed as a polynomial in `x_v`, lowest degree first.
fn coefficients_in(f: &Polynomial, v: usize) -> Vec<Polynomial> {
    let deg = f.degree_in(v) as usize;
    let mut parts: Vec<Vec<_>> = vec![Vec::new(); deg + 1];
    for (m, c) in f.terms() {
        let e = m.exponent(v) as usize;
        parts[e].push((m.with_exponent(v, 0), c.clone()));
    }
    parts
        .into_iter()
        .map(|t| Polynomial::from_terms(f.nvars(), t))
        .collect()
}

fn highest_var(f: &Polynomial) -> Option<usize> {
    (0..f.nvars()).rev().find(|&i| f.degree_in(i) > 0)
}

fn content_in(f: &Polynomial, v: usize) -> Polynomial {
    let mut g = Polynomial::zero(f.nvars());
    for c in coefficients_in(f, v) {
        g = gcd_poly(&g, &c);
        if g.is_constant() && !g.is_zero() {
            return Polynomial::one(f.nvars());
        }
    }
    g
}

/// Pseudo-remainder of `a` by `b` in the variable `x_v`.
fn pseudo_rem(a: &Polynomial, b: &Polynomial, v: usize) -> Polynomial {
    let db = b.degree_in(v);
    let lb = coefficients_in(b, v).pop().unwrap();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lr = coefficients_in(&r, v).pop().unwrap();
        let shift = Monomial::var_pow(v, dr - db);
        let t = b.mul(&lr).mul_monomial(&shift, &super::scalar::Scalar::one());
        r = r.mul(&lb).sub(&t);
    }
    r
}

/// A greatest common divisor, integer-primitive with positive leading coefficient.
pub fn gcd_poly(f: &Polynomial, g: &Polynomial) -> Polynomial {
    if f.is_zero() {
        return g.primitive_integer();
    }
    if g.is_zero() {
        return f.primitive_integer();
    }
    let n = f.nvars();
    let v = match (highest_var(f), highest_var(g)) {
        (None, _) | (_, None) => return Polynomial::one(n),
        (Some(a), Some(b)) => a.max(b),
    };
    if f.degree_in(v) == 0 {
        return gcd_poly(f, &content_in(g, v));
    }
    if g.degree_in(v) == 0 {
        return gcd_poly(&content_in(f, v), g);
    }
    let cf = content_in(f, v);
    let cg = content_in(g, v);
    let c = gcd_poly(&cf, &cg);
    let mut a = f.exact_div(&cf).unwrap();
    let mut b = g.exact_div(&cg).unwrap();
    if a.degree_in(v) < b.degree_in(v) {
        std::mem::swap(&mut a, &mut b);
    }
    let last = loop {
        let r = pseudo_rem(&a, &b, v);
        if r.is_zero() {
            break b;
        }
        if r.degree_in(v) == 0 {
            break Polynomial::one(n);
        }
        let cr = content_in(&r, v);
        a = b;
        b = r.exact_div(&cr).unwrap();
    };
    let last = last.exact_div(&content_in(&last, v)).unwrap();
    last.mul(&c).primitive_integer()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::scalar::Scalar;

    fn x() -> Polynomial {
        Polynomial::var(2, 0)
    }
    fn y() -> Polynomial {
        Polynomial::var(2, 1)
    }

    #[test]
    fn examples() {
        assert_eq!(gcd_poly(&x().pow(2).mul(&y()), &x().mul(&y().pow(2))), x().mul(&y()));
        assert_eq!(gcd_poly(&x().add(&y()), &x().sub(&y())), Polynomial::one(2));
        let f = x().scale(&Scalar::from_int(-3)).add(&y());
        assert_eq!(gcd_poly(&f, &Polynomial::zero(2)), x().scale(&Scalar::from_int(3)).sub(&y()));
    }

    #[test]
    fn common_factor_survives() {
        let z = Polynomial::var(3, 2);
        let a = Polynomial::var(3, 0).add(&z);
        let b = Polynomial::var(3, 1).sub(&z);
        let c = Polynomial::var(3, 0).add(&Polynomial::var(3, 1));
        let f = a.mul(&b).mul(&b);
        let g = a.mul(&b).mul(&c);
        let h = gcd_poly(&f, &g);
        assert_eq!(h, a.mul(&b).primitive_integer());
    }
}
