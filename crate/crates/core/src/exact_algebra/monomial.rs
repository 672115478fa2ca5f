//! Packed monomials: up to eight variables, exponents below 128.

use std::cmp::Ordering;
use std::fmt;

pub const MAX_VARS: usize = 8;
pub const MAX_EXPONENT: u32 = 127;

const HIGH_BITS: u64 = 0x8080_8080_8080_8080;
const LOW_BITS: u64 = 0x7f7f_7f7f_7f7f_7f7f;

/// Exponent vector; variable `i` lives in byte `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    packed: u64,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables supported");
        let mut packed = 0u64;
        let mut degree = 0;
        for (i, &e) in exps.iter().enumerate() {
            assert!(e <= MAX_EXPONENT, "exponent {e} exceeds {MAX_EXPONENT}");
            packed |= (e as u64) << (8 * i);
            degree += e;
        }
        Monomial { packed, degree }
    }

    pub fn var(i: usize) -> Self {
        Self::var_pow(i, 1)
    }

    pub fn var_pow(i: usize, e: u32) -> Self {
        assert!(i < MAX_VARS && e <= MAX_EXPONENT);
        Monomial {
            packed: (e as u64) << (8 * i),
            degree: e,
        }
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        ((self.packed >> (8 * i)) & 0xff) as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exponent(i)).collect()
    }

    pub fn is_one(&self) -> bool {
        self.packed == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let packed = self.packed + other.packed;
        debug_assert!(packed & HIGH_BITS == 0, "exponent overflow");
        Monomial {
            packed,
            degree: self.degree + other.degree,
        }
    }

    /// `self | other`
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree {
            return false;
        }
        let t = (other.packed | HIGH_BITS) - (self.packed & LOW_BITS);
        t & HIGH_BITS == HIGH_BITS
    }

    /// `other / self`, assuming divisibility.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            packed: other.packed - self.packed,
            degree: other.degree - self.degree,
        }
    }

    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        if divisor.divides(self) {
            Some(divisor.quotient_of(self))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut packed = 0u64;
        let mut degree = 0;
        for i in 0..MAX_VARS {
            let e = self.exponent(i).max(other.exponent(i));
            packed |= (e as u64) << (8 * i);
            degree += e;
        }
        Monomial { packed, degree }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut packed = 0u64;
        let mut degree = 0;
        for i in 0..MAX_VARS {
            let e = self.exponent(i).min(other.exponent(i));
            packed |= (e as u64) << (8 * i);
            degree += e;
        }
        Monomial { packed, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exponent(i) == 0 || other.exponent(i) == 0)
    }

    /// Replace the exponent of variable `i`.
    pub fn with_exponent(&self, i: usize, e: u32) -> Monomial {
        let old = self.exponent(i);
        let packed = (self.packed & !(0xffu64 << (8 * i))) | ((e as u64) << (8 * i));
        Monomial {
            packed,
            degree: self.degree - old + e,
        }
    }

    /// Drop variable `i` and shift the later ones down by one.
    pub fn remove_var(&self, i: usize) -> Monomial {
        let low_mask = if i == 0 { 0 } else { u64::MAX >> (64 - 8 * i) };
        let low = self.packed & low_mask;
        let high = if i + 1 >= MAX_VARS {
            0
        } else {
            (self.packed >> (8 * (i + 1))) << (8 * i)
        };
        Monomial {
            packed: low | high,
            degree: self.degree - self.exponent(i),
        }
    }

    /// Insert a fresh variable at position `i` with exponent `e`.
    pub fn insert_var(&self, i: usize, e: u32) -> Monomial {
        let low_mask = if i == 0 { 0 } else { u64::MAX >> (64 - 8 * i) };
        let low = self.packed & low_mask;
        let high = (self.packed & !low_mask) << 8;
        Monomial {
            packed: low | high | ((e as u64) << (8 * i)),
            degree: self.degree + e,
        }
    }

    /// Graded reverse lexicographic comparison.
    #[inline]
    pub fn grevlex_cmp(&self, other: &Monomial) -> Ordering {
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {}
            o => return o,
        }
        let diff = self.packed ^ other.packed;
        if diff == 0 {
            return Ordering::Equal;
        }
        let byte = (63 - diff.leading_zeros()) / 8;
        let a = (self.packed >> (8 * byte)) & 0xff;
        let b = (other.packed >> (8 * byte)) & 0xff;
        // smaller exponent in the last differing variable wins
        b.cmp(&a)
    }

    /// Order-preserving integer key for `grevlex_cmp` among monomials of any degree.
    #[inline]
    pub fn grevlex_key(&self) -> u128 {
        ((self.degree as u128) << 64) | (!self.packed) as u128
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents(MAX_VARS))
    }
}

/// All monomials of total degree `d` in `nvars` variables, in descending grevlex order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::one());
        }
        return out;
    }
    let mut exps = vec![0u32; nvars];
    fn rec(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = exps.len();
        if i == n - 1 {
            exps[i] = left;
            out.push(Monomial::from_exponents(exps));
            return;
        }
        for e in 0..=left {
            exps[i] = e;
            rec(i + 1, left - e, exps, out);
        }
        exps[i] = 0;
    }
    rec(0, d, &mut exps, &mut out);
    out.sort_by(|a, b| b.grevlex_cmp(a));
    out
}

/// Number of monomials of degree `d` in `n` variables.
pub fn monomial_count(n: usize, d: i64) -> u64 {
    if d < 0 {
        return 0;
    }
    if n == 0 {
        return u64::from(d == 0);
    }
    binomial(d as u64 + n as u64 - 1, n as u64 - 1)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u64 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn grevlex_basic() {
        // x > y > z in degree 1; x*z < y^2 in grevlex
        let x = Monomial::var(0);
        let y = Monomial::var(1);
        let z = Monomial::var(2);
        assert_eq!(x.grevlex_cmp(&y), Ordering::Greater);
        assert_eq!(y.grevlex_cmp(&z), Ordering::Greater);
        assert_eq!(x.mul(&z).grevlex_cmp(&y.mul(&y)), Ordering::Less);
        assert_eq!(x.mul(&x).grevlex_cmp(&z), Ordering::Greater);
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(monomials_of_degree(3, 4).len() as u64, monomial_count(3, 4));
        assert_eq!(monomials_of_degree(2, 5).len(), 6);
        assert_eq!(monomials_of_degree(0, 0).len(), 1);
    }

    #[test]
    fn remove_and_insert_vars() {
        let m = Monomial::from_exponents(&[1, 2, 3]);
        assert_eq!(m.remove_var(0).exponents(2), vec![2, 3]);
        assert_eq!(m.remove_var(1).exponents(2), vec![1, 3]);
        assert_eq!(m.remove_var(0).insert_var(0, 1), m);
    }

    fn mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..6, 4).prop_map(|e| Monomial::from_exponents(&e))
    }

    proptest! {
        #[test]
        fn key_agrees_with_cmp(a in mono(), b in mono()) {
            prop_assert_eq!(a.grevlex_cmp(&b), a.grevlex_key().cmp(&b.grevlex_key()));
        }

        #[test]
        fn multiplicative(a in mono(), b in mono(), c in mono()) {
            prop_assert_eq!(a.grevlex_cmp(&b), a.mul(&c).grevlex_cmp(&b.mul(&c)));
        }

        #[test]
        fn divisibility_matches_exponents(a in mono(), b in mono()) {
            let naive = (0..4).all(|i| a.exponent(i) <= b.exponent(i));
            prop_assert_eq!(a.divides(&b), naive);
            prop_assert!(a.divides(&a.lcm(&b)) && b.divides(&a.lcm(&b)));
        }
    }
}
