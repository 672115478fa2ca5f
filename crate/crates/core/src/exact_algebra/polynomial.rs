//! Sparse multivariate polynomials over the rationals.

use super::monomial::{Monomial, MAX_VARS};
use super::scalar::Scalar;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Terms are kept sorted by descending grevlex order with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<(Monomial, Scalar)>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS);
        Polynomial {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.push((Monomial::one(), c));
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Scalar::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        Self::monomial(nvars, Monomial::var(i), Scalar::one())
    }

    pub fn monomial(nvars: usize, m: Monomial, c: Scalar) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    /// Linear form `sum coeffs[i] * x_i`.
    pub fn linear_form<T: Into<Scalar> + Clone>(coeffs: &[T]) -> Self {
        let n = coeffs.len();
        let terms = coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (Monomial::var(i), c.clone().into()))
            .collect();
        Self::from_terms(n, terms)
    }

    /// Builds a polynomial from unsorted terms, combining duplicates.
    pub fn from_terms(nvars: usize, terms: Vec<(Monomial, Scalar)>) -> Self {
        let mut map: BTreeMap<u128, (Monomial, Scalar)> = BTreeMap::new();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            let e = map.entry(m.grevlex_key()).or_insert((m, Scalar::zero()));
            e.1 = &e.1 + &c;
        }
        let terms = map
            .into_values()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Polynomial { nvars, terms }
    }

    /// Terms must already be sorted descending and nonzero.
    pub(crate) fn from_sorted_terms(nvars: usize, terms: Vec<(Monomial, Scalar)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0.grevlex_cmp(&w[1].0).is_gt()));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Scalar)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn constant_term(&self) -> Scalar {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Scalar::zero(),
        }
    }

    /// Maximal total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    pub fn leading_coefficient(&self) -> Scalar {
        self.terms
            .first()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Scalar::zero)
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Scalar::zero)
    }

    /// Degree of `x_i` in this polynomial.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponent(i)).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    /// `self + c * m * other`, by merging.
    pub fn add_scaled(&self, other: &Polynomial, m: &Monomial, c: &Scalar) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            if j >= b.len() {
                out.push(a[i].clone());
                i += 1;
                continue;
            }
            let bm = b[j].0.mul(m);
            if i >= a.len() {
                out.push((bm, &b[j].1 * c));
                j += 1;
                continue;
            }
            match a[i].0.grevlex_cmp(&bm) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((bm, &b[j].1 * c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = &a[i].1 + &(&b[j].1 * c);
                    if !s.is_zero() {
                        out.push((bm, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial {
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn add(&self, other: &Polynomial) -> Self {
        self.add_scaled(other, &Monomial::one(), &Scalar::one())
    }

    pub fn sub(&self, other: &Polynomial) -> Self {
        self.add_scaled(other, &Monomial::one(), &Scalar::from_int(-1))
    }

    pub fn neg(&self) -> Self {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn mul(&self, other: &Polynomial) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars);
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Self::zero(self.nvars);
        for (m, c) in &small.terms {
            acc = acc.add_scaled(large, m, c);
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Division with remainder by a single polynomial: `self = q * g + r` with no
    /// term of `r` divisible by the leading monomial of `g`.
    pub fn div_rem(&self, g: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!g.is_zero(), "division by zero polynomial");
        let (gm, gc) = g.leading_term().unwrap().clone();
        let ginv = gc.inv();
        let mut quot: Vec<(Monomial, Scalar)> = Vec::new();
        let mut rem: Vec<(Monomial, Scalar)> = Vec::new();
        let mut p = self.clone();
        while let Some((m, c)) = p.terms.first().cloned() {
            if let Some(q) = m.checked_div(&gm) {
                let f = &c * &ginv;
                p = p.add_scaled(g, &q, &(-&f));
                quot.push((q, f));
            } else {
                rem.push((m, c));
                p.terms.remove(0);
            }
        }
        (
            Polynomial::from_terms(self.nvars, quot),
            Polynomial::from_sorted_terms(self.nvars, rem),
        )
    }

    /// Exact quotient, or `None` if `g` does not divide `self`.
    pub fn exact_div(&self, g: &Polynomial) -> Option<Polynomial> {
        let (q, r) = self.div_rem(g);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn divisible_by(&self, g: &Polynomial) -> bool {
        self.div_rem(g).1.is_zero()
    }

    /// Largest `k` with `x_i^k` dividing every term.
    pub fn var_valuation(&self, i: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponent(i)).min().unwrap_or(u32::MAX)
    }

    /// Divide by `x_i^k`, assuming exact divisibility.
    pub fn div_var_pow(&self, i: usize, k: u32) -> Polynomial {
        let d = Monomial::var_pow(i, k);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (d.quotient_of(m), c.clone()))
            .collect();
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    /// Substitute `x_i = 0` and drop the variable (result has one fewer variable).
    pub fn restrict_var_zero(&self, i: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(i) == 0)
            .map(|(m, c)| (m.remove_var(i), c.clone()))
            .collect();
        Polynomial::from_terms(self.nvars - 1, terms)
    }

    /// Embed into a ring with a new variable at index `i` (not occurring).
    pub fn insert_var(&self, i: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.insert_var(i, 0), c.clone()))
            .collect();
        Polynomial::from_terms(self.nvars + 1, terms)
    }

    /// Substitute `x_i = sum_k rows[i][k] y_k`; the result lives in `rows[0].len()` variables.
    pub fn linear_substitute(&self, rows: &[Vec<Scalar>]) -> Polynomial {
        assert_eq!(rows.len(), self.nvars);
        let target = rows.first().map(|r| r.len()).unwrap_or(0);
        let forms: Vec<Polynomial> = rows.iter().map(|r| Polynomial::linear_form(r)).collect();
        let forms: Vec<Polynomial> = forms
            .into_iter()
            .map(|f| {
                if f.nvars == target {
                    f
                } else {
                    Polynomial::zero(target)
                }
            })
            .collect();
        let mut cache: Vec<Vec<Polynomial>> = forms
            .iter()
            .map(|f| vec![Polynomial::one(target), f.clone()])
            .collect();
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for i in 0..self.nvars {
                let e = m.exponent(i) as usize;
                if e == 0 {
                    continue;
                }
                while cache[i].len() <= e {
                    let next = cache[i].last().unwrap().mul(&forms[i]);
                    cache[i].push(next);
                }
                t = t.mul(&cache[i][e]);
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Evaluate at a rational point.
    pub fn evaluate(&self, point: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, x) in point.iter().enumerate().take(self.nvars) {
                let e = m.exponent(i);
                if e > 0 {
                    t = &t * &x.pow(e);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Clear denominators and divide out the integer content; the leading
    /// coefficient becomes positive. Returns the zero polynomial unchanged.
    pub fn primitive_integer(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = BigInt::zero();
        let mut l = BigInt::one();
        for (_, c) in &self.terms {
            g = g.gcd(&c.numer());
            l = l.lcm(&c.denom());
        }
        let mut factor = Scalar::from_bigint(l) / Scalar::from_bigint(g);
        if self.leading_coefficient().signum() < 0 {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Scale so the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading_coefficient().inv())
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer())
    }

    /// Rename variables: variable `i` becomes `map[i]` in a ring with `nvars` variables.
    pub fn rename_vars(&self, map: &[usize], nvars: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; nvars];
                for (i, &t) in map.iter().enumerate() {
                    e[t] += m.exponent(i);
                }
                (Monomial::from_exponents(&e), c.clone())
            })
            .collect();
        Polynomial::from_terms(nvars, terms)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = ["x", "y", "z", "w", "u", "v", "s", "t"];
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mut mono = String::new();
            for i in 0..self.nvars {
                let e = m.exponent(i);
                let name = if self.nvars <= 4 {
                    names[i].to_string()
                } else {
                    format!("x{}", i + 1)
                };
                if e == 1 {
                    mono.push_str(&name);
                } else if e > 1 {
                    mono.push_str(&format!("{name}^{e}"));
                }
            }
            let neg = c.signum() < 0;
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Polynomial {
        Polynomial::var(2, 0)
    }
    fn y() -> Polynomial {
        Polynomial::var(2, 1)
    }

    #[test]
    fn arithmetic() {
        let p = x().add(&y());
        let q = x().sub(&y());
        assert_eq!(p.mul(&q), x().pow(2).sub(&y().pow(2)));
        assert_eq!(format!("{}", p.pow(2)), "x^2 + 2*xy + y^2");
    }

    #[test]
    fn division() {
        let f = x().pow(3).add(&y().pow(3));
        let g = x().add(&y());
        let q = f.exact_div(&g).unwrap();
        assert_eq!(q.mul(&g), f);
        assert!(x().pow(2).add(&y()).exact_div(&g).is_none());
    }

    #[test]
    fn substitution() {
        // x -> x + y, y -> y
        let rows = vec![
            vec![Scalar::one(), Scalar::one()],
            vec![Scalar::zero(), Scalar::one()],
        ];
        let f = x().mul(&y());
        assert_eq!(f.linear_substitute(&rows), x().mul(&y()).add(&y().pow(2)));
    }

    #[test]
    fn restrict_zero() {
        let f = x().mul(&y()).add(&y().pow(2));
        let r = f.restrict_var_zero(0);
        assert_eq!(r, Polynomial::var(1, 0).pow(2));
    }
}
