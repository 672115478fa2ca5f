//! Graded free modules over a polynomial ring and their elements.

use super::polynomial::Polynomial;
use super::scalar::Scalar;
use crate::error::{Error, Result};
use std::fmt;

/// `S^r` with basis vector `e_i` in degree `shifts[i]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FreeModule {
    nvars: usize,
    shifts: Vec<i64>,
}

impl FreeModule {
    pub fn new(nvars: usize, shifts: Vec<i64>) -> Self {
        FreeModule { nvars, shifts }
    }

    pub fn uniform(nvars: usize, rank: usize, shift: i64) -> Self {
        FreeModule {
            nvars,
            shifts: vec![shift; rank],
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    pub fn shift(&self, i: usize) -> i64 {
        self.shifts[i]
    }

    /// The dual module, with negated shifts.
    pub fn dual(&self) -> FreeModule {
        FreeModule {
            nvars: self.nvars,
            shifts: self.shifts.iter().map(|s| -s).collect(),
        }
    }

    /// Shift every basis degree by `k`.
    pub fn twist(&self, k: i64) -> FreeModule {
        FreeModule {
            nvars: self.nvars,
            shifts: self.shifts.iter().map(|s| s + k).collect(),
        }
    }

    pub fn zero(&self) -> FreeModuleElement {
        FreeModuleElement::zero(self.nvars, self.rank())
    }

    pub fn basis_vector(&self, i: usize) -> FreeModuleElement {
        FreeModuleElement::basis(self.nvars, self.rank(), i)
    }

    /// Dimension of the degree-`d` piece.
    pub fn hilbert(&self, d: i64) -> u64 {
        self.shifts
            .iter()
            .map(|s| super::monomial::monomial_count(self.nvars, d - s))
            .sum()
    }

    pub fn check_element(&self, v: &FreeModuleElement) -> Result<()> {
        if v.rank() != self.rank() {
            return Err(Error::Input(format!(
                "element of rank {} in ambient of rank {}",
                v.rank(),
                self.rank()
            )));
        }
        if v.components().iter().any(|c| c.nvars() != self.nvars) {
            return Err(Error::Input("element over a different polynomial ring".into()));
        }
        Ok(())
    }

    /// Degree of a homogeneous element, `None` for zero or inhomogeneous input.
    pub fn degree_of(&self, v: &FreeModuleElement) -> Option<i64> {
        let mut deg = None;
        for (i, c) in v.components().iter().enumerate() {
            for (m, _) in c.terms() {
                let d = m.degree() as i64 + self.shifts[i];
                match deg {
                    None => deg = Some(d),
                    Some(e) if e != d => return None,
                    _ => {}
                }
            }
        }
        deg
    }

    pub fn is_homogeneous(&self, v: &FreeModuleElement) -> bool {
        v.is_zero() || self.degree_of(v).is_some()
    }

    /// Direct sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &FreeModule) -> FreeModule {
        assert_eq!(self.nvars, other.nvars);
        let mut shifts = self.shifts.clone();
        shifts.extend_from_slice(&other.shifts);
        FreeModule {
            nvars: self.nvars,
            shifts,
        }
    }
}

/// A vector of polynomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeModuleElement {
    nvars: usize,
    comps: Vec<Polynomial>,
}

impl FreeModuleElement {
    pub fn zero(nvars: usize, rank: usize) -> Self {
        FreeModuleElement {
            nvars,
            comps: vec![Polynomial::zero(nvars); rank],
        }
    }

    pub fn basis(nvars: usize, rank: usize, i: usize) -> Self {
        let mut v = Self::zero(nvars, rank);
        v.comps[i] = Polynomial::one(nvars);
        v
    }

    pub fn from_components(nvars: usize, comps: Vec<Polynomial>) -> Self {
        debug_assert!(comps.iter().all(|c| c.nvars() == nvars));
        FreeModuleElement { nvars, comps }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.comps[i]
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.comps
    }

    pub fn set_component(&mut self, i: usize, p: Polynomial) {
        self.comps[i] = p;
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank());
        FreeModuleElement {
            nvars: self.nvars,
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank());
        FreeModuleElement {
            nvars: self.nvars,
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        FreeModuleElement {
            nvars: self.nvars,
            comps: self.comps.iter().map(|a| a.scale(c)).collect(),
        }
    }

    pub fn mul_poly(&self, f: &Polynomial) -> Self {
        FreeModuleElement {
            nvars: self.nvars,
            comps: self.comps.iter().map(|a| a.mul(f)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&Scalar::from_int(-1))
    }

    /// `sum_i coeffs[i] * vs[i]`
    pub fn combination(nvars: usize, rank: usize, coeffs: &[Polynomial], vs: &[FreeModuleElement]) -> Self {
        assert_eq!(coeffs.len(), vs.len());
        let mut acc = Self::zero(nvars, rank);
        for (c, v) in coeffs.iter().zip(vs) {
            if !c.is_zero() {
                acc = acc.add(&v.mul_poly(c));
            }
        }
        acc
    }

    /// Apply a map to every component.
    pub fn map_components(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        let comps: Vec<Polynomial> = self.comps.iter().map(f).collect();
        let nvars = comps.first().map(|c| c.nvars()).unwrap_or(self.nvars);
        FreeModuleElement { nvars, comps }
    }

    /// Divide every component by `g`, or `None` when some component is not divisible.
    pub fn exact_div(&self, g: &Polynomial) -> Option<Self> {
        let mut comps = Vec::with_capacity(self.comps.len());
        for c in &self.comps {
            comps.push(c.exact_div(g)?);
        }
        Some(FreeModuleElement {
            nvars: self.nvars,
            comps,
        })
    }

    /// Gcd of all components (1 for the zero vector's nonzero-free case is zero).
    pub fn content(&self) -> Polynomial {
        let mut g = Polynomial::zero(self.nvars);
        for c in &self.comps {
            g = super::gcd::gcd_poly(&g, c);
            if g.is_constant() && !g.is_zero() {
                break;
            }
        }
        g
    }

    /// Scale so the coefficients are coprime integers and the first nonzero leading coefficient is positive.
    pub fn primitive(&self) -> Self {
        let mut coeffs = Vec::new();
        for c in &self.comps {
            for (_, a) in c.terms() {
                coeffs.push(a.clone());
            }
        }
        if coeffs.is_empty() {
            return self.clone();
        }
        let (g, l) = super::scalar::content_and_denominator(&coeffs);
        let mut f = Scalar::from_bigint(l) / Scalar::from_bigint(g);
        let first = self
            .comps
            .iter()
            .find(|c| !c.is_zero())
            .map(|c| c.leading_coefficient())
            .unwrap();
        if first.signum() < 0 {
            f = -f;
        }
        self.scale(&f)
    }
}

impl fmt::Display for FreeModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.comps.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for FreeModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
