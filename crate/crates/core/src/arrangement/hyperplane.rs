use crate::error::{Error, Result};
use crate::exact_algebra::{Polynomial, Scalar};
use num_integer::Integer;
use std::fmt;

/// A linear hyperplane, identified by its primitive normal with positive first nonzero entry.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperplane {
    normal: Vec<i64>,
}

/// Canonical representative of the line spanned by `raw`.
pub fn canonicalize(raw: &[i64]) -> Result<Hyperplane> {
    let g = raw.iter().fold(0i64, |g, &a| g.gcd(&a));
    if g == 0 {
        return Err(Error::Input("zero normal vector".into()));
    }
    let first = raw.iter().copied().find(|&a| a != 0).unwrap();
    let sign = if first < 0 { -1 } else { 1 };
    Ok(Hyperplane {
        normal: raw.iter().map(|a| sign * a / g).collect(),
    })
}

/// Canonicalize a rational normal vector.
pub fn canonicalize_rational(raw: &[Scalar]) -> Result<Hyperplane> {
    let (_, l) = crate::exact_algebra::scalar::content_and_denominator(raw);
    let lcm = Scalar::from_bigint(l);
    let ints: Option<Vec<i64>> = raw.iter().map(|a| (a * &lcm).to_i64()).collect();
    match ints {
        Some(v) => canonicalize(&v),
        None => Err(Error::Input("normal vector entries exceed machine integers".into())),
    }
}

impl Hyperplane {
    pub fn normal(&self) -> &[i64] {
        &self.normal
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn normal_scalars(&self) -> Vec<Scalar> {
        self.normal.iter().map(|&a| Scalar::from_int(a)).collect()
    }

    /// The defining linear form.
    pub fn linear_form(&self) -> Polynomial {
        Polynomial::linear_form(&self.normal)
    }

    /// Value of the defining form on a vector.
    pub fn eval(&self, v: &[Scalar]) -> Scalar {
        self.normal
            .iter()
            .zip(v)
            .fold(Scalar::zero(), |acc, (&a, x)| &acc + &(&Scalar::from_int(a) * x))
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.linear_form())
    }
}

impl fmt::Debug for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.normal)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        assert_eq!(canonicalize(&[0, -2, 0, 0]).unwrap().normal(), &[0, 1, 0, 0]);
        assert_eq!(canonicalize(&[2, 2, 0, 2]).unwrap().normal(), &[1, 1, 0, 1]);
        assert_eq!(canonicalize(&[-1, 1]).unwrap().normal(), &[1, -1]);
        assert!(canonicalize(&[0, 0]).is_err());
    }
}
