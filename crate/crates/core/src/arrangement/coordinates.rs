use crate::exact_algebra::{Polynomial, Scalar};

/// Unimodular coordinates `y = U x` (so `x = V y`) in which a given primitive
/// linear form becomes `y_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdaptedCoordinates {
    pub u: Vec<Vec<i64>>,
    pub v: Vec<Vec<i64>>,
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

impl AdaptedCoordinates {
    /// Column operations reduce `a` to `e_1`; their product is `V`, and `U = V^{-1}`.
    pub fn for_normal(a: &[i64]) -> Self {
        let n = a.len();
        let mut row = a.to_vec();
        let mut v = identity(n);
        // v's columns follow the column operations applied to `row`
        let col_sub = |v: &mut Vec<Vec<i64>>, dst: usize, src: usize, q: i64| {
            for r in v.iter_mut() {
                r[dst] -= q * r[src];
            }
        };
        loop {
            let nz: Vec<usize> = (0..n).filter(|&i| row[i] != 0).collect();
            assert!(!nz.is_empty(), "zero normal");
            if nz.len() == 1 {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| (row[i].abs(), i)).unwrap();
            for &i in &nz {
                if i != p {
                    let q = row[i].div_euclid(row[p]);
                    row[i] -= q * row[p];
                    col_sub(&mut v, i, p, q);
                }
            }
        }
        let p = (0..n).find(|&i| row[i] != 0).unwrap();
        assert_eq!(row[p].abs(), 1, "normal must be primitive");
        if p != 0 {
            row.swap(0, p);
            for r in v.iter_mut() {
                r.swap(0, p);
            }
        }
        if row[0] < 0 {
            for r in v.iter_mut() {
                r[0] = -r[0];
            }
        }
        let u = integer_inverse(&v);
        AdaptedCoordinates { u, v }
    }

    pub fn dim(&self) -> usize {
        self.u.len()
    }

    /// Rows expressing `x_i` in the `y` variables, for `Polynomial::linear_substitute`.
    pub fn x_in_y(&self) -> Vec<Vec<Scalar>> {
        self.v
            .iter()
            .map(|r| r.iter().map(|&a| Scalar::from_int(a)).collect())
            .collect()
    }

    /// Rows expressing `y_i` in the `x` variables.
    pub fn y_in_x(&self) -> Vec<Vec<Scalar>> {
        self.u
            .iter()
            .map(|r| r.iter().map(|&a| Scalar::from_int(a)).collect())
            .collect()
    }

    /// `f(x) ↦ f(V y)`
    pub fn to_y(&self, f: &Polynomial) -> Polynomial {
        f.linear_substitute(&self.x_in_y())
    }

    /// `g(y) ↦ g(U x)`
    pub fn to_x(&self, g: &Polynomial) -> Polynomial {
        g.linear_substitute(&self.y_in_x())
    }

    /// Normal of the form `b·x` written in `y`: the row vector `b V`.
    pub fn normal_in_y(&self, b: &[i64]) -> Vec<i64> {
        let n = self.dim();
        (0..n)
            .map(|k| (0..n).map(|i| b[i] * self.v[i][k]).sum())
            .collect()
    }
}

/// Inverse of a unimodular integer matrix.
fn integer_inverse(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    let mat = crate::exact_algebra::Matrix::from_rows(
        m.iter()
            .map(|r| r.iter().map(|&a| Scalar::from_int(a)).collect())
            .collect(),
        n,
    );
    let inv = mat.inverse().expect("unimodular matrix is invertible");
    inv.data
        .iter()
        .map(|r| r.iter().map(|a| a.to_i64().expect("unimodular inverse is integral")).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::monomial::monomials_of_degree;

    #[test]
    fn examples() {
        let id = AdaptedCoordinates::for_normal(&[1, 0, 0]);
        assert_eq!(id.u, identity(3));
        let c = AdaptedCoordinates::for_normal(&[1, 1]);
        assert_eq!(c.u, vec![vec![1, 1], vec![0, 1]]);
        let c = AdaptedCoordinates::for_normal(&[1, 1, 1, 1]);
        assert_eq!(c.u[0], vec![1, 1, 1, 1]);
        assert_eq!(c.normal_in_y(&[1, 1, 1, 1]), vec![1, 0, 0, 0]);
    }

    #[test]
    fn substitution_round_trip() {
        for a in [vec![0, 1, 0], vec![2, 3, -5], vec![0, 0, 1]] {
            let c = AdaptedCoordinates::for_normal(&a);
            assert_eq!(c.u[0], a);
            for m in (0..=3).flat_map(|d| monomials_of_degree(3, d)) {
                let f = Polynomial::monomial(3, m, Scalar::one());
                assert_eq!(c.to_x(&c.to_y(&f)), f);
            }
        }
    }
}
