//! Dense exact linear algebra.

use super::polynomial::Polynomial;
use super::scalar::Scalar;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<Scalar>>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![vec![Scalar::zero(); cols]; rows],
        }
    }

    pub fn from_rows(data: Vec<Vec<Scalar>>, cols: usize) -> Self {
        assert!(data.iter().all(|r| r.len() == cols));
        Matrix {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = Scalar::one();
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i][j]
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k][j];
                    if !b.is_zero() {
                        out.data[i][j] = &out.data[i][j] + &(a * b);
                    }
                }
            }
        }
        out
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.data[i][c].is_zero()) else {
                continue;
            };
            self.data.swap(r, p);
            let inv = self.data[r][c].inv();
            for j in c..self.cols {
                if !self.data[r][j].is_zero() {
                    self.data[r][j] = &self.data[r][j] * &inv;
                }
            }
            let pivot_row = self.data[r].clone();
            for i in 0..self.rows {
                if i == r || self.data[i][c].is_zero() {
                    continue;
                }
                let f = self.data[i][c].clone();
                for j in c..self.cols {
                    if !pivot_row[j].is_zero() {
                        self.data[i][j] = &self.data[i][j] - &(&f * &pivot_row[j]);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{ v : self * v = 0 }`, one vector per free column, in column order.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -&m.data[row][free];
            }
            basis.push(v);
        }
        basis
    }

    pub fn determinant(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let n = self.rows;
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.data[i][c].is_zero()) else {
                return Scalar::zero();
            };
            if p != c {
                m.data.swap(p, c);
                det = -det;
            }
            let piv = m.data[c][c].clone();
            det = &det * &piv;
            let inv = piv.inv();
            for i in c + 1..n {
                if m.data[i][c].is_zero() {
                    continue;
                }
                let f = &m.data[i][c] * &inv;
                for j in c..n {
                    let t = &f * &m.data[c][j];
                    m.data[i][j] = &m.data[i][j] - &t;
                }
            }
        }
        det
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.data[i][j] = self.data[i][j].clone();
            }
            aug.data[i][n + i] = Scalar::one();
        }
        let piv = aug.rref();
        if piv.len() < n || piv[n - 1] >= n {
            return None;
        }
        let data = aug.data.into_iter().map(|r| r[n..].to_vec()).collect();
        Some(Matrix::from_rows(data, n))
    }
}

/// Determinant of a square polynomial matrix by fraction-free elimination.
pub fn poly_determinant(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return Polynomial::one(0);
    }
    let nvars = m[0][0].nvars();
    let mut a: Vec<Vec<Polynomial>> = m.to_vec();
    let mut sign = Scalar::one();
    let mut prev = Polynomial::one(nvars);
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Polynomial::zero(nvars);
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = t.exact_div(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = Polynomial::zero(nvars);
        }
        prev = a[k][k].clone();
    }
    a[n - 1][n - 1].scale(&sign)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    #[test]
    fn nullspace_and_rank() {
        let m = Matrix::from_rows(vec![vec![s(1), s(1), s(0)], vec![s(0), s(1), s(1)]], 3);
        assert_eq!(m.rank(), 2);
        let k = m.nullspace();
        assert_eq!(k, vec![vec![s(1), s(-1), s(1)]]);
    }

    #[test]
    fn determinants() {
        let m = Matrix::from_rows(vec![vec![s(0), s(2)], vec![s(3), s(1)]], 2);
        assert_eq!(m.determinant(), s(-6));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        let z = Polynomial::zero(2);
        let d = poly_determinant(&[vec![z.clone(), x.clone()], vec![y.clone(), x.clone()]]);
        assert_eq!(d, x.mul(&y).neg());
    }
}
