//! Index bookkeeping for `∧^p` of a rank-`ℓ` free module.

use crate::exact_algebra::ext::combinations;
use crate::exact_algebra::{Matrix, Scalar};

/// All `p`-subsets of `0..n`, in lexicographic order; position = component index.
pub fn subsets(n: usize, p: usize) -> Vec<Vec<usize>> {
    if p > n {
        return Vec::new();
    }
    combinations(n, p)
}

pub fn subset_index(all: &[Vec<usize>], s: &[usize]) -> usize {
    all.binary_search_by(|t| t.as_slice().cmp(s))
        .expect("subset present in the lexicographic list")
}

pub fn complement(n: usize, s: &[usize]) -> Vec<usize> {
    (0..n).filter(|i| !s.contains(i)).collect()
}

/// Sign of the permutation listing `s` followed by its complement.
pub fn shuffle_sign(s: &[usize]) -> i64 {
    let inv: usize = s.iter().enumerate().map(|(k, &i)| i - k).sum();
    if inv.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Determinant of the submatrix with the given rows and columns.
pub fn minor(m: &[Vec<i64>], rows: &[usize], cols: &[usize]) -> Scalar {
    if rows.is_empty() {
        return Scalar::one();
    }
    let sub = Matrix::from_rows(
        rows.iter()
            .map(|&r| cols.iter().map(|&c| Scalar::from_int(m[r][c])).collect())
            .collect(),
        cols.len(),
    );
    sub.determinant()
}

/// Insert `i` into the sorted set `s`; returns the new set and the position of `i`.
pub fn insert_sorted(s: &[usize], i: usize) -> (Vec<usize>, usize) {
    let pos = s.iter().position(|&j| j > i).unwrap_or(s.len());
    let mut out = s.to_vec();
    out.insert(pos, i);
    (out, pos)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shuffle_signs() {
        assert_eq!(shuffle_sign(&[0]), 1);
        assert_eq!(shuffle_sign(&[1]), -1);
        assert_eq!(shuffle_sign(&[0, 2]), -1);
        assert_eq!(shuffle_sign(&[1, 2]), 1);
        assert_eq!(shuffle_sign(&[]), 1);
    }

    #[test]
    fn subset_lists() {
        let s = subsets(4, 2);
        assert_eq!(s.len(), 6);
        assert_eq!(subset_index(&s, &[1, 3]), 4);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(complement(4, &[1, 3]), vec![0, 2]);
    }
}
