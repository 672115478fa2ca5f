//! Counting with monomial ideals.

use super::monomial::{monomial_count, monomials_of_degree, Monomial};

/// Monomials of degree `d` in `n` variables divisible by none of `leads`.
pub fn count_standard(n: usize, d: u32, leads: &[Monomial]) -> u64 {
    let relevant: Vec<Monomial> = leads.iter().copied().filter(|m| m.degree() <= d).collect();
    if relevant.is_empty() {
        return monomial_count(n, d as i64);
    }
    monomials_of_degree(n, d)
        .into_iter()
        .filter(|m| !relevant.iter().any(|l| l.divides(m)))
        .count() as u64
}

/// Krull dimension of `S / (leads)`; `-1` when the ideal is the unit ideal.
pub fn monomial_ideal_dimension(n: usize, leads: &[Monomial]) -> i64 {
    if leads.iter().any(|m| m.is_one()) {
        return -1;
    }
    // largest set U of variables such that no generator is supported inside U
    let supports: Vec<u32> = leads
        .iter()
        .map(|m| {
            (0..n)
                .filter(|&i| m.exponent(i) > 0)
                .fold(0u32, |acc, i| acc | (1 << i))
        })
        .collect();
    let mut best = 0i64;
    for u in 0u32..(1u32 << n) {
        let size = u.count_ones() as i64;
        if size <= best {
            continue;
        }
        if supports.iter().all(|&s| s & !u != 0) {
            best = size;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_of_coordinate_ideals() {
        let x = Monomial::var(0);
        let y = Monomial::var(1);
        assert_eq!(monomial_ideal_dimension(3, &[x, y]), 1);
        assert_eq!(monomial_ideal_dimension(3, &[x.mul(&y)]), 2);
        assert_eq!(monomial_ideal_dimension(2, &[]), 2);
        assert_eq!(monomial_ideal_dimension(2, &[Monomial::one()]), -1);
    }

    #[test]
    fn standard_counts() {
        let x = Monomial::var(0);
        assert_eq!(count_standard(2, 3, &[x]), 1);
        assert_eq!(count_standard(2, 3, &[]), 4);
    }
}
