//! Combinatorics of monomial ideals: dimension and standard monomials.

use alloc::vec::Vec;

use crate::monomial::{monomials_of_degree, Monomial};

/// Krull dimension of `k[x_1..x_n] / J` for the monomial ideal `J`
/// generated by `gens`; `-1` when `J` is the unit ideal.
///
/// The dimension is the size of a largest variable subset `U` such that no
/// generator is supported inside `U`.
pub fn dimension(gens: &[Monomial], nvars: usize) -> i32 {
    if gens.iter().any(|g| g.is_one()) {
        return -1;
    }
    let supports: Vec<u32> = gens.iter().map(|g| g.support_mask()).collect();
    let mut best = 0;
    for u in 0u32..(1 << nvars) {
        let size = u.count_ones() as i32;
        if size <= best {
            continue;
        }
        if supports.iter().all(|&s| s & !u != 0) {
            best = size;
        }
    }
    best
}

/// Number of monomials outside `J` of each degree, up to and including
/// `max_degree`.
pub fn hilbert_function(gens: &[Monomial], nvars: usize, max_degree: u32) -> Vec<u64> {
    (0..=max_degree)
        .map(|d| {
            monomials_of_degree(nvars, d)
                .iter()
                .filter(|m| !gens.iter().any(|g| g.divides(m)))
                .count() as u64
        })
        .collect()
}

/// Total number of standard monomials when finite.
pub fn standard_monomial_count(gens: &[Monomial], nvars: usize) -> Option<u64> {
    if dimension(gens, nvars) > 0 {
        return None;
    }
    if gens.iter().any(|g| g.is_one()) {
        return Some(0);
    }
    // J contains a pure power of every variable; past the sum of those
    // exponents (minus nvars) nothing survives
    let mut bound = 0u32;
    for i in 0..nvars {
        let e = gens
            .iter()
            .filter(|g| g.support_mask() == 1 << i)
            .map(|g| g.exponent(i))
            .min()
            .expect("zero-dimensional monomial ideal has pure powers");
        bound += e - 1;
    }
    Some(hilbert_function(gens, nvars, bound).iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn dimensions_of_coordinate_arrangements() {
        // (ac, bc, c^2) in k[a,b,c]
        assert_eq!(dimension(&[m(&[1, 0, 1]), m(&[0, 1, 1]), m(&[0, 0, 2])], 3), 2);
        // (ac, ad, bc, bd) in k[a,b,c,d]
        let two_planes = [m(&[1, 0, 1, 0]), m(&[1, 0, 0, 1]), m(&[0, 1, 1, 0]), m(&[0, 1, 0, 1])];
        assert_eq!(dimension(&two_planes, 4), 2);
        assert_eq!(dimension(&[], 2), 2);
        assert_eq!(dimension(&[m(&[0, 0])], 2), -1);
    }

    #[test]
    fn counts_standard_monomials() {
        // (a, b, c^2): 1, c
        assert_eq!(standard_monomial_count(&[m(&[1, 0, 0]), m(&[0, 1, 0]), m(&[0, 0, 2])], 3), Some(2));
        // (a^2, b^3): 6
        assert_eq!(standard_monomial_count(&[m(&[2, 0]), m(&[0, 3])], 2), Some(6));
        assert_eq!(standard_monomial_count(&[m(&[2, 0])], 2), None);
    }
}
