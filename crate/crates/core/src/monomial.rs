//! Exponent vectors and monomial orders.

use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// Maximum number of ring variables. Exponent vectors are stored inline.
pub const MAX_VARS: usize = 8;

/// An exponent vector over a fixed number of variables, with its total
/// degree cached.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    nvars: u8,
    degree: u32,
}

/// Term orders on monomials.
///
/// On free modules the crate always uses position-over-term with the lowest
/// position most significant, refined by one of these.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    Lex,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS);
        Monomial {
            exps: [0; MAX_VARS],
            nvars: nvars as u8,
            degree: 0,
        }
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::DimensionMismatch {
                expected: MAX_VARS,
                found: exps.len(),
            });
        }
        let mut m = Monomial::one(exps.len());
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u16::try_from(e).map_err(|_| Error::InvalidVariables("exponent too large".into()))?;
            m.degree += e;
        }
        Ok(m)
    }

    /// The monomial `x_i`.
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.nvars as usize]
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = *self;
        for i in 0..self.nvars as usize {
            out.exps[i] = self.exps[i]
                .checked_add(other.exps[i])
                .expect("monomial exponent overflow");
        }
        out.degree = self.degree + other.degree;
        out
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree {
            return false;
        }
        (0..self.nvars as usize).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self`, assuming `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let mut out = *other;
        for i in 0..self.nvars as usize {
            out.exps[i] = other.exps[i] - self.exps[i];
        }
        out.degree = other.degree - self.degree;
        out
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        let mut degree = 0;
        for i in 0..self.nvars as usize {
            out.exps[i] = self.exps[i].max(other.exps[i]);
            degree += out.exps[i] as u32;
        }
        out.degree = degree;
        out
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..self.nvars as usize).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// Set of variables with positive exponent, as a bit mask.
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0;
        for i in 0..self.nvars as usize {
            if self.exps[i] > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    #[inline]
    pub fn cmp_in(&self, order: MonomialOrder, other: &Monomial) -> Ordering {
        match order {
            MonomialOrder::DegRevLex => {
                if self.degree != other.degree {
                    return self.degree.cmp(&other.degree);
                }
                for i in (0..self.nvars as usize).rev() {
                    if self.exps[i] != other.exps[i] {
                        return other.exps[i].cmp(&self.exps[i]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => {
                for i in 0..self.nvars as usize {
                    if self.exps[i] != other.exps[i] {
                        return self.exps[i].cmp(&other.exps[i]);
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// Compares two exponent vectors, rejecting vectors of different lengths.
pub fn compare_monomials(order: MonomialOrder, a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.nvars != b.nvars {
        return Err(Error::DimensionMismatch {
            expected: a.nvars(),
            found: b.nvars(),
        });
    }
    Ok(a.cmp_in(order, b))
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.exponents()).finish()
    }
}

/// All monomials of the given degree in `nvars` variables, in an unspecified
/// but deterministic order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> alloc::vec::Vec<Monomial> {
    let mut out = alloc::vec::Vec::new();
    let mut exps = [0u32; MAX_VARS];
    fn rec(
        i: usize,
        nvars: usize,
        left: u32,
        exps: &mut [u32; MAX_VARS],
        out: &mut alloc::vec::Vec<Monomial>,
    ) {
        if i + 1 == nvars {
            exps[i] = left;
            out.push(Monomial::from_exponents(&exps[..nvars]).expect("bounded exponents"));
            return;
        }
        for e in (0..=left).rev() {
            exps[i] = e;
            rec(i + 1, nvars, left - e, exps, out);
        }
    }
    if nvars == 0 {
        if degree == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(0, nvars, degree, &mut exps, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn grevlex_examples() {
        // a^2 b vs a b^2 in k[a,b,c]
        let o = MonomialOrder::DegRevLex;
        assert_eq!(compare_monomials(o, &m(&[2, 1, 0]), &m(&[1, 2, 0])), Ok(Ordering::Greater));
        assert_eq!(compare_monomials(o, &m(&[1, 1, 1]), &m(&[1, 1, 1])), Ok(Ordering::Equal));
        // grevlex prefers a^2 over b c? both degree 2, last variable c: 0 vs 1
        assert_eq!(m(&[2, 0, 0]).cmp_in(o, &m(&[0, 1, 1])), Ordering::Greater);
        assert_eq!(m(&[1, 0, 0]).cmp_in(o, &m(&[0, 0, 2])), Ordering::Less);
    }

    #[test]
    fn lex_examples() {
        let o = MonomialOrder::Lex;
        assert_eq!(compare_monomials(o, &m(&[1, 0]), &m(&[0, 1])), Ok(Ordering::Greater));
        assert_eq!(m(&[1, 0, 0]).cmp_in(o, &m(&[0, 0, 5])), Ordering::Greater);
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let r = compare_monomials(MonomialOrder::Lex, &m(&[1, 0]), &m(&[1, 0, 0]));
        assert!(matches!(r, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn division_and_lcm() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 3, 1]);
        let l = a.lcm(&b);
        assert_eq!(l, m(&[2, 3, 1]));
        assert!(a.divides(&l) && b.divides(&l));
        assert_eq!(a.quotient_of(&l), m(&[0, 2, 1]));
        assert!(!a.is_coprime(&b));
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 2, 0])));
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(4, 3).len(), 20);
        assert_eq!(monomials_of_degree(2, 0).len(), 1);
    }
}
