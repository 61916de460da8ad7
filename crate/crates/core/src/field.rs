//! Prime fields GF(p) with word-sized moduli.
//!
//! Coefficients are stored as bare `u32` residues in `[0, p)`; the hot paths
//! of the Gröbner engine call the methods on [`PrimeField`] directly. The
//! self-describing [`PrimeFieldElement`] wraps a residue together with its
//! field for user-facing arithmetic.

use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Largest accepted modulus. Products of two residues must fit in `u64`
/// and sums in `u32`.
pub const MAX_MODULUS: u32 = (1 << 31) - 1;

/// The default characteristic used throughout the crate.
pub const DEFAULT_CHARACTERISTIC: u32 = 32003;

/// The field GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p > MAX_MODULUS || !is_prime(p) {
            return Err(Error::InvalidCharacteristic(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn characteristic(self) -> u32 {
        self.p
    }

    /// Reduces a signed integer into `[0, p)`.
    #[inline]
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Some(self.reduce(t0))
    }

    pub fn element(self, v: i64) -> PrimeFieldElement {
        PrimeFieldElement {
            value: self.reduce(v),
            field: self,
        }
    }

    /// Representative in `(-p/2, p/2]`, used for printing.
    pub fn signed(self, a: u32) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

/// A residue together with the field it lives in.
///
/// Binary operators panic when the operands come from different fields, the
/// same way slice indexing panics on out-of-range access.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeFieldElement {
    value: u32,
    field: PrimeField,
}

impl PrimeFieldElement {
    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    #[inline]
    pub fn field(self) -> PrimeField {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inverse(self) -> Option<Self> {
        self.field.inv(self.value).map(|value| PrimeFieldElement {
            value,
            field: self.field,
        })
    }

    pub fn pow(self, exp: u64) -> Self {
        PrimeFieldElement {
            value: self.field.pow(self.value, exp),
            field: self.field,
        }
    }

    fn check(self, other: Self) -> PrimeField {
        assert_eq!(
            self.field, other.field,
            "arithmetic between elements of different prime fields"
        );
        self.field
    }
}

impl Add for PrimeFieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let k = self.check(rhs);
        PrimeFieldElement {
            value: k.add(self.value, rhs.value),
            field: k,
        }
    }
}

impl Sub for PrimeFieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let k = self.check(rhs);
        PrimeFieldElement {
            value: k.sub(self.value, rhs.value),
            field: k,
        }
    }
}

impl Mul for PrimeFieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let k = self.check(rhs);
        PrimeFieldElement {
            value: k.mul(self.value, rhs.value),
            field: k,
        }
    }
}

impl Div for PrimeFieldElement {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let inv = rhs.inverse().expect("division by zero in prime field");
        self * inv
    }
}

impl Neg for PrimeFieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        PrimeFieldElement {
            value: self.field.neg(self.value),
            field: self.field,
        }
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(p: u32) -> impl Iterator<Item = PrimeFieldElement> {
        let k = PrimeField::new(p).unwrap();
        (0..p as i64).map(move |v| k.element(v))
    }

    #[test]
    fn rejects_composites() {
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(32001).is_err());
        assert!(PrimeField::new(32003).is_ok());
        assert!(PrimeField::new(2).is_ok());
    }

    #[test]
    fn field_axioms_exhaustive_small_primes() {
        for p in [2u32, 3, 5] {
            let k = PrimeField::new(p).unwrap();
            let zero = k.element(0);
            let one = k.element(1);
            for a in all(p) {
                assert_eq!(a + zero, a);
                assert_eq!(a * one, a);
                assert_eq!(a + (-a), zero);
                if !a.is_zero() {
                    assert_eq!(a * a.inverse().unwrap(), one);
                }
                for b in all(p) {
                    assert_eq!(a + b, b + a);
                    assert_eq!(a * b, b * a);
                    for c in all(p) {
                        assert_eq!((a + b) + c, a + (b + c));
                        assert_eq!((a * b) * c, a * (b * c));
                        assert_eq!(a * (b + c), a * b + a * c);
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_matches_fermat() {
        let k = PrimeField::new(32003).unwrap();
        for a in [1u32, 2, 3, 17, 1000, 32002] {
            assert_eq!(k.inv(a), Some(k.pow(a, 32001)));
        }
        assert_eq!(k.inv(0), None);
    }

    #[test]
    fn signed_representatives() {
        let k = PrimeField::new(7).unwrap();
        assert_eq!(k.signed(6), -1);
        assert_eq!(k.signed(3), 3);
        assert_eq!(k.signed(4), -3);
    }
}
