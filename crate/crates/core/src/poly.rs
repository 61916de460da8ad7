//! Standard-graded polynomial rings over GF(p) and their elements.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::{PrimeField, PrimeFieldElement};
use crate::monomial::{Monomial, MonomialOrder, MAX_VARS};
use crate::vector::{Ctx, FreeVector, Term};

/// `GF(p)[v_1, ..., v_n]` with every variable of degree one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolynomialRing {
    field: PrimeField,
    names: Vec<String>,
    order: MonomialOrder,
}

impl PolynomialRing {
    pub fn new(characteristic: u32, names: &[&str], order: MonomialOrder) -> Result<Arc<Self>> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        Self::with_names(characteristic, names, order)
    }

    pub fn with_names(characteristic: u32, names: Vec<String>, order: MonomialOrder) -> Result<Arc<Self>> {
        let field = PrimeField::new(characteristic)?;
        if names.is_empty() {
            return Err(Error::InvalidVariables("at least one variable is required".into()));
        }
        if names.len() > MAX_VARS {
            return Err(Error::InvalidVariables(alloc::format!(
                "at most {MAX_VARS} variables are supported"
            )));
        }
        for (i, n) in names.iter().enumerate() {
            let valid = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::InvalidVariables(alloc::format!("`{n}` is not an identifier")));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidVariables(alloc::format!("duplicate variable `{n}`")));
            }
        }
        Ok(Arc::new(PolynomialRing { field, names, order }))
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn characteristic(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn ctx(&self) -> Ctx {
        Ctx {
            field: self.field,
            order: self.order,
            nvars: self.names.len(),
        }
    }

    pub fn zero(self: &Arc<Self>) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            vec: FreeVector::zero(),
        }
    }

    pub fn constant(self: &Arc<Self>, c: i64) -> Polynomial {
        let c = self.field.reduce(c);
        Polynomial {
            ring: self.clone(),
            vec: FreeVector::single(0, Monomial::one(self.nvars()), c),
        }
    }

    pub fn one(self: &Arc<Self>) -> Polynomial {
        self.constant(1)
    }

    pub fn var(self: &Arc<Self>, i: usize) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            vec: FreeVector::single(0, Monomial::variable(self.nvars(), i), 1),
        }
    }

    pub fn variables(self: &Arc<Self>) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    pub fn monomial(self: &Arc<Self>, coeff: i64, mono: Monomial) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            vec: FreeVector::single(0, mono, self.field.reduce(coeff)),
        }
    }

    /// Builds a polynomial from arbitrary `(exponent vector, coefficient)`
    /// pairs, in any order and with repetitions.
    pub fn canonical_form(self: &Arc<Self>, terms: &[(Monomial, u32)]) -> Result<Polynomial> {
        let ctx = self.ctx();
        let mut ts = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if m.nvars() != self.nvars() {
                return Err(Error::DimensionMismatch {
                    expected: self.nvars(),
                    found: m.nvars(),
                });
            }
            ts.push(Term {
                pos: 0,
                mono: *m,
                coeff: c % self.characteristic(),
            });
        }
        Ok(Polynomial {
            ring: self.clone(),
            vec: FreeVector::from_terms(&ctx, ts),
        })
    }

    pub(crate) fn wrap(self: &Arc<Self>, vec: FreeVector) -> Polynomial {
        debug_assert!(vec.terms().iter().all(|t| t.pos == 0));
        Polynomial { ring: self.clone(), vec }
    }

    /// Parses the infix form `3*a^2*b - c + 5`. Parentheses and integer
    /// powers of parenthesised expressions are accepted as well.
    pub fn parse(self: &Arc<Self>, text: &str) -> Result<Polynomial> {
        let mut p = Parser {
            ring: self,
            src: text.as_bytes(),
            at: 0,
        };
        let out = p.expr()?;
        p.skip_ws();
        if p.at != p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(out)
    }
}

/// An element of the ambient polynomial ring, in canonical sorted form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Arc<PolynomialRing>,
    vec: FreeVector,
}

impl Polynomial {
    pub fn ring(&self) -> &Arc<PolynomialRing> {
        &self.ring
    }

    pub fn as_vector(&self) -> &FreeVector {
        &self.vec
    }

    pub fn is_zero(&self) -> bool {
        self.vec.is_zero()
    }

    /// `(exponent vector, coefficient)` pairs, descending in the ring's order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, u32)> + '_ {
        self.vec.terms().iter().map(|t| (t.mono, t.coeff))
    }

    pub fn num_terms(&self) -> usize {
        self.vec.len()
    }

    pub fn leading_term(&self) -> Option<(Monomial, PrimeFieldElement)> {
        self.vec
            .lead()
            .map(|t| (t.mono, self.ring.field().element(t.coeff as i64)))
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.vec.terms().iter().map(|t| t.mono.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.vec.is_homogeneous(&[0])
    }

    /// The constant coefficient.
    pub fn constant_term(&self) -> u32 {
        self.vec
            .terms()
            .iter()
            .find(|t| t.mono.is_one())
            .map_or(0, |t| t.coeff)
    }

    fn same_ring(&self, other: &Polynomial) -> Result<Ctx> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(self.ring.ctx())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        let ctx = self.same_ring(other)?;
        Ok(self.ring.wrap(self.vec.add(&ctx, &other.vec)))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        let ctx = self.same_ring(other)?;
        Ok(self.ring.wrap(self.vec.sub(&ctx, &other.vec)))
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        let ctx = self.same_ring(other)?;
        Ok(self.ring.wrap(self.vec.mul_poly(&ctx, &other.vec)))
    }

    pub fn scale(&self, c: i64) -> Polynomial {
        let ctx = self.ring.ctx();
        let c = self.ring.field().reduce(c);
        self.ring.wrap(self.vec.scale(&ctx, c))
    }

    pub fn neg(&self) -> Polynomial {
        let ctx = self.ring.ctx();
        self.ring.wrap(self.vec.neg(&ctx))
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let ctx = self.ring.ctx();
        let mut acc = self.ring.one().vec;
        let mut base = self.vec.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_poly(&ctx, &base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_poly(&ctx, &base);
            }
        }
        self.ring.wrap(acc)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Writes `c*x^e*y` style monomials; shared with matrix printing.
pub(crate) fn write_terms(
    f: &mut dyn fmt::Write,
    ring: &PolynomialRing,
    terms: impl Iterator<Item = (Monomial, u32)>,
) -> fmt::Result {
    let mut first = true;
    for (mono, c) in terms {
        let s = ring.field().signed(c);
        let mag = s.unsigned_abs();
        if first {
            if s < 0 {
                f.write_str("-")?;
            }
        } else if s < 0 {
            f.write_str(" - ")?;
        } else {
            f.write_str(" + ")?;
        }
        first = false;
        let mut parts: Vec<String> = Vec::new();
        if mag != 1 || mono.is_one() {
            parts.push(mag.to_string());
        }
        for (i, name) in ring.names().iter().enumerate() {
            match mono.exponent(i) {
                0 => {}
                1 => parts.push(name.clone()),
                e => parts.push(alloc::format!("{name}^{e}")),
            }
        }
        f.write_str(&parts.join("*"))?;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.ring, self.terms())
    }
}

struct Parser<'a> {
    ring: &'a Arc<PolynomialRing>,
    src: &'a [u8],
    at: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            position: self.at,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.at < self.src.len() && self.src[self.at].is_ascii_whitespace() {
            self.at += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.at).copied()
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.at;
        while self.at < self.src.len() && self.src[self.at].is_ascii_digit() {
            self.at += 1;
        }
        if start == self.at {
            return Err(self.error("expected a number"));
        }
        core::str::from_utf8(&self.src[start..self.at])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| self.error("number out of range"))
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.ring.zero();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.at += 1;
                -1
            }
            Some(b'+') => {
                self.at += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign > 0 { acc.add(&t)? } else { acc.sub(&t)? };
            match self.peek() {
                Some(b'+') => {
                    self.at += 1;
                    sign = 1;
                }
                Some(b'-') => {
                    self.at += 1;
                    sign = -1;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.at += 1;
            let f = self.factor()?;
            acc = acc.mul(&f)?;
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() == Some(b'^') {
            self.at += 1;
            let e = self.number()?;
            u32::try_from(e).map_err(|_| self.error("exponent out of range"))
        } else {
            Ok(1)
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.at += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.at += 1;
                let e = self.exponent()?;
                Ok(inner.pow(e))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.number()?;
                let c = (n % self.ring.characteristic() as u64) as i64;
                let e = self.exponent()?;
                Ok(self.ring.constant(c).pow(e))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.at;
                while self.at < self.src.len()
                    && (self.src[self.at].is_ascii_alphanumeric() || self.src[self.at] == b'_')
                {
                    self.at += 1;
                }
                let name = core::str::from_utf8(&self.src[start..self.at]).expect("ascii");
                let i = self
                    .ring
                    .variable_index(name)
                    .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
                let e = self.exponent()?;
                let mut exps = [0u32; MAX_VARS];
                exps[i] = e;
                let mono = Monomial::from_exponents(&exps[..self.ring.nvars()])?;
                Ok(self.ring.monomial(1, mono))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn ring(p: u32, names: &[&str]) -> Arc<PolynomialRing> {
        PolynomialRing::new(p, names, MonomialOrder::DegRevLex).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = ring(32003, &["a", "b"]);
        let f = r.parse("(a+b)*(a-b)").unwrap();
        assert_eq!(f, r.parse("a^2 - b^2").unwrap());
        assert_eq!(format!("{f}"), "a^2 - b^2");
    }

    #[test]
    fn add_zero_is_identity() {
        let r = ring(32003, &["a", "b", "c"]);
        let f = r.parse("3*a*b - 7*c^2 + b^2").unwrap();
        assert_eq!(f.add(&r.zero()).unwrap(), f);
    }

    #[test]
    fn cancelling_terms_vanish() {
        let r = ring(32003, &["a"]);
        let a = Monomial::variable(1, 0);
        let f = r.canonical_form(&[(a, 1), (a, 32002)]).unwrap();
        assert!(f.is_zero());
    }

    #[test]
    fn printing_elides_unit_coefficients() {
        let r = ring(32003, &["x", "y"]);
        let f = r.parse("-x*y + 2*y^3 - 1").unwrap();
        assert_eq!(format!("{f}"), "2*y^3 - x*y - 1");
        assert_eq!(format!("{}", r.zero()), "0");
        assert_eq!(r.parse(&format!("{f}")).unwrap(), f);
    }

    #[test]
    fn parse_errors_carry_positions() {
        let r = ring(32003, &["a", "b"]);
        assert!(matches!(r.parse("a + q"), Err(Error::UnknownVariable(_))));
        assert!(matches!(r.parse("a +"), Err(Error::Parse { position: 3, .. })));
        assert!(matches!(r.parse("a ) b"), Err(Error::Parse { .. })));
    }

    #[test]
    fn ring_mismatch_is_rejected() {
        let r = ring(32003, &["a", "b"]);
        let s = ring(7, &["a", "b"]);
        assert_eq!(r.var(0).add(&s.var(0)), Err(Error::RingMismatch));
    }

    #[test]
    fn multiplication_adds_degrees() {
        let r = ring(32003, &["a", "b", "c"]);
        let f = r.parse("a^2 + b*c").unwrap();
        let g = r.parse("a - 2*c").unwrap();
        assert_eq!(f.mul(&g).unwrap().degree(), Some(3));
        assert!(f.mul(&g).unwrap().is_homogeneous());
    }
}
