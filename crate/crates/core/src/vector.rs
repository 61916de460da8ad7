//! Sparse vectors in free modules over the ambient polynomial ring.
//!
//! A vector is a list of terms `coeff * mono * e_pos`, sorted descending in
//! the position-over-term order: a lower position is more significant, and
//! within a position monomials compare by the active [`MonomialOrder`].
//! Polynomials are vectors supported at position 0.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::field::PrimeField;
use crate::monomial::{Monomial, MonomialOrder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub pos: u32,
    pub mono: Monomial,
    pub coeff: u32,
}

/// Arithmetic context: coefficient field and term order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ctx {
    pub field: PrimeField,
    pub order: MonomialOrder,
    pub nvars: usize,
}

impl Ctx {
    #[inline]
    pub fn cmp_terms(&self, a: &Term, b: &Term) -> Ordering {
        b.pos
            .cmp(&a.pos)
            .then_with(|| a.mono.cmp_in(self.order, &b.mono))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreeVector {
    terms: Vec<Term>,
}

impl FreeVector {
    pub fn zero() -> Self {
        FreeVector { terms: Vec::new() }
    }

    /// Builds a vector from arbitrary terms: sorts, merges duplicates and
    /// drops zero coefficients.
    pub fn from_terms(ctx: &Ctx, mut terms: Vec<Term>) -> Self {
        terms.sort_by(|a, b| ctx.cmp_terms(b, a));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.pos == t.pos && last.mono == t.mono => {
                    last.coeff = ctx.field.add(last.coeff, t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| t.coeff != 0);
        FreeVector { terms: out }
    }

    /// Wraps terms that are already sorted and free of zeros.
    pub(crate) fn from_sorted(terms: Vec<Term>) -> Self {
        FreeVector { terms }
    }

    pub fn single(pos: u32, mono: Monomial, coeff: u32) -> Self {
        if coeff == 0 {
            return FreeVector::zero();
        }
        FreeVector {
            terms: alloc::vec![Term { pos, mono, coeff }],
        }
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree of the leading term with respect to position shifts.
    pub fn degree(&self, shifts: &[i32]) -> Option<i32> {
        self.lead()
            .map(|t| t.mono.degree() as i32 + shifts[t.pos as usize])
    }

    pub fn is_homogeneous(&self, shifts: &[i32]) -> bool {
        let mut it = self.terms.iter().map(|t| t.mono.degree() as i32 + shifts[t.pos as usize]);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// `true` when every term sits at the same position.
    pub fn is_single_position(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => self.terms.iter().all(|s| s.pos == t.pos),
        }
    }

    pub fn max_position(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.pos).max()
    }

    pub fn scale(&self, ctx: &Ctx, c: u32) -> FreeVector {
        if c == 0 {
            return FreeVector::zero();
        }
        FreeVector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: ctx.field.mul(t.coeff, c),
                    ..*t
                })
                .collect(),
        }
    }

    pub fn neg(&self, ctx: &Ctx) -> FreeVector {
        FreeVector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: ctx.field.neg(t.coeff),
                    ..*t
                })
                .collect(),
        }
    }

    /// Multiplies every term by `c * m`. Multiplication by a monomial
    /// preserves the term order, so no re-sorting is needed.
    pub fn mul_term(&self, ctx: &Ctx, c: u32, m: &Monomial) -> FreeVector {
        if c == 0 {
            return FreeVector::zero();
        }
        FreeVector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    pos: t.pos,
                    mono: t.mono.mul(m),
                    coeff: ctx.field.mul(t.coeff, c),
                })
                .collect(),
        }
    }

    pub fn add(&self, ctx: &Ctx, other: &FreeVector) -> FreeVector {
        FreeVector {
            terms: merge(ctx, &self.terms, other.terms.iter().copied(), 1),
        }
    }

    pub fn sub(&self, ctx: &Ctx, other: &FreeVector) -> FreeVector {
        FreeVector {
            terms: merge(ctx, &self.terms, other.terms.iter().copied(), ctx.field.neg(1)),
        }
    }

    /// `self + c * m * other`.
    pub fn add_scaled(&self, ctx: &Ctx, c: u32, m: &Monomial, other: &FreeVector) -> FreeVector {
        if c == 0 {
            return self.clone();
        }
        let it = other.terms.iter().map(|t| Term {
            pos: t.pos,
            mono: t.mono.mul(m),
            coeff: t.coeff,
        });
        FreeVector {
            terms: merge(ctx, &self.terms, it, c),
        }
    }

    /// Multiplies the vector by a polynomial given as terms at position 0.
    pub fn mul_poly(&self, ctx: &Ctx, poly: &FreeVector) -> FreeVector {
        let mut acc = FreeVector::zero();
        for t in poly.terms() {
            acc = acc.add_scaled(ctx, t.coeff, &t.mono, self);
        }
        acc
    }

    /// Renumbers positions by adding `offset`.
    pub fn offset_positions(&self, offset: i64) -> FreeVector {
        FreeVector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    pos: (t.pos as i64 + offset) as u32,
                    ..*t
                })
                .collect(),
        }
    }

    /// Keeps terms with position in `range` and renumbers them from zero.
    pub fn project(&self, start: u32, end: u32) -> FreeVector {
        FreeVector {
            terms: self
                .terms
                .iter()
                .filter(|t| t.pos >= start && t.pos < end)
                .map(|t| Term { pos: t.pos - start, ..*t })
                .collect(),
        }
    }

    /// Drops position `k` and shifts higher positions down by one.
    pub fn delete_position(&self, k: u32) -> FreeVector {
        FreeVector {
            terms: self
                .terms
                .iter()
                .filter(|t| t.pos != k)
                .map(|t| Term {
                    pos: if t.pos > k { t.pos - 1 } else { t.pos },
                    ..*t
                })
                .collect(),
        }
    }

    /// Applies an arbitrary position relabelling and re-sorts.
    pub fn relabel(&self, ctx: &Ctx, map: impl Fn(u32) -> u32) -> FreeVector {
        let terms = self
            .terms
            .iter()
            .map(|t| Term { pos: map(t.pos), ..*t })
            .collect();
        FreeVector::from_terms(ctx, terms)
    }

    /// The component at position `pos`, as a polynomial at position 0.
    pub fn component(&self, pos: u32) -> FreeVector {
        FreeVector {
            terms: self
                .terms
                .iter()
                .filter(|t| t.pos == pos)
                .map(|t| Term { pos: 0, ..*t })
                .collect(),
        }
    }

    /// Normalises the leading coefficient to one.
    pub fn make_monic(&self, ctx: &Ctx) -> FreeVector {
        match self.lead() {
            None => FreeVector::zero(),
            Some(t) if t.coeff == 1 => self.clone(),
            Some(t) => {
                let inv = ctx.field.inv(t.coeff).expect("nonzero lead");
                self.scale(ctx, inv)
            }
        }
    }
}

/// Merges sorted `a` with `c * b` (also sorted), cancelling as it goes.
pub(crate) fn merge(ctx: &Ctx, a: &[Term], b: impl Iterator<Item = Term>, c: u32) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + 8);
    let mut ia = 0;
    let k = ctx.field;
    for mut tb in b {
        tb.coeff = k.mul(tb.coeff, c);
        loop {
            if ia == a.len() {
                if tb.coeff != 0 {
                    out.push(tb);
                }
                break;
            }
            let ta = a[ia];
            match ctx.cmp_terms(&ta, &tb) {
                Ordering::Greater => {
                    out.push(ta);
                    ia += 1;
                }
                Ordering::Less => {
                    if tb.coeff != 0 {
                        out.push(tb);
                    }
                    break;
                }
                Ordering::Equal => {
                    let s = k.add(ta.coeff, tb.coeff);
                    if s != 0 {
                        out.push(Term { coeff: s, ..ta });
                    }
                    ia += 1;
                    break;
                }
            }
        }
    }
    out.extend_from_slice(&a[ia..]);
    out
}
