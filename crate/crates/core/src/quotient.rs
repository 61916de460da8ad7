//! Quotient rings `R = S/I` of a standard-graded polynomial ring by a
//! homogeneous ideal, and homogeneous matrices over them.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{write_terms, Polynomial, PolynomialRing};
use crate::staircase;
use crate::vector::{merge, Ctx, FreeVector, Term};

/// The ring `R = S/I` together with a reduced Gröbner basis of `I`.
#[derive(Debug)]
pub struct QuotientRing {
    ambient: Arc<PolynomialRing>,
    input: Vec<Polynomial>,
    ideal: GroebnerBasis,
    leads: Vec<Monomial>,
    dimension: i32,
}

impl PartialEq for QuotientRing {
    fn eq(&self, other: &Self) -> bool {
        core::ptr::eq(self, other)
            || (self.ambient == other.ambient && self.ideal.polynomials() == other.ideal.polynomials())
    }
}

impl Eq for QuotientRing {}

impl QuotientRing {
    pub fn new(ambient: &Arc<PolynomialRing>, generators: &[Polynomial]) -> Result<Arc<Self>> {
        let ideal = buchberger(ambient, generators)?;
        let leads: Vec<Monomial> = ideal.leading_monomials_at(0);
        let dimension = staircase::dimension(&leads, ambient.nvars());
        Ok(Arc::new(QuotientRing {
            ambient: ambient.clone(),
            input: generators.to_vec(),
            ideal,
            leads,
            dimension,
        }))
    }

    /// Convenience constructor from text.
    pub fn parse(characteristic: u32, variables: &[&str], generators: &[&str]) -> Result<Arc<Self>> {
        let ambient = PolynomialRing::new(characteristic, variables, MonomialOrder::DegRevLex)?;
        let gens = generators
            .iter()
            .map(|g| ambient.parse(g))
            .collect::<Result<Vec<_>>>()?;
        Self::new(&ambient, &gens)
    }

    pub fn polynomial_ring(ambient: &Arc<PolynomialRing>) -> Arc<Self> {
        Self::new(ambient, &[]).expect("the zero ideal is homogeneous")
    }

    pub fn ambient(&self) -> &Arc<PolynomialRing> {
        &self.ambient
    }

    pub fn ctx(&self) -> Ctx {
        self.ambient.ctx()
    }

    pub fn nvars(&self) -> usize {
        self.ambient.nvars()
    }

    /// The generators the ring was constructed from.
    pub fn input_generators(&self) -> &[Polynomial] {
        &self.input
    }

    pub fn ideal(&self) -> &GroebnerBasis {
        &self.ideal
    }

    pub(crate) fn ideal_vectors(&self) -> &[FreeVector] {
        self.ideal.vectors()
    }

    /// Krull dimension of `R`, read off the staircase of the initial ideal.
    pub fn dimension(&self) -> i32 {
        self.dimension
    }

    /// Normal form modulo the defining ideal.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        self.ideal.normal_form(f)
    }

    /// Reduces every component of a vector modulo the defining ideal.
    pub fn reduce_vector(&self, v: FreeVector) -> FreeVector {
        if self.leads.is_empty() {
            return v;
        }
        let ctx = self.ctx();
        let gens = self.ideal.vectors();
        let mut rest = v.into_terms();
        let mut start = 0;
        let mut out = Vec::new();
        while start < rest.len() {
            let t = rest[start];
            match self.leads.iter().position(|l| l.divides(&t.mono)) {
                Some(gi) => {
                    let q = self.leads[gi].quotient_of(&t.mono);
                    let c = ctx.field.neg(t.coeff);
                    let tail = gens[gi].terms()[1..].iter().map(|s| Term {
                        pos: t.pos,
                        mono: s.mono.mul(&q),
                        coeff: s.coeff,
                    });
                    rest = merge(&ctx, &rest[start + 1..], tail, c);
                    start = 0;
                }
                None => {
                    out.push(t);
                    start += 1;
                }
            }
        }
        FreeVector::from_sorted(out)
    }

    pub fn is_zero(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }

    /// Dimension of `R_d` over the field.
    pub fn hilbert_function(&self, d: u32) -> u64 {
        staircase::hilbert_function(&self.leads, self.nvars(), d)[d as usize]
    }
}

/// A homogeneous matrix over a quotient ring, stored by columns.
///
/// Column `j` is a vector in the graded free module with basis degrees
/// `row_degrees`, homogeneous of degree `col_degrees[j]`, and in normal form
/// modulo the defining ideal. Entry `(i, j)` therefore has degree
/// `col_degrees[j] - row_degrees[i]` or is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingMatrix {
    ring: Arc<QuotientRing>,
    row_degrees: Vec<i32>,
    col_degrees: Vec<i32>,
    cols: Vec<FreeVector>,
}

impl RingMatrix {
    pub fn new(
        ring: &Arc<QuotientRing>,
        row_degrees: Vec<i32>,
        col_degrees: Vec<i32>,
        cols: Vec<FreeVector>,
    ) -> Result<Self> {
        if cols.len() != col_degrees.len() {
            return Err(Error::DimensionMismatch {
                expected: col_degrees.len(),
                found: cols.len(),
            });
        }
        let mut reduced = Vec::with_capacity(cols.len());
        for (j, c) in cols.into_iter().enumerate() {
            if let Some(p) = c.max_position() {
                if p as usize >= row_degrees.len() {
                    return Err(Error::DimensionMismatch {
                        expected: row_degrees.len(),
                        found: p as usize + 1,
                    });
                }
            }
            let c = ring.reduce_vector(c);
            if !c.is_homogeneous(&row_degrees) || c.degree(&row_degrees).is_some_and(|d| d != col_degrees[j]) {
                return Err(Error::Inhomogeneous(alloc::format!("matrix column {j}")));
            }
            reduced.push(c);
        }
        Ok(RingMatrix {
            ring: ring.clone(),
            row_degrees,
            col_degrees,
            cols: reduced,
        })
    }

    /// Constructor for columns that are known to be homogeneous and reduced.
    pub(crate) fn from_reduced(
        ring: &Arc<QuotientRing>,
        row_degrees: Vec<i32>,
        col_degrees: Vec<i32>,
        cols: Vec<FreeVector>,
    ) -> Self {
        debug_assert_eq!(cols.len(), col_degrees.len());
        debug_assert!(cols
            .iter()
            .zip(&col_degrees)
            .all(|(c, &d)| c.is_homogeneous(&row_degrees) && c.degree(&row_degrees).map_or(true, |e| e == d)));
        RingMatrix {
            ring: ring.clone(),
            row_degrees,
            col_degrees,
            cols,
        }
    }

    /// Builds a matrix from `(row, col, entry)` triples; unspecified entries
    /// are zero.
    pub fn from_entries(
        ring: &Arc<QuotientRing>,
        row_degrees: Vec<i32>,
        col_degrees: Vec<i32>,
        entries: &[(usize, usize, Polynomial)],
    ) -> Result<Self> {
        let ctx = ring.ctx();
        let mut terms: Vec<Vec<Term>> = alloc::vec![Vec::new(); col_degrees.len()];
        for (i, j, f) in entries {
            if *i >= row_degrees.len() || *j >= col_degrees.len() {
                return Err(Error::DimensionMismatch {
                    expected: row_degrees.len().max(col_degrees.len()),
                    found: (*i).max(*j) + 1,
                });
            }
            if f.ring() != ring.ambient() {
                return Err(Error::RingMismatch);
            }
            for (mono, coeff) in f.terms() {
                terms[*j].push(Term {
                    pos: *i as u32,
                    mono,
                    coeff,
                });
            }
        }
        let cols = terms
            .into_iter()
            .map(|t| FreeVector::from_terms(&ctx, t))
            .collect();
        Self::new(ring, row_degrees, col_degrees, cols)
    }

    pub fn zero(ring: &Arc<QuotientRing>, row_degrees: Vec<i32>, col_degrees: Vec<i32>) -> Self {
        let cols = alloc::vec![FreeVector::zero(); col_degrees.len()];
        RingMatrix {
            ring: ring.clone(),
            row_degrees,
            col_degrees,
            cols,
        }
    }

    pub fn identity(ring: &Arc<QuotientRing>, degrees: Vec<i32>) -> Self {
        let nv = ring.nvars();
        let cols = (0..degrees.len())
            .map(|i| FreeVector::single(i as u32, Monomial::one(nv), 1))
            .collect();
        RingMatrix {
            ring: ring.clone(),
            row_degrees: degrees.clone(),
            col_degrees: degrees,
            cols,
        }
    }

    /// A `1 x n` row matrix `[f_1 ... f_n]` mapping `R(-deg f_i)` to `R`.
    pub fn row(ring: &Arc<QuotientRing>, entries: &[Polynomial]) -> Result<Self> {
        let mut degs = Vec::with_capacity(entries.len());
        for f in entries {
            if !f.is_homogeneous() {
                return Err(Error::Inhomogeneous(alloc::format!("{f}")));
            }
            degs.push(f.degree().unwrap_or(0) as i32);
        }
        let es: Vec<_> = entries.iter().enumerate().map(|(j, f)| (0, j, f.clone())).collect();
        Self::from_entries(ring, alloc::vec![0], degs, &es)
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.row_degrees.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_degrees.len()
    }

    pub fn row_degrees(&self) -> &[i32] {
        &self.row_degrees
    }

    pub fn col_degrees(&self) -> &[i32] {
        &self.col_degrees
    }

    pub fn columns(&self) -> &[FreeVector] {
        &self.cols
    }

    pub fn column(&self, j: usize) -> &FreeVector {
        &self.cols[j]
    }

    pub fn entry(&self, i: usize, j: usize) -> Polynomial {
        self.ring
            .ambient()
            .wrap(self.cols[j].component(i as u32))
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    /// `self * other`, reduced modulo the defining ideal.
    pub fn mul(&self, other: &RingMatrix) -> Result<RingMatrix> {
        if self.ncols() != other.nrows() {
            return Err(Error::DimensionMismatch {
                expected: self.ncols(),
                found: other.nrows(),
            });
        }
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let cols = other.cols.iter().map(|c| self.apply(c)).collect();
        Ok(RingMatrix {
            ring: self.ring.clone(),
            row_degrees: self.row_degrees.clone(),
            col_degrees: other.col_degrees.clone(),
            cols,
        })
    }

    /// Image of a vector in the source free module.
    pub fn apply(&self, v: &FreeVector) -> FreeVector {
        let ctx = self.ring.ctx();
        let mut acc: Vec<Term> = Vec::new();
        for t in v.terms() {
            for s in self.cols[t.pos as usize].terms() {
                acc.push(Term {
                    pos: s.pos,
                    mono: s.mono.mul(&t.mono),
                    coeff: ctx.field.mul(s.coeff, t.coeff),
                });
            }
        }
        self.ring.reduce_vector(FreeVector::from_terms(&ctx, acc))
    }

    pub fn scale(&self, c: i64) -> RingMatrix {
        let ctx = self.ring.ctx();
        let c = ctx.field.reduce(c);
        RingMatrix {
            cols: self.cols.iter().map(|v| v.scale(&ctx, c)).collect(),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &RingMatrix) -> Result<RingMatrix> {
        if self.nrows() != other.nrows() || self.ncols() != other.ncols() {
            return Err(Error::DimensionMismatch {
                expected: self.ncols(),
                found: other.ncols(),
            });
        }
        let ctx = self.ring.ctx();
        Ok(RingMatrix {
            cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.sub(&ctx, b)).collect(),
            ..self.clone()
        })
    }

    pub fn select_columns(&self, idx: &[usize]) -> RingMatrix {
        RingMatrix {
            ring: self.ring.clone(),
            row_degrees: self.row_degrees.clone(),
            col_degrees: idx.iter().map(|&j| self.col_degrees[j]).collect(),
            cols: idx.iter().map(|&j| self.cols[j].clone()).collect(),
        }
    }

    /// Columns of `self` followed by columns of `other` (same rows).
    pub fn hconcat(&self, other: &RingMatrix) -> RingMatrix {
        debug_assert_eq!(self.row_degrees, other.row_degrees);
        let mut out = self.clone();
        out.col_degrees.extend_from_slice(&other.col_degrees);
        out.cols.extend(other.cols.iter().cloned());
        out
    }

    /// Transpose, with the grading dualised: `Hom(R(-a), R) = R(a)`.
    pub fn transpose(&self) -> RingMatrix {
        let ctx = self.ring.ctx();
        let mut terms: Vec<Vec<Term>> = alloc::vec![Vec::new(); self.nrows()];
        for (j, c) in self.cols.iter().enumerate() {
            for t in c.terms() {
                terms[t.pos as usize].push(Term { pos: j as u32, ..*t });
            }
        }
        RingMatrix {
            ring: self.ring.clone(),
            row_degrees: self.col_degrees.iter().map(|d| -d).collect(),
            col_degrees: self.row_degrees.iter().map(|d| -d).collect(),
            cols: terms.into_iter().map(|t| FreeVector::from_terms(&ctx, t)).collect(),
        }
    }

    /// The scalar matrix `k ⊗ self`: entries of internal degree zero, as
    /// residues, indexed `[row][col]`.
    pub fn constant_part(&self) -> Vec<Vec<u32>> {
        let mut out = alloc::vec![alloc::vec![0u32; self.ncols()]; self.nrows()];
        for (j, c) in self.cols.iter().enumerate() {
            for t in c.terms() {
                if t.mono.is_one() {
                    out[t.pos as usize][j] = t.coeff;
                }
            }
        }
        out
    }

    /// `true` when every entry lies in the irrelevant ideal.
    pub fn is_minimal(&self) -> bool {
        self.cols.iter().all(|c| c.terms().iter().all(|t| !t.mono.is_one()))
    }

    pub(crate) fn into_parts(self) -> (Vec<i32>, Vec<i32>, Vec<FreeVector>) {
        (self.row_degrees, self.col_degrees, self.cols)
    }
}

impl fmt::Display for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.nrows() {
            f.write_str("| ")?;
            for j in 0..self.ncols() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                let e = self.entry(i, j);
                write_terms(f, self.ring.ambient(), e.terms())?;
            }
            f.write_str(" |\n")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_of_example_rings() {
        let r1 = QuotientRing::parse(32003, &["a", "b", "c"], &["a*c", "b*c", "c^2"]).unwrap();
        assert_eq!(r1.dimension(), 2);
        let poly = QuotientRing::parse(32003, &["a", "b"], &[]).unwrap();
        assert_eq!(poly.dimension(), 2);
        let r2 = QuotientRing::parse(32003, &["a", "b", "c", "d"], &["a*c", "a*d", "b*c", "b*d"]).unwrap();
        assert_eq!(r2.dimension(), 2);
    }

    #[test]
    fn reduction_modulo_ideal() {
        let r1 = QuotientRing::parse(32003, &["a", "b", "c"], &["a*c", "b*c", "c^2"]).unwrap();
        let s = r1.ambient();
        assert!(r1.is_zero(&s.parse("c^3 + a*b*c").unwrap()));
        let f = s.parse("a^2*b + a*c").unwrap();
        assert_eq!(r1.reduce(&f), s.parse("a^2*b").unwrap());
        assert_eq!(r1.hilbert_function(1), 3);
        assert_eq!(r1.hilbert_function(2), 3);
    }

    #[test]
    fn matrix_product_and_transpose() {
        let r = QuotientRing::parse(32003, &["a", "b"], &[]).unwrap();
        let s = r.ambient();
        let row = RingMatrix::row(&r, &[s.parse("a").unwrap(), s.parse("b").unwrap()]).unwrap();
        let koszul = RingMatrix::from_entries(
            &r,
            alloc::vec![1, 1],
            alloc::vec![2],
            &[(0, 0, s.parse("-b").unwrap()), (1, 0, s.parse("a").unwrap())],
        )
        .unwrap();
        assert!(row.mul(&koszul).unwrap().is_zero());
        let t = row.transpose();
        assert_eq!(t.nrows(), 2);
        assert_eq!(t.row_degrees(), &[-1, -1]);
        assert_eq!(t.entry(1, 0), s.parse("b").unwrap());
    }

    #[test]
    fn inhomogeneous_column_rejected() {
        let r = QuotientRing::parse(32003, &["a", "b"], &[]).unwrap();
        let s = r.ambient();
        let bad = RingMatrix::from_entries(
            &r,
            alloc::vec![0, 0],
            alloc::vec![1],
            &[(0, 0, s.parse("a").unwrap()), (1, 0, s.parse("b^2").unwrap())],
        );
        assert!(matches!(bad, Err(Error::Inhomogeneous(_))));
    }
}
