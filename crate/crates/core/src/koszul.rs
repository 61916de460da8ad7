//! Koszul complexes on homogeneous sequences, their homology and
//! cohomology, power sequences and the comparison maps between powers.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::complexes::{ChainComplex, ComplexMap, Homology};
use crate::error::{Error, Result};
use crate::module::{FinitelyPresentedModule, Length};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::quotient::{QuotientRing, RingMatrix};
use crate::vector::{FreeVector, Term};

/// A finite sequence of homogeneous ring elements of positive degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterSequence {
    ring: Arc<QuotientRing>,
    elements: Vec<Polynomial>,
}

impl ParameterSequence {
    pub fn new(ring: &Arc<QuotientRing>, elements: Vec<Polynomial>) -> Result<Self> {
        for f in &elements {
            if f.ring() != ring.ambient() {
                return Err(Error::RingMismatch);
            }
            if !f.is_homogeneous() || f.is_zero() {
                return Err(Error::Inhomogeneous(alloc::format!("{f}")));
            }
            if f.degree() == Some(0) {
                return Err(Error::Precondition(alloc::format!("{f} has degree zero")));
            }
        }
        Ok(ParameterSequence {
            ring: ring.clone(),
            elements,
        })
    }

    pub fn parse(ring: &Arc<QuotientRing>, elements: &[&str]) -> Result<Self> {
        let polys = elements
            .iter()
            .map(|e| ring.ambient().parse(e))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, polys)
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn degrees(&self) -> Vec<i32> {
        self.elements
            .iter()
            .map(|f| f.degree().expect("nonzero") as i32)
            .collect()
    }

    /// The first `r` elements.
    pub fn prefix(&self, r: usize) -> ParameterSequence {
        ParameterSequence {
            ring: self.ring.clone(),
            elements: self.elements[..r.min(self.len())].to_vec(),
        }
    }

    /// `x^n = x_1^n, .., x_r^n`.
    pub fn power(&self, n: i64) -> Result<ParameterSequence> {
        if n < 1 || n > u32::MAX as i64 {
            return Err(Error::InvalidPower(n));
        }
        Ok(ParameterSequence {
            ring: self.ring.clone(),
            elements: self.elements.iter().map(|f| f.pow(n as u32)).collect(),
        })
    }

    /// The same elements in another order.
    pub fn permuted(&self, order: &[usize]) -> ParameterSequence {
        ParameterSequence {
            ring: self.ring.clone(),
            elements: order.iter().map(|&i| self.elements[i].clone()).collect(),
        }
    }

    /// `R/(x)` as a module.
    pub fn quotient_module(&self) -> FinitelyPresentedModule {
        FinitelyPresentedModule::cyclic(&self.ring, &self.elements).expect("homogeneous")
    }
}

/// `power_sequence(x, n) = x^n`.
pub fn power_sequence(x: &ParameterSequence, n: i64) -> Result<ParameterSequence> {
    x.power(n)
}

/// All `p`-subsets of `0..r` in lexicographic order.
pub fn subsets(r: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if p > r {
        return out;
    }
    let mut cur: Vec<usize> = (0..p).collect();
    loop {
        out.push(cur.clone());
        let mut i = p;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < r - p + i {
                break;
            }
        }
        cur[i] += 1;
        for k in i + 1..p {
            cur[k] = cur[k - 1] + 1;
        }
    }
}

fn rank_of(subs: &[Vec<usize>], s: &[usize]) -> usize {
    subs.binary_search_by(|t| t.as_slice().cmp(s)).expect("subset present")
}

struct Layout {
    subs: Vec<Vec<Vec<usize>>>,
    gens: Vec<i32>,
    xdeg: Vec<i32>,
}

impl Layout {
    fn new(x: &ParameterSequence, m: &FinitelyPresentedModule) -> Self {
        let r = x.len();
        Layout {
            subs: (0..=r).map(|p| subsets(r, p)).collect(),
            gens: m.generator_degrees().to_vec(),
            xdeg: x.degrees(),
        }
    }

    /// Generator degrees of `K_p ⊗ M`, subset-major.
    fn degrees(&self, p: usize, sign: i32) -> Vec<i32> {
        let mut out = Vec::new();
        for s in &self.subs[p] {
            let ds: i32 = s.iter().map(|&i| self.xdeg[i]).sum();
            for &g in &self.gens {
                out.push(sign * ds + g);
            }
        }
        out
    }

    /// Relations of `K_p ⊗ M`: one copy of the presentation per subset.
    fn relations(&self, ring: &Arc<QuotientRing>, m: &FinitelyPresentedModule, degs: Vec<i32>, blocks: usize) -> RingMatrix {
        let g = self.gens.len();
        let rel = m.relations();
        let mut cols = Vec::new();
        let mut cdeg = Vec::new();
        for b in 0..blocks {
            let off = (b * g) as i64;
            let shift = degs.get(b * g).map_or(0, |d| d - self.gens[0]);
            for (j, c) in rel.columns().iter().enumerate() {
                cols.push(c.offset_positions(off));
                cdeg.push(rel.col_degrees()[j] + shift);
            }
        }
        RingMatrix::new(ring, degs, cdeg, cols).expect("homogeneous relations")
    }
}

/// The Koszul complex `K(x) ⊗ M`, nonzero in degrees `0..=r`.
///
/// Term `p` has basis `e_S ⊗ m_g` for `p`-subsets `S` in lexicographic order
/// (subset-major), and `∂(e_S) = Σ_j (-1)^j x_{s_j} e_{S - s_j}` with `j`
/// counted from zero.
pub fn koszul_complex(x: &ParameterSequence, m: &FinitelyPresentedModule) -> Result<ChainComplex> {
    let ring = x.ring();
    if m.ring() != ring {
        return Err(Error::RingMismatch);
    }
    let r = x.len();
    let lay = Layout::new(x, m);
    let g = lay.gens.len();
    let ctx = ring.ctx();
    let modules: Vec<Vec<i32>> = (0..=r).map(|p| lay.degrees(p, 1)).collect();
    let mut differentials = Vec::with_capacity(r);
    for p in 1..=r {
        let mut cols = Vec::new();
        for s in &lay.subs[p] {
            let mut terms: Vec<Term> = Vec::new();
            for (j, &i) in s.iter().enumerate() {
                let mut t: Vec<usize> = s.clone();
                t.remove(j);
                let row = rank_of(&lay.subs[p - 1], &t);
                let sign = if j % 2 == 0 { 1 } else { ctx.field.neg(1) };
                push_scaled(&mut terms, &x.elements[i], sign, row * g, &ctx);
            }
            let base = FreeVector::from_terms(&ctx, terms);
            for k in 0..g {
                cols.push(base.offset_positions(k as i64));
            }
        }
        differentials.push(RingMatrix::new(ring, modules[p - 1].clone(), modules[p].clone(), cols)?);
    }
    if m.relations().ncols() == 0 {
        return ChainComplex::new(ring, 0, modules, differentials, false);
    }
    let relations = (0..=r)
        .map(|p| lay.relations(ring, m, modules[p].clone(), lay.subs[p].len()))
        .collect();
    ChainComplex::with_relations(ring, 0, modules, differentials, relations, false)
}

fn push_scaled(out: &mut Vec<Term>, f: &Polynomial, c: u32, pos: usize, ctx: &crate::vector::Ctx) {
    for (mono, coeff) in f.terms() {
        out.push(Term {
            pos: pos as u32,
            mono,
            coeff: ctx.field.mul(coeff, c),
        });
    }
}

/// The dual complex `Hom(K(x), R) ⊗ M`, placed in homological degrees
/// `-r..=0` so that its homology in degree `-i` is the Koszul cohomology
/// `H^i(x; M)` computed directly from cochains.
pub fn koszul_cochain_complex(x: &ParameterSequence, m: &FinitelyPresentedModule) -> Result<ChainComplex> {
    let ring = x.ring();
    if m.ring() != ring {
        return Err(Error::RingMismatch);
    }
    let r = x.len();
    let lay = Layout::new(x, m);
    let g = lay.gens.len();
    let ctx = ring.ctx();
    // term at homological degree -p is the dual of K_p: index k = r - p
    let modules: Vec<Vec<i32>> = (0..=r).rev().map(|p| lay.degrees(p, -1)).collect();
    let mut differentials = Vec::with_capacity(r);
    // the differential leaving degree -p maps e_S^* to Σ_{T ⊃ S} sign x e_T^*
    for p in (0..r).rev() {
        let mut cols = Vec::new();
        for s in &lay.subs[p] {
            let mut terms: Vec<Term> = Vec::new();
            for (row, t) in lay.subs[p + 1].iter().enumerate() {
                let Some(j) = (0..=p).find(|&j| {
                    let mut u = t.clone();
                    u.remove(j);
                    u == *s
                }) else {
                    continue;
                };
                let sign = if j % 2 == 0 { 1 } else { ctx.field.neg(1) };
                push_scaled(&mut terms, &x.elements[t[j]], sign, row * g, &ctx);
            }
            let base = FreeVector::from_terms(&ctx, terms);
            for k in 0..g {
                cols.push(base.offset_positions(k as i64));
            }
        }
        let src = r - p;
        differentials.push(RingMatrix::new(ring, modules[src - 1].clone(), modules[src].clone(), cols)?);
    }
    let lo = -(r as i32);
    if m.relations().ncols() == 0 {
        return ChainComplex::new(ring, lo, modules, differentials, false);
    }
    let relations = (0..=r)
        .rev()
        .map(|p| lay.relations(ring, m, lay.degrees(p, -1), lay.subs[p].len()))
        .collect();
    ChainComplex::with_relations(ring, lo, modules, differentials, relations, false)
}

/// `H_i(x; M)`.
pub fn koszul_homology(x: &ParameterSequence, m: &FinitelyPresentedModule, i: usize) -> Result<Homology> {
    if i > x.len() {
        return Err(Error::OutOfRange { degree: i as i32 });
    }
    koszul_complex(x, m)?.homology_at(i as i32)
}

/// `H^i(x; M)`, realised as `H_{r-i}(x; M)` through self-duality.
pub fn koszul_cohomology(x: &ParameterSequence, m: &FinitelyPresentedModule, i: usize) -> Result<Homology> {
    if i > x.len() {
        return Err(Error::OutOfRange { degree: i as i32 });
    }
    koszul_homology(x, m, x.len() - i)
}

/// Product of the elements of `x` indexed by `s`.
fn subset_product(x: &ParameterSequence, s: &[usize]) -> Polynomial {
    let ring = x.ring().ambient();
    s.iter()
        .fold(ring.one(), |acc, &i| acc.mul(&x.elements[i]).expect("same ring"))
}

fn diagonal(
    ring: &Arc<QuotientRing>,
    rows: Vec<i32>,
    cols_deg: Vec<i32>,
    entries: &[Polynomial],
    g: usize,
) -> Result<RingMatrix> {
    let nv = ring.nvars();
    let ctx = ring.ctx();
    let mut cols = Vec::with_capacity(entries.len() * g);
    for (b, f) in entries.iter().enumerate() {
        for k in 0..g {
            let e = FreeVector::single((b * g + k) as u32, Monomial::one(nv), 1);
            cols.push(e.mul_poly(&ctx, f.as_vector()));
        }
    }
    RingMatrix::new(ring, rows, cols_deg, cols)
}

/// `φ : K(x^{n+1}; M) -> K(x^n; M)`, the exterior power of `e_j -> x_j e_j`:
/// diagonal with `e_S -> x_S e_S`.
pub fn comparison_map(x: &ParameterSequence, m: &FinitelyPresentedModule, n: i64) -> Result<ComplexMap> {
    let src = koszul_complex(&x.power(n + 1)?, m)?;
    let tgt = koszul_complex(&x.power(n)?, m)?;
    let g = m.num_generators();
    let r = x.len();
    let mut comps = Vec::with_capacity(r + 1);
    for p in 0..=r {
        let prods: Vec<Polynomial> = subsets(r, p).iter().map(|s| subset_product(x, s)).collect();
        let pi = p as i32;
        comps.push(diagonal(
            x.ring(),
            tgt.generator_degrees(pi).to_vec(),
            src.generator_degrees(pi).to_vec(),
            &prods,
            g,
        )?);
    }
    ComplexMap::new(&src, &tgt, comps)
}

/// The dual of [`comparison_map`] on cochains,
/// `Hom(K(x^n), M) -> Hom(K(x^{n+1}), M)`.
pub fn cochain_comparison_map(x: &ParameterSequence, m: &FinitelyPresentedModule, n: i64) -> Result<ComplexMap> {
    let src = koszul_cochain_complex(&x.power(n)?, m)?;
    let tgt = koszul_cochain_complex(&x.power(n + 1)?, m)?;
    let g = m.num_generators();
    let r = x.len();
    let mut comps = Vec::with_capacity(r + 1);
    for p in (0..=r).rev() {
        let prods: Vec<Polynomial> = subsets(r, p).iter().map(|s| subset_product(x, s)).collect();
        let deg = -(p as i32);
        comps.push(diagonal(
            x.ring(),
            tgt.generator_degrees(deg).to_vec(),
            src.generator_degrees(deg).to_vec(),
            &prods,
            g,
        )?);
    }
    ComplexMap::new(&src, &tgt, comps)
}

/// Lengths describing the induced map `H^i(x^n; M) -> H^i(x^{n+1}; M)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComparisonSummary {
    pub source: Length,
    pub target: Length,
    pub cokernel: Length,
}

impl ComparisonSummary {
    /// Injectivity read off lengths: `ℓ(source) = ℓ(target) - ℓ(coker)`.
    pub fn is_injective(&self) -> Option<bool> {
        match (self.source, self.target, self.cokernel) {
            (Length::Finite(s), Length::Finite(t), Length::Finite(c)) => Some(s + c == t),
            _ => None,
        }
    }

    pub fn is_bijective(&self) -> Option<bool> {
        Some(self.is_injective()? && self.cokernel == Length::Finite(0))
    }
}

/// The map induced on Koszul cohomology by passing from `x^n` to `x^{n+1}`.
pub fn cohomology_comparison(
    x: &ParameterSequence,
    m: &FinitelyPresentedModule,
    n: i64,
    i: usize,
) -> Result<ComparisonSummary> {
    if i > x.len() {
        return Err(Error::OutOfRange { degree: i as i32 });
    }
    let psi = cochain_comparison_map(x, m, n)?;
    let deg = -(i as i32);
    let hs = psi.source().homology_at(deg)?;
    let ht = psi.target().homology_at(deg)?;
    let induced = psi.induced_on_homology(&hs, &ht)?;
    let coker = FinitelyPresentedModule::new(ht.module().relations().hconcat(&induced));
    Ok(ComparisonSummary {
        source: hs.length(),
        target: ht.length(),
        cokernel: coker.length(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r1() -> Arc<QuotientRing> {
        QuotientRing::parse(32003, &["a", "b", "c"], &["a*c", "b*c", "c^2"]).unwrap()
    }

    #[test]
    fn subsets_in_lex_order() {
        assert_eq!(subsets(3, 2), alloc::vec![alloc::vec![0, 1], alloc::vec![0, 2], alloc::vec![1, 2]]);
        assert_eq!(subsets(3, 0), alloc::vec![Vec::<usize>::new()]);
        assert_eq!(subsets(4, 2).len(), 6);
        assert!(subsets(2, 3).is_empty());
    }

    #[test]
    fn ranks_are_binomial() {
        let r = r1();
        let x = ParameterSequence::parse(&r, &["a", "b"]).unwrap();
        let k = koszul_complex(&x, &FinitelyPresentedModule::free(&r, alloc::vec![0])).unwrap();
        assert_eq!(k.ranks(), alloc::vec![1, 2, 1]);
        let x3 = ParameterSequence::parse(&r, &["a", "b", "c"]).unwrap();
        let k3 = koszul_complex(&x3, &FinitelyPresentedModule::free(&r, alloc::vec![0])).unwrap();
        assert_eq!(k3.ranks(), alloc::vec![1, 3, 3, 1]);
    }

    #[test]
    fn homology_over_r1() {
        let r = r1();
        let x = ParameterSequence::parse(&r, &["a", "b"]).unwrap();
        let m = FinitelyPresentedModule::free(&r, alloc::vec![0]);
        assert_eq!(koszul_homology(&x, &m, 0).unwrap().length(), Length::Finite(2));
        assert_eq!(koszul_homology(&x, &m, 2).unwrap().length(), Length::Finite(1));
        assert_eq!(koszul_cohomology(&x, &m, 0).unwrap().length(), Length::Finite(1));
    }

    #[test]
    fn cochains_agree_with_duality() {
        let r = r1();
        let x = ParameterSequence::parse(&r, &["a", "b"]).unwrap();
        let m = FinitelyPresentedModule::free(&r, alloc::vec![0]);
        let dual = koszul_cochain_complex(&x, &m).unwrap();
        for i in 0..=2 {
            let direct = dual.homology_at(-(i as i32)).unwrap().length();
            assert_eq!(direct, koszul_cohomology(&x, &m, i).unwrap().length(), "i = {i}");
        }
    }

    #[test]
    fn koszul_with_coefficients_in_a_module() {
        let r = r1();
        let x = ParameterSequence::parse(&r, &["a", "b"]).unwrap();
        let k = FinitelyPresentedModule::residue_field(&r);
        let c = koszul_complex(&x, &k).unwrap();
        // differentials vanish on k, so H_i = k^binom(2, i)
        assert_eq!(c.homology_at(1).unwrap().length(), Length::Finite(2));
        assert_eq!(c.homology_at(2).unwrap().length(), Length::Finite(1));
    }

    #[test]
    fn comparison_maps_commute() {
        let r = r1();
        let x = ParameterSequence::parse(&r, &["a", "b"]).unwrap();
        let m = FinitelyPresentedModule::free(&r, alloc::vec![0]);
        let phi = comparison_map(&x, &m, 1).unwrap();
        assert_eq!(phi.component(0), RingMatrix::identity(&r, alloc::vec![0]));
        assert_eq!(phi.component(2).entry(0, 0), r.ambient().parse("a*b").unwrap());
        cochain_comparison_map(&x, &m, 2).unwrap();
    }

    #[test]
    fn power_rejects_nonpositive() {
        let r = r1();
        let x = ParameterSequence::parse(&r, &["a", "b"]).unwrap();
        assert!(matches!(x.power(0), Err(Error::InvalidPower(0))));
        assert_eq!(x.power(1).unwrap(), x);
        assert_eq!(x.power(3).unwrap().degrees(), alloc::vec![3, 3]);
    }
}
