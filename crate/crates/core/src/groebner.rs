//! Homogeneous Buchberger algorithm for ideals and submodules of graded
//! free modules over the ambient polynomial ring.
//!
//! Inputs are processed degree by degree (the normal selection strategy).
//! Within a degree, S-pairs are reduced first, then the input generators of
//! that degree in the order given. An input whose remainder is nonzero is a
//! member of a minimal generating set of the submodule spanned by all
//! inputs, which is how [`minimal_subset`] extracts minimal generators.
//! Pairs are pruned with the Gebauer–Möller installation of Buchberger's
//! criteria; the product criterion is only applied to vectors supported at
//! a single position, where it remains valid.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{Polynomial, PolynomialRing};
use crate::vector::{merge, Ctx, FreeVector, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Origin {
    /// A multiple `g * e_i` of a generator of an ideal that is already a
    /// Gröbner basis; pairs among such elements at one position are skipped.
    Ideal,
    Background,
    Candidate(usize),
    Pair,
}

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    pos: u32,
}

/// A Gröbner basis of a submodule of a graded free module `S^rank`.
#[derive(Clone, Debug)]
pub(crate) struct ModuleGb {
    ctx: Ctx,
    shifts: Vec<i32>,
    elems: Vec<FreeVector>,
    leads: Vec<(u32, Monomial)>,
    origins: Vec<Origin>,
    pure: Vec<bool>,
    by_pos: Vec<Vec<usize>>,
    /// Degree through which the basis is complete; `None` when complete in
    /// all degrees.
    complete_through: Option<i32>,
}

pub(crate) struct GbOutput {
    pub gb: ModuleGb,
    /// Indices of candidates that survived reduction, in processing order.
    pub minimal: Vec<usize>,
}

/// Parameters of one Gröbner computation.
pub(crate) struct GbProblem<'a> {
    pub ctx: Ctx,
    pub shifts: &'a [i32],
    /// Gröbner basis of the defining ideal, as vectors at position zero.
    pub ideal: &'a [FreeVector],
    /// Positions that receive the ideal augmentation `I * e_i`.
    pub ideal_positions: core::ops::Range<u32>,
    pub background: Vec<FreeVector>,
    pub candidates: Vec<FreeVector>,
    pub degree_bound: Option<i32>,
}

impl ModuleGb {
    fn empty(ctx: Ctx, shifts: &[i32]) -> Self {
        ModuleGb {
            ctx,
            shifts: shifts.to_vec(),
            elems: Vec::new(),
            leads: Vec::new(),
            origins: Vec::new(),
            pure: Vec::new(),
            by_pos: alloc::vec![Vec::new(); shifts.len()],
            complete_through: None,
        }
    }

    pub fn elements(&self) -> &[FreeVector] {
        &self.elems
    }

    /// Leading monomials of basis elements whose leading term sits at `pos`.
    pub fn leading_monomials_at(&self, pos: u32) -> Vec<Monomial> {
        self.by_pos[pos as usize]
            .iter()
            .map(|&i| self.leads[i].1)
            .collect()
    }

    #[inline]
    fn find_divisor(&self, pos: u32, mono: &Monomial) -> Option<usize> {
        self.by_pos[pos as usize]
            .iter()
            .copied()
            .find(|&i| self.leads[i].1.divides(mono))
    }

    /// Full reduction: no term of the result is divisible by a leading term.
    pub fn reduce(&self, f: FreeVector) -> FreeVector {
        let ctx = &self.ctx;
        let mut rest = f.into_terms();
        let mut start = 0;
        let mut out: Vec<Term> = Vec::new();
        while start < rest.len() {
            let t = rest[start];
            match self.find_divisor(t.pos, &t.mono) {
                Some(gi) => {
                    let g = self.elems[gi].terms();
                    let q = self.leads[gi].1.quotient_of(&t.mono);
                    let c = ctx.field.neg(t.coeff);
                    let tail = g[1..].iter().map(|s| Term {
                        pos: s.pos,
                        mono: s.mono.mul(&q),
                        coeff: s.coeff,
                    });
                    rest = merge(ctx, &rest[start + 1..], tail, c);
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

    fn s_vector(&self, p: &Pair) -> FreeVector {
        let ctx = &self.ctx;
        let (gi, gj) = (&self.elems[p.i], &self.elems[p.j]);
        let qi = self.leads[p.i].1.quotient_of(&p.lcm);
        let qj = self.leads[p.j].1.quotient_of(&p.lcm);
        // both monic: the leading terms cancel
        let a = FreeVector::from_sorted(
            gi.terms()[1..]
                .iter()
                .map(|t| Term {
                    pos: t.pos,
                    mono: t.mono.mul(&qi),
                    coeff: t.coeff,
                })
                .collect(),
        );
        let tail_j = gj.terms()[1..].iter().map(|t| Term {
            pos: t.pos,
            mono: t.mono.mul(&qj),
            coeff: t.coeff,
        });
        FreeVector::from_sorted(merge(ctx, a.terms(), tail_j, ctx.field.neg(1)))
    }

    fn pair_degree(&self, p: &Pair) -> i32 {
        p.lcm.degree() as i32 + self.shifts[p.pos as usize]
    }

    fn coprime_applies(&self, i: usize, j: usize) -> bool {
        self.pure[i] && self.pure[j] && self.leads[i].1.is_coprime(&self.leads[j].1)
    }

    /// Adds a monic, reduced element and updates the pair set.
    fn insert(&mut self, h: FreeVector, origin: Origin, pairs: &mut BTreeMap<i32, Vec<Pair>>) {
        let lead = *h.lead().expect("nonzero");
        let n = self.elems.len();
        let pos = lead.pos;
        let th = lead.mono;
        self.pure.push(h.is_single_position());
        self.elems.push(h);
        self.leads.push((pos, th));
        self.origins.push(origin);

        let mut cands: Vec<(usize, Monomial)> = Vec::new();
        for &g in &self.by_pos[pos as usize] {
            if origin == Origin::Ideal && self.origins[g] == Origin::Ideal {
                continue;
            }
            cands.push((g, th.lcm(&self.leads[g].1)));
        }
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for idx in 0..cands.len() {
            let (g1, l1) = cands[idx];
            let coprime = self.coprime_applies(n, g1);
            let dominated_later = cands[idx + 1..].iter().any(|(_, l2)| l2.divides(&l1));
            let dominated_kept = kept.iter().any(|(_, l2, _)| l2.divides(&l1));
            if coprime || (!dominated_later && !dominated_kept) {
                kept.push((g1, l1, coprime));
            }
        }

        // chain criterion on existing pairs
        for list in pairs.values_mut() {
            list.retain(|p| {
                if p.pos != pos || !th.divides(&p.lcm) {
                    return true;
                }
                let li = th.lcm(&self.leads[p.i].1);
                let lj = th.lcm(&self.leads[p.j].1);
                li == p.lcm || lj == p.lcm
            });
        }
        pairs.retain(|_, list| !list.is_empty());

        for (g, lcm, coprime) in kept {
            if coprime {
                continue;
            }
            let p = Pair { i: g, j: n, lcm, pos };
            let d = self.pair_degree(&p);
            pairs.entry(d).or_default().push(p);
        }
        self.by_pos[pos as usize].push(n);
    }

    /// Runs the degree-by-degree Buchberger algorithm.
    pub fn compute(problem: GbProblem<'_>) -> GbOutput {
        let GbProblem {
            ctx,
            shifts,
            ideal,
            ideal_positions,
            background,
            candidates,
            degree_bound,
        } = problem;
        let mut gb = ModuleGb::empty(ctx, shifts);

        // (degree, class, sequence) keeps the processing order deterministic
        let mut inputs: Vec<(i32, u8, usize, FreeVector, Origin)> = Vec::new();
        let mut seq = 0;
        for pos in ideal_positions {
            for g in ideal {
                let v = g.offset_positions(pos as i64);
                let d = v.degree(shifts).expect("nonzero ideal generator");
                inputs.push((d, 0, seq, v, Origin::Ideal));
                seq += 1;
            }
        }
        for v in background {
            if let Some(d) = v.degree(shifts) {
                inputs.push((d, 1, seq, v, Origin::Background));
                seq += 1;
            }
        }
        for (k, v) in candidates.into_iter().enumerate() {
            if let Some(d) = v.degree(shifts) {
                inputs.push((d, 2, seq, v, Origin::Candidate(k)));
                seq += 1;
            }
        }
        inputs.sort_by(|a, b| (a.0, a.1, a.2).cmp(&(b.0, b.1, b.2)));

        let mut pairs: BTreeMap<i32, Vec<Pair>> = BTreeMap::new();
        let mut minimal = Vec::new();
        let mut next = 0;
        loop {
            let dp = pairs.keys().next().copied();
            let di = inputs.get(next).map(|x| x.0);
            let d = match (dp, di) {
                (None, None) => break,
                (Some(a), None) => a,
                (None, Some(b)) => b,
                (Some(a), Some(b)) => a.min(b),
            };
            if let Some(bound) = degree_bound {
                if d > bound {
                    gb.complete_through = Some(bound);
                    break;
                }
            }
            if let Some(mut list) = pairs.remove(&d) {
                list.sort_by(|a, b| {
                    ctx.cmp_terms(
                        &Term { pos: a.pos, mono: a.lcm, coeff: 1 },
                        &Term { pos: b.pos, mono: b.lcm, coeff: 1 },
                    )
                    .reverse()
                    .then((a.i, a.j).cmp(&(b.i, b.j)))
                });
                for p in list {
                    let s = gb.s_vector(&p);
                    let r = gb.reduce(s);
                    if !r.is_zero() {
                        let r = r.make_monic(&ctx);
                        gb.insert(r, Origin::Pair, &mut pairs);
                    }
                }
            }
            while next < inputs.len() && inputs[next].0 == d {
                let (_, _, _, v, origin) = core::mem::replace(
                    &mut inputs[next],
                    (0, 0, 0, FreeVector::zero(), Origin::Background),
                );
                next += 1;
                let r = gb.reduce(v);
                if r.is_zero() {
                    continue;
                }
                if let Origin::Candidate(k) = origin {
                    minimal.push(k);
                }
                let r = r.make_monic(&ctx);
                gb.insert(r, origin, &mut pairs);
            }
        }
        GbOutput { gb, minimal }
    }

    /// Interreduces tails so the basis becomes the reduced Gröbner basis.
    pub fn interreduce(&mut self) {
        for i in 0..self.elems.len() {
            let g = core::mem::take(&mut self.elems[i]);
            let lead = *g.lead().expect("nonzero");
            let tail = FreeVector::from_sorted(g.terms()[1..].to_vec());
            let r = self.reduce(tail);
            let mut terms = Vec::with_capacity(r.len() + 1);
            terms.push(lead);
            terms.extend_from_slice(r.terms());
            self.elems[i] = FreeVector::from_sorted(terms);
        }
    }

    /// Checks that every S-vector reduces to zero (Buchberger's criterion).
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        for i in 0..self.elems.len() {
            for j in (i + 1)..self.elems.len() {
                if self.leads[i].0 != self.leads[j].0 {
                    continue;
                }
                let p = Pair {
                    i,
                    j,
                    lcm: self.leads[i].1.lcm(&self.leads[j].1),
                    pos: self.leads[i].0,
                };
                if let Some(b) = self.complete_through {
                    if self.pair_degree(&p) > b {
                        continue;
                    }
                }
                if !self.reduce(self.s_vector(&p)).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Indices of a minimal generating subset of `candidates` modulo the
/// submodule generated by `background` and the ideal augmentation.
pub(crate) fn minimal_subset(
    ctx: Ctx,
    shifts: &[i32],
    ideal: &[FreeVector],
    background: Vec<FreeVector>,
    candidates: Vec<FreeVector>,
    degree_bound: Option<i32>,
) -> Vec<usize> {
    let rank = shifts.len() as u32;
    let out = ModuleGb::compute(GbProblem {
        ctx,
        shifts,
        ideal,
        ideal_positions: 0..rank,
        background,
        candidates,
        degree_bound,
    });
    out.minimal
}

/// A Gröbner basis returned to callers, with the ring it lives over.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Arc<PolynomialRing>,
    inner: ModuleGb,
    reduced: bool,
}

impl GroebnerBasis {
    /// Reduced Gröbner basis of the ideal generated by homogeneous `gens`.
    pub fn ideal(ring: &Arc<PolynomialRing>, gens: &[Polynomial]) -> Result<Self> {
        let vecs = gens
            .iter()
            .map(|g| {
                if g.ring() != ring {
                    return Err(Error::RingMismatch);
                }
                if !g.is_homogeneous() {
                    return Err(Error::Inhomogeneous(alloc::format!("{g}")));
                }
                Ok(g.as_vector().clone())
            })
            .collect::<Result<Vec<_>>>()?;
        Self::submodule(ring, &[0], vecs)
    }

    /// Reduced Gröbner basis of the submodule of `S^rank` (graded by
    /// `shifts`) generated by homogeneous vectors.
    pub fn submodule(ring: &Arc<PolynomialRing>, shifts: &[i32], gens: Vec<FreeVector>) -> Result<Self> {
        for g in &gens {
            if let Some(p) = g.max_position() {
                if p as usize >= shifts.len() {
                    return Err(Error::DimensionMismatch {
                        expected: shifts.len(),
                        found: p as usize + 1,
                    });
                }
            }
            if !g.is_homogeneous(shifts) {
                return Err(Error::Inhomogeneous("vector generator".into()));
            }
        }
        let out = ModuleGb::compute(GbProblem {
            ctx: ring.ctx(),
            shifts,
            ideal: &[],
            ideal_positions: 0..0,
            background: Vec::new(),
            candidates: gens,
            degree_bound: None,
        });
        let mut inner = out.gb;
        inner.interreduce();
        Ok(GroebnerBasis {
            ring: ring.clone(),
            inner,
            reduced: true,
        })
    }

    pub fn ring(&self) -> &Arc<PolynomialRing> {
        &self.ring
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn rank(&self) -> usize {
        self.inner.shifts.len()
    }

    pub fn len(&self) -> usize {
        self.inner.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.elems.is_empty()
    }

    pub fn vectors(&self) -> &[FreeVector] {
        &self.inner.elems
    }

    /// Generators as polynomials; meaningful for ideals (rank one).
    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.inner
            .elems
            .iter()
            .map(|v| self.ring.wrap(v.clone()))
            .collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.ring.wrap(self.inner.reduce(f.as_vector().clone()))
    }

    pub fn normal_form_vector(&self, f: &FreeVector) -> FreeVector {
        self.inner.reduce(f.clone())
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn leading_monomials_at(&self, pos: usize) -> Vec<Monomial> {
        self.inner.leading_monomials_at(pos as u32)
    }

    pub fn satisfies_buchberger_criterion(&self) -> bool {
        self.inner.satisfies_buchberger_criterion()
    }
}

/// Reduced Gröbner basis of a homogeneous ideal, in the order of the
/// polynomials' ring.
pub fn buchberger(ring: &Arc<PolynomialRing>, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    GroebnerBasis::ideal(ring, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialOrder;

    fn ring(names: &[&str], order: MonomialOrder) -> Arc<PolynomialRing> {
        PolynomialRing::new(32003, names, order).unwrap()
    }

    fn polys(r: &Arc<PolynomialRing>, s: &[&str]) -> Vec<Polynomial> {
        s.iter().map(|t| r.parse(t).unwrap()).collect()
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = ring(&["a", "b", "c"], MonomialOrder::DegRevLex);
        let gens = polys(&r, &["a*c", "b*c", "c^2"]);
        let gb = buchberger(&r, &gens).unwrap();
        let mut got = gb.polynomials();
        got.sort_by_key(|p| alloc::format!("{p}"));
        let mut want = gens.clone();
        want.sort_by_key(|p| alloc::format!("{p}"));
        assert_eq!(got, want);
        assert!(gb.satisfies_buchberger_criterion());
    }

    #[test]
    fn principal_ideal() {
        let r = ring(&["a", "b"], MonomialOrder::DegRevLex);
        let gb = buchberger(&r, &polys(&r, &["a"])).unwrap();
        assert_eq!(gb.polynomials(), polys(&r, &["a"]));
    }

    #[test]
    fn lex_basis_acquires_b_cubed() {
        let r = ring(&["a", "b"], MonomialOrder::Lex);
        let gb = buchberger(&r, &polys(&r, &["a^2 - b^2", "a*b"])).unwrap();
        let b3 = r.parse("b^3").unwrap();
        assert!(gb.polynomials().contains(&b3));
        assert!(gb.satisfies_buchberger_criterion());
    }

    #[test]
    fn normal_forms() {
        let r = ring(&["a", "b", "c"], MonomialOrder::DegRevLex);
        let gb = buchberger(&r, &polys(&r, &["a*c", "b*c", "c^2"])).unwrap();
        assert!(gb.normal_form(&r.parse("c^3").unwrap()).is_zero());
        let f = r.parse("a^2*b").unwrap();
        assert_eq!(gb.normal_form(&f), f);
    }

    #[test]
    fn inhomogeneous_input_rejected() {
        let r = ring(&["a", "b", "c"], MonomialOrder::DegRevLex);
        let err = buchberger(&r, &polys(&r, &["a*c + b"])).unwrap_err();
        assert!(matches!(err, Error::Inhomogeneous(_)));
    }

    #[test]
    fn minimal_subset_drops_redundant_generators() {
        let r = ring(&["a", "b"], MonomialOrder::DegRevLex);
        let ctx = r.ctx();
        let cands: Vec<FreeVector> = polys(&r, &["a", "a*b", "b^2", "a^2 + b^2"])
            .into_iter()
            .map(|p| p.as_vector().clone())
            .collect();
        let keep = minimal_subset(ctx, &[0], &[], Vec::new(), cands, None);
        assert_eq!(keep, alloc::vec![0, 2]);
    }
}
