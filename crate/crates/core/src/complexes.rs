//! Bounded chain complexes of graded modules over a quotient ring.
//!
//! Each term is a free module `R^g` with graded basis, optionally divided
//! by a relation matrix (so Koszul complexes with coefficients in a module
//! fit the same type). A complex may be *truncated*: its top stored term is
//! known but the differential leaving the next term is not, so homology at
//! the top degree is unavailable.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groebner::minimal_subset;
use crate::module::{FinitelyPresentedModule, ImageSolver};
use crate::quotient::{QuotientRing, RingMatrix};
use crate::resolutions::Resolution;
use crate::vector::FreeVector;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    ring: Arc<QuotientRing>,
    lo: i32,
    /// Generator degrees of the terms in degrees `lo, lo+1, ..`.
    modules: Vec<Vec<i32>>,
    /// `differentials[k]` maps degree `lo+k+1` to `lo+k`.
    differentials: Vec<RingMatrix>,
    relations: Option<Vec<RingMatrix>>,
    truncated: bool,
}

/// Homology at one degree, with the cycles that generate it.
#[derive(Clone, Debug)]
pub struct Homology {
    degree: i32,
    module: FinitelyPresentedModule,
    cycles: RingMatrix,
    boundaries: RingMatrix,
}

impl Homology {
    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn module(&self) -> &FinitelyPresentedModule {
        &self.module
    }

    /// Column `i` is the cycle representing generator `i` of the module.
    pub fn cycles(&self) -> &RingMatrix {
        &self.cycles
    }

    /// Generators of the boundaries, including relations of the term.
    pub fn boundaries(&self) -> &RingMatrix {
        &self.boundaries
    }

    pub fn length(&self) -> crate::module::Length {
        self.module.length()
    }

    pub fn is_zero(&self) -> bool {
        self.cycles.ncols() == 0
    }

    /// Class of a cycle as a vector over the module's generators, or `None`
    /// if the vector is not a cycle combination.
    pub fn class_of(&self, z: &FreeVector) -> Option<FreeVector> {
        let gens = self.cycles.hconcat(&self.boundaries);
        let v = ImageSolver::new(&gens).solve(z)?;
        Some(v.project(0, self.cycles.ncols() as u32))
    }
}

fn check_shape(m: &RingMatrix, rows: &[i32], cols: &[i32], what: &str) -> Result<()> {
    if m.row_degrees() != rows || m.col_degrees() != cols {
        return Err(Error::NotAComplex(alloc::format!("{what} has the wrong shape or grading")));
    }
    Ok(())
}

impl ChainComplex {
    /// A complex of free modules. `modules[k]` lists the generator degrees
    /// in homological degree `lo + k`; `differentials[k]` maps term `k+1` to
    /// term `k`.
    pub fn new(
        ring: &Arc<QuotientRing>,
        lo: i32,
        modules: Vec<Vec<i32>>,
        differentials: Vec<RingMatrix>,
        truncated: bool,
    ) -> Result<Self> {
        Self::build(ring, lo, modules, differentials, None, truncated)
    }

    /// A complex whose term `k` is `coker(relations[k])`. Each differential
    /// must carry relations into relations.
    pub fn with_relations(
        ring: &Arc<QuotientRing>,
        lo: i32,
        modules: Vec<Vec<i32>>,
        differentials: Vec<RingMatrix>,
        relations: Vec<RingMatrix>,
        truncated: bool,
    ) -> Result<Self> {
        Self::build(ring, lo, modules, differentials, Some(relations), truncated)
    }

    fn build(
        ring: &Arc<QuotientRing>,
        lo: i32,
        modules: Vec<Vec<i32>>,
        differentials: Vec<RingMatrix>,
        relations: Option<Vec<RingMatrix>>,
        truncated: bool,
    ) -> Result<Self> {
        if modules.is_empty() {
            return Err(Error::NotAComplex("no terms".into()));
        }
        if differentials.len() + 1 != modules.len() {
            return Err(Error::DimensionMismatch {
                expected: modules.len() - 1,
                found: differentials.len(),
            });
        }
        for (k, d) in differentials.iter().enumerate() {
            if d.ring() != ring {
                return Err(Error::RingMismatch);
            }
            check_shape(d, &modules[k], &modules[k + 1], "differential")?;
        }
        if let Some(rel) = &relations {
            if rel.len() != modules.len() {
                return Err(Error::DimensionMismatch {
                    expected: modules.len(),
                    found: rel.len(),
                });
            }
            for (k, p) in rel.iter().enumerate() {
                if p.row_degrees() != modules[k].as_slice() {
                    return Err(Error::NotAComplex("relation matrix has the wrong rows".into()));
                }
            }
        }
        let c = ChainComplex {
            ring: ring.clone(),
            lo,
            modules,
            differentials,
            relations,
            truncated,
        };
        c.verify()?;
        Ok(c)
    }

    /// Checks `∂∂ = 0` and, with relations, that differentials respect them.
    fn verify(&self) -> Result<()> {
        for k in 1..self.differentials.len() {
            let dd = self.differentials[k - 1].mul(&self.differentials[k])?;
            if !self.vanishes_in(k, &dd) {
                return Err(Error::NotAComplex(alloc::format!(
                    "composite of differentials at degree {} is nonzero",
                    self.lo + k as i32 + 1
                )));
            }
        }
        if let Some(rel) = &self.relations {
            for k in 0..self.differentials.len() {
                let img = self.differentials[k].mul(&rel[k + 1])?;
                if !self.vanishes_in(k, &img) {
                    return Err(Error::NotAComplex("differential does not respect relations".into()));
                }
            }
        }
        Ok(())
    }

    /// `true` when every column of `m` is zero in term `k` (mod relations).
    fn vanishes_in(&self, k: usize, m: &RingMatrix) -> bool {
        if m.is_zero() {
            return true;
        }
        match &self.relations {
            None => false,
            Some(rel) => {
                let solver = ImageSolver::new(&rel[k]);
                m.columns().iter().all(|c| solver.contains(c))
            }
        }
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        &self.ring
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.modules.len() as i32 - 1
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn has_relations(&self) -> bool {
        self.relations.is_some()
    }

    fn index(&self, n: i32) -> Option<usize> {
        (n >= self.lo && n <= self.hi()).then(|| (n - self.lo) as usize)
    }

    /// Generator degrees of the term in degree `n` (empty outside range).
    pub fn generator_degrees(&self, n: i32) -> &[i32] {
        self.index(n).map_or(&[], |k| self.modules[k].as_slice())
    }

    pub fn rank(&self, n: i32) -> usize {
        self.generator_degrees(n).len()
    }

    /// Ranks of the terms from `lo` to `hi`.
    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(Vec::len).collect()
    }

    /// `∂_n`, with zero maps outside the stored range.
    pub fn differential(&self, n: i32) -> RingMatrix {
        match self.index(n) {
            Some(k) if k > 0 => self.differentials[k - 1].clone(),
            _ => RingMatrix::zero(
                &self.ring,
                self.generator_degrees(n - 1).to_vec(),
                self.generator_degrees(n).to_vec(),
            ),
        }
    }

    /// Relations of the term in degree `n`, as the columns of a matrix.
    pub fn relations(&self, n: i32) -> RingMatrix {
        match (&self.relations, self.index(n)) {
            (Some(rel), Some(k)) => rel[k].clone(),
            _ => RingMatrix::zero(&self.ring, self.generator_degrees(n).to_vec(), Vec::new()),
        }
    }

    /// Drops terms above `top`, marking the result truncated.
    pub fn truncate_above(&self, top: i32) -> ChainComplex {
        if top >= self.hi() {
            return self.clone();
        }
        let keep = (top - self.lo + 1).max(1) as usize;
        ChainComplex {
            ring: self.ring.clone(),
            lo: self.lo,
            modules: self.modules[..keep].to_vec(),
            differentials: self.differentials[..keep - 1].to_vec(),
            relations: self.relations.as_ref().map(|r| r[..keep].to_vec()),
            truncated: true,
        }
    }

    /// Homology in degree `n`, presented on a minimal set of cycles modulo
    /// boundaries.
    pub fn homology_at(&self, n: i32) -> Result<Homology> {
        if self.truncated && n >= self.hi() {
            return Err(Error::Truncated { degree: n });
        }
        let ring = &self.ring;
        let degs = self.generator_degrees(n).to_vec();
        let boundaries = self.differential(n + 1).hconcat(&self.relations(n));
        if degs.is_empty() {
            return Ok(Homology {
                degree: n,
                module: FinitelyPresentedModule::free(ring, Vec::new()),
                cycles: RingMatrix::zero(ring, Vec::new(), Vec::new()),
                boundaries,
            });
        }
        let cycles = self.cycles_at(n);
        let mut keep = minimal_subset(
            ring.ctx(),
            &degs,
            ring.ideal_vectors(),
            boundaries.columns().to_vec(),
            cycles.columns().to_vec(),
            None,
        );
        keep.sort_unstable();
        let cycles = cycles.select_columns(&keep);
        let z = cycles.ncols() as u32;
        let relations: Vec<FreeVector> = ImageSolver::new(&cycles.hconcat(&boundaries))
            .syzygies()
            .columns()
            .iter()
            .map(|v| v.project(0, z))
            .filter(|v| !v.is_zero())
            .collect();
        let rel_degs = relations
            .iter()
            .map(|v| v.degree(cycles.col_degrees()).expect("nonzero"))
            .collect();
        let rel = RingMatrix::new(ring, cycles.col_degrees().to_vec(), rel_degs, relations)?;
        Ok(Homology {
            degree: n,
            module: FinitelyPresentedModule::new(rel),
            cycles,
            boundaries,
        })
    }

    /// Generators of `ker ∂_n`, modulo relations of the term below.
    fn cycles_at(&self, n: i32) -> RingMatrix {
        let degs = self.generator_degrees(n).to_vec();
        if self.generator_degrees(n - 1).is_empty() {
            return RingMatrix::identity(&self.ring, degs);
        }
        let d = self.differential(n);
        let a = d.hconcat(&self.relations(n - 1));
        let c = d.ncols() as u32;
        let cols: Vec<FreeVector> = ImageSolver::new(&a)
            .syzygies()
            .columns()
            .iter()
            .map(|v| v.project(0, c))
            .filter(|v| !v.is_zero())
            .collect();
        let col_degs = cols.iter().map(|v| v.degree(&degs).expect("nonzero")).collect();
        RingMatrix::new(&self.ring, degs, col_degs, cols).expect("homogeneous cycles")
    }

    /// Highest degree with nonzero homology among the computable degrees.
    pub fn homology_sup(&self) -> Result<Option<i32>> {
        let top = if self.truncated { self.hi() - 1 } else { self.hi() };
        for n in (self.lo..=top).rev() {
            if !self.homology_at(n)?.module().is_zero() {
                return Ok(Some(n));
            }
        }
        Ok(None)
    }

    /// `Σ^t X`: degrees move up by `t`, differentials pick up `(-1)^t`.
    pub fn shift(&self, t: i32) -> ChainComplex {
        let differentials = if t % 2 == 0 {
            self.differentials.clone()
        } else {
            self.differentials.iter().map(|d| d.scale(-1)).collect()
        };
        ChainComplex {
            lo: self.lo + t,
            differentials,
            ..self.clone()
        }
    }

    /// Cancels unit entries of the differentials until every entry lies in
    /// the irrelevant ideal, always taking the first unit in a column-major
    /// scan from the lowest differential up.
    pub fn minimize(&self) -> Result<ChainComplex> {
        self.minimize_by(|_| 0)
    }

    /// Minimization with a caller-chosen pivot among the available units.
    pub fn minimize_by(&self, mut choose: impl FnMut(&[UnitEntry]) -> usize) -> Result<ChainComplex> {
        if self.relations.is_some() {
            return Err(Error::NotFree);
        }
        let ctx = self.ring.ctx();
        let mut modules = self.modules.clone();
        let mut cols: Vec<Vec<FreeVector>> = self
            .differentials
            .iter()
            .map(|d| d.columns().to_vec())
            .collect();
        loop {
            let units = unit_entries(&cols);
            if units.is_empty() {
                break;
            }
            let pick = choose(&units).min(units.len() - 1);
            let UnitEntry { map, row: k, col: j, value } = units[pick];
            let inv = ctx.field.inv(value).expect("unit");
            let pivot = cols[map][j].clone();
            for (l, col) in cols[map].iter_mut().enumerate() {
                if l == j {
                    continue;
                }
                let e = col.component(k as u32);
                if e.is_zero() {
                    continue;
                }
                let f = e.scale(&ctx, ctx.field.neg(inv));
                *col = self.ring.reduce_vector(col.add(&ctx, &pivot.mul_poly(&ctx, &f)));
            }
            cols[map].remove(j);
            for col in cols[map].iter_mut() {
                *col = col.delete_position(k as u32);
            }
            // map sends term map+1 to term map
            if map + 1 < cols.len() {
                for col in cols[map + 1].iter_mut() {
                    *col = col.delete_position(j as u32);
                }
            }
            if map > 0 {
                cols[map - 1].remove(k);
            }
            modules[map + 1].remove(j);
            modules[map].remove(k);
        }
        let differentials = cols
            .into_iter()
            .enumerate()
            .map(|(k, c)| RingMatrix::from_reduced(&self.ring, modules[k].clone(), modules[k + 1].clone(), c))
            .collect();
        Ok(ChainComplex {
            ring: self.ring.clone(),
            lo: self.lo,
            modules,
            differentials,
            relations: None,
            truncated: self.truncated,
        })
    }

    /// `true` when every differential entry lies in the irrelevant ideal.
    pub fn is_minimal(&self) -> bool {
        self.differentials.iter().all(RingMatrix::is_minimal)
    }
}

/// A scalar unit entry of a differential available for cancellation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnitEntry {
    /// Index of the differential (`0` is the lowest stored one).
    pub map: usize,
    pub row: usize,
    pub col: usize,
    pub value: u32,
}

fn unit_entries(cols: &[Vec<FreeVector>]) -> Vec<UnitEntry> {
    let mut out = Vec::new();
    for (map, m) in cols.iter().enumerate() {
        for (col, c) in m.iter().enumerate() {
            for t in c.terms() {
                if t.mono.is_one() {
                    out.push(UnitEntry {
                        map,
                        row: t.pos as usize,
                        col,
                        value: t.coeff,
                    });
                }
            }
        }
    }
    out
}

/// A degree-preserving morphism of complexes, stored by homological degree
/// of the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexMap {
    source: ChainComplex,
    target: ChainComplex,
    components: Vec<RingMatrix>,
}

impl ComplexMap {
    /// `components[k]` maps source degree `source.lo() + k` to the target in
    /// the same degree. Commutation with the differentials is verified.
    pub fn new(source: &ChainComplex, target: &ChainComplex, components: Vec<RingMatrix>) -> Result<Self> {
        if source.ring != target.ring {
            return Err(Error::RingMismatch);
        }
        if components.len() != source.modules.len() {
            return Err(Error::DimensionMismatch {
                expected: source.modules.len(),
                found: components.len(),
            });
        }
        for (k, f) in components.iter().enumerate() {
            let n = source.lo + k as i32;
            if f.row_degrees() != target.generator_degrees(n) || f.col_degrees() != source.generator_degrees(n) {
                return Err(Error::NotAChainMap(alloc::format!("component {n} has the wrong shape")));
            }
        }
        let map = ComplexMap {
            source: source.clone(),
            target: target.clone(),
            components,
        };
        map.verify()?;
        Ok(map)
    }

    fn verify(&self) -> Result<()> {
        let top = self.source.hi().min(self.target.hi() + 1);
        for n in self.source.lo..=top {
            // ∂^Y_n f_n = f_{n-1} ∂^X_n, as maps into term n-1 of the target
            let left = self.target.differential(n).mul(&self.component(n))?;
            let right = self.component(n - 1).mul(&self.source.differential(n))?;
            let diff = left.sub(&right)?;
            if diff.is_zero() {
                continue;
            }
            let ok = match self.target.index(n - 1) {
                Some(k) => self.target.vanishes_in(k, &diff),
                None => false,
            };
            if !ok {
                return Err(Error::NotAChainMap(alloc::format!("does not commute at degree {n}")));
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &ChainComplex {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.target
    }

    /// The component in degree `n`; zero outside the source range.
    pub fn component(&self, n: i32) -> RingMatrix {
        match self.source.index(n) {
            Some(k) => self.components[k].clone(),
            None => RingMatrix::zero(
                &self.source.ring,
                self.target.generator_degrees(n).to_vec(),
                self.source.generator_degrees(n).to_vec(),
            ),
        }
    }

    /// The induced map `H_n(X) -> H_n(Y)` as a matrix from the generators
    /// of `hx` to those of `hy`.
    pub fn induced_on_homology(&self, hx: &Homology, hy: &Homology) -> Result<RingMatrix> {
        let f = self.component(hx.degree);
        let images = f.mul(hx.cycles())?;
        let gens = hy.cycles().hconcat(hy.boundaries());
        let solver = ImageSolver::new(&gens);
        let z = hy.cycles().ncols() as u32;
        let mut cols = Vec::with_capacity(images.ncols());
        for c in images.columns() {
            let v = solver.solve(c).ok_or(Error::NotInImage)?;
            cols.push(v.project(0, z));
        }
        RingMatrix::new(
            &self.source.ring,
            hy.cycles().col_degrees().to_vec(),
            hx.cycles().col_degrees().to_vec(),
            cols,
        )
    }
}

/// The cone of `alpha : X -> Y`: `C_n = X_{n-1} ⊕ Y_n` with differential
/// `(x, y) -> (-∂x, αx + ∂y)`.
pub fn mapping_cone(alpha: &ComplexMap) -> Result<ChainComplex> {
    let x = &alpha.source;
    let y = &alpha.target;
    let ring = &x.ring;
    let ctx = ring.ctx();
    let lo = (x.lo + 1).min(y.lo);
    let mut hi = (x.hi() + 1).max(y.hi());
    let mut truncated = false;
    if x.truncated {
        hi = hi.min(x.hi() + 1);
        truncated = true;
    }
    if y.truncated {
        hi = hi.min(y.hi());
        truncated = true;
    }
    let degrees = |n: i32| -> Vec<i32> {
        let mut d = x.generator_degrees(n - 1).to_vec();
        d.extend_from_slice(y.generator_degrees(n));
        d
    };
    let modules: Vec<Vec<i32>> = (lo..=hi).map(degrees).collect();
    let mut differentials = Vec::new();
    for n in (lo + 1)..=hi {
        let dx = x.differential(n - 1);
        let dy = y.differential(n);
        let a = alpha.component(n - 1);
        let top = x.rank(n - 2) as i64;
        let mut cols = Vec::new();
        for j in 0..dx.ncols() {
            let v = dx.column(j).neg(&ctx).add(&ctx, &a.column(j).offset_positions(top));
            cols.push(v);
        }
        for j in 0..dy.ncols() {
            cols.push(dy.column(j).offset_positions(top));
        }
        let k = (n - lo) as usize;
        differentials.push(RingMatrix::new(ring, modules[k - 1].clone(), modules[k].clone(), cols)?);
    }
    let relations = if x.relations.is_some() || y.relations.is_some() {
        let mut rel = Vec::new();
        for (k, n) in (lo..=hi).enumerate() {
            let px = x.relations(n - 1);
            let py = y.relations(n);
            let top = px.nrows() as i64;
            let mut cols: Vec<FreeVector> = px.columns().to_vec();
            cols.extend(py.columns().iter().map(|c| c.offset_positions(top)));
            let mut cdeg = px.col_degrees().to_vec();
            cdeg.extend_from_slice(py.col_degrees());
            rel.push(RingMatrix::new(ring, modules[k].clone(), cdeg, cols)?);
        }
        Some(rel)
    } else {
        None
    };
    ChainComplex::build(ring, lo, modules, differentials, relations, truncated)
}

/// Attaches a free resolution of the top homology `H_s(X)` to `X` through
/// a morphism `α : Σ^s F -> X` lifting the augmentation; the cone of `α`
/// has the homology of `X` below `s` and none from `s` up.
pub fn kill_top_homology(
    x: &ChainComplex,
    top: &Homology,
    f: &Resolution,
) -> Result<(ComplexMap, ChainComplex)> {
    let s = top.degree();
    if f.module() != top.module() {
        return Err(Error::NotAResolution("resolution of a different module".into()));
    }
    let last = if x.truncated { x.hi() - 1 } else { x.hi() };
    for n in (s + 1)..=last {
        if !x.homology_at(n)?.module().is_zero() {
            return Err(Error::Precondition(alloc::format!(
                "homology in degree {n} is nonzero, so degree {s} is not the top"
            )));
        }
    }
    attach_resolution(x, top, f)
}

/// [`kill_top_homology`] without the check that `top` is the highest
/// nonzero homology; callers that already know it skip the recomputation.
pub(crate) fn attach_resolution(
    x: &ChainComplex,
    top: &Homology,
    f: &Resolution,
) -> Result<(ComplexMap, ChainComplex)> {
    let s = top.degree();
    let ring = &x.ring;
    let fc = f.complex();
    let sf = fc.shift(s);
    let sign: i64 = if s % 2 == 0 { 1 } else { -1 };
    let mut components: Vec<RingMatrix> = Vec::new();
    let beta0 = top.cycles().select_columns(f.kept_generators());
    components.push(beta0);
    for k in 1..=fc.hi() {
        let n = s + k;
        let target_degs = x.generator_degrees(n).to_vec();
        let rhs = components[(k - 1) as usize].mul(&fc.differential(k))?.scale(sign);
        if x.truncated && n > x.hi() {
            return Err(Error::Truncated { degree: n });
        }
        let a = x.differential(n).hconcat(&x.relations(n - 1));
        let solver = ImageSolver::new(&a);
        let width = x.rank(n) as u32;
        let mut cols = Vec::with_capacity(rhs.ncols());
        for c in rhs.columns() {
            let v = solver
                .solve(c)
                .ok_or_else(|| Error::NotAResolution(alloc::format!("no lift in degree {n}")))?;
            cols.push(v.project(0, width));
        }
        components.push(RingMatrix::new(
            ring,
            target_degs,
            fc.generator_degrees(k).to_vec(),
            cols,
        )?);
    }
    let alpha = ComplexMap::new(&sf, x, components)?;
    let cone = mapping_cone(&alpha)?;
    Ok((alpha, cone))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::Length;
    use crate::poly::Polynomial;

    fn koszul2(r: &Arc<QuotientRing>, f: &Polynomial, g: &Polynomial) -> ChainComplex {
        let df = f.degree().unwrap() as i32;
        let dg = g.degree().unwrap() as i32;
        let d1 = RingMatrix::row(r, &[f.clone(), g.clone()]).unwrap();
        let d2 = RingMatrix::from_entries(
            r,
            alloc::vec![df, dg],
            alloc::vec![df + dg],
            &[(0, 0, g.neg()), (1, 0, f.clone())],
        )
        .unwrap();
        ChainComplex::new(
            r,
            0,
            alloc::vec![alloc::vec![0], alloc::vec![df, dg], alloc::vec![df + dg]],
            alloc::vec![d1, d2],
            false,
        )
        .unwrap()
    }

    fn r1() -> Arc<QuotientRing> {
        QuotientRing::parse(32003, &["a", "b", "c"], &["a*c", "b*c", "c^2"]).unwrap()
    }

    #[test]
    fn rejects_non_complex() {
        let r = QuotientRing::parse(32003, &["a", "b"], &[]).unwrap();
        let s = r.ambient();
        let d1 = RingMatrix::row(&r, &[s.var(0)]).unwrap();
        let d2 = RingMatrix::from_entries(&r, alloc::vec![1], alloc::vec![2], &[(0, 0, s.var(0))]).unwrap();
        let c = ChainComplex::new(&r, 0, alloc::vec![alloc::vec![0], alloc::vec![1], alloc::vec![2]], alloc::vec![d1, d2], false);
        assert!(matches!(c, Err(Error::NotAComplex(_))));
    }

    #[test]
    fn koszul_homology_of_regular_sequence() {
        let r = QuotientRing::parse(32003, &["a", "b"], &[]).unwrap();
        let s = r.ambient();
        let k = koszul2(&r, &s.var(0), &s.var(1));
        assert!(k.homology_at(1).unwrap().module().is_zero());
        assert!(k.homology_at(2).unwrap().module().is_zero());
        assert_eq!(k.homology_at(0).unwrap().length(), Length::Finite(1));
    }

    #[test]
    fn koszul_homology_over_r1() {
        let r = r1();
        let s = r.ambient();
        let k = koszul2(&r, &s.var(0), &s.var(1));
        let h2 = k.homology_at(2).unwrap();
        assert_eq!(h2.length(), Length::Finite(1));
        let h1 = k.homology_at(1).unwrap();
        assert_eq!(h1.length(), Length::Finite(2));
        assert_eq!(h1.module().minimal_generator_count(), 2);
        assert_eq!(k.homology_at(0).unwrap().length(), Length::Finite(2));
    }

    #[test]
    fn shift_reindexes_homology() {
        let r = r1();
        let s = r.ambient();
        let k = koszul2(&r, &s.var(0), &s.var(1));
        let sk = k.shift(1);
        assert_eq!(sk.lo(), 1);
        assert_eq!(sk.homology_at(2).unwrap().length(), k.homology_at(1).unwrap().length());
        assert_eq!(k.shift(0), k);
        assert_eq!(k.shift(1).shift(2), k.shift(3));
    }

    #[test]
    fn cone_of_identity_is_exact_and_minimizes_away() {
        let r = r1();
        let s = r.ambient();
        let k = koszul2(&r, &s.var(0), &s.var(1));
        let id = ComplexMap::new(
            &k,
            &k,
            (0..=2).map(|n| RingMatrix::identity(&r, k.generator_degrees(n).to_vec())).collect(),
        )
        .unwrap();
        let c = mapping_cone(&id).unwrap();
        for n in c.lo()..=c.hi() {
            assert!(c.homology_at(n).unwrap().module().is_zero());
        }
        let m = c.minimize().unwrap();
        assert!(m.ranks().iter().all(|&r| r == 0));
    }

    #[test]
    fn cone_of_zero_map_adds_lengths() {
        let r = r1();
        let s = r.ambient();
        let k = koszul2(&r, &s.var(0), &s.var(1));
        let zero = ComplexMap::new(
            &k,
            &k,
            (0..=2)
                .map(|n| RingMatrix::zero(&r, k.generator_degrees(n).to_vec(), k.generator_degrees(n).to_vec()))
                .collect(),
        )
        .unwrap();
        let c = mapping_cone(&zero).unwrap();
        // H_2(C) = H_1(K) ⊕ H_2(K)
        assert_eq!(c.homology_at(2).unwrap().length(), Length::Finite(3));
    }
}
