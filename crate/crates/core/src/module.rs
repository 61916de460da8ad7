//! Finitely presented graded modules over a quotient ring, and linear
//! systems over the ring solved by elimination in a graph module.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groebner::{minimal_subset, GbProblem, ModuleGb};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::quotient::{QuotientRing, RingMatrix};
use crate::staircase;
use crate::vector::FreeVector;

/// Length of a module over the ring, as a vector space over the field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Length {
    Finite(u64),
    Infinite,
}

impl Length {
    pub fn finite(self) -> Option<u64> {
        match self {
            Length::Finite(n) => Some(n),
            Length::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Length::Finite(_))
    }
}

impl core::fmt::Display for Length {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Length::Finite(n) => write!(f, "{n}"),
            Length::Infinite => f.write_str("inf"),
        }
    }
}

/// `M = coker(R^c -> R^g)` with graded generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitelyPresentedModule {
    relations: RingMatrix,
}

impl FinitelyPresentedModule {
    /// The cokernel of `relations`; generator degrees are its row degrees.
    pub fn new(relations: RingMatrix) -> Self {
        FinitelyPresentedModule { relations }
    }

    pub fn free(ring: &Arc<QuotientRing>, degrees: Vec<i32>) -> Self {
        Self::new(RingMatrix::zero(ring, degrees, Vec::new()))
    }

    /// `R/(f_1, .., f_n)`.
    pub fn cyclic(ring: &Arc<QuotientRing>, gens: &[Polynomial]) -> Result<Self> {
        Ok(Self::new(RingMatrix::row(ring, gens)?))
    }

    /// The residue field `k = R/m`.
    pub fn residue_field(ring: &Arc<QuotientRing>) -> Self {
        let vars = ring.ambient().variables();
        Self::cyclic(ring, &vars).expect("variables are homogeneous")
    }

    /// `M / (f_1, .., f_n) M`.
    pub fn quotient_by(&self, elements: &[Polynomial]) -> Result<Self> {
        let ring = self.ring();
        let ctx = ring.ctx();
        let gdeg = self.generator_degrees().to_vec();
        let mut degs = Vec::new();
        let mut cols = Vec::new();
        for f in elements {
            if f.ring() != ring.ambient() {
                return Err(Error::RingMismatch);
            }
            if !f.is_homogeneous() {
                return Err(Error::Inhomogeneous(alloc::format!("{f}")));
            }
            let Some(fd) = f.degree() else { continue };
            for (i, &d) in gdeg.iter().enumerate() {
                cols.push(f.as_vector().offset_positions(i as i64));
                degs.push(d + fd as i32);
            }
        }
        let extra = RingMatrix::new(ring, gdeg, degs, cols)?;
        let _ = ctx;
        Ok(Self::new(self.relations.hconcat(&extra)))
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        self.relations.ring()
    }

    pub fn generator_degrees(&self) -> &[i32] {
        self.relations.row_degrees()
    }

    pub fn num_generators(&self) -> usize {
        self.relations.nrows()
    }

    pub fn relations(&self) -> &RingMatrix {
        &self.relations
    }

    /// Gröbner basis of the lifted relation module `rel + I * S^g`.
    fn lifted_basis(&self) -> ModuleGb {
        let ring = self.ring();
        let shifts = self.generator_degrees();
        ModuleGb::compute(GbProblem {
            ctx: ring.ctx(),
            shifts,
            ideal: ring.ideal_vectors(),
            ideal_positions: 0..shifts.len() as u32,
            background: self.relations.columns().to_vec(),
            candidates: Vec::new(),
            degree_bound: None,
        })
        .gb
    }

    /// Leading monomials of the relation module, position by position.
    pub fn initial_module(&self) -> Vec<Vec<Monomial>> {
        let gb = self.lifted_basis();
        (0..self.num_generators())
            .map(|i| gb.leading_monomials_at(i as u32))
            .collect()
    }

    /// `dim_k M_d` for `d = lo..=hi`.
    pub fn hilbert_function(&self, lo: i32, hi: i32) -> Vec<u64> {
        let init = self.initial_module();
        let nv = self.ring().nvars();
        let mut out = alloc::vec![0u64; (hi - lo + 1).max(0) as usize];
        for (i, lead) in init.iter().enumerate() {
            let shift = self.generator_degrees()[i];
            if hi < shift {
                continue;
            }
            let hf = staircase::hilbert_function(lead, nv, (hi - shift) as u32);
            for d in lo.max(shift)..=hi {
                out[(d - lo) as usize] += hf[(d - shift) as usize];
            }
        }
        out
    }

    pub fn length(&self) -> Length {
        let nv = self.ring().nvars();
        let mut total = 0;
        for lead in self.initial_module() {
            match staircase::standard_monomial_count(&lead, nv) {
                Some(n) => total += n,
                None => return Length::Infinite,
            }
        }
        Length::Finite(total)
    }

    /// Krull dimension of the support; `-1` for the zero module.
    pub fn krull_dimension(&self) -> i32 {
        let nv = self.ring().nvars();
        self.initial_module()
            .iter()
            .map(|lead| staircase::dimension(lead, nv))
            .max()
            .unwrap_or(-1)
    }

    pub fn is_zero(&self) -> bool {
        self.length() == Length::Finite(0)
    }

    /// A minimal presentation, together with the indices of the original
    /// generators it keeps. The kept generators map to a minimal system of
    /// generators of the same module.
    pub fn minimize(&self) -> (FinitelyPresentedModule, Vec<usize>) {
        let ring = self.ring().clone();
        let ctx = ring.ctx();
        let rel = self.prune_relations();
        let (mut rows, mut degs, mut cols) = rel.into_parts();
        let mut kept: Vec<usize> = (0..rows.len()).collect();
        while let Some((j, k, u)) = find_unit(&cols) {
            let inv = ctx.field.inv(u).expect("unit");
            let pivot = cols[j].clone();
            for (l, col) in cols.iter_mut().enumerate() {
                if l == j {
                    continue;
                }
                let e = col.component(k as u32);
                if e.is_zero() {
                    continue;
                }
                let f = e.scale(&ctx, ctx.field.neg(inv));
                *col = ring.reduce_vector(col.add(&ctx, &pivot.mul_poly(&ctx, &f)));
            }
            cols.remove(j);
            degs.remove(j);
            for col in cols.iter_mut() {
                *col = col.delete_position(k as u32);
            }
            rows.remove(k);
            kept.remove(k);
        }
        let m = FinitelyPresentedModule::new(RingMatrix::from_reduced(&ring, rows, degs, cols));
        let pruned = m.prune_relations();
        (FinitelyPresentedModule::new(pruned), kept)
    }

    /// Number of minimal generators.
    pub fn minimal_generator_count(&self) -> usize {
        self.minimize().0.num_generators()
    }

    /// The relation matrix restricted to a minimal generating subset of its
    /// columns.
    fn prune_relations(&self) -> RingMatrix {
        let ring = self.ring();
        let idx = minimal_subset(
            ring.ctx(),
            self.generator_degrees(),
            ring.ideal_vectors(),
            Vec::new(),
            self.relations.columns().to_vec(),
            None,
        );
        let mut idx = idx;
        idx.sort_unstable();
        self.relations.select_columns(&idx)
    }
}

/// First scalar unit entry in a column-major scan: `(col, row, value)`.
fn find_unit(cols: &[FreeVector]) -> Option<(usize, usize, u32)> {
    for (j, c) in cols.iter().enumerate() {
        let mut best: Option<(usize, u32)> = None;
        for t in c.terms() {
            if t.mono.is_one() && best.is_none_or(|(r, _)| (t.pos as usize) < r) {
                best = Some((t.pos as usize, t.coeff));
            }
        }
        if let Some((k, u)) = best {
            return Some((j, k, u));
        }
    }
    None
}

/// Solves linear systems `A v = w` over the quotient ring and computes the
/// syzygies of `A`, through one elimination Gröbner basis of the graph of
/// `A` inside `S^(r + c)`.
#[derive(Clone, Debug)]
pub struct ImageSolver {
    matrix: RingMatrix,
    gb: ModuleGb,
    degree_bound: Option<i32>,
}

impl ImageSolver {
    pub fn new(matrix: &RingMatrix) -> Self {
        Self::with_degree_bound(matrix, None)
    }

    /// A solver whose basis is only complete through internal degree
    /// `bound`; solutions and syzygies above it are not available.
    pub fn with_degree_bound(matrix: &RingMatrix, degree_bound: Option<i32>) -> Self {
        let ring = matrix.ring();
        let r = matrix.nrows();
        let mut shifts = matrix.row_degrees().to_vec();
        shifts.extend_from_slice(matrix.col_degrees());
        let nv = ring.nvars();
        let graph = matrix
            .columns()
            .iter()
            .enumerate()
            .map(|(j, c)| {
                let e = FreeVector::single((r + j) as u32, Monomial::one(nv), 1);
                c.add(&ring.ctx(), &e)
            })
            .collect();
        let gb = ModuleGb::compute(GbProblem {
            ctx: ring.ctx(),
            shifts: &shifts,
            ideal: ring.ideal_vectors(),
            ideal_positions: 0..r as u32,
            background: graph,
            candidates: Vec::new(),
            degree_bound,
        })
        .gb;
        ImageSolver {
            matrix: matrix.clone(),
            gb,
            degree_bound,
        }
    }

    pub fn matrix(&self) -> &RingMatrix {
        &self.matrix
    }

    /// Some `v` with `A v = w`, or `None` when `w` is not in the image.
    pub fn solve(&self, w: &FreeVector) -> Option<FreeVector> {
        let r = self.matrix.nrows() as u32;
        let c = self.matrix.ncols() as u32;
        let rem = self.gb.reduce(w.clone());
        if rem.terms().iter().any(|t| t.pos < r) {
            return None;
        }
        let ring = self.matrix.ring();
        let v = rem.project(r, r + c).neg(&ring.ctx());
        Some(ring.reduce_vector(v))
    }

    /// Solves `A V = W` column by column.
    pub fn solve_matrix(&self, w: &RingMatrix) -> Result<RingMatrix> {
        let mut cols = Vec::with_capacity(w.ncols());
        for col in w.columns() {
            cols.push(self.solve(col).ok_or(Error::NotInImage)?);
        }
        RingMatrix::new(
            self.matrix.ring(),
            self.matrix.col_degrees().to_vec(),
            w.col_degrees().to_vec(),
            cols,
        )
    }

    /// `true` when `w` lies in the image of `A`.
    pub fn contains(&self, w: &FreeVector) -> bool {
        let r = self.matrix.nrows() as u32;
        self.gb.reduce(w.clone()).terms().iter().all(|t| t.pos >= r)
    }

    /// A generating set of the syzygies of `A`, not necessarily minimal.
    pub fn syzygy_generators(&self) -> Vec<FreeVector> {
        let r = self.matrix.nrows() as u32;
        let c = self.matrix.ncols() as u32;
        let ring = self.matrix.ring();
        self.gb
            .elements()
            .iter()
            .filter(|v| v.lead().is_some_and(|t| t.pos >= r))
            .map(|v| ring.reduce_vector(v.project(r, r + c)))
            .filter(|v| !v.is_zero())
            .collect()
    }

    /// A minimal generating set of the syzygy module of `A`, as the columns
    /// of a matrix whose rows are indexed by the columns of `A`.
    pub fn syzygies(&self) -> RingMatrix {
        let ring = self.matrix.ring();
        let shifts = self.matrix.col_degrees();
        let gens = self.syzygy_generators();
        let mut idx = minimal_subset(
            ring.ctx(),
            shifts,
            ring.ideal_vectors(),
            Vec::new(),
            gens.clone(),
            self.degree_bound,
        );
        idx.sort_unstable();
        let degs = idx
            .iter()
            .map(|&i| gens[i].degree(shifts).expect("nonzero syzygy"))
            .collect();
        let cols = idx.into_iter().map(|i| gens[i].clone()).collect();
        RingMatrix::from_reduced(ring, shifts.to_vec(), degs, cols)
    }
}

/// A minimal generating set of the syzygies of `a`.
pub fn syzygies(a: &RingMatrix) -> RingMatrix {
    ImageSolver::new(a).syzygies()
}
