//! Minimal graded free resolutions, Betti tables and Poincaré series
//! truncations, and resolutions assembled from Koszul complexes by
//! mapping cones.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::complexes::{attach_resolution, ChainComplex, Homology};
use crate::error::{Error, Result};
use crate::koszul::{koszul_complex, ParameterSequence};
use crate::linalg::DenseMatrix;
use crate::module::{FinitelyPresentedModule, ImageSolver};
use crate::quotient::RingMatrix;

/// Tuning for resolution computations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ResolutionOptions {
    /// Largest internal degree of syzygies to compute; `None` computes
    /// every syzygy. Betti numbers above the bound are not recorded.
    pub degree_bound: Option<i32>,
}

/// `F -> M -> 0`, the first terms of a free resolution of `M`.
#[derive(Clone, Debug)]
pub struct Resolution {
    module: FinitelyPresentedModule,
    kept: Vec<usize>,
    complex: ChainComplex,
    options: ResolutionOptions,
}

impl Resolution {
    /// The resolved module, in the presentation it was given.
    pub fn module(&self) -> &FinitelyPresentedModule {
        &self.module
    }

    /// Basis element `i` of `F_0` maps to generator `kept[i]` of the module.
    pub fn kept_generators(&self) -> &[usize] {
        &self.kept
    }

    /// The complex `F`, in degrees `0..=cap`.
    pub fn complex(&self) -> &ChainComplex {
        &self.complex
    }

    pub fn cap(&self) -> usize {
        self.complex.hi() as usize
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.complex.ranks()
    }

    pub fn betti_table(&self) -> BettiTable {
        BettiTable::of_complex(&self.complex, self.options.degree_bound)
    }

    pub fn poincare(&self) -> SeriesTruncation {
        SeriesTruncation::new(self.ranks().into_iter().map(|r| r as u64).collect())
    }
}

/// Minimal graded free resolution of `m` through homological degree `cap`.
pub fn minimal_free_resolution(m: &FinitelyPresentedModule, cap: usize) -> Result<Resolution> {
    minimal_free_resolution_with(m, cap, ResolutionOptions::default())
}

pub fn minimal_free_resolution_with(
    m: &FinitelyPresentedModule,
    cap: usize,
    options: ResolutionOptions,
) -> Result<Resolution> {
    let ring = m.ring();
    let (min, kept) = m.minimize();
    let mut modules = alloc::vec![min.generator_degrees().to_vec()];
    let mut differentials: Vec<RingMatrix> = Vec::new();
    let mut finished = modules[0].is_empty();
    for i in 1..=cap {
        if finished {
            modules.push(Vec::new());
            differentials.push(RingMatrix::zero(ring, modules[i - 1].clone(), Vec::new()));
            continue;
        }
        let d = if i == 1 {
            bounded(min.relations().clone(), options.degree_bound)
        } else {
            let solver = ImageSolver::with_degree_bound(&differentials[i - 2], options.degree_bound);
            solver.syzygies()
        };
        finished = d.ncols() == 0;
        modules.push(d.col_degrees().to_vec());
        differentials.push(d);
    }
    let complex = ChainComplex::new(ring, 0, modules, differentials, !finished)?;
    Ok(Resolution {
        module: m.clone(),
        kept,
        complex,
        options,
    })
}

fn bounded(m: RingMatrix, bound: Option<i32>) -> RingMatrix {
    match bound {
        None => m,
        Some(b) => {
            let idx: Vec<usize> = (0..m.ncols()).filter(|&j| m.col_degrees()[j] <= b).collect();
            m.select_columns(&idx)
        }
    }
}

/// The first `cap + 1` Betti numbers of `m`.
pub fn poincare_truncation(m: &FinitelyPresentedModule, cap: usize) -> Result<SeriesTruncation> {
    Ok(minimal_free_resolution(m, cap)?.poincare())
}

/// `Ω^i(m)`, presented as the cokernel of `∂_{i+1}` of the minimal
/// resolution; `Ω^0` is a minimal presentation of `m`.
pub fn syzygy_module(m: &FinitelyPresentedModule, i: usize) -> Result<FinitelyPresentedModule> {
    if i == 0 {
        return Ok(m.minimize().0);
    }
    let res = minimal_free_resolution(m, i + 1)?;
    Ok(FinitelyPresentedModule::new(res.complex().differential(i as i32 + 1)))
}

/// Graded Betti numbers `β_{i,j}` within caps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i32), usize>,
    max_index: usize,
    max_degree: Option<i32>,
}

impl BettiTable {
    pub fn new(entries: BTreeMap<(usize, i32), usize>, max_index: usize, max_degree: Option<i32>) -> Self {
        let entries = entries
            .into_iter()
            .filter(|&((i, j), v)| v > 0 && i <= max_index && max_degree.is_none_or(|d| j <= d))
            .collect();
        BettiTable {
            entries,
            max_index,
            max_degree,
        }
    }

    /// Counts generator degrees of each term of a complex in degrees `0..=hi`.
    pub fn of_complex(c: &ChainComplex, max_degree: Option<i32>) -> Self {
        let mut entries = BTreeMap::new();
        let hi = c.hi().max(0) as usize;
        for i in 0..=hi {
            for &j in c.generator_degrees(i as i32) {
                *entries.entry((i, j)).or_insert(0) += 1;
            }
        }
        Self::new(entries, hi, max_degree)
    }

    /// `β_{i,j}`, or `None` outside the caps.
    pub fn get(&self, i: usize, j: i32) -> Option<usize> {
        if i > self.max_index || self.max_degree.is_some_and(|d| j > d) {
            return None;
        }
        Some(self.entries.get(&(i, j)).copied().unwrap_or(0))
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, i32), usize)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn max_index(&self) -> usize {
        self.max_index
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.max_degree
    }

    /// `Σ_j β_{i,j}` for each `i`.
    pub fn totals(&self) -> Vec<u64> {
        let mut out = alloc::vec![0u64; self.max_index + 1];
        for (&(i, _), &v) in &self.entries {
            out[i] += v as u64;
        }
        out
    }

    /// The table of a module whose resolution is this one shifted down by
    /// `k` homological steps: entry `(i, j)` becomes `(i - k, j)`.
    pub fn drop_front(&self, k: usize) -> BettiTable {
        let entries = self
            .entries
            .iter()
            .filter(|(&(i, _), _)| i >= k)
            .map(|(&(i, j), &v)| ((i - k, j), v))
            .collect();
        BettiTable::new(entries, self.max_index.saturating_sub(k), self.max_degree)
    }

    /// Restricts to homological indices `0..=max_index`.
    pub fn restrict(&self, max_index: usize) -> BettiTable {
        BettiTable::new(self.entries.clone(), max_index.min(self.max_index), self.max_degree)
    }
}

impl fmt::Display for BettiTable {
    /// Rows are indexed by `j - i`, columns by `i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols = self.max_index + 1;
        let rows: Vec<i32> = {
            let mut r: Vec<i32> = self.entries.keys().map(|&(i, j)| j - i as i32).collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        let totals = self.totals();
        let width = totals
            .iter()
            .map(|t| alloc::format!("{t}").len())
            .max()
            .unwrap_or(1);
        let label = rows
            .iter()
            .map(|r| alloc::format!("{r}").len())
            .max()
            .unwrap_or(1)
            .max(5);
        write!(f, "{:>label$} ", "")?;
        for i in 0..cols {
            write!(f, " {i:>width$}")?;
        }
        writeln!(f)?;
        write!(f, "{:>label$}:", "total")?;
        for t in &totals {
            write!(f, " {t:>width$}")?;
        }
        writeln!(f)?;
        for r in rows {
            write!(f, "{r:>label$}:")?;
            for i in 0..cols {
                match self.entries.get(&(i, r + i as i32)) {
                    Some(v) => write!(f, " {v:>width$}")?,
                    None => write!(f, " {:>width$}", ".")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Coefficients `c_0..c_D` of a power series truncated at `t^D`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeriesTruncation {
    coefficients: Vec<u64>,
}

impl SeriesTruncation {
    pub fn new(coefficients: Vec<u64>) -> Self {
        SeriesTruncation { coefficients }
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    pub fn cap(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn coefficient(&self, i: usize) -> u64 {
        self.coefficients.get(i).copied().unwrap_or(0)
    }

    pub fn truncate(&self, cap: usize) -> SeriesTruncation {
        let mut c = self.coefficients.clone();
        c.truncate(cap + 1);
        SeriesTruncation::new(c)
    }

    /// `(1 + t)^d`.
    pub fn binomial(d: usize, cap: usize) -> SeriesTruncation {
        let mut c = alloc::vec![0u64; cap + 1];
        let mut b = 1u64;
        for (k, slot) in c.iter_mut().enumerate() {
            if k > d {
                break;
            }
            *slot = b;
            b = b * (d - k) as u64 / (k + 1) as u64;
        }
        SeriesTruncation::new(c)
    }

    /// `self + t^k * other`, truncated at `self`'s cap.
    pub fn add_shifted(&self, other: &SeriesTruncation, k: usize) -> SeriesTruncation {
        let mut c = self.coefficients.clone();
        for (i, slot) in c.iter_mut().enumerate() {
            if i >= k {
                *slot += other.coefficient(i - k);
            }
        }
        SeriesTruncation::new(c)
    }

    /// Coefficientwise `self ≤ other` over the common range.
    pub fn is_dominated_by(&self, other: &SeriesTruncation) -> bool {
        self.coefficients
            .iter()
            .zip(&other.coefficients)
            .all(|(a, b)| a <= b)
    }

    /// Indices where `self < other`.
    pub fn strict_indices(&self, other: &SeriesTruncation) -> Vec<usize> {
        self.coefficients
            .iter()
            .zip(&other.coefficients)
            .enumerate()
            .filter(|(_, (a, b))| a < b)
            .map(|(i, _)| i)
            .collect()
    }
}

impl fmt::Display for SeriesTruncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coefficients.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

fn unit_ring_module(x: &ParameterSequence) -> FinitelyPresentedModule {
    FinitelyPresentedModule::free(x.ring(), alloc::vec![0])
}

/// Koszul homology of `x` on `R` in degrees `0..=r`.
fn koszul_homologies(k: &ChainComplex, r: usize) -> Result<Vec<Homology>> {
    (0..=r as i32).map(|n| k.homology_at(n)).collect()
}

/// A free resolution of `R/(x)` for an almost complete intersection: the
/// Koszul complex with a minimal resolution of `H_1(x; R)` attached by a
/// mapping cone. Terms are computed through degree `cap + 1` so the result
/// can be minimized without losing ranks up to `cap`.
pub fn aci_cone_resolution(x: &ParameterSequence, cap: usize) -> Result<ChainComplex> {
    let k = koszul_complex(x, &unit_ring_module(x))?;
    let hs = koszul_homologies(&k, x.len())?;
    if hs.iter().skip(2).any(|h| !h.module().is_zero()) {
        return Err(Error::Precondition(
            "grade is below the number of elements minus one; use the general cone assembly".into(),
        ));
    }
    if x.len() < 1 || hs[1].module().is_zero() {
        return Ok(k);
    }
    let f = minimal_free_resolution(hs[1].module(), cap.saturating_sub(1))?;
    Ok(attach_resolution(&k, &hs[1], &f)?.1)
}

/// A free resolution of `R/(x)` obtained from the Koszul complex by killing
/// its homology from the top down, one resolution per nonzero degree.
/// Terms are computed through degree `cap + 1`.
pub fn general_cone_resolution(x: &ParameterSequence, cap: usize) -> Result<ChainComplex> {
    let k = koszul_complex(x, &unit_ring_module(x))?;
    let hs = koszul_homologies(&k, x.len())?;
    let mut current = k;
    for s in (1..=x.len()).rev() {
        if hs[s].module().is_zero() || s > cap + 1 {
            continue;
        }
        let h = current.homology_at(s as i32)?;
        let f = minimal_free_resolution(h.module(), cap - s.min(cap))?;
        current = attach_resolution(&current, &h, &f)?.1;
    }
    Ok(current)
}

/// Injectivity of `H(k ⊗ γ)` for a lifting `γ : K(x) -> F` of the identity
/// of `R/(x)` into its minimal resolution, degree by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CecReport {
    /// `(n, rank of k ⊗ γ_n, rank of K_n)` for `n = 0..=min(r, cap)`.
    pub degrees: Vec<(usize, usize, usize)>,
}

impl CecReport {
    pub fn is_injective(&self) -> bool {
        self.degrees.iter().all(|&(_, rank, expected)| rank == expected)
    }
}

pub fn cec_injectivity_check(x: &ParameterSequence, cap: usize) -> Result<CecReport> {
    let ring = x.ring();
    let k = koszul_complex(x, &unit_ring_module(x))?;
    let top = x.len().min(cap);
    let res = minimal_free_resolution(&x.quotient_module(), top + 1)?;
    let f = res.complex();
    if f.rank(0) != 1 {
        return Err(Error::NotAResolution("R/(x) needs one generator".into()));
    }
    let mut gamma = alloc::vec![RingMatrix::identity(ring, alloc::vec![0])];
    for n in 1..=top as i32 {
        let rhs = gamma[(n - 1) as usize].mul(&k.differential(n))?;
        let solver = ImageSolver::new(&f.differential(n));
        gamma.push(solver.solve_matrix(&rhs).map_err(|_| {
            Error::NotAResolution(alloc::format!("cannot lift the Koszul complex in degree {n}"))
        })?);
    }
    let field = ring.ambient().field();
    let degrees = gamma
        .iter()
        .enumerate()
        .map(|(n, g)| {
            let rows: Vec<Vec<u32>> = g.constant_part();
            let dense = DenseMatrix::from_rows(field, &rows);
            let rank = if g.nrows() == 0 { 0 } else { dense.rank() };
            (n, rank, g.ncols())
        })
        .collect();
    Ok(CecReport { degrees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quotient::QuotientRing;

    #[test]
    fn residue_field_of_polynomial_ring() {
        let r = QuotientRing::parse(32003, &["a", "b", "c"], &[]).unwrap();
        let k = FinitelyPresentedModule::residue_field(&r);
        let res = minimal_free_resolution(&k, 4).unwrap();
        assert_eq!(res.ranks(), alloc::vec![1, 3, 3, 1, 0]);
        assert!(res.complex().is_minimal());
        assert!(!res.complex().is_truncated());
    }

    #[test]
    fn free_module_resolves_trivially() {
        let r = QuotientRing::parse(32003, &["a", "b"], &["a*b"]).unwrap();
        let m = FinitelyPresentedModule::free(&r, alloc::vec![0, 1, 1]);
        assert_eq!(poincare_truncation(&m, 3).unwrap().coefficients(), &[3, 0, 0, 0]);
    }

    #[test]
    fn hypersurface_resolution_is_periodic() {
        let r = QuotientRing::parse(32003, &["a", "b"], &["a*b"]).unwrap();
        let m = FinitelyPresentedModule::cyclic(&r, &[r.ambient().var(0)]).unwrap();
        let res = minimal_free_resolution(&m, 5).unwrap();
        assert_eq!(res.ranks(), alloc::vec![1, 1, 1, 1, 1, 1]);
        let t = res.betti_table();
        assert_eq!(t.get(1, 1), Some(1));
        assert_eq!(t.get(2, 2), Some(1));
        assert_eq!(t.get(9, 9), None);
    }

    #[test]
    fn series_helpers() {
        assert_eq!(SeriesTruncation::binomial(2, 4).coefficients(), &[1, 2, 1, 0, 0]);
        let a = SeriesTruncation::new(alloc::vec![1, 2, 3]);
        let b = SeriesTruncation::new(alloc::vec![1, 3, 3]);
        assert!(a.is_dominated_by(&b));
        assert_eq!(a.strict_indices(&b), alloc::vec![1]);
        assert_eq!(a.add_shifted(&b, 1).coefficients(), &[1, 3, 6]);
    }

    #[test]
    fn betti_display_is_staircase() {
        let r = QuotientRing::parse(32003, &["a", "b"], &[]).unwrap();
        let k = FinitelyPresentedModule::residue_field(&r);
        let t = minimal_free_resolution(&k, 2).unwrap().betti_table();
        let s = alloc::format!("{t}");
        assert!(s.contains("total: 1 2 1"), "{s}");
        assert!(s.contains("    0: 1 2 1"), "{s}");
    }
}
