//! Depth, grade, systems of parameters, standardness and lengths of local
//! cohomology, all computed through Koszul homology.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::koszul::{cohomology_comparison, koszul_complex, ComparisonSummary, ParameterSequence};
use crate::module::{FinitelyPresentedModule, Length};
use crate::poly::Polynomial;
use crate::quotient::QuotientRing;

/// Default bound on powers examined by the semi-decisions below.
pub const DEFAULT_POWER_BOUND: i64 = 4;

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Lengths `ℓ(H_p(x; M))` for `p = 0..=r`.
pub fn koszul_lengths(x: &ParameterSequence, m: &FinitelyPresentedModule) -> Result<Vec<Length>> {
    let k = koszul_complex(x, m)?;
    (0..=x.len() as i32)
        .map(|p| Ok(k.homology_at(p)?.length()))
        .collect()
}

/// `ℓ(H_p(x_1..x_r; M))` for every prefix: entry `[r - 1][p]`, `p = 0..=r`.
pub fn prefix_lengths(x: &ParameterSequence, m: &FinitelyPresentedModule) -> Result<Vec<Vec<Length>>> {
    (1..=x.len()).map(|r| koszul_lengths(&x.prefix(r), m)).collect()
}

/// Highest `i` with `H_i(x; M) ≠ 0`.
fn koszul_sup(x: &ParameterSequence, m: &FinitelyPresentedModule) -> Result<Option<usize>> {
    let k = koszul_complex(x, m)?;
    for p in (0..=x.len()).rev() {
        if !k.homology_at(p as i32)?.module().is_zero() {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// `depth M = v - sup{i : H_i(vars; M) ≠ 0}` with `v` the number of
/// variables.
pub fn depth(m: &FinitelyPresentedModule) -> Result<usize> {
    let ring = m.ring();
    let vars = ParameterSequence::new(ring, ring.ambient().variables())?;
    match koszul_sup(&vars, m)? {
        None => Err(Error::ZeroModule),
        Some(s) => Ok(vars.len() - s),
    }
}

/// Grade of the ideal generated by `x` on `R`.
pub fn grade(x: &ParameterSequence) -> Result<usize> {
    let r = FinitelyPresentedModule::free(x.ring(), alloc::vec![0]);
    if x.quotient_module().is_zero() {
        return Err(Error::UnitIdeal);
    }
    match koszul_sup(x, &r)? {
        None => Err(Error::UnitIdeal),
        Some(s) => Ok(x.len() - s),
    }
}

/// `true` when `x` has `dim R` elements and `R/(x)` has finite length.
pub fn is_sop(x: &ParameterSequence) -> bool {
    x.len() as i32 == x.ring().dimension() && x.quotient_module().length().is_finite()
}

/// `true` when `x` is a system of parameters for the module `m`.
pub fn is_sop_for(x: &ParameterSequence, m: &FinitelyPresentedModule) -> Result<bool> {
    let q = m.quotient_by(x.elements())?;
    Ok(x.len() as i32 == m.krull_dimension() && q.length().is_finite())
}

/// Outcome of a bounded search for finite local cohomology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FlcVerdict {
    /// Finite local cohomology, with the lengths `ℓ(H^i_m(M))`, `i < dim M`,
    /// when they were determined.
    Flc(Option<Vec<u64>>),
    /// The power bound was reached without a consistent stable pattern.
    Undecided,
}

impl FlcVerdict {
    pub fn is_flc(&self) -> bool {
        matches!(self, FlcVerdict::Flc(_))
    }
}

/// Checks finite local cohomology of `m` with reference system of
/// parameters `x`: Koszul homology lengths of `x^n` must stabilise for
/// `n ≤ nmax` and fit one consistent system of length identities.
pub fn flc_check(m: &FinitelyPresentedModule, x: &ParameterSequence, nmax: i64) -> Result<FlcVerdict> {
    let d = m.krull_dimension();
    if d <= 0 {
        return Ok(FlcVerdict::Flc(Some(Vec::new())));
    }
    if !is_sop_for(x, m)? {
        return Err(Error::Precondition("reference sequence is not a system of parameters".into()));
    }
    let g = depth(m)? as i32;
    if g == d {
        return Ok(FlcVerdict::Flc(Some(alloc::vec![0; d as usize])));
    }
    if d == 1 {
        // only H^0 lies below the dimension, and it always has finite length
        let lc = local_cohomology_lengths(m, &x.power(nmax.max(1))?).ok();
        return Ok(FlcVerdict::Flc(lc));
    }
    if nmax < 2 {
        return Ok(FlcVerdict::Undecided);
    }
    let last = koszul_lengths(&x.power(nmax)?, m)?;
    let before = koszul_lengths(&x.power(nmax - 1)?, m)?;
    if last[1..] != before[1..] {
        return Ok(FlcVerdict::Undecided);
    }
    let y = x.power(nmax)?;
    match local_cohomology_lengths(m, &y) {
        Ok(lc) => Ok(FlcVerdict::Flc(Some(lc))),
        Err(Error::InconsistentLengths(_)) => Ok(FlcVerdict::Undecided),
        Err(e) => Err(e),
    }
}

/// A prefix length and homological degree where squaring changed a length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StandardnessWitness {
    pub r: usize,
    pub p: usize,
    pub length: Length,
    pub squared_length: Length,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Standardness {
    pub standard: bool,
    pub witness: Option<StandardnessWitness>,
}

/// Standardness by the squares criterion: `ℓ(H_p(x_1..x_r; M))` must not
/// change when every element is squared, for `1 ≤ p ≤ r ≤ d`. Requires
/// finite local cohomology.
pub fn is_standard_sop(x: &ParameterSequence, m: &FinitelyPresentedModule) -> Result<Standardness> {
    if !is_sop_for(x, m)? {
        return Err(Error::Precondition("not a system of parameters".into()));
    }
    if !flc_check(m, x, DEFAULT_POWER_BOUND)?.is_flc() {
        return Err(Error::Precondition(
            "finite local cohomology not established; the squares criterion does not apply".into(),
        ));
    }
    standardness_by_squares(x, m)
}

/// The squares criterion without the finite local cohomology guard.
pub fn standardness_by_squares(x: &ParameterSequence, m: &FinitelyPresentedModule) -> Result<Standardness> {
    let plain = prefix_lengths(x, m)?;
    let squared = prefix_lengths(&x.power(2)?, m)?;
    for r in 1..=x.len() {
        for p in 1..=r {
            let a = plain[r - 1][p];
            let b = squared[r - 1][p];
            if a != b || !a.is_finite() {
                return Ok(Standardness {
                    standard: false,
                    witness: Some(StandardnessWitness {
                        r,
                        p,
                        length: a,
                        squared_length: b,
                    }),
                });
            }
        }
    }
    Ok(Standardness {
        standard: true,
        witness: None,
    })
}

/// Solves `ℓ(H_p(x; M)) = Σ_i C(d, i + p) ℓ(H^i_m(M))` for the lengths
/// `ℓ(H^i_m(M))`, `i = 0..d-1`, then checks the same identities for every
/// prefix `x_1..x_r`.
pub fn local_cohomology_lengths(m: &FinitelyPresentedModule, x: &ParameterSequence) -> Result<Vec<u64>> {
    let table = prefix_lengths(x, m)?;
    solve_length_system(&table)
}

/// The triangular solve behind [`local_cohomology_lengths`], on a table of
/// prefix lengths `[r - 1][p]`.
pub fn solve_length_system(table: &[Vec<Length>]) -> Result<Vec<u64>> {
    let d = table.len();
    if d == 0 {
        return Ok(Vec::new());
    }
    let full = &table[d - 1];
    let mut h: Vec<u64> = Vec::with_capacity(d);
    for p in (1..=d).rev() {
        let lp = full[p].finite().ok_or_else(|| {
            Error::InconsistentLengths(alloc::format!("H_{p} of the full sequence has infinite length"))
        })?;
        let known: u64 = (0..h.len()).map(|i| binomial(d, i + p) * h[i]).sum();
        if known > lp {
            return Err(Error::InconsistentLengths(alloc::format!(
                "negative solution for local cohomology in degree {}",
                d - p
            )));
        }
        h.push(lp - known);
    }
    for r in 1..=d {
        for p in 1..=r {
            let expected: u64 = (0..=r - p).map(|i| binomial(r, i + p) * h[i]).sum();
            if table[r - 1][p] != Length::Finite(expected) {
                return Err(Error::InconsistentLengths(alloc::format!(
                    "prefix of length {r}, degree {p}: measured {}, predicted {expected}",
                    table[r - 1][p]
                )));
            }
        }
    }
    Ok(h)
}

/// Lengths `ℓ(H_p(x^n; M))` over a window of powers, and the comparison
/// maps on cohomology in degree `depth M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityReport {
    /// `lengths[n - 1][p - 1]` for `n = 1..=nmax`, `p = 1..=pmax`.
    pub lengths: Vec<Vec<Length>>,
    /// Summaries of `H^g(x^n) -> H^g(x^{n+1})` for `n = 1..nmax`.
    pub comparisons: Vec<ComparisonSummary>,
    pub depth: usize,
    /// Number of parameters; when `depth` equals it `H^g_m` has infinite length.
    pub parameters: usize,
}

impl StabilityReport {
    pub fn lengths_constant(&self) -> bool {
        self.lengths.windows(2).all(|w| w[0] == w[1])
    }

    pub fn lengths_nondecreasing(&self) -> bool {
        self.lengths
            .windows(2)
            .all(|w| w[0].iter().zip(&w[1]).all(|(a, b)| a <= b))
    }

    pub fn comparisons_bijective(&self) -> bool {
        self.comparisons.iter().all(|c| c.is_bijective() == Some(true))
    }

    pub fn comparisons_injective(&self) -> bool {
        self.comparisons.iter().all(|c| c.is_injective() == Some(true))
    }

    /// Bijective below the top degree, injective at it.
    pub fn comparisons_hold(&self) -> bool {
        if self.depth < self.parameters {
            self.comparisons_bijective()
        } else {
            self.comparisons_injective()
        }
    }
}

pub fn length_stability_check(
    x: &ParameterSequence,
    m: &FinitelyPresentedModule,
    pmax: usize,
    nmax: i64,
) -> Result<StabilityReport> {
    let pmax = pmax.min(x.len());
    let mut lengths = Vec::new();
    for n in 1..=nmax {
        let l = koszul_lengths(&x.power(n)?, m)?;
        lengths.push(l[1..=pmax].to_vec());
    }
    let g = depth(m)?;
    let mut comparisons = Vec::new();
    if g <= x.len() {
        for n in 1..nmax {
            comparisons.push(cohomology_comparison(x, m, n, g)?);
        }
    }
    Ok(StabilityReport {
        lengths,
        comparisons,
        depth: g,
        parameters: x.len(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardPower {
    Found(i64),
    NotFound,
    /// Finite local cohomology could not be established.
    NotApplicable,
}

/// Least `n ≤ nmax` with `x^n` standard for `m`.
pub fn find_standard_power(x: &ParameterSequence, m: &FinitelyPresentedModule, nmax: i64) -> Result<StandardPower> {
    if !flc_check(m, x, nmax.max(DEFAULT_POWER_BOUND))?.is_flc() {
        return Ok(StandardPower::NotApplicable);
    }
    for n in 1..=nmax {
        if standardness_by_squares(&x.power(n)?, m)?.standard {
            return Ok(StandardPower::Found(n));
        }
    }
    Ok(StandardPower::NotFound)
}

/// Dimension, depth, defect and local cohomology of a ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub dim: i32,
    pub depth: usize,
    pub cmd: usize,
    pub flc: FlcVerdict,
    /// `ℓ(H^i_m(R))` for `i < dim`, when known.
    pub lc_lengths: Option<Vec<u64>>,
}

/// Invariants of `R` using `x` as the reference system of parameters.
pub fn invariant_report(ring: &alloc::sync::Arc<QuotientRing>, x: &ParameterSequence, nmax: i64) -> Result<InvariantReport> {
    let r = FinitelyPresentedModule::free(ring, alloc::vec![0]);
    let dim = ring.dimension();
    let depth = depth(&r)?;
    let flc = flc_check(&r, x, nmax)?;
    let lc_lengths = match &flc {
        FlcVerdict::Flc(l) => l.clone(),
        FlcVerdict::Undecided => None,
    };
    Ok(InvariantReport {
        dim,
        depth,
        cmd: (dim.max(0) as usize).saturating_sub(depth),
        flc,
        lc_lengths,
    })
}

/// `grade` on an explicit list of generators.
pub fn grade_of(ring: &alloc::sync::Arc<QuotientRing>, gens: &[Polynomial]) -> Result<usize> {
    grade(&ParameterSequence::new(ring, gens.to_vec())?)
}
