//! Degreewise linear-algebra oracles over GF(p).
//!
//! Everything here works with dense vectors in a single internal degree and
//! never touches a Gröbner basis. Core objects are read only to extract their
//! coefficients.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use paramres_core::{ChainComplex, FinitelyPresentedModule, ParameterSequence, Polynomial, QuotientRing, RingMatrix};

/// A homogeneous polynomial as a list of `(exponents, coefficient)` pairs.
pub type Poly = Vec<(Vec<u32>, u64)>;

fn inv(a: u64, p: u64) -> u64 {
    let mut r = 1u64;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub fn poly_of(f: &Polynomial) -> Poly {
    f.terms()
        .map(|(m, c)| ((0..m.nvars()).map(|i| m.exponent(i)).collect(), c as u64))
        .collect()
}

fn poly_degree(f: &Poly) -> Option<u32> {
    f.first().map(|(e, _)| e.iter().sum())
}

/// All exponent vectors of total degree `d` in `n` variables.
pub fn monomials(n: usize, d: i64) -> Vec<Vec<u32>> {
    if d < 0 {
        return Vec::new();
    }
    let d = d as u32;
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

/// Incremental row echelon form mod `p`.
#[derive(Clone, Debug)]
pub struct Echelon {
    p: u64,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    pub fn new(p: u64) -> Self {
        Echelon { p, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        if v.iter().all(|&x| x == 0) {
            return false;
        }
        let p = self.p;
        for (pc, row) in &self.rows {
            let c = v[*pc];
            if c != 0 {
                let f = p - c;
                for (x, y) in v.iter_mut().zip(row) {
                    if *y != 0 {
                        *x = (*x + f * y) % p;
                    }
                }
            }
        }
        match v.iter().position(|&x| x != 0) {
            None => false,
            Some(pc) => {
                let s = inv(v[pc], p);
                for x in v.iter_mut() {
                    *x = *x * s % p;
                }
                for (_, row) in self.rows.iter_mut() {
                    let c = row[pc];
                    if c != 0 {
                        let f = p - c;
                        for (x, y) in row.iter_mut().zip(&v) {
                            if *y != 0 {
                                *x = (*x + f * y) % p;
                            }
                        }
                    }
                }
                self.rows.push((pc, v));
                true
            }
        }
    }
}

/// Degree-`d` slice of `S / I`: a basis of standard monomials and a way to
/// reduce any degree-`d` polynomial onto it.
#[derive(Debug)]
pub struct Slice {
    monomials: HashMap<Vec<u32>, usize>,
    standard: Vec<Option<usize>>,
    /// Fully reduced rows of `I_d` keyed by pivot; `None` for monomial ideals.
    ideal: Option<Echelon>,
    basis: Vec<Vec<u32>>,
    size: usize,
}

impl Slice {
    pub fn dimension(&self) -> usize {
        self.size
    }

    /// Coordinates of `f` (homogeneous of this degree) on the standard basis.
    pub fn reduce(&self, f: &[(Vec<u32>, u64)], p: u64) -> Vec<u64> {
        let mut v = vec![0u64; self.monomials.len()];
        for (e, c) in f {
            let k = self.monomials[e];
            v[k] = (v[k] + c) % p;
        }
        if let Some(ech) = &self.ideal {
            for (pc, row) in &ech.rows {
                let c = v[*pc];
                if c != 0 {
                    let f = p - c;
                    for (x, y) in v.iter_mut().zip(row) {
                        if *y != 0 {
                            *x = (*x + f * y) % p;
                        }
                    }
                }
            }
        }
        let mut out = vec![0u64; self.size];
        for (k, x) in v.into_iter().enumerate() {
            if let Some(i) = self.standard[k] {
                out[i] = x;
            }
        }
        out
    }
}

/// `S / I` seen through its generators only.
#[derive(Debug)]
pub struct OracleRing {
    pub p: u64,
    pub nvars: usize,
    pub ideal: Vec<Poly>,
    slices: RefCell<HashMap<i64, Rc<Slice>>>,
}

impl OracleRing {
    pub fn new(p: u64, nvars: usize, ideal: Vec<Poly>) -> Self {
        OracleRing {
            p,
            nvars,
            ideal,
            slices: RefCell::new(HashMap::new()),
        }
    }

    pub fn of(ring: &QuotientRing) -> Self {
        OracleRing::new(
            ring.ambient().characteristic() as u64,
            ring.nvars(),
            ring.input_generators().iter().map(poly_of).filter(|f| !f.is_empty()).collect(),
        )
    }

    pub fn slice(&self, d: i64) -> Rc<Slice> {
        if let Some(s) = self.slices.borrow().get(&d) {
            return s.clone();
        }
        let s = Rc::new(self.build_slice(d));
        self.slices.borrow_mut().insert(d, s.clone());
        s
    }

    fn build_slice(&self, d: i64) -> Slice {
        let mons = monomials(self.nvars, d);
        let index: HashMap<Vec<u32>, usize> = mons.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
        let monomial_ideal = self.ideal.iter().all(|g| g.len() == 1);
        let (keep, ideal): (Vec<bool>, Option<Echelon>) = if monomial_ideal {
            let keep = mons
                .iter()
                .map(|m| !self.ideal.iter().any(|g| g[0].0.iter().zip(m).all(|(a, b)| a <= b)))
                .collect();
            (keep, None)
        } else {
            let mut ech = Echelon::new(self.p);
            for g in &self.ideal {
                let dg = poly_degree(g).unwrap() as i64;
                for m in monomials(self.nvars, d - dg) {
                    let mut v = vec![0u64; mons.len()];
                    for (e, c) in g {
                        let key: Vec<u32> = e.iter().zip(&m).map(|(a, b)| a + b).collect();
                        let k = index[&key];
                        v[k] = (v[k] + c) % self.p;
                    }
                    ech.insert(v);
                }
            }
            let mut keep = vec![true; mons.len()];
            for (pc, _) in &ech.rows {
                keep[*pc] = false;
            }
            (keep, Some(ech))
        };
        let mut standard = Vec::with_capacity(mons.len());
        let mut basis = Vec::new();
        let mut size = 0;
        for (k, m) in keep.into_iter().zip(mons) {
            if k {
                standard.push(Some(size));
                basis.push(m);
                size += 1;
            } else {
                standard.push(None);
            }
        }
        Slice {
            monomials: index,
            standard,
            ideal,
            basis,
            size,
        }
    }

    /// Standard monomials of degree `d`; multiplying by these spans the same
    /// space as multiplying by all monomials.
    pub fn multipliers(&self, d: i64) -> Vec<Vec<u32>> {
        if d < 0 {
            Vec::new()
        } else {
            self.slice(d).basis.clone()
        }
    }

    /// `dim_k (S/I)_d`.
    pub fn hilbert(&self, d: i64) -> usize {
        if d < 0 {
            0
        } else {
            self.slice(d).dimension()
        }
    }
}

/// A matrix of polynomials, `entries[i][j]`, with graded source and target.
#[derive(Clone, Debug)]
pub struct OracleMatrix {
    pub row_degrees: Vec<i32>,
    pub col_degrees: Vec<i32>,
    pub entries: Vec<Vec<Poly>>,
}

impl OracleMatrix {
    pub fn zero(row_degrees: Vec<i32>, col_degrees: Vec<i32>) -> Self {
        let entries = vec![vec![Vec::new(); col_degrees.len()]; row_degrees.len()];
        OracleMatrix { row_degrees, col_degrees, entries }
    }

    pub fn of(m: &RingMatrix) -> Self {
        let mut out = OracleMatrix::zero(m.row_degrees().to_vec(), m.col_degrees().to_vec());
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                out.entries[i][j] = poly_of(&m.entry(i, j));
            }
        }
        out
    }

    pub fn ncols(&self) -> usize {
        self.col_degrees.len()
    }
}

/// `coker(relations)` over `S / I`.
#[derive(Clone, Debug)]
pub struct OracleModule {
    pub relations: OracleMatrix,
}

struct Basis {
    offsets: Vec<usize>,
    slices: Vec<Option<Rc<Slice>>>,
    size: usize,
}

impl OracleModule {
    pub fn free(degrees: Vec<i32>) -> Self {
        OracleModule { relations: OracleMatrix::zero(degrees, Vec::new()) }
    }

    pub fn of(m: &FinitelyPresentedModule) -> Self {
        OracleModule { relations: OracleMatrix::of(m.relations()) }
    }

    pub fn degrees(&self) -> &[i32] {
        &self.relations.row_degrees
    }

    fn basis(&self, ring: &OracleRing, d: i64) -> Basis {
        let mut offsets = Vec::new();
        let mut slices = Vec::new();
        let mut size = 0;
        for &e in self.degrees() {
            offsets.push(size);
            let k = d - e as i64;
            if k < 0 {
                slices.push(None);
            } else {
                let s = ring.slice(k);
                size += s.dimension();
                slices.push(Some(s));
            }
        }
        Basis { offsets, slices, size }
    }

    /// Rows spanning the degree-`d` part of the image of the relations in `F ⊗ S/I`.
    fn submodule(&self, ring: &OracleRing, d: i64, basis: &Basis) -> Echelon {
        let mut ech = Echelon::new(ring.p);
        for c in 0..self.relations.ncols() {
            let col: Vec<Poly> = self.relations.entries.iter().map(|r| r[c].clone()).collect();
            for m in ring.multipliers(d - self.relations.col_degrees[c] as i64) {
                ech.insert(embed(ring, &col, &m, basis));
            }
        }
        ech
    }

    /// `dim_k M_d`.
    pub fn dimension(&self, ring: &OracleRing, d: i64) -> usize {
        let b = self.basis(ring, d);
        b.size - self.submodule(ring, d, &b).rank()
    }

    /// `Σ dim_k M_d` for `d ≤ hi`.
    pub fn length_through(&self, ring: &OracleRing, hi: i64) -> usize {
        let lo = self.degrees().iter().copied().min().unwrap_or(0) as i64;
        (lo..=hi).map(|d| self.dimension(ring, d)).sum()
    }

    /// Dimension in degree `d` of the submodule of `M` generated by `gens`.
    pub fn image_dimension(&self, ring: &OracleRing, gens: &OracleMatrix, d: i64) -> usize {
        let b = self.basis(ring, d);
        let n = self.submodule(ring, d, &b);
        let mut all = n.clone();
        for c in 0..gens.ncols() {
            let col: Vec<Poly> = gens.entries.iter().map(|r| r[c].clone()).collect();
            for m in ring.multipliers(d - gens.col_degrees[c] as i64) {
                all.insert(embed(ring, &col, &m, &b));
            }
        }
        all.rank() - n.rank()
    }
}

/// `m · col` as a dense vector in the degree of `basis`.
fn embed(ring: &OracleRing, col: &[Poly], m: &[u32], basis: &Basis) -> Vec<u64> {
    let mut v = vec![0u64; basis.size];
    for (i, f) in col.iter().enumerate() {
        if f.is_empty() {
            continue;
        }
        let Some(slice) = &basis.slices[i] else { continue };
        let shifted: Poly = f
            .iter()
            .map(|(e, c)| (e.iter().zip(m).map(|(a, b)| a + b).collect(), *c))
            .collect();
        for (k, x) in slice.reduce(&shifted, ring.p).into_iter().enumerate() {
            let t = &mut v[basis.offsets[i] + k];
            *t = (*t + x) % ring.p;
        }
    }
    v
}

/// Map `A -> B` of presented modules given on generators.
fn map_ranks(
    ring: &OracleRing,
    source: &OracleModule,
    map: &OracleMatrix,
    target: &OracleModule,
    d: i64,
) -> (usize, usize, usize) {
    let sb = source.basis(ring, d);
    let tb = target.basis(ring, d);
    let nt = target.submodule(ring, d, &tb);
    let mut all = nt.clone();
    for (j, &e) in source.degrees().iter().enumerate() {
        let col: Vec<Poly> = map.entries.iter().map(|r| r[j].clone()).collect();
        for m in ring.multipliers(d - e as i64) {
            all.insert(embed(ring, &col, &m, &tb));
        }
    }
    (sb.size, all.rank(), nt.rank())
}

/// `dim ker(M_d -> N_d)` for a map of presented modules.
pub fn kernel_dimension(ring: &OracleRing, source: &OracleModule, map: &OracleMatrix, target: &OracleModule, d: i64) -> usize {
    let (a, joint, nt) = map_ranks(ring, source, map, target, d);
    let sb = source.basis(ring, d);
    let ns = source.submodule(ring, d, &sb).rank();
    a - (joint - nt) - ns
}

/// `dim coker(M_d -> N_d)`.
pub fn cokernel_dimension(ring: &OracleRing, source: &OracleModule, map: &OracleMatrix, target: &OracleModule, d: i64) -> usize {
    let (_, joint, _) = map_ranks(ring, source, map, target, d);
    target.basis(ring, d).size - joint
}

/// A chain complex of presented modules, `modules[k]` sitting in position `lo + k`.
#[derive(Clone, Debug)]
pub struct OracleComplex {
    pub lo: i32,
    pub modules: Vec<OracleModule>,
    /// `maps[k]`: `modules[k + 1] -> modules[k]`.
    pub maps: Vec<OracleMatrix>,
}

impl OracleComplex {
    pub fn of(c: &ChainComplex) -> Self {
        let mut modules = Vec::new();
        let mut maps = Vec::new();
        for n in c.lo()..=c.hi() {
            let m = if c.has_relations() {
                OracleModule { relations: OracleMatrix::of(&c.relations(n)) }
            } else {
                OracleModule::free(c.generator_degrees(n).to_vec())
            };
            modules.push(m);
            if n > c.lo() {
                maps.push(OracleMatrix::of(&c.differential(n)));
            }
        }
        OracleComplex { lo: c.lo(), modules, maps }
    }

    fn module(&self, n: i32) -> OracleModule {
        let k = n - self.lo;
        if k < 0 || k as usize >= self.modules.len() {
            OracleModule::free(Vec::new())
        } else {
            self.modules[k as usize].clone()
        }
    }

    fn map(&self, n: i32) -> OracleMatrix {
        let src = self.module(n);
        let tgt = self.module(n - 1);
        let k = n - self.lo - 1;
        if k < 0 || k as usize >= self.maps.len() {
            OracleMatrix::zero(tgt.degrees().to_vec(), src.degrees().to_vec())
        } else {
            self.maps[k as usize].clone()
        }
    }

    /// `dim_k H_n(C)_d`.
    pub fn homology_dimension(&self, ring: &OracleRing, n: i32, d: i64) -> usize {
        let here = self.module(n);
        let below = self.module(n - 1);
        let above = self.module(n + 1);
        let z = kernel_dimension(ring, &here, &self.map(n), &below, d);
        let (_, joint, nt) = map_ranks(ring, &above, &self.map(n + 1), &here, d);
        z - (joint - nt)
    }

    /// Whether `∂_n ∂_{n+1}` vanishes in the target module in degree `d`.
    pub fn composite_vanishes(&self, ring: &OracleRing, n: i32, d: i64) -> bool {
        let above = self.module(n + 1);
        let d1 = self.map(n + 1);
        let d0 = self.map(n);
        let mut comp = OracleMatrix::zero(d0.row_degrees.clone(), d1.col_degrees.clone());
        for i in 0..d0.row_degrees.len() {
            for j in 0..d1.ncols() {
                let mut acc: HashMap<Vec<u32>, u64> = HashMap::new();
                for k in 0..d1.row_degrees.len() {
                    for (ea, ca) in &d0.entries[i][k] {
                        for (eb, cb) in &d1.entries[k][j] {
                            let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                            let t = acc.entry(e).or_insert(0);
                            *t = (*t + ca * cb) % ring.p;
                        }
                    }
                }
                comp.entries[i][j] = acc.into_iter().filter(|(_, c)| *c != 0).collect();
            }
        }
        let (_, joint, nt) = map_ranks(ring, &above, &comp, &self.module(n - 1), d);
        joint == nt
    }

    /// `Σ_{d ≤ hi} dim_k H_n(C)_d`.
    pub fn homology_length_through(&self, ring: &OracleRing, n: i32, hi: i64) -> usize {
        let lo = self.module(n).degrees().iter().copied().min();
        match lo {
            None => 0,
            Some(lo) => (lo as i64..=hi).map(|d| self.homology_dimension(ring, n, d)).sum(),
        }
    }
}

/// Koszul complex `K(x; M)` built from scratch: position `p` is
/// `⊕_{|T| = p} M(-deg x_T)`.
pub fn koszul(ring: &OracleRing, x: &[Poly], m: &OracleModule) -> OracleComplex {
    let r = x.len();
    let deg: Vec<i32> = x.iter().map(|f| poly_degree(f).unwrap() as i32).collect();
    let subsets: Vec<Vec<Vec<usize>>> = (0..=r)
        .map(|p| (0u32..1 << r).filter(|s| s.count_ones() as usize == p).map(|s| (0..r).filter(|i| s >> i & 1 == 1).collect()).collect())
        .collect();
    let g = m.degrees().len();
    let rels = &m.relations;
    let mut modules = Vec::new();
    for p in 0..=r {
        let mut rows = Vec::new();
        let mut cols = Vec::new();
        for t in &subsets[p] {
            let shift: i32 = t.iter().map(|&i| deg[i]).sum();
            rows.extend(m.degrees().iter().map(|e| e + shift));
            cols.extend(rels.col_degrees.iter().map(|e| e + shift));
        }
        let mut mat = OracleMatrix::zero(rows, cols);
        for (b, _) in subsets[p].iter().enumerate() {
            for i in 0..g {
                for j in 0..rels.ncols() {
                    mat.entries[b * g + i][b * rels.ncols() + j] = rels.entries[i][j].clone();
                }
            }
        }
        modules.push(OracleModule { relations: mat });
    }
    let mut maps = Vec::new();
    for p in 1..=r {
        let mut mat = OracleMatrix::zero(modules[p - 1].degrees().to_vec(), modules[p].degrees().to_vec());
        for (b, t) in subsets[p].iter().enumerate() {
            for (k, &i) in t.iter().enumerate() {
                let rest: Vec<usize> = t.iter().copied().filter(|&j| j != i).collect();
                let a = subsets[p - 1].iter().position(|s| *s == rest).unwrap();
                let sign = if k % 2 == 0 { 1 } else { ring.p - 1 };
                let f: Poly = x[i].iter().map(|(e, c)| (e.clone(), c * sign % ring.p)).collect();
                for q in 0..g {
                    mat.entries[a * g + q][b * g + q] = f.clone();
                }
            }
        }
        maps.push(mat);
    }
    OracleComplex { lo: 0, modules, maps }
}

pub fn sequence_of(x: &ParameterSequence) -> Vec<Poly> {
    x.elements().iter().map(poly_of).collect()
}

/// `ℓ(H_p(x; M))`, summing internal degrees through `hi`.
pub fn koszul_homology_length(ring: &QuotientRing, x: &ParameterSequence, m: &FinitelyPresentedModule, p: i32, hi: i64) -> usize {
    let or = OracleRing::of(ring);
    let k = koszul(&or, &sequence_of(x), &OracleModule::of(m));
    k.homology_length_through(&or, p, hi)
}

/// Same as [`koszul_homology_length`], also reporting the top two degrees' contributions.
pub fn koszul_homology_profile(ring: &QuotientRing, x: &ParameterSequence, m: &FinitelyPresentedModule, p: i32, hi: i64) -> Vec<usize> {
    let or = OracleRing::of(ring);
    let k = koszul(&or, &sequence_of(x), &OracleModule::of(m));
    let lo = k.module(p).degrees().iter().copied().min().unwrap_or(0) as i64;
    (lo..=hi).map(|d| k.homology_dimension(&or, p, d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials(3, 2).len(), 6);
        assert_eq!(monomials(4, 3).len(), 20);
        assert!(monomials(2, -1).is_empty());
    }

    #[test]
    fn echelon_rank() {
        let mut e = Echelon::new(7);
        assert!(e.insert(vec![1, 2, 3]));
        assert!(!e.insert(vec![2, 4, 6]));
        assert!(e.insert(vec![0, 1, 0]));
        assert!(!e.insert(vec![3, 1, 2]));
        assert!(e.insert(vec![3, 0, 3]));
        assert_eq!(e.rank(), 3);
    }

    #[test]
    fn hilbert_of_coordinate_cross() {
        let r = OracleRing::new(101, 2, vec![vec![(vec![1, 1], 1)]]);
        assert_eq!((0..5).map(|d| r.hilbert(d)).collect::<Vec<_>>(), vec![1, 2, 2, 2, 2]);
    }

    #[test]
    fn hilbert_of_binomial_hypersurface() {
        let r = OracleRing::new(101, 2, vec![vec![(vec![2, 0], 1), (vec![0, 2], 100)]]);
        assert_eq!((0..5).map(|d| r.hilbert(d)).collect::<Vec<_>>(), vec![1, 2, 2, 2, 2]);
        let m = OracleModule::free(vec![0, 1]);
        assert_eq!(m.dimension(&r, 3), 4);
    }

    #[test]
    fn koszul_on_variables_is_exact() {
        let r = OracleRing::new(101, 2, Vec::new());
        let x = vec![vec![(vec![1, 0], 1)], vec![(vec![0, 1], 1)]];
        let k = koszul(&r, &x, &OracleModule::free(vec![0]));
        assert_eq!(k.homology_length_through(&r, 0, 6), 1);
        assert_eq!(k.homology_length_through(&r, 1, 6), 0);
        assert_eq!(k.homology_length_through(&r, 2, 6), 0);
        assert!(k.composite_vanishes(&r, 1, 3));
    }
}
