mod common;

use common::{corpus, P};
use paramres_core::resolutions::{aci_cone_resolution, general_cone_resolution};
use paramres_core::{
    koszul_complex, koszul_homology, minimal_free_resolution, syzygies, ChainComplex, FinitelyPresentedModule, Length,
    MonomialOrder, Polynomial, PolynomialRing, QuotientRing, RingMatrix,
};
use paramres_testkit::{koszul_homology_profile, OracleComplex, OracleMatrix, OracleModule, OracleRing};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_form(case_ring: &std::sync::Arc<QuotientRing>, d: u32, rng: &mut ChaCha8Rng) -> Polynomial {
    let r = case_ring.ambient();
    let mut f = r.zero();
    for m in paramres_core::monomial::monomials_of_degree(r.nvars(), d) {
        if rng.gen_bool(0.4) {
            f = f.add(&r.monomial(rng.gen_range(-9..10), m)).unwrap();
        }
    }
    f
}

/// Sum of degreewise homology dimensions, insisting the last two degrees vanish.
fn settled(profile: &[usize]) -> usize {
    let n = profile.len();
    assert!(n >= 2 && profile[n - 1] == 0 && profile[n - 2] == 0, "profile not settled: {profile:?}");
    profile.iter().sum()
}

fn exact_through(c: &ChainComplex, top: i32, hi: i64) {
    let or = OracleRing::of(c.ring());
    let oc = OracleComplex::of(c);
    for n in 1..top {
        for d in 0..=hi {
            assert_eq!(oc.homology_dimension(&or, n, d), 0, "H_{n} in degree {d}");
        }
    }
}

fn squares_vanish(c: &ChainComplex, hi: i64) {
    let or = OracleRing::of(c.ring());
    let oc = OracleComplex::of(c);
    for n in c.lo() + 1..c.hi() {
        for d in 0..=hi {
            assert!(oc.composite_vanishes(&or, n, d), "∂∂ at {n}, degree {d}");
        }
    }
}

#[test]
fn hilbert_functions_match() {
    for case in corpus() {
        let or = OracleRing::of(&case.ring);
        for d in 0..9 {
            assert_eq!(case.ring.hilbert_function(d) as usize, or.hilbert(d as i64), "{} degree {d}", case.name);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let s = PolynomialRing::new(P, &["a", "b", "c"], MonomialOrder::DegRevLex).unwrap();
    for _ in 0..12 {
        let q0 = QuotientRing::polynomial_ring(&s);
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..4))
            .map(|_| random_form(&q0, rng.gen_range(1..4), &mut rng))
            .filter(|f| !f.is_zero())
            .collect();
        let q = QuotientRing::new(&s, &gens).unwrap();
        let or = OracleRing::of(&q);
        for d in 0..7 {
            assert_eq!(q.hilbert_function(d) as usize, or.hilbert(d as i64));
        }
    }
}

#[test]
fn quotient_lengths_match() {
    for case in corpus() {
        let or = OracleRing::of(&case.ring);
        for n in 1..=3 {
            let m = case.sop.power(n).unwrap().quotient_module();
            let Length::Finite(l) = m.length() else { panic!("{} R/x^{n} infinite", case.name) };
            let hi = 3 * n as i64 * case.sop.len() as i64 + 4;
            let om = OracleModule::of(&m);
            assert_eq!(om.dimension(&or, hi), 0);
            assert_eq!(om.length_through(&or, hi) as u64, l, "{} n = {n}", case.name);
        }
    }
}

#[test]
fn syzygies_match_kernels() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for case in corpus() {
        let or = OracleRing::of(&case.ring);
        for _ in 0..4 {
            let k = rng.gen_range(1..4);
            let entries: Vec<Polynomial> = (0..k).map(|_| random_form(&case.ring, rng.gen_range(1..3), &mut rng)).collect();
            let entries: Vec<Polynomial> = entries.into_iter().filter(|f| !case.ring.is_zero(f)).collect();
            if entries.is_empty() {
                continue;
            }
            let a = RingMatrix::row(&case.ring, &entries).unwrap();
            let s = syzygies(&a);
            assert!(a.mul(&s).unwrap().is_zero());
            let src = OracleModule::free(a.col_degrees().to_vec());
            let tgt = OracleModule::free(a.row_degrees().to_vec());
            let oa = OracleMatrix::of(&a);
            let os = OracleMatrix::of(&s);
            for d in 0..=6 {
                let ker = paramres_testkit::kernel_dimension(&or, &src, &oa, &tgt, d);
                assert_eq!(src.image_dimension(&or, &os, d), ker, "{} degree {d}", case.name);
            }
        }
    }
}

#[test]
fn koszul_lengths_match() {
    for case in corpus() {
        let one = case.one();
        for n in 1..=3 {
            let x = case.sop.power(n).unwrap();
            let hi = n as i64 * x.len() as i64 + 6;
            for p in 0..=x.len() {
                let l = koszul_homology(&x, &one, p).unwrap().length();
                let prof = koszul_homology_profile(&case.ring, &x, &one, p as i32, hi);
                if let Length::Finite(l) = l {
                    assert_eq!(settled(&prof) as u64, l, "{} n = {n} p = {p}", case.name);
                }
            }
        }
    }
}

#[test]
fn koszul_on_a_presented_module() {
    let case = common::r2();
    let m = FinitelyPresentedModule::cyclic(&case.ring, &[case.ring.ambient().parse("a").unwrap()]).unwrap();
    let x = case.sop.clone();
    for p in 0..=2 {
        if let Length::Finite(l) = koszul_homology(&x, &m, p).unwrap().length() {
            let prof = koszul_homology_profile(&case.ring, &x, &m, p as i32, 10);
            assert_eq!(settled(&prof) as u64, l);
        }
    }
}

#[test]
fn resolutions_are_exact() {
    for case in corpus() {
        let m = case.sop.quotient_module();
        let res = minimal_free_resolution(&m, 4).unwrap();
        let c = res.complex();
        assert!(c.is_minimal());
        exact_through(c, c.hi(), 7);
        squares_vanish(c, 7);
        let or = OracleRing::of(&case.ring);
        let oc = OracleComplex::of(c);
        let om = OracleModule::of(&m);
        for d in 0..7 {
            assert_eq!(oc.homology_dimension(&or, 0, d), om.dimension(&or, d));
        }
    }
}

#[test]
fn cone_resolutions_are_exact() {
    for case in corpus() {
        let cone = general_cone_resolution(&case.sop, 4).unwrap();
        squares_vanish(&cone, 7);
        exact_through(&cone, 4, 7);
        if let Ok(aci) = aci_cone_resolution(&case.sop, 4) {
            squares_vanish(&aci, 7);
            exact_through(&aci, 4, 7);
        }
    }
}

#[test]
fn koszul_squares_vanish() {
    for case in corpus() {
        squares_vanish(&koszul_complex(&case.sop.power(2).unwrap(), &case.one()).unwrap(), 8);
    }
}
