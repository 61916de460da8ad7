use std::cmp::Ordering;
use std::sync::Arc;

use paramres_core::{buchberger, Monomial, MonomialOrder, Polynomial, PolynomialRing, PrimeField, QuotientRing};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const P: u32 = 32003;

fn ring3() -> Arc<PolynomialRing> {
    PolynomialRing::new(P, &["a", "b", "c"], MonomialOrder::DegRevLex).unwrap()
}

fn poly(r: &Arc<PolynomialRing>, terms: &[([u32; 3], i64)]) -> Polynomial {
    let mut f = r.zero();
    for (e, c) in terms {
        f = f.add(&r.monomial(*c, Monomial::from_exponents(e).unwrap())).unwrap();
    }
    f
}

fn terms() -> impl Strategy<Value = Vec<([u32; 3], i64)>> {
    prop::collection::vec((prop::array::uniform3(0u32..4), -50i64..50), 0..6)
}

proptest! {
    #[test]
    fn field_axioms(a in 0u32..P, b in 0u32..P, c in 0u32..P) {
        let f = PrimeField::new(P).unwrap();
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        prop_assert_eq!(f.sub(a, b), f.add(a, f.neg(b)));
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        } else {
            prop_assert!(f.inv(a).is_none());
        }
        prop_assert_eq!(f.pow(a.max(1), (P - 1) as u64), 1);
    }

    #[test]
    fn ring_axioms(x in terms(), y in terms(), z in terms()) {
        let r = ring3();
        let (f, g, h) = (poly(&r, &x), poly(&r, &y), poly(&r, &z));
        prop_assert_eq!(f.add(&g).unwrap(), g.add(&f).unwrap());
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        prop_assert_eq!(f.mul(&g).unwrap().mul(&h).unwrap(), f.mul(&g.mul(&h).unwrap()).unwrap());
        prop_assert_eq!(
            f.mul(&g.add(&h).unwrap()).unwrap(),
            f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap()
        );
        prop_assert!(f.sub(&f).unwrap().is_zero());
        prop_assert_eq!(f.mul(&r.one()).unwrap(), f.clone());
        prop_assert_eq!(f.add(&r.zero()).unwrap(), f);
    }

    #[test]
    fn normal_forms_are_stable(x in terms(), y in terms()) {
        let r = ring3();
        let q = QuotientRing::new(&r, &[r.parse("a^2-b*c").unwrap(), r.parse("a*b-c^2").unwrap()]).unwrap();
        let f = poly(&r, &x);
        let nf = q.reduce(&f);
        prop_assert_eq!(q.reduce(&nf), nf.clone());
        let g = poly(&r, &y);
        let in_ideal = g.mul(&r.parse("a^2-b*c").unwrap()).unwrap();
        prop_assert_eq!(q.reduce(&f.add(&in_ideal).unwrap()), nf);
        prop_assert!(q.is_zero(&in_ideal));
    }
}

#[test]
fn order_is_multiplicative() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let draw = |rng: &mut ChaCha8Rng| {
        let e: Vec<u32> = (0..4).map(|_| rng.gen_range(0..5)).collect();
        Monomial::from_exponents(&e).unwrap()
    };
    for order in [MonomialOrder::DegRevLex, MonomialOrder::Lex] {
        for _ in 0..10_000 {
            let (a, b, w) = (draw(&mut rng), draw(&mut rng), draw(&mut rng));
            let before = a.cmp_in(order, &b);
            assert_eq!(a.mul(&w).cmp_in(order, &b.mul(&w)), before);
            if !a.is_one() {
                assert_eq!(a.cmp_in(order, &Monomial::one(4)), Ordering::Greater);
            }
        }
    }
}

#[test]
fn frobenius_square_in_characteristic_two() {
    let r = PolynomialRing::new(2, &["a", "b", "c"], MonomialOrder::DegRevLex).unwrap();
    let s = r.parse("a+b+c").unwrap().pow(2);
    assert_eq!(s, r.parse("a^2+b^2+c^2").unwrap());
}

#[test]
fn groebner_basis_of_binomials() {
    let r = PolynomialRing::new(P, &["a", "b"], MonomialOrder::DegRevLex).unwrap();
    let gb = buchberger(&r, &[r.parse("a^2-b^2").unwrap(), r.parse("a*b").unwrap()]).unwrap();
    assert!(gb.is_reduced());
    assert!(gb.satisfies_buchberger_criterion());
    assert!(gb.contains(&r.parse("b^3").unwrap()));
    assert!(!gb.contains(&r.parse("b^2").unwrap()));
    let lex = PolynomialRing::new(P, &["a", "b"], MonomialOrder::Lex).unwrap();
    let gb = buchberger(&lex, &[lex.parse("a^2-b^2").unwrap(), lex.parse("a*b").unwrap()]).unwrap();
    assert!(gb.contains(&lex.parse("b^3").unwrap()));
}

#[test]
fn a_principal_times_maximal_ideal_misses_the_cube() {
    let lex = PolynomialRing::new(P, &["a", "b"], MonomialOrder::Lex).unwrap();
    let gens = [lex.parse("a^2-b^2").unwrap(), lex.parse("a*b-b^2").unwrap()];
    let gb = buchberger(&lex, &gens).unwrap();
    assert_eq!(gb.len(), 2);
    assert!(gb.satisfies_buchberger_criterion());
    assert!(!gb.contains(&lex.parse("b^3").unwrap()));
    assert!(gb.contains(&lex.parse("a^3-a*b^2").unwrap()));
}

#[test]
fn random_ideals_satisfy_the_criterion() {
    let r = ring3();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..30 {
        let mut gens = Vec::new();
        for _ in 0..rng.gen_range(1..4) {
            let d = rng.gen_range(1..4u32);
            let mut f = r.zero();
            for m in paramres_core::monomial::monomials_of_degree(3, d) {
                if rng.gen_bool(0.5) {
                    f = f.add(&r.monomial(rng.gen_range(-5..5), m)).unwrap();
                }
            }
            if !f.is_zero() {
                gens.push(f);
            }
        }
        let gb = buchberger(&r, &gens).unwrap();
        assert!(gb.satisfies_buchberger_criterion());
        for g in &gens {
            assert!(gb.contains(g));
        }
    }
}
