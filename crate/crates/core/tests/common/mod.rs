#![allow(dead_code)]

use std::sync::Arc;

use paramres_core::{FinitelyPresentedModule, ParameterSequence, QuotientRing};

pub const P: u32 = 32003;

pub struct Case {
    pub name: &'static str,
    pub ring: Arc<QuotientRing>,
    pub sop: ParameterSequence,
}

impl Case {
    pub fn one(&self) -> FinitelyPresentedModule {
        FinitelyPresentedModule::free(&self.ring, vec![0])
    }
}

fn case(name: &'static str, vars: &[&str], ideal: &[&str], sop: &[&str]) -> Case {
    let ring = QuotientRing::parse(P, vars, ideal).unwrap();
    let sop = ParameterSequence::parse(&ring, sop).unwrap();
    Case { name, ring, sop }
}

pub fn r1() -> Case {
    case("r1", &["a", "b", "c"], &["a*c", "b*c", "c^2"], &["a", "b"])
}

pub fn r2() -> Case {
    case("r2", &["a", "b", "c", "d"], &["a*c", "a*d", "b*c", "b*d"], &["a+c", "b+d"])
}

pub fn regular() -> Case {
    case("regular", &["a", "b"], &[], &["a", "b"])
}

pub fn hypersurface() -> Case {
    case("hypersurface", &["a", "b", "c"], &["a*c-b^2"], &["a", "c"])
}

pub fn non_flc() -> Case {
    case("non-flc", &["a", "b", "c", "d"], &["a*c", "a*d"], &["b", "a+c", "a+d"])
}

pub fn corpus() -> Vec<Case> {
    vec![r1(), r2(), regular(), hypersurface(), non_flc()]
}
