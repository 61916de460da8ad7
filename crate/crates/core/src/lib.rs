//! Graded commutative algebra over quotients of polynomial rings by
//! homogeneous ideals: Gröbner bases, chain complexes, Koszul complexes,
//! minimal free resolutions and invariants of systems of parameters.
//!
//! Everything is standard graded over a prime field `GF(p)`.

#![no_std]

extern crate alloc;

pub mod complexes;
pub mod error;
pub mod field;
pub mod groebner;
pub mod invariants;
pub mod koszul;
pub mod linalg;
pub mod module;
pub mod monomial;
pub mod poly;
pub mod quotient;
pub mod resolutions;
pub mod staircase;
pub mod vector;

pub use complexes::{kill_top_homology, mapping_cone, ChainComplex, ComplexMap, Homology, UnitEntry};
pub use error::{Error, Result};
pub use field::{PrimeField, PrimeFieldElement, DEFAULT_CHARACTERISTIC};
pub use groebner::{buchberger, GroebnerBasis};
pub use invariants::{
    depth, find_standard_power, flc_check, grade, invariant_report, is_sop, is_standard_sop, length_stability_check,
    local_cohomology_lengths, FlcVerdict, InvariantReport, StabilityReport, StandardPower, Standardness,
};
pub use koszul::{
    cohomology_comparison, comparison_map, koszul_cochain_complex, koszul_cohomology, koszul_complex, koszul_homology,
    power_sequence, ParameterSequence,
};
pub use linalg::DenseMatrix;
pub use module::{syzygies, FinitelyPresentedModule, ImageSolver, Length};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{Polynomial, PolynomialRing};
pub use quotient::{QuotientRing, RingMatrix};
pub use resolutions::{
    aci_cone_resolution, cec_injectivity_check, general_cone_resolution, minimal_free_resolution,
    minimal_free_resolution_with, poincare_truncation, syzygy_module, BettiTable, CecReport, Resolution,
    ResolutionOptions, SeriesTruncation,
};
pub use vector::FreeVector;
