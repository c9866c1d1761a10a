//! Complete complementary codes (CCC) and Z-complementary code sets (ZCCS)
//! built from additive characters over GF(p^r).
//!
//! The crate is `no_std` and only needs `alloc`. Everything is exact: field
//! arithmetic happens over `Z_p[x]/(f)`, sequence entries are stored as
//! exponents of a root of unity, and correlation sums are kept as
//! exponent-count vectors that are tested for zero by reduction modulo the
//! cyclotomic polynomial.
//!
//! Module map:
//!
//! - [`galois`]: GF(p^r) arithmetic, modulus and primitive element search,
//!   absolute trace and the index map `a(i)`.
//! - [`characters`]: additive characters as phases.
//! - [`exactphase`]: exact sums of roots of unity.
//! - [`codes`]: the CCC and ZCCS constructions.
//! - [`correlation`]: brute-force aperiodic correlation, ZCZ measurement and
//!   set certification.

#![no_std]

extern crate alloc;

pub mod characters;
pub mod codes;
pub mod correlation;
mod error;
pub mod exactphase;
pub mod galois;

pub use characters::{char_inner, char_phase, CharPhase};
pub use codes::{
    build_ccc, build_zccs, compose, decompose, g_value, s_value, Code, CodeSet, MixedRadixIndex,
    Params, PhaseSequence, Provenance,
};
pub use correlation::{
    accf, accs, measure_zcz, profile, verify, verify_with, CorrelationProfile, SetKind,
    VerificationReport, VerifyOptions, Violation, ZeroTest,
};
pub use error::{Error, Result};
pub use exactphase::{cyclotomic_poly, CorrelationValue, CyclotomicPoly};
pub use galois::{FieldElement, FieldSpec, IndexVector};
