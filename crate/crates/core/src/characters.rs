//! Additive characters `chi_b(c) = omega_p^Tr(bc)`, kept as phases.

use crate::exactphase::CorrelationValue;
use crate::galois::{FieldElement, FieldSpec};

/// Exponent `v` in `[0, p)` of `omega_p^v = exp(2 pi i v / p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharPhase(u32);

impl CharPhase {
    pub fn new(value: u32, p: u32) -> Self {
        CharPhase(value % p)
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

/// `chi_b(c)` as the exponent `Tr(b c) mod p`.
pub fn char_phase(b: &FieldElement, c: &FieldElement, spec: &FieldSpec) -> CharPhase {
    CharPhase(spec.trace(&spec.mul(b, c)))
}

/// `sum over c in GF(q) of chi_a(c) * conj(chi_b(c))`, exactly.
pub fn char_inner(a: &FieldElement, b: &FieldElement, spec: &FieldSpec) -> CorrelationValue {
    let p = spec.p();
    let mut sum = CorrelationValue::zero(p);
    for c in spec.elements() {
        let pa = char_phase(a, &c, spec).value();
        let pb = char_phase(b, &c, spec).value();
        sum.add_root(pa + p - pb);
    }
    sum
}
