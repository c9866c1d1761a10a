//! Aperiodic correlation by direct summation, and set certification.
//!
//! For sequences `a`, `b` of length `n`:
//!
//! ```text
//! Phi(a, b)(tau) = sum_k a_k conj(b_{k+tau})       0 <= tau < n
//!                = sum_k a_{k-tau} conj(b_k)       -n < tau < 0
//!                = 0                               otherwise
//! ```
//!
//! Entries are roots of unity stored as phases, so each term is
//! `zeta_L^(phase_a - phase_b)` and a sum is an exponent histogram. Nothing
//! here looks at how a set was constructed; certification works on any
//! [`CodeSet`].

use alloc::vec;
use alloc::vec::Vec;

use crate::codes::{Code, CodeSet, Params, PhaseSequence};
use crate::error::{Error, Result};
use crate::exactphase::{cyclotomic_poly, CorrelationValue, CyclotomicPoly, UnitRoots};

/// Adds the exponent histogram of `Phi(a, b)(tau)` into `bins`, which has
/// `2 L` slots indexed by `phase_a + L - phase_b`.
fn accumulate(a: &[u32], b: &[u32], tau: isize, order: u32, bins: &mut [i64]) {
    let n = a.len();
    let shift = tau.unsigned_abs();
    if shift >= n {
        return;
    }
    let (xs, ys) = if tau >= 0 { (&a[..n - shift], &b[shift..]) } else { (&a[shift..], &b[..n - shift]) };
    for (&x, &y) in xs.iter().zip(ys) {
        bins[(x + order - y) as usize] += 1;
    }
}

fn fold_bins(bins: &[i64], order: u32) -> CorrelationValue {
    let l = order as usize;
    let counts = (0..l).map(|j| bins[j] + bins[j + l]).collect();
    CorrelationValue::from_counts(order, counts).expect("counts sized to order")
}

fn check_sequences(a: &PhaseSequence, b: &PhaseSequence) -> Result<()> {
    if a.order() != b.order() {
        return Err(Error::Shape("sequences differ in root-of-unity order"));
    }
    if a.len() != b.len() {
        return Err(Error::Shape("sequences differ in length"));
    }
    Ok(())
}

fn check_codes(a: &Code, b: &Code) -> Result<()> {
    if a.m() != b.m() {
        return Err(Error::Shape("codes differ in number of sequences"));
    }
    check_sequences(&a.sequences()[0], &b.sequences()[0])
}

/// Aperiodic cross-correlation `Phi(a, b)(tau)`.
pub fn accf(a: &PhaseSequence, b: &PhaseSequence, tau: isize) -> Result<CorrelationValue> {
    check_sequences(a, b)?;
    let order = a.order();
    let mut bins = vec![0i64; 2 * order as usize];
    accumulate(a.phases(), b.phases(), tau, order, &mut bins);
    Ok(fold_bins(&bins, order))
}

fn accs_unchecked(a: &Code, b: &Code, tau: isize, bins: &mut [i64]) -> CorrelationValue {
    let order = a.order();
    bins.fill(0);
    for (x, y) in a.sequences().iter().zip(b.sequences()) {
        accumulate(x.phases(), y.phases(), tau, order, bins);
    }
    fold_bins(bins, order)
}

/// Aperiodic cross-correlation sum: `sum_l Phi(A_l, B_l)(tau)`.
pub fn accs(a: &Code, b: &Code, tau: isize) -> Result<CorrelationValue> {
    check_codes(a, b)?;
    let mut bins = vec![0i64; 2 * a.order() as usize];
    Ok(accs_unchecked(a, b, tau, &mut bins))
}

/// ACCS of two codes at every shift `-(n-1) ..= n-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrelationProfile {
    length: usize,
    values: Vec<CorrelationValue>,
}

impl CorrelationProfile {
    pub fn length(&self) -> usize {
        self.length
    }

    /// The value at `tau`, or `None` outside `|tau| < length`.
    pub fn get(&self, tau: isize) -> Option<&CorrelationValue> {
        let idx = tau + self.length as isize - 1;
        usize::try_from(idx).ok().and_then(|i| self.values.get(i))
    }

    pub fn iter(&self) -> impl Iterator<Item = (isize, &CorrelationValue)> + '_ {
        let first = 1 - self.length as isize;
        self.values.iter().enumerate().map(move |(i, v)| (first + i as isize, v))
    }
}

pub fn profile(a: &Code, b: &Code) -> Result<CorrelationProfile> {
    check_codes(a, b)?;
    let length = a.length();
    let mut bins = vec![0i64; 2 * a.order() as usize];
    let reach = length as isize - 1;
    let values = (-reach..=reach).map(|tau| accs_unchecked(a, b, tau, &mut bins)).collect();
    Ok(CorrelationProfile { length, values })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SetKind {
    Ccc,
    Zccs,
    Neither,
}

/// How a correlation sum is judged to vanish.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ZeroTest {
    /// Divisibility by the cyclotomic polynomial.
    Exact,
    /// `|value| < tol` in double precision.
    Float { tol: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    pub zero_test: ZeroTest,
    /// Cap on the number of violations kept in the report; all are counted.
    pub max_reported_violations: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { zero_test: ZeroTest::Exact, max_reported_violations: 100 }
    }
}

/// A correlation sum that breaks the claimed parameters. `codes.0 <= codes.1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub codes: (usize, usize),
    pub shift: isize,
    pub value: CorrelationValue,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub kind: SetKind,
    pub claimed: Params,
    /// `s`, `m`, `length` as stored and the measured ZCZ width.
    pub measured: Params,
    /// Auto-correlation sum at zero shift, `m * length` for unimodular codes.
    pub peak: i64,
    pub optimal: bool,
    pub certified: bool,
    pub violations: Vec<Violation>,
    pub violation_count: usize,
    /// Number of correlation sums evaluated.
    pub values_checked: usize,
    /// Sums whose exact zero decision disagrees with `|value| < 1e-9 * length`.
    pub float_mismatches: usize,
}

/// Tolerance, relative to sequence length, of the float cross-check.
pub const FLOAT_AGREEMENT_TOL: f64 = 1e-9;

struct Scanner<'a> {
    set: &'a CodeSet,
    phi: CyclotomicPoly,
    roots: UnitRoots,
    options: VerifyOptions,
    bins: Vec<i64>,
}

struct ScanOutcome {
    measured_z: usize,
    peak: i64,
    peak_ok: bool,
    violations: Vec<Violation>,
    violation_count: usize,
    values_checked: usize,
    float_mismatches: usize,
}

impl<'a> Scanner<'a> {
    fn new(set: &'a CodeSet, options: VerifyOptions) -> Self {
        let order = set.order();
        Self {
            set,
            phi: cyclotomic_poly(order),
            roots: UnitRoots::new(order),
            options,
            bins: vec![0; 2 * order as usize],
        }
    }

    fn magnitude(&self, v: &CorrelationValue, minus: i64) -> f64 {
        let (re, im) = self.roots.eval(v);
        libm::hypot(re - minus as f64, im)
    }

    /// Decides `v == target` under the configured test and counts
    /// disagreements between the exact and float decisions.
    fn equals(&self, v: &CorrelationValue, target: i64, mismatches: &mut usize) -> bool {
        let exact = if target == 0 {
            self.phi.annihilates(v)
        } else {
            let mut shifted = v.clone();
            let mut counts = shifted.counts().to_vec();
            counts[0] -= target;
            shifted = CorrelationValue::from_counts(v.order(), counts).expect("same order");
            self.phi.annihilates(&shifted)
        };
        let magnitude = self.magnitude(v, target);
        let length = self.set.params().length as f64;
        if exact != (magnitude < FLOAT_AGREEMENT_TOL * length) {
            *mismatches += 1;
        }
        match self.options.zero_test {
            ZeroTest::Exact => exact,
            ZeroTest::Float { tol } => magnitude < tol,
        }
    }

    /// Walks shifts outward from zero across all code pairs. Shifts below
    /// `claimed_z` are always covered; beyond that the walk stops at the
    /// first shift that bounds the zero correlation zone.
    fn run(&mut self, claimed_z: usize) -> ScanOutcome {
        let codes = self.set.codes();
        let Params { m, length, .. } = self.set.params();
        let target_peak = (m * length) as i64;
        let mut out = ScanOutcome {
            measured_z: length,
            peak: target_peak,
            peak_ok: true,
            violations: Vec::new(),
            violation_count: 0,
            values_checked: 0,
            float_mismatches: 0,
        };
        let mut bound: Option<usize> = None;
        let mut bins = core::mem::take(&mut self.bins);
        for d in 0..length {
            if bound.is_some() && d >= claimed_z {
                break;
            }
            for i in 0..codes.len() {
                for j in i..codes.len() {
                    let taus: &[isize] = match (d, i == j) {
                        (0, _) => &[0],
                        (_, true) => &[d as isize],
                        _ => &[d as isize, -(d as isize)],
                    };
                    for &tau in taus {
                        let v = accs_unchecked(&codes[i], &codes[j], tau, &mut bins);
                        out.values_checked += 1;
                        let is_peak = i == j && d == 0;
                        if is_peak && i == 0 {
                            out.peak = v.counts()[0];
                        }
                        let target = if is_peak { target_peak } else { 0 };
                        if self.equals(&v, target, &mut out.float_mismatches) {
                            continue;
                        }
                        if is_peak {
                            out.peak_ok = false;
                        } else if bound.is_none() {
                            bound = Some(d);
                        }
                        if is_peak || d < claimed_z {
                            out.violation_count += 1;
                            if out.violations.len() < self.options.max_reported_violations {
                                out.violations.push(Violation { codes: (i, j), shift: tau, value: v });
                            }
                        }
                    }
                }
            }
        }
        self.bins = bins;
        if let Some(z) = bound {
            out.measured_z = z;
        }
        out.violations.sort_by_key(|v| (v.codes, v.shift));
        out
    }
}

/// Largest `z <= length` such that every auto-correlation sum vanishes for
/// `0 < |tau| < z` and every cross-correlation sum vanishes for `|tau| < z`.
pub fn measure_zcz(set: &CodeSet) -> usize {
    Scanner::new(set, VerifyOptions::default()).run(0).measured_z
}

pub fn verify(set: &CodeSet) -> VerificationReport {
    verify_with(set, &VerifyOptions::default())
}

/// Measures the ZCZ width, classifies the set, checks the claimed
/// parameters and evaluates the set-size bound `s = m * floor(length / z)`.
pub fn verify_with(set: &CodeSet, options: &VerifyOptions) -> VerificationReport {
    let claimed = set.params();
    let scan = Scanner::new(set, *options).run(claimed.z);
    let measured = Params { z: scan.measured_z, ..claimed };
    let kind = if !scan.peak_ok || measured.z == 0 {
        SetKind::Neither
    } else if measured.z == measured.length && measured.s == measured.m {
        SetKind::Ccc
    } else {
        SetKind::Zccs
    };
    VerificationReport {
        kind,
        claimed,
        measured,
        peak: scan.peak,
        optimal: kind != SetKind::Neither && measured.meets_set_size_bound(),
        certified: scan.violation_count == 0,
        violations: scan.violations,
        violation_count: scan.violation_count,
        values_checked: scan.values_checked,
        float_mismatches: scan.float_mismatches,
    }
}
