//! Exact sums of `L`-th roots of unity.
//!
//! A [`CorrelationValue`] stores `sum(counts[j] * zeta^j)` with
//! `zeta = exp(2 pi i / L)`. It is zero exactly when the polynomial
//! `sum(counts[j] x^j)` is divisible by the cyclotomic polynomial `Phi_L`,
//! the minimal polynomial of `zeta` over the rationals.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::TAU;

use crate::error::{Error, Result};

/// The `L`-th cyclotomic polynomial, integer coefficients, constant first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicPoly {
    order: u32,
    coeffs: Vec<i64>,
}

/// Quotient of `num` by the monic `den`; panics if the division is inexact.
fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dd];
    for top in (dd..num.len()).rev() {
        let c = rem[top];
        quot[top - dd] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[top - dd + j] -= c * d;
            }
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "inexact cyclotomic division");
    quot
}

/// `Phi_L(x) = (x^L - 1) / prod(Phi_d(x) for d | L, d < L)`.
pub fn cyclotomic_poly(order: u32) -> CyclotomicPoly {
    assert!(order >= 1, "cyclotomic order must be positive");
    let n = order as usize;
    let mut coeffs = vec![0i64; n + 1];
    coeffs[0] = -1;
    coeffs[n] = 1;
    for d in (1..order).filter(|d| order.is_multiple_of(*d)) {
        coeffs = exact_div_monic(&coeffs, &cyclotomic_poly(d).coeffs);
    }
    CyclotomicPoly { order, coeffs }
}

impl CyclotomicPoly {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Equal to Euler's totient of the order.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Remainder of `sum(counts[j] x^j)` modulo this polynomial.
    pub fn reduce(&self, counts: &[i64]) -> Vec<i64> {
        let dd = self.degree();
        let mut rem = counts.to_vec();
        for top in (dd..rem.len()).rev() {
            let c = rem[top];
            if c != 0 {
                for (j, &d) in self.coeffs.iter().enumerate() {
                    rem[top - dd + j] -= c * d;
                }
            }
        }
        rem.truncate(dd.min(rem.len()));
        rem
    }

    pub fn annihilates(&self, v: &CorrelationValue) -> bool {
        debug_assert_eq!(v.order, self.order);
        v.counts.iter().all(|&c| c == 0) || self.reduce(&v.counts).iter().all(|&c| c == 0)
    }
}

/// `sum(counts[j] * zeta_L^j)`; `counts.len() == L`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CorrelationValue {
    order: u32,
    counts: Vec<i64>,
}

impl CorrelationValue {
    pub fn zero(order: u32) -> Self {
        assert!(order >= 1, "root-of-unity order must be positive");
        Self { order, counts: vec![0; order as usize] }
    }

    pub fn integer(order: u32, n: i64) -> Self {
        let mut v = Self::zero(order);
        v.counts[0] = n;
        v
    }

    pub fn from_counts(order: u32, counts: Vec<i64>) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        if counts.len() != order as usize {
            return Err(Error::Shape("count vector length must equal the root-of-unity order"));
        }
        Ok(Self { order, counts })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn counts(&self) -> &[i64] {
        &self.counts
    }

    /// Adds `zeta^exponent`.
    pub fn add_root(&mut self, exponent: u32) {
        self.counts[(exponent % self.order) as usize] += 1;
    }

    pub fn add_assign(&mut self, other: &CorrelationValue) {
        assert_eq!(self.order, other.order, "mixed root-of-unity orders");
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
    }

    /// Complex conjugate: `zeta^j -> zeta^(-j)`.
    pub fn conj(&self) -> Self {
        let n = self.order as usize;
        let counts = (0..n).map(|j| self.counts[(n - j) % n]).collect();
        Self { order: self.order, counts }
    }

    pub fn is_zero(&self) -> bool {
        cyclotomic_poly(self.order).annihilates(self)
    }

    pub fn equals_integer(&self, n: i64) -> bool {
        let mut shifted = self.clone();
        shifted.counts[0] -= n;
        shifted.is_zero()
    }

    /// Double-precision value `(re, im)`.
    pub fn to_complex(&self) -> (f64, f64) {
        UnitRoots::new(self.order).eval(self)
    }
}

/// Precomputed `(cos, sin)` of `2 pi j / L` for `j` in `[0, L)`.
#[derive(Debug, Clone)]
pub struct UnitRoots {
    roots: Vec<(f64, f64)>,
}

impl UnitRoots {
    pub fn new(order: u32) -> Self {
        let roots = (0..order)
            .map(|j| {
                let theta = TAU * j as f64 / order as f64;
                (libm::cos(theta), libm::sin(theta))
            })
            .collect();
        Self { roots }
    }

    pub fn root(&self, exponent: u32) -> (f64, f64) {
        self.roots[exponent as usize % self.roots.len()]
    }

    pub fn eval(&self, v: &CorrelationValue) -> (f64, f64) {
        debug_assert_eq!(v.counts.len(), self.roots.len());
        v.counts
            .iter()
            .zip(&self.roots)
            .filter(|(&c, _)| c != 0)
            .fold((0.0, 0.0), |(re, im), (&c, &(cr, ci))| (re + c as f64 * cr, im + c as f64 * ci))
    }
}
