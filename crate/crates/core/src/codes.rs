//! The CCC and ZCCS constructions.
//!
//! For `0 <= k, l, i < q` the CCC entry is
//!
//! ```text
//! S_{k,l}(i) = omega_p ^ (k.i + Tr(a(i) a(l)))
//! ```
//!
//! where `k.i` is the dot product of base-`p` digit vectors. Code `k` is the
//! ordered list of sequences `l = 0..q`.
//!
//! The ZCCS stretches each sequence over `n = p_1 * ... * p_t` blocks of
//! length `q` and twists block `(i_1, .., i_t)` by `prod(omega_{p_m}^(c_m i_m))`.
//! Phases are then exponents of a root of unity of order
//! `L = lcm(p, p_1, .., p_t)`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::characters::CharPhase;
use crate::error::{Error, Result};
use crate::galois::{is_prime, FieldSpec, IndexVector};

/// Entries are `zeta_L^phase`; every phase lies in `[0, L)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PhaseSequence {
    order: u32,
    phases: Vec<u32>,
}

impl PhaseSequence {
    pub fn new(order: u32, phases: Vec<u32>) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        if let Some(&bad) = phases.iter().find(|&&ph| ph >= order) {
            return Err(Error::PhaseOutOfRange { value: bad, order });
        }
        Ok(Self { order, phases })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn phases(&self) -> &[u32] {
        &self.phases
    }

    pub fn len(&self) -> usize {
        self.phases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phases.is_empty()
    }
}

/// An ordered list of sequences sharing root-of-unity order and length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Code {
    sequences: Vec<PhaseSequence>,
}

impl Code {
    pub fn new(sequences: Vec<PhaseSequence>) -> Result<Self> {
        let first = sequences.first().ok_or(Error::Shape("a code needs at least one sequence"))?;
        if sequences.iter().any(|s| s.order != first.order) {
            return Err(Error::Shape("sequences of a code differ in root-of-unity order"));
        }
        if sequences.iter().any(|s| s.len() != first.len()) {
            return Err(Error::Shape("sequences of a code differ in length"));
        }
        Ok(Self { sequences })
    }

    pub fn sequences(&self) -> &[PhaseSequence] {
        &self.sequences
    }

    /// Number of sequences.
    pub fn m(&self) -> usize {
        self.sequences.len()
    }

    pub fn length(&self) -> usize {
        self.sequences[0].len()
    }

    pub fn order(&self) -> u32 {
        self.sequences[0].order
    }
}

/// `(s, m, length, z)`: number of codes, sequences per code, sequence
/// length and zero-correlation-zone width.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Params {
    pub s: usize,
    pub m: usize,
    pub length: usize,
    pub z: usize,
}

impl Params {
    /// The set-size bound `s <= m * floor(length / z)` holds with equality.
    pub fn meets_set_size_bound(&self) -> bool {
        self.z > 0 && self.s == self.m * (self.length / self.z)
    }
}

/// How a set was built. Informational only: verification never reads it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub p: u32,
    pub r: u32,
    pub modulus: Vec<u32>,
    pub alpha: Vec<u32>,
    pub primes: Vec<u32>,
    pub ordering: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSet {
    params: Params,
    order: u32,
    provenance: Option<Provenance>,
    codes: Vec<Code>,
}

impl CodeSet {
    /// Checks that all codes agree on shape and that `params` describes the
    /// data (`z` is a claim and only has to fit within the length).
    pub fn new(codes: Vec<Code>, params: Params, provenance: Option<Provenance>) -> Result<Self> {
        let first = codes.first().ok_or(Error::Shape("a code set needs at least one code"))?;
        let (m, length, order) = (first.m(), first.length(), first.order());
        if codes.iter().any(|c| c.m() != m) {
            return Err(Error::Shape("codes differ in number of sequences"));
        }
        if codes.iter().any(|c| c.length() != length) {
            return Err(Error::Shape("codes differ in sequence length"));
        }
        if codes.iter().any(|c| c.order() != order) {
            return Err(Error::Shape("codes differ in root-of-unity order"));
        }
        let check = |field, claimed, actual| {
            if claimed == actual {
                Ok(())
            } else {
                Err(Error::ParamMismatch { field, claimed, actual })
            }
        };
        check("s", params.s, codes.len())?;
        check("m", params.m, m)?;
        check("length", params.length, length)?;
        if params.z > length {
            return Err(Error::ParamMismatch { field: "z", claimed: params.z, actual: length });
        }
        Ok(Self { params, order, provenance, codes })
    }

    pub fn params(&self) -> Params {
        self.params
    }

    /// Root-of-unity order `L` shared by every entry.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    pub fn codes(&self) -> &[Code] {
        &self.codes
    }

    pub fn into_codes(self) -> Vec<Code> {
        self.codes
    }
}

fn check_index(index: usize, bound: usize) -> Result<()> {
    if index < bound {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index, bound })
    }
}

/// Exponent of `omega_p` in `S_{k,l}(i)`: `(k.i + Tr(a(i) a(l))) mod p`.
pub fn s_value(k: usize, l: usize, i: usize, spec: &FieldSpec) -> Result<CharPhase> {
    let q = spec.q();
    check_index(k, q)?;
    check_index(l, q)?;
    check_index(i, q)?;
    let (p, r) = (spec.p(), spec.r());
    let dot = IndexVector::from_index(k, p, r)?.dot(&IndexVector::from_index(i, p, r)?, p);
    let tr = spec.trace(&spec.mul(&spec.index_to_element(i)?, &spec.index_to_element(l)?));
    Ok(CharPhase::new(dot + tr, p))
}

/// `table[k][l][i]` = exponent of `omega_p` in `S_{k,l}(i)`.
fn ccc_phases(spec: &FieldSpec) -> Vec<Vec<Vec<u32>>> {
    let (p, r, q) = (spec.p(), spec.r(), spec.q());
    let a = spec.index_table();
    let digits: Vec<IndexVector> = (0..q)
        .map(|k| IndexVector::from_index(k, p, r).expect("k < q"))
        .collect();
    // trace_table[i][l] = Tr(a(i) a(l))
    let trace_table: Vec<Vec<u32>> = a
        .iter()
        .map(|ai| a.iter().map(|al| spec.trace(&spec.mul(ai, al))).collect())
        .collect();
    (0..q)
        .map(|k| {
            (0..q)
                .map(|l| {
                    (0..q)
                        .map(|i| (digits[k].dot(&digits[i], p) + trace_table[i][l]) % p)
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn provenance(spec: &FieldSpec, primes: &[u32], ordering: String) -> Provenance {
    Provenance {
        p: spec.p(),
        r: spec.r(),
        modulus: spec.modulus().to_vec(),
        alpha: spec.alpha().coeffs().to_vec(),
        primes: primes.to_vec(),
        ordering,
    }
}

/// The CCC `{psi(S_k) : 0 <= k < q}`: `q` codes of `q` sequences of length
/// `q` over `p`-th roots of unity, claimed as `(q, q, q, q)`.
pub fn build_ccc(spec: &FieldSpec) -> CodeSet {
    let (p, q) = (spec.p(), spec.q());
    let codes = ccc_phases(spec)
        .into_iter()
        .map(|rows| {
            let sequences = rows
                .into_iter()
                .map(|phases| PhaseSequence { order: p, phases })
                .collect();
            Code { sequences }
        })
        .collect();
    let ordering = String::from("code index = k; sequence index = l; entry index = i");
    CodeSet {
        params: Params { s: q, m: q, length: q, z: q },
        order: p,
        provenance: Some(provenance(spec, &[], ordering)),
        codes,
    }
}

/// `i' = i + i_1 q + i_2 p_1 q + ... + i_t p_{t-1} ... p_1 q` with
/// `i in [0, q)` and `i_m in [0, p_m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedRadixIndex {
    pub inner: usize,
    pub digits: Vec<u32>,
}

fn checked_block_count(primes: &[u32]) -> Result<usize> {
    primes
        .iter()
        .try_fold(1usize, |n, &pm| n.checked_mul(pm as usize))
        .ok_or(Error::Shape("product of primes overflows"))
}

pub fn decompose(i_prime: usize, q: usize, primes: &[u32]) -> Result<MixedRadixIndex> {
    if q == 0 || primes.contains(&0) {
        return Err(Error::ZeroOrder);
    }
    let bound = checked_block_count(primes)?
        .checked_mul(q)
        .ok_or(Error::Shape("mixed-radix range overflows"))?;
    check_index(i_prime, bound)?;
    let inner = i_prime % q;
    let mut rest = i_prime / q;
    let digits = primes
        .iter()
        .map(|&pm| {
            let d = (rest % pm as usize) as u32;
            rest /= pm as usize;
            d
        })
        .collect();
    Ok(MixedRadixIndex { inner, digits })
}

pub fn compose(index: &MixedRadixIndex, q: usize, primes: &[u32]) -> Result<usize> {
    check_index(index.inner, q)?;
    if index.digits.len() != primes.len() {
        return Err(Error::DigitCount { expected: primes.len(), found: index.digits.len() });
    }
    let mut value = 0usize;
    for (position, (&d, &pm)) in index.digits.iter().zip(primes).enumerate().rev() {
        if d >= pm {
            return Err(Error::DigitOutOfRange { position, value: d, radix: pm });
        }
        value = value * pm as usize + d as usize;
    }
    Ok(value * q + index.inner)
}

fn check_primes(primes: &[u32]) -> Result<()> {
    match primes.iter().find(|&&pm| !is_prime(pm as u64)) {
        Some(&bad) => Err(Error::NotPrime(bad as u64)),
        None => Ok(()),
    }
}

/// `lcm(p, p_1, .., p_t)`.
pub fn phase_order(p: u32, primes: &[u32]) -> u32 {
    primes.iter().fold(p, |acc, &pm| acc.lcm(&pm))
}

fn check_twist(c: &[u32], primes: &[u32]) -> Result<()> {
    if c.len() != primes.len() {
        return Err(Error::DigitCount { expected: primes.len(), found: c.len() });
    }
    for (position, (&cm, &pm)) in c.iter().zip(primes).enumerate() {
        if cm >= pm {
            return Err(Error::DigitOutOfRange { position, value: cm, radix: pm });
        }
    }
    Ok(())
}

/// Exponent of `zeta_L` in `G^c_{k,l}(i')`, `L = lcm(p, p_1, .., p_t)`.
pub fn g_value(
    k: usize,
    l: usize,
    c: &[u32],
    i_prime: usize,
    spec: &FieldSpec,
    primes: &[u32],
) -> Result<u32> {
    check_primes(primes)?;
    check_twist(c, primes)?;
    let idx = decompose(i_prime, spec.q(), primes)?;
    let order = phase_order(spec.p(), primes) as u64;
    let base = s_value(k, l, idx.inner, spec)?.value() as u64 * (order / spec.p() as u64);
    let twist: u64 = c
        .iter()
        .zip(&idx.digits)
        .zip(primes)
        .map(|((&cm, &im), &pm)| cm as u64 * im as u64 * (order / pm as u64))
        .sum();
    Ok(((base + twist) % order) as u32)
}

/// The ZCCS `{psi(G^c_k)}` over all `k < q` and twists `c`, claimed as
/// `(n q, q, n q, q)` with `n = prod(primes)`.
///
/// Code `k` with twist `c` sits at position `k + q * (c_1 + c_2 p_1 + ...)`.
pub fn build_zccs(spec: &FieldSpec, primes: &[u32]) -> Result<CodeSet> {
    if primes.is_empty() {
        return Err(Error::EmptyPrimes);
    }
    check_primes(primes)?;
    let (p, q) = (spec.p(), spec.q());
    let n = checked_block_count(primes)?;
    let length = n.checked_mul(q).ok_or(Error::Shape("code set too large"))?;
    let order = phase_order(p, primes);
    let scale = order / p;
    let ccc = ccc_phases(spec);

    // Mixed-radix digits of each block index; the twist of block b under
    // twist vector c is sum(c_m b_m L / p_m).
    let digits_of = |mut value: usize| -> Vec<u32> {
        primes
            .iter()
            .map(|&pm| {
                let d = (value % pm as usize) as u32;
                value /= pm as usize;
                d
            })
            .collect()
    };
    let blocks: Vec<Vec<u32>> = (0..n).map(digits_of).collect();

    let mut codes = Vec::with_capacity(length);
    for c in &blocks {
        let twists: Vec<u32> = blocks
            .iter()
            .map(|b| {
                let t: u64 = c
                    .iter()
                    .zip(b)
                    .zip(primes)
                    .map(|((&cm, &bm), &pm)| cm as u64 * bm as u64 * (order / pm) as u64)
                    .sum();
                (t % order as u64) as u32
            })
            .collect();
        for rows in &ccc {
            let sequences = rows
                .iter()
                .map(|row| {
                    let phases = twists
                        .iter()
                        .flat_map(|&tw| row.iter().map(move |&s| (s * scale + tw) % order))
                        .collect();
                    PhaseSequence { order, phases }
                })
                .collect();
            codes.push(Code { sequences });
        }
    }
    let ordering = format!(
        "code index = k + {q} * (c_1 + c_2 p_1 + ...); sequence index = l; \
         entry index = i + q * (i_1 + i_2 p_1 + ...)"
    );
    Ok(CodeSet {
        params: Params { s: length, m: q, length, z: q },
        order,
        provenance: Some(provenance(spec, primes, ordering)),
        codes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn example_field() -> FieldSpec {
        FieldSpec::with_modulus(3, vec![2, 1, 1], Some(vec![0, 1])).unwrap()
    }

    #[test]
    fn s_values() {
        let f = example_field();
        for i in 0..9 {
            assert_eq!(s_value(0, 0, i, &f).unwrap().value(), 0);
        }
        for k in 0..9 {
            for l in 0..9 {
                assert_eq!(s_value(k, l, 0, &f).unwrap().value(), 0);
            }
        }
        assert_eq!(s_value(1, 1, 1, &f).unwrap().value(), 0);
        assert_eq!(s_value(9, 0, 0, &f), Err(Error::IndexOutOfRange { index: 9, bound: 9 }));
    }

    #[test]
    fn ccc_matches_s_value() {
        let f = example_field();
        let set = build_ccc(&f);
        assert_eq!(set.params(), Params { s: 9, m: 9, length: 9, z: 9 });
        assert_eq!(set.order(), 3);
        for (k, code) in set.codes().iter().enumerate() {
            for (l, seq) in code.sequences().iter().enumerate() {
                for (i, &ph) in seq.phases().iter().enumerate() {
                    assert_eq!(ph, s_value(k, l, i, &f).unwrap().value());
                }
            }
        }
        assert!(set.codes()[0].sequences()[0].phases().iter().all(|&ph| ph == 0));
    }

    #[test]
    fn binary_ccc_shape() {
        let set = build_ccc(&FieldSpec::new(2, 1).unwrap());
        assert_eq!(set.params(), Params { s: 2, m: 2, length: 2, z: 2 });
        // a(0) = 0, a(1) = 1: Tr(a(i) a(l)) = i*l, and k.i = k*i.
        let phases: Vec<Vec<Vec<u32>>> = set
            .codes()
            .iter()
            .map(|c| c.sequences().iter().map(|s| s.phases().to_vec()).collect())
            .collect();
        assert_eq!(phases, vec![vec![vec![0, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 0]]]);
    }

    #[test]
    fn mixed_radix() {
        assert_eq!(decompose(0, 9, &[2]).unwrap(), MixedRadixIndex { inner: 0, digits: vec![0] });
        assert_eq!(decompose(17, 9, &[2]).unwrap(), MixedRadixIndex { inner: 8, digits: vec![1] });
        assert_eq!(decompose(10, 9, &[2]).unwrap(), MixedRadixIndex { inner: 1, digits: vec![1] });
        assert_eq!(decompose(18, 9, &[2]), Err(Error::IndexOutOfRange { index: 18, bound: 18 }));
        // 16 = 1 + 3*(1 + 2*2) with radices [2, 3]
        let idx = decompose(16, 3, &[2, 3]).unwrap();
        assert_eq!(idx, MixedRadixIndex { inner: 1, digits: vec![1, 2] });
        assert_eq!(compose(&idx, 3, &[2, 3]).unwrap(), 16);
        let bad = MixedRadixIndex { inner: 0, digits: vec![2] };
        assert!(matches!(compose(&bad, 9, &[2]), Err(Error::DigitOutOfRange { .. })));
    }

    #[test]
    fn g_values() {
        let f = example_field();
        assert_eq!(g_value(0, 0, &[1], 9, &f, &[2]).unwrap(), 3);
        for k in 0..9 {
            assert_eq!(g_value(k, 4, &[1], 0, &f, &[2]).unwrap(), 0);
            for i_prime in 0..18 {
                let s = s_value(k, 4, i_prime % 9, &f).unwrap().value();
                assert_eq!(g_value(k, 4, &[0], i_prime, &f, &[2]).unwrap(), s * 2);
            }
        }
        assert!(matches!(g_value(0, 0, &[2], 0, &f, &[2]), Err(Error::DigitOutOfRange { .. })));
        assert_eq!(g_value(0, 0, &[0], 0, &f, &[4]), Err(Error::NotPrime(4)));
    }

    #[test]
    fn zccs_matches_g_value() {
        let f = FieldSpec::new(2, 1).unwrap();
        let primes = [2, 3];
        let set = build_zccs(&f, &primes).unwrap();
        assert_eq!(set.params(), Params { s: 12, m: 2, length: 12, z: 2 });
        assert_eq!(set.order(), 6);
        for (index, code) in set.codes().iter().enumerate() {
            let (k, cbar) = (index % 2, index / 2);
            let c = [(cbar % 2) as u32, (cbar / 2) as u32];
            for (l, seq) in code.sequences().iter().enumerate() {
                for (i_prime, &ph) in seq.phases().iter().enumerate() {
                    assert_eq!(ph, g_value(k, l, &c, i_prime, &f, &primes).unwrap());
                }
            }
        }
    }

    #[test]
    fn zccs_rejects_bad_primes() {
        let f = example_field();
        assert_eq!(build_zccs(&f, &[]), Err(Error::EmptyPrimes));
        assert_eq!(build_zccs(&f, &[2, 6]), Err(Error::NotPrime(6)));
        // repeated primes keep L small
        assert_eq!(build_zccs(&FieldSpec::new(2, 1).unwrap(), &[2, 2]).unwrap().order(), 2);
    }

    #[test]
    fn codeset_validation() {
        let seq = |ph: Vec<u32>| PhaseSequence::new(2, ph).unwrap();
        assert_eq!(PhaseSequence::new(2, vec![0, 2]), Err(Error::PhaseOutOfRange { value: 2, order: 2 }));
        let code = Code::new(vec![seq(vec![0, 0]), seq(vec![0, 1])]).unwrap();
        assert!(Code::new(vec![seq(vec![0]), seq(vec![0, 1])]).is_err());
        let params = Params { s: 1, m: 2, length: 2, z: 2 };
        assert!(CodeSet::new(vec![code.clone()], params, None).is_ok());
        assert_eq!(
            CodeSet::new(vec![code.clone()], Params { s: 2, ..params }, None),
            Err(Error::ParamMismatch { field: "s", claimed: 2, actual: 1 })
        );
        assert!(CodeSet::new(vec![code], Params { z: 3, ..params }, None).is_err());
        assert!(CodeSet::new(vec![], params, None).is_err());
    }
}
