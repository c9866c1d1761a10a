//! Arithmetic in GF(p^r) realized as `Z_p[x]/(f)` for a monic irreducible `f`.
//!
//! Polynomials and field elements are coefficient vectors with the constant
//! term first. An element's canonical integer encoding is
//! `sum(coeffs[j] * p^j)`, a bijection onto `[0, q)`.
//!
//! Irreducibility and primitivity are decided exhaustively (trial division,
//! order checks over the divisors of `q - 1`), which is plenty for fields
//! with at most a few hundred elements.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Upper bound on `q`; the constructions and the exhaustive searches here
/// are meant for small fields.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn check_field_size(p: u32, r: u32) -> Result<usize> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if r == 0 {
        return Err(Error::ZeroDegree);
    }
    let q = (p as u64)
        .checked_pow(r)
        .filter(|&q| q <= MAX_FIELD_ORDER)
        .ok_or(Error::FieldTooLarge { p, r })?;
    Ok(q as usize)
}

/// Strips trailing zero coefficients.
fn trim(poly: &mut Vec<u32>) {
    while poly.last() == Some(&0) {
        poly.pop();
    }
}

/// Remainder of `a` modulo the monic polynomial `divisor`, over `Z_p`.
fn rem_monic(a: &[u32], divisor: &[u32], p: u32) -> Vec<u32> {
    let p = p as u64;
    let dd = divisor.len() - 1;
    let mut rem: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    while rem.len() > dd {
        let lead = rem.pop().unwrap() % p;
        if lead == 0 {
            continue;
        }
        let base = rem.len() - dd;
        for (j, &dc) in divisor[..dd].iter().enumerate() {
            let sub = lead * dc as u64 % p;
            rem[base + j] = (rem[base + j] + p - sub) % p;
        }
    }
    let mut out: Vec<u32> = rem.into_iter().map(|c| (c % p) as u32).collect();
    trim(&mut out);
    out
}

fn inverse_mod(a: u32, p: u32) -> u32 {
    // Fermat; p is prime and small.
    let (mut base, mut exp, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    acc as u32
}

/// Decides irreducibility over `Z_p` by trial division with every monic
/// polynomial of degree `1..=deg/2`.
///
/// Coefficients are constant-term first. A non-monic input is scaled to
/// monic first; constants and the zero polynomial are not irreducible.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let mut f: Vec<u32> = poly.iter().map(|&c| c % p).collect();
    trim(&mut f);
    if f.len() < 2 {
        return false;
    }
    let lead = *f.last().unwrap();
    if lead != 1 {
        let inv = inverse_mod(lead, p) as u64;
        for c in f.iter_mut() {
            *c = (*c as u64 * inv % p as u64) as u32;
        }
    }
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        let mut divisor = vec![0u32; d + 1];
        divisor[d] = 1;
        for n in 0..count {
            let mut rest = n;
            for c in divisor[..d].iter_mut() {
                *c = (rest % p as u64) as u32;
                rest /= p as u64;
            }
            if rem_monic(&f, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible polynomial of degree `r`
/// over `Z_p`, comparing coefficient tuples constant term first.
pub fn find_irreducible(p: u32, r: u32) -> Result<Vec<u32>> {
    let q = check_field_size(p, r)?;
    let r = r as usize;
    let mut poly = vec![0u32; r + 1];
    poly[r] = 1;
    for n in 0..q {
        // c0 is the most significant position of the lexicographic order.
        let mut rest = n;
        for c in poly[..r].iter_mut().rev() {
            *c = (rest % p as usize) as u32;
            rest /= p as usize;
        }
        if is_irreducible(&poly, p) {
            return Ok(poly);
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over Z_p")
}

/// An element of GF(p^r): `r` coefficients in `[0, p)`, constant first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    coeffs: Vec<u32>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Canonical integer encoding `sum(coeffs[j] * p^j)`.
    pub fn encode(&self, p: u32) -> usize {
        self.coeffs
            .iter()
            .rev()
            .fold(0usize, |acc, &c| acc * p as usize + c as usize)
    }
}

/// Base-`p` digit vector `(k_1, ..., k_r)` of an index `k = sum(k_i p^(i-1))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexVector {
    digits: Vec<u32>,
}

impl IndexVector {
    pub fn from_index(k: usize, p: u32, r: u32) -> Result<Self> {
        let q = check_field_size(p, r)?;
        if k >= q {
            return Err(Error::IndexOutOfRange { index: k, bound: q });
        }
        let mut rest = k;
        let digits = (0..r)
            .map(|_| {
                let d = (rest % p as usize) as u32;
                rest /= p as usize;
                d
            })
            .collect();
        Ok(Self { digits })
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn index(&self, p: u32) -> usize {
        self.digits
            .iter()
            .rev()
            .fold(0usize, |acc, &d| acc * p as usize + d as usize)
    }

    /// Dot product of the digit vectors, reduced mod `p`.
    pub fn dot(&self, other: &IndexVector, p: u32) -> u32 {
        let sum: u64 = self
            .digits
            .iter()
            .zip(&other.digits)
            .map(|(&a, &b)| a as u64 * b as u64)
            .sum();
        (sum % p as u64) as u32
    }
}

/// A concrete GF(p^r): characteristic, degree, irreducible modulus and a
/// primitive element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    p: u32,
    r: u32,
    q: usize,
    modulus: Vec<u32>,
    alpha: FieldElement,
}

impl FieldSpec {
    /// The default realization: smallest irreducible modulus and the
    /// smallest-encoding primitive element.
    pub fn new(p: u32, r: u32) -> Result<Self> {
        let modulus = find_irreducible(p, r)?;
        Self::with_modulus(p, modulus, None)
    }

    /// Builds the field over an explicit modulus (constant first, monic
    /// leading 1 included). `alpha` defaults to [`find_primitive`].
    pub fn with_modulus(p: u32, modulus: Vec<u32>, alpha: Option<Vec<u32>>) -> Result<Self> {
        if modulus.len() < 2 {
            return Err(Error::ModulusDegree { expected: 1, found: modulus.len().saturating_sub(1) });
        }
        let r = (modulus.len() - 1) as u32;
        let q = check_field_size(p, r)?;
        if let Some(&bad) = modulus.iter().find(|&&c| c >= p) {
            return Err(Error::CoefficientOutOfRange { value: bad, p });
        }
        if modulus[r as usize] != 1 {
            return Err(Error::ModulusNotMonic);
        }
        if !is_irreducible(&modulus, p) {
            return Err(Error::Reducible);
        }
        let mut spec = FieldSpec { p, r, q, modulus, alpha: FieldElement { coeffs: vec![0; r as usize] } };
        spec.alpha = match alpha {
            Some(coeffs) => {
                let a = spec.element(coeffs)?;
                let order = if a.is_zero() { 0 } else { spec.element_order(&a)? };
                if order != (q - 1) as u64 {
                    return Err(Error::NotPrimitive { order, expected: (q - 1) as u64 });
                }
                a
            }
            None => spec.primitive_search(),
        };
        Ok(spec)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn alpha(&self) -> &FieldElement {
        &self.alpha
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { coeffs: vec![0; self.r as usize] }
    }

    pub fn one(&self) -> FieldElement {
        self.constant(1)
    }

    /// The prime-subfield element `c mod p`.
    pub fn constant(&self, c: u32) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = c % self.p;
        e
    }

    /// Validates a coefficient vector as an element of this field.
    pub fn element(&self, coeffs: Vec<u32>) -> Result<FieldElement> {
        if coeffs.len() != self.r as usize {
            return Err(Error::ElementLength { expected: self.r as usize, found: coeffs.len() });
        }
        if let Some(&bad) = coeffs.iter().find(|&&c| c >= self.p) {
            return Err(Error::CoefficientOutOfRange { value: bad, p: self.p });
        }
        Ok(FieldElement { coeffs })
    }

    /// Inverse of [`FieldElement::encode`].
    pub fn decode(&self, n: usize) -> Result<FieldElement> {
        if n >= self.q {
            return Err(Error::IndexOutOfRange { index: n, bound: self.q });
        }
        let mut rest = n;
        let coeffs = (0..self.r)
            .map(|_| {
                let c = (rest % self.p as usize) as u32;
                rest /= self.p as usize;
                c
            })
            .collect();
        Ok(FieldElement { coeffs })
    }

    /// All field elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(move |n| self.decode(n).expect("n < q"))
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| (x + y) % self.p).collect();
        FieldElement { coeffs }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        let coeffs = a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect();
        FieldElement { coeffs }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let r = self.r as usize;
        let p = self.p as u64;
        let mut prod = vec![0u64; 2 * r - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // x^r = -(m_0 + m_1 x + ... + m_{r-1} x^{r-1})
        for top in (r..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            for (j, &m) in self.modulus[..r].iter().enumerate() {
                let idx = top - r + j;
                prod[idx] = (prod[idx] + p - c * m as u64 % p) % p;
            }
        }
        FieldElement { coeffs: prod[..r].iter().map(|&c| c as u32).collect() }
    }

    pub fn pow(&self, a: &FieldElement, mut exp: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative order: the smallest divisor `t` of `q - 1` with `x^t = 1`.
    pub fn element_order(&self, x: &FieldElement) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::ZeroElement);
        }
        let group = (self.q - 1) as u64;
        let one = self.one();
        let order = (1..=group)
            .filter(|t| group.is_multiple_of(*t))
            .find(|&t| self.pow(x, t) == one)
            .expect("x^(q-1) = 1 for every nonzero x");
        Ok(order)
    }

    fn primitive_search(&self) -> FieldElement {
        let group = (self.q - 1) as u64;
        self.elements()
            .skip(1)
            .find(|x| self.element_order(x) == Ok(group))
            .expect("the multiplicative group of a finite field is cyclic")
    }

    /// Absolute trace `c + c^p + ... + c^(p^(r-1))`, returned as its value
    /// in the prime subfield.
    pub fn trace(&self, c: &FieldElement) -> u32 {
        let mut acc = self.zero();
        let mut conj = c.clone();
        for _ in 0..self.r {
            acc = self.add(&acc, &conj);
            conj = self.pow(&conj, self.p as u64);
        }
        debug_assert!(acc.coeffs[1..].iter().all(|&x| x == 0), "trace left the prime subfield");
        acc.coeffs[0]
    }

    /// The index map: `a(0) = 0` and `a(i) = alpha^(i-1)` for `0 < i < q`.
    pub fn index_to_element(&self, i: usize) -> Result<FieldElement> {
        match i {
            0 => Ok(self.zero()),
            i if i < self.q => Ok(self.pow(&self.alpha, (i - 1) as u64)),
            _ => Err(Error::IndexOutOfRange { index: i, bound: self.q }),
        }
    }

    /// `[a(0), a(1), ..., a(q-1)]` computed by repeated multiplication.
    pub fn index_table(&self) -> Vec<FieldElement> {
        let mut table = Vec::with_capacity(self.q);
        table.push(self.zero());
        let mut power = self.one();
        for _ in 1..self.q {
            let next = self.mul(&power, &self.alpha);
            table.push(core::mem::replace(&mut power, next));
        }
        table
    }
}

/// The smallest-encoding element of order `q - 1` in `Z_p[x]/(modulus)`.
pub fn find_primitive(p: u32, modulus: &[u32]) -> Result<FieldElement> {
    Ok(FieldSpec::with_modulus(p, modulus.to_vec(), None)?.alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_field() -> FieldSpec {
        FieldSpec::with_modulus(3, vec![2, 1, 1], Some(vec![0, 1])).unwrap()
    }

    #[test]
    fn smallest_irreducibles() {
        assert_eq!(find_irreducible(3, 1).unwrap(), vec![0, 1]);
        assert_eq!(find_irreducible(2, 2).unwrap(), vec![1, 1, 1]);
        assert_eq!(find_irreducible(3, 2).unwrap(), vec![1, 0, 1]);
        assert_eq!(find_irreducible(2, 3).unwrap(), vec![1, 0, 1, 1]);
        assert_eq!(find_irreducible(4, 2), Err(Error::NotPrime(4)));
        assert_eq!(find_irreducible(3, 0), Err(Error::ZeroDegree));
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible(&[2, 1, 1], 3));
        assert!(!is_irreducible(&[0, 0, 1], 3));
        assert!(!is_irreducible(&[1, 0, 1], 2));
        assert!(is_irreducible(&[1, 1], 2));
        assert!(!is_irreducible(&[1], 5));
        // 2x^2 + 2x + 1 is 2 * (x^2 + x + 2) over Z_3
        assert!(is_irreducible(&[1, 2, 2], 3));
    }

    #[test]
    fn example_field_arithmetic() {
        let f = example_field();
        let alpha = f.alpha().clone();
        assert_eq!(f.mul(&f.zero(), &alpha), f.zero());
        assert_eq!(f.mul(&alpha, &alpha).coeffs(), &[1, 2]);
        assert_eq!(f.pow(&alpha, 8), f.one());
        assert_eq!(f.pow(&alpha, 3).coeffs(), &[2, 2]);
        let sum = f.add(&alpha, &f.neg(&alpha));
        assert!(sum.is_zero());
    }

    #[test]
    fn orders() {
        let f = example_field();
        assert_eq!(f.element_order(&f.one()), Ok(1));
        assert_eq!(f.element_order(f.alpha()), Ok(8));
        assert_eq!(f.element_order(&f.constant(2)), Ok(2));
        assert_eq!(f.element_order(&f.zero()), Err(Error::ZeroElement));
    }

    #[test]
    fn primitive_defaults() {
        assert_eq!(FieldSpec::new(3, 1).unwrap().alpha().coeffs(), &[2]);
        assert_eq!(FieldSpec::new(2, 1).unwrap().alpha().coeffs(), &[1]);
        assert_eq!(find_primitive(3, &[2, 1, 1]).unwrap().coeffs(), &[0, 1]);
        // x has order 4 under x^2 + 1, so the search moves on to x + 1
        assert_eq!(FieldSpec::new(3, 2).unwrap().alpha().coeffs(), &[1, 1]);
    }

    #[test]
    fn traces() {
        let f = example_field();
        assert_eq!(f.trace(&f.zero()), 0);
        assert_eq!(f.trace(&f.one()), 2);
        assert_eq!(f.trace(f.alpha()), 2);
        let prime = FieldSpec::new(5, 1).unwrap();
        assert_eq!(prime.trace(&prime.constant(3)), 3);
    }

    #[test]
    fn index_map() {
        let f = example_field();
        assert!(f.index_to_element(0).unwrap().is_zero());
        assert_eq!(f.index_to_element(1).unwrap(), f.one());
        assert_eq!(f.index_to_element(4).unwrap().coeffs(), &[2, 2]);
        assert_eq!(f.index_to_element(9), Err(Error::IndexOutOfRange { index: 9, bound: 9 }));
        let table = f.index_table();
        for (i, e) in table.iter().enumerate() {
            assert_eq!(&f.index_to_element(i).unwrap(), e);
        }
    }

    #[test]
    fn override_validation() {
        assert_eq!(FieldSpec::with_modulus(3, vec![0, 0, 1], None), Err(Error::Reducible));
        assert_eq!(FieldSpec::with_modulus(3, vec![2, 1, 2], None), Err(Error::ModulusNotMonic));
        assert_eq!(
            FieldSpec::with_modulus(3, vec![1, 0, 1], Some(vec![0, 1])),
            Err(Error::NotPrimitive { order: 4, expected: 8 })
        );
        assert_eq!(
            FieldSpec::with_modulus(3, vec![2, 1, 1], Some(vec![0, 3])),
            Err(Error::CoefficientOutOfRange { value: 3, p: 3 })
        );
        assert_eq!(
            FieldSpec::with_modulus(3, vec![2, 1, 1], Some(vec![0, 0])),
            Err(Error::NotPrimitive { order: 0, expected: 8 })
        );
        assert!(matches!(FieldSpec::new(2, 40), Err(Error::FieldTooLarge { .. })));
    }

    #[test]
    fn index_vectors() {
        let k = IndexVector::from_index(7, 3, 2).unwrap();
        assert_eq!(k.digits(), &[1, 2]);
        assert_eq!(k.index(3), 7);
        let i = IndexVector::from_index(5, 3, 2).unwrap();
        assert_eq!(k.dot(&i, 3), (2 + 2) % 3);
        assert!(IndexVector::from_index(9, 3, 2).is_err());
    }
}
