//! Prime-power finite fields `GF(p^k)` as polynomials over `GF(p)` modulo a
//! fixed monic irreducible polynomial.
//!
//! Elements carry their coefficient vector (constant term first). Each
//! element also has an integer index `sum c_i p^i`, which is how permutation
//! constructions label points.

use std::fmt;

use crate::algebra::{is_prime, prime_factors};
use crate::error::{Error, Result};

/// Largest field order the constructors accept.
pub const MAX_FIELD_ORDER: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    coeffs: Vec<u64>,
}

impl FieldElement {
    /// Coefficients over the prime field, constant term first, length `k`.
    pub fn coefficients(&self) -> &[u64] {
        &self.coeffs
    }
}

#[derive(Clone, Debug)]
pub struct Field {
    p: u64,
    k: usize,
    /// Monic modulus, constant term first, length `k + 1`.
    modulus: Vec<u64>,
    order: u64,
}

impl Field {
    /// `GF(p^k)` with the smallest monic irreducible modulus, ordering
    /// candidates by the index of their lower coefficients. For `GF(27)` this
    /// is `x^3 + 2x + 1`.
    pub fn new(p: u64, k: usize) -> Result<Self> {
        let order = check_params(p, k)?;
        if k == 1 {
            return Ok(Field {
                p,
                k,
                modulus: vec![0, 1],
                order,
            });
        }
        let modulus = (0..order)
            .map(|lower| {
                let mut m = digits(lower, p, k);
                m.push(1);
                m
            })
            .find(|m| is_irreducible(m, p))
            .ok_or_else(|| Error::Field(format!("no irreducible of degree {k} over GF({p})")))?;
        Ok(Field {
            p,
            k,
            modulus,
            order,
        })
    }

    /// `GF(p^k)` for an explicit monic modulus of degree `k`, constant term first.
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Self> {
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 {
            return Err(Error::Field("modulus must be monic of degree >= 1".into()));
        }
        let k = modulus.len() - 1;
        let order = check_params(p, k)?;
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::Field("modulus coefficient out of range".into()));
        }
        if !is_irreducible(&modulus, p) {
            return Err(Error::Field(format!(
                "{} is reducible over GF({p})",
                PolyDisplay(&modulus)
            )));
        }
        Ok(Field {
            p,
            k,
            modulus,
            order,
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn modulus_string(&self) -> String {
        PolyDisplay(&self.modulus).to_string()
    }

    pub fn element(&self, index: u64) -> FieldElement {
        assert!(index < self.order, "element index out of range");
        FieldElement {
            coeffs: digits(index, self.p, self.k),
        }
    }

    pub fn index(&self, e: &FieldElement) -> u64 {
        e.coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn from_coefficients(&self, coeffs: &[u64]) -> FieldElement {
        let mut poly: Vec<u64> = coeffs.iter().map(|c| c % self.p).collect();
        self.reduce(&mut poly);
        poly.resize(self.k, 0);
        FieldElement { coeffs: poly }
    }

    pub fn zero(&self) -> FieldElement {
        self.element(0)
    }

    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order).map(|i| self.element(i))
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| (x + y) % self.p)
                .collect(),
        }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        FieldElement {
            coeffs: a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect(),
        }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let mut prod = vec![0u64; 2 * self.k - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        self.reduce(&mut prod);
        prod.resize(self.k, 0);
        FieldElement { coeffs: prod }
    }

    pub fn pow(&self, a: &FieldElement, mut exp: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `a^(q-2)`; `None` for zero.
    pub fn inverse(&self, a: &FieldElement) -> Option<FieldElement> {
        if self.index(a) == 0 {
            None
        } else {
            Some(self.pow(a, self.order - 2))
        }
    }

    /// `a -> a^p`.
    pub fn frobenius(&self, a: &FieldElement) -> FieldElement {
        self.pow(a, self.p)
    }

    pub fn multiplicative_order(&self, a: &FieldElement) -> Option<u64> {
        if self.index(a) == 0 {
            return None;
        }
        let one = self.one();
        let mut d = self.order - 1;
        for r in prime_factors((self.order - 1) as u128) {
            while d.is_multiple_of(r) && self.pow(a, d / r) == one {
                d /= r;
            }
        }
        Some(d)
    }

    /// Generator of the multiplicative group with the smallest index.
    pub fn primitive_element(&self) -> FieldElement {
        let target = self.order - 1;
        (1..self.order)
            .map(|i| self.element(i))
            .find(|e| self.multiplicative_order(e) == Some(target))
            .expect("the multiplicative group of a finite field is cyclic")
    }

    /// Reduces a coefficient vector modulo the field polynomial in place.
    fn reduce(&self, poly: &mut Vec<u64>) {
        let k = self.k;
        while poly.len() > k {
            let lead = poly.pop().unwrap();
            if lead == 0 {
                continue;
            }
            let shift = poly.len() - k;
            for (i, &m) in self.modulus[..k].iter().enumerate() {
                let sub = lead * m % self.p;
                poly[shift + i] = (poly[shift + i] + self.p - sub) % self.p;
            }
        }
    }
}

fn check_params(p: u64, k: usize) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k == 0 {
        return Err(Error::Field("extension degree must be positive".into()));
    }
    let mut order = 1u64;
    for _ in 0..k {
        order = order
            .checked_mul(p)
            .filter(|&o| o <= MAX_FIELD_ORDER)
            .ok_or_else(|| Error::Field(format!("{p}^{k} exceeds {MAX_FIELD_ORDER}")))?;
    }
    Ok(order)
}

fn digits(mut n: u64, p: u64, k: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        out.push(n % p);
        n /= p;
    }
    out
}

fn trim(mut poly: Vec<u64>) -> Vec<u64> {
    while poly.len() > 1 && *poly.last().unwrap() == 0 {
        poly.pop();
    }
    poly
}

/// Remainder of `num` by the monic `den` over `GF(p)`.
fn poly_rem(num: &[u64], den: &[u64], p: u64) -> Vec<u64> {
    let d = den.len() - 1;
    let mut r = num.to_vec();
    while r.len() > d {
        let lead = *r.last().unwrap();
        if lead != 0 {
            let shift = r.len() - 1 - d;
            for (i, &c) in den.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - lead * c % p) % p;
            }
        }
        r.pop();
    }
    if r.is_empty() {
        r.push(0);
    }
    trim(r)
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for lower in 0..count {
            let mut cand = digits(lower, p, d);
            cand.push(1);
            let r = poly_rem(poly, &cand, p);
            if r.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

struct PolyDisplay<'a>(&'a [u64]);

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, _) => write!(f, "{c}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
