//! Arithmetic in the finite chain ring Z/p^r.
//!
//! Every element `a` has a unique p-adic expansion `a = t_0 + p t_1 + ... + p^{r-1} t_{r-1}`
//! with digits `t_i` in `{0, ..., p-1}`, and an *order* `k` such that the additive
//! subgroup generated by `a` has `p^k` elements. Units are exactly the elements of
//! order `r`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest prime accepted for `p`.
pub const MAX_PRIME: u64 = 1 << 16;

/// The ring Z/p^r.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RingSpec", into = "RingSpec")]
pub struct RingParams {
    p: u64,
    r: u32,
    modulus: u64,
}

#[derive(Serialize, Deserialize)]
struct RingSpec {
    p: u64,
    r: u32,
}

impl TryFrom<RingSpec> for RingParams {
    type Error = Error;

    fn try_from(spec: RingSpec) -> Result<Self> {
        RingParams::new(spec.p, spec.r)
    }
}

impl From<RingParams> for RingSpec {
    fn from(ring: RingParams) -> Self {
        RingSpec {
            p: ring.p,
            r: ring.r,
        }
    }
}

fn is_prime(n: u64) -> bool {
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

impl RingParams {
    pub fn new(p: u64, r: u32) -> Result<Self> {
        if p > MAX_PRIME {
            return Err(Error::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if r == 0 {
            return Err(Error::ZeroExponent);
        }
        let modulus = p.checked_pow(r).ok_or(Error::ModulusOverflow { p, r })?;
        Ok(RingParams { p, r, modulus })
    }

    /// Builds Z/n for a prime power `n = p^r`, factoring `n`.
    pub fn from_prime_power(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::NotPrimePower(n));
        }
        let mut p = 2;
        while p * p <= n && !n.is_multiple_of(p) {
            p += 1;
        }
        if !n.is_multiple_of(p) {
            // n itself is prime
            p = n;
        }
        let mut rest = n;
        let mut r = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            r += 1;
        }
        if rest != 1 {
            return Err(Error::NotPrimePower(n));
        }
        RingParams::new(p, r)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_field(&self) -> bool {
        self.r == 1
    }

    /// Wraps a residue, reducing it modulo p^r.
    pub fn elem(&self, value: u64) -> RingElem {
        RingElem {
            value: value % self.modulus,
            ring: *self,
        }
    }

    /// Reduces a signed integer into `[0, p^r)`.
    pub fn reduce_signed(&self, value: i128) -> u64 {
        value.rem_euclid(self.modulus as i128) as u64
    }

    pub fn zero(&self) -> RingElem {
        self.elem(0)
    }

    pub fn one(&self) -> RingElem {
        self.elem(1)
    }

    /// Iterates over the digit set `{0, ..., p-1}`.
    pub fn digits(&self) -> impl Iterator<Item = u64> {
        0..self.p
    }

    pub(crate) fn add(&self, a: u64, b: u64) -> u64 {
        ((a as u128 + b as u128) % self.modulus as u128) as u64
    }

    pub(crate) fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.modulus - (b - a)
        }
    }

    pub(crate) fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    pub(crate) fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.modulus as u128) as u64
    }

    /// `p^k` reduced modulo p^r (zero once `k >= r`).
    pub(crate) fn p_pow(&self, k: u32) -> u64 {
        if k >= self.r {
            0
        } else {
            self.p.pow(k)
        }
    }

    /// Largest `v` with `p^v | a`; `r` for zero.
    pub(crate) fn valuation(&self, a: u64) -> u32 {
        if a == 0 {
            return self.r;
        }
        let mut v = 0;
        let mut a = a;
        while a.is_multiple_of(self.p) {
            a /= self.p;
            v += 1;
        }
        v
    }

    pub(crate) fn order_of(&self, a: u64) -> u32 {
        self.r - self.valuation(a)
    }

    pub(crate) fn inverse(&self, a: u64) -> Result<u64> {
        let a = a % self.modulus;
        if self.valuation(a) != 0 {
            return Err(Error::NotAUnit(a));
        }
        // extended Euclid on (a, p^r)
        let (mut old_r, mut rem) = (a as i128, self.modulus as i128);
        let (mut old_s, mut s) = (1i128, 0i128);
        while rem != 0 {
            let quot = old_r / rem;
            (old_r, rem) = (rem, old_r - quot * rem);
            (old_s, s) = (s, old_s - quot * s);
        }
        debug_assert_eq!(old_r, 1);
        Ok(self.reduce_signed(old_s))
    }

    /// Splits a nonzero `a` as `u * p^v` and returns `u^{-1}`, a unit with
    /// `a * u^{-1} = p^v`.
    pub(crate) fn normalizing_unit(&self, a: u64) -> u64 {
        let v = self.valuation(a);
        let unit_part = a / self.p.pow(v);
        self.inverse(unit_part)
            .expect("quotient by the p-part is coprime to p")
    }

    pub(crate) fn expand(&self, a: u64) -> Vec<u64> {
        let mut a = a % self.modulus;
        (0..self.r)
            .map(|_| {
                let digit = a % self.p;
                a /= self.p;
                digit
            })
            .collect()
    }
}

impl fmt::Display for RingParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{} (p={}, r={})", self.modulus, self.p, self.r)
    }
}

/// A residue in Z/p^r, always held in canonical form `[0, p^r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingElem {
    value: u64,
    ring: RingParams,
}

impl RingElem {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn ring(&self) -> RingParams {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_unit(&self) -> bool {
        self.ord() == self.ring.r
    }

    /// The order `r - v_p(a)`; zero has order 0.
    pub fn ord(&self) -> u32 {
        self.ring.order_of(self.value)
    }

    /// Digits `(t_0, ..., t_{r-1})` with `a = sum p^i t_i`.
    pub fn p_adic_expand(&self) -> Vec<u64> {
        self.ring.expand(self.value)
    }

    /// Recomposes an element from its p-adic digits. Digits are not range checked.
    pub fn from_digits(ring: RingParams, digits: &[u64]) -> RingElem {
        let value = digits
            .iter()
            .rev()
            .fold(0u64, |acc, &d| ring.add(ring.mul(acc, ring.p), d));
        ring.elem(value)
    }

    pub fn unit_inverse(&self) -> Result<RingElem> {
        Ok(self.ring.elem(self.ring.inverse(self.value)?))
    }

    fn same_ring(&self, other: &RingElem) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::MixedRings)
        }
    }

    pub fn try_add(&self, other: &RingElem) -> Result<RingElem> {
        self.same_ring(other)?;
        Ok(self.ring.elem(self.ring.add(self.value, other.value)))
    }

    pub fn try_sub(&self, other: &RingElem) -> Result<RingElem> {
        self.same_ring(other)?;
        Ok(self.ring.elem(self.ring.sub(self.value, other.value)))
    }

    pub fn try_mul(&self, other: &RingElem) -> Result<RingElem> {
        self.same_ring(other)?;
        Ok(self.ring.elem(self.ring.mul(self.value, other.value)))
    }

    pub fn neg(&self) -> RingElem {
        self.ring.elem(self.ring.neg(self.value))
    }

    pub fn pow(&self, mut exp: u64) -> RingElem {
        let mut base = self.value;
        let mut acc = 1 % self.ring.modulus;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.ring.mul(acc, base);
            }
            base = self.ring.mul(base, base);
            exp >>= 1;
        }
        self.ring.elem(acc)
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
