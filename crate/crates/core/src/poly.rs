//! Dense univariate polynomials over Z/p^r.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{RingElem, RingParams};
use crate::text;

/// A polynomial in Z/p^r[x]. Coefficients are stored lowest degree first with
/// no trailing zeros, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    ring: RingParams,
    coeffs: Vec<u64>,
}

impl Poly {
    pub fn zero(ring: RingParams) -> Self {
        Poly {
            ring,
            coeffs: Vec::new(),
        }
    }

    pub fn one(ring: RingParams) -> Self {
        Poly::constant(ring, 1)
    }

    pub fn constant(ring: RingParams, c: u64) -> Self {
        Poly::from_coeffs(ring, vec![c])
    }

    /// `c * x^degree`.
    pub fn monomial(ring: RingParams, c: u64, degree: usize) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c;
        Poly::from_coeffs(ring, coeffs)
    }

    pub fn x(ring: RingParams) -> Self {
        Poly::monomial(ring, 1, 1)
    }

    /// Builds a polynomial from coefficients ordered lowest degree first.
    pub fn from_coeffs(ring: RingParams, coeffs: Vec<u64>) -> Self {
        let mut poly = Poly {
            ring,
            coeffs: coeffs.into_iter().map(|c| c % ring.modulus()).collect(),
        };
        poly.trim();
        poly
    }

    pub fn from_signed(ring: RingParams, coeffs: &[i64]) -> Self {
        Poly::from_coeffs(
            ring,
            coeffs
                .iter()
                .map(|&c| ring.reduce_signed(c as i128))
                .collect(),
        )
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn ring(&self) -> RingParams {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, degree: usize) -> u64 {
        self.coeffs.get(degree).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<RingElem> {
        self.coeffs.last().map(|&c| self.ring.elem(c))
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    /// True when every coefficient is a digit in `{0, ..., p-1}`.
    pub fn has_digit_coeffs(&self) -> bool {
        self.coeffs.iter().all(|&c| c < self.ring.p())
    }

    /// Nonzero terms as `(degree, coefficient)`, lowest degree first.
    pub fn terms(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(d, &c)| (d, c))
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::MixedRings)
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.ring.add(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Poly::from_coeffs(self.ring, coeffs))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.ring.sub(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Poly::from_coeffs(self.ring, coeffs))
    }

    pub fn neg(&self) -> Poly {
        Poly {
            ring: self.ring,
            coeffs: self.coeffs.iter().map(|&c| self.ring.neg(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.ring));
        }
        let mut coeffs = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.terms() {
            for (j, b) in other.terms() {
                coeffs[i + j] = self.ring.add(coeffs[i + j], self.ring.mul(a, b));
            }
        }
        Ok(Poly::from_coeffs(self.ring, coeffs))
    }

    pub fn scale(&self, c: u64) -> Poly {
        Poly::from_coeffs(
            self.ring,
            self.coeffs.iter().map(|&a| self.ring.mul(a, c)).collect(),
        )
    }

    /// Multiplies by `x^shift`.
    pub fn shift(&self, shift: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; shift];
        coeffs.extend_from_slice(&self.coeffs);
        Poly {
            ring: self.ring,
            coeffs,
        }
    }

    /// Scales so the leading coefficient becomes 1.
    pub fn monic(&self) -> Result<Poly> {
        let lc = self.leading_coeff().ok_or(Error::ZeroVector)?;
        Ok(self.scale(lc.unit_inverse()?.value()))
    }

    pub fn parse(ring: RingParams, s: &str) -> Result<Poly> {
        text::parse_poly(ring, s)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_poly(self))
    }
}
