//! Polynomial vectors in Z/p^r[x]^q, monomials `x^alpha e_i`, and the two
//! positional term orders.
//!
//! Terms are stored sparsely keyed by `(position, exponent)`. The order is not
//! part of the storage; leading data is always requested relative to an order,
//! so one vector can be inspected under TOP and POT alike.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::{RingElem, RingParams};
use crate::text;

/// The monomial `x^alpha e_pos`. Positions are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub alpha: usize,
    pub pos: usize,
}

impl Monomial {
    pub fn new(alpha: usize, pos: usize) -> Self {
        Monomial { alpha, pos }
    }

    /// `x^shift` times this monomial.
    pub fn shifted(self, shift: usize) -> Self {
        Monomial {
            alpha: self.alpha + shift,
            pos: self.pos,
        }
    }

    /// True when `x^k * self == other` for some `k >= 0`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.pos == other.pos && self.alpha <= other.alpha
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.alpha {
            0 => write!(f, "e{}", self.pos),
            1 => write!(f, "x*e{}", self.pos),
            a => write!(f, "x^{}*e{}", a, self.pos),
        }
    }
}

/// Positional term orders on monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// Term over position: degree first, then the lower position index wins.
    #[serde(rename = "TOP")]
    Top,
    /// Position over term: the lower position index wins, then degree.
    #[serde(rename = "POT")]
    Pot,
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Top => a.alpha.cmp(&b.alpha).then(b.pos.cmp(&a.pos)),
            MonomialOrder::Pot => b.pos.cmp(&a.pos).then(a.alpha.cmp(&b.alpha)),
        }
    }

    /// `compare` with both monomials checked against the ambient dimension `q`.
    pub fn compare_in(&self, q: usize, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        for m in [a, b] {
            if m.pos == 0 || m.pos > q {
                return Err(Error::PositionOutOfRange { pos: m.pos, q });
            }
        }
        Ok(self.compare(a, b))
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.compare(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonomialOrder::Top => "TOP",
            MonomialOrder::Pot => "POT",
        })
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "top" => Ok(MonomialOrder::Top),
            "pot" => Ok(MonomialOrder::Pot),
            _ => Err(Error::Parse(format!("unknown monomial order `{s}`"))),
        }
    }
}

/// Leading term of a nonzero vector under some order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lead {
    pub monomial: Monomial,
    pub coeff: u64,
}

/// An element of Z/p^r[x]^q.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyVec {
    ring: RingParams,
    q: usize,
    // (pos, alpha) -> nonzero coefficient
    terms: BTreeMap<(usize, usize), u64>,
}

impl PolyVec {
    pub fn zero(ring: RingParams, q: usize) -> Self {
        PolyVec {
            ring,
            q,
            terms: BTreeMap::new(),
        }
    }

    /// The single-term vector `c * m`.
    pub fn term(ring: RingParams, q: usize, c: u64, m: Monomial) -> Result<Self> {
        let mut v = PolyVec::zero(ring, q);
        v.check_pos(m.pos)?;
        v.add_term(m, c);
        Ok(v)
    }

    pub fn from_components(ring: RingParams, components: &[Poly]) -> Result<Self> {
        let mut v = PolyVec::zero(ring, components.len());
        for (i, comp) in components.iter().enumerate() {
            if comp.ring() != ring {
                return Err(Error::MixedRings);
            }
            for (alpha, c) in comp.terms() {
                v.terms.insert((i + 1, alpha), c);
            }
        }
        Ok(v)
    }

    fn check_pos(&self, pos: usize) -> Result<()> {
        if pos == 0 || pos > self.q {
            Err(Error::PositionOutOfRange { pos, q: self.q })
        } else {
            Ok(())
        }
    }

    pub fn ring(&self) -> RingParams {
        self.ring
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> u64 {
        self.terms.get(&(m.pos, m.alpha)).copied().unwrap_or(0)
    }

    /// All terms in storage order (by position, then exponent).
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, u64)> + '_ {
        self.terms
            .iter()
            .map(|(&(pos, alpha), &c)| (Monomial { alpha, pos }, c))
    }

    /// Terms sorted from largest to smallest monomial under `order`.
    pub fn terms_desc(&self, order: MonomialOrder) -> Vec<(Monomial, RingElem)> {
        let mut terms: Vec<_> = self.terms().map(|(m, c)| (m, self.ring.elem(c))).collect();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        terms
    }

    /// The largest monomial of this vector strictly below `bound`.
    pub(crate) fn next_below(
        &self,
        order: MonomialOrder,
        bound: &Monomial,
    ) -> Option<(Monomial, u64)> {
        self.terms()
            .filter(|(m, _)| order.compare(m, bound) == Ordering::Less)
            .max_by(|a, b| order.compare(&a.0, &b.0))
    }

    pub fn component(&self, pos: usize) -> Poly {
        let len = self
            .terms
            .range((pos, 0)..(pos + 1, 0))
            .map(|(&(_, a), _)| a + 1)
            .max()
            .unwrap_or(0);
        let mut coeffs = vec![0; len];
        for (&(_, alpha), &c) in self.terms.range((pos, 0)..(pos + 1, 0)) {
            coeffs[alpha] = c;
        }
        Poly::from_coeffs(self.ring, coeffs)
    }

    pub fn components(&self) -> Vec<Poly> {
        (1..=self.q).map(|i| self.component(i)).collect()
    }

    /// Largest degree over all components.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(|&(_, a)| a).max()
    }

    pub fn leading(&self, order: MonomialOrder) -> Option<Lead> {
        self.terms()
            .max_by(|a, b| order.compare(&a.0, &b.0))
            .map(|(monomial, coeff)| Lead { monomial, coeff })
    }

    fn lead_or_err(&self, order: MonomialOrder) -> Result<Lead> {
        self.leading(order).ok_or(Error::ZeroVector)
    }

    pub fn lm(&self, order: MonomialOrder) -> Result<Monomial> {
        Ok(self.lead_or_err(order)?.monomial)
    }

    pub fn lt(&self, order: MonomialOrder) -> Result<(RingElem, Monomial)> {
        let lead = self.lead_or_err(order)?;
        Ok((self.ring.elem(lead.coeff), lead.monomial))
    }

    pub fn lc(&self, order: MonomialOrder) -> Result<RingElem> {
        Ok(self.ring.elem(self.lead_or_err(order)?.coeff))
    }

    pub fn lpos(&self, order: MonomialOrder) -> Result<usize> {
        Ok(self.lead_or_err(order)?.monomial.pos)
    }

    pub fn deg(&self, order: MonomialOrder) -> Result<usize> {
        Ok(self.lead_or_err(order)?.monomial.alpha)
    }

    /// Order of the leading coefficient.
    pub fn ord(&self, order: MonomialOrder) -> Result<u32> {
        Ok(self.ring.order_of(self.lead_or_err(order)?.coeff))
    }

    fn check_compatible(&self, other: &PolyVec) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::MixedRings);
        }
        if self.q != other.q {
            return Err(Error::DimensionMismatch {
                expected: self.q,
                found: other.q,
            });
        }
        Ok(())
    }

    fn add_term(&mut self, m: Monomial, c: u64) {
        let c = c % self.ring.modulus();
        if c == 0 {
            return;
        }
        let key = (m.pos, m.alpha);
        let sum = self.ring.add(self.terms.get(&key).copied().unwrap_or(0), c);
        if sum == 0 {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, sum);
        }
    }

    /// `self += c * x^shift * other`, with compatibility already established.
    pub(crate) fn add_scaled_shifted(&mut self, c: u64, shift: usize, other: &PolyVec) {
        if c.is_multiple_of(self.ring.modulus()) {
            return;
        }
        for (m, a) in other.terms() {
            self.add_term(m.shifted(shift), self.ring.mul(a, c));
        }
    }

    pub fn add(&self, other: &PolyVec) -> Result<PolyVec> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        out.add_scaled_shifted(1, 0, other);
        Ok(out)
    }

    pub fn sub(&self, other: &PolyVec) -> Result<PolyVec> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        out.add_scaled_shifted(self.ring.neg(1), 0, other);
        Ok(out)
    }

    pub fn neg(&self) -> PolyVec {
        self.scale(self.ring.neg(1))
    }

    /// Multiplies by the scalar residue `c`.
    pub fn scale(&self, c: u64) -> PolyVec {
        let mut out = PolyVec::zero(self.ring, self.q);
        out.add_scaled_shifted(c, 0, self);
        out
    }

    pub fn scale_elem(&self, c: &RingElem) -> Result<PolyVec> {
        if c.ring() != self.ring {
            return Err(Error::MixedRings);
        }
        Ok(self.scale(c.value()))
    }

    /// Multiplies by `x^shift`.
    pub fn shift(&self, shift: usize) -> PolyVec {
        PolyVec {
            ring: self.ring,
            q: self.q,
            terms: self
                .terms
                .iter()
                .map(|(&(pos, alpha), &c)| ((pos, alpha + shift), c))
                .collect(),
        }
    }

    /// Multiplies by the scalar polynomial `a`.
    pub fn shift_mul(&self, a: &Poly) -> Result<PolyVec> {
        if a.ring() != self.ring {
            return Err(Error::MixedRings);
        }
        let mut out = PolyVec::zero(self.ring, self.q);
        for (k, c) in a.terms() {
            out.add_scaled_shifted(c, k, self);
        }
        Ok(out)
    }

    /// `sum a_i v_i` for scalar polynomial coefficients.
    pub fn combination(
        ring: RingParams,
        q: usize,
        coeffs: &[Poly],
        vectors: &[PolyVec],
    ) -> Result<PolyVec> {
        if coeffs.len() != vectors.len() {
            return Err(Error::DimensionMismatch {
                expected: vectors.len(),
                found: coeffs.len(),
            });
        }
        let mut out = PolyVec::zero(ring, q);
        for (a, v) in coeffs.iter().zip(vectors) {
            out.check_compatible(v)?;
            out = out.add(&v.shift_mul(a)?)?;
        }
        Ok(out)
    }

    pub fn parse(ring: RingParams, s: &str) -> Result<PolyVec> {
        text::parse_vector(ring, s)
    }
}

impl fmt::Display for PolyVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_vector(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use MonomialOrder::{Pot, Top};

    fn z9() -> RingParams {
        RingParams::new(3, 2).unwrap()
    }

    fn m(alpha: usize, pos: usize) -> Monomial {
        Monomial::new(alpha, pos)
    }

    #[test]
    fn compare_examples() {
        assert_eq!(Top.compare(&m(4, 2), &m(0, 1)), Ordering::Greater);
        assert_eq!(Top.compare(&m(2, 1), &m(2, 2)), Ordering::Greater);
        assert_eq!(Pot.compare(&m(5, 2), &m(0, 1)), Ordering::Less);
        assert_eq!(Pot.compare(&m(3, 2), &m(3, 2)), Ordering::Equal);
        assert_eq!(
            Top.compare_in(2, &m(0, 3), &m(0, 1)),
            Err(Error::PositionOutOfRange { pos: 3, q: 2 })
        );
    }

    #[test]
    fn order_is_multiplicative_on_small_grid() {
        let monos: Vec<_> = (0..5).flat_map(|a| (1..=3).map(move |p| m(a, p))).collect();
        for order in [Top, Pot] {
            for x in &monos {
                for y in &monos {
                    let base = order.compare(x, y);
                    assert_eq!(base == Ordering::Equal, x == y);
                    assert_eq!(order.compare(y, x), base.reverse());
                    for g in 0..4 {
                        assert_eq!(order.compare(&x.shifted(g), &y.shifted(g)), base);
                    }
                }
            }
        }
    }

    #[test]
    fn leading_data_example_rows() {
        let ring = z9();
        let f = PolyVec::parse(ring, "[8, x^5+4x^4+4x^3+7x^2+7x]").unwrap();
        assert_eq!(f.lm(Top).unwrap(), m(5, 2));
        assert_eq!(f.lc(Top).unwrap().value(), 1);
        assert_eq!(f.lpos(Top).unwrap(), 2);
        assert_eq!(f.deg(Top).unwrap(), 5);
        assert_eq!(f.ord(Top).unwrap(), 2);

        let g = PolyVec::parse(ring, "[x^2+3x+2, x^2+4x]").unwrap();
        assert_eq!(g.lm(Top).unwrap(), m(2, 1));

        let h = PolyVec::parse(ring, "[x+5, 3x^4+3x^2+x]").unwrap();
        assert_eq!(h.ord(Top).unwrap(), 1);
        assert_eq!(h.lt(Top).unwrap(), (ring.elem(3), m(4, 2)));

        let s1 = PolyVec::parse(ring, "[1, -x^5-4x^4-4x^3-7x^2-7x]").unwrap();
        assert_eq!(s1.lpos(Pot).unwrap(), 1);
        assert_eq!(s1.deg(Pot).unwrap(), 0);

        let monic = PolyVec::parse(ring, "[x^3+2]").unwrap();
        assert_eq!(monic.ord(Top).unwrap(), ring.r());

        assert_eq!(PolyVec::zero(ring, 2).lm(Top), Err(Error::ZeroVector));
    }

    #[test]
    fn arithmetic_examples() {
        let ring = z9();
        let f = PolyVec::parse(ring, "[x+5, 3x^4+3x^2+x]").unwrap();
        assert_eq!(f.scale(3), PolyVec::parse(ring, "[3x+6, 3x]").unwrap());
        assert!(f.add(&f.neg()).unwrap().is_zero());
        let v = PolyVec::parse(ring, "[1, x]").unwrap();
        assert_eq!(
            v.shift_mul(&Poly::monomial(ring, 1, 2)).unwrap(),
            PolyVec::parse(ring, "[x^2, x^3]").unwrap()
        );
        let other_ring = PolyVec::parse(RingParams::new(5, 1).unwrap(), "[1, x]").unwrap();
        assert_eq!(v.add(&other_ring), Err(Error::MixedRings));
        let wide = PolyVec::parse(ring, "[1, x, 1]").unwrap();
        assert!(matches!(v.add(&wide), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn components_round_trip() {
        let ring = z9();
        let f = PolyVec::parse(ring, "[0, x^3+2, 5x]").unwrap();
        let back = PolyVec::from_components(ring, &f.components()).unwrap();
        assert_eq!(back, f);
        assert!(f.component(1).is_zero());
    }
}
