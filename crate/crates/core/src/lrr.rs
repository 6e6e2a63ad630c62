//! Shortest linear recurrence relations over Z/p^r.
//!
//! A polynomial `f = f_L x^L + ... + f_0` with unit `f_L` is a linear
//! recurrence relation of length `L` for `S_0, ..., S_{n-1}` when
//! `sum_k f_k S_{j+k} = 0` for `j = 0, ..., n-L-1`. All such relations are
//! read off a minimal TOP Gröbner p-basis of the module spanned by
//! `[1, -S(x)]` and `[0, x^{n+1}]`, where `S(x) = S_0 x^n + ... + S_{n-1} x`:
//! the unique p-basis vector `v_l` with leading position 1 and full order gives
//! a shortest relation `d_l`. Every shortest relation is then
//! `q_l d_l + sum_{i>l} q_i d_i` with `q_l` a nonzero digit and `q_i` digit
//! polynomials of degree at most `deg v_l - deg v_i`.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::{buchberger_with, GroebnerBasis, GroebnerConfig};
use crate::pbasis::{build_p_basis, PBasis};
use crate::poly::Poly;
use crate::polyvec::{MonomialOrder, PolyVec};
use crate::ring::RingParams;

/// Default bound on the number of candidate polynomials an enumeration may visit.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1_000_000;

/// A finite sequence `S_0, ..., S_{n-1}` over Z/p^r.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sequence {
    ring: RingParams,
    values: Vec<u64>,
}

impl Sequence {
    pub fn new(ring: RingParams, values: &[u64]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Parse("sequence must have at least one value".into()));
        }
        Ok(Sequence {
            ring,
            values: values.iter().map(|&v| v % ring.modulus()).collect(),
        })
    }

    /// Parses comma-separated integers (signs allowed), `S_0` first.
    pub fn parse(ring: RingParams, s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(|t| {
                let t = t.trim().replace('\u{2212}', "-");
                t.parse::<i128>()
                    .map(|v| ring.reduce_signed(v))
                    .map_err(|_| Error::Parse(format!("invalid sequence value `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Sequence::new(ring, &values)
    }

    pub fn ring(&self) -> RingParams {
        self.ring
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `S(x) = S_0 x^n + S_1 x^{n-1} + ... + S_{n-1} x`.
    pub fn generating_poly(&self) -> Poly {
        let n = self.values.len();
        let mut coeffs = vec![0; n + 1];
        for (i, &s) in self.values.iter().enumerate() {
            coeffs[n - i] = s;
        }
        Poly::from_coeffs(self.ring, coeffs)
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// True iff `f` has a unit leading coefficient and annihilates `s`.
pub fn is_lrr(f: &Poly, s: &Sequence) -> bool {
    let ring = s.ring;
    if f.ring() != ring {
        return false;
    }
    let (Some(len), Some(lc)) = (f.degree(), f.leading_coeff()) else {
        return false;
    };
    if !lc.is_unit() {
        return false;
    }
    let n = s.len();
    (0..n.saturating_sub(len)).all(|j| {
        f.coeffs().iter().enumerate().fold(0, |acc, (k, &c)| {
            ring.add(acc, ring.mul(c, s.values[j + k]))
        }) == 0
    })
}

/// The generators `[1, -S(x)]` and `[0, x^{n+1}]`.
pub fn build_module(s: &Sequence) -> [PolyVec; 2] {
    let ring = s.ring;
    let first = PolyVec::from_components(ring, &[Poly::one(ring), s.generating_poly().neg()])
        .expect("same ring");
    let second = PolyVec::from_components(
        ring,
        &[Poly::zero(ring), Poly::monomial(ring, 1, s.len() + 1)],
    )
    .expect("same ring");
    [first, second]
}

/// One free coefficient `q_i` of the parametrization: `q_i` is a digit
/// polynomial of degree at most `budget` multiplying `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamSlot {
    pub d: Poly,
    pub budget: usize,
    /// Index of the p-basis vector this slot comes from (0-based).
    pub index: usize,
    pub provenance: String,
}

#[derive(Clone, Debug)]
pub struct LrrSolution {
    ring: RingParams,
    shortest: Poly,
    companion: Poly,
    pivot: usize,
    pivot_provenance: String,
    slots: Vec<ParamSlot>,
    groebner: GroebnerBasis,
    p_basis: PBasis,
}

impl LrrSolution {
    pub fn ring(&self) -> RingParams {
        self.ring
    }

    /// The monic shortest relation `d_l`.
    pub fn shortest(&self) -> &Poly {
        &self.shortest
    }

    pub fn length(&self) -> usize {
        self.shortest.degree().unwrap_or(0)
    }

    /// `h_l`, where the pivot vector is `[d_l, -h_l]`.
    pub fn companion(&self) -> &Poly {
        &self.companion
    }

    /// Index of the pivot vector in the p-basis (0-based).
    pub fn pivot(&self) -> usize {
        self.pivot
    }

    pub fn pivot_provenance(&self) -> &str {
        &self.pivot_provenance
    }

    pub fn slots(&self) -> &[ParamSlot] {
        &self.slots
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        &self.groebner
    }

    pub fn p_basis(&self) -> &PBasis {
        &self.p_basis
    }

    /// Admissible values of the pivot digit `q_l`: `1, ..., p-1`.
    pub fn pivot_digits(&self) -> Vec<u64> {
        (1..self.ring.p()).collect()
    }

    /// Number of free digits among the `q_i`, `i > l`.
    pub fn digit_slots(&self) -> usize {
        self.slots
            .iter()
            .filter(|s| !s.d.is_zero())
            .map(|s| s.budget + 1)
            .sum()
    }

    /// The parametrization with symbolic digits, e.g.
    /// `t0*(x^2+5) + (t1_1*x+t1_0)*(3x+6)`.
    pub fn template(&self) -> String {
        let mut parts = vec![format!("t0*({})", self.shortest)];
        for (n, slot) in self.slots.iter().filter(|s| !s.d.is_zero()).enumerate() {
            let i = n + 1;
            let q: Vec<String> = (0..=slot.budget)
                .rev()
                .map(|k| match k {
                    0 => format!("t{i}_0"),
                    1 => format!("t{i}_1*x"),
                    k => format!("t{i}_{k}*x^{k}"),
                })
                .collect();
            let q = if q.len() == 1 {
                q[0].clone()
            } else {
                format!("({})", q.join("+"))
            };
            parts.push(format!("{q}*({})", slot.d));
        }
        parts.join(" + ")
    }
}

pub fn shortest_lrr(s: &Sequence) -> Result<LrrSolution> {
    shortest_lrr_with(s, &GroebnerConfig::default())
}

pub fn shortest_lrr_with(s: &Sequence, config: &GroebnerConfig) -> Result<LrrSolution> {
    let ring = s.ring;
    let order = MonomialOrder::Top;
    let groebner = buchberger_with(&build_module(s), order, config)?;
    let p_basis = build_p_basis(&groebner)?;
    if p_basis.p_dim() != 2 * ring.r() as usize {
        return Err(Error::ValidationFailed(format!(
            "p-dimension {} of a free rank-2 module should be {}",
            p_basis.p_dim(),
            2 * ring.r()
        )));
    }
    let candidates: Vec<usize> = p_basis
        .vectors()
        .iter()
        .enumerate()
        .filter(|(_, v)| v.lead.lpos() == 1 && v.lead.ord == ring.r())
        .map(|(i, _)| i)
        .collect();
    let [pivot] = candidates[..] else {
        return Err(Error::PivotNotUnique(candidates.len()));
    };
    let pv = &p_basis.vectors()[pivot];
    let unit = pv.lead.lc.unit_inverse()?.value();
    let shortest = pv.vector.component(1).scale(unit);
    let companion = pv.vector.component(2).scale(unit).neg();
    let slots = p_basis.vectors()[pivot + 1..]
        .iter()
        .enumerate()
        .map(|(k, v)| ParamSlot {
            d: v.vector.component(1),
            budget: pv.lead.deg() - v.lead.deg(),
            index: pivot + 1 + k,
            provenance: v.provenance(ring),
        })
        .collect();
    Ok(LrrSolution {
        ring,
        pivot_provenance: pv.provenance(ring),
        shortest,
        companion,
        pivot,
        slots,
        groebner,
        p_basis,
    })
}

fn sort_polys(polys: &mut [Poly]) {
    polys.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
    });
}

fn pow_saturating(base: u64, exp: usize) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base as u128))
}

/// Materializes the distinct polynomials of the parametrization. With
/// `monic_only`, only those with leading coefficient 1 are returned.
///
/// Candidates are accumulated slot by slot with deduplication, so the work is
/// bounded by `min((p-1) p^slots, p^{r(L+1)})`; that bound is compared with `cap`.
pub fn enumerate_shortest(sol: &LrrSolution, monic_only: bool, cap: u128) -> Result<Vec<Poly>> {
    let ring = sol.ring;
    let p = ring.p();
    let len = sol.length();
    let pivot_choices: Vec<u64> = if monic_only {
        // x^L coefficient is q_l plus multiples of p
        vec![1]
    } else {
        sol.pivot_digits()
    };
    let raw = (pivot_choices.len() as u128).saturating_mul(pow_saturating(p, sol.digit_slots()));
    let distinct = pow_saturating(ring.modulus(), len + 1);
    let size = raw.min(distinct);
    if size > cap {
        return Err(Error::EnumerationTooLarge { size, cap });
    }

    let mut current: HashSet<Poly> = pivot_choices
        .iter()
        .map(|&q| sol.shortest.scale(q))
        .collect();
    for slot in sol.slots.iter().filter(|s| !s.d.is_zero()) {
        for k in 0..=slot.budget {
            let step = slot.d.shift(k);
            let mut next = HashSet::with_capacity(current.len() * p as usize);
            for f in &current {
                let mut g = f.clone();
                next.insert(g.clone());
                for _ in 1..p {
                    g = g.add(&step)?;
                    next.insert(g.clone());
                }
            }
            current = next;
        }
    }
    let mut out: Vec<Poly> = current
        .into_iter()
        .filter(|f| !monic_only || f.is_monic())
        .collect();
    sort_polys(&mut out);
    Ok(out)
}

/// Exhaustive search over monic polynomials of degree `0, 1, ..., max_deg`.
/// Returns the first length with solutions and all monic solutions of that
/// length, or `None` if there are none up to `max_deg`.
///
/// Only monic candidates are tried: `f` is a relation iff `u^{-1} f` is, for
/// the unit leading coefficient `u`.
pub fn brute_force_shortest(
    s: &Sequence,
    max_deg: usize,
    cap: u128,
) -> Result<Option<(usize, Vec<Poly>)>> {
    let ring = s.ring;
    let m = ring.modulus();
    let size = (0..=max_deg).fold(0u128, |acc, len| acc.saturating_add(pow_saturating(m, len)));
    if size > cap {
        return Err(Error::EnumerationTooLarge { size, cap });
    }
    for len in 0..=max_deg {
        let mut found = Vec::new();
        let mut low = vec![0u64; len];
        loop {
            let mut coeffs = low.clone();
            coeffs.push(1);
            let f = Poly::from_coeffs(ring, coeffs);
            if is_lrr(&f, s) {
                found.push(f);
            }
            // odometer increment over Z_{p^r}^len
            let mut i = 0;
            while i < len {
                low[i] += 1;
                if low[i] < m {
                    break;
                }
                low[i] = 0;
                i += 1;
            }
            if i == len {
                break;
            }
        }
        if !found.is_empty() {
            sort_polys(&mut found);
            return Ok(Some((len, found)));
        }
    }
    Ok(None)
}
