//! Minimal Gröbner p-bases.
//!
//! From a sorted minimal Gröbner basis `g_1, ..., g_m` with order differences
//! `beta_j`, the sequence
//!
//! ```text
//! g_1, p g_1, ..., p^{beta_1 - 1} g_1, g_2, ..., p^{beta_m - 1} g_m
//! ```
//!
//! is a p-generator sequence spanning the same module. Its vectors are
//! p-linearly independent and have the p-PLM property: for digit-coefficient
//! polynomials `a_i` (coefficients in `{0, ..., p-1}`) the leading monomial of
//! `sum a_i v_i` is the largest `lm(a_i) lm(v_i)`. Each module element
//! therefore has exactly one such representation, and the greedy
//! digit-peeling in [`p_represent`] finds it.

use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::{sample_plm, GroebnerBasis, LeadingData, PlmReport};
use crate::poly::Poly;
use crate::polyvec::{MonomialOrder, PolyVec};
use crate::ring::RingParams;

/// The sequence of order differences of a sorted minimal Gröbner basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderDiffs(Vec<u32>);

impl OrderDiffs {
    pub fn betas(&self) -> &[u32] {
        &self.0
    }

    /// `sum beta_j`, the p-dimension of the module.
    pub fn total(&self) -> usize {
        self.0.iter().map(|&b| b as usize).sum()
    }
}

impl fmt::Display for OrderDiffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `beta_j = ord(g_j) - ord(g_i)` for the first later `g_i` with the same
/// leading position, or `ord(g_j)` when there is none.
pub fn order_differences(gb: &GroebnerBasis) -> OrderDiffs {
    let leading = gb.leading();
    OrderDiffs(
        leading
            .iter()
            .enumerate()
            .map(|(j, lj)| {
                leading[j + 1..]
                    .iter()
                    .find(|li| li.lpos() == lj.lpos())
                    .map_or(lj.ord, |li| lj.ord - li.ord)
            })
            .collect(),
    )
}

/// One vector `p^exponent * g_source` of a p-basis (`source` is 0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PBasisVector {
    pub vector: PolyVec,
    pub source: usize,
    pub exponent: u32,
    pub lead: LeadingData,
}

impl PBasisVector {
    /// Human-readable provenance such as `g2` or `3*g1`.
    pub fn provenance(&self, ring: RingParams) -> String {
        match self.exponent {
            0 => format!("g{}", self.source + 1),
            e => format!("{}*g{}", ring.p().pow(e), self.source + 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PBasis {
    ring: RingParams,
    q: usize,
    order: MonomialOrder,
    betas: OrderDiffs,
    vectors: Vec<PBasisVector>,
}

impl PBasis {
    pub fn ring(&self) -> RingParams {
        self.ring
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn betas(&self) -> &OrderDiffs {
        &self.betas
    }

    pub fn vectors(&self) -> &[PBasisVector] {
        &self.vectors
    }

    pub fn polyvecs(&self) -> Vec<PolyVec> {
        self.vectors.iter().map(|v| v.vector.clone()).collect()
    }

    /// The p-dimension `N` of the spanned module.
    pub fn p_dim(&self) -> usize {
        self.vectors.len()
    }

    /// Evaluates `sum a_i v_i`.
    pub fn combine(&self, coeffs: &[Poly]) -> Result<PolyVec> {
        PolyVec::combination(self.ring, self.q, coeffs, &self.polyvecs())
    }
}

pub fn p_dim(basis: &PBasis) -> usize {
    basis.p_dim()
}

/// Builds the minimal Gröbner p-basis of `gb` and verifies it is a
/// p-generator sequence by computing an explicit digit expression of every
/// `p v_i` in the vectors after it.
pub fn build_p_basis(gb: &GroebnerBasis) -> Result<PBasis> {
    let ring = gb.ring();
    let order = gb.order();
    let betas = order_differences(gb);
    let mut vectors = Vec::with_capacity(betas.total());
    for (j, (g, &beta)) in gb.elements().iter().zip(betas.betas()).enumerate() {
        let mut v = g.clone();
        for e in 0..beta {
            let lead = LeadingData::of(&v, order).map_err(|_| {
                Error::ValidationFailed(format!("p^{e} * g{} vanished before beta = {beta}", j + 1))
            })?;
            vectors.push(PBasisVector {
                vector: v.clone(),
                source: j,
                exponent: e,
                lead,
            });
            v = v.scale(ring.p());
        }
    }
    let basis = PBasis {
        ring,
        q: gb.q(),
        order,
        betas,
        vectors,
    };
    validate(&basis)?;
    Ok(basis)
}

fn validate(basis: &PBasis) -> Result<()> {
    let ring = basis.ring;
    let vs = &basis.vectors;
    for (i, a) in vs.iter().enumerate() {
        for b in &vs[i + 1..] {
            if a.lead.lpos() == b.lead.lpos() && a.lead.ord == b.lead.ord {
                return Err(Error::ValidationFailed(format!(
                    "{} and {} share leading position {} and order {}",
                    a.provenance(ring),
                    b.provenance(ring),
                    a.lead.lpos(),
                    a.lead.ord
                )));
            }
        }
    }
    for (i, v) in vs.iter().enumerate() {
        let target = v.vector.scale(ring.p());
        let rest = &vs[i + 1..];
        let coeffs = represent_in(&target, rest, basis.order).map_err(|e| {
            Error::ValidationFailed(format!(
                "p * {} is not a p-linear combination of later vectors: {e}",
                v.provenance(ring)
            ))
        })?;
        let rest_vecs: Vec<PolyVec> = rest.iter().map(|w| w.vector.clone()).collect();
        let check = PolyVec::combination(ring, basis.q, &coeffs, &rest_vecs)?;
        if check != target {
            return Err(Error::ValidationFailed(format!(
                "re-evaluated expression of p * {} differs",
                v.provenance(ring)
            )));
        }
    }
    Ok(())
}

/// Greedy digit peeling against a sequence with the p-PLM property. Every
/// vector must have leading coefficient exactly `p^{r - ord}`.
fn represent_in(f: &PolyVec, vectors: &[PBasisVector], order: MonomialOrder) -> Result<Vec<Poly>> {
    let ring = f.ring();
    let r = ring.r();
    let mut coeffs: Vec<Vec<u64>> = vec![Vec::new(); vectors.len()];
    let mut h = f.clone();
    while let Some(lead) = h.leading(order) {
        let x = lead.monomial;
        let digits = ring.expand(lead.coeff);
        for (k, &digit) in digits.iter().enumerate() {
            if digit == 0 {
                continue;
            }
            // the vector whose leading coefficient is p^k
            let (idx, v) = vectors
                .iter()
                .enumerate()
                .find(|(_, v)| v.lead.lm.divides(&x) && (r - v.lead.ord) as usize == k)
                .ok_or(Error::NotInModule)?;
            let shift = x.alpha - v.lead.deg();
            let slot = &mut coeffs[idx];
            if slot.len() <= shift {
                slot.resize(shift + 1, 0);
            }
            if slot[shift] != 0 {
                return Err(Error::Internal(format!(
                    "digit slot x^{shift} of vector {idx} assigned twice"
                )));
            }
            slot[shift] = digit;
            h.add_scaled_shifted(ring.neg(digit), shift, &v.vector);
        }
        if let Some(next) = h.leading(order) {
            if order.compare(&next.monomial, &x).is_ge() {
                return Err(Error::NotInModule);
            }
        }
    }
    Ok(coeffs
        .into_iter()
        .map(|c| Poly::from_coeffs(ring, c))
        .collect())
}

/// The unique digit-coefficient polynomials `a_i` with `f = sum a_i v_i`.
pub fn p_represent(f: &PolyVec, basis: &PBasis) -> Result<Vec<Poly>> {
    if f.ring() != basis.ring {
        return Err(Error::MixedRings);
    }
    if f.q() != basis.q {
        return Err(Error::DimensionMismatch {
            expected: basis.q,
            found: f.q(),
        });
    }
    represent_in(f, &basis.vectors, basis.order)
}

/// Randomized check of the p-PLM property with digit-coefficient tuples.
/// A nontrivial tuple with a zero combination also counts as a failure.
pub fn check_p_plm(basis: &PBasis, trials: usize, seed: u64) -> Result<PlmReport> {
    sample_plm(&basis.polyvecs(), basis.order, trials, seed)
}
