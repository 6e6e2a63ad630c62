#![allow(dead_code)]

use std::collections::HashSet;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use zpr_core::groebner::{normal_form, reduce_step, ReduceStep};
use zpr_core::{GroebnerBasis, MonomialOrder, Poly, PolyVec, RingParams};

pub const ORDERS: [MonomialOrder; 2] = [MonomialOrder::Top, MonomialOrder::Pot];

pub fn ring(p: u64, r: u32) -> RingParams {
    RingParams::new(p, r).unwrap()
}

pub fn rows(ring: RingParams, lines: &[&str]) -> Vec<PolyVec> {
    lines
        .iter()
        .map(|l| PolyVec::parse(ring, l).unwrap())
        .collect()
}

pub fn random_poly(rng: &mut ChaCha8Rng, ring: RingParams, max_deg: usize) -> Poly {
    if rng.random_bool(0.3) {
        return Poly::zero(ring);
    }
    let deg = rng.random_range(0..=max_deg);
    Poly::from_coeffs(
        ring,
        (0..=deg)
            .map(|_| rng.random_range(0..ring.modulus()))
            .collect(),
    )
}

pub fn random_digit_poly(rng: &mut ChaCha8Rng, ring: RingParams, max_deg: usize) -> Poly {
    let deg = rng.random_range(0..=max_deg);
    Poly::from_coeffs(
        ring,
        (0..=deg).map(|_| rng.random_range(0..ring.p())).collect(),
    )
}

/// One to three nonzero rows of dimension `q`, entries of degree at most 4.
pub fn random_matrix(rng: &mut ChaCha8Rng, ring: RingParams, q: usize) -> Vec<PolyVec> {
    loop {
        let n = rng.random_range(1..=3);
        let rows: Vec<PolyVec> = (0..n)
            .map(|_| {
                let comps: Vec<Poly> = (0..q).map(|_| random_poly(rng, ring, 4)).collect();
                PolyVec::from_components(ring, &comps).unwrap()
            })
            .filter(|v| !v.is_zero())
            .collect();
        if !rows.is_empty() {
            return rows;
        }
    }
}

/// A random element of the span of `rows` with arbitrary ring coefficients.
pub fn random_element(rng: &mut ChaCha8Rng, rows: &[PolyVec]) -> PolyVec {
    let ring = rows[0].ring();
    let coeffs: Vec<Poly> = rows.iter().map(|_| random_poly(rng, ring, 3)).collect();
    PolyVec::combination(ring, rows[0].q(), &coeffs, rows).unwrap()
}

/// True iff every vector of `a` reduces to zero modulo `b` and vice versa.
/// Both sets must be Gröbner bases.
pub fn mutually_reduce(a: &[PolyVec], b: &[PolyVec], order: MonomialOrder) -> bool {
    a.iter()
        .all(|f| normal_form(f, b, order).unwrap().is_zero())
        && b.iter()
            .all(|f| normal_form(f, a, order).unwrap().is_zero())
}

/// Structural invariants of a minimal Gröbner basis, checked from the raw
/// element vectors rather than cached leading data.
pub fn structural_violations(gb: &GroebnerBasis) -> Vec<String> {
    let order = gb.order();
    let ring = gb.ring();
    let mut out = Vec::new();
    let els = gb.elements();
    if els.len() > gb.q() * ring.r() as usize {
        out.push(format!(
            "m = {} exceeds q r = {}",
            els.len(),
            gb.q() * ring.r() as usize
        ));
    }
    let mut seen = HashSet::new();
    for g in els {
        let lm = g.lm(order).unwrap();
        if !seen.insert(lm) {
            out.push(format!("repeated leading monomial {lm}"));
        }
        let ord = g.ord(order).unwrap();
        let expected = ring.p().pow(ring.r() - ord);
        if g.lc(order).unwrap().value() != expected {
            out.push(format!("lc of {g} is not p^(r-ord) = {expected}"));
        }
    }
    for (i, a) in els.iter().enumerate() {
        for b in &els[i + 1..] {
            if a.lpos(order).unwrap() != b.lpos(order).unwrap() {
                continue;
            }
            let (da, db) = (a.deg(order).unwrap(), b.deg(order).unwrap());
            let (oa, ob) = (a.ord(order).unwrap(), b.ord(order).unwrap());
            let (hi, lo) = if da > db {
                ((da, oa), (db, ob))
            } else {
                ((db, ob), (da, oa))
            };
            if hi.0 == lo.0 || hi.1 <= lo.1 {
                out.push(format!("same-position monotonicity fails for {a} and {b}"));
            }
        }
    }
    out
}

/// Reduces `f` step by step, checking that each step strictly lowers the
/// leading monomial. Returns the final remainder.
pub fn reduce_checked(
    f: &PolyVec,
    set: &[PolyVec],
    order: MonomialOrder,
) -> Result<PolyVec, String> {
    let mut f = f.clone();
    while !f.is_zero() {
        match reduce_step(&f, set, order).map_err(|e| e.to_string())? {
            ReduceStep::Irreducible => break,
            ReduceStep::Reduced(g) => {
                if !g.is_zero()
                    && order
                        .compare(&g.lm(order).unwrap(), &f.lm(order).unwrap())
                        .is_ge()
                {
                    return Err(format!("reduce_step did not lower lm of {f}"));
                }
                f = g;
            }
        }
    }
    Ok(f)
}
