//! Gröbner bases of submodules of Z/p^r[x]^q under a positional order.
//!
//! Reduction follows the usual leading-term cancellation. Over Z/p^r the
//! leading coefficient ideals form a chain, so the leading term of `f` can be
//! cancelled exactly when some reducer with a dividing leading monomial has
//! order at least `ord(f)`. Completion processes S-pairs between elements with
//! the same leading position together with the annihilator multiples
//! `p^{ord(g)} g`, which are needed because of zero divisors.
//!
//! Computed bases are minimal, sorted by descending leading monomial, have
//! leading coefficients normalized to `p^{r - ord}`, and have every tail
//! coefficient reduced to its canonical residue. Together these make the output
//! a function of the module and the order alone.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::polyvec::{Lead, Monomial, MonomialOrder, PolyVec};
use crate::ring::{RingElem, RingParams};

/// Default cap on processed completion pairs.
pub const DEFAULT_MAX_REDUCTIONS: u64 = 1_000_000;

/// Leading data of one basis element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LeadingData {
    pub lm: Monomial,
    pub lc: RingElem,
    pub ord: u32,
}

impl LeadingData {
    pub fn of(v: &PolyVec, order: MonomialOrder) -> Result<Self> {
        let (lc, lm) = v.lt(order)?;
        Ok(LeadingData {
            lm,
            lc,
            ord: lc.ord(),
        })
    }

    pub fn lpos(&self) -> usize {
        self.lm.pos
    }

    pub fn deg(&self) -> usize {
        self.lm.alpha
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CompletionStats {
    /// Completion pairs whose normal form was computed.
    pub pairs_processed: u64,
    /// Individual reduction steps, all of which strictly lowered the leading monomial.
    pub reduction_steps: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerConfig {
    pub max_reductions: u64,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig {
            max_reductions: DEFAULT_MAX_REDUCTIONS,
        }
    }
}

/// A minimal Gröbner basis sorted so that `lm(g_1) > ... > lm(g_m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    ring: RingParams,
    q: usize,
    elements: Vec<PolyVec>,
    leading: Vec<LeadingData>,
    stats: CompletionStats,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn ring(&self) -> RingParams {
        self.ring
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn elements(&self) -> &[PolyVec] {
        &self.elements
    }

    pub fn leading(&self) -> &[LeadingData] {
        &self.leading
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn stats(&self) -> CompletionStats {
        self.stats
    }

    /// Normal form of `f` modulo this basis; zero iff `f` lies in the module.
    pub fn normal_form(&self, f: &PolyVec) -> Result<PolyVec> {
        normal_form(f, &self.elements, self.order)
    }

    pub fn contains(&self, f: &PolyVec) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Wraps vectors that are already claimed to form a minimal Gröbner basis
    /// of their span. The claim is verified; elements are normalized and sorted
    /// but otherwise kept as given.
    pub fn from_minimal(elements: Vec<PolyVec>, order: MonomialOrder) -> Result<Self> {
        let first = elements.first().ok_or(Error::NoGenerators)?;
        let (ring, q) = (first.ring(), first.q());
        if let Some(failure) = criterion_witness(&elements, order)? {
            return Err(Error::ValidationFailed(format!(
                "not a Gröbner basis: {} has nonzero remainder {}",
                failure.pair, failure.remainder
            )));
        }
        let mut normalized: Vec<PolyVec> = elements.iter().map(|g| normalize(g, order)).collect();
        normalized.sort_by(|a, b| order.compare(&b.lm(order).unwrap(), &a.lm(order).unwrap()));
        for (i, g) in normalized.iter().enumerate() {
            let others: Vec<PolyVec> = normalized
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, h)| h.clone())
                .collect();
            if let ReduceStep::Reduced(_) = reduce_step(g, &others, order)? {
                return Err(Error::ValidationFailed(format!(
                    "element {g} is reducible by the others, so the basis is not minimal"
                )));
            }
        }
        GroebnerBasis::assemble(ring, q, order, normalized, CompletionStats::default())
    }

    fn assemble(
        ring: RingParams,
        q: usize,
        order: MonomialOrder,
        elements: Vec<PolyVec>,
        stats: CompletionStats,
    ) -> Result<Self> {
        let leading = elements
            .iter()
            .map(|g| LeadingData::of(g, order))
            .collect::<Result<Vec<_>>>()?;
        let basis = GroebnerBasis {
            order,
            ring,
            q,
            elements,
            leading,
            stats,
        };
        basis.validate()?;
        Ok(basis)
    }

    /// Checks the structural invariants of a sorted, normalized minimal basis:
    /// strictly descending distinct leading monomials, leading coefficients
    /// equal to `p^{r - ord}`, strictly decreasing degree and order among
    /// elements sharing a leading position, and `m <= q r`.
    pub fn validate(&self) -> Result<()> {
        let r = self.ring.r();
        let fail = |msg: String| Err(Error::Internal(msg));
        if self.elements.len() > self.q * r as usize {
            return fail(format!(
                "{} elements exceed q*r = {}",
                self.len(),
                self.q * r as usize
            ));
        }
        for (i, ld) in self.leading.iter().enumerate() {
            if ld.lc.value() != self.ring.p_pow(r - ld.ord) {
                return fail(format!("element {} has unnormalized lc {}", i + 1, ld.lc));
            }
            for (j, earlier) in self.leading[..i].iter().enumerate() {
                if self.order.compare(&earlier.lm, &ld.lm) != Ordering::Greater {
                    return fail(format!(
                        "elements {} and {} are not strictly descending",
                        j + 1,
                        i + 1
                    ));
                }
                if earlier.lpos() == ld.lpos()
                    && !(earlier.deg() > ld.deg() && earlier.ord > ld.ord)
                {
                    return fail(format!(
                        "elements {} and {} share position {} without decreasing degree and order",
                        j + 1,
                        i + 1,
                        ld.lpos()
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Outcome of a single reduction step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReduceStep {
    /// `f` reduced to this vector, which is zero or has a smaller leading monomial.
    Reduced(PolyVec),
    /// No element of the reducer set can cancel the leading term: `f` is minimal.
    Irreducible,
}

struct Reducer<'a> {
    vector: &'a PolyVec,
    lead: Lead,
    ord: u32,
}

fn reducers<'a>(set: &'a [PolyVec], order: MonomialOrder) -> Result<Vec<Reducer<'a>>> {
    set.iter()
        .map(|v| {
            let lead = v.leading(order).ok_or(Error::ZeroVector)?;
            Ok(Reducer {
                vector: v,
                lead,
                ord: v.ring().order_of(lead.coeff),
            })
        })
        .collect()
}

fn check_compatible(f: &PolyVec, set: &[PolyVec]) -> Result<()> {
    for g in set {
        if g.ring() != f.ring() {
            return Err(Error::MixedRings);
        }
        if g.q() != f.q() {
            return Err(Error::DimensionMismatch {
                expected: f.q(),
                found: g.q(),
            });
        }
    }
    Ok(())
}

/// Among reducers whose leading monomial divides `target` and whose order is
/// at least `min_ord`, picks the one with the largest leading monomial
/// (first by index on ties).
fn best_reducer<'r, 'a>(
    reducers: &'r [Reducer<'a>],
    target: &Monomial,
    min_ord: u32,
) -> Option<&'r Reducer<'a>> {
    let mut best: Option<&Reducer> = None;
    for red in reducers {
        if red.lead.monomial.divides(target) && red.ord >= min_ord {
            // same position, so the larger monomial is the larger degree
            if best.is_none_or(|b| red.lead.monomial.alpha > b.lead.monomial.alpha) {
                best = Some(red);
            }
        }
    }
    best
}

fn reduce_with(f: &PolyVec, reducers: &[Reducer], order: MonomialOrder) -> Result<ReduceStep> {
    let ring = f.ring();
    let lead = f.leading(order).ok_or(Error::ZeroVector)?;
    let f_ord = ring.order_of(lead.coeff);
    let Some(red) = best_reducer(reducers, &lead.monomial, f_ord) else {
        return Ok(ReduceStep::Irreducible);
    };
    // lc(f) = u p^{r-k}, lc(red) = w p^{r-j} with j >= k; multiplier u w^{-1} p^{j-k}
    let r = ring.r();
    let u = lead.coeff / ring.p_pow(r - f_ord);
    let w = red.lead.coeff / ring.p_pow(r - red.ord);
    let w_inv = ring.inverse(w)?;
    let t = ring.mul(ring.mul(u, w_inv), ring.p_pow(red.ord - f_ord));
    let shift = lead.monomial.alpha - red.lead.monomial.alpha;
    let mut h = f.clone();
    h.add_scaled_shifted(ring.neg(t), shift, red.vector);
    if let Some(new_lead) = h.leading(order) {
        if order.compare(&new_lead.monomial, &lead.monomial) != Ordering::Less {
            return Err(Error::Internal(format!(
                "reduction of {f} did not lower the leading monomial {}",
                lead.monomial
            )));
        }
    }
    Ok(ReduceStep::Reduced(h))
}

/// One reduction step of `f` modulo `set`.
pub fn reduce_step(f: &PolyVec, set: &[PolyVec], order: MonomialOrder) -> Result<ReduceStep> {
    check_compatible(f, set)?;
    reduce_with(f, &reducers(set, order)?, order)
}

fn normal_form_counted(
    f: &PolyVec,
    reducers: &[Reducer],
    order: MonomialOrder,
    steps: &mut u64,
) -> Result<PolyVec> {
    let mut h = f.clone();
    while !h.is_zero() {
        match reduce_with(&h, reducers, order)? {
            ReduceStep::Reduced(next) => {
                *steps += 1;
                h = next;
            }
            ReduceStep::Irreducible => break,
        }
    }
    Ok(h)
}

/// Repeated top reduction of `f` modulo `set` until zero or irreducible.
pub fn normal_form(f: &PolyVec, set: &[PolyVec], order: MonomialOrder) -> Result<PolyVec> {
    check_compatible(f, set)?;
    let mut steps = 0;
    normal_form_counted(f, &reducers(set, order)?, order, &mut steps)
}

/// Scales `g` by a unit so its leading coefficient is exactly `p^{r - ord}`.
fn normalize(g: &PolyVec, order: MonomialOrder) -> PolyVec {
    match g.leading(order) {
        Some(lead) => g.scale(g.ring().normalizing_unit(lead.coeff)),
        None => g.clone(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum PairKind {
    S(usize, usize),
    Annihilator(usize),
}

struct Pair {
    kind: PairKind,
    lcm: Monomial,
    seq: u64,
}

/// The S-vector of two elements with equal leading position: both leading
/// terms are lifted to `x^{max deg}` with coefficient `p^{max(r-ord_i, r-ord_j)}`
/// and subtracted.
fn s_vector(gi: &PolyVec, gj: &PolyVec, order: MonomialOrder) -> PolyVec {
    let ring = gi.ring();
    let r = ring.r();
    let (li, lj) = (gi.leading(order).unwrap(), gj.leading(order).unwrap());
    let (oi, oj) = (ring.order_of(li.coeff), ring.order_of(lj.coeff));
    let (ui, uj) = (
        ring.normalizing_unit(li.coeff),
        ring.normalizing_unit(lj.coeff),
    );
    let (ai, aj) = (r - oi, r - oj);
    let m = ai.max(aj);
    let d = li.monomial.alpha.max(lj.monomial.alpha);
    let mut s = PolyVec::zero(ring, gi.q());
    s.add_scaled_shifted(ring.mul(ui, ring.p_pow(m - ai)), d - li.monomial.alpha, gi);
    s.add_scaled_shifted(
        ring.neg(ring.mul(uj, ring.p_pow(m - aj))),
        d - lj.monomial.alpha,
        gj,
    );
    s
}

fn annihilator(g: &PolyVec, order: MonomialOrder) -> PolyVec {
    let ring = g.ring();
    let ord = g.ord(order).unwrap();
    g.scale(ring.p_pow(ord))
}

fn pair_vector(kind: PairKind, basis: &[PolyVec], order: MonomialOrder) -> PolyVec {
    match kind {
        PairKind::S(i, j) => s_vector(&basis[i], &basis[j], order),
        PairKind::Annihilator(i) => annihilator(&basis[i], order),
    }
}

fn describe(kind: PairKind) -> String {
    match kind {
        PairKind::S(i, j) => format!("S(g{}, g{})", i + 1, j + 1),
        PairKind::Annihilator(i) => format!("p^ord * g{}", i + 1),
    }
}

/// Completion pairs created by appending element `idx` to `basis`.
fn new_pairs(basis: &[PolyVec], idx: usize, order: MonomialOrder, seq: &mut u64) -> Vec<Pair> {
    let ring = basis[idx].ring();
    let lead = basis[idx].leading(order).unwrap();
    let mut pairs = Vec::new();
    for (j, other) in basis[..idx].iter().enumerate() {
        let ol = other.leading(order).unwrap();
        if ol.monomial.pos == lead.monomial.pos {
            pairs.push(Pair {
                kind: PairKind::S(j, idx),
                lcm: Monomial::new(
                    ol.monomial.alpha.max(lead.monomial.alpha),
                    lead.monomial.pos,
                ),
                seq: *seq,
            });
            *seq += 1;
        }
    }
    if ring.order_of(lead.coeff) < ring.r() {
        pairs.push(Pair {
            kind: PairKind::Annihilator(idx),
            lcm: lead.monomial,
            seq: *seq,
        });
        *seq += 1;
    }
    pairs
}

/// A completion pair whose normal form does not vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionFailure {
    pub pair: String,
    pub remainder: PolyVec,
}

/// Runs the completion criterion on `set` (normalized copies) and returns the
/// first pair with a nonzero remainder, if any.
pub fn criterion_witness(
    set: &[PolyVec],
    order: MonomialOrder,
) -> Result<Option<CriterionFailure>> {
    let Some(first) = set.first() else {
        return Ok(None);
    };
    check_compatible(first, set)?;
    if set.iter().any(PolyVec::is_zero) {
        return Err(Error::ZeroVector);
    }
    let normalized: Vec<PolyVec> = set.iter().map(|g| normalize(g, order)).collect();
    let reds = reducers(&normalized, order)?;
    let mut seq = 0;
    let mut steps = 0;
    for idx in 0..normalized.len() {
        for pair in new_pairs(&normalized, idx, order, &mut seq) {
            let v = pair_vector(pair.kind, &normalized, order);
            let rem = normal_form_counted(&v, &reds, order, &mut steps)?;
            if !rem.is_zero() {
                return Ok(Some(CriterionFailure {
                    pair: describe(pair.kind),
                    remainder: rem,
                }));
            }
        }
    }
    Ok(None)
}

/// True iff `set` is a Gröbner basis of the module it generates.
pub fn is_groebner(set: &[PolyVec], order: MonomialOrder) -> Result<bool> {
    Ok(criterion_witness(set, order)?.is_none())
}

/// True iff `set` is a Gröbner basis of `span(generators)`.
pub fn is_groebner_basis_of(
    set: &[PolyVec],
    generators: &[PolyVec],
    order: MonomialOrder,
) -> Result<bool> {
    if !is_groebner(set, order)? {
        return Ok(false);
    }
    for g in generators {
        if !normal_form(g, set, order)?.is_zero() {
            return Ok(false);
        }
    }
    let target = buchberger(generators, order)?;
    for g in set {
        if !target.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn buchberger(generators: &[PolyVec], order: MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with(generators, order, &GroebnerConfig::default())
}

/// Computes the canonical minimal Gröbner basis of `span(generators)`.
///
/// Pairs are processed smallest lcm monomial first, ties in creation order.
/// Exceeding `config.max_reductions` processed pairs is reported as
/// [`Error::IterationLimitExceeded`].
pub fn buchberger_with(
    generators: &[PolyVec],
    order: MonomialOrder,
    config: &GroebnerConfig,
) -> Result<GroebnerBasis> {
    let first = generators.first().ok_or(Error::NoGenerators)?;
    let (ring, q) = (first.ring(), first.q());
    check_compatible(first, generators)?;

    let mut stats = CompletionStats::default();
    let mut basis: Vec<PolyVec> = Vec::new();
    let mut queue: Vec<Pair> = Vec::new();
    let mut seq = 0u64;

    let insert = |h: PolyVec, basis: &mut Vec<PolyVec>, queue: &mut Vec<Pair>, seq: &mut u64| {
        basis.push(normalize(&h, order));
        let idx = basis.len() - 1;
        queue.extend(new_pairs(basis, idx, order, seq));
    };

    for g in generators {
        let h = {
            let reds = reducers(&basis, order)?;
            normal_form_counted(g, &reds, order, &mut stats.reduction_steps)?
        };
        if !h.is_zero() {
            insert(h, &mut basis, &mut queue, &mut seq);
        }
    }

    while !queue.is_empty() {
        let next = (0..queue.len())
            .min_by(|&a, &b| {
                order
                    .compare(&queue[a].lcm, &queue[b].lcm)
                    .then(queue[a].seq.cmp(&queue[b].seq))
            })
            .unwrap();
        let pair = queue.swap_remove(next);
        stats.pairs_processed += 1;
        if stats.pairs_processed > config.max_reductions {
            return Err(Error::IterationLimitExceeded(config.max_reductions));
        }
        let v = pair_vector(pair.kind, &basis, order);
        let h = {
            let reds = reducers(&basis, order)?;
            normal_form_counted(&v, &reds, order, &mut stats.reduction_steps)?
        };
        if !h.is_zero() {
            insert(h, &mut basis, &mut queue, &mut seq);
        }
    }

    let mut out = minimalize_inner(ring, q, basis, order)?;
    out.stats = stats;
    Ok(out)
}

/// Reduces a Gröbner basis to the canonical minimal one: drops elements whose
/// leading term is reducible by the rest, normalizes leading coefficients,
/// reduces tails, and sorts by descending leading monomial.
pub fn minimalize(set: &[PolyVec], order: MonomialOrder) -> Result<GroebnerBasis> {
    let first = set.first().ok_or(Error::NoGenerators)?;
    check_compatible(first, set)?;
    minimalize_inner(first.ring(), first.q(), set.to_vec(), order)
}

fn minimalize_inner(
    ring: RingParams,
    q: usize,
    set: Vec<PolyVec>,
    order: MonomialOrder,
) -> Result<GroebnerBasis> {
    let mut elements: Vec<PolyVec> = set
        .into_iter()
        .filter(|g| !g.is_zero())
        .map(|g| normalize(&g, order))
        .collect();

    // A single pass suffices: the kept set only shrinks, and reducibility by a
    // dropped element implies reducibility by whatever made it droppable.
    let mut keep = vec![true; elements.len()];
    for i in (0..elements.len()).rev() {
        let others: Vec<PolyVec> = elements
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i && keep[j])
            .map(|(_, g)| g.clone())
            .collect();
        if let ReduceStep::Reduced(_) =
            reduce_with(&elements[i], &reducers(&others, order)?, order)?
        {
            keep[i] = false;
        }
    }
    let mut kept: Vec<PolyVec> = elements
        .drain(..)
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();
    kept.sort_by(|a, b| order.compare(&b.lm(order).unwrap(), &a.lm(order).unwrap()));

    let snapshot = kept.clone();
    let reds = reducers(&snapshot, order)?;
    for g in kept.iter_mut() {
        reduce_tail(g, &reds, order);
    }
    GroebnerBasis::assemble(ring, q, order, kept, CompletionStats::default())
}

/// Replaces every non-leading coefficient by its residue modulo the leading
/// coefficient ideal at that monomial. Reducers must be normalized.
fn reduce_tail(g: &mut PolyVec, reducers: &[Reducer], order: MonomialOrder) {
    let ring = g.ring();
    let Some(lead) = g.leading(order) else {
        return;
    };
    let mut cursor = lead.monomial;
    while let Some((x, c)) = g.next_below(order, &cursor) {
        cursor = x;
        if let Some(red) = best_reducer(reducers, &x, 0) {
            let t = c / red.lead.coeff;
            if t > 0 {
                g.add_scaled_shifted(ring.neg(t), x.alpha - red.lead.monomial.alpha, red.vector);
            }
        }
    }
}

/// Result of a randomized (p-)PLM check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlmReport {
    pub trials: usize,
    /// Trials whose combination was nonzero and had its leading monomial checked.
    pub checked: usize,
    pub witness: Option<PlmWitness>,
}

impl PlmReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// A coefficient tuple violating the predictable leading monomial property.
/// `actual` is `None` when the combination vanished although the tuple is
/// nontrivial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlmWitness {
    pub coefficients: Vec<Poly>,
    pub combination: PolyVec,
    pub predicted: Monomial,
    pub actual: Option<Monomial>,
}

/// Highest degree of the sampled coefficient polynomials.
pub const PLM_SAMPLE_DEGREE: usize = 3;

/// Samples tuples with coefficients in `{0, ..., p-1}` and checks that
/// `lm(sum a_i f_i) = max lm(a_i) lm(f_i)`.
pub(crate) fn sample_plm(
    vectors: &[PolyVec],
    order: MonomialOrder,
    trials: usize,
    seed: u64,
) -> Result<PlmReport> {
    let first = vectors.first().ok_or(Error::NoGenerators)?;
    check_compatible(first, vectors)?;
    let ring = first.ring();
    let leads = vectors
        .iter()
        .map(|v| v.lm(order))
        .collect::<Result<Vec<_>>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = PlmReport {
        trials,
        checked: 0,
        witness: None,
    };
    for _ in 0..trials {
        let coefficients: Vec<Poly> = vectors
            .iter()
            .map(|_| {
                if rng.random_bool(0.25) {
                    return Poly::zero(ring);
                }
                let deg = rng.random_range(0..=PLM_SAMPLE_DEGREE);
                let mut coeffs: Vec<u64> =
                    (0..deg).map(|_| rng.random_range(0..ring.p())).collect();
                coeffs.push(rng.random_range(1..ring.p()));
                Poly::from_coeffs(ring, coeffs)
            })
            .collect();
        let predicted = coefficients
            .iter()
            .zip(&leads)
            .filter_map(|(a, lm)| a.degree().map(|d| lm.shifted(d)))
            .reduce(|x, y| *order.max(&x, &y));
        let Some(predicted) = predicted else {
            continue;
        };
        let combination = PolyVec::combination(ring, first.q(), &coefficients, vectors)?;
        let actual = combination.leading(order).map(|l| l.monomial);
        if actual.is_some() {
            report.checked += 1;
        }
        if actual != Some(predicted) {
            report.witness = Some(PlmWitness {
                coefficients,
                combination,
                predicted,
                actual,
            });
            break;
        }
    }
    Ok(report)
}

/// Randomized check of the PLM property over a field (`r = 1`).
pub fn check_plm(
    set: &[PolyVec],
    order: MonomialOrder,
    trials: usize,
    seed: u64,
) -> Result<PlmReport> {
    let first = set.first().ok_or(Error::NoGenerators)?;
    if !first.ring().is_field() {
        return Err(Error::RingNotField(first.ring().r()));
    }
    sample_plm(set, order, trials, seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_matrix;
    use MonomialOrder::{Pot, Top};

    fn z9() -> RingParams {
        RingParams::new(3, 2).unwrap()
    }

    fn z5() -> RingParams {
        RingParams::new(5, 1).unwrap()
    }

    fn rows(ring: RingParams, s: &str) -> Vec<PolyVec> {
        parse_matrix(ring, s).unwrap()
    }

    const REFERENCE_Z9_TOP: &str = "[8, x^5+4x^4+4x^3+7x^2+7x]
[x+5, 3x^4+3x^2+x]
[x^2+3x+2, x^2+4x]
[3x+6, 3x]";

    const Z9_GENERATORS: &str = "[1, -x^5-4x^4-4x^3-7x^2-7x]\n[0, x^6]";

    #[test]
    fn reduce_step_examples() {
        let ring = z9();
        let g = rows(ring, REFERENCE_Z9_TOP);
        let f = g[0].scale(3);
        match reduce_step(&f, &g[1..2], Top).unwrap() {
            ReduceStep::Reduced(h) => {
                assert_eq!(
                    h,
                    PolyVec::parse(ring, "[8x^2+4x+6, 3x^4+2x^2+3x]").unwrap()
                )
            }
            ReduceStep::Irreducible => panic!("3*g1 must reduce by g2"),
        }
        // lm x^3 e2 is not divisible by x^4 e2
        let f = PolyVec::parse(ring, "[0, x^3]").unwrap();
        assert_eq!(
            reduce_step(&f, &g[1..2], Top).unwrap(),
            ReduceStep::Irreducible
        );
        // order too small: g1 (unit lc) is not cancellable by g2 (lc 3)
        assert_eq!(
            reduce_step(&g[0], &g[1..2], Top).unwrap(),
            ReduceStep::Irreducible
        );
        assert_eq!(
            reduce_step(&PolyVec::zero(ring, 2), &g, Top),
            Err(Error::ZeroVector)
        );
    }

    #[test]
    fn reduce_step_field_example() {
        let ring = z5();
        let g = rows(ring, "[2x+2, x^4-2x^3+x]\n[x^2-3x-1, 4x^2-3x]");
        let f = PolyVec::parse(ring, "[0, x^6]").unwrap();
        match reduce_step(&f, &g, Top).unwrap() {
            ReduceStep::Reduced(h) => {
                assert!(
                    h.is_zero()
                        || Top
                            .compare(&h.lm(Top).unwrap(), &Monomial::new(6, 2))
                            .is_lt()
                )
            }
            ReduceStep::Irreducible => panic!("s2 lies in the module"),
        }
        assert!(normal_form(&f, &g, Top).unwrap().is_zero());
    }

    #[test]
    fn normal_form_examples() {
        let ring = z9();
        let g = rows(ring, REFERENCE_Z9_TOP);
        for s in rows(ring, Z9_GENERATORS) {
            assert!(normal_form(&s, &g, Top).unwrap().is_zero());
        }
        assert!(normal_form(&PolyVec::zero(ring, 2), &g, Top)
            .unwrap()
            .is_zero());
        let e1 = PolyVec::parse(ring, "[1, 0]").unwrap();
        assert_eq!(normal_form(&e1, &g, Top).unwrap(), e1);
    }

    #[test]
    fn example_field_case_top_basis() {
        let ring = z5();
        let gens = rows(ring, "[1, -x^5-4x^4-3x^3-3x^2-2x]\n[0, x^6]");
        let gb = buchberger(&gens, Top).unwrap();
        assert_eq!(gb.len(), 2);
        let lms: Vec<_> = gb.leading().iter().map(|l| l.lm).collect();
        assert_eq!(lms, vec![Monomial::new(4, 2), Monomial::new(2, 1)]);
        // canonical basis coincides with the displayed one
        let reference = rows(ring, "[2x+2, x^4-2x^3+x]\n[x^2-3x-1, 4x^2-3x]");
        assert_eq!(gb.elements(), &reference[..]);
        assert!(check_plm(gb.elements(), Top, 300, 7).unwrap().passed());
    }

    #[test]
    fn example_z9_both_orders() {
        let ring = z9();
        let gens = rows(ring, Z9_GENERATORS);
        let pot = buchberger(&gens, Pot).unwrap();
        let s1 = gens[0].clone();
        assert_eq!(pot.elements(), &[s1, gens[1].clone()]);

        let top = buchberger(&gens, Top).unwrap();
        let data: Vec<_> = top
            .leading()
            .iter()
            .map(|l| (l.lpos(), l.deg(), l.ord))
            .collect();
        assert_eq!(data, vec![(2, 5, 2), (2, 4, 1), (1, 2, 2), (1, 1, 1)]);
        let reference = rows(ring, REFERENCE_Z9_TOP);
        for g in &reference {
            assert!(top.contains(g).unwrap());
        }
        for g in top.elements() {
            assert!(normal_form(g, &reference, Top).unwrap().is_zero());
        }
        assert!(is_groebner(&reference, Top).unwrap());
        assert!(is_groebner(top.elements(), Top).unwrap());
    }

    #[test]
    fn is_groebner_examples() {
        let ring = z9();
        let gens = rows(ring, Z9_GENERATORS);
        assert!(!is_groebner_basis_of(&gens[..1], &gens, Top).unwrap());
        assert!(is_groebner_basis_of(&rows(ring, REFERENCE_Z9_TOP), &gens, Top).unwrap());
        let single = rows(ring, "[x^2+1]");
        assert!(is_groebner(&single, Top).unwrap());
        // {g1, g2} of the Z_9 TOP basis alone misses S(g1,g2)'s reduction
        let partial = rows(ring, REFERENCE_Z9_TOP)[..2].to_vec();
        assert!(!is_groebner(&partial, Top).unwrap());
    }

    #[test]
    fn minimalize_examples() {
        let ring = z9();
        let gens = rows(ring, Z9_GENERATORS);
        let gb = buchberger(&gens, Top).unwrap();
        let again = minimalize(gb.elements(), Top).unwrap();
        assert_eq!(again.elements(), gb.elements());

        let mut padded = gb.elements().to_vec();
        padded.push(gb.elements()[2].shift(1));
        padded.push(gb.elements()[0].scale(2));
        assert_eq!(minimalize(&padded, Top).unwrap().elements(), gb.elements());

        // raw completion output before minimalization is larger
        let reference_plus = [rows(ring, REFERENCE_Z9_TOP), gens.clone()].concat();
        let m = minimalize(&reference_plus, Top).unwrap();
        assert_eq!(m.len(), 4);
        assert_eq!(m.elements(), gb.elements());
    }

    #[test]
    fn check_plm_examples() {
        let ring = z5();
        let g = PolyVec::parse(ring, "[x+1, 2x^2]").unwrap();
        let report = check_plm(&[g.clone(), g.shift(1)], Top, 500, 1).unwrap();
        assert!(!report.passed());
        let w = report.witness.unwrap();
        let recomputed =
            PolyVec::combination(ring, 2, &w.coefficients, &[g.clone(), g.shift(1)]).unwrap();
        assert_eq!(recomputed, w.combination);
        assert_ne!(Some(w.predicted), w.actual);

        assert!(check_plm(&[g], Pot, 500, 2).unwrap().passed());
        let z9_single = PolyVec::parse(z9(), "[1, x]").unwrap();
        assert_eq!(
            check_plm(&[z9_single], Top, 10, 0),
            Err(Error::RingNotField(2))
        );
    }

    #[test]
    fn iteration_cap() {
        let ring = z9();
        let gens = rows(ring, Z9_GENERATORS);
        let cfg = GroebnerConfig { max_reductions: 1 };
        assert_eq!(
            buchberger_with(&gens, Top, &cfg),
            Err(Error::IterationLimitExceeded(1))
        );
    }

    #[test]
    fn from_minimal_rejects_non_bases() {
        let ring = z9();
        let reference = rows(ring, REFERENCE_Z9_TOP);
        let gb = GroebnerBasis::from_minimal(reference.clone(), Top).unwrap();
        assert_eq!(gb.elements(), &reference[..]);
        assert!(GroebnerBasis::from_minimal(reference[..2].to_vec(), Top).is_err());
        let mut redundant = reference.clone();
        redundant.push(reference[3].shift(1));
        assert!(GroebnerBasis::from_minimal(redundant, Top).is_err());
    }
}
