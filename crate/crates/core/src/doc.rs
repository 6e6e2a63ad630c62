//! JSON documents for bases, p-bases, recurrence solutions and property checks.
//!
//! Polynomials and vectors are stored in their canonical text form, so a
//! document serializes to the same bytes after a parse/serialize round trip.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{CriterionFailure, GroebnerBasis, PlmReport};
use crate::lrr::LrrSolution;
use crate::pbasis::{order_differences, PBasis};
use crate::polyvec::{MonomialOrder, PolyVec};
use crate::ring::RingParams;
use crate::text;

/// Pretty-printed JSON with a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

pub fn from_json<T: DeserializeOwned>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementDoc {
    pub vector: String,
    pub lm: String,
    pub lc: u64,
    pub lpos: usize,
    pub deg: usize,
    pub ord: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GbDocument {
    pub ring: RingParams,
    pub order: MonomialOrder,
    pub betas: Vec<u32>,
    pub elements: Vec<ElementDoc>,
}

impl GbDocument {
    pub fn from_basis(gb: &GroebnerBasis) -> Self {
        GbDocument {
            ring: gb.ring(),
            order: gb.order(),
            betas: order_differences(gb).betas().to_vec(),
            elements: gb
                .elements()
                .iter()
                .zip(gb.leading())
                .map(|(v, l)| ElementDoc {
                    vector: text::format_vector(v),
                    lm: l.lm.to_string(),
                    lc: l.lc.value(),
                    lpos: l.lpos(),
                    deg: l.deg(),
                    ord: l.ord,
                })
                .collect(),
        }
    }

    /// Rebuilds the basis, checking that it is a minimal Gröbner basis.
    pub fn to_basis(&self) -> Result<GroebnerBasis> {
        let vectors = self
            .elements
            .iter()
            .map(|e| text::parse_vector(self.ring, &e.vector))
            .collect::<Result<Vec<PolyVec>>>()?;
        GroebnerBasis::from_minimal(vectors, self.order)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PVectorDoc {
    pub vector: String,
    pub provenance: String,
    pub lpos: usize,
    pub deg: usize,
    pub ord: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PBasisDocument {
    pub ring: RingParams,
    pub order: MonomialOrder,
    pub betas: Vec<u32>,
    pub n: usize,
    pub vectors: Vec<PVectorDoc>,
}

impl PBasisDocument {
    pub fn from_p_basis(pb: &PBasis) -> Self {
        PBasisDocument {
            ring: pb.ring(),
            order: pb.order(),
            betas: pb.betas().betas().to_vec(),
            n: pb.p_dim(),
            vectors: pb
                .vectors()
                .iter()
                .map(|v| PVectorDoc {
                    vector: text::format_vector(&v.vector),
                    provenance: v.provenance(pb.ring()),
                    lpos: v.lead.lpos(),
                    deg: v.lead.deg(),
                    ord: v.lead.ord,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlotDoc {
    pub d: String,
    pub budget: usize,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LrrDocument {
    pub ring: RingParams,
    pub sequence: Vec<u64>,
    pub length: usize,
    pub shortest: String,
    pub companion: String,
    pub pivot: String,
    pub template: String,
    pub slots: Vec<SlotDoc>,
    /// Present when the enumeration fit under the cap.
    pub solutions: Option<Vec<String>>,
    pub monic_only: bool,
    pub enumeration_error: Option<String>,
}

impl LrrDocument {
    pub fn from_solution(sequence: &[u64], sol: &LrrSolution) -> Self {
        LrrDocument {
            ring: sol.ring(),
            sequence: sequence.to_vec(),
            length: sol.length(),
            shortest: sol.shortest().to_string(),
            companion: sol.companion().to_string(),
            pivot: sol.pivot_provenance().to_string(),
            template: sol.template(),
            slots: sol
                .slots()
                .iter()
                .map(|s| SlotDoc {
                    d: s.d.to_string(),
                    budget: s.budget,
                    provenance: s.provenance.clone(),
                })
                .collect(),
            solutions: None,
            monic_only: true,
            enumeration_error: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionDoc {
    pub pair: String,
    pub remainder: String,
}

impl From<&CriterionFailure> for CriterionDoc {
    fn from(f: &CriterionFailure) -> Self {
        CriterionDoc {
            pair: f.pair.clone(),
            remainder: text::format_vector(&f.remainder),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub coefficients: Vec<String>,
    pub combination: String,
    pub predicted: String,
    pub actual: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDocument {
    pub ring: RingParams,
    pub order: MonomialOrder,
    pub groebner: bool,
    pub criterion_failure: Option<CriterionDoc>,
    pub minimal: bool,
    /// `PLM` over a field, `p-PLM` otherwise.
    pub property: String,
    pub trials: usize,
    pub checked: usize,
    pub seed: u64,
    pub passed: bool,
    pub witness: Option<WitnessDoc>,
}

impl CheckDocument {
    /// Fills the property fields from a PLM report.
    pub fn set_report(&mut self, report: &PlmReport) {
        self.trials = report.trials;
        self.checked = report.checked;
        self.witness = report.witness.as_ref().map(|w| WitnessDoc {
            coefficients: w.coefficients.iter().map(|c| c.to_string()).collect(),
            combination: text::format_vector(&w.combination),
            predicted: w.predicted.to_string(),
            actual: w.actual.map(|m| m.to_string()),
        });
        self.passed = self.groebner && self.minimal && report.passed();
    }
}
