//! Structured report assembly and JSON serialization.
//!
//! One fixed schema covers every pipeline: label, field, seed, then
//! optional sections for invariants, the Hilbert table, the gin, and the
//! growth analysis. Key order is fixed by struct order, values are plain
//! JSON scalars and arrays, and reports round-trip through serde.

use crate::gin::GinResult;
use crate::growth::GrowthReport;
use crate::hilbert::{HilbertTable, Invariants};
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::Ring;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub label: String,
    pub field: String,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariants: Option<InvariantsSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hilbert: Option<HilbertSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gin: Option<GinSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub growth: Option<GrowthSection>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantsSection {
    pub dim: i64,
    pub degree: i64,
    #[serde(rename = "D")]
    pub d: u32,
    #[serde(rename = "M")]
    pub m: u32,
    pub reg: u32,
    pub satdeg: u32,
    pub alpha: u32,
    pub saturated: bool,
    pub spor: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HilbertSection {
    pub from: u32,
    pub to: u32,
    pub values: Vec<i64>,
    pub delta1: Vec<i64>,
    pub delta2: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GinSection {
    pub generators: Vec<String>,
    pub trials: usize,
    pub agreed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthSection {
    pub d: Option<u32>,
    pub s: Option<i64>,
    pub r2: Option<i64>,
    pub r3: Option<i64>,
    pub generators: Vec<String>,
    pub saturated: Option<bool>,
    pub d_regular: Option<bool>,
    pub dim: Option<i64>,
    pub degree: Option<i64>,
    pub common_factor: Option<String>,
    pub injective: Option<bool>,
    pub wlp: Option<bool>,
    pub strict_decrease: Option<bool>,
    pub no_new_gin_generator: Option<bool>,
    pub notes: Vec<String>,
}

fn narrow(v: i128) -> i64 {
    i64::try_from(v).expect("report value exceeds 64 bits")
}

impl Report {
    pub fn new(label: &str, ring: &Ring, seed: u64) -> Report {
        Report {
            label: label.to_string(),
            field: ring.field.label(),
            seed,
            invariants: None,
            hilbert: None,
            gin: None,
            growth: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> crate::Result<Report> {
        serde_json::from_str(text).map_err(|e| crate::Error::Computation(format!("bad report: {e}")))
    }
}

pub fn invariants_section(
    inv: &Invariants,
    saturated: bool,
    spor: &[String],
) -> InvariantsSection {
    InvariantsSection {
        dim: inv.dim,
        degree: narrow(inv.degree),
        d: inv.d_inv,
        m: inv.m_inv,
        reg: inv.reg,
        satdeg: inv.satdeg,
        alpha: inv.alpha,
        saturated,
        spor: spor.to_vec(),
    }
}

pub fn hilbert_section(table: &HilbertTable) -> HilbertSection {
    HilbertSection {
        from: table.from,
        to: table.to,
        values: table.values.iter().map(|&v| narrow(v)).collect(),
        delta1: table.delta1.iter().map(|&v| narrow(v)).collect(),
        delta2: table.delta2.iter().map(|&v| narrow(v)).collect(),
    }
}

/// Generator list of a monomial ideal in display order.
pub fn monomial_strings(ideal: &MonomialIdeal, ring: &Ring) -> Vec<String> {
    ideal
        .gens()
        .iter()
        .map(|m| m.display(&ring.vars))
        .collect()
}

pub fn gin_section(res: &GinResult, ring: &Ring) -> GinSection {
    GinSection {
        generators: monomial_strings(&res.gin, ring),
        trials: res.per_trial.len(),
        agreed: res.agreed,
    }
}

pub fn growth_section(rep: &GrowthReport, ring: &Ring) -> GrowthSection {
    GrowthSection {
        d: rep.d,
        s: rep.s.map(narrow),
        r2: rep.r2,
        r3: rep.r3,
        generators: rep.truncation.iter().map(|g| g.display(ring)).collect(),
        saturated: rep.saturated,
        d_regular: rep.d_regular,
        dim: rep.scheme_dim,
        degree: rep.scheme_degree.map(narrow),
        common_factor: rep.common_factor.as_ref().map(|f| f.display(ring)),
        injective: rep.injective,
        wlp: rep.wlp_holds,
        strict_decrease: rep.strict_decrease,
        no_new_gin_generator: rep.no_new_gin_generator,
        notes: rep.notes.clone(),
    }
}
