//! Named verifications producing replayable certificates.

mod claims;
mod steps;

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::catalog::FineKind;
use crate::error::{Error, Result};
use crate::recipe::{GroupRecipe, Recipe};

pub use claims::{
    example_ex50, verify_derived_examples, verify_prop_artinian, verify_prop_group_descent,
    verify_prop_tn_conditions, verify_prop_triangular, verify_theorem1, verify_theorem2,
};

pub const SCHEMA: &str = "rickart.certificate/v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClaimId {
    #[serde(rename = "theorem1")]
    Theorem1,
    #[serde(rename = "theorem2")]
    Theorem2,
    #[serde(rename = "prop_tn")]
    PropTn,
    #[serde(rename = "prop_triangular")]
    PropTriangular,
    #[serde(rename = "prop_artinian")]
    PropArtinian,
    #[serde(rename = "prop_group_descent")]
    PropGroupDescent,
    #[serde(rename = "example_ex50")]
    ExampleEx50,
    #[serde(rename = "example_SH")]
    ExampleSH,
}

impl ClaimId {
    pub const ALL: [ClaimId; 8] = [
        ClaimId::Theorem1,
        ClaimId::Theorem2,
        ClaimId::PropTn,
        ClaimId::PropTriangular,
        ClaimId::PropArtinian,
        ClaimId::PropGroupDescent,
        ClaimId::ExampleEx50,
        ClaimId::ExampleSH,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClaimId::Theorem1 => "theorem1",
            ClaimId::Theorem2 => "theorem2",
            ClaimId::PropTn => "prop_tn",
            ClaimId::PropTriangular => "prop_triangular",
            ClaimId::PropArtinian => "prop_artinian",
            ClaimId::PropGroupDescent => "prop_group_descent",
            ClaimId::ExampleEx50 => "example_ex50",
            ClaimId::ExampleSH => "example_SH",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        ClaimId::ALL.into_iter().find(|c| c.name() == s)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<FineKind>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ring: Option<Recipe>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupRecipe>,
    #[serde(default)]
    pub strict: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepKind {
    /// Computed and checked here.
    Verified,
    /// Taken from an external result; recorded, not recomputed.
    Cited,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Step {
    pub name: String,
    pub description: String,
    pub kind: StepKind,
    pub status: Status,
    /// `|r(x)|, |r(x²)|, …` for the step's witness, if it has one.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub chain_sizes: Vec<u64>,
    pub data: Value,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub total_ms: f64,
    pub steps_ms: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: String,
    pub claim: ClaimId,
    pub parameters: Parameters,
    pub verdict: bool,
    pub steps: Vec<Step>,
    pub notes: Vec<String>,
    /// Wall-clock data; excluded from reproducibility comparisons.
    pub timings: Timings,
}

impl Certificate {
    /// A copy with timings cleared, for byte comparisons.
    pub fn without_timings(&self) -> Certificate {
        Certificate {
            timings: Timings::default(),
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serialises")
    }

    pub fn from_json(text: &str) -> Result<Certificate> {
        let cert: Certificate =
            serde_json::from_str(text).map_err(|e| Error::BadTable(format!("certificate: {e}")))?;
        if cert.schema != SCHEMA {
            return Err(Error::BadTable(format!("unknown certificate schema {}", cert.schema)));
        }
        Ok(cert)
    }

    /// Content bytes: the JSON form without timings.
    pub fn content_bytes(&self) -> Vec<u8> {
        self.without_timings().to_json().into_bytes()
    }

    pub fn step(&self, name: &str) -> Option<&Step> {
        self.steps.iter().find(|s| s.name == name)
    }
}

/// Accumulates steps in declared order with their timings.
pub(crate) struct Builder {
    claim: ClaimId,
    parameters: Parameters,
    steps: Vec<Step>,
    notes: Vec<String>,
    steps_ms: Vec<f64>,
    started: Instant,
    last: Instant,
}

impl Builder {
    pub(crate) fn new(claim: ClaimId, parameters: Parameters) -> Self {
        let now = Instant::now();
        Builder {
            claim,
            parameters,
            steps: Vec::new(),
            notes: Vec::new(),
            steps_ms: Vec::new(),
            started: now,
            last: now,
        }
    }

    pub(crate) fn push(&mut self, step: Step) -> bool {
        let now = Instant::now();
        self.steps_ms.push(now.duration_since(self.last).as_secs_f64() * 1e3);
        self.last = now;
        let ok = step.status != Status::Fail;
        self.steps.push(step);
        ok
    }

    pub(crate) fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub(crate) fn finish(self) -> Certificate {
        Certificate {
            schema: SCHEMA.to_string(),
            claim: self.claim,
            verdict: self.steps.iter().all(|s| s.status != Status::Fail),
            parameters: self.parameters,
            steps: self.steps,
            notes: self.notes,
            timings: Timings {
                total_ms: self.started.elapsed().as_secs_f64() * 1e3,
                steps_ms: self.steps_ms,
            },
        }
    }
}

fn need<T: Copy>(value: Option<T>, what: &str) -> Result<T> {
    value.ok_or_else(|| Error::BadTable(format!("certificate parameters lack {what}")))
}

/// Re-runs the verification named by `cert` from its parameters.
pub fn replay(cert: &Certificate) -> Result<Certificate> {
    let p = &cert.parameters;
    let ring = || {
        p.ring
            .clone()
            .ok_or_else(|| Error::BadTable("certificate parameters lack ring".into()))
    };
    let group = || {
        p.group
            .clone()
            .ok_or_else(|| Error::BadTable("certificate parameters lack group".into()))
    };
    match cert.claim {
        ClaimId::Theorem1 => verify_theorem1(need(p.kind, "kind")?, need(p.p, "p")?, p.strict),
        ClaimId::Theorem2 => verify_theorem2(need(p.kind, "kind")?, need(p.p, "p")?, p.strict),
        ClaimId::PropTn => verify_prop_tn_conditions(
            need(p.kind, "kind")?,
            need(p.p, "p")?,
            need(p.n, "n")?,
            need(p.m, "m")?,
        ),
        ClaimId::PropTriangular => verify_prop_triangular(&ring()?, need(p.n, "n")?),
        ClaimId::PropArtinian => verify_prop_artinian(&ring()?, need(p.n, "n")?),
        ClaimId::PropGroupDescent => verify_prop_group_descent(&ring()?, &group()?),
        ClaimId::ExampleEx50 => example_ex50(need(p.kind, "kind")?, need(p.p, "p")?, need(p.n, "n")?),
        ClaimId::ExampleSH => verify_derived_examples(need(p.kind, "kind")?, need(p.p, "p")?, &group()?),
    }
}
