//! The JSON report written by `--json`. The layout is described in
//! `docs/report-schema.md`.

use gwa_core::verify::Check;
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct JsonReport {
    pub command: String,
    pub p: String,
    pub bound: Option<u32>,
    pub passed: bool,
    pub checks: Vec<JsonCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<JsonWitness>,
}

#[derive(Debug, Serialize)]
pub struct JsonCheck {
    pub name: String,
    #[serde(rename = "ref")]
    pub reference: String,
    pub status: String,
    pub counterexample: Option<String>,
    pub millis: u64,
}

impl From<&Check> for JsonCheck {
    fn from(c: &Check) -> Self {
        JsonCheck {
            name: c.name.clone(),
            reference: c.reference.clone(),
            status: c.status.as_str().to_string(),
            counterexample: c.counterexample.clone(),
            millis: c.millis.try_into().unwrap_or(u64::MAX),
        }
    }
}

/// A witness `Σ left·d(gen)·right` and the form it evaluates to.
#[derive(Debug, Serialize)]
pub struct JsonWitness {
    pub target: String,
    pub terms: Vec<JsonTerm>,
    pub value: String,
    pub linear_branch: bool,
}

#[derive(Debug, Serialize)]
pub struct JsonTerm {
    pub left: String,
    pub d: String,
    pub right: String,
}
