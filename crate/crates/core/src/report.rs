//! Machine-readable check reports.

use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    EvidenceAtCap,
}

/// Outcome of one verification. Reports are deterministic given
/// (command, config, seed); timing is informational only and omitted
/// from serialized output.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub check: String,
    pub algebra: String,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip)]
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn new(check: impl Into<String>, algebra: impl Into<String>) -> Report {
        Report {
            check: check.into(),
            algebra: algebra.into(),
            params: BTreeMap::new(),
            status: Status::Pass,
            witness: None,
            notes: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn with_param(mut self, key: &str, value: impl ToString) -> Report {
        self.params.insert(key.into(), value.to_string());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn fail(mut self, witness: impl ToString, note: impl Into<String>) -> Report {
        self.status = Status::Fail;
        self.witness = Some(witness.to_string());
        self.notes.push(note.into());
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Report {
        self.notes.push(note.into());
        self
    }

    pub fn evidence_at_cap(mut self, note: impl Into<String>) -> Report {
        self.status = Status::EvidenceAtCap;
        self.notes.push(note.into());
        self
    }
}
