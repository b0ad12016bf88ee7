//! Structured verification reports.
//!
//! Every checker returns a `VerificationReport`: a claim tag, the exact
//! parameters it ran with, a three-way verdict, an optional structured
//! witness, and a narrative carrying the checked inequality or equation
//! instantiated with exact values. Rendering is deterministic: ordered maps,
//! no timestamps, byte-identical output for identical inputs.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Refuted,
    Inapplicable,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Verified => 0,
            Verdict::Refuted => 1,
            Verdict::Inapplicable => 2,
        }
    }

    pub fn word(self) -> &'static str {
        match self {
            Verdict::Verified => "verified",
            Verdict::Refuted => "refuted",
            Verdict::Inapplicable => "inapplicable",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.word())
    }
}

/// One witness entry: a labelled exact value or descriptor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessItem {
    pub label: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub parameters: BTreeMap<String, String>,
    pub verdict: Verdict,
    pub witness: Vec<WitnessItem>,
    pub narrative: String,
}

impl VerificationReport {
    pub fn new(claim: &str, verdict: Verdict) -> Self {
        VerificationReport {
            claim: claim.to_string(),
            parameters: BTreeMap::new(),
            verdict,
            witness: Vec::new(),
            narrative: String::new(),
        }
    }

    pub fn with_param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn with_witness(mut self, label: &str, value: impl ToString) -> Self {
        self.witness.push(WitnessItem {
            label: label.to_string(),
            value: value.to_string(),
        });
        self
    }

    pub fn with_narrative(mut self, text: impl ToString) -> Self {
        self.narrative = text.to_string();
        self
    }

    pub fn with_verdict(mut self, v: Verdict) -> Self {
        self.verdict = v;
        self
    }

    /// Canonical text rendering: verdict first, then claim, parameters,
    /// narrative, and witness lines, all in fixed order.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(self.verdict.word());
        out.push('\n');
        out.push_str(&format!("claim: {}\n", self.claim));
        for (k, v) in &self.parameters {
            out.push_str(&format!("  {} = {}\n", k, v));
        }
        if !self.narrative.is_empty() {
            for line in self.narrative.lines() {
                out.push_str(&format!("  {}\n", line));
            }
        }
        for w in &self.witness {
            out.push_str(&format!("  witness: {} = {}\n", w.label, w.value));
        }
        out
    }
}
