//! Pass/fail reports shared by every checker, in human and JSON form.

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::field::Field;
use crate::tensor::Tensor;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualEntry {
    /// Component label, 1-based, e.g. `(1,2;2,1)` for row `(1,2)` and column `(2,1)`.
    pub index: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub name: String,
    pub equation: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub residual: Vec<ResidualEntry>,
    #[serde(default)]
    pub elapsed_us: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Record {
    pub fn new(name: impl Into<String>, equation: impl Into<String>, pass: bool) -> Self {
        Record {
            name: name.into(),
            equation: equation.into(),
            pass,
            residual: Vec::new(),
            elapsed_us: 0,
            note: None,
        }
    }

    /// A record that passes iff `residual` is identically zero.
    pub fn from_residual<F: Field>(
        name: impl Into<String>,
        equation: impl Into<String>,
        residual: &Tensor<F>,
    ) -> Self {
        let entries = residual_entries(residual);
        let mut r = Record::new(name, equation, entries.is_empty());
        r.residual = entries;
        r
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn with_elapsed(mut self, start: Instant) -> Self {
        self.elapsed_us = start.elapsed().as_micros() as u64;
        self
    }
}

pub fn residual_entries<F: Field>(t: &Tensor<F>) -> Vec<ResidualEntry> {
    let fmt_idx = |v: &[usize]| {
        v.iter()
            .map(|i| (i + 1).to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    t.nonzero_entries()
        .into_iter()
        .map(|(up, low, v)| ResidualEntry {
            index: format!("({};{})", fmt_idx(&up), fmt_idx(&low)),
            value: v.to_string(),
        })
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Report {
    pub records: Vec<Record>,
}

impl Report {
    pub fn new(records: Vec<Record>) -> Self {
        Report { records }
    }

    pub fn all_pass(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    pub fn get(&self, name: &str) -> Option<&Record> {
        self.records.iter().find(|r| r.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| !r.pass)
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> crate::Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// One line per record, with up to a few residual entries for failures.
    pub fn human(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let _ = writeln!(
                out,
                "{} {:<14} {}  [{} us]",
                if r.pass { "PASS" } else { "FAIL" },
                r.name,
                r.equation,
                r.elapsed_us
            );
            if let Some(n) = &r.note {
                let _ = writeln!(out, "       note: {n}");
            }
            for e in r.residual.iter().take(4) {
                let _ = writeln!(out, "       residual {} = {}", e.index, e.value);
            }
            if r.residual.len() > 4 {
                let _ = writeln!(out, "       ... {} nonzero entries", r.residual.len());
            }
        }
        let failed = self.failures().count();
        let _ = writeln!(
            out,
            "{} of {} checks passed",
            self.records.len() - failed,
            self.records.len()
        );
        out
    }
}
