//! Verification reports: one record per checked instance.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub check: String,
    pub instance: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub name: String,
    pub records: Vec<CheckRecord>,
    /// Instances that are reported but not part of the pass/fail contract.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub informational: Vec<CheckRecord>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Report {
        Report {
            name: name.into(),
            ..Report::default()
        }
    }

    pub fn record(&mut self, check: &str, instance: &str, pass: bool) {
        self.records.push(CheckRecord {
            check: check.to_string(),
            instance: instance.to_string(),
            pass,
        });
    }

    pub fn inform(&mut self, check: &str, instance: &str, pass: bool) {
        self.informational.push(CheckRecord {
            check: check.to_string(),
            instance: instance.to_string(),
            pass,
        });
    }

    pub fn merge(&mut self, other: Report) {
        self.records.extend(other.records);
        self.informational.extend(other.informational);
    }

    pub fn checked(&self) -> usize {
        self.records.len()
    }

    pub fn failures(&self) -> Vec<&CheckRecord> {
        self.records.iter().filter(|r| !r.pass).collect()
    }

    pub fn all_pass(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }
}
