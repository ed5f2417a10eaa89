//! Machine- and human-readable command reports. The JSON body is
//! deterministic for identical inputs (content digests, no timestamps); the
//! text renderer appends a timestamp footer only.

use homlie_core::validation::ValidationReport;
use serde::Serialize;
use serde_json::{Map, Value};
use std::fmt::Write as _;

/// Witnesses kept per failed check; the full count is still reported.
const WITNESS_LIMIT: usize = 8;

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub inputs: Vec<InputRecord>,
    pub passed: bool,
    pub exit_code: i32,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Map::is_empty")]
    pub data: Map<String, Value>,
    #[serde(skip_serializing_if = "Map::is_empty")]
    pub outputs: Map<String, Value>,
}

#[derive(Debug, Serialize)]
pub struct InputRecord {
    pub role: String,
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "is_zero")]
    pub failure_count: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

/// A failed identity instance: the (1-based) basis tuple it failed on and
/// both evaluated sides.
#[derive(Debug, Serialize)]
pub struct Witness {
    pub tuple: Vec<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

impl Check {
    pub fn passing(name: &str) -> Check {
        Check {
            name: name.to_string(),
            passed: true,
            failure_count: 0,
            witnesses: Vec::new(),
        }
    }

    pub fn boolean(name: &str, passed: bool) -> Check {
        Check {
            name: name.to_string(),
            passed,
            failure_count: usize::from(!passed),
            witnesses: Vec::new(),
        }
    }
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            schema_version: 1,
            command: command.to_string(),
            inputs: Vec::new(),
            passed: true,
            exit_code: 0,
            checks: Vec::new(),
            data: Map::new(),
            outputs: Map::new(),
        }
    }

    pub fn record_input(&mut self, role: &str, path: &str, bytes: &[u8]) {
        use sha2::Digest;
        let digest = sha2::Sha256::digest(bytes);
        self.inputs.push(InputRecord {
            role: role.to_string(),
            path: path.to_string(),
            sha256: hex::encode(digest),
        });
    }

    pub fn push_check(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Converts a core validation report into named checks: failures are
    /// grouped by axiom; `expected` names with no failure are emitted as
    /// passing so the check list is stable.
    pub fn absorb_validation(&mut self, expected: &[&str], report: &ValidationReport) {
        let mut names: Vec<String> = expected.iter().map(|s| s.to_string()).collect();
        for f in &report.failures {
            if !names.iter().any(|n| n == &f.axiom) {
                names.push(f.axiom.clone());
            }
        }
        for name in names {
            let failures: Vec<_> = report.failures.iter().filter(|f| f.axiom == name).collect();
            let witnesses = failures
                .iter()
                .take(WITNESS_LIMIT)
                .map(|f| Witness {
                    tuple: f.witness.iter().map(|&i| i + 1).collect(),
                    lhs: f.lhs.iter().map(|x| x.to_string()).collect(),
                    rhs: f.rhs.iter().map(|x| x.to_string()).collect(),
                })
                .collect();
            self.checks.push(Check {
                name,
                passed: failures.is_empty(),
                failure_count: failures.len(),
                witnesses,
            });
        }
    }

    /// Collapses a validation report into a single named check.
    pub fn absorb_as_single_check(&mut self, name: &str, report: &ValidationReport) {
        let witnesses = report
            .failures
            .iter()
            .take(WITNESS_LIMIT)
            .map(|f| Witness {
                tuple: f.witness.iter().map(|&i| i + 1).collect(),
                lhs: f.lhs.iter().map(|x| x.to_string()).collect(),
                rhs: f.rhs.iter().map(|x| x.to_string()).collect(),
            })
            .collect();
        self.checks.push(Check {
            name: name.to_string(),
            passed: report.passed(),
            failure_count: report.failures.len(),
            witnesses,
        });
    }

    pub fn insert_data(&mut self, key: &str, value: Value) {
        self.data.insert(key.to_string(), value);
    }

    pub fn insert_output(&mut self, key: &str, value: Value) {
        self.outputs.insert(key.to_string(), value);
    }

    /// Folds check outcomes into the overall verdict and exit code.
    pub fn finalize(&mut self) {
        self.passed = self.checks.iter().all(|c| c.passed);
        self.exit_code = i32::from(!self.passed);
    }

    pub fn to_json_string(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports always serialize");
        text.push('\n');
        text
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        for input in &self.inputs {
            let _ = writeln!(
                out,
                "input {}: {} sha256={}",
                input.role, input.path, input.sha256
            );
        }
        for check in &self.checks {
            if check.passed {
                let _ = writeln!(out, "check {}: pass", check.name);
            } else {
                let _ = writeln!(
                    out,
                    "check {}: FAIL ({} failing instance{})",
                    check.name,
                    check.failure_count,
                    if check.failure_count == 1 { "" } else { "s" }
                );
                for w in &check.witnesses {
                    let _ = writeln!(
                        out,
                        "  witness {:?}: lhs = [{}], rhs = [{}]",
                        w.tuple,
                        w.lhs.join(", "),
                        w.rhs.join(", ")
                    );
                }
            }
        }
        for (key, value) in &self.data {
            let _ = writeln!(out, "data {key}: {value}");
        }
        for key in self.outputs.keys() {
            let _ = writeln!(out, "output: {key} (inline in --json, written with -o)");
        }
        let _ = writeln!(out, "result: {}", if self.passed { "PASS" } else { "FAIL" });
        let _ = writeln!(out, "generated at: {}", chrono::Utc::now().to_rfc3339());
        out
    }
}
