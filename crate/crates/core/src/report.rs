//! Per-check records and the versioned JSON report.

use std::fmt::Display;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = "v1";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub check: String,
    pub n: usize,
    pub point: Value,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

impl Check {
    pub fn compare<T: PartialEq + Display>(check: &str, n: usize, point: Value, expected: &T, got: &T) -> Self {
        Self {
            check: check.to_string(),
            n,
            point,
            expected: expected.to_string(),
            got: got.to_string(),
            pass: expected == got,
        }
    }

    pub fn truth(check: &str, n: usize, point: Value, pass: bool, detail: &str) -> Self {
        Self {
            check: check.to_string(),
            n,
            point,
            expected: "true".into(),
            got: if pass { "true".into() } else { detail.to_string() },
            pass,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub suite: String,
    pub seed: u64,
    pub n: Vec<usize>,
    pub pass: bool,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: &str, seed: u64, n: Vec<usize>, checks: Vec<Check>) -> Self {
        Self {
            schema: SCHEMA,
            suite: suite.to_string(),
            seed,
            n,
            pass: checks.iter().all(|c| c.pass),
            checks,
        }
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.pass)
    }
}

/// Every check passed.
pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}

/// JSON array of display strings.
pub fn strings<T: Display>(xs: &[T]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(x.to_string())).collect())
}
