//! Structured pass/fail results for the named identity checks.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

use serde::{Deserialize, Serialize};

/// Location + expected + actual of the first failing comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureDetail {
    pub location: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one named identity check over a parameter range.
/// `passed` is true exactly when `first_failure` is absent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub params: BTreeMap<String, String>,
    pub passed: bool,
    pub first_failure: Option<FailureDetail>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(
        check_name: impl Into<String>,
        params: BTreeMap<String, String>,
        first_failure: Option<FailureDetail>,
        elapsed: Duration,
    ) -> Self {
        Self {
            check_name: check_name.into(),
            params,
            passed: first_failure.is_none(),
            first_failure,
            elapsed,
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}]: {}",
            self.check_name,
            self.params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(", "),
            if self.passed { "pass" } else { "FAIL" }
        )?;
        if let Some(fail) = &self.first_failure {
            write!(
                f,
                " at {}: expected {}, got {}",
                fail.location, fail.expected, fail.actual
            )?;
        }
        write!(f, " ({:.3}s)", self.elapsed.as_secs_f64())
    }
}

/// Convenience used across the checks: a key/value parameter map.
pub fn params<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}
