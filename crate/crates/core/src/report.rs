//! Pass/fail reports produced by the axiom checkers.

use std::fmt;

/// Outcome of a single named axiom check. A witness is present exactly when
/// the check failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub name: String,
    pub passed: bool,
    pub witness: Option<Witness>,
}

/// Concrete data exhibiting a failure: the basis indices involved plus a
/// rendered description of the mismatching values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub detail: String,
}

impl AxiomReport {
    pub fn pass(name: impl Into<String>) -> Self {
        AxiomReport {
            name: name.into(),
            passed: true,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, indices: Vec<usize>, detail: impl Into<String>) -> Self {
        AxiomReport {
            name: name.into(),
            passed: false,
            witness: Some(Witness {
                indices,
                detail: detail.into(),
            }),
        }
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(f, "{}: pass", self.name)
        } else {
            let w = self.witness.as_ref().expect("failed report has witness");
            write!(f, "{}: FAIL at {:?} ({})", self.name, w.indices, w.detail)
        }
    }
}

/// True when every report in the slice passed.
pub fn all_passed(reports: &[AxiomReport]) -> bool {
    reports.iter().all(|r| r.passed)
}

/// The first failing report, if any.
pub fn first_failure(reports: &[AxiomReport]) -> Option<&AxiomReport> {
    reports.iter().find(|r| !r.passed)
}
