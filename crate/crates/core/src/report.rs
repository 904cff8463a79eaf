//! Check records shared by the verification routines and the suite runner.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

/// One verified (or merely reported) property.
///
/// For pass/fail checks `status == Pass` iff `max_abs_error <= tolerance`.
/// Info records carry a value in `details` without asserting anything.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    pub description: String,
    /// Short pointer to the identity or construction being checked.
    #[serde(rename = "paper_anchor")]
    pub anchor: String,
    pub status: Status,
    pub max_abs_error: f64,
    pub tolerance: f64,
    pub details: String,
}

impl CheckReport {
    pub fn check(
        id: impl Into<String>,
        description: impl Into<String>,
        anchor: impl Into<String>,
        max_abs_error: f64,
        tolerance: f64,
    ) -> Self {
        // NaN compares false and lands on Fail.
        let status = if max_abs_error <= tolerance {
            Status::Pass
        } else {
            Status::Fail
        };
        CheckReport {
            id: id.into(),
            description: description.into(),
            anchor: anchor.into(),
            status,
            max_abs_error: if max_abs_error.is_finite() {
                max_abs_error
            } else {
                f64::MAX
            },
            tolerance,
            details: String::new(),
        }
    }

    pub fn info(
        id: impl Into<String>,
        description: impl Into<String>,
        anchor: impl Into<String>,
        details: impl Into<String>,
    ) -> Self {
        CheckReport {
            id: id.into(),
            description: description.into(),
            anchor: anchor.into(),
            status: Status::Info,
            max_abs_error: 0.0,
            tolerance: 0.0,
            details: details.into(),
        }
    }

    pub fn with_details(mut self, details: impl Into<String>) -> Self {
        self.details = details.into();
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_tolerance() {
        assert_eq!(CheckReport::check("a", "", "", 1e-13, 1e-12).status, Status::Pass);
        assert_eq!(CheckReport::check("a", "", "", 1e-12, 1e-12).status, Status::Pass);
        assert_eq!(CheckReport::check("a", "", "", 2e-12, 1e-12).status, Status::Fail);
    }

    #[test]
    fn nan_error_fails() {
        let r = CheckReport::check("a", "", "", f64::NAN, 1.0);
        assert_eq!(r.status, Status::Fail);
        assert!(r.max_abs_error.is_finite());
    }
}
