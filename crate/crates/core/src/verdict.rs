//! Three-valued certification outcome shared by all certificate kinds.

use serde::{Deserialize, Serialize};

/// Outcome of a certification check.
///
/// A failing sufficient condition yields `Inconclusive`, never a claim
/// that the point is isolated. `PreconditionViolated` flags queries that
/// do not satisfy the hypotheses' structural requirements (wrong arity,
/// point not a zero, exponent ladder out of range, ...).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Certified,
    Inconclusive,
    PreconditionViolated,
}

impl Verdict {
    /// Process exit code contract: 0 certified, 10 inconclusive,
    /// 2 precondition violated.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Certified => 0,
            Verdict::Inconclusive => 10,
            Verdict::PreconditionViolated => 2,
        }
    }

    /// Preference order when several certification paths ran on one job:
    /// certified beats inconclusive beats precondition-violated.
    pub fn strength(self) -> u8 {
        match self {
            Verdict::Certified => 2,
            Verdict::Inconclusive => 1,
            Verdict::PreconditionViolated => 0,
        }
    }

    pub fn is_certified(self) -> bool {
        self == Verdict::Certified
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Verdict::Certified => "certified",
            Verdict::Inconclusive => "inconclusive",
            Verdict::PreconditionViolated => "precondition-violated",
        };
        write!(f, "{s}")
    }
}

/// A certificate field that does not match its recomputation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("audit failed on field `{field}`: expected {expected}, found {found}")]
pub struct AuditFailure {
    pub field: String,
    pub expected: String,
    pub found: String,
}

/// Compare one recomputed certificate field against the stored value.
pub(crate) fn field_check<T: PartialEq + std::fmt::Debug>(
    field: &str,
    expected: &T,
    found: &T,
) -> Result<(), AuditFailure> {
    if expected == found {
        Ok(())
    } else {
        Err(AuditFailure {
            field: field.to_string(),
            expected: format!("{expected:?}"),
            found: format!("{found:?}"),
        })
    }
}
