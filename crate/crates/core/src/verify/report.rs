use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::fmt_g17;

pub const REPORT_VERSION: &str = "1";

/// Rule for turning a residual into a status. A claim is refuted only when
/// its residual exceeds this multiple of the tolerance and the 320-bit
/// re-evaluation agrees.
pub const REFUTE_FACTOR: f64 = 100.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ClaimStatus {
    Verified,
    Refuted,
    Inconclusive,
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimStatus::Verified => "VERIFIED",
            ClaimStatus::Refuted => "REFUTED",
            ClaimStatus::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// Parameters at which the worst residual occurred. Absent fields are null.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub gamma: Option<f64>,
    pub n: Option<f64>,
    pub a: Option<f64>,
    pub perimeter: Option<f64>,
}

impl Witness {
    pub fn at(gamma: f64, n: f64) -> Self {
        Witness {
            gamma: Some(gamma),
            n: Some(n),
            ..Witness::default()
        }
    }

    pub fn with_a(self, a: f64) -> Self {
        Witness { a: Some(a), ..self }
    }

    pub fn with_perimeter(self, p: f64) -> Self {
        Witness {
            perimeter: Some(p),
            ..self
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub id: String,
    pub paper_ref: String,
    pub oracle: String,
    pub status: ClaimStatus,
    pub worst_residual: f64,
    pub tolerance: f64,
    pub witness: Witness,
    /// Residual re-evaluated at 320 bits at the witness, when one was taken.
    pub high_precision_residual: Option<f64>,
    /// Named values recorded alongside the verdict.
    pub evaluations: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimsReport {
    pub version: String,
    pub grid_spec: BTreeMap<String, String>,
    pub claims: Vec<ClaimRecord>,
}

/// Status from a float residual and an optional high-precision residual.
pub fn adjudicate(worst: f64, tol: f64, high_precision: Option<f64>) -> ClaimStatus {
    if worst.is_nan() {
        return ClaimStatus::Inconclusive;
    }
    if worst <= tol {
        return ClaimStatus::Verified;
    }
    let confirmed = high_precision.is_some_and(|r| r > REFUTE_FACTOR * tol);
    if worst > REFUTE_FACTOR * tol && confirmed {
        ClaimStatus::Refuted
    } else {
        ClaimStatus::Inconclusive
    }
}

impl ClaimsReport {
    pub fn get(&self, id: &str) -> Option<&ClaimRecord> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let width = self.claims.iter().map(|c| c.id.len()).max().unwrap_or(0);
        let mut out = String::new();
        for c in &self.claims {
            out.push_str(&format!(
                "{:<width$}  {:<12}  residual={}  tol={}  {}\n",
                c.id,
                c.status.to_string(),
                fmt_g17(c.worst_residual),
                fmt_g17(c.tolerance),
                c.paper_ref,
            ));
        }
        out
    }

    /// Claims whose status differs from `expected`, as `(id, expected, got)`.
    /// Claims missing from either side are reported with `None`.
    pub fn mismatches(
        &self,
        expected: &Expectations,
    ) -> Vec<(String, Option<ClaimStatus>, Option<ClaimStatus>)> {
        let mut out = Vec::new();
        for c in &self.claims {
            let want = expected.statuses.get(&c.id).copied();
            if want != Some(c.status) {
                out.push((c.id.clone(), want, Some(c.status)));
            }
        }
        for (id, want) in &expected.statuses {
            if self.get(id).is_none() {
                out.push((id.clone(), Some(*want), None));
            }
        }
        out
    }
}

/// Expected status per claim id.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Expectations {
    pub version: String,
    pub statuses: BTreeMap<String, ClaimStatus>,
}

impl Expectations {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidExpectations(e.to_string()))
    }

    /// The expectations shipped with the crate.
    pub fn bundled() -> Self {
        Self::from_json(include_str!("../../data/claims_expected.json"))
            .expect("bundled expectations parse")
    }
}
