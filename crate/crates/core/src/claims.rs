use serde::Serialize;

/// Outcome of one machine-checked structural claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimResult {
    pub n: u32,
    pub claim: &'static str,
    /// The root, pair, or other object the claim is about; `None` for global claims.
    pub subject: Option<String>,
    pub passed: bool,
    pub detail: String,
}

impl ClaimResult {
    pub fn new(n: u32, claim: &'static str, subject: Option<String>, passed: bool) -> Self {
        ClaimResult {
            n,
            claim,
            subject,
            passed,
            detail: String::new(),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }

    /// `"tetra (4^3)"`, or just the claim name for global claims.
    pub fn label(&self) -> String {
        match &self.subject {
            Some(s) => format!("{} {}", self.claim, s),
            None => self.claim.to_string(),
        }
    }
}

pub fn all_passed(claims: &[ClaimResult]) -> bool {
    claims.iter().all(|c| c.passed)
}
