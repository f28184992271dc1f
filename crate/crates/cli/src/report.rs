//! Verification reports and their text and JSON renderings.

use serde::{Deserialize, Serialize};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    fn of(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    /// `"0"` for a passing identity, otherwise the nonzero difference or
    /// the error that stopped the check.
    pub residual: String,
    pub millis: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub status: Status,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    /// Sorts the checks by id; the suite passes iff every check does.
    pub fn new(suite: &str, mut checks: Vec<CheckResult>) -> Self {
        checks.sort_by(|x, y| x.id.cmp(&y.id));
        let status = Status::of(checks.iter().all(|c| c.status == Status::Pass));
        VerificationReport {
            suite: suite.to_string(),
            status,
            checks,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema: u32,
    pub seed: u64,
    pub status: Status,
    pub suites: Vec<VerificationReport>,
}

impl RunReport {
    pub fn new(seed: u64, suites: Vec<VerificationReport>) -> Self {
        let status = Status::of(suites.iter().all(VerificationReport::passed));
        RunReport {
            schema: SCHEMA,
            seed,
            status,
            suites,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    /// One line per check plus a summary per suite. Timings are left out
    /// so the text is reproducible.
    pub fn to_text(&self) -> String {
        const MAX_RESIDUAL: usize = 160;
        let mut out = String::new();
        for suite in &self.suites {
            let failed = suite.checks.iter().filter(|c| c.status == Status::Fail).count();
            out.push_str(&format!(
                "suite {}: {} ({} checks, {} failed)\n",
                suite.suite,
                suite.status.label(),
                suite.checks.len(),
                failed
            ));
            for c in &suite.checks {
                out.push_str(&format!("  {:4}  {}", c.status.label(), c.id));
                if c.status == Status::Fail {
                    let mut residual = c.residual.clone();
                    if residual.len() > MAX_RESIDUAL {
                        let cut = (0..=MAX_RESIDUAL).rev().find(|&i| residual.is_char_boundary(i)).unwrap_or(0);
                        residual.truncate(cut);
                        residual.push_str(" ...");
                    }
                    out.push_str(&format!("  residual {residual}"));
                }
                out.push('\n');
            }
        }
        out.push_str(&format!("seed {}: {}\n", self.seed, self.status.label()));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(id: &str, ok: bool) -> CheckResult {
        CheckResult {
            id: id.into(),
            status: Status::of(ok),
            residual: if ok { "0".into() } else { "x".into() },
            millis: 3,
        }
    }

    #[test]
    fn sorted_and_aggregated() {
        let r = VerificationReport::new("s", vec![check("b", true), check("a", false)]);
        assert_eq!(r.checks[0].id, "a");
        assert!(!r.passed());
        let run = RunReport::new(7, vec![r, VerificationReport::new("t", vec![check("c", true)])]);
        assert!(!run.passed());
        assert!(run.to_text().contains("FAIL  a  residual x"));
    }

    #[test]
    fn json_round_trip() {
        let run = RunReport::new(1, vec![VerificationReport::new("s", vec![check("a", true)])]);
        let text = run.to_json().unwrap();
        assert!(text.contains("\"schema\": 1"));
        assert!(text.contains("\"status\": \"pass\""));
        let back: RunReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, run);
    }
}
