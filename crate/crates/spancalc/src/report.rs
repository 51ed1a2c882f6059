//! Verification reports: named checks with verdicts, witnesses, and timings.

use serde::Serialize;
use std::fmt;
use std::time::Instant;

/// Outcome of a single named check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// The property was checked exhaustively and holds.
    Pass,
    /// The property fails; a witness is attached when available.
    Fail,
    /// The property holds because its premises never occur at this bound.
    VacuousPass,
    /// Preconditions for running the check were not met.
    Refused,
}

impl Verdict {
    pub fn is_pass(self) -> bool {
        matches!(self, Verdict::Pass | Verdict::VacuousPass)
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::VacuousPass => "vacuous-pass",
            Verdict::Refused => "refused",
        };
        f.write_str(s)
    }
}

/// One named check inside a verification report.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    /// Stable dotted name of the check, e.g. `main.h2`.
    pub name: String,
    /// Stable anchor of the verified statement.
    pub anchor: String,
    /// Truncation bound the check ran at.
    pub bound: usize,
    pub verdict: Verdict,
    /// Set on conclusions whose hypotheses failed: the verdict is still the
    /// empirical outcome, but the statement does not entail it.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Human-readable witness for failures.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Wall-clock milliseconds spent on the check.
    pub millis: u128,
}

/// A collection of named checks with a derived overall verdict.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub title: String,
    pub checks: Vec<CheckRecord>,
}

#[derive(Serialize)]
struct ReportOut<'a> {
    title: &'a str,
    checks: &'a [CheckRecord],
    overall: Verdict,
}

impl VerificationReport {
    pub fn new(title: impl Into<String>) -> Self {
        VerificationReport {
            title: title.into(),
            checks: Vec::new(),
        }
    }

    /// Run a check, timing it and recording the outcome.  The closure
    /// returns the verdict and an optional witness description.
    pub fn run(
        &mut self,
        name: &str,
        anchor: &str,
        bound: usize,
        check: impl FnOnce() -> (Verdict, Option<String>),
    ) -> Verdict {
        let start = Instant::now();
        let (verdict, witness) = check();
        self.checks.push(CheckRecord {
            name: name.to_string(),
            anchor: anchor.to_string(),
            bound,
            verdict,
            note: None,
            witness,
            millis: start.elapsed().as_millis(),
        });
        verdict
    }

    /// Mark the most recent check as not entailed by the verified statement
    /// (used for conclusions evaluated under failed hypotheses); such checks
    /// are excluded from the overall verdict.
    pub fn mark_not_entailed(&mut self) {
        if let Some(last) = self.checks.last_mut() {
            last.note = Some("not-entailed".to_string());
        }
    }

    pub fn find(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Conjunction of all entailed checks.
    pub fn overall(&self) -> Verdict {
        let failed = self
            .checks
            .iter()
            .any(|c| !c.verdict.is_pass() && c.note.is_none());
        if failed {
            Verdict::Fail
        } else {
            Verdict::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.overall().is_pass()
    }

    /// Render as indented text.
    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        writeln!(out, "{}", self.title).unwrap();
        for c in &self.checks {
            let note = c
                .note
                .as_ref()
                .map(|n| format!(" [{n}]"))
                .unwrap_or_default();
            writeln!(
                out,
                "  {:<44} {:>12}{}  ({} ms, bound {}, {})",
                c.name,
                c.verdict.to_string(),
                note,
                c.millis,
                c.bound,
                c.anchor
            )
            .unwrap();
            if let Some(w) = &c.witness {
                writeln!(out, "    witness: {w}").unwrap();
            }
        }
        writeln!(out, "overall: {}", self.overall()).unwrap();
        out
    }

    /// Render as stable JSON.
    pub fn to_json(&self) -> String {
        let out = ReportOut {
            title: &self.title,
            checks: &self.checks,
            overall: self.overall(),
        };
        serde_json::to_string_pretty(&out).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_check_fails_overall() {
        let mut r = VerificationReport::new("t");
        r.run("a", "x", 2, || (Verdict::Pass, None));
        assert!(r.passed());
        r.run("b", "y", 2, || (Verdict::Fail, Some("w".into())));
        assert!(!r.passed());
        assert_eq!(r.find("b").unwrap().witness.as_deref(), Some("w"));
    }

    #[test]
    fn not_entailed_failures_do_not_fail_overall() {
        let mut r = VerificationReport::new("t");
        r.run("c", "z", 2, || (Verdict::Fail, None));
        r.mark_not_entailed();
        assert!(r.passed());
    }

    #[test]
    fn json_has_stable_keys() {
        let mut r = VerificationReport::new("t");
        r.run("a", "x", 2, || (Verdict::VacuousPass, None));
        let json = r.to_json();
        let idx = |s: &str| json.find(s).unwrap_or(usize::MAX);
        assert!(idx("\"name\"") < idx("\"anchor\""));
        assert!(idx("\"anchor\"") < idx("\"bound\""));
        assert!(idx("\"bound\"") < idx("\"verdict\""));
        assert!(json.contains("\"vacuous-pass\""));
        assert!(idx("\"verdict\"") < idx("\"millis\""));
        assert!(idx("\"checks\"") < idx("\"overall\""));
    }
}
