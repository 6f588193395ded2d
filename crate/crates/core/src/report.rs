//! Machine-readable verification reports.
//!
//! JSON layout: `{version, params, checks: [{name, expected, actual, pass, elapsed_ms}], pass}`.

use std::fmt::{self, Display, Write as _};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::group::Family;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportParams {
    pub command: String,
    pub family: Option<Family>,
    pub m: Option<u32>,
    pub ell: Option<i64>,
    pub p: Option<u64>,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub params: ReportParams,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl Report {
    pub fn new(params: ReportParams) -> Self {
        Report {
            version: VERSION.to_string(),
            params,
            checks: Vec::new(),
            pass: true,
        }
    }

    pub fn push(&mut self, check: Check) {
        self.pass &= check.pass;
        self.checks.push(check);
    }

    /// Record an equality check.
    pub fn check_eq<T: PartialEq + Display>(
        &mut self,
        name: &str,
        expected: T,
        actual: T,
        elapsed_ms: u64,
    ) -> bool {
        let pass = expected == actual;
        self.push(Check {
            name: name.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass,
            elapsed_ms,
        });
        pass
    }

    /// Record a check whose expectation is a predicate rather than a value.
    pub fn check_that(
        &mut self,
        name: &str,
        expected: &str,
        actual: impl Display,
        pass: bool,
        elapsed_ms: u64,
    ) -> bool {
        self.push(Check {
            name: name.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass,
            elapsed_ms,
        });
        pass
    }

    /// Run `f`, timing it, and record the (expected, actual) it returns as an equality check.
    pub fn timed<T: PartialEq + Display>(
        &mut self,
        name: &str,
        f: impl FnOnce() -> (T, T),
    ) -> bool {
        let t = Instant::now();
        let (e, a) = f();
        self.check_eq(name, e, a, t.elapsed().as_millis() as u64)
    }

    pub fn extend(&mut self, other: Report) {
        for c in other.checks {
            self.push(c);
        }
    }

    /// Overall pass recomputed from the checks.
    pub fn recompute(&mut self) -> bool {
        self.pass = self.checks.iter().all(|c| c.pass);
        self.pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Report> {
        serde_json::from_str(s)
    }

    /// JSON with timings zeroed, for determinism comparisons.
    pub fn to_json_untimed(&self) -> String {
        let mut r = self.clone();
        for c in &mut r.checks {
            c.elapsed_ms = 0;
        }
        r.to_json()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let p = &self.params;
        let _ = write!(out, "macforge {} {}", self.version, p.command);
        if let Some(f) = p.family {
            let _ = write!(out, " family={f}");
        }
        if let Some(v) = p.p {
            let _ = write!(out, " p={v}");
        }
        if let Some(v) = p.m {
            let _ = write!(out, " m={v}");
        }
        if let Some(v) = p.ell {
            let _ = write!(out, " ell={v}");
        }
        if let Some(v) = p.seed {
            let _ = write!(out, " seed={v}");
        }
        out.push('\n');
        let w = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let glyph = if c.pass { "\u{2713}" } else { "\u{2717}" };
            let _ = write!(out, "{glyph} {:w$}  {}", c.name, c.actual);
            if !c.pass && c.expected != c.actual {
                let _ = write!(out, "  (expected {})", c.expected);
            }
            let _ = writeln!(out, "  [{} ms]", c.elapsed_ms);
        }
        let n_fail = self.failures().count();
        let _ = writeln!(
            out,
            "{}: {} checks, {} failed",
            if self.pass { "PASS" } else { "FAIL" },
            self.checks.len(),
            n_fail
        );
        out
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_passes() {
        let r = Report::new(ReportParams::default());
        assert!(r.pass);
        assert!(r.checks.is_empty());
        assert!(r.render_text().contains("0 checks"));
    }

    #[test]
    fn json_round_trip() {
        let mut r = Report::new(ReportParams {
            command: "aut".into(),
            family: Some(Family::K),
            m: Some(2),
            ell: Some(1),
            ..Default::default()
        });
        r.check_eq("aut_order", 6144u64, 6144, 3);
        r.check_eq("aut_1", 16u64, 8, 0);
        assert!(!r.pass);
        let back = Report::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        let text = r.render_text();
        assert!(text.contains("\u{2717} aut_1"));
        assert!(text.contains("(expected 16)"));
    }
}
