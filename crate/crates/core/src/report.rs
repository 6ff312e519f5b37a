//! Deterministic PASS/FAIL reports.

use std::fmt::{self, Write as _};

use serde::Serialize;

/// The fixed set of labels a report line may cite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Label {
    #[serde(rename = "pentagon")]
    Pentagon,
    #[serde(rename = "triangle")]
    Triangle,
    #[serde(rename = "hexagon")]
    Hexagon,
    #[serde(rename = "closure")]
    Closure,
    #[serde(rename = "l1")]
    L1,
    #[serde(rename = "eq1")]
    Eq1,
    #[serde(rename = "l2")]
    L2,
    #[serde(rename = "nl3")]
    Nl3,
    #[serde(rename = "l0")]
    L0,
    #[serde(rename = "nt1")]
    Nt1,
    #[serde(rename = "ex1")]
    Ex1,
    #[serde(rename = "monoidal-MI")]
    MonoidalMI,
}

impl Label {
    pub fn as_str(self) -> &'static str {
        match self {
            Label::Pentagon => "pentagon",
            Label::Triangle => "triangle",
            Label::Hexagon => "hexagon",
            Label::Closure => "closure",
            Label::L1 => "l1",
            Label::Eq1 => "eq1",
            Label::L2 => "l2",
            Label::Nl3 => "nl3",
            Label::L0 => "l0",
            Label::Nt1 => "nt1",
            Label::Ex1 => "ex1",
            Label::MonoidalMI => "monoidal-MI",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        out.write_str(self.as_str())
    }
}

/// One checked identity on one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub label: Label,
    /// Which law, e.g. `round-trip` or `is_iso`.
    pub law: String,
    pub instance: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(
        &mut self,
        label: Label,
        law: impl Into<String>,
        instance: impl Into<String>,
        passed: bool,
        detail: impl Into<String>,
    ) {
        self.checks.push(Check { label, law: law.into(), instance: instance.into(), passed, detail: detail.into() });
    }

    pub fn warn(&mut self, msg: impl Into<String>) {
        self.warnings.push(msg.into());
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.warnings.extend(other.warnings);
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }

    pub fn all_passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn summary(&self) -> String {
        format!("{} checks, {} failures", self.checks.len(), self.failures())
    }

    /// One line per check, then warnings, then the summary line.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            let _ = write!(out, "{status} {:<11} {:<24} {}", c.label.as_str(), c.law, c.instance);
            if !c.detail.is_empty() {
                let _ = write!(out, " :: {}", c.detail);
            }
            out.push('\n');
        }
        for w in &self.warnings {
            let _ = writeln!(out, "WARN {w}");
        }
        let _ = writeln!(out, "{}", self.summary());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_counts_failures() {
        let mut r = Report::new();
        r.push(Label::L2, "is_iso", "arrow", true, "");
        r.push(Label::L0, "is_iso", "arrow", false, "component 1");
        assert_eq!(r.summary(), "2 checks, 1 failures");
        let text = r.render_text();
        assert!(text.starts_with("PASS l2"));
        assert!(text.contains("FAIL l0"));
        assert!(text.ends_with("2 checks, 1 failures\n"));
    }
}
