//! Line-oriented check summaries: `suite<TAB>axiom<TAB>PASS|FAIL<TAB>witness`.

use std::fmt;

use lrcert_core::{AxiomEntry, AxiomReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummaryLine {
    pub suite: String,
    pub axiom: String,
    pub passed: bool,
    pub witness: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckSummary {
    pub inputs: Vec<(String, String)>,
    pub lines: Vec<SummaryLine>,
}

fn one_line(s: &str) -> String {
    s.chars().map(|c| if c == '\t' || c == '\n' || c == '\r' { ' ' } else { c }).collect()
}

impl CheckSummary {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn input(&mut self, name: impl Into<String>, digest: impl Into<String>) {
        self.inputs.push((name.into(), digest.into()));
    }

    pub fn entry(&mut self, suite: &str, e: &AxiomEntry) {
        let witness = match (&e.witness, &e.detail) {
            (Some(w), Some(d)) => format!("{w} ({d})"),
            (Some(w), None) => w.to_string(),
            (None, Some(d)) => d.clone(),
            (None, None) => "-".into(),
        };
        self.lines.push(SummaryLine {
            suite: one_line(suite),
            axiom: one_line(&e.name),
            passed: e.passed,
            witness: one_line(&witness),
        });
    }

    pub fn report(&mut self, suite: &str, r: &AxiomReport) {
        for e in &r.entries {
            self.entry(suite, e);
        }
    }

    /// A failure that prevented a suite from running at all.
    pub fn error(&mut self, suite: &str, axiom: &str, msg: impl fmt::Display) {
        self.entry(suite, &AxiomEntry::fail(axiom, msg.to_string()));
    }

    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SummaryLine> {
        self.lines.iter().filter(|l| !l.passed)
    }
}

impl fmt::Display for CheckSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# lrcert {}", env!("CARGO_PKG_VERSION"))?;
        for (name, digest) in &self.inputs {
            writeln!(f, "# input {} {digest}", one_line(name))?;
        }
        for l in &self.lines {
            writeln!(f, "{}\t{}\t{}\t{}", l.suite, l.axiom, if l.passed { "PASS" } else { "FAIL" }, l.witness)?;
        }
        let failed = self.failures().count();
        writeln!(
            f,
            "overall\tverdict\t{}\t{failed} of {} failed",
            if failed == 0 { "PASS" } else { "FAIL" },
            self.lines.len()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_is_conjunction() {
        let mut s = CheckSummary::new();
        s.input("h.hsc", "sha256:00");
        s.entry("hopf", &AxiomEntry::pass("assoc"));
        assert!(s.passed());
        s.entry("lr/trivial", &AxiomEntry::fail("bimod", "a\tb"));
        assert!(!s.passed());
        let text = s.to_string();
        assert!(text.contains("lr/trivial\tbimod\tFAIL\ta b\n"));
        assert!(text.ends_with("overall\tverdict\tFAIL\t1 of 2 failed\n"));
    }
}
