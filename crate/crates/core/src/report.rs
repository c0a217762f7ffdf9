//! Verification reports: one entry per checked identity instance.

use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub suite: String,
    pub id: String,
    /// Human-readable name of the statement being checked.
    pub anchor: String,
    /// Grade, index or other instance data.
    pub instance: String,
    pub passed: bool,
    /// On failure, the nonzero difference of the two sides.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn new(suite: &str) -> Self {
        Report {
            suite: suite.to_string(),
            entries: Vec::new(),
        }
    }

    pub fn pass(&mut self, id: &str, anchor: &str, instance: impl Into<String>) {
        self.push(id, anchor, instance.into(), None);
    }

    pub fn fail(&mut self, id: &str, anchor: &str, instance: impl Into<String>, witness: impl Into<String>) {
        self.push(id, anchor, instance.into(), Some(witness.into()));
    }

    /// Record a pass if `difference` is zero, else a failure with it as witness.
    pub fn zero<T: std::fmt::Display>(
        &mut self,
        id: &str,
        anchor: &str,
        instance: impl Into<String>,
        difference: &T,
        is_zero: bool,
    ) {
        let witness = (!is_zero).then(|| difference.to_string());
        self.push(id, anchor, instance.into(), witness);
    }

    fn push(&mut self, id: &str, anchor: &str, instance: String, witness: Option<String>) {
        self.entries.push(Entry {
            suite: self.suite.clone(),
            id: id.to_string(),
            anchor: anchor.to_string(),
            instance,
            passed: witness.is_none(),
            witness,
        });
    }

    /// Append another report's entries, keeping their suite names.
    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| !e.passed)
    }

    pub fn count_failed(&self) -> usize {
        self.failures().count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w_suite = self.entries.iter().map(|e| e.suite.len()).max().unwrap_or(5).max(5);
        let w_id = self.entries.iter().map(|e| e.id.len()).max().unwrap_or(2).max(2);
        let w_inst = self.entries.iter().map(|e| e.instance.chars().count()).max().unwrap_or(8).max(8);
        let _ = writeln!(
            out,
            "{:<6} {:<w_suite$} {:<w_id$} {:<w_inst$} statement",
            "status", "suite", "id", "instance"
        );
        for e in &self.entries {
            let status = if e.passed { "ok" } else { "FAIL" };
            let inst_pad = w_inst.saturating_sub(e.instance.chars().count());
            let _ = writeln!(
                out,
                "{:<6} {:<w_suite$} {:<w_id$} {}{} {}",
                status,
                e.suite,
                e.id,
                e.instance,
                " ".repeat(inst_pad),
                e.anchor
            );
            if let Some(w) = &e.witness {
                let _ = writeln!(out, "       witness: {w}");
            }
        }
        let failed = self.count_failed();
        let _ = writeln!(
            out,
            "{}: {} checks, {} failed",
            self.suite,
            self.entries.len(),
            failed
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_json_agree_on_failures() {
        let mut r = Report::new("demo");
        r.pass("a", "first statement", "grade [1]");
        r.fail("b", "second statement", "grade [2]", "r - s");
        assert!(!r.passed());
        let text = r.to_text();
        assert!(text.contains("FAIL"));
        assert!(text.contains("witness: r - s"));
        assert!(text.ends_with("demo: 2 checks, 1 failed\n"));
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["entries"][1]["witness"], "r - s");
        assert!(json["entries"][0].get("witness").is_none());
    }
}
