//! Pass/fail reports shared by the axiom checker, the identity suite and
//! the diagram cross-checks. Entry order is fixed by the producer, so a
//! report serializes byte-identically across runs.

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct CheckEntry {
    /// Stable machine-readable identifier, e.g. `p_trace_one`.
    pub id: String,
    pub pass: bool,
    /// First counterexample as basis indices, when one exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<usize>>,
    /// Short human-readable note (what was checked, or why it failed).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckEntry {
    pub fn pass(id: &str) -> CheckEntry {
        CheckEntry { id: id.to_string(), pass: true, counterexample: None, note: None }
    }

    pub fn fail(id: &str, counterexample: Option<Vec<usize>>, note: impl Into<String>) -> CheckEntry {
        CheckEntry { id: id.to_string(), pass: false, counterexample, note: Some(note.into()) }
    }

    pub fn of(id: &str, outcome: Result<(), (Option<Vec<usize>>, String)>) -> CheckEntry {
        match outcome {
            Ok(()) => CheckEntry::pass(id),
            Err((cx, note)) => CheckEntry::fail(id, cx, note),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> CheckEntry {
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn new(entries: Vec<CheckEntry>) -> CheckReport {
        CheckReport { entries }
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn entry(&self, id: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.entries.extend(other.entries);
    }

    /// One line per entry: `id<TAB>status[<TAB>details]`.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&e.id);
            out.push('\t');
            out.push_str(if e.pass { "pass" } else { "FAIL" });
            if let Some(cx) = &e.counterexample {
                let idx: Vec<String> = cx.iter().map(usize::to_string).collect();
                out.push_str(&format!("\tat [{}]", idx.join(", ")));
            }
            if let Some(note) = &e.note {
                out.push('\t');
                out.push_str(note);
            }
            out.push('\n');
        }
        out
    }
}
