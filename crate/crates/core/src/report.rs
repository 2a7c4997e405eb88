// SPDX-License-Identifier: Apache-2.0

//! Certification reports and their JSON / markdown renderings.
//!
//! JSON layout (stable):
//!
//! ```text
//! { "suite": str, "status": "certified"|"failed"|"skipped", "config": {...},
//!   "notes": [str], "checks": [ { "id": str, "anchor": str, "status": ...,
//!   "witness": any, "timing_ns": u64 (only with record_timing) } ] }
//! ```

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Certified,
    Failed,
    Skipped,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Certified
        } else {
            Status::Failed
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Certified => "certified",
            Status::Failed => "failed",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub witness: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ns: Option<u64>,
}

impl Check {
    pub fn new(id: impl Into<String>, anchor: impl Into<String>, ok: bool, witness: Value) -> Self {
        Check {
            id: id.into(),
            anchor: anchor.into(),
            status: Status::from_bool(ok),
            witness,
            timing_ns: None,
        }
    }

    pub fn skipped(id: impl Into<String>, anchor: impl Into<String>, reason: &str) -> Self {
        Check {
            id: id.into(),
            anchor: anchor.into(),
            status: Status::Skipped,
            witness: Value::String(reason.into()),
            timing_ns: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub status: Status,
    #[serde(default)]
    pub config: Value,
    #[serde(default)]
    pub notes: Vec<String>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            status: Status::Certified,
            config: Value::Null,
            notes: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
        self.refresh_status();
    }

    pub fn note(&mut self, note: impl Into<String>) {
        let note = note.into();
        if !self.notes.contains(&note) {
            self.notes.push(note);
        }
    }

    pub fn extend(&mut self, other: Report) {
        for n in other.notes {
            self.note(n);
        }
        for c in other.checks {
            self.push(c);
        }
    }

    /// Certified iff every non-skipped check is.
    pub fn refresh_status(&mut self) {
        let failed = self.checks.iter().any(|c| c.status == Status::Failed);
        self.status = Status::from_bool(!failed);
    }

    pub fn is_certified(&self) -> bool {
        self.status == Status::Certified
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Failed)
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# Report: {}\n", self.suite);
        let _ = writeln!(out, "Status: **{}**\n", self.status.as_str());
        if !self.notes.is_empty() {
            let _ = writeln!(out, "## Notes\n");
            for n in &self.notes {
                let _ = writeln!(out, "- {n}");
            }
            out.push('\n');
        }
        let _ = writeln!(out, "## Checks\n");
        let _ = writeln!(out, "| id | anchor | status |");
        let _ = writeln!(out, "|---|---|---|");
        for c in &self.checks {
            let _ = writeln!(
                out,
                "| `{}` | {} | {} |",
                c.id,
                c.anchor.replace('|', "\\|"),
                c.status.as_str()
            );
        }
        for c in self.failed() {
            let _ = writeln!(out, "\n### Failed: `{}`\n", c.id);
            let body = serde_json::to_string_pretty(&c.witness).unwrap_or_default();
            let _ = writeln!(out, "```json\n{body}\n```");
        }
        out
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => self.to_json(),
            Format::Markdown => Ok(self.to_markdown()),
        }
    }

    pub fn write(&self, format: Format, path: &Path) -> Result<()> {
        std::fs::write(path, self.render(format)?)?;
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Markdown,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "markdown" | "md" => Ok(Format::Markdown),
            _ => Err(Error::Config(format!(
                "unknown format {s:?} (json | markdown)"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn empty_report_is_certified() {
        let r = Report::new("empty");
        assert!(r.is_certified());
        let back = Report::from_json(&r.to_json().unwrap()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn status_tracks_failures_not_skips() {
        let mut r = Report::new("x");
        r.push(Check::skipped("s", "-", "not applicable"));
        assert!(r.is_certified());
        r.push(Check::new("a", "-", true, json!(1)));
        assert!(r.is_certified());
        r.push(Check::new("b", "-", false, json!({"residual": "z1*zb2"})));
        assert_eq!(r.status, Status::Failed);
        assert!(r.to_markdown().contains("z1*zb2"));
    }

    #[test]
    fn timing_omitted_unless_set() {
        let mut c = Check::new("a", "-", true, Value::Null);
        assert!(!serde_json::to_string(&c).unwrap().contains("timing_ns"));
        c.timing_ns = Some(5);
        assert!(serde_json::to_string(&c)
            .unwrap()
            .contains("\"timing_ns\":5"));
    }
}
