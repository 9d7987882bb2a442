//! RunReport: the JSON document and its text rendering.
//!
//! Everything except `timing` is a function of the input bytes and the seed.

use std::fmt;

use hopfcyc::CheckLine;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Error => "ERROR",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TaskReport {
    pub index: usize,
    pub task: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub verdict: Verdict,
    pub checks: Vec<CheckLine>,
    /// Task-specific results: dimensions, ranks, residuals.
    pub data: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Engine {
    pub name: &'static str,
    pub version: &'static str,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PresentationSummary {
    pub name: String,
    pub generators: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
}

/// Wall-clock timings in milliseconds; the one nondeterministic field.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Timing {
    pub total_ms: f64,
    pub tasks_ms: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub engine: Engine,
    pub input_sha256: String,
    pub seed: u64,
    pub presentation: PresentationSummary,
    pub verdict: Verdict,
    pub tasks: Vec<TaskReport>,
    pub timing: Timing,
}

impl RunReport {
    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Verdict::Pass => crate::EXIT_PASS,
            _ => crate::EXIT_FAIL,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} on {} (input sha256 {})", self.engine.name, self.engine.version, self.presentation.name, &self.input_sha256[..12.min(self.input_sha256.len())])?;
        for t in &self.tasks {
            let label = t.label.as_deref().map(|l| format!(" [{l}]")).unwrap_or_default();
            writeln!(f, "task {} {}{}: {}", t.index, t.task, label, t.verdict)?;
            for l in &t.checks {
                writeln!(f, "  {l}")?;
            }
            if let Some(e) = &t.error {
                writeln!(f, "  error: {e}")?;
            }
            if !t.data.is_null() {
                writeln!(f, "  data: {}", t.data)?;
            }
        }
        let passed = self.tasks.iter().filter(|t| t.verdict == Verdict::Pass).count();
        write!(f, "{}: {passed} of {} tasks pass", self.verdict, self.tasks.len())
    }
}
