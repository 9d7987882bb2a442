//! Pass/fail lines shared by every checker.

use std::fmt;

use serde::Serialize;

/// One verified identity: how many instances were checked and, on failure,
/// the first counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub checked: usize,
    pub witness: Option<String>,
}

impl CheckLine {
    pub fn new(name: impl Into<String>) -> Self {
        CheckLine { name: name.into(), pass: true, checked: 0, witness: None }
    }

    /// Records one instance. Only the first failure keeps its witness.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.pass {
            self.pass = false;
            self.witness = Some(witness());
        }
    }

    pub fn fail(&mut self, witness: String) {
        self.checked += 1;
        if self.pass {
            self.pass = false;
            self.witness = Some(witness);
        }
    }
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{tag} {} ({} checked)", self.name, self.checked)?;
        if let Some(w) = &self.witness {
            write!(f, ": {w}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub lines: Vec<CheckLine>,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }

    pub fn line(&self, name: &str) -> Option<&CheckLine> {
        self.lines.iter().find(|l| l.name == name)
    }

    pub fn first_failure(&self) -> Option<&CheckLine> {
        self.lines.iter().find(|l| !l.pass)
    }

    pub fn push(&mut self, line: CheckLine) {
        self.lines.push(line);
    }

    pub fn extend(&mut self, other: Report) {
        self.lines.extend(other.lines);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        Ok(())
    }
}
