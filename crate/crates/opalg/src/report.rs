//! Machine- and human-readable check reports.
//!
//! Every check emits one line per (name, arity) pair. Reports are
//! deterministic: lines appear in the order the checks ran.

use std::fmt;

/// Outcome of a single named check at a single arity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub name: String,
    pub arity: usize,
    pub pass: bool,
    /// Number of residual terms (nonzero entries) left by the check;
    /// zero exactly when the check passes.
    pub residual_terms: usize,
    /// Optional human-oriented detail, e.g. the first offending entry.
    pub detail: Option<String>,
}

impl CheckLine {
    pub fn pass(name: impl Into<String>, arity: usize) -> Self {
        CheckLine {
            name: name.into(),
            arity,
            pass: true,
            residual_terms: 0,
            detail: None,
        }
    }

    pub fn fail(
        name: impl Into<String>,
        arity: usize,
        residual_terms: usize,
        detail: Option<String>,
    ) -> Self {
        CheckLine {
            name: name.into(),
            arity,
            pass: false,
            residual_terms,
            detail,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub lines: Vec<CheckLine>,
}

impl Report {
    pub fn new() -> Self {
        Report { lines: Vec::new() }
    }

    pub fn push(&mut self, line: CheckLine) {
        self.lines.push(line);
    }

    pub fn merge(&mut self, other: Report) {
        self.lines.extend(other.lines);
    }

    /// True when every line passed.
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckLine> {
        self.lines.iter().filter(|l| !l.pass)
    }

    /// Line-oriented machine format: `name arity pass|fail residual-count`.
    pub fn machine(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            out.push_str(&format!(
                "{} {} {} {}\n",
                l.name,
                l.arity,
                if l.pass { "pass" } else { "fail" },
                l.residual_terms
            ));
        }
        out
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            write!(
                f,
                "{:<18} arity {:<2} {}",
                l.name,
                l.arity,
                if l.pass { "ok" } else { "FAIL" }
            )?;
            if !l.pass {
                write!(f, "  ({} residual terms)", l.residual_terms)?;
                if let Some(d) = &l.detail {
                    write!(f, "  first: {d}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
