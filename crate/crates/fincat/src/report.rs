//! Pass/fail reports with concrete witnesses.
//!
//! Every law checker in this crate produces a [`Report`]. A failed check
//! always carries at least one witness naming the morphisms, objects or
//! values that violate the law, so the violation can be replayed by hand.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// A named participant in a counterexample, e.g. `("morphism f", "swap")`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub role: String,
    pub value: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    /// The law or query this report is about.
    pub name: String,
    pub status: Status,
    /// Empty on pass; non-empty on fail.
    pub witnesses: Vec<Witness>,
    /// Free-form context lines (counts, bounds used, ...).
    pub details: Vec<String>,
}

impl Report {
    pub fn pass(name: impl Into<String>) -> Self {
        Report {
            name: name.into(),
            status: Status::Pass,
            witnesses: Vec::new(),
            details: Vec::new(),
        }
    }

    pub fn fail(name: impl Into<String>, witnesses: Vec<Witness>) -> Self {
        debug_assert!(!witnesses.is_empty(), "a fail report must carry a witness");
        Report {
            name: name.into(),
            status: Status::Fail,
            witnesses,
            details: Vec::new(),
        }
    }

    pub fn with_detail(mut self, line: impl Into<String>) -> Self {
        self.details.push(line.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Merge sub-reports into one: pass iff all pass, keeping the first
    /// failure's witnesses.
    pub fn combine(name: impl Into<String>, parts: Vec<Report>) -> Report {
        let mut out = Report::pass(name);
        for part in parts {
            out.details
                .push(format!("{}: {:?}", part.name, part.status));
            if !part.passed() && out.passed() {
                out.status = Status::Fail;
                out.witnesses = part.witnesses.clone();
                out.details.extend(part.details.clone());
            }
        }
        out
    }
}

pub fn witness(role: impl Into<String>, value: impl std::fmt::Display) -> Witness {
    Witness {
        role: role.into(),
        value: value.to_string(),
    }
}
