use std::fmt::Write;

use serde::Serialize;

use super::{AssertionReport, Outcome, Overrides};
use crate::ratliff_rush::ClosureConfig;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub id: String,
    pub title: String,
    pub config: ClosureConfig,
    pub assertions: Vec<AssertionReport>,
    pub millis: u64,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        !self.assertions.is_empty() && self.assertions.iter().all(|a| a.verdict != Outcome::Fail)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub cases: usize,
    pub assertions: usize,
    pub pass: usize,
    pub bounded_pass: usize,
    pub fail: usize,
    pub resource_cap: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub tool: String,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub filter: Option<String>,
    pub overrides: Overrides,
    pub summary: Summary,
    pub cases: Vec<CaseReport>,
}

impl Report {
    pub fn new(filter: Option<String>, overrides: Overrides, seed: u64, cases: Vec<CaseReport>) -> Self {
        let mut s = Summary { cases: cases.len(), ..Summary::default() };
        for a in cases.iter().flat_map(|c| &c.assertions) {
            s.assertions += 1;
            match a.verdict {
                Outcome::Pass => s.pass += 1,
                Outcome::BoundedPass => s.bounded_pass += 1,
                Outcome::Fail => s.fail += 1,
            }
            if a.resource_cap {
                s.resource_cap += 1;
            }
        }
        Report {
            schema: SCHEMA_VERSION,
            tool: concat!("rrlab ", env!("CARGO_PKG_VERSION")).to_string(),
            seed,
            filter,
            overrides,
            summary: s,
            cases,
        }
    }

    /// 0 when nothing failed, 3 when a failure hit a resource cap, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.summary.resource_cap > 0 {
            3
        } else if self.summary.fail > 0 {
            1
        } else {
            0
        }
    }

    /// Zeroes all timings so that reports are byte-stable.
    pub fn strip_timings(&mut self) {
        for c in &mut self.cases {
            c.millis = 0;
            for a in &mut c.assertions {
                a.millis = 0;
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let _ = writeln!(out, "{} {} ({} ms)", c.id, c.title, c.millis);
            for a in &c.assertions {
                let tag = match a.verdict {
                    Outcome::Pass => "pass",
                    Outcome::BoundedPass => "bounded-pass",
                    Outcome::Fail => "FAIL",
                };
                let _ = write!(out, "  [{tag}] {}", a.assertion);
                if let Some(w) = &a.witness {
                    let _ = write!(out, " (witness {w})");
                }
                if let Some(e) = &a.error {
                    let _ = write!(out, " error: {e}");
                }
                out.push('\n');
            }
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "{} cases, {} assertions: {} pass, {} bounded-pass, {} fail",
            s.cases, s.assertions, s.pass, s.bounded_pass, s.fail
        );
        out
    }
}
