//! Machine-checked cases for the worked examples and propositions.
//!
//! Each case runs a list of assertions. An assertion is either exact, or
//! bounded when it rests on a closure chain cut off at `k_max` or a probe
//! range; bounded assertions report `bounded-pass` instead of `pass`.

mod cases;
mod oracles;
mod report;
mod sampling;

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::lang::{parse_program, CommandOutput, Session};
use crate::ratliff_rush::ClosureConfig;

pub use oracles::monomial_corpus;
pub use report::{CaseReport, Report, Summary, SCHEMA_VERSION};
pub use sampling::{sample_d_plus_one, sample_primary, SAMPLE_SIZE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    BoundedPass,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Exact,
    Bounded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssertionReport {
    pub assertion: String,
    /// Where the claim comes from.
    pub source: String,
    pub verdict: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// Input-language program that re-runs the assertion.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub replay: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub millis: u64,
    #[serde(skip)]
    pub resource_cap: bool,
}

/// Result of evaluating one assertion body.
#[derive(Clone, Debug, Default)]
pub struct Check {
    pub ok: bool,
    pub witness: Option<String>,
    pub detail: Option<String>,
}

impl Check {
    pub fn new(ok: bool) -> Self {
        Check { ok, ..Check::default() }
    }

    pub fn witness(mut self, w: impl Into<String>) -> Self {
        self.witness = Some(w.into());
        self
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }
}

impl From<bool> for Check {
    fn from(ok: bool) -> Self {
        Check::new(ok)
    }
}

/// Assertion recorder handed to a case body.
pub struct Case {
    cfg: ClosureConfig,
    seed: u64,
    setup: String,
    out: Vec<AssertionReport>,
}

impl Case {
    fn new(cfg: ClosureConfig, seed: u64) -> Self {
        Case { cfg, seed, setup: String::new(), out: Vec::new() }
    }

    pub fn cfg(&self) -> ClosureConfig {
        self.cfg
    }

    pub fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(salt))
    }

    /// Ring and ideal declarations used by later command assertions.
    pub fn setup(&mut self, text: impl Into<String>) {
        self.setup = text.into();
    }

    pub fn session(&self) -> Result<Session> {
        session_for(&self.setup, self.cfg)
    }

    pub fn run(&self, cmd: &str) -> Result<CommandOutput> {
        let src = format!("{}\n{cmd};", self.setup);
        let s = session_for(&src, self.cfg)?;
        let c = s.program().commands().last().cloned().ok_or_else(|| AlgebraError::Internal("no command".into()))?;
        s.run_command(&c).map_err(|e| e.source)
    }

    pub fn check(&mut self, kind: Kind, assertion: impl Into<String>, source: &str, f: impl FnOnce() -> Result<Check>) {
        self.record(kind, assertion.into(), source, None, f);
    }

    /// Library-level assertion against a fresh session of the current setup.
    pub fn session_check(&mut self, kind: Kind, assertion: impl Into<String>, source: &str, f: impl FnOnce(&Session) -> Result<Check>) {
        let s = self.session();
        self.record(kind, assertion.into(), source, None, move || f(&s?));
    }

    /// Library-level assertion whose replay is `cmd` on the current setup.
    pub fn replay_check(
        &mut self,
        kind: Kind,
        assertion: impl Into<String>,
        source: &str,
        cmd: &str,
        f: impl FnOnce(&Session) -> Result<Check>,
    ) {
        let s = self.session();
        let replay = format!("{}\n{cmd};", self.setup);
        self.record(kind, assertion.into(), source, Some(replay), move || f(&s?));
    }

    /// Runs `cmd` against the current setup and judges its output.
    pub fn command(
        &mut self,
        kind: Kind,
        assertion: impl Into<String>,
        source: &str,
        cmd: &str,
        judge: impl FnOnce(&CommandOutput) -> Result<Check>,
    ) {
        let replay = format!("{}\n{cmd};", self.setup);
        let run = || -> Result<Check> {
            let out = self.run(cmd)?;
            let mut c = judge(&out)?;
            if c.witness.is_none() {
                c.witness = out.result.get("witness").and_then(|w| w.as_str()).map(str::to_string);
            }
            if c.detail.is_none() {
                c.detail = Some(out.text.clone());
            }
            Ok(c)
        };
        let res = run();
        self.record(kind, assertion.into(), source, Some(replay), || res);
    }

    fn record(&mut self, kind: Kind, assertion: String, source: &str, replay: Option<String>, f: impl FnOnce() -> Result<Check>) {
        let start = Instant::now();
        let res = f();
        let millis = start.elapsed().as_millis() as u64;
        let mut r = AssertionReport {
            assertion,
            source: source.to_string(),
            verdict: Outcome::Fail,
            witness: None,
            detail: None,
            replay,
            error: None,
            millis,
            resource_cap: false,
        };
        match res {
            Ok(c) => {
                r.verdict = match (c.ok, kind) {
                    (false, _) => Outcome::Fail,
                    (true, Kind::Exact) => Outcome::Pass,
                    (true, Kind::Bounded) => Outcome::BoundedPass,
                };
                r.witness = c.witness;
                r.detail = c.detail;
            }
            Err(e) => {
                r.resource_cap = matches!(e, AlgebraError::ResourceLimit(_));
                r.error = Some(e.to_string());
            }
        }
        self.out.push(r);
    }
}

fn session_for(src: &str, cfg: ClosureConfig) -> Result<Session> {
    let p = parse_program(src).map_err(|e| AlgebraError::Internal(format!("corpus program does not parse: {e}")))?;
    Session::new(&p, cfg).map_err(|e| e.source)
}

/// A corpus case: identifier, description, bounds and body.
pub struct CaseDef {
    pub id: &'static str,
    pub title: &'static str,
    pub config: ClosureConfig,
    pub run: fn(&mut Case),
}

/// Optional replacements for the per-case bounds.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Overrides {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_max: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub window: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_max: Option<u32>,
}

impl Overrides {
    pub fn apply(&self, cfg: ClosureConfig) -> ClosureConfig {
        ClosureConfig {
            k_max: self.k_max.unwrap_or(cfg.k_max),
            window: self.window.unwrap_or(cfg.window),
            n_max: self.n_max.unwrap_or(cfg.n_max),
        }
    }
}

pub const DEFAULT_SEED: u64 = 20240601;

pub fn all_cases() -> Vec<CaseDef> {
    let mut v = cases::cases();
    v.extend(sampling::cases());
    v.extend(oracles::cases());
    v.sort_by(|a, b| a.id.cmp(b.id));
    v
}

/// Cases whose id matches the glob `filter` (all cases when `None`).
pub fn select(filter: Option<&str>) -> std::result::Result<Vec<CaseDef>, glob::PatternError> {
    let pat = filter.map(glob::Pattern::new).transpose()?;
    Ok(all_cases().into_iter().filter(|c| pat.as_ref().map_or(true, |p| p.matches(c.id))).collect())
}

pub fn run_case(def: &CaseDef, overrides: &Overrides, seed: u64) -> CaseReport {
    let cfg = overrides.apply(def.config);
    let start = Instant::now();
    let mut case = Case::new(cfg, seed);
    match cfg.validate() {
        Ok(()) => (def.run)(&mut case),
        Err(e) => case.check(Kind::Exact, "case bounds are valid", "configuration", || Err(e)),
    }
    CaseReport {
        id: def.id.to_string(),
        title: def.title.to_string(),
        config: cfg,
        assertions: case.out,
        millis: start.elapsed().as_millis() as u64,
    }
}

/// Runs the selected cases on the rayon pool; the report is ordered by case id.
pub fn run_corpus(filter: Option<&str>, overrides: Overrides, seed: u64) -> std::result::Result<Report, glob::PatternError> {
    let defs = select(filter)?;
    let mut cases: Vec<CaseReport> = defs.par_iter().map(|d| run_case(d, &overrides, seed)).collect();
    cases.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(Report::new(filter.map(str::to_string), overrides, seed, cases))
}
