use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use super::ast::{Command, Expr, FieldSpec, Program, RingDecl, Stmt};
use crate::algebra::{Field, Monomial, MonomialOrder, OrderKind, Polynomial, Ring};
use crate::error::{AlgebraError, Result};
use crate::groebner::IdealHandle;
use crate::ideal::IdealRing;
use crate::monomial_ideal::MonomialIdeal;
use crate::ratliff_rush::{self as rr, ClosureConfig, ClosureResult, ClosureStatus, ProbeOutcome, Verdict};
use crate::reductions::{self, BoundedValue};
use crate::semigroup_rings::{AffineIdeal, AffineSemigroup2D, NumericalSemigroup, Point, SemigroupIdeal};

/// Result of one command: printable text plus a structured value.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CommandOutput {
    pub command: String,
    pub text: String,
    pub result: Value,
    /// Set by assertion commands.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub passed: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{command}: {source}")]
pub struct ExecError {
    pub command: String,
    pub source: AlgebraError,
}

enum Env {
    Mono { ring: Arc<Ring>, ideals: BTreeMap<String, MonomialIdeal> },
    Poly { ring: Arc<Ring>, ideals: BTreeMap<String, IdealHandle> },
    Num { ideals: BTreeMap<String, SemigroupIdeal> },
    Aff { ideals: BTreeMap<String, AffineIdeal> },
}

/// A checked program bound to concrete ideals.
pub struct Session {
    program: Program,
    env: Env,
    cfg: ClosureConfig,
}

fn precondition(msg: impl Into<String>) -> AlgebraError {
    AlgebraError::Precondition(msg.into())
}

fn small(v: u64) -> Result<u32> {
    u32::try_from(v).map_err(|_| precondition(format!("{v} is too large")))
}

fn eval_poly(ring: &Ring, e: &Expr) -> Result<Polynomial> {
    match e {
        Expr::Int(v) => Ok(ring.constant(i64::try_from(*v).map_err(|_| precondition(format!("{v} is too large")))?)),
        Expr::Var(n) => ring.var_index(n).map(|i| ring.var(i)).ok_or_else(|| precondition(format!("unknown variable {n}"))),
        Expr::Pair(..) => Err(precondition("pairs are only valid in affine semigroup rings")),
        Expr::Neg(a) => Ok(eval_poly(ring, a)?.neg()),
        Expr::Add(a, b) => eval_poly(ring, a)?.add(&eval_poly(ring, b)?),
        Expr::Sub(a, b) => eval_poly(ring, a)?.sub(&eval_poly(ring, b)?),
        Expr::Mul(a, b) => eval_poly(ring, a)?.mul(&eval_poly(ring, b)?),
        Expr::Pow(a, k) => eval_poly(ring, a)?.pow(small(*k)?),
    }
}

fn eval_monomial(ring: &Ring, e: &Expr) -> Result<Monomial> {
    let p = eval_poly(ring, e)?;
    p.as_monomial().cloned().ok_or_else(|| precondition(format!("{e} is not a monomial")))
}

fn eval_exponent(e: &Expr) -> Result<u32> {
    match e {
        Expr::Int(1) => Ok(0),
        Expr::Var(v) if v == "t" => Ok(1),
        Expr::Pow(a, k) => eval_exponent(a)?.checked_mul(small(*k)?).ok_or(AlgebraError::ExponentOverflow),
        Expr::Mul(a, b) => eval_exponent(a)?.checked_add(eval_exponent(b)?).ok_or(AlgebraError::ExponentOverflow),
        _ => Err(precondition(format!("{e} is not a power of t"))),
    }
}

fn eval_point(e: &Expr) -> Result<Point> {
    match e {
        Expr::Int(1) => Ok((0, 0)),
        Expr::Pair(a, b) => Ok((small(*a)?, small(*b)?)),
        Expr::Mul(a, b) => {
            let (p, q) = (eval_point(a)?, eval_point(b)?);
            Ok((p.0.checked_add(q.0).ok_or(AlgebraError::ExponentOverflow)?, p.1.checked_add(q.1).ok_or(AlgebraError::ExponentOverflow)?))
        }
        _ => Err(precondition(format!("{e} is not a semigroup point"))),
    }
}

fn build_ring(program: &Program, order: Option<MonomialOrder>) -> Result<Ring> {
    let Some(RingDecl::Poly { field, vars, quotient, .. }) = program.ring() else {
        return Err(precondition("not a polynomial ring"));
    };
    let field = match field {
        FieldSpec::Rationals => Field::Rationals,
        FieldSpec::Prime(p) => Field::prime(*p)?,
    };
    let mut ring = Ring::new(vars.clone(), field)?;
    if let Some(o) = order {
        ring = ring.with_order(o)?;
    }
    let q = quotient.iter().map(|e| eval_poly(&ring, e)).collect::<Result<Vec<_>>>()?;
    ring = ring.with_quotient(q)?;
    for s in &program.stmts {
        if let Stmt::Regular(e) = s {
            let x = eval_poly(&ring, e)?;
            ring = ring.with_regular_element(x)?;
        }
    }
    Ok(ring)
}

fn ideal_stmts(program: &Program) -> impl Iterator<Item = (&String, &Vec<Expr>)> {
    program.stmts.iter().filter_map(|s| match s {
        Stmt::Ideal { name, gens } => Some((name, gens)),
        _ => None,
    })
}

/// Expressions that will be evaluated as ring elements.
fn element_exprs(program: &Program) -> Vec<&Expr> {
    let mut out: Vec<&Expr> = ideal_stmts(program).flat_map(|(_, g)| g.iter()).collect();
    for c in program.commands() {
        if let Some(sig) = super::signature(&c.name) {
            for (k, a) in sig.iter().zip(&c.args) {
                if *k == super::Arg::Elem {
                    out.push(a);
                }
            }
        }
    }
    out
}

fn build_env(program: &Program) -> Result<Env> {
    match program.ring() {
        Some(RingDecl::Poly { .. }) => {
            let ring = Arc::new(build_ring(program, None)?);
            let mut monomial = !ring.is_quotient();
            for e in element_exprs(program) {
                if eval_poly(&ring, e)?.as_monomial().is_none() {
                    monomial = false;
                }
            }
            if monomial {
                let mut ideals = BTreeMap::new();
                for (name, gens) in ideal_stmts(program) {
                    let ms = gens.iter().map(|g| eval_monomial(&ring, g)).collect::<Result<Vec<_>>>()?;
                    ideals.insert(name.clone(), MonomialIdeal::from_ring_monomials(&ring, &ms)?);
                }
                Ok(Env::Mono { ring, ideals })
            } else {
                let mut ideals = BTreeMap::new();
                for (name, gens) in ideal_stmts(program) {
                    let ps = gens.iter().map(|g| eval_poly(&ring, g)).collect::<Result<Vec<_>>>()?;
                    ideals.insert(name.clone(), IdealHandle::new(ring.clone(), ps)?);
                }
                Ok(Env::Poly { ring, ideals })
            }
        }
        Some(RingDecl::Numerical { gens, .. }) => {
            let g = gens.iter().map(|v| small(*v)).collect::<Result<Vec<_>>>()?;
            let s = Arc::new(NumericalSemigroup::new(&g)?);
            let mut ideals = BTreeMap::new();
            for (name, gens) in ideal_stmts(program) {
                let es = gens.iter().map(eval_exponent).collect::<Result<Vec<_>>>()?;
                ideals.insert(name.clone(), SemigroupIdeal::new(s.clone(), &es)?);
            }
            Ok(Env::Num { ideals })
        }
        Some(RingDecl::Affine { gens, .. }) => {
            let g = gens.iter().map(|(a, b)| Ok((small(*a)?, small(*b)?))).collect::<Result<Vec<_>>>()?;
            let s = Arc::new(AffineSemigroup2D::new(&g)?);
            let mut ideals = BTreeMap::new();
            for (name, gens) in ideal_stmts(program) {
                let ps = gens.iter().map(eval_point).collect::<Result<Vec<_>>>()?;
                ideals.insert(name.clone(), AffineIdeal::new(s.clone(), &ps)?);
            }
            Ok(Env::Aff { ideals })
        }
        None => Err(precondition("missing ring declaration")),
    }
}

fn command_config(base: &ClosureConfig, c: &Command) -> Result<ClosureConfig> {
    let mut cfg = *base;
    for (k, v) in &c.options {
        let v = small(*v)?;
        match k.as_str() {
            "kmax" => cfg.k_max = v,
            "window" => cfg.window = v,
            "nmax" => cfg.n_max = v,
            _ => return Err(precondition(format!("unknown option {k}"))),
        }
    }
    cfg.validate()?;
    Ok(cfg)
}

pub fn status_text(s: &ClosureStatus) -> String {
    match s {
        ClosureStatus::StabilizedWindow { k, window } => format!("stable for {window} steps at k={k}"),
        ClosureStatus::BoundReached { k_max } => format!("bound reached at k={k_max}, lower bound"),
        ClosureStatus::Exact { k } => format!("exact from k={k}"),
    }
}

pub fn verdict_text(v: &Verdict) -> String {
    match v {
        Verdict::Member { k } => format!("member (k={k})"),
        Verdict::NotMemberUpTo { k_max } => format!("not a member up to k={k_max}"),
        Verdict::Holds { from, to } => format!("holds for n={from}..{to}"),
        Verdict::FailsAt { n } => format!("fails at n={n}"),
    }
}

fn bounded_text(v: &BoundedValue) -> String {
    match v {
        BoundedValue::Exact(x) => x.to_string(),
        BoundedValue::BoundReached(x) => format!("undetermined up to {x}"),
    }
}

fn ideal_value<I: IdealRing>(i: &I) -> Value {
    let gens: Vec<String> = i.generators().iter().map(|g| i.format_elem(g)).collect();
    json!({ "ideal": i.format(), "generators": gens })
}

fn closure_out<I: IdealRing>(r: &ClosureResult<I>) -> (String, Value) {
    let text = format!("{} [{}]", r.value.format(), status_text(&r.status));
    let mut v = ideal_value(&r.value);
    v["status"] = json!(r.status);
    v["growth"] = json!(r.growth);
    v["checked_through"] = json!(r.checked_through);
    (text, v)
}

fn probe_out<I: IdealRing>(i: &I, p: &ProbeOutcome<I::Elem>) -> (String, Value) {
    let r = p.render(|e| i.format_elem(e));
    let mut text = verdict_text(&r.verdict);
    if let Some(w) = &r.witness {
        text.push_str(&format!(", witness {w}"));
    }
    (text, json!(r))
}

fn ideal_out<I: IdealRing>(i: &I) -> (String, Value) {
    (i.format(), ideal_value(i))
}

fn bool_out(b: bool) -> (String, Value) {
    (b.to_string(), json!(b))
}

type Produced = (String, Value, Option<bool>);

fn plain((t, v): (String, Value)) -> Produced {
    (t, v, None)
}

/// Commands available for every ideal type.
fn run_generic<I: IdealRing>(
    c: &Command,
    ideals: &BTreeMap<String, I>,
    elem: &dyn Fn(&Expr) -> Result<I::Elem>,
    cfg: &ClosureConfig,
) -> Result<Option<Produced>> {
    let id = |k: usize| -> Result<&I> {
        match &c.args[k] {
            Expr::Var(n) => ideals.get(n).ok_or_else(|| precondition(format!("{n} is not a declared ideal"))),
            e => Err(precondition(format!("{e} is not an ideal name"))),
        }
    };
    let int = |k: usize| -> Result<u32> {
        match &c.args[k] {
            Expr::Int(v) => small(*v),
            e => Err(precondition(format!("{e} is not an integer"))),
        }
    };
    let el = |k: usize| elem(&c.args[k]);
    let out = match c.name.as_str() {
        "rr_closure" => plain(closure_out(&rr::rr_closure(id(0)?, cfg)?)),
        "rr_power" => plain(closure_out(&rr::rr_power(id(0)?, int(1)?, cfg)?)),
        "rr_via_reduction" => plain(closure_out(&rr::rr_closure_via_reduction(id(0)?, id(1)?, int(2)?, cfg)?)),
        "rr_probe" => plain(probe_out(id(1)?, &rr::rr_membership_probe(&el(0)?, id(1)?, cfg)?)),
        "rr_power_probe" => plain(probe_out(id(1)?, &rr::rr_power_membership_probe(&el(0)?, id(1)?, int(2)?, cfg)?)),
        "rr_reduction_probe" => {
            plain(probe_out(id(1)?, &rr::rr_reduction_membership_probe(&el(0)?, id(1)?, id(2)?, int(3)?, cfg)?))
        }
        "is_rr_closed" => plain(probe_out(id(0)?, &rr::is_rr_closed(id(0)?, cfg)?)),
        "rr_defect" => {
            let i = id(0)?;
            let d = rr::rr_defect(i, int(1)?, cfg)?;
            let reps: Vec<String> = d.representatives.iter().map(|e| i.format_elem(e)).collect();
            let text = if d.is_empty() {
                format!("empty [{}]", status_text(&d.status))
            } else {
                format!("nonzero, representatives {} [{}]", reps.join(", "), status_text(&d.status))
            };
            let v = json!({ "n": d.n, "empty": d.is_empty(), "intersection": d.intersection.format(),
                            "representatives": reps, "status": d.status });
            (text, v, None)
        }
        "gr_nzd" => plain(probe_out(id(1)?, &rr::gr_nzd_probe(&el(0)?, id(1)?, int(2)?, cfg)?)),
        "superficial" => plain(probe_out(id(1)?, &rr::superficial_probe(&el(0)?, id(1)?, cfg)?)),
        "is_reduction" => plain(probe_out(id(0)?, &reductions::is_reduction(id(0)?, id(1)?, cfg.n_max)?)),
        "reduction_number" => {
            let r = reductions::reduction_number(id(0)?, id(1)?, cfg.n_max)?;
            (r.to_string(), json!(r), None)
        }
        "rr_reduction_number" => {
            let r = reductions::rr_reduction_number(id(0)?, id(1)?, cfg)?;
            (bounded_text(&r), json!(r), None)
        }
        "s_invariant" => {
            let r = reductions::s_invariant(id(0)?, cfg)?;
            (bounded_text(&r), json!(r), None)
        }
        "reduction_report" => {
            let r = reductions::reduction_report(id(0)?, id(1)?, cfg)?;
            let text = format!("r={} rr_r={} s={}", bounded_text(&r.r), bounded_text(&r.rr_r), bounded_text(&r.s));
            (text, json!(r), None)
        }
        "principal_conditions" => {
            let p = reductions::prop41_equivalence_check(id(0)?, &el(1)?, int(2)?, cfg)?;
            let text = format!("t={} b={} d={} e={} cokernel={} agree={}", p.t, p.b, p.d, p.e, p.cokernel_trivial, p.agree());
            (text, json!(p), None)
        }
        "principal_comparison" => {
            let p = reductions::prop42_check(id(0)?, &el(1)?, cfg)?;
            (format!("{p:?}"), json!(p), None)
        }
        "member" => plain(bool_out(id(1)?.contains_elem(&el(0)?)?)),
        "contains" => plain(bool_out(id(0)?.contains(id(1)?)?)),
        "equal" => plain(bool_out(id(0)?.equals(id(1)?)?)),
        "colon" => plain(ideal_out(&id(0)?.colon(id(1)?)?)),
        "intersect" => plain(ideal_out(&id(0)?.intersect(id(1)?)?)),
        "sum" => plain(ideal_out(&id(0)?.sum(id(1)?)?)),
        "product" => plain(ideal_out(&id(0)?.product(id(1)?)?)),
        "power" => plain(ideal_out(&id(0)?.power(int(1)?)?)),
        "mingens" => {
            let i = id(0)?;
            let g: Vec<String> = i.generators().iter().map(|e| i.format_elem(e)).collect();
            (format!("{} generators: {}", g.len(), g.join(", ")), json!(g), None)
        }
        "assert_member" => {
            let b = id(1)?.contains_elem(&el(0)?)?;
            (b.to_string(), json!(b), Some(b))
        }
        "assert_not_member" => {
            let b = !id(1)?.contains_elem(&el(0)?)?;
            (b.to_string(), json!(b), Some(b))
        }
        "assert_contains" => {
            let b = id(0)?.contains(id(1)?)?;
            (b.to_string(), json!(b), Some(b))
        }
        "assert_equal" => {
            let b = id(0)?.equals(id(1)?)?;
            (b.to_string(), json!(b), Some(b))
        }
        _ => return Ok(None),
    };
    Ok(Some(out))
}

/// Commands specific to monomial ideals.
fn run_monomial(
    c: &Command,
    lookup: &dyn Fn(&str) -> Result<MonomialIdeal>,
    elem: &dyn Fn(&Expr) -> Result<Monomial>,
    cfg: &ClosureConfig,
) -> Result<Option<Produced>> {
    let id = |k: usize| -> Result<MonomialIdeal> {
        match &c.args[k] {
            Expr::Var(n) => lookup(n),
            e => Err(precondition(format!("{e} is not an ideal name"))),
        }
    };
    let out = match c.name.as_str() {
        "depth_zero" => {
            let i = id(0)?;
            plain(probe_out(&i, &rr::depth_zero_witness_search(&i, cfg)?))
        }
        "integral_closure" => plain(ideal_out(&id(0)?.integral_closure()?)),
        "is_integral" => plain(bool_out(id(1)?.is_integral_over(&elem(&c.args[0])?))),
        "ass_primes" => {
            let i = id(0)?;
            let ps: Vec<String> = i.associated_primes()?.iter().map(|p| i.format_prime(p)).collect();
            (format!("{{{}}}", ps.join(", ")), json!(ps), None)
        }
        "socle" => {
            let i = id(0)?;
            let ms: Vec<String> = i.socle_candidates()?.iter().map(|m| i.format_monomial(m)).collect();
            (ms.join(", "), json!(ms), None)
        }
        _ => return Ok(None),
    };
    Ok(Some(out))
}

fn unsupported(c: &Command, what: &str) -> AlgebraError {
    AlgebraError::Unsupported(format!("{} needs {what}", c.name))
}

impl Session {
    pub fn new(program: &Program, cfg: ClosureConfig) -> std::result::Result<Session, ExecError> {
        let wrap = |source| ExecError { command: "setup".into(), source };
        cfg.validate().map_err(wrap)?;
        let env = build_env(program).map_err(wrap)?;
        Ok(Session { program: program.clone(), env, cfg })
    }

    pub fn program(&self) -> &Program {
        &self.program
    }

    /// The named ideal when the session uses the monomial carrier.
    pub fn monomial(&self, name: &str) -> Option<&MonomialIdeal> {
        match &self.env {
            Env::Mono { ideals, .. } => ideals.get(name),
            _ => None,
        }
    }

    /// The named ideal of a polynomial or quotient ring as a Gröbner handle.
    pub fn handle(&self, name: &str) -> Result<IdealHandle> {
        match &self.env {
            Env::Mono { ring, ideals } => IdealHandle::from_monomial_ideal(ring.clone(), poly_lookup(ideals, name)?),
            Env::Poly { ideals, .. } => Ok(poly_lookup(ideals, name)?.clone()),
            _ => Err(precondition("not a polynomial ring")),
        }
    }

    pub fn ring(&self) -> Option<&Arc<Ring>> {
        match &self.env {
            Env::Mono { ring, .. } | Env::Poly { ring, .. } => Some(ring),
            _ => None,
        }
    }

    pub fn numerical(&self, name: &str) -> Option<&SemigroupIdeal> {
        match &self.env {
            Env::Num { ideals } => ideals.get(name),
            _ => None,
        }
    }

    pub fn affine(&self, name: &str) -> Option<&AffineIdeal> {
        match &self.env {
            Env::Aff { ideals } => ideals.get(name),
            _ => None,
        }
    }

    /// Evaluates an element expression in a polynomial ring.
    pub fn poly(&self, text: &str) -> Result<Polynomial> {
        let ring = self.ring().ok_or_else(|| precondition("not a polynomial ring"))?;
        let e = super::parse_expr(text).map_err(|e| precondition(e.to_string()))?;
        eval_poly(ring, &e)
    }

    pub fn config(&self) -> &ClosureConfig {
        &self.cfg
    }

    /// The monomial ideal carrier is used iff the ring is not a quotient and every element is a monomial.
    pub fn is_monomial(&self) -> bool {
        matches!(self.env, Env::Mono { .. })
    }

    pub fn run(&self) -> std::result::Result<Vec<CommandOutput>, ExecError> {
        self.program.commands().map(|c| self.run_command(c)).collect()
    }

    pub fn run_command(&self, c: &Command) -> std::result::Result<CommandOutput, ExecError> {
        let (text, result, passed) =
            self.dispatch(c).map_err(|source| ExecError { command: c.to_string(), source })?;
        Ok(CommandOutput { command: c.to_string(), text, result, passed })
    }

    fn dispatch(&self, c: &Command) -> Result<Produced> {
        let cfg = command_config(&self.cfg, c)?;
        let found = match &self.env {
            Env::Mono { ring, ideals } => {
                let elem = |e: &Expr| eval_monomial(ring, e);
                match run_generic(c, ideals, &elem, &cfg)? {
                    Some(o) => Some(o),
                    None => {
                        let lookup = |n: &str| ideals.get(n).cloned().ok_or_else(|| precondition(format!("{n} is not a declared ideal")));
                        match run_monomial(c, &lookup, &elem, &cfg)? {
                            Some(o) => Some(o),
                            None => match c.name.as_str() {
                                "lt" | "gb" => {
                                    let i = lookup(&arg_name(c, 0)?)?;
                                    Some(plain(ideal_out(&i)))
                                }
                                _ => None,
                            },
                        }
                    }
                }
            }
            Env::Poly { ring, ideals } => {
                let elem = |e: &Expr| eval_poly(ring, e);
                match run_generic(c, ideals, &elem, &cfg)? {
                    Some(o) => Some(o),
                    None => match c.name.as_str() {
                        "lt" => {
                            let i = poly_ideal(ideals, &arg_name(c, 0)?)?;
                            Some(plain(ideal_out(&i.leading_term_ideal(ring.order())?)))
                        }
                        "gb" => {
                            let i = poly_ideal(ideals, &arg_name(c, 0)?)?;
                            let gb = i.default_basis()?;
                            let ps: Vec<String> = gb.polys().iter().map(|p| ring.format(p)).collect();
                            Some((ps.join(", "), json!(ps), None))
                        }
                        _ => {
                            if ring.is_quotient() {
                                return Err(unsupported(c, "a polynomial ring without relations"));
                            }
                            let lookup = |n: &str| {
                                poly_ideal(ideals, n)?.as_monomial_ideal().ok_or_else(|| unsupported(c, "a monomial ideal"))
                            };
                            let melem = |e: &Expr| eval_monomial(ring, e);
                            run_monomial(c, &lookup, &melem, &cfg)?
                        }
                    },
                }
            }
            Env::Num { ideals } => run_generic(c, ideals, &|e| eval_exponent(e), &cfg)?,
            Env::Aff { ideals } => run_generic(c, ideals, &|e| eval_point(e), &cfg)?,
        };
        found.ok_or_else(|| unsupported(c, "a polynomial ring"))
    }
}

fn arg_name(c: &Command, k: usize) -> Result<String> {
    match c.args.get(k) {
        Some(Expr::Var(n)) => Ok(n.clone()),
        _ => Err(precondition("expected an ideal name")),
    }
}

fn poly_lookup<'a, T>(ideals: &'a BTreeMap<String, T>, n: &str) -> Result<&'a T> {
    ideals.get(n).ok_or_else(|| precondition(format!("{n} is not a declared ideal")))
}

fn poly_ideal<'a>(ideals: &'a BTreeMap<String, IdealHandle>, n: &str) -> Result<&'a IdealHandle> {
    ideals.get(n).ok_or_else(|| precondition(format!("{n} is not a declared ideal")))
}

pub fn run_program(program: &Program, cfg: ClosureConfig) -> std::result::Result<Vec<CommandOutput>, ExecError> {
    Session::new(program, cfg)?.run()
}

/// Reduced Gröbner bases of every declared ideal under the given order.
/// `vars` lists the variables from most to least significant.
pub fn groebner_listing(program: &Program, kind: OrderKind, vars: Option<&[String]>) -> Result<String> {
    let Some(RingDecl::Poly { vars: names, .. }) = program.ring() else {
        return Err(precondition("gb needs a polynomial ring"));
    };
    let priority = match vars {
        None => (0..names.len()).collect(),
        Some(vs) => {
            let p: Vec<usize> = vs
                .iter()
                .map(|v| names.iter().position(|n| n == v).ok_or_else(|| precondition(format!("unknown variable {v}"))))
                .collect::<Result<_>>()?;
            let mut sorted = p.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != names.len() || p.len() != names.len() {
                return Err(precondition("--vars must list every variable exactly once"));
            }
            p
        }
    };
    let ring = Arc::new(build_ring(program, Some(MonomialOrder::new(kind, priority)?))?);
    let mut out = String::new();
    for (name, gens) in ideal_stmts(program) {
        let ps = gens.iter().map(|g| eval_poly(&ring, g)).collect::<Result<Vec<_>>>()?;
        let gb = IdealHandle::new(ring.clone(), ps)?.default_basis()?;
        let lines: Vec<String> = gb.polys().iter().map(|p| ring.format(p)).collect();
        out.push_str(&format!("{name}: {}\n", lines.join(", ")));
    }
    Ok(out)
}
