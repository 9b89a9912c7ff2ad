//! Ascending colon chains `I^{n+k} : I^k` and the probes built on them.
//!
//! No bound on the stabilization index is known, so a chain is reported
//! either as stable over a window of equal steps or as a lower bound.

mod monomial;
mod outcome;

pub use monomial::{closure_within_integral_closure, depth_zero_witness_search};
pub use outcome::{ProbeOutcome, RenderedOutcome, Verdict};

use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::ideal::{IdealRing, PowerLadder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureConfig {
    pub k_max: u32,
    pub window: u32,
    pub n_max: u32,
}

impl Default for ClosureConfig {
    fn default() -> Self {
        ClosureConfig { k_max: 12, window: 3, n_max: 8 }
    }
}

impl ClosureConfig {
    pub fn new(k_max: u32, window: u32, n_max: u32) -> Result<Self> {
        let cfg = ClosureConfig { k_max, window, n_max };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.window < 2 {
            return Err(AlgebraError::Precondition(format!("window must be at least 2, got {}", self.window)));
        }
        if self.k_max < self.window {
            return Err(AlgebraError::Precondition(format!(
                "k_max {} is smaller than the window {}",
                self.k_max, self.window
            )));
        }
        if self.n_max == 0 {
            return Err(AlgebraError::Precondition("n_max must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ClosureStatus {
    /// The last `window` steps up to `k` added nothing.
    StabilizedWindow { k: u32, window: u32 },
    /// `k_max` steps ran without a stable window; the value is a lower bound.
    BoundReached { k_max: u32 },
    /// The ring structure proves the chain constant from step `k` on.
    Exact { k: u32 },
}

impl ClosureStatus {
    pub fn is_bound_reached(&self) -> bool {
        matches!(self, ClosureStatus::BoundReached { .. })
    }
}

#[derive(Clone, Debug)]
pub struct ClosureResult<I> {
    pub value: I,
    pub status: ClosureStatus,
    /// Steps `k` at which the accumulated value grew.
    pub growth: Vec<u32>,
    /// Last step computed.
    pub checked_through: u32,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Stop {
    Window,
    FirstGrowth,
}

fn elem_pow<I: IdealRing>(ring: &I, e: &I::Elem, k: u32) -> Result<I::Elem> {
    let mut acc = e.clone();
    for _ in 1..k {
        acc = ring.elem_mul(&acc, e)?;
    }
    Ok(acc)
}

/// The ideal `(a_1^k, ..., a_d^k)`.
pub fn reduction_power<I: IdealRing>(ring: &I, gens: &[I::Elem], k: u32) -> Result<I> {
    let mut it = gens.iter();
    let first = it.next().ok_or(AlgebraError::EmptyGenerators)?;
    let mut acc = ring.principal(&elem_pow(ring, first, k)?)?;
    for g in it {
        acc = acc.sum(&ring.principal(&elem_pow(ring, g, k)?)?)?;
    }
    Ok(acc)
}

fn run_chain<I: IdealRing>(
    ladder: &PowerLadder<I>,
    n: u32,
    divisor: &dyn Fn(u32) -> Result<I>,
    stable_from: Option<u32>,
    cfg: &ClosureConfig,
    stop: Stop,
) -> Result<ClosureResult<I>> {
    cfg.validate()?;
    let mut acc = ladder.get(n)?;
    let mut growth = Vec::new();
    let mut equal_run = 0;
    for k in 1..=cfg.k_max {
        let c = ladder.get(n + k)?.colon_with_floor(&divisor(k)?, &acc)?;
        // for fixed n the colons ascend, so c contains acc
        if acc.contains(&c)? {
            equal_run += 1;
        } else {
            acc = c;
            growth.push(k);
            equal_run = 0;
            if stop == Stop::FirstGrowth {
                return Ok(ClosureResult { value: acc, status: ClosureStatus::BoundReached { k_max: cfg.k_max }, growth, checked_through: k });
            }
        }
        if let Some(k0) = stable_from {
            if k >= k0.max(1) {
                return Ok(ClosureResult { value: acc, status: ClosureStatus::Exact { k }, growth, checked_through: k });
            }
        }
        if stop == Stop::Window && equal_run >= cfg.window {
            let status = ClosureStatus::StabilizedWindow { k, window: cfg.window };
            return Ok(ClosureResult { value: acc, status, growth, checked_through: k });
        }
    }
    Ok(ClosureResult { value: acc, status: ClosureStatus::BoundReached { k_max: cfg.k_max }, growth, checked_through: cfg.k_max })
}

/// Union of `I^{k+1} : I^k`.
pub fn rr_closure<I: IdealRing>(i: &I, cfg: &ClosureConfig) -> Result<ClosureResult<I>> {
    rr_power(i, 1, cfg)
}

/// Union of `I^{n+k} : I^k`.
pub fn rr_power<I: IdealRing>(i: &I, n: u32, cfg: &ClosureConfig) -> Result<ClosureResult<I>> {
    i.check_regular()?;
    rr_power_with_ladder(&PowerLadder::new(i.clone()), n, cfg)
}

/// As [`rr_power`], reusing memoized powers. Regularity is the caller's concern.
pub fn rr_power_with_ladder<I: IdealRing>(ladder: &PowerLadder<I>, n: u32, cfg: &ClosureConfig) -> Result<ClosureResult<I>> {
    if n == 0 {
        return Err(AlgebraError::Precondition("power index must be positive".into()));
    }
    let stable_from = ladder.base().chain_stable_from();
    run_chain(ladder, n, &|k| ladder.get(k), stable_from, cfg, Stop::Window)
}

/// Union of `I^{n+k} : (a_1^k, ..., a_d^k)` for a reduction `J = (a_1, ..., a_d)`.
pub fn rr_closure_via_reduction<I: IdealRing>(i: &I, j: &I, n: u32, cfg: &ClosureConfig) -> Result<ClosureResult<I>> {
    i.check_regular()?;
    if n == 0 {
        return Err(AlgebraError::Precondition("power index must be positive".into()));
    }
    let ladder = PowerLadder::new(i.clone());
    let check = crate::reductions::is_reduction_with_ladder(&ladder, j, cfg.n_max)?;
    if !check.verdict.holds() {
        return Err(AlgebraError::Precondition(format!("{} is not a reduction within n <= {}", j.format(), cfg.n_max)));
    }
    let gens = j.generators();
    run_chain(&ladder, n, &|k| reduction_power(i, &gens, k), None, cfg, Stop::Window)
}

fn probe_chain<I: IdealRing>(
    m: &I::Elem,
    cfg: &ClosureConfig,
    test: &dyn Fn(u32) -> Result<bool>,
) -> Result<ProbeOutcome<I::Elem>> {
    cfg.validate()?;
    for k in 1..=cfg.k_max {
        if test(k)? {
            return Ok(ProbeOutcome::new(Verdict::Member { k }, Some(m.clone())));
        }
    }
    Ok(ProbeOutcome::new(Verdict::NotMemberUpTo { k_max: cfg.k_max }, None))
}

/// Smallest `k <= k_max` with `m I^k ⊆ I^{k+1}`.
pub fn rr_membership_probe<I: IdealRing>(m: &I::Elem, i: &I, cfg: &ClosureConfig) -> Result<ProbeOutcome<I::Elem>> {
    rr_power_membership_probe(m, i, 1, cfg)
}

/// Smallest `k <= k_max` with `m I^k ⊆ I^{n+k}`.
pub fn rr_power_membership_probe<I: IdealRing>(m: &I::Elem, i: &I, n: u32, cfg: &ClosureConfig) -> Result<ProbeOutcome<I::Elem>> {
    i.check_regular()?;
    let ladder = PowerLadder::new(i.clone());
    if ladder.get(n)?.contains_elem(m)? {
        return Err(AlgebraError::Precondition(format!("{} already lies in the power {n}", i.format_elem(m))));
    }
    probe_chain::<I>(m, cfg, &|k| ladder.get(n + k)?.contains(&ladder.get(k)?.mul_elem(m)?))
}

/// Smallest `k <= k_max` with `m (a_1^k, ..., a_d^k) ⊆ I^{n+k}`.
pub fn rr_reduction_membership_probe<I: IdealRing>(
    m: &I::Elem,
    i: &I,
    j: &I,
    n: u32,
    cfg: &ClosureConfig,
) -> Result<ProbeOutcome<I::Elem>> {
    i.check_regular()?;
    let ladder = PowerLadder::new(i.clone());
    if ladder.get(n)?.contains_elem(m)? {
        return Err(AlgebraError::Precondition(format!("{} already lies in the power {n}", i.format_elem(m))));
    }
    let gens = j.generators();
    probe_chain::<I>(m, cfg, &|k| ladder.get(n + k)?.contains(&reduction_power(i, &gens, k)?.mul_elem(m)?))
}

/// Replays `m I^k ⊆ I^{n+k}`.
pub fn verify_power_member<I: IdealRing>(m: &I::Elem, i: &I, n: u32, k: u32) -> Result<bool> {
    i.power(n + k)?.contains(&i.power(k)?.mul_elem(m)?)
}

/// Replays `m (a_1^k, ..., a_d^k) ⊆ I^{n+k}`.
pub fn verify_reduction_member<I: IdealRing>(m: &I::Elem, i: &I, j: &I, n: u32, k: u32) -> Result<bool> {
    i.power(n + k)?.contains(&reduction_power(i, &j.generators(), k)?.mul_elem(m)?)
}

/// Whether the chain `I^{k+1} : I^k` stays at `I` through `k_max`.
pub fn is_rr_closed<I: IdealRing>(i: &I, cfg: &ClosureConfig) -> Result<ProbeOutcome<I::Elem>> {
    i.check_regular()?;
    let ladder = PowerLadder::new(i.clone());
    let stable_from = i.chain_stable_from();
    let res = run_chain(&ladder, 1, &|k| ladder.get(k), stable_from, cfg, Stop::FirstGrowth)?;
    match res.growth.first() {
        Some(&k) => {
            let witness = res.value.generators_outside(i)?.into_iter().next();
            Ok(ProbeOutcome::new(Verdict::FailsAt { n: k }, witness))
        }
        None => {
            let mut out = ProbeOutcome::new(Verdict::Holds { from: 1, to: res.checked_through }, None);
            if let ClosureStatus::Exact { k } = res.status {
                out.note = Some(format!("chain provably constant from k = {k}"));
            }
            Ok(out)
        }
    }
}

/// The degree-`n` defect: closure of `I^{n+1}` meet `I^n`, modulo `I^{n+1}`.
#[derive(Clone, Debug)]
pub struct Defect<I: IdealRing> {
    pub n: u32,
    pub intersection: I,
    /// Generators of the intersection outside `I^{n+1}`.
    pub representatives: Vec<I::Elem>,
    pub status: ClosureStatus,
}

impl<I: IdealRing> Defect<I> {
    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }
}

pub fn rr_defect<I: IdealRing>(i: &I, n: u32, cfg: &ClosureConfig) -> Result<Defect<I>> {
    i.check_regular()?;
    rr_defect_with_ladder(&PowerLadder::new(i.clone()), n, cfg)
}

pub fn rr_defect_with_ladder<I: IdealRing>(ladder: &PowerLadder<I>, n: u32, cfg: &ClosureConfig) -> Result<Defect<I>> {
    let closure = rr_power_with_ladder(ladder, n + 1, cfg)?;
    let intersection = closure.value.intersect(&ladder.get(n)?)?;
    let representatives = intersection.generators_outside(&ladder.get(n + 1)?)?;
    Ok(Defect { n, intersection, representatives, status: closure.status })
}

/// Whether `I^{n+w} : x = I^n` for `1 <= n <= n_max`, for `x ∈ I^w \ I^{w+1}`.
pub fn gr_nzd_probe<I: IdealRing>(x: &I::Elem, i: &I, w: u32, cfg: &ClosureConfig) -> Result<ProbeOutcome<I::Elem>> {
    cfg.validate()?;
    let ladder = PowerLadder::new(i.clone());
    if !ladder.get(w)?.contains_elem(x)? || ladder.get(w + 1)?.contains_elem(x)? {
        return Err(AlgebraError::Precondition(format!("{} does not have order {w}", i.format_elem(x))));
    }
    let px = i.principal(x)?;
    for n in 1..=cfg.n_max {
        let floor = ladder.get(n)?;
        let c = ladder.get(n + w)?.colon_with_floor(&px, &floor)?;
        if let Some(wit) = c.generators_outside(&floor)?.into_iter().next() {
            return Ok(ProbeOutcome::new(Verdict::FailsAt { n }, Some(wit)));
        }
    }
    Ok(ProbeOutcome::new(Verdict::Holds { from: 1, to: cfg.n_max }, None))
}

/// An element of `((I^n : a) ∩ I^c) \ I^{n-1}`, if any.
pub fn superficial_violation<I: IdealRing>(ladder: &PowerLadder<I>, a: &I::Elem, c: u32, n: u32) -> Result<Option<I::Elem>> {
    if n == 0 {
        return Err(AlgebraError::Precondition("power index must be positive".into()));
    }
    let floor = ladder.get(n - 1)?;
    let colon = ladder.get(n)?.colon_with_floor(&ladder.base().principal(a)?, &floor)?;
    let meet = colon.intersect(&ladder.get(c)?)?;
    Ok(meet.generators_outside(&floor)?.into_iter().next())
}

/// Searches `c = 1..=n_max` for one with `(I^n : a) ∩ I^c = I^{n-1}` for
/// `c < n <= c + n_max`. On failure the witness is the one found for `c = 1`.
pub fn superficial_probe<I: IdealRing>(a: &I::Elem, i: &I, cfg: &ClosureConfig) -> Result<ProbeOutcome<I::Elem>> {
    cfg.validate()?;
    if !i.contains_elem(a)? {
        return Err(AlgebraError::Precondition(format!("{} is not in the ideal", i.format_elem(a))));
    }
    let ladder = PowerLadder::new(i.clone());
    let mut first: Option<(u32, I::Elem)> = None;
    for c in 1..=cfg.n_max {
        let mut violated = false;
        for n in (c + 1)..=(c + cfg.n_max) {
            if let Some(w) = superficial_violation(&ladder, a, c, n)? {
                if first.is_none() {
                    first = Some((n, w));
                }
                violated = true;
                break;
            }
        }
        if !violated {
            return Ok(ProbeOutcome::new(Verdict::Holds { from: c, to: c + cfg.n_max }, None));
        }
    }
    let (n, w) = first.expect("n_max is positive");
    let mut out = ProbeOutcome::new(Verdict::FailsAt { n }, Some(w));
    out.note = Some(format!("violated for every c <= {}", cfg.n_max));
    Ok(out)
}
