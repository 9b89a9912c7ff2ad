//! Reductions `J ⊆ I` and the invariants `r_J(I)`, the closure-filtration
//! reduction number and `s(I)`, all computed over bounded ranges.

use std::collections::BTreeMap;
use std::sync::Mutex;

use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::ideal::{IdealRing, PowerLadder};
use crate::ratliff_rush::{rr_power_with_ladder, ClosureConfig, ClosureStatus, ProbeOutcome, Verdict};

/// An invariant computed over `0..=bound`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "value", rename_all = "kebab-case")]
pub enum BoundedValue {
    /// Least value for which the defining condition holds on the whole checked range.
    Exact(u32),
    /// No value found within the bound, or an input closure was only a lower bound.
    BoundReached(u32),
}

impl BoundedValue {
    pub fn exact(&self) -> Option<u32> {
        match self {
            BoundedValue::Exact(v) => Some(*v),
            BoundedValue::BoundReached(_) => None,
        }
    }
}

/// Least `n` such that `flags[n..]` are all true.
fn least_tail(flags: &[bool]) -> Option<u32> {
    if flags.last() != Some(&true) {
        return None;
    }
    let mut n = flags.len();
    while n > 0 && flags[n - 1] {
        n -= 1;
    }
    Some(n as u32)
}

fn ensure_contained<I: IdealRing>(i: &I, j: &I) -> Result<()> {
    if !i.contains(j)? {
        return Err(AlgebraError::Precondition(format!("{} is not contained in {}", j.format(), i.format())));
    }
    Ok(())
}

/// Holds from the least `n <= n_max` with `J I^n = I^{n+1}`.
pub fn is_reduction<I: IdealRing>(i: &I, j: &I, n_max: u32) -> Result<ProbeOutcome<I::Elem>> {
    is_reduction_with_ladder(&PowerLadder::new(i.clone()), j, n_max)
}

pub fn is_reduction_with_ladder<I: IdealRing>(ladder: &PowerLadder<I>, j: &I, n_max: u32) -> Result<ProbeOutcome<I::Elem>> {
    ensure_contained(ladder.base(), j)?;
    for n in 0..=n_max {
        if j.product(&ladder.get(n)?)?.contains(&ladder.get(n + 1)?)? {
            return Ok(ProbeOutcome::new(Verdict::Holds { from: n, to: n_max }, None));
        }
    }
    Ok(ProbeOutcome::new(Verdict::FailsAt { n: n_max }, None))
}

/// Least `n <= n_max` with `I^{n+1} = J I^n`.
pub fn reduction_number<I: IdealRing>(i: &I, j: &I, n_max: u32) -> Result<u32> {
    match is_reduction(i, j, n_max)?.verdict {
        Verdict::Holds { from, .. } => Ok(from),
        _ => Err(AlgebraError::Precondition(format!("{} is not a reduction within n <= {n_max}", j.format()))),
    }
}

/// Memoized closures of the powers of `I`.
pub struct Filtration<'a, I: IdealRing> {
    ladder: &'a PowerLadder<I>,
    cfg: ClosureConfig,
    memo: Mutex<BTreeMap<u32, (I, ClosureStatus)>>,
}

impl<'a, I: IdealRing> Filtration<'a, I> {
    pub fn new(ladder: &'a PowerLadder<I>, cfg: ClosureConfig) -> Self {
        Filtration { ladder, cfg, memo: Mutex::new(BTreeMap::new()) }
    }

    pub fn ladder(&self) -> &PowerLadder<I> {
        self.ladder
    }

    /// The closure of `I^m`; `m = 0` gives the unit ideal.
    pub fn get(&self, m: u32) -> Result<(I, ClosureStatus)> {
        if m == 0 {
            return Ok((self.ladder.get(0)?, ClosureStatus::Exact { k: 0 }));
        }
        if let Some(v) = self.memo.lock().expect("filtration lock poisoned").get(&m) {
            return Ok(v.clone());
        }
        let res = rr_power_with_ladder(self.ladder, m, &self.cfg)?;
        let v = (res.value, res.status);
        self.memo.lock().expect("filtration lock poisoned").insert(m, v.clone());
        Ok(v)
    }

    pub fn value(&self, m: u32) -> Result<I> {
        Ok(self.get(m)?.0)
    }

    pub fn certified(&self, m: u32) -> Result<bool> {
        Ok(!self.get(m)?.1.is_bound_reached())
    }
}

/// Least `n` with `~I^{m+1} = J ~I^m` for `n <= m <= n_max`.
pub fn rr_reduction_number<I: IdealRing>(i: &I, j: &I, cfg: &ClosureConfig) -> Result<BoundedValue> {
    i.check_regular()?;
    let ladder = PowerLadder::new(i.clone());
    rr_reduction_number_in(&Filtration::new(&ladder, *cfg), j)
}

pub fn rr_reduction_number_in<I: IdealRing>(f: &Filtration<'_, I>, j: &I) -> Result<BoundedValue> {
    let n_max = f.cfg.n_max;
    let mut flags = Vec::new();
    let mut certified = true;
    for m in 0..=n_max {
        let lhs = f.value(m + 1)?;
        let rhs = j.product(&f.value(m)?)?;
        certified &= f.certified(m)? && f.certified(m + 1)?;
        flags.push(lhs.equals(&rhs)?);
    }
    Ok(match least_tail(&flags) {
        Some(n) if certified => BoundedValue::Exact(n),
        Some(n) => BoundedValue::BoundReached(n),
        None => BoundedValue::BoundReached(n_max),
    })
}

/// Least `n >= 0` with `~I^m = I^m` for `n <= m <= n_max`.
pub fn s_invariant<I: IdealRing>(i: &I, cfg: &ClosureConfig) -> Result<BoundedValue> {
    i.check_regular()?;
    let ladder = PowerLadder::new(i.clone());
    s_invariant_in(&Filtration::new(&ladder, *cfg))
}

pub fn s_invariant_in<I: IdealRing>(f: &Filtration<'_, I>) -> Result<BoundedValue> {
    let n_max = f.cfg.n_max;
    let mut flags = Vec::new();
    let mut certified = true;
    for m in 0..=n_max {
        certified &= f.certified(m)?;
        flags.push(f.value(m)?.equals(&f.ladder.get(m)?)?);
    }
    Ok(match least_tail(&flags) {
        Some(n) if certified => BoundedValue::Exact(n),
        Some(n) => BoundedValue::BoundReached(n),
        None => BoundedValue::BoundReached(n_max),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionReport {
    pub ideal: String,
    pub reduction: String,
    pub r: BoundedValue,
    pub rr_r: BoundedValue,
    pub s: BoundedValue,
    pub n_max: u32,
}

pub fn reduction_report<I: IdealRing>(i: &I, j: &I, cfg: &ClosureConfig) -> Result<ReductionReport> {
    i.check_regular()?;
    let ladder = PowerLadder::new(i.clone());
    let r = match is_reduction_with_ladder(&ladder, j, cfg.n_max)?.verdict {
        Verdict::Holds { from, .. } => BoundedValue::Exact(from),
        _ => BoundedValue::BoundReached(cfg.n_max),
    };
    let f = Filtration::new(&ladder, *cfg);
    Ok(ReductionReport {
        ideal: i.format(),
        reduction: j.format(),
        r,
        rr_r: rr_reduction_number_in(&f, j)?,
        s: s_invariant_in(&f)?,
        n_max: cfg.n_max,
    })
}

/// The conditions of the principal-reduction equivalence at level `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PrincipalConditions {
    pub t: u32,
    /// `I ~I^t + ~I^{t+2} ⊆ x ~I^t + ~I^{t+2}`.
    pub b: bool,
    /// `~I^{n+1} = x ~I^n` for `t <= n <= n_max`.
    pub d: bool,
    /// `~I^{t+1} = x ~I^t`.
    pub e: bool,
    /// `~I^{t+1} ⊆ x ~I^t + ~I^{t+2}`.
    pub cokernel_trivial: bool,
    /// Every closure used was certified.
    pub certified: bool,
}

impl PrincipalConditions {
    pub fn agree(&self) -> bool {
        self.b == self.d && self.d == self.e && self.e == self.cokernel_trivial
    }
}

/// Evaluates the equivalent conditions for a principal reduction `(x)`.
pub fn prop41_equivalence_check<I: IdealRing>(i: &I, x: &I::Elem, t: u32, cfg: &ClosureConfig) -> Result<PrincipalConditions> {
    i.check_regular()?;
    let ladder = PowerLadder::new(i.clone());
    let px = i.principal(x)?;
    if !is_reduction_with_ladder(&ladder, &px, cfg.n_max)?.verdict.holds() {
        return Err(AlgebraError::Precondition(format!("({}) is not a reduction", i.format_elem(x))));
    }
    let sup = crate::ratliff_rush::superficial_probe(x, i, cfg)?;
    if !sup.verdict.holds() {
        return Err(AlgebraError::Precondition(format!("{} is not superficial within bounds", i.format_elem(x))));
    }
    let f = Filtration::new(&ladder, *cfg);
    let rt = f.value(t)?;
    let rt1 = f.value(t + 1)?;
    let rt2 = f.value(t + 2)?;
    let x_rt = rt.mul_elem(x)?;
    let b = x_rt.sum(&rt2)?.contains(&i.product(&rt)?)?;
    let e = rt1.equals(&x_rt)?;
    let mut d = true;
    for n in t..=cfg.n_max.max(t) {
        if !f.value(n + 1)?.equals(&f.value(n)?.mul_elem(x)?)? {
            d = false;
            break;
        }
    }
    let cokernel_trivial = x_rt.sum(&rt2)?.contains(&rt1)?;
    let mut certified = true;
    for m in t..=(cfg.n_max.max(t) + 1) {
        certified &= f.certified(m)?;
    }
    Ok(PrincipalConditions { t, b, d, e, cokernel_trivial, certified })
}

/// The three comparisons between `s`, the closure reduction number and `r`
/// for a principal reduction `(x)`; `None` where an input is not exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PrincipalComparison {
    pub s_le_r: Option<bool>,
    pub rr_r_le_r: Option<bool>,
    /// `rr_r = r` exactly when `I^r` is not inside `(x)`.
    pub equality_criterion: Option<bool>,
    pub power_in_reduction: Option<bool>,
}

pub fn prop42_check<I: IdealRing>(i: &I, x: &I::Elem, cfg: &ClosureConfig) -> Result<PrincipalComparison> {
    let px = i.principal(x)?;
    let rep = reduction_report(i, &px, cfg)?;
    let (r, rr_r, s) = (rep.r.exact(), rep.rr_r.exact(), rep.s.exact());
    let power_in_reduction = match r {
        Some(r) => Some(px.contains(&i.power(r)?)?),
        None => None,
    };
    Ok(PrincipalComparison {
        s_le_r: s.zip(r).map(|(s, r)| s <= r),
        rr_r_le_r: rr_r.zip(r).map(|(a, r)| a <= r),
        equality_criterion: rr_r.zip(r).zip(power_in_reduction).map(|((a, r), inside)| (a == r) == !inside),
        power_in_reduction,
    })
}
