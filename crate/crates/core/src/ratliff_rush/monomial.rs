use super::{ClosureConfig, ProbeOutcome, Verdict};
use crate::algebra::Monomial;
use crate::error::Result;
use crate::ideal::PowerLadder;
use crate::monomial_ideal::MonomialIdeal;

/// Searches `n <= n_max` for `m ∈ I^n \ I^{n+1}` with `m·𝔪 ⊆ I^{n+1}` and
/// `m·I ⊆ I^{n+2}`.
///
/// Every monomial of `(J : 𝔪) \ J` is a minimal generator of `J : 𝔪`, so
/// scanning those generators is complete for each `n`.
pub fn depth_zero_witness_search(i: &MonomialIdeal, cfg: &ClosureConfig) -> Result<ProbeOutcome<Monomial>> {
    cfg.validate()?;
    let ladder = PowerLadder::new(i.clone());
    let maximal = MonomialIdeal::maximal_ideal(i.names().clone());
    for n in 0..=cfg.n_max {
        let lower = ladder.get(n)?;
        let j = ladder.get(n + 1)?;
        let next = ladder.get(n + 2)?;
        let socle = j.colon(&maximal)?;
        for m in socle.gens() {
            if j.contains_monomial(m) || !lower.contains_monomial(m) {
                continue;
            }
            if next.contains_ideal(&i.mul_monomial(m)?) {
                return Ok(ProbeOutcome::new(Verdict::FailsAt { n }, Some(m.clone())));
            }
        }
    }
    Ok(ProbeOutcome::new(Verdict::Holds { from: 0, to: cfg.n_max }, None))
}

/// Whether every generator of `value` is integral over `i`.
pub fn closure_within_integral_closure(i: &MonomialIdeal, value: &MonomialIdeal) -> bool {
    value.gens().iter().all(|g| i.is_integral_over(g))
}
