//! Worked-example cases.

mod intro;
mod leading;
mod powers;
mod semigroups;

use std::collections::BTreeSet;

use super::{Case, CaseDef};
use crate::algebra::Monomial;
use crate::error::{AlgebraError, Result};
use crate::lang::CommandOutput;
use crate::monomial_ideal::MonomialIdeal;
use crate::ratliff_rush::ClosureConfig;

pub(super) fn cases() -> Vec<CaseDef> {
    let mut v = intro::cases();
    v.extend(powers::cases());
    v.extend(leading::cases());
    v.extend(semigroups::cases());
    v
}

pub(crate) const fn cfg(k_max: u32, window: u32, n_max: u32) -> ClosureConfig {
    ClosureConfig { k_max, window, n_max }
}

pub(crate) const DEFAULT: ClosureConfig = cfg(12, 3, 8);

pub(crate) fn verdict(o: &CommandOutput) -> &str {
    o.result["verdict"].as_str().unwrap_or("")
}

pub(crate) fn is_member(o: &CommandOutput) -> bool {
    verdict(o) == "member"
}

pub(crate) fn not_member_up_to(o: &CommandOutput, k: u32) -> bool {
    verdict(o) == "not-member-up-to" && o.result["k_max"] == k
}

pub(crate) fn holds(o: &CommandOutput) -> bool {
    verdict(o) == "holds"
}

pub(crate) fn fails_with(o: &CommandOutput, witness: &str) -> bool {
    verdict(o) == "fails-at" && o.result["witness"] == witness
}

pub(crate) fn status_kind(o: &CommandOutput) -> &str {
    o.result["status"]["kind"].as_str().unwrap_or("")
}

pub(crate) fn string_set(v: &serde_json::Value) -> BTreeSet<String> {
    v.as_array().into_iter().flatten().filter_map(|s| s.as_str().map(str::to_string)).collect()
}

/// Generators of an ideal-valued output.
pub(crate) fn gens(o: &CommandOutput) -> BTreeSet<String> {
    string_set(&o.result["generators"])
}

/// Entries of a list-valued output.
pub(crate) fn entries(o: &CommandOutput) -> BTreeSet<String> {
    string_set(&o.result)
}

pub(crate) fn set(xs: &[&str]) -> BTreeSet<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

pub(crate) fn gen_set(i: &MonomialIdeal) -> BTreeSet<String> {
    i.generator_strings().into_iter().collect()
}

pub(crate) fn m(exps: &[u32]) -> Monomial {
    Monomial::new(exps.to_vec())
}

/// Monomial ideal `name` of the case setup.
pub(crate) fn mono(c: &Case, name: &str) -> Result<MonomialIdeal> {
    let s = c.session()?;
    if let Some(i) = s.monomial(name) {
        return Ok(i.clone());
    }
    s.handle(name)?.as_monomial_ideal().ok_or_else(|| AlgebraError::Internal(format!("{name} is not monomial")))
}

pub(crate) fn mono_text(names: &[&str], exps: &[u32]) -> String {
    let parts: Vec<String> = names
        .iter()
        .zip(exps)
        .filter(|(_, &e)| e > 0)
        .map(|(n, &e)| if e == 1 { n.to_string() } else { format!("{n}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

pub(crate) fn ring_decl(names: &[&str]) -> String {
    format!("ring R = QQ[{}];", names.join(","))
}

pub(crate) fn ideal_decl(name: &str, names: &[&str], gens: &[Vec<u32>]) -> String {
    let g: Vec<String> = gens.iter().map(|e| mono_text(names, e)).collect();
    format!("ideal {name} = ({});", g.join(", "))
}

/// `(X_1, ..., X_d)^e` in the ring of `i`.
pub(crate) fn max_power(i: &MonomialIdeal, e: u32) -> Result<MonomialIdeal> {
    MonomialIdeal::maximal_ideal(i.names().clone()).power(e)
}
