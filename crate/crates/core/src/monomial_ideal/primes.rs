use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::MonomialIdeal;
use crate::algebra::Monomial;
use crate::error::{AlgebraError, Result};

/// A monomial prime, given by the indices of its variables.
pub type VariableSet = BTreeSet<usize>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BorelDirection {
    /// Moves replace a variable by one of higher priority.
    ToLarger,
    /// Moves replace a variable by one of lower priority.
    ToSmaller,
}

impl MonomialIdeal {
    /// Monomials of `(I : m) \ I`, where `m` is the ideal of all variables.
    pub fn socle_candidates(&self) -> Result<Vec<Monomial>> {
        if self.is_zero_ideal() {
            return Err(AlgebraError::ZeroIdeal);
        }
        if !self.is_zero_dimensional() {
            return Err(AlgebraError::NotZeroDimensional);
        }
        let maximal = MonomialIdeal::maximal_ideal(self.names.clone());
        let colon = self.colon(&maximal)?;
        Ok(colon.gens.iter().filter(|g| !self.contains_monomial(g)).cloned().collect())
    }

    /// Tests closure under single variable exchanges relative to `priority`
    /// (largest variable first). Checking minimal generators suffices.
    pub fn is_borel_fixed(&self, priority: &[usize], direction: BorelDirection) -> Result<bool> {
        if self.is_zero_ideal() {
            return Err(AlgebraError::ZeroIdeal);
        }
        let n = self.nvars();
        let mut seen = vec![false; n];
        if priority.len() != n || priority.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(AlgebraError::Precondition("priority is not a permutation of the variables".into()));
        }
        for g in &self.gens {
            for (pi, &from) in priority.iter().enumerate() {
                if g.exps()[from] == 0 {
                    continue;
                }
                let targets: &[usize] = match direction {
                    BorelDirection::ToLarger => &priority[..pi],
                    BorelDirection::ToSmaller => &priority[pi + 1..],
                };
                for &to in targets {
                    let mut e = g.exps().to_vec();
                    e[from] -= 1;
                    e[to] += 1;
                    if !self.contains_monomial(&Monomial::new(e)) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Associated primes: the monomial primes `(I : m)` over monomials `m`
    /// dividing the lcm of the generators.
    pub fn associated_primes(&self) -> Result<Vec<VariableSet>> {
        if self.is_zero_ideal() {
            return Err(AlgebraError::ZeroIdeal);
        }
        if self.is_unit_ideal() {
            return Err(AlgebraError::UnitIdeal);
        }
        let bound = self.max_exponents();
        let mut primes: BTreeSet<VariableSet> = BTreeSet::new();
        let mut point = vec![0u32; self.nvars()];
        loop {
            let m = Monomial::new(point.clone());
            if !self.contains_monomial(&m) {
                let q = self.colon_by_monomial(&m)?;
                if q.gens.iter().all(|g| g.degree() == 1) {
                    primes.insert(q.gens.iter().flat_map(|g| g.support()).collect());
                }
            }
            let mut i = 0;
            loop {
                if i == point.len() {
                    return Ok(primes.into_iter().collect());
                }
                if point[i] < bound[i] {
                    point[i] += 1;
                    break;
                }
                point[i] = 0;
                i += 1;
            }
        }
    }

    pub fn format_prime(&self, p: &VariableSet) -> String {
        let names: Vec<&str> = p.iter().map(|&i| self.names[i].as_str()).collect();
        format!("({})", names.join(","))
    }
}
