use std::collections::HashSet;

use super::MonomialIdeal;
use crate::algebra::Monomial;
use crate::error::{AlgebraError, Result};

impl MonomialIdeal {
    /// Decides `m ∈ I^n` by searching for generator multiplicities summing to
    /// `n` whose product divides `m`, without expanding `I^n`.
    pub fn member_of_power(&self, m: &Monomial, n: u32) -> Result<bool> {
        if m.nvars() != self.nvars() {
            return Err(AlgebraError::RingMismatch("monomial has a different variable count".into()));
        }
        if n == 0 {
            return Ok(true);
        }
        if self.is_zero_ideal() {
            return Ok(false);
        }
        // generators dividing m are the only usable ones
        let gens: Vec<&Monomial> = self.gens.iter().filter(|g| g.divides(m)).collect();
        if gens.is_empty() {
            return Ok(false);
        }
        let mut failed = HashSet::new();
        Ok(search(&gens, 0, n, m.exps().to_vec(), &mut failed))
    }

    /// Multiplicities witnessing `m ∈ I^n`, indexed like `gens()`.
    pub fn power_certificate(&self, m: &Monomial, n: u32) -> Option<Vec<u32>> {
        let mut counts = vec![0u32; self.gens.len()];
        let mut residual = m.exps().to_vec();
        let mut remaining = n;
        // greedy reconstruction guided by the exact decision procedure
        while remaining > 0 {
            let mut advanced = false;
            for (i, g) in self.gens.iter().enumerate() {
                if !g.exps().iter().zip(&residual).all(|(a, b)| a <= b) {
                    continue;
                }
                let rest: Vec<u32> = residual.iter().zip(g.exps()).map(|(a, b)| a - b).collect();
                if self.member_of_power(&Monomial::new(rest.clone()), remaining - 1).ok()? {
                    counts[i] += 1;
                    residual = rest;
                    remaining -= 1;
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                return None;
            }
        }
        Some(counts)
    }
}

fn search(gens: &[&Monomial], idx: usize, remaining: u32, residual: Vec<u32>, failed: &mut HashSet<(usize, u32, Vec<u32>)>) -> bool {
    if remaining == 0 {
        return true;
    }
    if idx == gens.len() {
        return false;
    }
    let key = (idx, remaining, residual);
    if failed.contains(&key) {
        return false;
    }
    let (_, _, residual) = key;
    let g = gens[idx].exps();
    let max_copies = g
        .iter()
        .zip(&residual)
        .filter(|(e, _)| **e > 0)
        .map(|(e, r)| r / e)
        .min()
        .unwrap_or(remaining)
        .min(remaining);
    for c in (0..=max_copies).rev() {
        let next: Vec<u32> = residual.iter().zip(g).map(|(r, e)| r - c * e).collect();
        if search(gens, idx + 1, remaining - c, next, failed) {
            return true;
        }
    }
    failed.insert((idx, remaining, residual));
    false
}
