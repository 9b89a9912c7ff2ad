use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use crate::error::{AlgebraError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderKind {
    Lex,
    GradedLex,
    GradedRevLex,
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Lex => "lex",
            OrderKind::GradedLex => "grlex",
            OrderKind::GradedRevLex => "grevlex",
        })
    }
}

impl std::str::FromStr for OrderKind {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(OrderKind::Lex),
            "grlex" => Ok(OrderKind::GradedLex),
            "grevlex" => Ok(OrderKind::GradedRevLex),
            _ => Err(AlgebraError::Precondition(format!("unknown order `{s}`"))),
        }
    }
}

/// A monomial order: a kind, a variable priority (largest variable first), and
/// an optional elimination block made of the first `block` variables of the
/// priority. Monomials are first compared by total degree in the block and
/// then by the kind restricted to the block, and only on a tie by the kind on
/// the remaining variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
    block: usize,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, priority: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; priority.len()];
        for &p in &priority {
            if p >= priority.len() || seen[p] {
                return Err(AlgebraError::Precondition("variable priority is not a permutation".into()));
            }
            seen[p] = true;
        }
        Ok(MonomialOrder { kind, priority, block: 0 })
    }

    /// Order with the natural priority `x_0 > x_1 > ...`.
    pub fn standard(kind: OrderKind, nvars: usize) -> Self {
        MonomialOrder { kind, priority: (0..nvars).collect(), block: 0 }
    }

    /// Elimination order: variables `elim` are eliminated, ties broken by `rest`.
    pub fn elimination(kind: OrderKind, elim: &[usize], rest: &[usize]) -> Result<Self> {
        let mut priority = elim.to_vec();
        priority.extend_from_slice(rest);
        let mut ord = MonomialOrder::new(kind, priority)?;
        ord.block = elim.len();
        Ok(ord)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != self.nvars() || b.nvars() != self.nvars() {
            return Err(AlgebraError::RingMismatch("monomial/order variable count".into()));
        }
        Ok(self.cmp(a, b))
    }

    /// Unchecked comparison; callers guarantee matching variable counts.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if self.block > 0 {
            let (head, tail) = self.priority.split_at(self.block);
            cmp_vars(self.kind, head, a.exps(), b.exps()).then_with(|| cmp_vars(self.kind, tail, a.exps(), b.exps()))
        } else {
            cmp_vars(self.kind, &self.priority, a.exps(), b.exps())
        }
    }
}

fn cmp_vars(kind: OrderKind, vars: &[usize], a: &[u32], b: &[u32]) -> Ordering {
    let lex = || {
        for &v in vars {
            match a[v].cmp(&b[v]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    };
    match kind {
        OrderKind::Lex => lex(),
        OrderKind::GradedLex | OrderKind::GradedRevLex => {
            let da: u64 = vars.iter().map(|&v| a[v] as u64).sum();
            let db: u64 = vars.iter().map(|&v| b[v] as u64).sum();
            match da.cmp(&db) {
                Ordering::Equal => {}
                o => return o,
            }
            if kind == OrderKind::GradedLex {
                return lex();
            }
            // smaller exponent in the last differing variable wins
            for &v in vars.iter().rev() {
                match a[v].cmp(&b[v]) {
                    Ordering::Equal => continue,
                    o => return o.reverse(),
                }
            }
            Ordering::Equal
        }
    }
}
