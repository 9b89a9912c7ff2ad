use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};

/// Exponent vector of a monomial; its length is the number of ring variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// The variable `x_i` in a ring with `nvars` variables.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn check_same(&self, other: &Monomial) -> Result<()> {
        if self.0.len() != other.0.len() {
            return Err(AlgebraError::RingMismatch(format!(
                "monomials in {} and {} variables",
                self.0.len(),
                other.0.len()
            )));
        }
        Ok(())
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same(other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(AlgebraError::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    pub fn pow(&self, n: u32) -> Result<Monomial> {
        self.0
            .iter()
            .map(|a| a.checked_mul(n).ok_or(AlgebraError::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    /// Exact quotient `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same(other)?;
        Ok(Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect()))
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same(other)?;
        Ok(Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect()))
    }

    /// Colon kernel: the monomial `c` with `c * other = lcm(self, other)`.
    pub fn quotient(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same(other)?;
        Ok(Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a.saturating_sub(*b)).collect()))
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables that occur in the monomial.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i)
    }

    /// Renders as `X^3*Y^4` using the given variable names; the unit is `1`.
    pub fn display<'a>(&'a self, names: &'a [String]) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, names }
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.mono.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            match self.names.get(i) {
                Some(n) => write!(f, "{n}")?,
                None => write!(f, "x{i}")?,
            }
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(m(&[2, 1]).quotient(&m(&[1, 1])).unwrap(), m(&[1, 0]));
        assert_eq!(m(&[2, 0]).quotient(&m(&[0, 3])).unwrap(), m(&[2, 0]));
        // lcm(X^3Y^2, XY^5) = X^3Y^5, divided by XY^5
        assert_eq!(m(&[3, 2]).quotient(&m(&[1, 5])).unwrap(), m(&[2, 0]));
    }

    #[test]
    fn ring_mismatch() {
        assert!(m(&[1, 2]).quotient(&m(&[1, 2, 3])).is_err());
        assert!(m(&[1]).mul(&m(&[1, 1])).is_err());
    }

    #[test]
    fn overflow_is_checked() {
        assert_eq!(m(&[u32::MAX]).mul(&m(&[1])), Err(AlgebraError::ExponentOverflow));
    }

    #[test]
    fn display() {
        let names = vec!["X".to_string(), "Y".to_string()];
        assert_eq!(m(&[3, 4]).display(&names).to_string(), "X^3*Y^4");
        assert_eq!(m(&[0, 1]).display(&names).to_string(), "Y");
        assert_eq!(m(&[0, 0]).display(&names).to_string(), "1");
    }

    proptest! {
        #[test]
        fn quotient_times_divisor_is_lcm(a in proptest::collection::vec(0u32..9, 3), b in proptest::collection::vec(0u32..9, 3)) {
            let (a, b) = (Monomial::new(a), Monomial::new(b));
            prop_assert_eq!(a.quotient(&b).unwrap().mul(&b).unwrap(), a.lcm(&b).unwrap());
        }
    }
}
