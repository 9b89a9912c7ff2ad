//! The ideal-arithmetic interface shared by every ring flavour, so that the
//! closure and reduction machinery is written once.

use std::fmt::Debug;
use std::sync::Mutex;

use crate::error::{AlgebraError, Result};

/// Ideal arithmetic in a fixed ambient ring. Every value carries its ring.
pub trait IdealRing: Clone + Debug + Send + Sync + Sized {
    type Elem: Clone + Debug + PartialEq + Send + Sync;

    /// The unit ideal of the ambient ring (`I^0`).
    fn unit(&self) -> Self;
    fn principal(&self, e: &Self::Elem) -> Result<Self>;
    fn generators(&self) -> Vec<Self::Elem>;
    fn is_zero(&self) -> bool;
    fn sum(&self, other: &Self) -> Result<Self>;
    fn product(&self, other: &Self) -> Result<Self>;
    fn contains_elem(&self, e: &Self::Elem) -> Result<bool>;
    fn colon(&self, other: &Self) -> Result<Self>;
    fn intersect(&self, other: &Self) -> Result<Self>;
    fn format_elem(&self, e: &Self::Elem) -> String;
    fn format(&self) -> String;

    /// `self : other` when `floor ⊆ self : other` is known a priori; lets an
    /// implementation stop as soon as its running upper bound meets the floor.
    fn colon_with_floor(&self, other: &Self, _floor: &Self) -> Result<Self> {
        self.colon(other)
    }

    fn contains(&self, other: &Self) -> Result<bool> {
        for g in other.generators() {
            if !self.contains_elem(&g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn equals(&self, other: &Self) -> Result<bool> {
        Ok(self.contains(other)? && other.contains(self)?)
    }

    fn mul_elem(&self, e: &Self::Elem) -> Result<Self> {
        self.product(&self.principal(e)?)
    }

    /// Product of two elements, used for witness replay.
    fn elem_mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;

    fn power(&self, n: u32) -> Result<Self> {
        let mut acc = self.unit();
        for _ in 0..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Generators of `self` that are not in `other`.
    fn generators_outside(&self, other: &Self) -> Result<Vec<Self::Elem>> {
        let mut out = Vec::new();
        for g in self.generators() {
            if !other.contains_elem(&g)? {
                out.push(g);
            }
        }
        Ok(out)
    }

    /// Fails unless the ideal is known to contain a non-zerodivisor.
    fn check_regular(&self) -> Result<()> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroIdeal);
        }
        Ok(())
    }

    /// An index `k0` such that the chains `I^{n+k} : I^k` are provably
    /// constant for `k >= k0`, when the ring structure gives one.
    fn chain_stable_from(&self) -> Option<u32> {
        None
    }
}

/// Append-only memo of `I^0, I^1, ..., I^k`.
#[derive(Debug)]
pub struct PowerLadder<I: IdealRing> {
    base: I,
    powers: Mutex<Vec<I>>,
    cap: u32,
}

impl<I: IdealRing> PowerLadder<I> {
    pub fn new(base: I) -> Self {
        let unit = base.unit();
        PowerLadder { powers: Mutex::new(vec![unit, base.clone()]), base, cap: 512 }
    }

    pub fn base(&self) -> &I {
        &self.base
    }

    pub fn get(&self, n: u32) -> Result<I> {
        if n > self.cap {
            return Err(AlgebraError::ResourceLimit(format!("power {n} exceeds ladder cap {}", self.cap)));
        }
        let mut powers = self.powers.lock().expect("ladder lock poisoned");
        while powers.len() as u32 <= n {
            let next = powers.last().expect("ladder is never empty").product(&self.base)?;
            powers.push(next);
        }
        Ok(powers[n as usize].clone())
    }

    /// Number of memoized entries.
    pub fn len(&self) -> usize {
        self.powers.lock().expect("ladder lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}
