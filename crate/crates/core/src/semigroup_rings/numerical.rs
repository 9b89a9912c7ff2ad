use std::fmt;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::ideal::IdealRing;

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A numerical semigroup `<a_1, ..., a_k> ⊆ ℕ` with finite complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalSemigroup {
    gens: Vec<u32>,
    /// Membership below the conductor.
    below: Vec<bool>,
    conductor: u32,
}

impl NumericalSemigroup {
    pub fn new(gens: &[u32]) -> Result<Self> {
        let mut gens: Vec<u32> = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();
        if gens.is_empty() || gens[0] == 0 {
            return Err(AlgebraError::Precondition("semigroup generators must be positive".into()));
        }
        if gens.iter().fold(0, |g, &a| gcd(g, a)) != 1 {
            return Err(AlgebraError::Precondition(format!("generators {gens:?} are not coprime")));
        }
        let smallest = gens[0] as usize;
        let mut member = vec![true];
        let mut run = 1;
        // a run of `smallest` consecutive members starts the conductor
        while run < smallest {
            let z = member.len();
            let inside = gens.iter().any(|&a| (a as usize) <= z && member[z - a as usize]);
            member.push(inside);
            run = if inside { run + 1 } else { 0 };
        }
        let conductor = (member.len() - run) as u32;
        member.truncate(conductor as usize);
        let minimal = Self::minimal_generators(&gens);
        Ok(NumericalSemigroup { gens: minimal, below: member, conductor })
    }

    fn minimal_generators(gens: &[u32]) -> Vec<u32> {
        let mut out: Vec<u32> = Vec::new();
        for &a in gens {
            let max = a as usize;
            let mut reach = vec![false; max + 1];
            reach[0] = true;
            for z in 1..=max {
                reach[z] = out.iter().any(|&b| (b as usize) <= z && reach[z - b as usize]);
            }
            if !reach[max] {
                out.push(a);
            }
        }
        out
    }

    pub fn generators(&self) -> &[u32] {
        &self.gens
    }

    pub fn multiplicity(&self) -> u32 {
        self.gens[0]
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Largest gap, or `-1` for `ℕ` itself.
    pub fn frobenius(&self) -> i64 {
        self.conductor as i64 - 1
    }

    pub fn gaps(&self) -> Vec<u32> {
        (0..self.conductor).filter(|&z| !self.below[z as usize]).collect()
    }

    pub fn contains(&self, z: u32) -> bool {
        z >= self.conductor || self.below[z as usize]
    }

    pub fn contains_signed(&self, z: i64) -> Result<bool> {
        if z < 0 {
            return Err(AlgebraError::Precondition(format!("negative exponent {z}")));
        }
        Ok(u32::try_from(z).map(|z| self.contains(z)).unwrap_or(true))
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.gens.iter().map(|a| a.to_string()).collect();
        write!(f, "<{}>", g.join(","))
    }
}

/// A nonzero monomial ideal `E = ∪ (g + S)` of a numerical semigroup ring.
///
/// Every integer from `min(gens) + conductor` on lies in `E`, so all
/// operations are exact without a working bound.
#[derive(Clone, Debug)]
pub struct SemigroupIdeal {
    semigroup: Arc<NumericalSemigroup>,
    gens: Vec<u32>,
}

impl PartialEq for SemigroupIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.semigroup == other.semigroup && self.gens == other.gens
    }
}

impl SemigroupIdeal {
    pub fn new(semigroup: Arc<NumericalSemigroup>, gens: &[u32]) -> Result<Self> {
        if gens.is_empty() {
            return Err(AlgebraError::EmptyGenerators);
        }
        if let Some(&g) = gens.iter().find(|&&g| !semigroup.contains(g)) {
            return Err(AlgebraError::Precondition(format!("t^{g} is not in {semigroup}")));
        }
        let gens = Self::minimalize(&semigroup, gens.to_vec());
        Ok(SemigroupIdeal { semigroup, gens })
    }

    fn minimalize(s: &NumericalSemigroup, mut gens: Vec<u32>) -> Vec<u32> {
        gens.sort_unstable();
        gens.dedup();
        let mut out: Vec<u32> = Vec::new();
        for g in gens {
            if !out.iter().any(|&h| s.contains(g - h)) {
                out.push(g);
            }
        }
        out
    }

    /// The maximal ideal, generated by the semigroup generators.
    pub fn maximal(semigroup: Arc<NumericalSemigroup>) -> Self {
        let gens = semigroup.generators().to_vec();
        SemigroupIdeal { semigroup, gens }
    }

    pub fn semigroup(&self) -> &Arc<NumericalSemigroup> {
        &self.semigroup
    }

    pub fn gens(&self) -> &[u32] {
        &self.gens
    }

    /// Least element.
    pub fn order(&self) -> u32 {
        self.gens[0]
    }

    /// Every integer from here on lies in the ideal.
    fn tail(&self) -> u32 {
        self.gens[0] + self.semigroup.conductor()
    }

    pub fn contains_exponent(&self, z: u32) -> bool {
        z >= self.tail() || self.gens.iter().any(|&g| g <= z && self.semigroup.contains(z - g))
    }

    /// Exponents in the ideal up to and including `bound`.
    pub fn elements_upto(&self, bound: u32) -> Vec<u32> {
        (0..=bound).filter(|&z| self.contains_exponent(z)).collect()
    }

    fn check(&self, other: &SemigroupIdeal) -> Result<()> {
        if self.semigroup != other.semigroup {
            return Err(AlgebraError::RingMismatch(format!("{} vs {}", self.semigroup, other.semigroup)));
        }
        Ok(())
    }

    fn from_gens(&self, gens: Vec<u32>) -> SemigroupIdeal {
        SemigroupIdeal { gens: Self::minimalize(&self.semigroup, gens), semigroup: self.semigroup.clone() }
    }

    /// `t^z E`.
    pub fn shift(&self, z: u32) -> SemigroupIdeal {
        self.from_gens(self.gens.iter().map(|g| g + z).collect())
    }

    /// Least `r <= cap` with `E^{r+1} = t^e E^r`, `e` the least element.
    pub fn principal_reduction_number(&self, cap: u32) -> Result<u32> {
        let e = self.order();
        let mut p = self.unit();
        for r in 0..=cap {
            let next = p.product(self)?;
            if next == p.shift(e) {
                return Ok(r);
            }
            p = next;
        }
        Err(AlgebraError::ResourceLimit(format!("no reduction number within {cap}")))
    }
}

impl IdealRing for SemigroupIdeal {
    type Elem = u32;

    fn unit(&self) -> Self {
        SemigroupIdeal { semigroup: self.semigroup.clone(), gens: vec![0] }
    }

    fn principal(&self, e: &u32) -> Result<Self> {
        SemigroupIdeal::new(self.semigroup.clone(), &[*e])
    }

    fn generators(&self) -> Vec<u32> {
        self.gens.clone()
    }

    fn is_zero(&self) -> bool {
        false
    }

    fn sum(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.from_gens(self.gens.iter().chain(&other.gens).copied().collect()))
    }

    fn product(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                out.push(a + b);
            }
        }
        Ok(self.from_gens(out))
    }

    fn contains_elem(&self, e: &u32) -> Result<bool> {
        Ok(self.contains_exponent(*e))
    }

    fn contains(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(other.gens.iter().all(|&g| self.contains_exponent(g)))
    }

    fn equals(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(self == other)
    }

    /// `{z ∈ S : z + F ⊆ E}`; everything from the tail of `E` on qualifies.
    fn colon(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let tail = self.tail();
        let limit = tail + self.semigroup.multiplicity();
        let gens: Vec<u32> = (0..limit)
            .filter(|&z| self.semigroup.contains(z) && other.gens.iter().all(|&f| self.contains_exponent(z + f)))
            .collect();
        Ok(self.from_gens(gens))
    }

    fn intersect(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let limit = self.tail().max(other.tail()) + self.semigroup.multiplicity();
        let gens: Vec<u32> = (0..limit).filter(|&z| self.contains_exponent(z) && other.contains_exponent(z)).collect();
        Ok(self.from_gens(gens))
    }

    fn elem_mul(&self, a: &u32, b: &u32) -> Result<u32> {
        a.checked_add(*b).ok_or(AlgebraError::ExponentOverflow)
    }

    fn format_elem(&self, e: &u32) -> String {
        match e {
            0 => "1".into(),
            1 => "t".into(),
            _ => format!("t^{e}"),
        }
    }

    fn format(&self) -> String {
        let g: Vec<String> = self.gens.iter().map(|e| self.format_elem(e)).collect();
        format!("({})", g.join(", "))
    }

    /// Past the principal reduction number `r`, `E^{k+1} = t^e E^k`, and
    /// translating by `e` cancels in every colon of the chain.
    fn chain_stable_from(&self) -> Option<u32> {
        self.principal_reduction_number(self.order().max(1)).ok()
    }
}
