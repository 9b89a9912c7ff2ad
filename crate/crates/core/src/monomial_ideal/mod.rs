//! Monomial ideal calculus: canonical minimal generators, sums, products,
//! powers, colons, intersections, membership in powers, socles, the Borel
//! test, integral closure through Newton polyhedra, and associated primes.

mod closure;
mod power;
mod primes;
mod trie;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::algebra::{Monomial, Ring};
use crate::error::{AlgebraError, Result};
use crate::ideal::IdealRing;

pub use closure::newton_polyhedron_contains;
pub use primes::{BorelDirection, VariableSet};
use trie::{minimalize, DivisorTrie};

/// A monomial ideal in `F[x_1..x_d]`, stored by its sorted minimal generators.
/// Structural equality is ideal equality.
#[derive(Clone)]
pub struct MonomialIdeal {
    names: Arc<Vec<String>>,
    gens: Vec<Monomial>,
    trie: OnceLock<Arc<DivisorTrie>>,
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.gens == other.gens
    }
}

impl Eq for MonomialIdeal {}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal{}", self.format())
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

impl MonomialIdeal {
    /// Minimal generators of the ideal spanned by `gens`.
    pub fn minimal_generators(names: Arc<Vec<String>>, gens: Vec<Monomial>) -> Result<Self> {
        if gens.is_empty() {
            return Err(AlgebraError::EmptyGenerators);
        }
        Self::build(names, gens)
    }

    fn build(names: Arc<Vec<String>>, gens: Vec<Monomial>) -> Result<Self> {
        let n = names.len();
        if let Some(g) = gens.iter().find(|g| g.nvars() != n) {
            return Err(AlgebraError::RingMismatch(format!("generator in {} variables, ring has {n}", g.nvars())));
        }
        Ok(MonomialIdeal { gens: minimalize(n, gens), names, trie: OnceLock::new() })
    }

    /// Convenience constructor from variable names and exponent rows.
    pub fn from_exponents(names: &[&str], gens: &[&[u32]]) -> Result<Self> {
        let names = Arc::new(names.iter().map(|s| s.to_string()).collect::<Vec<_>>());
        Self::minimal_generators(names, gens.iter().map(|g| Monomial::new(g.to_vec())).collect())
    }

    pub fn zero(names: Arc<Vec<String>>) -> Self {
        MonomialIdeal { names, gens: Vec::new(), trie: OnceLock::new() }
    }

    pub fn unit_ideal(names: Arc<Vec<String>>) -> Self {
        let n = names.len();
        MonomialIdeal { names, gens: vec![Monomial::one(n)], trie: OnceLock::new() }
    }

    /// The ideal generated by the given variables.
    pub fn variables(names: Arc<Vec<String>>, vars: &[usize]) -> Result<Self> {
        let n = names.len();
        if vars.is_empty() {
            return Ok(Self::zero(names));
        }
        Self::build(names, vars.iter().map(|&i| Monomial::var(n, i)).collect())
    }

    pub fn maximal_ideal(names: Arc<Vec<String>>) -> Self {
        let all: Vec<usize> = (0..names.len()).collect();
        Self::variables(names, &all).expect("variables are in range")
    }

    pub fn names(&self) -> &Arc<Vec<String>> {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_min_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    /// Reads a monomial ideal off an ideal of a polynomial ring when all
    /// generators are monomials.
    pub fn from_ring_monomials(ring: &Ring, gens: &[Monomial]) -> Result<Self> {
        Self::minimal_generators(Arc::new(ring.names().to_vec()), gens.to_vec())
    }

    fn trie(&self) -> &DivisorTrie {
        self.trie.get_or_init(|| Arc::new(DivisorTrie::from_monomials(self.nvars(), self.gens.iter())))
    }

    fn check_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.names != other.names {
            return Err(AlgebraError::RingMismatch(format!(
                "monomial ideals over [{}] and [{}]",
                self.names.join(","),
                other.names.join(",")
            )));
        }
        Ok(())
    }

    fn check_mono(&self, m: &Monomial) -> Result<()> {
        if m.nvars() != self.nvars() {
            return Err(AlgebraError::RingMismatch("monomial has a different variable count".into()));
        }
        Ok(())
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        m.nvars() == self.nvars() && self.trie().has_divisor_of(m)
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        self.names == other.names && other.gens.iter().all(|g| self.contains_monomial(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        Self::build(self.names.clone(), self.gens.iter().chain(&other.gens).cloned().collect())
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let mut out = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                out.push(a.mul(b)?);
            }
        }
        Self::build(self.names.clone(), out)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.check_mono(m)?;
        let gens = self.gens.iter().map(|g| g.mul(m)).collect::<Result<Vec<_>>>()?;
        Self::build(self.names.clone(), gens)
    }

    pub fn power(&self, n: u32) -> Result<MonomialIdeal> {
        let mut acc = Self::unit_ideal(self.names.clone());
        for _ in 0..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `(self : m)`, generated by `lcm(g, m) / m`.
    pub fn colon_by_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.check_mono(m)?;
        let gens = self.gens.iter().map(|g| g.quotient(m)).collect::<Result<Vec<_>>>()?;
        Self::build(self.names.clone(), gens)
    }

    /// `self ∩ other`: pairwise lcms, skipping generators already in `other`.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let mut out = Vec::new();
        for r in &self.gens {
            if other.contains_monomial(r) {
                out.push(r.clone());
            } else {
                for q in &other.gens {
                    out.push(r.lcm(q)?);
                }
            }
        }
        Self::build(self.names.clone(), out)
    }

    /// `(self : other)` as the intersection of `(self : b)` over generators `b`.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.colon_bounded(other, None)
    }

    /// Colon with a known lower bound `floor ⊆ self : other`.
    pub fn colon_with_floor(&self, other: &MonomialIdeal, floor: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.colon_bounded(other, Some(floor))
    }

    fn colon_bounded(&self, other: &MonomialIdeal, floor: Option<&MonomialIdeal>) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        if other.is_zero_ideal() {
            return Err(AlgebraError::ZeroIdeal);
        }
        let mut bs = other.gens.iter();
        let first = bs.next().expect("nonzero ideal has a generator");
        let mut acc = self.colon_by_monomial(first)?;
        for b in bs {
            if let Some(fl) = floor {
                if fl.contains_ideal(&acc) {
                    return Ok(fl.clone());
                }
            }
            // keep generators r with r*b in self; refine the rest
            let mut next = Vec::with_capacity(acc.gens.len());
            let mut quotient: Option<MonomialIdeal> = None;
            for r in &acc.gens {
                if self.contains_monomial(&r.mul(b)?) {
                    next.push(r.clone());
                } else {
                    let q = match &quotient {
                        Some(q) => q,
                        None => quotient.insert(self.colon_by_monomial(b)?),
                    };
                    for g in &q.gens {
                        next.push(r.lcm(g)?);
                    }
                }
            }
            acc = Self::build(self.names.clone(), next)?;
        }
        Ok(acc)
    }

    /// Componentwise maximum of the generator exponents.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut out = vec![0; self.nvars()];
        for g in &self.gens {
            for (o, e) in out.iter_mut().zip(g.exps()) {
                *o = (*o).max(*e);
            }
        }
        out
    }

    /// True when a pure power of every variable lies in the ideal.
    pub fn is_zero_dimensional(&self) -> bool {
        (0..self.nvars()).all(|i| self.gens.iter().any(|g| g.support().all(|j| j == i)))
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        m.display(&self.names).to_string()
    }

    pub fn format(&self) -> String {
        if self.gens.is_empty() {
            return "(0)".into();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| self.format_monomial(g)).collect();
        format!("({})", parts.join(", "))
    }

    /// Generators rendered in canonical text form.
    pub fn generator_strings(&self) -> Vec<String> {
        self.gens.iter().map(|g| self.format_monomial(g)).collect()
    }
}

impl IdealRing for MonomialIdeal {
    type Elem = Monomial;

    fn unit(&self) -> Self {
        MonomialIdeal::unit_ideal(self.names.clone())
    }

    fn principal(&self, e: &Monomial) -> Result<Self> {
        self.check_mono(e)?;
        Self::build(self.names.clone(), vec![e.clone()])
    }

    fn generators(&self) -> Vec<Monomial> {
        self.gens.clone()
    }

    fn is_zero(&self) -> bool {
        self.is_zero_ideal()
    }

    fn sum(&self, other: &Self) -> Result<Self> {
        MonomialIdeal::sum(self, other)
    }

    fn product(&self, other: &Self) -> Result<Self> {
        MonomialIdeal::product(self, other)
    }

    fn contains_elem(&self, e: &Monomial) -> Result<bool> {
        self.check_mono(e)?;
        Ok(self.contains_monomial(e))
    }

    fn contains(&self, other: &Self) -> Result<bool> {
        self.check_ring(other)?;
        Ok(self.contains_ideal(other))
    }

    fn equals(&self, other: &Self) -> Result<bool> {
        self.check_ring(other)?;
        Ok(self == other)
    }

    fn colon(&self, other: &Self) -> Result<Self> {
        MonomialIdeal::colon(self, other)
    }

    fn intersect(&self, other: &Self) -> Result<Self> {
        MonomialIdeal::intersect(self, other)
    }

    fn power(&self, n: u32) -> Result<Self> {
        MonomialIdeal::power(self, n)
    }

    fn colon_with_floor(&self, other: &Self, floor: &Self) -> Result<Self> {
        MonomialIdeal::colon_with_floor(self, other, floor)
    }

    fn mul_elem(&self, e: &Monomial) -> Result<Self> {
        self.mul_monomial(e)
    }

    fn elem_mul(&self, a: &Monomial, b: &Monomial) -> Result<Monomial> {
        a.mul(b)
    }

    fn format_elem(&self, e: &Monomial) -> String {
        self.format_monomial(e)
    }

    fn format(&self) -> String {
        MonomialIdeal::format(self)
    }
}

#[cfg(test)]
mod tests;
