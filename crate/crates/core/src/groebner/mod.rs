//! Buchberger engine and ideals of polynomial and quotient rings.

mod buchberger;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

pub use buchberger::{divide_exact, normal_form, reduced_groebner_basis, GbConfig, GroebnerBasis};

use crate::algebra::{Monomial, MonomialOrder, OrderKind, Polynomial, Ring};
use crate::error::{AlgebraError, Result};
use crate::ideal::IdealRing;
use crate::monomial_ideal::MonomialIdeal;

/// An ideal of a polynomial ring (or its preimage when the ring is a quotient
/// `R/Q`; every operation implicitly adjoins `Q`).
#[derive(Clone)]
pub struct IdealHandle {
    ring: Arc<Ring>,
    gens: Vec<Polynomial>,
    cache: Arc<Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>>,
    cfg: GbConfig,
}

impl fmt::Debug for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IdealHandle{}", self.format())
    }
}

impl IdealHandle {
    pub fn new(ring: Arc<Ring>, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            ring.check_poly(g)?;
        }
        let mut kept: Vec<Polynomial> = Vec::new();
        for g in gens {
            if g.is_zero() {
                continue;
            }
            let g = g.monic()?;
            if !kept.contains(&g) {
                kept.push(g);
            }
        }
        Ok(IdealHandle { ring, gens: kept, cache: Arc::new(Mutex::new(HashMap::new())), cfg: GbConfig::default() })
    }

    pub fn with_config(mut self, cfg: GbConfig) -> Self {
        self.cfg = cfg;
        self
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// True when every generator is a single term.
    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.len() == 1)
    }

    /// The same ideal as a `MonomialIdeal`, for monomial ideals of a polynomial ring.
    pub fn as_monomial_ideal(&self) -> Option<MonomialIdeal> {
        if self.ring.is_quotient() || !self.is_monomial() || self.gens.is_empty() {
            return None;
        }
        let gens: Vec<Monomial> = self.gens.iter().map(|g| g.as_monomial().expect("single term").clone()).collect();
        MonomialIdeal::from_ring_monomials(&self.ring, &gens).ok()
    }

    pub fn from_monomial_ideal(ring: Arc<Ring>, m: &MonomialIdeal) -> Result<Self> {
        if m.nvars() != ring.nvars() {
            return Err(AlgebraError::RingMismatch("variable count".into()));
        }
        let gens = m.gens().iter().map(|g| ring.monomial(g.clone())).collect();
        IdealHandle::new(ring, gens)
    }

    fn same_ring(&self, other: &IdealHandle) -> Result<()> {
        if self.ring != other.ring {
            return Err(AlgebraError::RingMismatch("ideals live in different rings".into()));
        }
        Ok(())
    }

    fn with_quotient_gens(&self) -> Vec<Polynomial> {
        let mut all = self.gens.clone();
        all.extend(self.ring.quotient().iter().cloned());
        all
    }

    /// Reduced Gröbner basis of `I + Q` under `order`, cached per order.
    pub fn groebner_basis(&self, order: &MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.cache.lock().expect("gb cache poisoned").get(order) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(reduced_groebner_basis(&self.with_quotient_gens(), Arc::new(order.clone()), self.cfg)?);
        self.cache.lock().expect("gb cache poisoned").insert(order.clone(), gb.clone());
        Ok(gb)
    }

    pub fn default_basis(&self) -> Result<Arc<GroebnerBasis>> {
        let ord = self.ring.order().as_ref().clone();
        self.groebner_basis(&ord)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.ring.check_poly(f)?;
        self.default_basis()?.normal_form(f)
    }

    pub fn contains_poly(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Monomial ideal of leading terms under `order`.
    pub fn leading_term_ideal(&self, order: &MonomialOrder) -> Result<MonomialIdeal> {
        if self.ring.is_quotient() {
            return Err(AlgebraError::Unsupported("leading term ideal in a quotient ring".into()));
        }
        if self.gens.is_empty() {
            return Err(AlgebraError::ZeroIdeal);
        }
        let gb = self.groebner_basis(order)?;
        MonomialIdeal::from_ring_monomials(&self.ring, &gb.leading_monomials())
    }

    pub fn sum(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.same_ring(other)?;
        IdealHandle::new(self.ring.clone(), self.gens.iter().chain(&other.gens).cloned().collect()).map(|h| h.with_config(self.cfg))
    }

    pub fn product(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.same_ring(other)?;
        let mut out = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                out.push(a.mul(b)?);
            }
        }
        IdealHandle::new(self.ring.clone(), out).map(|h| h.with_config(self.cfg))
    }

    pub fn contains_ideal(&self, other: &IdealHandle) -> Result<bool> {
        self.same_ring(other)?;
        let gb = self.default_basis()?;
        for g in &other.gens {
            if !gb.reduces_to_zero(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &IdealHandle) -> Result<bool> {
        self.same_ring(other)?;
        Ok(self.default_basis()?.polys() == other.default_basis()?.polys())
    }

    /// Ideal `a ∩ b` of the ambient polynomial ring for generator lists
    /// `a` and `b`, via `t·a + (1-t)·b` with `t` eliminated.
    fn intersect_gens(&self, a: &[Polynomial], b: &[Polynomial]) -> Result<Vec<Polynomial>> {
        let n = self.ring.nvars();
        let base_priority: Vec<usize> = self.ring.order().priority().to_vec();
        let ext = Arc::new(MonomialOrder::elimination(OrderKind::GradedRevLex, &[n], &base_priority)?);
        let lift = |p: &Polynomial, t_exp: u32| {
            p.map_monomials(ext.clone(), |m| {
                let mut e = m.exps().to_vec();
                e.push(t_exp);
                Monomial::new(e)
            })
        };
        let mut gens = Vec::with_capacity(a.len() + b.len());
        for p in a {
            gens.push(lift(p, 1));
        }
        for p in b {
            let tp = lift(p, 1);
            gens.push(lift(p, 0).sub(&tp)?);
        }
        let gb = reduced_groebner_basis(&gens, ext.clone(), self.cfg)?;
        let base_order = self.ring.order().clone();
        Ok(gb
            .polys()
            .iter()
            .filter(|p| p.terms().iter().all(|t| t.mono.exps()[n] == 0))
            .map(|p| p.map_monomials(base_order.clone(), |m| Monomial::new(m.exps()[..n].to_vec())))
            .collect())
    }

    pub fn intersect(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.same_ring(other)?;
        let gens = self.intersect_gens(&self.with_quotient_gens(), &other.with_quotient_gens())?;
        IdealHandle::new(self.ring.clone(), gens).map(|h| h.with_config(self.cfg))
    }

    /// `(I + Q) : b` via `((I + Q) ∩ (b)) / b`.
    pub fn colon_poly(&self, b: &Polynomial) -> Result<IdealHandle> {
        self.ring.check_poly(b)?;
        if b.is_zero() {
            return Err(AlgebraError::ZeroIdeal);
        }
        if b.as_monomial().is_some_and(|m| m.is_one()) {
            return Ok(self.clone());
        }
        let inter = self.intersect_gens(&self.with_quotient_gens(), std::slice::from_ref(b))?;
        let gens = inter.iter().map(|p| divide_exact(p, b)).collect::<Result<Vec<_>>>()?;
        IdealHandle::new(self.ring.clone(), gens).map(|h| h.with_config(self.cfg))
    }

    pub fn colon(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.colon_bounded(other, None)
    }

    /// Colon computed only through Gröbner eliminations, even for monomial input.
    pub fn colon_by_elimination(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.same_ring(other)?;
        self.colon_general(other, None)
    }

    fn colon_bounded(&self, other: &IdealHandle, floor: Option<&IdealHandle>) -> Result<IdealHandle> {
        self.same_ring(other)?;
        if let (Some(a), Some(b)) = (self.as_monomial_ideal(), other.as_monomial_ideal()) {
            let c = match floor.and_then(|f| f.as_monomial_ideal()) {
                Some(f) => a.colon_with_floor(&b, &f)?,
                None => a.colon(&b)?,
            };
            return IdealHandle::from_monomial_ideal(self.ring.clone(), &c).map(|h| h.with_config(self.cfg));
        }
        self.colon_general(other, floor)
    }

    fn colon_general(&self, other: &IdealHandle, floor: Option<&IdealHandle>) -> Result<IdealHandle> {
        if other.gens.is_empty() {
            return Err(AlgebraError::ZeroIdeal);
        }
        let mut acc: Option<IdealHandle> = None;
        for b in &other.gens {
            let c = self.colon_poly(b)?;
            let next = match acc {
                None => c,
                Some(a) => a.intersect(&c)?,
            };
            if let Some(f) = floor {
                if f.contains_ideal(&next)? {
                    return Ok(f.clone());
                }
            }
            acc = Some(next);
        }
        Ok(acc.expect("at least one generator"))
    }

    pub fn format(&self) -> String {
        if self.gens.is_empty() {
            return "(0)".into();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| self.ring.format(g)).collect();
        format!("({})", parts.join(", "))
    }
}

impl IdealRing for IdealHandle {
    type Elem = Polynomial;

    fn unit(&self) -> Self {
        IdealHandle::new(self.ring.clone(), vec![self.ring.one()]).expect("unit ideal").with_config(self.cfg)
    }

    fn principal(&self, e: &Polynomial) -> Result<Self> {
        IdealHandle::new(self.ring.clone(), vec![e.clone()]).map(|h| h.with_config(self.cfg))
    }

    fn generators(&self) -> Vec<Polynomial> {
        self.gens.clone()
    }

    fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    fn sum(&self, other: &Self) -> Result<Self> {
        IdealHandle::sum(self, other)
    }

    fn product(&self, other: &Self) -> Result<Self> {
        IdealHandle::product(self, other)
    }

    fn contains_elem(&self, e: &Polynomial) -> Result<bool> {
        self.contains_poly(e)
    }

    fn contains(&self, other: &Self) -> Result<bool> {
        self.contains_ideal(other)
    }

    fn equals(&self, other: &Self) -> Result<bool> {
        IdealHandle::equals(self, other)
    }

    fn colon(&self, other: &Self) -> Result<Self> {
        IdealHandle::colon(self, other)
    }

    fn intersect(&self, other: &Self) -> Result<Self> {
        IdealHandle::intersect(self, other)
    }

    fn colon_with_floor(&self, other: &Self, floor: &Self) -> Result<Self> {
        self.colon_bounded(other, Some(floor))
    }

    fn elem_mul(&self, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
        a.mul(b)
    }

    fn format_elem(&self, e: &Polynomial) -> String {
        self.ring.format(e)
    }

    fn format(&self) -> String {
        IdealHandle::format(self)
    }

    /// Polynomial rings are domains; in a quotient ring the caller must have
    /// declared a regular element, which is verified here.
    fn check_regular(&self) -> Result<()> {
        if self.gens.is_empty() {
            return Err(AlgebraError::ZeroIdeal);
        }
        if !self.ring.is_quotient() {
            return Ok(());
        }
        let x = self.ring.regular_element().ok_or_else(|| {
            AlgebraError::Precondition("quotient ring needs a declared regular element".into())
        })?;
        let zero = IdealHandle::new(self.ring.clone(), vec![])?.with_config(self.cfg);
        let ann = zero.colon_poly(x)?;
        if !zero.contains_ideal(&ann)? {
            return Err(AlgebraError::Precondition(format!("{} is a zero-divisor", self.ring.format(x))));
        }
        if !self.contains_poly(x)? {
            return Err(AlgebraError::Precondition(format!("regular element {} is not in the ideal", self.ring.format(x))));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
