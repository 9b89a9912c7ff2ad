use std::sync::Arc;

use super::monomial::Monomial;
use super::order::{MonomialOrder, OrderKind};
use super::poly::{Polynomial, Term};
use super::scalar::Field;
use crate::error::{AlgebraError, Result};

/// A polynomial ring `F[x_1..x_d]`, optionally modulo a defining ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    names: Vec<String>,
    field: Field,
    order: Arc<MonomialOrder>,
    quotient: Vec<Polynomial>,
    regular_element: Option<Polynomial>,
}

impl Ring {
    pub fn new(names: Vec<String>, field: Field) -> Result<Self> {
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(AlgebraError::Precondition(format!("duplicate variable `{n}`")));
            }
        }
        if names.is_empty() {
            return Err(AlgebraError::Precondition("ring needs at least one variable".into()));
        }
        let order = Arc::new(MonomialOrder::standard(OrderKind::GradedRevLex, names.len()));
        Ok(Ring { names, field, order, quotient: Vec::new(), regular_element: None })
    }

    /// `QQ[names]` with the default graded reverse lexicographic order.
    pub fn rational(names: &[&str]) -> Result<Self> {
        Ring::new(names.iter().map(|s| s.to_string()).collect(), Field::Rationals)
    }

    pub fn with_order(mut self, order: MonomialOrder) -> Result<Self> {
        if order.nvars() != self.names.len() {
            return Err(AlgebraError::RingMismatch("order has a different variable count".into()));
        }
        self.order = Arc::new(order);
        self.quotient = self.quotient.iter().map(|q| q.with_order(self.order.clone())).collect::<Result<_>>()?;
        if let Some(r) = self.regular_element.take() {
            self.regular_element = Some(r.with_order(self.order.clone())?);
        }
        Ok(self)
    }

    pub fn with_quotient(mut self, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            self.check_poly(g)?;
        }
        self.quotient = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(self)
    }

    /// Declares an element the caller asserts is a non-zerodivisor modulo the defining ideal.
    pub fn with_regular_element(mut self, x: Polynomial) -> Result<Self> {
        self.check_poly(&x)?;
        self.regular_element = Some(x);
        Ok(self)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> &Arc<MonomialOrder> {
        &self.order
    }

    pub fn quotient(&self) -> &[Polynomial] {
        &self.quotient
    }

    pub fn is_quotient(&self) -> bool {
        !self.quotient.is_empty()
    }

    pub fn regular_element(&self) -> Option<&Polynomial> {
        self.regular_element.as_ref()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn check_poly(&self, p: &Polynomial) -> Result<()> {
        if p.field() != self.field || p.order() != &self.order {
            return Err(AlgebraError::RingMismatch("polynomial does not belong to this ring".into()));
        }
        Ok(())
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.field, self.order.clone())
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::constant(self.field, self.order.clone(), self.field.one())
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        Polynomial::constant(self.field, self.order.clone(), self.field.from_i64(c))
    }

    pub fn var(&self, i: usize) -> Polynomial {
        self.monomial(Monomial::var(self.nvars(), i))
    }

    pub fn monomial(&self, m: Monomial) -> Polynomial {
        Polynomial::from_monomial(self.field, self.order.clone(), m)
    }

    pub fn monomial_exps(&self, exps: &[u32]) -> Polynomial {
        self.monomial(Monomial::new(exps.to_vec()))
    }

    /// Polynomial from `(coefficient, exponents)` pairs.
    pub fn poly(&self, terms: &[(i64, &[u32])]) -> Polynomial {
        Polynomial::from_terms(
            self.field,
            self.order.clone(),
            terms.iter().map(|(c, e)| Term { coeff: self.field.from_i64(*c), mono: Monomial::new(e.to_vec()) }).collect(),
        )
    }

    pub fn format(&self, p: &Polynomial) -> String {
        p.display(&self.names).to_string()
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        m.display(&self.names).to_string()
    }
}
