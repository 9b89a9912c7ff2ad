use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::scalar::{Field, Scalar};
use crate::error::{AlgebraError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Scalar,
    pub mono: Monomial,
}

/// Sparse polynomial with terms strictly descending under its order and no
/// zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: Field,
    order: Arc<MonomialOrder>,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(field: Field, order: Arc<MonomialOrder>) -> Self {
        Polynomial { field, order, terms: Vec::new() }
    }

    pub fn constant(field: Field, order: Arc<MonomialOrder>, c: Scalar) -> Self {
        let n = order.nvars();
        Self::from_terms(field, order, vec![Term { coeff: c, mono: Monomial::one(n) }])
    }

    pub fn from_monomial(field: Field, order: Arc<MonomialOrder>, mono: Monomial) -> Self {
        let one = field.one();
        Self::from_terms(field, order, vec![Term { coeff: one, mono }])
    }

    /// Builds a polynomial from arbitrary terms, combining like monomials.
    pub fn from_terms(field: Field, order: Arc<MonomialOrder>, terms: Vec<Term>) -> Self {
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for t in terms {
            debug_assert_eq!(t.coeff.field(), field);
            match acc.get_mut(&t.mono) {
                Some(c) => *c = c.add(&t.coeff),
                None => {
                    acc.insert(t.mono, t.coeff);
                }
            }
        }
        let mut terms: Vec<Term> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(mono, coeff)| Term { coeff, mono }).collect();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Polynomial { field, order, terms }
    }

    /// Trusted constructor: `terms` must already be strictly descending with nonzero coefficients.
    pub(crate) fn from_sorted_terms(field: Field, order: Arc<MonomialOrder>, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| order.cmp(&w[0].mono, &w[1].mono) == Ordering::Greater));
        Polynomial { field, order, terms }
    }

    pub(crate) fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> &Arc<MonomialOrder> {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    /// The single monomial when the polynomial is a nonzero scalar multiple of one.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.as_slice() {
            [t] => Some(&t.mono),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.field != other.field {
            return Err(AlgebraError::RingMismatch(format!("fields {} and {}", self.field, other.field)));
        }
        if self.order != other.order {
            return Err(AlgebraError::RingMismatch("different monomial orders".into()));
        }
        Ok(())
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ord = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => self.order.cmp(&a.mono, &b.mono),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let t = &other.terms[j];
                    out.push(Term { coeff: if negate { t.coeff.neg() } else { t.coeff.clone() }, mono: t.mono.clone() });
                    j += 1;
                }
                Ordering::Equal => {
                    let b = &other.terms[j].coeff;
                    let c = if negate { self.terms[i].coeff.sub(b) } else { self.terms[i].coeff.add(b) };
                    if !c.is_zero() {
                        out.push(Term { coeff: c, mono: self.terms[i].mono.clone() });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { field: self.field, order: self.order.clone(), terms: out }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        Ok(self.merge(other, false))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        Ok(self.merge(other, true))
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for a in &self.terms {
            for b in &other.terms {
                let m = a.mono.mul(&b.mono)?;
                let c = a.coeff.mul(&b.coeff);
                match acc.get_mut(&m) {
                    Some(x) => *x = x.add(&c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<Term> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(mono, coeff)| Term { coeff, mono }).collect();
        terms.sort_by(|a, b| self.order.cmp(&b.mono, &a.mono));
        Ok(Polynomial { field: self.field, order: self.order.clone(), terms })
    }

    pub fn pow(&self, n: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::constant(self.field, self.order.clone(), self.field.one());
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            field: self.field,
            order: self.order.clone(),
            terms: self.terms.iter().map(|t| Term { coeff: t.coeff.neg(), mono: t.mono.clone() }).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.field, self.order.clone());
        }
        Polynomial {
            field: self.field,
            order: self.order.clone(),
            terms: self.terms.iter().map(|t| Term { coeff: t.coeff.mul(c), mono: t.mono.clone() }).collect(),
        }
    }

    /// `c * m * self`; order is preserved since monomial orders are multiplicative.
    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> Result<Polynomial> {
        if c.is_zero() {
            return Ok(Polynomial::zero(self.field, self.order.clone()));
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Ok(Term { coeff: t.coeff.mul(c), mono: t.mono.mul(m)? }))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial { field: self.field, order: self.order.clone(), terms })
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Result<Polynomial> {
        match self.terms.first() {
            None => Ok(self.clone()),
            Some(t) => Ok(self.scale(&t.coeff.inv()?)),
        }
    }

    /// Re-sorts the terms under another order on the same variables.
    pub fn with_order(&self, order: Arc<MonomialOrder>) -> Result<Polynomial> {
        if order.nvars() != self.nvars() {
            return Err(AlgebraError::RingMismatch("order has a different variable count".into()));
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Ok(Polynomial { field: self.field, order, terms })
    }

    /// Maps every exponent vector through `f` into a ring with `order`.
    pub fn map_monomials(&self, order: Arc<MonomialOrder>, f: impl Fn(&Monomial) -> Monomial) -> Polynomial {
        let terms = self.terms.iter().map(|t| Term { coeff: t.coeff.clone(), mono: f(&t.mono) }).collect();
        Polynomial::from_terms(self.field, order, terms)
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.poly.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let c = t.coeff.abs();
            if t.mono.is_one() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", t.mono.display(self.names))?;
            } else {
                write!(f, "{c}*{}", t.mono.display(self.names))?;
            }
        }
        Ok(())
    }
}
