use std::cmp::Ordering;
use std::collections::HashSet;
use std::sync::Arc;

use crate::algebra::{Monomial, MonomialOrder, Polynomial, Term};
use crate::error::{AlgebraError, Result};

/// Limits for a Gröbner basis computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GbConfig {
    /// Maximum number of S-pairs reduced before giving up.
    pub pair_cap: usize,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig { pair_cap: 200_000 }
    }
}

/// A reduced Gröbner basis: monic, auto-reduced, sorted by descending leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: Arc<MonomialOrder>,
    polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &Arc<MonomialOrder> {
        &self.order
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().filter_map(|p| p.leading_monomial().cloned()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.polys.iter().any(|p| p.leading_monomial().is_some_and(|m| m.is_one()))
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.order() != &self.order {
            return Err(AlgebraError::RingMismatch("polynomial order differs from basis order".into()));
        }
        normal_form(f, &self.polys)
    }

    pub fn reduces_to_zero(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

/// Full reduction of `f` by `basis`: no term of the result is divisible by a
/// leading monomial of the basis.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Result<Polynomial> {
    let field = f.field();
    let order = f.order().clone();
    let mut p = f.clone();
    let mut rem: Vec<Term> = Vec::new();
    while let Some(lt) = p.leading_term().cloned() {
        let divisor = basis.iter().find(|g| g.leading_monomial().is_some_and(|m| m.divides(&lt.mono)));
        match divisor {
            Some(g) => {
                let gl = g.leading_term().expect("basis elements are nonzero");
                let c = lt.coeff.div(&gl.coeff)?;
                let m = lt.mono.div(&gl.mono).expect("divisibility checked");
                p = p.sub(&g.mul_term(&c, &m)?)?;
            }
            None => {
                let mut terms = p.into_terms();
                rem.push(terms.remove(0));
                p = Polynomial::from_sorted_terms(field, order.clone(), terms);
            }
        }
    }
    Ok(Polynomial::from_sorted_terms(field, order, rem))
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let (lf, lg) = (f.leading_term().expect("nonzero"), g.leading_term().expect("nonzero"));
    let l = lf.mono.lcm(&lg.mono)?;
    let a = f.mul_term(&lf.coeff.inv()?, &l.div(&lf.mono).expect("lcm"))?;
    let b = g.mul_term(&lg.coeff.inv()?, &l.div(&lg.mono).expect("lcm"))?;
    a.sub(&b)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Buchberger's algorithm with the normal selection strategy, the coprime
/// criterion and the chain criterion.
pub fn reduced_groebner_basis(gens: &[Polynomial], order: Arc<MonomialOrder>, cfg: GbConfig) -> Result<GroebnerBasis> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        let g = g.with_order(order.clone())?;
        if !g.is_zero() {
            basis.push(g.monic()?);
        }
    }
    if basis.is_empty() {
        return Ok(GroebnerBasis { order, polys: Vec::new() });
    }
    if basis.iter().any(|g| g.leading_monomial().is_some_and(|m| m.is_one())) {
        let one = Polynomial::constant(basis[0].field(), order.clone(), basis[0].field().one());
        return Ok(GroebnerBasis { order, polys: vec![one] });
    }
    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            push_pair(&basis, &mut pairs, &mut pending, i, j)?;
        }
    }
    let mut processed = 0usize;
    while !pairs.is_empty() {
        // normal strategy: smallest lcm first
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&pairs[a], &pairs[b]);
                pa.lcm.degree().cmp(&pb.lcm.degree()).then_with(|| order.cmp(&pa.lcm, &pb.lcm)).then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
            })
            .expect("nonempty");
        let pair = pairs.swap_remove(best);
        pending.remove(&(pair.i, pair.j));
        let (fi, fj) = (&basis[pair.i], &basis[pair.j]);
        let (li, lj) = (fi.leading_monomial().expect("nonzero"), fj.leading_monomial().expect("nonzero"));
        if li.is_coprime(lj) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && basis[k].leading_monomial().is_some_and(|m| m.divides(&pair.lcm))
                && !pending.contains(&ordered(pair.i, k))
                && !pending.contains(&ordered(pair.j, k))
        });
        if chain {
            continue;
        }
        processed += 1;
        if processed > cfg.pair_cap {
            return Err(AlgebraError::ResourceLimit(format!("Gröbner pair cap {} exceeded", cfg.pair_cap)));
        }
        let s = s_polynomial(fi, fj)?;
        let h = normal_form(&s, &basis)?;
        if h.is_zero() {
            continue;
        }
        let h = h.monic()?;
        if h.leading_monomial().is_some_and(|m| m.is_one()) {
            let one = Polynomial::constant(h.field(), order.clone(), h.field().one());
            return Ok(GroebnerBasis { order, polys: vec![one] });
        }
        basis.push(h);
        let k = basis.len() - 1;
        for i in 0..k {
            push_pair(&basis, &mut pairs, &mut pending, i, k)?;
        }
    }
    Ok(GroebnerBasis { polys: interreduce(basis)?, order })
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn push_pair(basis: &[Polynomial], pairs: &mut Vec<Pair>, pending: &mut HashSet<(usize, usize)>, i: usize, j: usize) -> Result<()> {
    let lcm = basis[i].leading_monomial().expect("nonzero").lcm(basis[j].leading_monomial().expect("nonzero"))?;
    pairs.push(Pair { i, j, lcm });
    pending.insert((i, j));
    Ok(())
}

fn interreduce(mut basis: Vec<Polynomial>) -> Result<Vec<Polynomial>> {
    let order = basis[0].order().clone();
    basis.sort_by(|a, b| order.cmp(a.leading_monomial().expect("nonzero"), b.leading_monomial().expect("nonzero")));
    // minimal basis: drop elements whose leading monomial is divisible by another's
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().expect("nonzero");
        if !minimal.iter().any(|h| h.leading_monomial().expect("nonzero").divides(lm)) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p.clone()).collect();
        let lt = minimal[i].leading_term().expect("nonzero").clone();
        let tail = Polynomial::from_sorted_terms(minimal[i].field(), order.clone(), minimal[i].terms()[1..].to_vec());
        let tail = normal_form(&tail, &others)?;
        let mut terms = vec![lt];
        terms.extend(tail.into_terms());
        reduced.push(Polynomial::from_sorted_terms(minimal[i].field(), order.clone(), terms).monic()?);
    }
    reduced.sort_by(|a, b| match order.cmp(a.leading_monomial().expect("nonzero"), b.leading_monomial().expect("nonzero")) {
        Ordering::Less => Ordering::Greater,
        Ordering::Greater => Ordering::Less,
        Ordering::Equal => Ordering::Equal,
    });
    Ok(reduced)
}

/// Exact quotient `f / b`; errors if `b` does not divide `f`.
pub fn divide_exact(f: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    let bl = b.leading_term().ok_or(AlgebraError::DivisionByZero)?.clone();
    let mut p = f.clone();
    let mut q: Vec<Term> = Vec::new();
    while let Some(lt) = p.leading_term().cloned() {
        let m = lt.mono.div(&bl.mono).ok_or_else(|| AlgebraError::Internal("inexact polynomial division".into()))?;
        let c = lt.coeff.div(&bl.coeff)?;
        p = p.sub(&b.mul_term(&c, &m)?)?;
        q.push(Term { coeff: c, mono: m });
    }
    Ok(Polynomial::from_terms(f.field(), f.order().clone(), q))
}
