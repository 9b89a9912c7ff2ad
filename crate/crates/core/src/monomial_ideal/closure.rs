use num_rational::BigRational;
use num_traits::Zero;

use super::MonomialIdeal;
use crate::algebra::Monomial;
use crate::error::{AlgebraError, Result};
use crate::lp;

/// Whether the point `v` lies in `conv(points) + R^d_{>=0}`.
pub fn newton_polyhedron_contains(points: &[Monomial], v: &Monomial) -> bool {
    if points.is_empty() {
        return false;
    }
    if points.iter().any(|p| p.divides(v)) {
        return true;
    }
    let d = v.nvars();
    let n = points.len();
    // sum_j lambda_j p_j + s = v ; sum_j lambda_j = 1 ; lambda, s >= 0
    let mut a = Vec::with_capacity(d + 1);
    let mut b = Vec::with_capacity(d + 1);
    for i in 0..d {
        let mut row: Vec<BigRational> = points.iter().map(|p| lp::int(p.exps()[i] as i64)).collect();
        row.extend((0..d).map(|k| if k == i { lp::int(1) } else { BigRational::zero() }));
        a.push(row);
        b.push(lp::int(v.exps()[i] as i64));
    }
    let mut row: Vec<BigRational> = vec![lp::int(1); n];
    row.extend((0..d).map(|_| BigRational::zero()));
    a.push(row);
    b.push(lp::int(1));
    lp::is_feasible(&a, &b)
}

impl MonomialIdeal {
    /// Integral closure: the monomials whose exponents lie in the Newton
    /// polyhedron. Minimal generators live in the box bounded by the maximal
    /// generator exponents, since clipping a point of the polyhedron to that
    /// box stays inside it.
    pub fn integral_closure(&self) -> Result<MonomialIdeal> {
        if self.is_zero_ideal() {
            return Err(AlgebraError::ZeroIdeal);
        }
        let bound = self.max_exponents();
        let mut found = Vec::new();
        let mut point = vec![0u32; self.nvars()];
        loop {
            let m = Monomial::new(point.clone());
            if self.contains_monomial(&m) || newton_polyhedron_contains(&self.gens, &m) {
                found.push(m);
            }
            // odometer over the box
            let mut i = 0;
            loop {
                if i == point.len() {
                    return Self::build(self.names.clone(), found);
                }
                if point[i] < bound[i] {
                    point[i] += 1;
                    break;
                }
                point[i] = 0;
                i += 1;
            }
        }
    }

    pub fn is_integral_over(&self, m: &Monomial) -> bool {
        newton_polyhedron_contains(&self.gens, m)
    }
}
