use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use super::numerical::NumericalSemigroup;
use crate::error::{AlgebraError, Result};
use crate::ideal::IdealRing;

pub type Point = (u32, u32);

fn sub(p: Point, q: Point) -> Option<Point> {
    Some((p.0.checked_sub(q.0)?, p.1.checked_sub(q.1)?))
}

/// Membership of every point of `[0, w) x [0, h)` by dynamic programming.
fn membership_table(gens: &[Point], w: u32, h: u32) -> Vec<bool> {
    let mut t = vec![false; (w * h) as usize];
    for x in 0..w {
        for y in 0..h {
            let inside = (x, y) == (0, 0)
                || gens.iter().any(|&g| sub((x, y), g).is_some_and(|(a, b)| t[(a * h + b) as usize]));
            t[(x * h + y) as usize] = inside;
        }
    }
    t
}

/// An affine semigroup `S ⊆ ℕ²`. When `ℕ² \ S` is finite the holes are
/// stored and every ideal operation is exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSemigroup2D {
    gens: Vec<Point>,
    holes: Option<BTreeSet<Point>>,
}

impl AffineSemigroup2D {
    pub fn new(gens: &[Point]) -> Result<Self> {
        let mut gens = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();
        if gens.is_empty() || gens.contains(&(0, 0)) {
            return Err(AlgebraError::Precondition("affine generators must be nonzero".into()));
        }
        let holes = Self::find_holes(&gens);
        Ok(AffineSemigroup2D { gens, holes })
    }

    /// The complement is finite exactly when both axes carry a numerical
    /// semigroup and every short row and column is reached.
    fn find_holes(gens: &[Point]) -> Option<BTreeSet<Point>> {
        let xs: Vec<u32> = gens.iter().filter(|g| g.1 == 0).map(|g| g.0).collect();
        let ys: Vec<u32> = gens.iter().filter(|g| g.0 == 0).map(|g| g.1).collect();
        let cx = NumericalSemigroup::new(&xs).ok()?.conductor();
        let cy = NumericalSemigroup::new(&ys).ok()?.conductor();
        // least x in row y, and least y in column x
        let least = |n: u32, coord: fn(&Point) -> (u32, u32)| -> Option<Vec<u32>> {
            let mut best: Vec<Option<u32>> = vec![None; n.max(1) as usize];
            best[0] = Some(0);
            for r in 1..n {
                best[r as usize] = gens
                    .iter()
                    .map(coord)
                    .filter(|&(along, _)| along > 0 && along <= r)
                    .filter_map(|(along, across)| best[(r - along) as usize].map(|b| b + across))
                    .min();
            }
            best.into_iter().collect()
        };
        let row_x = least(cy, |g| (g.1, g.0))?;
        let col_y = least(cx, |g| (g.0, g.1))?;
        let w = row_x.iter().max().copied().unwrap_or(0) + cx + 1;
        let h = col_y.iter().max().copied().unwrap_or(0).max(cy) + cy + 1;
        let table = membership_table(gens, w, h);
        let mut holes = BTreeSet::new();
        for x in 0..w {
            for y in 0..h {
                if !table[(x * h + y) as usize] {
                    holes.insert((x, y));
                }
            }
        }
        Some(holes)
    }

    pub fn generators(&self) -> &[Point] {
        &self.gens
    }

    pub fn holes(&self) -> Option<&BTreeSet<Point>> {
        self.holes.as_ref()
    }

    /// Exact membership.
    pub fn contains(&self, p: Point) -> bool {
        match &self.holes {
            Some(h) => !h.contains(&p),
            None => membership_table(&self.gens, p.0 + 1, p.1 + 1)[(p.0 * (p.1 + 1) + p.1) as usize],
        }
    }

    /// One past the largest hole coordinates, at least `(1, 1)`.
    fn hole_bound(&self) -> Result<Point> {
        let h = self.holes.as_ref().ok_or_else(|| {
            AlgebraError::Unsupported(format!("{self} has infinite complement; colon boxes are not exact"))
        })?;
        let bx = h.iter().map(|p| p.0 + 1).max().unwrap_or(0).max(1);
        let by = h.iter().map(|p| p.1 + 1).max().unwrap_or(0).max(1);
        Ok((bx, by))
    }
}

impl fmt::Display for AffineSemigroup2D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.gens.iter().map(|p| format!("({},{})", p.0, p.1)).collect();
        write!(f, "<{}>", g.join(","))
    }
}

/// A nonzero monomial ideal `∪ (g + S)` of an affine semigroup ring.
#[derive(Clone, Debug)]
pub struct AffineIdeal {
    semigroup: Arc<AffineSemigroup2D>,
    gens: Vec<Point>,
}

impl PartialEq for AffineIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.semigroup == other.semigroup && self.gens == other.gens
    }
}

impl AffineIdeal {
    pub fn new(semigroup: Arc<AffineSemigroup2D>, gens: &[Point]) -> Result<Self> {
        if gens.is_empty() {
            return Err(AlgebraError::EmptyGenerators);
        }
        if let Some(g) = gens.iter().find(|&&g| !semigroup.contains(g)) {
            return Err(AlgebraError::Precondition(format!("({},{}) is not in {semigroup}", g.0, g.1)));
        }
        let gens = Self::minimalize(&semigroup, gens.to_vec());
        Ok(AffineIdeal { semigroup, gens })
    }

    fn minimalize(s: &AffineSemigroup2D, mut gens: Vec<Point>) -> Vec<Point> {
        gens.sort_unstable_by_key(|p| (p.0 + p.1, *p));
        gens.dedup();
        let mut out: Vec<Point> = Vec::new();
        for g in gens {
            if !out.iter().any(|&h| sub(g, h).is_some_and(|d| s.contains(d))) {
                out.push(g);
            }
        }
        out.sort_unstable();
        out
    }

    pub fn semigroup(&self) -> &Arc<AffineSemigroup2D> {
        &self.semigroup
    }

    pub fn gens(&self) -> &[Point] {
        &self.gens
    }

    pub fn contains_point(&self, p: Point) -> bool {
        self.gens.iter().any(|&g| sub(p, g).is_some_and(|d| self.semigroup.contains(d)))
    }

    fn check(&self, other: &AffineIdeal) -> Result<()> {
        if self.semigroup != other.semigroup {
            return Err(AlgebraError::RingMismatch(format!("{} vs {}", self.semigroup, other.semigroup)));
        }
        Ok(())
    }

    fn from_gens(&self, gens: Vec<Point>) -> AffineIdeal {
        AffineIdeal { gens: Self::minimalize(&self.semigroup, gens), semigroup: self.semigroup.clone() }
    }

    /// A box holding every minimal generator of an ideal whose membership
    /// is decided by the generators of `self` alone.
    ///
    /// With holes below `h`, membership of `p` in `self` stops depending on
    /// `p.0` once `p.0 >= max g.0 + h.0`, and `(h.0, 0) ∈ S`; likewise for `y`.
    fn generator_box(&self) -> Result<Point> {
        let (hx, hy) = self.semigroup.hole_bound()?;
        let ex = self.gens.iter().map(|g| g.0).max().unwrap_or(0) + hx;
        let ey = self.gens.iter().map(|g| g.1).max().unwrap_or(0) + hy;
        Ok((ex + hx, ey + hy))
    }

    fn scan(&self, bx: Point, keep: impl Fn(Point) -> bool) -> AffineIdeal {
        let mut found = Vec::new();
        for x in 0..bx.0 {
            for y in 0..bx.1 {
                if self.semigroup.contains((x, y)) && keep((x, y)) {
                    found.push((x, y));
                }
            }
        }
        self.from_gens(found)
    }
}

impl IdealRing for AffineIdeal {
    type Elem = Point;

    fn unit(&self) -> Self {
        AffineIdeal { semigroup: self.semigroup.clone(), gens: vec![(0, 0)] }
    }

    fn principal(&self, e: &Point) -> Result<Self> {
        AffineIdeal::new(self.semigroup.clone(), &[*e])
    }

    fn generators(&self) -> Vec<Point> {
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
                out.push((a.0 + b.0, a.1 + b.1));
            }
        }
        Ok(self.from_gens(out))
    }

    fn contains_elem(&self, e: &Point) -> Result<bool> {
        Ok(self.contains_point(*e))
    }

    fn contains(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(other.gens.iter().all(|&g| self.contains_point(g)))
    }

    fn equals(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(self == other)
    }

    /// `{p ∈ S : p + F ⊆ E}` scanned over the generator box of `E`.
    fn colon(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let bx = self.generator_box()?;
        Ok(self.scan(bx, |p| other.gens.iter().all(|f| self.contains_point((p.0 + f.0, p.1 + f.1)))))
    }

    fn intersect(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let (a, b) = (self.generator_box()?, other.generator_box()?);
        Ok(self.scan((a.0.max(b.0), a.1.max(b.1)), |p| self.contains_point(p) && other.contains_point(p)))
    }

    fn elem_mul(&self, a: &Point, b: &Point) -> Result<Point> {
        Ok((a.0.checked_add(b.0).ok_or(AlgebraError::ExponentOverflow)?, a.1.checked_add(b.1).ok_or(AlgebraError::ExponentOverflow)?))
    }

    fn format_elem(&self, e: &Point) -> String {
        format!("({},{})", e.0, e.1)
    }

    fn format(&self) -> String {
        let g: Vec<String> = self.gens.iter().map(|e| self.format_elem(e)).collect();
        format!("({})", g.join(", "))
    }
}
