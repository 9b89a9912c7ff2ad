use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::ideal::IdealRing;
use crate::ratliff_rush::{is_rr_closed, rr_closure, ClosureStatus};

fn s4511() -> Arc<NumericalSemigroup> {
    Arc::new(NumericalSemigroup::new(&[4, 5, 11]).unwrap())
}

/// Membership by enumerating all non-negative combinations.
fn brute_member(gens: &[u32], z: u32) -> bool {
    fn go(gens: &[u32], z: u32) -> bool {
        z == 0 || gens.iter().any(|&a| a <= z && go(gens, z - a))
    }
    go(gens, z)
}

#[test]
fn gaps_and_conductor() {
    let s = s4511();
    assert_eq!(s.gaps(), vec![1, 2, 3, 6, 7]);
    assert_eq!(s.conductor(), 8);
    assert_eq!(s.frobenius(), 7);
    assert!(s.contains(0) && s.contains(11));
    for z in 0..=30 {
        assert_eq!(s.contains(z), brute_member(&[4, 5, 11], z), "z = {z}");
    }
    assert!(s.contains_signed(-1).is_err());
    assert!(NumericalSemigroup::new(&[4, 6]).is_err());
    assert_eq!(NumericalSemigroup::new(&[3, 5, 8]).unwrap().generators(), &[3, 5]);
}

#[test]
fn maximal_ideal_powers() {
    let s = s4511();
    let m = SemigroupIdeal::maximal(s.clone());
    let m2 = m.product(&m).unwrap();
    assert_eq!(m2.gens(), &[8, 9, 10]);
    assert!(!m2.contains_exponent(11));
    let m3 = m2.product(&m).unwrap();
    let m4 = m3.product(&m).unwrap();
    assert_eq!(m4, m3.shift(4));
    assert_eq!(m.principal_reduction_number(8).unwrap(), 3);
    let c = m.colon(&m).unwrap();
    assert!(c.contains_exponent(0));
}

#[test]
fn closures_are_exact() {
    let s = s4511();
    let m = SemigroupIdeal::maximal(s.clone());
    let cfg = ClosureConfig::default();
    let r1 = ns_rr_closure(&m, 1, &cfg).unwrap();
    assert_eq!(r1.value, m);
    assert!(matches!(r1.status, ClosureStatus::Exact { .. }));
    let r2 = ns_rr_closure(&m, 2, &cfg).unwrap();
    assert_eq!(r2.value.gens(), &[8, 9, 10, 11]);
    let unit = m.unit();
    assert_eq!(rr_closure(&unit, &cfg).unwrap().value, unit);
}

#[test]
fn closure_agrees_with_definitional_union() {
    let s = s4511();
    let m = SemigroupIdeal::maximal(s.clone());
    for n in 1..=4 {
        let fast = ns_rr_closure(&m, n, &ClosureConfig::default()).unwrap().value;
        let mut acc = m.power(n).unwrap();
        for k in 1..=20 {
            acc = acc.sum(&m.power(n + k).unwrap().colon(&m.power(k).unwrap()).unwrap()).unwrap();
        }
        assert_eq!(fast, acc);
    }
}

fn affine_example() -> (Arc<AffineSemigroup2D>, AffineIdeal) {
    let s = Arc::new(AffineSemigroup2D::new(&[(1, 0), (0, 2), (0, 7), (2, 5), (3, 1)]).unwrap());
    let i = AffineIdeal::new(s.clone(), &[(1, 0), (0, 2)]).unwrap();
    (s, i)
}

fn brute_affine(gens: &[Point], p: Point) -> bool {
    p == (0, 0) || gens.iter().any(|&g| g.0 <= p.0 && g.1 <= p.1 && brute_affine(gens, (p.0 - g.0, p.1 - g.1)))
}

#[test]
fn affine_membership() {
    let (s, _) = affine_example();
    assert!(s.contains((2, 5)) && s.contains((0, 0)));
    assert!(!s.contains((1, 5)));
    let holes: Vec<Point> = s.holes().unwrap().iter().copied().collect();
    assert_eq!(holes, vec![(0, 1), (0, 3), (0, 5), (1, 1), (1, 3), (1, 5), (2, 1), (2, 3)]);
    let gens = s.generators().to_vec();
    for x in 0..=12 {
        for y in 0..=12 {
            assert_eq!(s.contains((x, y)), brute_affine(&gens, (x, y)), "({x},{y})");
        }
    }
}

#[test]
fn parameter_ideal_is_not_closed() {
    let (_, i) = affine_example();
    let w = (2, 5);
    assert!(!i.contains_point(w));
    let i2 = i.product(&i).unwrap();
    assert!(i2.contains(&i.mul_elem(&w).unwrap()).unwrap());
    let c = i2.colon(&i).unwrap();
    assert!(c.contains_point(w));
    let p = is_rr_closed(&i, &ClosureConfig::default()).unwrap();
    assert!(p.verdict.fails());
}

#[test]
fn infinite_complement_is_unsupported() {
    let s = Arc::new(AffineSemigroup2D::new(&[(1, 0), (1, 1)]).unwrap());
    let i = AffineIdeal::new(s.clone(), &[(1, 0)]).unwrap();
    assert!(s.contains((3, 2)) && !s.contains((1, 2)));
    assert!(i.colon(&i).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn numerical_membership_matches_enumeration(gens in proptest::collection::vec(2u32..12, 2..4), z in 0u32..40) {
        if let Ok(s) = NumericalSemigroup::new(&gens) {
            prop_assert_eq!(s.contains(z), brute_member(&gens, z));
        }
    }

    #[test]
    fn colon_is_exact(gens in proptest::collection::vec(3u32..9, 2..4), e in proptest::collection::vec(0u32..25, 1..3), f in proptest::collection::vec(0u32..25, 1..3)) {
        let Ok(s) = NumericalSemigroup::new(&gens) else { return Ok(()) };
        let s = Arc::new(s);
        let lift = |v: &[u32]| -> Vec<u32> { v.iter().map(|&z| if s.contains(z) { z } else { z + s.conductor() }).collect() };
        let ei = SemigroupIdeal::new(s.clone(), &lift(&e)).unwrap();
        let fi = SemigroupIdeal::new(s.clone(), &lift(&f)).unwrap();
        let c = ei.colon(&fi).unwrap();
        // exponent-set oracle out to twice the natural bound
        let bound = 2 * (ei.gens()[0] + s.conductor() + 30);
        for z in 0..bound {
            let direct = s.contains(z) && fi.gens().iter().all(|&g| ei.contains_exponent(z + g));
            prop_assert_eq!(c.contains_exponent(z), direct);
        }
        let closure = rr_closure(&ei, &ClosureConfig::default()).unwrap().value;
        prop_assert!(closure.contains(&ei).unwrap());
        prop_assert_eq!(rr_closure(&closure, &ClosureConfig::default()).unwrap().value, closure);
    }

    #[test]
    fn affine_colon_matches_direct_scan(a in proptest::collection::vec((0u32..5, 0u32..8), 1..3), b in proptest::collection::vec((0u32..4, 0u32..6), 1..3)) {
        let (s, _) = affine_example();
        let lift = |v: &[Point]| -> Vec<Point> { v.iter().map(|&p| if s.contains(p) { p } else { (p.0 + 3, p.1) }).collect() };
        let e = AffineIdeal::new(s.clone(), &lift(&a)).unwrap();
        let f = AffineIdeal::new(s.clone(), &lift(&b)).unwrap();
        let c = e.colon(&f).unwrap();
        for x in 0..30 {
            for y in 0..30 {
                let direct = s.contains((x, y)) && f.gens().iter().all(|g| e.contains_point((x + g.0, y + g.1)));
                prop_assert_eq!(c.contains_point((x, y)), direct, "({}, {})", x, y);
            }
        }
    }
}
