use super::*;
use proptest::prelude::*;

fn xy(gens: &[[u32; 2]]) -> MonomialIdeal {
    let rows: Vec<&[u32]> = gens.iter().map(|g| g.as_slice()).collect();
    MonomialIdeal::from_exponents(&["X", "Y"], &rows).unwrap()
}

fn mono(e: &[u32]) -> Monomial {
    Monomial::new(e.to_vec())
}

/// Every monomial in the box `[0, bound]^d`.
fn box_points(d: usize, bound: u32) -> Vec<Monomial> {
    let mut out = vec![vec![]];
    for _ in 0..d {
        out = out.into_iter().flat_map(|p: Vec<u32>| (0..=bound).map(move |e| { let mut q = p.clone(); q.push(e); q })).collect();
    }
    out.into_iter().map(Monomial::new).collect()
}

#[test]
fn minimal_generators_prune_and_count() {
    assert_eq!(xy(&[[2, 0], [3, 0], [0, 1]]), xy(&[[2, 0], [0, 1]]));
    let m4 = xy(&[[4, 0], [3, 1], [2, 2], [1, 3], [0, 4], [4, 0], [2, 2]]);
    assert_eq!(m4.num_min_gens(), 5);
    assert!(MonomialIdeal::minimal_generators(Arc::new(vec!["X".into()]), vec![]).is_err());
}

#[test]
fn colon_examples_match_box_enumeration() {
    let a = xy(&[[2, 0], [0, 2]]);
    let c = a.colon_by_monomial(&mono(&[1, 1])).unwrap();
    assert_eq!(c, xy(&[[1, 0], [0, 1]]));
    let c2 = a.colon(&xy(&[[1, 0], [0, 1]])).unwrap();
    assert_eq!(c2, xy(&[[2, 0], [1, 1], [0, 2]]));
    // oracle: m in (A:B) iff m*b in A for every generator b
    for m in box_points(2, 4) {
        let direct = [mono(&[1, 0]), mono(&[0, 1])].iter().all(|b| a.contains_monomial(&m.mul(b).unwrap()));
        assert_eq!(c2.contains_monomial(&m), direct, "{:?}", m);
    }
}

#[test]
fn intersections() {
    assert_eq!(xy(&[[1, 0]]).intersect(&xy(&[[0, 1]])).unwrap(), xy(&[[1, 1]]));
    let a = xy(&[[3, 0], [1, 2]]);
    assert_eq!(a.intersect(&a).unwrap(), a);
}

#[test]
fn member_of_power_examples() {
    assert!(xy(&[[3, 0], [0, 3]]).member_of_power(&mono(&[6, 6]), 2).unwrap());
    let i3 = xy(&[[8, 0], [5, 3], [3, 5], [0, 8]]);
    assert!(!i3.member_of_power(&mono(&[12, 12]), 3).unwrap());
    let cert = i3.power_certificate(&mono(&[16, 8]), 3).unwrap();
    assert_eq!(cert.iter().sum::<u32>(), 3);
}

#[test]
fn socle_of_maximal_ideal_is_unit() {
    assert_eq!(xy(&[[1, 0], [0, 1]]).socle_candidates().unwrap(), vec![mono(&[0, 0])]);
    assert_eq!(xy(&[[1, 1]]).socle_candidates(), Err(AlgebraError::NotZeroDimensional));
}

#[test]
fn borel_examples() {
    let full = xy(&[[2, 0], [1, 1], [0, 2]]);
    for dir in [BorelDirection::ToLarger, BorelDirection::ToSmaller] {
        assert!(full.is_borel_fixed(&[0, 1], dir).unwrap());
        assert!(full.is_borel_fixed(&[1, 0], dir).unwrap());
    }
    // replacing Y by X in Y^2 gives XY which is missing
    assert!(!xy(&[[2, 0], [0, 2]]).is_borel_fixed(&[1, 0], BorelDirection::ToSmaller).unwrap());
}

#[test]
fn integral_closure_examples() {
    assert_eq!(xy(&[[2, 0], [0, 2]]).integral_closure().unwrap(), xy(&[[2, 0], [1, 1], [0, 2]]));
    let i = xy(&[[4, 0], [3, 1], [2, 2], [0, 4]]);
    let bar = i.integral_closure().unwrap();
    assert!(bar.contains_monomial(&mono(&[1, 3])) && !i.contains_monomial(&mono(&[1, 3])));
}

#[test]
fn associated_primes_examples() {
    let i = xy(&[[2, 0], [1, 1]]);
    let ass = i.associated_primes().unwrap();
    assert_eq!(ass, vec![VariableSet::from([0]), VariableSet::from([0, 1])]);
    assert_eq!(xy(&[[0, 0]]).associated_primes(), Err(AlgebraError::UnitIdeal));
}

prop_compose! {
    fn small_ideal(d: usize, max_gens: usize)(gens in proptest::collection::vec(proptest::collection::vec(0u32..5, d), 1..max_gens)) -> MonomialIdeal {
        let names: Vec<String> = (0..d).map(|i| format!("x{i}")).collect();
        MonomialIdeal::minimal_generators(Arc::new(names), gens.into_iter().map(Monomial::new).collect()).unwrap()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn member_of_power_agrees_with_expansion(i in small_ideal(2, 5), n in 1u32..5, m in proptest::collection::vec(0u32..18, 2)) {
        let m = Monomial::new(m);
        prop_assert_eq!(i.member_of_power(&m, n).unwrap(), i.power(n).unwrap().contains_monomial(&m));
    }

    #[test]
    fn colon_identities(a in small_ideal(3, 5), b in small_ideal(3, 4), c in small_ideal(3, 3)) {
        let ab = a.colon(&b).unwrap();
        prop_assert!(ab.contains_ideal(&a));
        prop_assert!(a.contains_ideal(&ab.product(&b).unwrap()));
        let lhs = ab.colon(&c).unwrap();
        let rhs = a.colon(&b.product(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn intersection_is_membership_conjunction(a in small_ideal(2, 5), b in small_ideal(2, 5), m in proptest::collection::vec(0u32..7, 2)) {
        let m = Monomial::new(m);
        let both = a.intersect(&b).unwrap();
        prop_assert_eq!(both.contains_monomial(&m), a.contains_monomial(&m) && b.contains_monomial(&m));
    }

    #[test]
    fn integral_closure_contains_and_is_idempotent(i in small_ideal(2, 4)) {
        let bar = i.integral_closure().unwrap();
        prop_assert!(bar.contains_ideal(&i));
        prop_assert_eq!(bar.integral_closure().unwrap(), bar.clone());
        // power oracle: m in closure iff m^k in I^k for some small k
        let k_max = (i.num_min_gens() + 2) as u32;
        for g in bar.gens() {
            let witnessed = (1..=k_max).any(|k| i.member_of_power(&g.pow(k).unwrap(), k).unwrap());
            prop_assert!(witnessed, "{:?}", g);
        }
    }

    #[test]
    fn associated_primes_equivariant(i in small_ideal(3, 4)) {
        prop_assume!(!i.is_unit_ideal());
        let perm = [2usize, 0, 1];
        let swapped = MonomialIdeal::minimal_generators(
            i.names().clone(),
            i.gens().iter().map(|g| { let mut e = vec![0; 3]; for (k, &p) in perm.iter().enumerate() { e[p] = g.exps()[k]; } Monomial::new(e) }).collect(),
        ).unwrap();
        let mut mapped: Vec<VariableSet> = i.associated_primes().unwrap().into_iter().map(|p| p.into_iter().map(|v| perm[v]).collect()).collect();
        mapped.sort();
        prop_assert_eq!(swapped.associated_primes().unwrap(), mapped);
    }
}
