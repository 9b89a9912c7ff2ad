use super::*;
use crate::algebra::{OrderKind, Term};
use crate::lp;
use proptest::prelude::*;

fn ring_xy(kind: OrderKind) -> Arc<Ring> {
    Arc::new(Ring::rational(&["X", "Y"]).unwrap().with_order(MonomialOrder::standard(kind, 2)).unwrap())
}

fn handle(r: &Arc<Ring>, gens: Vec<Polynomial>) -> IdealHandle {
    IdealHandle::new(r.clone(), gens).unwrap()
}

fn example_3_1(r: &Arc<Ring>) -> IdealHandle {
    handle(r, vec![r.poly(&[(1, &[1, 5])]), r.poly(&[(1, &[6, 0]), (-1, &[0, 6])]), r.poly(&[(1, &[4, 2]), (-1, &[2, 4])])])
}

#[test]
fn normal_form_examples() {
    let r = ring_xy(OrderKind::Lex);
    let g = vec![r.poly(&[(1, &[1, 0]), (-1, &[0, 1])])];
    assert_eq!(normal_form(&r.poly(&[(1, &[2, 0])]), &g).unwrap(), r.poly(&[(1, &[0, 2])]));
    assert!(normal_form(&g[0], &g).unwrap().is_zero());
    let basis = vec![r.poly(&[(1, &[1, 0]), (-1, &[0, 2])]), r.poly(&[(1, &[0, 4]), (-1, &[0, 1])])];
    assert!(normal_form(&r.poly(&[(1, &[2, 0]), (-1, &[0, 1])]), &basis).unwrap().is_zero());
    // cofactor identity X^2 - Y = (X + Y^2)(X - Y^2) + (Y^4 - Y)
    let lhs = r.poly(&[(1, &[1, 0]), (1, &[0, 2])]).mul(&basis[0]).unwrap().add(&basis[1]).unwrap();
    assert_eq!(lhs, r.poly(&[(1, &[2, 0]), (-1, &[0, 1])]));
}

#[test]
fn lex_basis_of_two_parabolas() {
    let r = ring_xy(OrderKind::Lex);
    let i = handle(&r, vec![r.poly(&[(1, &[2, 0]), (-1, &[0, 1])]), r.poly(&[(1, &[0, 2]), (-1, &[1, 0])])]);
    let gb = i.default_basis().unwrap();
    let expected = vec![r.poly(&[(1, &[1, 0]), (-1, &[0, 2])]), r.poly(&[(1, &[0, 4]), (-1, &[0, 1])])];
    assert_eq!(gb.polys(), expected.as_slice());
    // oracle: both generating sets reduce to zero modulo each other
    for g in i.gens() {
        assert!(normal_form(g, &expected).unwrap().is_zero());
    }
    for g in &expected {
        assert!(i.contains_poly(g).unwrap());
    }
}

#[test]
fn reduced_basis_is_idempotent() {
    let r = ring_xy(OrderKind::GradedRevLex);
    let i = example_3_1(&r);
    let gb = i.default_basis().unwrap();
    let again = reduced_groebner_basis(gb.polys(), r.order().clone(), GbConfig::default()).unwrap();
    assert_eq!(&again, gb.as_ref());
}

#[test]
fn pair_cap_turns_into_resource_error() {
    let r = ring_xy(OrderKind::GradedRevLex);
    let i = example_3_1(&r).with_config(GbConfig { pair_cap: 1 });
    assert!(matches!(i.default_basis(), Err(AlgebraError::ResourceLimit(_))));
}

#[test]
fn leading_term_ideals_of_binomial_examples() {
    let r = ring_xy(OrderKind::GradedRevLex);
    let lt = example_3_1(&r).leading_term_ideal(r.order()).unwrap();
    assert_eq!(lt, MonomialIdeal::from_exponents(&["X", "Y"], &[&[1, 5], &[6, 0], &[4, 2], &[0, 8]]).unwrap());
    let i = handle(
        &r,
        vec![
            r.poly(&[(1, &[7, 1]), (-1, &[2, 5])]),
            r.poly(&[(1, &[5, 2])]),
            r.poly(&[(1, &[2, 5]), (-1, &[1, 6])]),
            r.poly(&[(1, &[0, 7])]),
        ],
    );
    let lt = i.leading_term_ideal(r.order()).unwrap();
    assert_eq!(lt, MonomialIdeal::from_exponents(&["X", "Y"], &[&[7, 1], &[5, 2], &[2, 5], &[0, 7]]).unwrap());
}

#[test]
fn monomial_ideal_is_its_own_basis() {
    let r = ring_xy(OrderKind::GradedRevLex);
    let i = handle(&r, vec![r.monomial_exps(&[3, 0]), r.monomial_exps(&[0, 3]), r.monomial_exps(&[4, 1])]);
    let lt = i.leading_term_ideal(r.order()).unwrap();
    assert_eq!(lt.num_min_gens(), 2);
}

#[test]
fn colon_and_membership_examples() {
    let r = ring_xy(OrderKind::GradedRevLex);
    let a = handle(&r, vec![r.monomial_exps(&[2, 0])]);
    let b = handle(&r, vec![r.monomial_exps(&[1, 0])]);
    assert!(a.colon_by_elimination(&b).unwrap().equals(&b).unwrap());
    let i = example_3_1(&r);
    assert!(i.contains_poly(&r.zero()).unwrap());
    let x3y4 = r.monomial_exps(&[3, 4]);
    assert!(!i.contains_poly(&x3y4).unwrap());
    let i2 = i.product(&i).unwrap();
    let i3 = i2.product(&i).unwrap();
    let c = i3.colon(&i2).unwrap();
    assert!(c.contains_poly(&x3y4).unwrap());
}

#[test]
fn ideal_equality_is_not_syntactic() {
    let r = ring_xy(OrderKind::GradedRevLex);
    let a = handle(&r, vec![r.var(0), r.var(1)]);
    let b = handle(&r, vec![r.var(1), r.var(0).add(&r.var(1)).unwrap()]);
    assert!(a.equals(&b).unwrap());
    let m4 = a.product(&a).unwrap().product(&a).unwrap().product(&a).unwrap();
    let j = handle(&r, [[4, 0], [3, 1], [1, 3], [0, 4]].iter().map(|e| r.monomial_exps(e)).collect());
    assert!(m4.contains_ideal(&j).unwrap());
    assert!(!j.contains_ideal(&m4).unwrap());
}

#[test]
fn quotient_ring_membership() {
    let base = Ring::rational(&["X", "Z", "U"]).unwrap();
    let q = vec![
        base.monomial_exps(&[0, 2, 0]),
        base.monomial_exps(&[0, 1, 1]),
        base.poly(&[(1, &[1, 1, 0]), (-1, &[0, 0, 3])]),
    ];
    let x = base.var(0);
    let r = Arc::new(base.with_quotient(q).unwrap().with_regular_element(x).unwrap());
    let m = handle(&r, vec![r.var(0), r.var(1), r.var(2)]);
    m.check_regular().unwrap();
    let m2 = m.product(&m).unwrap();
    let m3 = m2.product(&m).unwrap();
    let z = r.var(1);
    assert!(!m2.contains_poly(&z).unwrap());
    assert!(m3.contains_poly(&z.mul(&r.var(0)).unwrap()).unwrap());
    assert!(m3.colon(&m).unwrap().contains_poly(&z).unwrap());
    assert!(matches!(
        handle(&r, vec![r.var(1)]).leading_term_ideal(r.order()),
        Err(AlgebraError::Unsupported(_))
    ));
}

#[test]
fn zero_divisor_declared_as_regular_is_rejected() {
    let base = Ring::rational(&["X", "Z"]).unwrap();
    let q = vec![base.monomial_exps(&[0, 2])];
    let z = base.var(1);
    let r = Arc::new(base.with_quotient(q).unwrap().with_regular_element(z).unwrap());
    let m = handle(&r, vec![r.var(0), r.var(1)]);
    assert!(matches!(m.check_regular(), Err(AlgebraError::Precondition(_))));
}

/// f ∈ (gens) with cofactors of degree <= d, decided by exact linear solvability.
fn in_ideal_bounded(r: &Ring, f: &Polynomial, gens: &[Polynomial], d: u32) -> bool {
    let mut columns: Vec<Polynomial> = vec![];
    for g in gens {
        for a in 0..=d {
            for b in 0..=(d - a) {
                columns.push(g.mul(&r.monomial_exps(&[a, b])).unwrap());
            }
        }
    }
    let mut monos: Vec<Monomial> = columns.iter().chain(std::iter::once(f)).flat_map(|p| p.terms().iter().map(|t| t.mono.clone())).collect();
    monos.sort();
    monos.dedup();
    let coeff = |p: &Polynomial, m: &Monomial| -> i64 {
        p.terms().iter().find(|t: &&Term| &t.mono == m).map(|t| t.coeff.to_string().parse::<i64>().unwrap()).unwrap_or(0)
    };
    let a: Vec<_> = monos
        .iter()
        .map(|m| columns.iter().map(|c| lp::int(coeff(c, m))).chain(columns.iter().map(|c| lp::int(-coeff(c, m)))).collect())
        .collect();
    let b: Vec<_> = monos.iter().map(|m| lp::int(coeff(f, m))).collect();
    lp::is_feasible(&a, &b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn membership_agrees_with_cofactor_search(terms in proptest::collection::vec(proptest::collection::vec((-2i64..=2, 0u32..3, 0u32..3), 1..3), 4)) {
        let r = ring_xy(OrderKind::GradedRevLex);
        let ps: Vec<Polynomial> = terms.iter().map(|ts| {
            let rows: Vec<(i64, [u32; 2])> = ts.iter().map(|(c, a, b)| (*c, [*a, *b])).collect();
            let t: Vec<(i64, &[u32])> = rows.iter().map(|(c, e)| (*c, e.as_slice())).collect();
            r.poly(&t)
        }).collect();
        let (g1, g2, c1, c2) = (ps[0].clone(), ps[1].clone(), ps[2].clone(), ps[3].clone());
        prop_assume!(!g1.is_zero() && !g2.is_zero());
        let gens = vec![g1.clone(), g2.clone()];
        let i = IdealHandle::new(r.clone(), gens.clone()).unwrap();
        // a genuine member with degree-<=2 cofactors
        let f = c1.mul(&g1).unwrap().add(&c2.mul(&g2).unwrap()).unwrap();
        prop_assert!(i.contains_poly(&f).unwrap());
        // NF idempotence
        let nf = i.normal_form(&r.monomial_exps(&[2, 3])).unwrap();
        prop_assert_eq!(i.normal_form(&nf).unwrap(), nf.clone());
        // a bounded non-membership claim must agree with the GB verdict whenever the search finds cofactors
        let probe = r.monomial_exps(&[1, 2]).add(&g1).unwrap();
        if in_ideal_bounded(&r, &probe, &gens, 3) {
            prop_assert!(i.contains_poly(&probe).unwrap());
        }
    }

    #[test]
    fn monomial_colon_agrees_with_elimination(a in proptest::collection::vec((0u32..4, 0u32..4), 1..4), b in proptest::collection::vec((0u32..3, 0u32..3), 1..3)) {
        let r = ring_xy(OrderKind::GradedRevLex);
        let ha = IdealHandle::new(r.clone(), a.iter().map(|(x, y)| r.monomial_exps(&[*x, *y])).collect()).unwrap();
        let hb = IdealHandle::new(r.clone(), b.iter().map(|(x, y)| r.monomial_exps(&[*x, *y])).collect()).unwrap();
        let mono = ha.as_monomial_ideal().unwrap().colon(&hb.as_monomial_ideal().unwrap()).unwrap();
        let elim = ha.colon_by_elimination(&hb).unwrap();
        prop_assert!(elim.equals(&IdealHandle::from_monomial_ideal(r.clone(), &mono).unwrap()).unwrap());
    }

    #[test]
    fn binomial_colon_identities(a1 in (0u32..4, 0u32..4, 0u32..4, 0u32..4), b1 in (0u32..3, 0u32..3)) {
        let r = ring_xy(OrderKind::GradedRevLex);
        let (p, q, s, t) = a1;
        let a = IdealHandle::new(r.clone(), vec![
            r.poly(&[(1, &[p + 1, q]), (-1, &[s, t + 1])]),
            r.monomial_exps(&[4, 0]),
            r.monomial_exps(&[0, 4]),
        ]).unwrap();
        let b = IdealHandle::new(r.clone(), vec![r.poly(&[(1, &[b1.0 + 1, b1.1]), (1, &[0, b1.0 + b1.1 + 1])])]).unwrap();
        let c = a.colon(&b).unwrap();
        prop_assert!(c.contains_ideal(&a).unwrap());
        prop_assert!(a.contains_ideal(&c.product(&b).unwrap()).unwrap());
    }
}
