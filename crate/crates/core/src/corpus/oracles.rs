//! Cross-checks between independent computations.

use std::sync::Arc;

use rand::Rng;

use super::cases::{cfg, DEFAULT};
use super::sampling::sample_primary;
use super::Kind::{Bounded, Exact};
use super::{Case, CaseDef, Check};
use crate::algebra::{Monomial, Ring};
use crate::error::Result;
use crate::groebner::IdealHandle;
use crate::monomial_ideal::MonomialIdeal;
use crate::ratliff_rush::{rr_closure_via_reduction, rr_power, ClosureStatus};
use crate::reductions::is_reduction;

pub(super) fn cases() -> Vec<CaseDef> {
    vec![
        CaseDef { id: "ORACLE-COLON", title: "monomial colon against Groebner colon", config: DEFAULT, run: oracle_colon },
        CaseDef { id: "ORACLE-POWER", title: "multiplicity search against explicit powers", config: DEFAULT, run: oracle_power },
        CaseDef { id: "ORACLE-REDUCTION", title: "closure of powers through a reduction", config: cfg(8, 3, 6), run: oracle_reduction },
    ]
}

/// Monomial ideals appearing in the worked examples.
pub fn monomial_corpus() -> Result<Vec<(&'static str, MonomialIdeal)>> {
    let xy = ["X", "Y"];
    let xyz = ["X", "Y", "Z"];
    let list: Vec<(&'static str, &[&str], Vec<&[u32]>)> = vec![
        ("pure cubes", &xy, vec![&[3, 0], &[0, 3]]),
        ("four quartics", &xy, vec![&[4, 0], &[3, 1], &[1, 3], &[0, 4]]),
        ("closed quartics", &xy, vec![&[4, 0], &[3, 1], &[2, 2], &[0, 4]]),
        ("nine generators", &xy, vec![&[0, 22], &[4, 18], &[7, 15], &[8, 14], &[11, 11], &[14, 8], &[15, 7], &[18, 4], &[22, 0]]),
        ("four octics", &xy, vec![&[8, 0], &[5, 3], &[3, 5], &[0, 8]]),
        ("non-closed mixed", &xy, vec![&[10, 0], &[0, 5], &[1, 4], &[8, 1]]),
        ("multiple of quartics", &xy, vec![&[5, 0], &[4, 1], &[2, 3], &[1, 4]]),
        ("Borel-fixed", &xy, vec![&[6, 0], &[5, 4], &[4, 11], &[3, 13], &[2, 17], &[1, 23], &[0, 29]]),
        ("lex segment", &xy, vec![&[4, 0], &[3, 1], &[2, 4], &[1, 5], &[0, 7]]),
        ("Borel-fixed closed", &xy, vec![&[5, 0], &[4, 1], &[3, 4], &[2, 5], &[1, 8], &[0, 9]]),
        ("leading terms", &xy, vec![&[1, 5], &[6, 0], &[4, 2], &[0, 8]]),
        ("leading terms non-closed", &xy, vec![&[7, 1], &[5, 2], &[2, 5], &[0, 7]]),
        ("depth one, l = 3", &xy, vec![&[3, 0], &[1, 2], &[0, 3]]),
        ("depth one, l = 4", &xy, vec![&[4, 0], &[1, 3], &[0, 4]]),
        ("embedded prime", &xyz, vec![&[4, 0, 0], &[3, 1, 0], &[1, 3, 0], &[0, 4, 0], &[2, 2, 1]]),
        ("new embedded prime", &xyz, vec![&[0, 4, 1], &[1, 3, 1], &[3, 1, 1], &[4, 0, 1], &[2, 3, 0], &[3, 2, 0]]),
        ("fewer generators", &xyz, vec![&[4, 0, 0], &[3, 1, 0], &[1, 3, 0], &[0, 4, 0]]),
    ];
    list.into_iter().map(|(n, v, g)| Ok((n, MonomialIdeal::from_exponents(v, &g)?))).collect()
}

fn handle(i: &MonomialIdeal) -> Result<IdealHandle> {
    let names: Vec<&str> = i.names().iter().map(String::as_str).collect();
    IdealHandle::from_monomial_ideal(Arc::new(Ring::rational(&names)?), i)
}

fn colon_agrees(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<bool> {
    let mono = a.colon(b)?;
    let gb = handle(a)?.colon(&handle(b)?)?;
    Ok(gb.as_monomial_ideal().is_some_and(|g| g == mono) && gb.equals(&handle(&mono)?)?)
}

fn random_ideal(rng: &mut impl Rng, d: usize, gens: usize, top: u32) -> Result<MonomialIdeal> {
    let names = &["X", "Y", "Z"][..d];
    let g: Vec<Vec<u32>> = (0..gens).map(|_| (0..d).map(|_| rng.gen_range(0..=top)).collect()).collect();
    let refs: Vec<&[u32]> = g.iter().map(Vec::as_slice).collect();
    MonomialIdeal::from_exponents(names, &refs)
}

fn oracle_colon(c: &mut Case) {
    let corpus = monomial_corpus();
    c.check(Exact, "I^2 : I agrees for every corpus ideal", "two colon algorithms", move || {
        for (name, i) in corpus? {
            if !colon_agrees(&i.power(2)?, &i)? {
                return Ok(Check::new(false).witness(name));
            }
        }
        Ok(true.into())
    });
    let mut rng = c.rng(1);
    c.check(Exact, "I : J agrees for 40 seeded pairs", "two colon algorithms", move || {
        for t in 0..40 {
            let d = 2 + t % 2;
            let a = random_ideal(&mut rng, d, 4, 6)?;
            let b = random_ideal(&mut rng, d, 2, 3)?;
            if !colon_agrees(&a, &b)? {
                return Ok(Check::new(false).witness(format!("{} : {}", a.format(), b.format())));
            }
        }
        Ok(true.into())
    });
}

/// Generators of `I^n`, their neighbours and seeded monomials in the bounding box.
fn test_points(i: &MonomialIdeal, n: u32, rng: &mut impl Rng) -> Result<Vec<Monomial>> {
    let p = i.power(n)?;
    let d = i.nvars();
    let top: Vec<u32> = p.max_exponents();
    let mut out = Vec::new();
    for g in p.gens() {
        out.push(g.clone());
        for v in 0..d {
            let e = g.exps();
            if e[v] > 0 {
                let mut f = e.to_vec();
                f[v] -= 1;
                out.push(Monomial::new(f));
            }
        }
    }
    for _ in 0..100 {
        out.push(Monomial::new(top.iter().map(|&t| rng.gen_range(0..=t)).collect()));
    }
    Ok(out)
}

fn oracle_power(c: &mut Case) {
    let corpus = monomial_corpus();
    let mut rng = c.rng(2);
    c.check(Exact, "membership in I^n agrees with the expanded power for n <= 4", "two power memberships", move || {
        let mut tested = 0;
        for (name, i) in corpus? {
            for n in 1..=4 {
                let p = i.power(n)?;
                for w in test_points(&i, n, &mut rng)? {
                    tested += 1;
                    if i.member_of_power(&w, n)? != p.contains_monomial(&w) {
                        return Ok(Check::new(false).witness(format!("{} in {name}^{n}", i.format_monomial(&w))));
                    }
                }
            }
        }
        Ok(Check::new(true).detail(format!("{tested} memberships compared")))
    });
}

fn oracle_reduction(c: &mut Case) {
    let cfg = c.cfg();
    let corpus = monomial_corpus();
    let mut rng = c.rng(3);
    c.check(Bounded, "rr_power and the reduction route agree for n = 1, 2", "two closure routes", move || {
        let mut ideals = Vec::new();
        for (name, i) in corpus? {
            if i.nvars() == 2 && i.is_zero_dimensional() {
                let top = i.max_exponents();
                let j = MonomialIdeal::from_exponents(&["X", "Y"], &[&[top[0], 0], &[0, top[1]]])?;
                ideals.push((name.to_string(), i, j));
            }
        }
        for t in 0..10 {
            let (i, j) = sample_primary(&mut rng)?;
            ideals.push((format!("sample {t}"), i, j));
        }
        let mut compared = 0;
        for (name, i, j) in &ideals {
            if !is_reduction(i, j, cfg.n_max)?.verdict.holds() {
                continue;
            }
            for n in 1..=2 {
                let a = rr_power(i, n, &cfg)?;
                let b = rr_closure_via_reduction(i, j, n, &cfg)?;
                let settled = |s: &ClosureStatus| !s.is_bound_reached();
                if settled(&a.status) && settled(&b.status) {
                    compared += 1;
                    if a.value != b.value {
                        return Ok(Check::new(false).witness(format!("{name}, n = {n}")));
                    }
                }
            }
        }
        Ok(Check::new(compared > 0).detail(format!("{compared} closures compared")))
    });
}
