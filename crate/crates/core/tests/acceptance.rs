//! Acceptance criteria, one test per criterion, each printing a pass/fail line.

use std::collections::BTreeSet;
use std::error::Error;
use std::io::Write;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rrlab::algebra::{Monomial, Polynomial, Ring};
use rrlab::corpus::{monomial_corpus, sample_d_plus_one, sample_primary, SAMPLE_SIZE};
use rrlab::monomial_ideal::BorelDirection;
use rrlab::ratliff_rush::{
    depth_zero_witness_search, gr_nzd_probe, is_rr_closed, rr_closure, rr_closure_via_reduction, rr_defect,
    rr_membership_probe, rr_power, rr_power_membership_probe, rr_reduction_membership_probe, superficial_probe,
    verify_power_member, verify_reduction_member, ClosureConfig, ClosureStatus, Verdict,
};
use rrlab::reductions::{
    is_reduction, prop41_equivalence_check, prop42_check, reduction_number, rr_reduction_number, s_invariant, BoundedValue,
};
use rrlab::semigroup_rings::{AffineIdeal, AffineSemigroup2D, NumericalSemigroup, SemigroupIdeal};
use rrlab::{IdealHandle, IdealRing, MonomialIdeal};

type Res = Result<(), Box<dyn Error>>;

fn ensure(ok: bool, what: impl Into<String>) -> Res {
    if ok {
        Ok(())
    } else {
        Err(what.into().into())
    }
}

fn report(n: u32, name: &str, body: fn() -> Res) {
    let start = Instant::now();
    let res = body();
    let ms = start.elapsed().as_millis();
    let line = match &res {
        Ok(()) => format!("criterion {n:2} {name}: pass ({ms} ms)\n"),
        Err(e) => format!("criterion {n:2} {name}: FAIL: {e} ({ms} ms)\n"),
    };
    // Written to the raw handle so the line shows without --nocapture.
    let _ = std::io::stderr().write_all(line.as_bytes());
    if let Err(e) = res {
        panic!("criterion {n} {name} failed: {e}");
    }
}

fn cfg(k_max: u32, window: u32, n_max: u32) -> ClosureConfig {
    ClosureConfig::new(k_max, window, n_max).unwrap()
}

fn mo(e: &[u32]) -> Monomial {
    Monomial::new(e.to_vec())
}

fn mi(names: &[&str], gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_exponents(names, gens).unwrap()
}

fn xy(gens: &[&[u32]]) -> MonomialIdeal {
    mi(&["X", "Y"], gens)
}

fn max_power(i: &MonomialIdeal, vars: &[usize], e: u32) -> MonomialIdeal {
    MonomialIdeal::variables(i.names().clone(), vars).unwrap().power(e).unwrap()
}

fn monomial_set(i: &MonomialIdeal, ms: &[Monomial]) -> BTreeSet<String> {
    ms.iter().map(|m| i.format_monomial(m)).collect()
}

fn strings(xs: &[&str]) -> BTreeSet<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn primes(i: &MonomialIdeal) -> BTreeSet<String> {
    i.associated_primes().unwrap().iter().map(|p| i.format_prime(p)).collect()
}

fn within(limit: Duration, start: Instant, what: &str) -> Res {
    ensure(start.elapsed() < limit, format!("{what} took {:?}", start.elapsed()))
}

#[test]
fn criterion_01_intro_closure_not_monotone() {
    report(1, "EX-INTRO-A", || {
        let i = xy(&[&[3, 0], &[0, 3]]);
        let j = xy(&[&[4, 0], &[3, 1], &[1, 3], &[0, 4]]);
        let c = ClosureConfig::default();
        ensure(rr_membership_probe(&mo(&[2, 2]), &j, &c)?.verdict.is_member(), "X^2Y^2 not found in the closure of J")?;
        ensure(
            rr_membership_probe(&mo(&[2, 2]), &i, &c)?.verdict == Verdict::NotMemberUpTo { k_max: 12 },
            "probe against I is not NotMemberUpTo(12)",
        )
    });
}

#[test]
fn criterion_02_intro_closed_not_integrally_closed() {
    report(2, "EX-INTRO-B", || {
        let i = xy(&[&[4, 0], &[3, 1], &[2, 2], &[0, 4]]);
        let w = mo(&[1, 3]);
        ensure(i.is_integral_over(&w) && !i.contains_monomial(&w), "XY^3 is not integral outside I")?;
        ensure(
            rr_membership_probe(&w, &i, &ClosureConfig::default())?.verdict == Verdict::NotMemberUpTo { k_max: 12 },
            "probe is not NotMemberUpTo(12)",
        )?;
        let r = rr_closure(&i, &cfg(12, 12, 8))?;
        ensure(r.value == i && r.growth.is_empty() && r.checked_through == 12, "chain leaves I before k_max")
    });
}

#[test]
fn criterion_03_intro_closure_and_powers() {
    report(3, "EX-INTRO-C", || {
        let i = xy(&[&[4, 0], &[3, 1], &[1, 3], &[0, 4]]);
        let c = ClosureConfig::default();
        ensure(rr_closure(&i, &c)?.value == max_power(&i, &[0, 1], 4), "closure is not (X,Y)^4")?;
        for n in [2, 3] {
            ensure(rr_power(&i, n, &c)?.value == max_power(&i, &[0, 1], 4 * n), format!("closure of I^{n} is not (X,Y)^{}", 4 * n))?;
        }
        Ok(())
    });
}

fn quotient_ring() -> (Arc<Ring>, IdealHandle) {
    let base = Ring::rational(&["X", "Z", "U"]).unwrap();
    let q = vec![base.monomial_exps(&[0, 2, 0]), base.monomial_exps(&[0, 1, 1]), base.poly(&[(1, &[1, 1, 0]), (-1, &[0, 0, 3])])];
    let x = base.var(0);
    let r = Arc::new(base.with_quotient(q).unwrap().with_regular_element(x).unwrap());
    let i = IdealHandle::new(r.clone(), vec![r.var(0), r.var(1), r.var(2)]).unwrap();
    (r, i)
}

#[test]
fn criterion_04_quotient_ring_square() {
    report(4, "EX-1.3", || {
        let start = Instant::now();
        let (r, i) = quotient_ring();
        let z = r.var(1);
        ensure(verify_power_member(&z, &i, 2, 1)?, "Z*I is not in I^3 + Q")?;
        ensure(!i.power(2)?.contains_elem(&z)?, "Z lies in I^2 + Q")?;
        within(Duration::from_secs(5), start, "EX-1.3")
    });
}

#[test]
fn criterion_05_closed_ideal_with_non_closed_square() {
    report(5, "EX-1.4", || {
        let start = Instant::now();
        let i = xy(&[&[0, 22], &[4, 18], &[7, 15], &[8, 14], &[11, 11], &[14, 8], &[15, 7], &[18, 4], &[22, 0]]);
        let w = mo(&[20, 24]);
        ensure(!i.member_of_power(&w, 2)?, "X^20Y^24 lies in I^2")?;
        ensure(i.power(3)?.contains_ideal(&i.mul_monomial(&w)?), "X^20Y^24 * I is not in I^3")?;
        let socle = i.socle_candidates()?;
        let expected = strings(&["X^3*Y^21", "X^6*Y^17", "X^7*Y^14", "X^10*Y^13", "X^13*Y^10", "X^14*Y^7", "X^17*Y^6", "X^21*Y^3"]);
        ensure(monomial_set(&i, &socle) == expected, "socle candidates differ")?;
        let c = cfg(6, 3, 8);
        for s in &socle {
            ensure(rr_membership_probe(s, &i, &c)?.verdict == Verdict::NotMemberUpTo { k_max: 6 }, i.format_monomial(s))?;
        }
        let chain = rr_closure(&i, &cfg(6, 6, 8))?;
        ensure(chain.value == i && chain.growth.is_empty(), "chain leaves I")?;
        within(Duration::from_secs(30), start, "EX-1.4")
    });
}

#[test]
fn criterion_06_power_of_closed_ideal() {
    report(6, "EX-1.5 (n = 3, 5)", || {
        for n in [3u32, 5] {
            let i = xy(&[&[3 * n - 1, 0], &[3 * n - 4, 3], &[3, 3 * n - 4], &[0, 3 * n - 1]]);
            let j = xy(&[&[3 * n - 1, 0], &[0, 3 * n - 1]]);
            let e = (3 * n - 1) * n / 2;
            let w = mo(&[e, e]);
            let k = n - 2;
            ensure(!i.member_of_power(&w, n)?, format!("witness lies in I^{n}"))?;
            ensure(verify_reduction_member(&w, &i, &j, n, k)?, format!("k = {k} does not replay for n = {n}"))?;
            let c = ClosureConfig::default();
            match rr_reduction_membership_probe(&w, &i, &j, n, &c)?.verdict {
                Verdict::Member { k: found } if found <= k => {}
                v => return Err(format!("reduction probe for n = {n} gave {v:?}").into()),
            }
            ensure(rr_power_membership_probe(&w, &i, n, &c)?.verdict.is_member(), format!("power probe for n = {n}"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_07_affine_semigroup() {
    report(7, "EX-1.7/EX-4.4", || {
        let s = Arc::new(AffineSemigroup2D::new(&[(1, 0), (0, 2), (0, 7), (2, 5), (3, 1)])?);
        let i = AffineIdeal::new(s, &[(1, 0), (0, 2)])?;
        ensure(!i.contains_elem(&(2, 5))?, "X^2Y^5 lies in I")?;
        ensure(i.power(2)?.contains(&i.mul_elem(&(2, 5))?)?, "X^2Y^5 * I is not in I^2")?;
        ensure(reduction_number(&i, &i, 8)? == 0, "r_I(I) is not 0")?;
        let rr = rr_reduction_number(&i, &i, &ClosureConfig::default())?;
        let v = match rr {
            BoundedValue::Exact(v) | BoundedValue::BoundReached(v) => v,
        };
        ensure(v >= 1, format!("closure reduction number reported as {rr:?}"))
    });
}

#[test]
fn criterion_08_binomial_ideal() {
    report(8, "EX-1.8", || {
        let r = Arc::new(Ring::rational(&["X", "Y"])?);
        let gens = vec![
            r.monomial_exps(&[1, 5]),
            r.poly(&[(1, &[6, 0]), (-1, &[0, 6])]),
            r.poly(&[(1, &[4, 2]), (-1, &[2, 4])]),
        ];
        let i = IdealHandle::new(r.clone(), gens)?;
        let w = r.monomial_exps(&[3, 4]);
        ensure(verify_power_member(&w, &i, 1, 2)?, "X^3Y^4 * I^2 is not in I^3")?;
        ensure(!i.contains_elem(&w)?, "X^3Y^4 lies in I")
    });
}

#[test]
fn criterion_09_d_plus_one_generated_ideals() {
    report(9, "PROP-1.9", || {
        let c = cfg(6, 3, 4);
        for d in [2usize, 3] {
            let mut rng = ChaCha8Rng::seed_from_u64(19 + d as u64);
            for _ in 0..SAMPLE_SIZE {
                let i = sample_d_plus_one(&mut rng, d)?;
                ensure(i.is_zero_dimensional() && i.num_min_gens() == d + 1, i.format())?;
                ensure(depth_zero_witness_search(&i, &c)?.verdict.holds(), format!("depth-zero witness for {}", i.format()))?;
                for n in 0..=3 {
                    ensure(rr_defect(&i, n, &c)?.is_empty(), format!("defect of {} at n = {n}", i.format()))?;
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_10_non_closed_monomial_ideal() {
    report(10, "EX-1.10", || {
        let i = xy(&[&[10, 0], &[0, 5], &[1, 4], &[8, 1]]);
        let out = is_rr_closed(&i, &ClosureConfig::default())?;
        ensure(out.verdict.fails() && out.witness == Some(mo(&[7, 3])), format!("{:?}", out.verdict))
    });
}

#[test]
fn criterion_11_depth_one_without_superficial_pure_powers() {
    report(11, "PROP-1.11 (l = 3, 4)", || {
        for l in [3u32, 4] {
            let i = xy(&[&[l, 0], &[1, l - 1], &[0, l]]);
            let c = cfg(12, 3, 8);
            match gr_nzd_probe(&mo(&[l, 0]), &i, 1, &c)?.verdict {
                Verdict::Holds { to, .. } if to >= 8 => {}
                v => return Err(format!("X^{l} on the graded ring: {v:?}").into()),
            }
            let w = mo(&[l - 1, 1]);
            let xl = MonomialIdeal::minimal_generators(i.names().clone(), vec![mo(&[l, 0])])?;
            let plus = |p: u32| i.power(p).and_then(|q| q.sum(&xl));
            ensure(!i.contains_monomial(&w), "X^(l-1)Y lies in I")?;
            ensure(i.contains_monomial(&w.mul(&mo(&[1, 0]))?), "X * w")?;
            ensure(i.contains_monomial(&w.mul(&mo(&[0, l - 2]))?), "Y^(l-2) * w")?;
            ensure(plus(2)?.contains_monomial(&w.mul(&mo(&[l, 0]))?), "X^l * w")?;
            ensure(plus(2)?.contains_monomial(&w.mul(&mo(&[1, l - 1]))?), "XY^(l-1) * w")?;
            let big = w.mul(&mo(&[0, l * (l - 2)]))?;
            ensure(big == mo(&[1, l - 1]).pow(l - 1)? && plus(l - 1)?.contains_monomial(&big), "(Y^l)^(l-2) * w")?;
            let families: [([u32; 2], fn(u32, u32) -> [u32; 2]); 2] =
                [([0, l], |l, n| [2 + l * n - l, l - 2]), ([1, l - 1], |l, n| [l * n - 1, 1])];
            for (a, fam) in families {
                let a = mo(&a);
                ensure(superficial_probe(&a, &i, &c)?.verdict.fails(), format!("{} is superficial", i.format_monomial(&a)))?;
                for n in 1..=4 {
                    let f = mo(&fam(l, n));
                    ensure(
                        i.power(n - 1)?.contains_monomial(&f)
                            && !i.power(n)?.contains_monomial(&f)
                            && i.power(n + 1)?.contains_monomial(&f.mul(&a)?),
                        format!("family member {}", i.format_monomial(&f)),
                    )?;
                }
            }
        }
        Ok(())
    });
}

fn quotient(names: &[&str], a: impl Fn(&Ring) -> Polynomial) -> Arc<Ring> {
    let base = Ring::rational(names).unwrap();
    let q = a(&base);
    Arc::new(base.with_quotient(vec![q]).unwrap())
}

#[test]
fn criterion_12_quotient_by_superficial_element() {
    report(12, "PROP-2.3/2.4", || {
        let l = 3u32;
        let r = quotient(&["X", "Y"], |b| b.monomial_exps(&[l, 0]));
        let i = IdealHandle::new(r.clone(), vec![r.monomial_exps(&[l, 0]), r.monomial_exps(&[1, l - 1]), r.monomial_exps(&[0, l])])?;
        let w = r.monomial_exps(&[l - 1, 1]);
        ensure(!i.contains_elem(&w)?, "X^(l-1)Y lies in I + (a)")?;
        ensure(verify_power_member(&w, &i, 1, 2 * l - 3)?, "X^(l-1)Y * I^(2l-3) is not in (a) + I^(2l-2)")?;
        for d in [2usize, 3] {
            let names: Vec<String> = (1..=d).map(|i| format!("X{i}")).collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let mut a = vec![0; d];
            a[0] = l;
            let r = quotient(&refs, |b| b.monomial_exps(&a));
            let mut gens = Vec::new();
            let mut w = vec![0; d];
            w[0] = l - 1;
            w[1] = 1;
            for e in degree_monomials(d, l) {
                if e != w {
                    gens.push(r.monomial_exps(&e));
                }
            }
            let i = IdealHandle::new(r.clone(), gens)?;
            let w = r.monomial_exps(&w);
            ensure(verify_power_member(&w, &i, 1, 1)?, format!("X1^(l-1)X2 * I is not in I^2 + (a), d = {d}"))?;
            ensure(!i.contains_elem(&w)?, format!("X1^(l-1)X2 lies in I + (a), d = {d}"))?;
        }
        Ok(())
    });
}

fn degree_monomials(d: usize, l: u32) -> Vec<Vec<u32>> {
    if d == 1 {
        return vec![vec![l]];
    }
    let mut out = Vec::new();
    for k in 0..=l {
        for mut rest in degree_monomials(d - 1, l - k) {
            rest.insert(0, k);
            out.push(rest);
        }
    }
    out
}

#[test]
fn criterion_13_multiple_of_closed_ideal() {
    report(13, "EX-2.6", || {
        let j = xy(&[&[4, 0], &[3, 1], &[1, 3], &[0, 4]]);
        let i = j.mul_monomial(&mo(&[1, 0]))?;
        let w = mo(&[3, 2]);
        ensure(verify_power_member(&w, &i, 1, 1)? && !i.contains_monomial(&w), "X^3Y^2 is not in (I^2 : I) outside I")?;
        let out = is_rr_closed(&i, &ClosureConfig::default())?;
        ensure(out.witness == Some(w), format!("closedness witness {:?}", out.witness))
    });
}

#[test]
fn criterion_14_borel_fixed_ideals() {
    report(14, "EX-3-BOREL", || {
        let i = xy(&[&[6, 0], &[5, 4], &[4, 11], &[3, 13], &[2, 17], &[1, 23], &[0, 29]]);
        let w = mo(&[4, 9]);
        ensure(verify_power_member(&w, &i, 1, 1)? && !i.contains_monomial(&w), "X^4Y^9 is not in (I^2 : I) outside I")?;
        ensure(i.is_borel_fixed(&[1, 0], BorelDirection::ToSmaller)?, "I is not Borel-fixed")?;
        let lex = xy(&[&[4, 0], &[3, 1], &[2, 4], &[1, 5], &[0, 7]]);
        let v = mo(&[2, 3]);
        ensure(lex.is_integral_over(&v) && !lex.contains_monomial(&v), "X^2Y^3 is not integral outside the lex segment")
    });
}

#[test]
fn criterion_15_leading_term_ideals() {
    report(15, "EX-3.1/3.2", || {
        let r = Arc::new(Ring::rational(&["X", "Y"])?);
        let i = IdealHandle::new(
            r.clone(),
            vec![r.monomial_exps(&[1, 5]), r.poly(&[(1, &[6, 0]), (-1, &[0, 6])]), r.poly(&[(1, &[4, 2]), (-1, &[2, 4])])],
        )?;
        let k = IdealHandle::new(
            r.clone(),
            vec![
                r.poly(&[(1, &[7, 1]), (-1, &[2, 5])]),
                r.monomial_exps(&[5, 2]),
                r.poly(&[(1, &[2, 5]), (-1, &[1, 6])]),
                r.monomial_exps(&[0, 7]),
            ],
        )?;
        let lt_i = i.leading_term_ideal(r.order())?;
        let lt_k = k.leading_term_ideal(r.order())?;
        ensure(lt_i == xy(&[&[1, 5], &[6, 0], &[4, 2], &[0, 8]]), format!("lt I = {}", lt_i.format()))?;
        ensure(lt_k == xy(&[&[7, 1], &[5, 2], &[2, 5], &[0, 7]]), format!("lt K = {}", lt_k.format()))?;
        let c = cfg(6, 3, 8);
        let w = mo(&[3, 4]);
        ensure(rr_closure(&i, &c)?.value.leading_term_ideal(r.order())?.contains_monomial(&w), "X^3Y^4 is not a leading term of the closure")?;
        ensure(!rr_closure(&lt_i, &c)?.value.contains_monomial(&w), "X^3Y^4 lies in the closure of lt I")?;
        let v = mo(&[4, 4]);
        ensure(lt_k.power(2)?.colon(&lt_k)?.contains_monomial(&v) && !lt_k.contains_monomial(&v), "X^4Y^4 is not in ((lt K)^2 : lt K) outside lt K")
    });
}

#[test]
fn criterion_16_closure_creates_embedded_prime() {
    report(16, "EX-3.3 (n = 2, 3)", || {
        let names = ["X", "Y", "Z"];
        for n in [2u32, 3] {
            let jg: Vec<Vec<u32>> = (0..=2 * n).filter(|&i| i != n).map(|i| vec![i, 2 * n - i, 0]).collect();
            let mut fg: Vec<Vec<u32>> = jg.iter().map(|e| vec![e[0], e[1], 1]).collect();
            fg.push(vec![n, n + 1, 0]);
            fg.push(vec![n + 1, n, 0]);
            let refs = |v: &[Vec<u32>]| -> MonomialIdeal {
                let r: Vec<&[u32]> = v.iter().map(Vec::as_slice).collect();
                mi(&names, &r)
            };
            let j = refs(&jg);
            let a = mi(&names, &[&[n, 0, 0], &[0, 0, 1]]);
            let b = mi(&names, &[&[0, n, 0], &[0, 0, 1]]);
            let i = j.intersect(&a)?.intersect(&b)?;
            ensure(i == refs(&fg), format!("intersection {} differs from the formula", i.format()))?;
            ensure(primes(&i) == strings(&["(X,Y)", "(X,Z)", "(Y,Z)"]), "associated primes differ")?;
            let col = rr_closure(&i, &ClosureConfig::default())?.value.colon_by_monomial(&mo(&[n, n, 0]))?;
            ensure(col == max_power(&i, &[0, 1, 2], 1), format!("closure colon X^nY^n = {}", col.format()))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_17_closure_removes_embedded_prime() {
    report(17, "EX-3.4", || {
        let i = mi(&["X", "Y", "Z"], &[&[4, 0, 0], &[3, 1, 0], &[1, 3, 0], &[0, 4, 0], &[2, 2, 1]]);
        ensure(primes(&i) == strings(&["(X,Y)", "(X,Y,Z)"]), "associated primes of I differ")?;
        let v = rr_closure(&i, &ClosureConfig::default())?.value;
        ensure(v == max_power(&i, &[0, 1], 4), format!("closure {}", v.format()))?;
        ensure(primes(&v) == strings(&["(X,Y)"]), "associated primes of the closure differ")
    });
}

#[test]
fn criterion_18_closed_binomial_ideal() {
    report(18, "EX-3.5", || {
        let r = Arc::new(Ring::rational(&["X", "Y", "Z"])?);
        let i = IdealHandle::new(
            r.clone(),
            vec![
                r.poly(&[(1, &[3, 0, 0]), (-1, &[0, 1, 1])]),
                r.poly(&[(1, &[0, 2, 0]), (-1, &[1, 0, 1])]),
                r.poly(&[(1, &[0, 0, 2]), (-1, &[2, 1, 0])]),
            ],
        )?;
        let out = rr_closure(&i, &cfg(6, 6, 8))?;
        ensure(!out.status.is_bound_reached() && out.growth.is_empty(), format!("{:?}", out.status))?;
        ensure(out.value.equals(&i)?, "chain leaves I")
    });
}

#[test]
fn criterion_19_closure_with_fewer_generators() {
    report(19, "EX-3.6 (n = 2, 3)", || {
        for n in [2usize, 3] {
            let d = 2 + n;
            let mut names = vec!["X".to_string(), "Y".to_string()];
            names.extend((1..=n).map(|k| format!("Z{k}")));
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let mut gens: Vec<Vec<u32>> = [[4, 0], [3, 1], [1, 3], [0, 4]]
                .iter()
                .map(|e| {
                    let mut v = vec![0; d];
                    v[..2].copy_from_slice(e);
                    v
                })
                .collect();
            for z in 0..n {
                let mut v = vec![0; d];
                v[0] = 2;
                v[1] = 2;
                v[2 + z] = 1;
                gens.push(v);
            }
            let g: Vec<&[u32]> = gens.iter().map(Vec::as_slice).collect();
            let i = mi(&refs, &g);
            ensure(i.num_min_gens() == 4 + n, format!("mu(I) = {}", i.num_min_gens()))?;
            let v = rr_closure(&i, &ClosureConfig::default())?.value;
            ensure(v.num_min_gens() == 5, format!("mu(closure) = {}", v.num_min_gens()))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_20_four_variable_closure() {
    report(20, "EX-3.7", || {
        let names = ["X", "Y", "U", "V"];
        let i = mi(
            &names,
            &[
                &[4, 0, 0, 0],
                &[3, 1, 0, 0],
                &[1, 3, 0, 0],
                &[0, 4, 0, 0],
                &[2, 2, 1, 0],
                &[2, 2, 0, 1],
                &[0, 0, 4, 0],
                &[0, 0, 0, 4],
                &[1, 1, 2, 0],
                &[1, 1, 0, 2],
            ],
        );
        let j = mi(
            &names,
            &[&[4, 0, 0, 0], &[3, 1, 0, 0], &[2, 2, 0, 0], &[1, 3, 0, 0], &[0, 4, 0, 0], &[0, 0, 4, 0], &[0, 0, 0, 4], &[1, 1, 2, 0], &[1, 1, 0, 2]],
        );
        let c = cfg(8, 3, 8);
        let v = rr_closure(&i, &c)?.value;
        ensure(v == j && j.num_min_gens() == 9, format!("closure {}", v.format()))?;
        let socle = j.socle_candidates()?;
        ensure(monomial_set(&j, &socle) == strings(&["X*Y^2*U*V", "X^2*Y*U*V", "X^3*U^3*V^3", "Y^3*U^3*V^3"]), "socle of J differs")?;
        for s in &socle {
            ensure(rr_membership_probe(s, &i, &c)?.verdict == Verdict::NotMemberUpTo { k_max: 8 }, j.format_monomial(s))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_21_numerical_semigroup_ring() {
    report(21, "EX-4.3", || {
        let s = Arc::new(NumericalSemigroup::new(&[4, 5, 11])?);
        let i = SemigroupIdeal::new(s.clone(), &[4, 5, 11])?;
        let p = SemigroupIdeal::new(s.clone(), &[4])?;
        let c = ClosureConfig::default();
        ensure(reduction_number(&i, &p, 8)? == 3, "r is not 3")?;
        ensure(s_invariant(&i, &c)? == BoundedValue::Exact(3), "s is not 3")?;
        let r1 = rr_closure(&i, &c)?;
        ensure(r1.value == i && matches!(r1.status, ClosureStatus::Exact { .. }), "closure of I is not I")?;
        ensure(rr_power(&i, 2, &c)?.value == SemigroupIdeal::new(s.clone(), &[8, 9, 10, 11])?, "closure of I^2 differs")?;
        ensure(rr_reduction_number(&i, &p, &c)? == BoundedValue::Exact(2), "closure reduction number is not 2")?;
        let t2 = prop41_equivalence_check(&i, &4, 2, &c)?;
        ensure(t2.agree() && t2.b && t2.d && t2.e && t2.cokernel_trivial && t2.certified, format!("t = 2: {t2:?}"))?;
        let t1 = prop41_equivalence_check(&i, &4, 1, &c)?;
        ensure(t1.agree() && !t1.b && !t1.d && !t1.e && !t1.cokernel_trivial, format!("t = 1: {t1:?}"))?;
        let cmp = prop42_check(&i, &4, &c)?;
        ensure(
            cmp.s_le_r == Some(true) && cmp.rr_r_le_r == Some(true) && cmp.equality_criterion == Some(true) && cmp.power_in_reduction == Some(true),
            format!("{cmp:?}"),
        )
    });
}

#[test]
fn criterion_22_reduction_number_comparison() {
    report(22, "PROP-4.5", || {
        let c = cfg(8, 3, 6);
        let mut rng = ChaCha8Rng::seed_from_u64(45);
        let mut verified = 0;
        let mut drawn = 0;
        while verified < SAMPLE_SIZE {
            drawn += 1;
            ensure(drawn <= 20 * SAMPLE_SIZE, "too few sampled reductions")?;
            let (i, j) = sample_primary(&mut rng)?;
            if !is_reduction(&i, &j, c.n_max)?.verdict.holds() {
                continue;
            }
            verified += 1;
            let r = reduction_number(&i, &j, c.n_max)?;
            if let Some(rr) = rr_reduction_number(&i, &j, &c)?.exact() {
                ensure(rr <= r, format!("{}: closure r = {rr} > r = {r}", i.format()))?;
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_23_oracle_agreement() {
    report(23, "oracle suites", || {
        let c = cfg(8, 3, 6);
        for (name, i) in monomial_corpus()? {
            let ring = Arc::new(Ring::rational(&i.names().iter().map(String::as_str).collect::<Vec<_>>())?);
            let h = |m: &MonomialIdeal| IdealHandle::from_monomial_ideal(ring.clone(), m);
            let sq = i.power(2)?;
            let gb = h(&sq)?.colon(&h(&i)?)?;
            ensure(gb.equals(&h(&sq.colon(&i)?)?)?, format!("colon disagrees on {name}"))?;
            if i.nvars() == 2 && i.max_exponents().iter().all(|&e| e <= 10) {
                for n in 1..=4 {
                    let p = i.power(n)?;
                    let top = p.max_exponents();
                    for a in 0..=top[0] {
                        for b in 0..=top[1] {
                            let w = mo(&[a, b]);
                            ensure(i.member_of_power(&w, n)? == p.contains_monomial(&w), format!("power membership of {a},{b} in {name}^{n}"))?;
                        }
                    }
                }
            }
            if i.nvars() == 2 && i.is_zero_dimensional() {
                let top = i.max_exponents();
                let j = xy(&[&[top[0], 0], &[0, top[1]]]);
                if is_reduction(&i, &j, c.n_max)?.verdict.holds() {
                    for n in 1..=2 {
                        let a = rr_power(&i, n, &c)?;
                        let b = rr_closure_via_reduction(&i, &j, n, &c)?;
                        if !a.status.is_bound_reached() && !b.status.is_bound_reached() {
                            ensure(a.value == b.value, format!("closure routes disagree on {name}, n = {n}"))?;
                        }
                    }
                }
            }
        }
        Ok(())
    });
}
