use super::{cfg, entries, gen_set, gens, holds, ideal_decl, is_member, m, mono_text, not_member_up_to, ring_decl, set, DEFAULT};
use crate::corpus::Kind::{Bounded, Exact};
use crate::corpus::{Case, CaseDef, Check};
use crate::error::{AlgebraError, Result};
use crate::ideal::IdealRing;
use crate::lang::Session;
use crate::monomial_ideal::{BorelDirection, MonomialIdeal};
use crate::ratliff_rush::{rr_closure, verify_power_member, ClosureStatus};

pub(super) fn cases() -> Vec<CaseDef> {
    vec![
        CaseDef { id: "EX-3-BOREL", title: "Borel-fixed and lex-segment ideals", config: DEFAULT, run: ex_borel },
        CaseDef { id: "EX-3.1/3.2", title: "closure and leading term ideals", config: cfg(6, 3, 8), run: ex_3_1 },
        CaseDef { id: "EX-3.3-n2", title: "embedded component created by the closure, n = 2", config: DEFAULT, run: |c| ex_3_3(c, 2) },
        CaseDef { id: "EX-3.3-n3", title: "embedded component created by the closure, n = 3", config: DEFAULT, run: |c| ex_3_3(c, 3) },
        CaseDef { id: "EX-3.4", title: "embedded component removed by the closure", config: DEFAULT, run: ex_3_4 },
        CaseDef { id: "EX-3.5", title: "closed binomial ideal in three variables", config: cfg(6, 6, 8), run: ex_3_5 },
        CaseDef { id: "EX-3.6-n2", title: "closure with fewer generators, n = 2", config: DEFAULT, run: |c| ex_3_6(c, 2) },
        CaseDef { id: "EX-3.6-n3", title: "closure with fewer generators, n = 3", config: DEFAULT, run: |c| ex_3_6(c, 3) },
        CaseDef { id: "EX-3.7", title: "closure in four variables", config: cfg(8, 3, 8), run: ex_3_7 },
    ]
}

fn monomial(s: &Session, name: &str) -> Result<MonomialIdeal> {
    if let Some(i) = s.monomial(name) {
        return Ok(i.clone());
    }
    s.handle(name)?.as_monomial_ideal().ok_or_else(|| AlgebraError::Internal(format!("{name} is not monomial")))
}

fn ex_borel(c: &mut Case) {
    c.setup(
        "ring R = QQ[X,Y];\n\
         ideal I = (X^6, X^5*Y^4, X^4*Y^11, X^3*Y^13, X^2*Y^17, X*Y^23, Y^29);\n\
         ideal L = (X^4, X^3*Y, X^2*Y^4, X*Y^5, Y^7);\n\
         ideal B = (X^5, X^4*Y, X^3*Y^4, X^2*Y^5, X*Y^8, Y^9);",
    );
    c.command(Exact, "X^4*Y^9 is not in I", "element outside I", "assert_not_member X^4*Y^9, I", |o| Ok((o.passed == Some(true)).into()));
    c.session_check(Exact, "X^4*Y^9 * I is in I^2", "element of I^2 : I", |s| {
        Ok(verify_power_member(&m(&[4, 9]), &monomial(s, "I")?, 1, 1)?.into())
    });
    c.command(Exact, "the closedness probe of I fails", "Borel-fixed ideal that is not closed", "is_rr_closed I", |o| {
        Ok((o.result["verdict"] == "fails-at").into())
    });
    for name in ["I", "L", "B"] {
        c.session_check(Exact, format!("{name} is Borel-fixed with X preferred over Y"), "Borel-fixed", move |s| {
            Ok(monomial(s, name)?.is_borel_fixed(&[1, 0], BorelDirection::ToSmaller)?.into())
        });
    }
    c.command(Exact, "X^2*Y^3 is not in L", "lex segment is not integrally closed", "assert_not_member X^2*Y^3, L", |o| {
        Ok((o.passed == Some(true)).into())
    });
    c.command(Exact, "X^2*Y^3 is integral over L", "lex segment is not integrally closed", "is_integral X^2*Y^3, L", |o| {
        Ok((o.result == true).into())
    });
    c.session_check(Exact, "(X^2*Y^3)^2 = X^3*Y * X*Y^5", "integral equation", |_| {
        Ok((m(&[2, 3]).pow(2)? == m(&[3, 1]).mul(&m(&[1, 5]))?).into())
    });
    c.command(Bounded, "L is closed through the chain bound", "lex segment is closed", "is_rr_closed L", |o| Ok(holds(o).into()));
    c.session_check(Exact, "B differs from its integral closure", "Borel-fixed ideal that is not integrally closed", |s| {
        let b = monomial(s, "B")?;
        Ok((b.integral_closure()? != b).into())
    });
    c.command(Bounded, "B is closed through the chain bound", "Borel-fixed ideal that is closed", "is_rr_closed B", |o| {
        Ok(holds(o).into())
    });
}

const EX_3_1_LT: [&str; 4] = ["X*Y^5", "X^6", "X^4*Y^2", "Y^8"];
const EX_3_2_LT: [&str; 4] = ["X^7*Y", "X^5*Y^2", "X^2*Y^5", "Y^7"];

fn ex_3_1(c: &mut Case) {
    c.setup(
        "ring R = QQ[X,Y];\n\
         ideal I = (X*Y^5, X^6 - Y^6, X^4*Y^2 - X^2*Y^4);\n\
         ideal K = (X^7*Y - X^2*Y^5, X^5*Y^2, X^2*Y^5 - X*Y^6, Y^7);",
    );
    let k = c.cfg().k_max;
    c.command(Exact, "the leading term ideal of I is (X*Y^5, X^6, X^4*Y^2, Y^8)", "leading terms of I", "lt I", |o| {
        Ok((gens(o) == set(&EX_3_1_LT)).into())
    });
    c.command(Exact, "the leading term ideal of K is (X^7*Y, X^5*Y^2, X^2*Y^5, Y^7)", "leading terms of K", "lt K", |o| {
        Ok((gens(o) == set(&EX_3_2_LT)).into())
    });
    c.session_check(Exact, "X^3*Y^4 is a leading term of I^3 : I^2", "leading terms of the closure grow", |s| {
        let i = s.handle("I")?;
        let col = i.power(3)?.colon(&i.power(2)?)?;
        let ring = s.ring().ok_or_else(|| AlgebraError::Internal("no ring".into()))?;
        Ok(col.leading_term_ideal(ring.order())?.contains_monomial(&m(&[3, 4])).into())
    });
    let ccfg = c.cfg();
    c.replay_check(Exact, "X^3*Y^4 is a leading term of the computed closure of I", "leading terms of the closure grow", "rr_closure I", move |s| {
        let i = s.handle("I")?;
        let ring = s.ring().ok_or_else(|| AlgebraError::Internal("no ring".into()))?.clone();
        let r = rr_closure(&i, &ccfg)?;
        Ok(Check::new(r.value.leading_term_ideal(ring.order())?.contains_monomial(&m(&[3, 4]))).detail(r.value.format()))
    });
    let lt_i = format!("ideal LI = ({});\nideal LK = ({});", EX_3_1_LT.join(", "), EX_3_2_LT.join(", "));
    c.setup(format!("ring R = QQ[X,Y];\n{lt_i}"));
    c.session_check(Exact, "neither leading term ideal is Borel-fixed", "leading terms are not Borel-fixed", |s| {
        let li = monomial(s, "LI")?;
        let mut ok = true;
        for p in [[0usize, 1], [1, 0]] {
            for d in [BorelDirection::ToLarger, BorelDirection::ToSmaller] {
                ok &= !li.is_borel_fixed(&p, d)?;
            }
        }
        Ok(ok.into())
    });
    c.command(Exact, "X^3*Y^4 is not in the leading term ideal of I", "element outside lt I", "assert_not_member X^3*Y^4, LI", |o| {
        Ok((o.passed == Some(true)).into())
    });
    c.command(
        Bounded,
        format!("X^3*Y^4 is not in the closure of lt I up to k = {k}"),
        "closure of lt I is smaller",
        "rr_probe X^3*Y^4, LI",
        move |o| Ok(not_member_up_to(o, k).into()),
    );
    c.command(Bounded, "lt I is closed through the chain bound", "closure of lt I", "is_rr_closed LI", |o| Ok(holds(o).into()));
    c.session_check(Exact, "X^4*Y^4 is in (lt K)^2 : lt K but not in lt K", "lt K is not closed", |s| {
        let lk = monomial(s, "LK")?;
        let w = m(&[4, 4]);
        Ok((!lk.contains_monomial(&w) && lk.power(2)?.colon(&lk)?.contains_monomial(&w)).into())
    });
    c.command(Exact, "the closedness probe of lt K fails", "lt K is not closed", "is_rr_closed LK", |o| {
        Ok((o.result["verdict"] == "fails-at").into())
    });
}

fn ex_3_3(c: &mut Case, n: u32) {
    let names = ["X", "Y", "Z"];
    let j: Vec<Vec<u32>> = (0..=2 * n).filter(|&i| i != n).map(|i| vec![i, 2 * n - i, 0]).collect();
    let mut g: Vec<Vec<u32>> = j.iter().map(|e| vec![e[0], e[1], 1]).collect();
    g.push(vec![n, n + 1, 0]);
    g.push(vec![n + 1, n, 0]);
    c.setup(format!(
        "{}\n{}\n{}\n{}\n{}",
        ring_decl(&names),
        ideal_decl("J", &names, &j),
        ideal_decl("A", &names, &[vec![n, 0, 0], vec![0, 0, 1]]),
        ideal_decl("B", &names, &[vec![0, n, 0], vec![0, 0, 1]]),
        ideal_decl("I", &names, &g),
    ));
    c.session_check(Exact, "J, (X^n, Z) and (Y^n, Z) intersect to the listed generators", "generators of I", |s| {
        let x = monomial(s, "J")?.intersect(&monomial(s, "A")?)?.intersect(&monomial(s, "B")?)?;
        Ok(Check::new(x == monomial(s, "I")?).detail(x.format()))
    });
    c.command(Exact, "Ass(R/I) = {(X,Y), (X,Z), (Y,Z)}", "associated primes of I", "ass_primes I", |o| {
        Ok((entries(o) == set(&["(X,Y)", "(X,Z)", "(Y,Z)"])).into())
    });
    let w = mono_text(&names, &[n, n, 0]);
    let k = c.cfg().k_max;
    c.command(
        Bounded,
        format!("{w} is not in the closure of I up to k = {k}"),
        "closure does not reach the monomial",
        &format!("rr_probe {w}, I"),
        move |o| Ok(not_member_up_to(o, k).into()),
    );
    let ccfg = c.cfg();
    c.replay_check(Bounded, format!("the computed closure of I colon {w} is (X,Y,Z)"), "new embedded prime", "rr_closure I", move |s| {
        let i = monomial(s, "I")?;
        let r = rr_closure(&i, &ccfg)?;
        let col = r.value.colon_by_monomial(&m(&[n, n, 0]))?;
        Ok(Check::new(col == MonomialIdeal::maximal_ideal(i.names().clone())).detail(col.format()))
    });
    c.session_check(Exact, format!("{w}*Z is in I^2 : I"), "closure gains a component", move |s| {
        Ok(verify_power_member(&m(&[n, n, 1]), &monomial(s, "I")?, 1, 1)?.into())
    });
}

fn ex_3_4(c: &mut Case) {
    c.setup("ring R = QQ[X,Y,Z];\nideal I = (X^4, X^3*Y, X*Y^3, Y^4, X^2*Y^2*Z);");
    c.command(Exact, "Ass(R/I) = {(X,Y), (X,Y,Z)}", "associated primes of I", "ass_primes I", |o| {
        Ok((entries(o) == set(&["(X,Y)", "(X,Y,Z)"])).into())
    });
    c.session_check(Exact, "X^2*Y^2 is in I^2 : I", "closure element", |s| {
        Ok(verify_power_member(&m(&[2, 2, 0]), &monomial(s, "I")?, 1, 1)?.into())
    });
    let ccfg = c.cfg();
    c.replay_check(Exact, "the closure of I is (X,Y)^4", "closure removes the embedded prime", "rr_closure I", move |s| {
        let i = monomial(s, "I")?;
        let target = MonomialIdeal::from_exponents(&["X", "Y", "Z"], &[&[1, 0, 0], &[0, 1, 0]])?.power(4)?;
        let r = rr_closure(&i, &ccfg)?;
        Ok(Check::new(r.value == target && i.integral_closure()? == target).detail("lower bound equals the integral closure"))
    });
    c.replay_check(Exact, "Ass of the closure is {(X,Y)}", "closure removes the embedded prime", "rr_closure I", move |s| {
        let i = monomial(s, "I")?;
        let r = rr_closure(&i, &ccfg)?;
        let ps: Vec<String> = r.value.associated_primes()?.iter().map(|p| r.value.format_prime(p)).collect();
        Ok(Check::new(ps == ["(X,Y)"]).detail(ps.join(", ")))
    });
    c.session_check(Exact, "(X,Y,Z) is not associated to I^2", "embedded prime of I only", |s| {
        let i = monomial(s, "I")?.power(2)?;
        let ps: Vec<String> = i.associated_primes()?.iter().map(|p| i.format_prime(p)).collect();
        Ok(Check::new(!ps.iter().any(|p| p == "(X,Y,Z)")).detail(ps.join(", ")))
    });
}

fn ex_3_5(c: &mut Case) {
    c.setup("ring R = QQ[X,Y,Z];\nideal I = (X^3 - Y*Z, Y^2 - X*Z, Z^2 - X^2*Y);");
    let ccfg = c.cfg();
    c.replay_check(
        Bounded,
        format!("the chain I^(k+1) : I^k stays at I through k = {}", ccfg.k_max),
        "I is closed",
        "rr_closure I",
        move |s| {
            let i = s.handle("I")?;
            let r = rr_closure(&i, &ccfg)?;
            let stable = matches!(r.status, ClosureStatus::StabilizedWindow { .. }) && r.growth.is_empty();
            Ok(Check::new(stable && r.value.equals(&i)?).detail(format!("checked through k = {}", r.checked_through)))
        },
    );
}

fn ex_3_6(c: &mut Case, n: usize) {
    let zs: Vec<String> = (1..=n).map(|i| format!("Z{i}")).collect();
    let mut owned = vec!["X".to_string(), "Y".to_string()];
    owned.extend(zs);
    let names: Vec<&str> = owned.iter().map(String::as_str).collect();
    let d = names.len();
    let mut g: Vec<Vec<u32>> = [[4, 0], [3, 1], [1, 3], [0, 4]]
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
        g.push(v);
    }
    c.setup(format!("{}\n{}", ring_decl(&names), ideal_decl("I", &names, &g)));
    c.command(Exact, format!("I has {} minimal generators", 4 + n), "generator count of I", "mingens I", move |o| {
        Ok((o.result.as_array().map(Vec::len) == Some(4 + n)).into())
    });
    let ccfg = c.cfg();
    c.replay_check(Exact, "the closure of I has 5 minimal generators", "closure needs fewer generators", "rr_closure I", move |s| {
        let i = monomial(s, "I")?;
        let r = rr_closure(&i, &ccfg)?;
        let ic = i.integral_closure()?;
        Ok(Check::new(r.value.num_min_gens() == 5 && r.value == ic).detail(r.value.format()))
    });
}

const EX_3_7_SOCLE: [[u32; 4]; 4] = [[1, 2, 1, 1], [2, 1, 1, 1], [3, 0, 3, 3], [0, 3, 3, 3]];

fn ex_3_7(c: &mut Case) {
    c.setup(
        "ring R = QQ[X,Y,U,V];\n\
         ideal I = (X^4, X^3*Y, X*Y^3, Y^4, X^2*Y^2*U, X^2*Y^2*V, U^4, V^4, X*Y*U^2, X*Y*V^2);\n\
         ideal J = (X^4, X^3*Y, X^2*Y^2, X*Y^3, Y^4, U^4, V^4, X*Y*U^2, X*Y*V^2);",
    );
    let names = ["X", "Y", "U", "V"];
    let k = c.cfg().k_max;
    c.command(Exact, "J has 9 minimal generators", "generator count of J", "mingens J", |o| {
        Ok((o.result.as_array().map(Vec::len) == Some(9)).into())
    });
    c.session_check(Exact, "X^2*Y^2 * I^3 is in I^4", "J lies in the closure", |s| {
        Ok(verify_power_member(&m(&[2, 2, 0, 0]), &monomial(s, "I")?, 1, 3)?.into())
    });
    c.command(Exact, "J is contained in the closure of I", "J lies in the closure", "rr_probe X^2*Y^2, I", |o| Ok(is_member(o).into()));
    let j = monomial_of(c, "J");
    c.command(Bounded, "the computed closure of I equals J", "closure of I", "rr_closure I", move |o| Ok((gens(o) == gen_set(&j?)).into()));
    let socle: Vec<String> = EX_3_7_SOCLE.iter().map(|e| mono_text(&names, e)).collect();
    let expected = set(&socle.iter().map(String::as_str).collect::<Vec<_>>());
    c.command(Exact, "the socle candidates of J are the four listed monomials", "socle of J", "socle J", move |o| {
        Ok((entries(o) == expected).into())
    });
    for s in &socle {
        c.command(
            Bounded,
            format!("{s} is not in I^(k+1) : I^k for k <= {k}"),
            "socle candidate outside the closure",
            &format!("rr_probe {s}, I"),
            move |o| Ok(not_member_up_to(o, k).into()),
        );
    }
}

fn monomial_of(c: &Case, name: &str) -> Result<MonomialIdeal> {
    monomial(&c.session()?, name)
}
