use super::{cfg, entries, fails_with, gen_set, gens, holds, ideal_decl, is_member, m, mono, mono_text, not_member_up_to, ring_decl, set, status_kind, string_set, DEFAULT};
use crate::corpus::Kind::{Bounded, Exact};
use crate::corpus::{Case, CaseDef, Check};
use crate::error::{AlgebraError, Result};
use crate::ideal::IdealRing;
use crate::lang::Session;
use crate::monomial_ideal::MonomialIdeal;
use crate::ratliff_rush::{superficial_probe, verify_power_member, verify_reduction_member};

pub(super) fn cases() -> Vec<CaseDef> {
    vec![
        CaseDef { id: "EX-1.3", title: "closure of a square in a quotient ring", config: cfg(3, 2, 2), run: ex_1_3 },
        CaseDef { id: "EX-1.4", title: "closed ideal whose square is not closed", config: cfg(6, 3, 8), run: ex_1_4 },
        CaseDef { id: "EX-1.5-n3", title: "non-closed power of a closed ideal, n = 3", config: DEFAULT, run: |c| ex_1_5(c, 3) },
        CaseDef { id: "EX-1.5-n5", title: "non-closed power of a closed ideal, n = 5", config: DEFAULT, run: |c| ex_1_5(c, 5) },
        CaseDef { id: "EX-1.8", title: "closure of a binomial ideal", config: DEFAULT, run: ex_1_8 },
        CaseDef { id: "EX-1.10", title: "non-closed monomial ideal", config: DEFAULT, run: ex_1_10 },
        CaseDef { id: "PROP-1.11", title: "depth one associated graded ring without superficial pure powers", config: DEFAULT, run: prop_1_11 },
        CaseDef { id: "PROP-1.12", title: "all monomials of degree l but one", config: DEFAULT, run: prop_1_12 },
        CaseDef { id: "PROP-2.3/2.4", title: "closure does not pass to quotients by a superficial element", config: DEFAULT, run: prop_2_3 },
        CaseDef { id: "EX-2.6", title: "multiple of a closed ideal", config: DEFAULT, run: ex_2_6 },
    ]
}

fn handle_and(s: &Session, name: &str, elem: &str) -> Result<(crate::groebner::IdealHandle, crate::algebra::Polynomial)> {
    Ok((s.handle(name)?, s.poly(elem)?))
}

fn monomial(s: &Session, name: &str) -> Result<MonomialIdeal> {
    s.monomial(name).cloned().ok_or_else(|| AlgebraError::Internal(format!("{name} is not monomial")))
}

fn ex_1_3(c: &mut Case) {
    c.setup("ring R = QQ[X,Z,U] / (Z^2, Z*U, X*Z - U^3);\nregular X;\nideal I = (X, Z, U);");
    c.session_check(Exact, "Z is not in I^2 + Q", "element outside the square", |s| {
        let (i, z) = handle_and(s, "I", "Z")?;
        Ok((!i.power(2)?.contains_elem(&z)?).into())
    });
    c.session_check(Exact, "Z*I is in I^3 + Q", "element of the colon", |s| {
        let (i, z) = handle_and(s, "I", "Z")?;
        Ok(verify_power_member(&z, &i, 2, 1)?.into())
    });
    c.command(Exact, "Z lies in the closure of I^2 with k = 1", "square is not closed", "rr_power_probe Z, I, 2", |o| {
        Ok((is_member(o) && o.result["k"] == 1).into())
    });
    c.command(Exact, "Z represents a nonzero class of the defect at n = 1", "defect is nonzero", "rr_defect I, 1", |o| {
        Ok((o.result["empty"] == false && string_set(&o.result["representatives"]).contains("Z")).into())
    });
}

const EX_1_4: [[u32; 2]; 9] = [[0, 22], [4, 18], [7, 15], [8, 14], [11, 11], [14, 8], [15, 7], [18, 4], [22, 0]];
const EX_1_4_SOCLE: [[u32; 2]; 8] = [[3, 21], [6, 17], [7, 14], [10, 13], [13, 10], [14, 7], [17, 6], [21, 3]];

fn ex_1_4(c: &mut Case) {
    let gens_: Vec<Vec<u32>> = EX_1_4.iter().map(|g| g.to_vec()).collect();
    c.setup(format!("{}\n{}", ring_decl(&["X", "Y"]), ideal_decl("I", &["X", "Y"], &gens_)));
    let k = c.cfg().k_max;
    let w = m(&[20, 24]);
    c.session_check(Exact, "X^20*Y^24 is not in I^2", "element outside the square", |s| {
        Ok((!monomial(s, "I")?.member_of_power(&w, 2)?).into())
    });
    let w = m(&[20, 24]);
    c.session_check(Exact, "X^20*Y^24 * I is in I^3", "element of the colon", |s| {
        let i = monomial(s, "I")?;
        Ok(i.power(3)?.contains_ideal(&i.mul_monomial(&w)?).into())
    });
    c.command(Exact, "X^20*Y^24 lies in the closure of I^2", "square is not closed", "rr_power_probe X^20*Y^24, I, 2", |o| {
        Ok(is_member(o).into())
    });
    let socle: Vec<String> = EX_1_4_SOCLE.iter().map(|e| mono_text(&["X", "Y"], e)).collect();
    let expected = set(&socle.iter().map(String::as_str).collect::<Vec<_>>());
    c.command(Exact, "the socle candidates of I are the eight listed monomials", "socle of I", "socle I", move |o| {
        Ok((entries(o) == expected).into())
    });
    for s in &socle {
        c.command(
            Bounded,
            format!("{s} is not in I^(k+1) : I^k for k <= {k}"),
            "socle candidate outside the closure",
            &format!("rr_probe {s}, I"),
            |o| Ok(not_member_up_to(o, k).into()),
        );
    }
    let i = mono(c, "I");
    c.command(
        Bounded,
        format!("the chain I^(k+1) : I^k stays at I through k = {k}"),
        "I is closed",
        &format!("rr_closure I [window={k}]"),
        move |o| Ok((gens(o) == gen_set(&i?) && status_kind(o) == "stabilized-window").into()),
    );
}

fn ex_1_5(c: &mut Case, n: u32) {
    let names = ["X", "Y"];
    let gens_ = vec![vec![3 * n - 1, 0], vec![3 * n - 4, 3], vec![3, 3 * n - 4], vec![0, 3 * n - 1]];
    let red = vec![vec![3 * n - 1, 0], vec![0, 3 * n - 1]];
    c.setup(format!("{}\n{}\n{}", ring_decl(&names), ideal_decl("I", &names, &gens_), ideal_decl("J", &names, &red)));
    let e = (3 * n - 1) * n / 2;
    let half = (n - 1) / 2;
    let k = 2 * half - 1;
    let w = m(&[e, e]);
    let wt = mono_text(&names, &[e, e]);
    let w1 = w.clone();
    c.session_check(Exact, format!("{wt} is not in I^{n}"), "element outside the power", move |s| {
        Ok((!monomial(s, "I")?.member_of_power(&w1, n)?).into())
    });
    let w2 = w.clone();
    c.session_check(
        Exact,
        format!("{wt} * (X^{0}^{k}, Y^{0}^{k}) is in I^{1}", 3 * n - 1, n + k),
        "witness exponent of the reduction chain",
        move |s| Ok(verify_reduction_member(&w2, &monomial(s, "I")?, &monomial(s, "J")?, n, k)?.into()),
    );
    c.session_check(
        Exact,
        format!("{wt} * X^{} = (X^{}*Y^3)^{} * (Y^{})^{}", (3 * n - 1) * k, 3 * n - 4, 3 * half + 1, 3 * n - 1, half - 1),
        "factorization behind the witness",
        move |_| {
            let lhs = w.mul(&m(&[(3 * n - 1) * k, 0]))?;
            let rhs = m(&[3 * n - 4, 3]).pow(3 * half + 1)?.mul(&m(&[0, 3 * n - 1]).pow(half - 1)?)?;
            Ok((lhs == rhs).into())
        },
    );
    c.command(
        Exact,
        format!("{wt} lies in the closure of I^{n} through the reduction (X^{0}, Y^{0}) with k <= {k}", 3 * n - 1),
        "power is not closed",
        &format!("rr_reduction_probe {wt}, I, J, {n}"),
        move |o| Ok((is_member(o) && o.result["k"].as_u64().is_some_and(|x| x <= k as u64)).into()),
    );
    c.command(Exact, format!("{wt} lies in the closure of I^{n} along the power chain"), "power is not closed", &format!("rr_power_probe {wt}, I, {n}"), |o| {
        Ok(is_member(o).into())
    });
    if n == 3 {
        c.command(Bounded, "I is closed through the chain bound", "the ideal itself is closed", "is_rr_closed I", |o| Ok(holds(o).into()));
    } else {
        c.command(
            Exact,
            format!("the closedness probe of I fails with witness X^{0}*Y^{0}", n + 3),
            "the ideal itself is not closed for this n",
            "is_rr_closed I",
            move |o| Ok(fails_with(o, &mono_text(&names, &[n + 3, n + 3])).into()),
        );
    }
}

fn ex_1_8(c: &mut Case) {
    c.setup("ring R = QQ[X,Y];\nideal I = (X*Y^5, X^6 - Y^6, X^4*Y^2 - X^2*Y^4);");
    c.command(Exact, "X^3*Y^4 is not in I", "element outside I", "assert_not_member X^3*Y^4, I", |o| Ok((o.passed == Some(true)).into()));
    c.session_check(Exact, "X^3*Y^4 * I^2 is in I^3", "element of I^3 : I^2", |s| {
        let (i, w) = handle_and(s, "I", "X^3*Y^4")?;
        Ok(verify_power_member(&w, &i, 1, 2)?.into())
    });
    c.command(Exact, "X^3*Y^4 lies in the closure of I with k <= 2", "I is not closed", "rr_probe X^3*Y^4, I", |o| {
        Ok((is_member(o) && o.result["k"].as_u64().is_some_and(|x| x <= 2)).into())
    });
}

fn ex_1_10(c: &mut Case) {
    c.setup("ring R = QQ[X,Y];\nideal I = (X^10, Y^5, X*Y^4, X^8*Y);");
    c.command(Exact, "the closedness probe fails with witness X^7*Y^3", "I is not closed", "is_rr_closed I", |o| {
        Ok(fails_with(o, "X^7*Y^3").into())
    });
    c.session_check(Exact, "X^7*Y^3 is in (I^2 : I) but not in I", "witness replay", |s| {
        let i = monomial(s, "I")?;
        let w = m(&[7, 3]);
        Ok((!i.contains_monomial(&w) && verify_power_member(&w, &i, 1, 1)?).into())
    });
}

fn ex_2_6(c: &mut Case) {
    c.setup("ring R = QQ[X,Y];\nideal I = (X^5, X^4*Y, X^2*Y^3, X*Y^4);\nideal J = (X^4, X^3*Y, X*Y^3, Y^4);");
    c.session_check(Exact, "I = X * J", "I is a multiple of J", |s| {
        Ok((monomial(s, "I")? == monomial(s, "J")?.mul_monomial(&m(&[1, 0]))?).into())
    });
    c.command(Exact, "the closedness probe fails with witness X^3*Y^2", "I is not closed", "is_rr_closed I", |o| {
        Ok(fails_with(o, "X^3*Y^2").into())
    });
    c.session_check(Exact, "X^3*Y^2 is in (I^2 : I) but not in I", "witness replay", |s| {
        let i = monomial(s, "I")?;
        let w = m(&[3, 2]);
        Ok((!i.contains_monomial(&w) && verify_power_member(&w, &i, 1, 1)?).into())
    });
}

/// `I^n + (a)` for monomial `I` and `a`.
fn power_plus(i: &MonomialIdeal, n: u32, a: &[u32]) -> Result<MonomialIdeal> {
    i.power(n)?.sum(&MonomialIdeal::minimal_generators(i.names().clone(), vec![m(a)])?)
}

fn prop_1_11(c: &mut Case) {
    for l in [3u32, 4] {
        let names = ["X", "Y"];
        c.setup(format!("{}\n{}", ring_decl(&names), ideal_decl("I", &names, &[vec![l, 0], vec![1, l - 1], vec![0, l]])));
        let n_max = c.cfg().n_max;
        c.command(
            Bounded,
            format!("X^{l} is a nonzerodivisor of weight 1 on the graded ring for n <= {n_max} (l = {l})"),
            "pure power is regular on the graded ring",
            &format!("gr_nzd X^{l}, I, 1"),
            |o| Ok(holds(o).into()),
        );
        let w = [l - 1, 1];
        let relations: Vec<(String, Vec<u32>, u32)> = vec![
            ("X".into(), vec![1, 0], 1),
            (mono_text(&names, &[0, l - 2]), vec![0, l - 2], 1),
            (format!("X^{l}"), vec![l, 0], 2),
            (mono_text(&names, &[1, l - 1]), vec![1, l - 1], 2),
            (mono_text(&names, &[0, l * (l - 2)]), vec![0, l * (l - 2)], l - 1),
        ];
        let wt = mono_text(&names, &w);
        c.session_check(Exact, format!("{wt} is not in I (l = {l})"), "nonzero class in degree zero", move |s| {
            Ok((!monomial(s, "I")?.contains_monomial(&m(&w))).into())
        });
        for (text, f, p) in relations {
            let target = if p == 1 { "I".to_string() } else { format!("I^{p} + (X^{l})") };
            c.session_check(Exact, format!("{text} * {wt} is in {target} (l = {l})"), "multiplication relation", move |s| {
                let i = monomial(s, "I")?;
                let ideal = if p == 1 { i } else { power_plus(&i, p, &[l, 0])? };
                Ok(ideal.contains_monomial(&m(&f).mul(&m(&w))?).into())
            });
        }
        c.session_check(
            Exact,
            format!("(Y^{l})^{} * {wt} = (X*Y^{})^{} (l = {l})", l - 2, l - 1, l - 1),
            "multiplication relation",
            move |_| Ok((m(&[0, l * (l - 2)]).mul(&m(&w))? == m(&[1, l - 1]).pow(l - 1)?).into()),
        );
        let families: [(String, [u32; 2], fn(u32, u32) -> [u32; 2]); 2] = [
            (format!("Y^{l}"), [0, l], |l, n| [2 + l * n - l, l - 2]),
            (mono_text(&names, &[1, l - 1]), [1, l - 1], |l, n| [l * n - 1, 1]),
        ];
        for (at, a, fam) in families {
            c.command(
                Exact,
                format!("the superficiality probe of {at} fails (l = {l})"),
                "pure power is not superficial",
                &format!("superficial {at}, I"),
                |o| Ok((o.result["verdict"] == "fails-at").into()),
            );
            c.session_check(
                Exact,
                format!("each family witness for {at} lies in I^(n-1) outside I^n and times {at} in I^(n+1), n <= 4 (l = {l})"),
                "witness family",
                move |s| {
                    let i = monomial(s, "I")?;
                    for n in 1..=4 {
                        let w = m(&fam(l, n));
                        if !i.power(n - 1)?.contains_monomial(&w) || i.power(n)?.contains_monomial(&w) {
                            return Ok(Check::new(false).witness(i.format_monomial(&w)));
                        }
                        if !i.power(n + 1)?.contains_monomial(&w.mul(&m(&a))?) {
                            return Ok(Check::new(false).witness(i.format_monomial(&w)));
                        }
                    }
                    Ok(true.into())
                },
            );
            let probe_cfg = c.cfg();
            c.session_check(Exact, format!("the probe witness for {at} replays (l = {l})"), "witness replay", move |s| {
                let i = monomial(s, "I")?;
                let out = superficial_probe(&m(&a), &i, &probe_cfg)?;
                Ok(match (out.verdict, out.witness) {
                    (crate::ratliff_rush::Verdict::FailsAt { n }, Some(w)) => Check::new(
                        i.contains_monomial(&w) && !i.power(n - 1)?.contains_monomial(&w) && i.power(n)?.contains_monomial(&w.mul(&m(&a))?),
                    )
                    .witness(i.format_monomial(&w)),
                    _ => Check::new(false),
                })
            });
        }
    }
}

/// All degree-`l` monomials in `d` variables except `X1^(l-1)*X2`.
pub(crate) fn almost_power(d: usize, l: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut e = vec![0u32; d];
    fn rec(i: usize, left: u32, e: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == e.len() {
            e[i] = left;
            out.push(e.clone());
            return;
        }
        for k in (0..=left).rev() {
            e[i] = k;
            rec(i + 1, left - k, e, out);
        }
    }
    rec(0, l, &mut e, &mut out);
    out.retain(|g| !(g[0] == l - 1 && g[1] == 1));
    out
}

fn var_names(d: usize) -> Vec<String> {
    (1..=d).map(|i| format!("X{i}")).collect()
}

fn prop_1_12(c: &mut Case) {
    let l = 3;
    for d in [2usize, 3] {
        let owned = var_names(d);
        let names: Vec<&str> = owned.iter().map(String::as_str).collect();
        c.setup(format!("{}\n{}", ring_decl(&names), ideal_decl("I", &names, &almost_power(d, l))));
        let mut w = vec![0u32; d];
        w[0] = l - 1;
        w[1] = 1;
        let wt = mono_text(&names, &w);
        c.command(
            Bounded,
            format!("X1^{l} is a nonzerodivisor of weight 1 on the graded ring (d = {d})"),
            "graded ring has positive depth",
            &format!("gr_nzd X1^{l}, I, 1"),
            |o| Ok(holds(o).into()),
        );
        let w1 = w.clone();
        c.session_check(Exact, format!("{wt} is not in I (d = {d})"), "nonzero class in degree zero", move |s| {
            Ok((!monomial(s, "I")?.contains_monomial(&m(&w1))).into())
        });
        let w2 = w.clone();
        c.session_check(Exact, format!("(X1, ..., X{d}) * {wt} is in I (d = {d})"), "socle element modulo I", move |s| {
            let i = monomial(s, "I")?;
            Ok(i.contains_ideal(&MonomialIdeal::maximal_ideal(i.names().clone()).mul_monomial(&m(&w2))?).into())
        });
        c.session_check(Exact, format!("I * {wt} is in I^2 + (X1^{l}) (d = {d})"), "graded class is killed by the pure power", move |s| {
            let i = monomial(s, "I")?;
            let mut a = vec![0u32; d];
            a[0] = l;
            Ok(power_plus(&i, 2, &a)?.contains_ideal(&i.mul_monomial(&m(&w))?).into())
        });
    }
}

fn prop_2_3(c: &mut Case) {
    let l = 3u32;
    for a in ["X^3", "X^3 + X*Y^2 + Y^3"] {
        c.setup(format!("ring R = QQ[X,Y] / ({a});\nideal I = (X^3, X*Y^2, Y^3);"));
        c.command(Exact, format!("X^2*Y is not in I + ({a})"), "class outside the image", "assert_not_member X^2*Y, I", |o| {
            Ok((o.passed == Some(true)).into())
        });
        c.session_check(
            Exact,
            format!("X^2*Y * I^{} is in ({a}) + I^{}", 2 * l - 3, 2 * l - 2),
            "class lies in the closure of the image",
            |s| {
                let (i, w) = handle_and(s, "I", "X^2*Y")?;
                Ok(verify_power_member(&w, &i, 1, 2 * l - 3)?.into())
            },
        );
    }
    for d in [2usize, 3] {
        let owned = var_names(d);
        let names: Vec<&str> = owned.iter().map(String::as_str).collect();
        let decl = ideal_decl("I", &names, &almost_power(d, l));
        c.setup(format!("ring R = QQ[{}] / (X1^{l});\n{decl}", names.join(",")));
        let wt = format!("X1^{}*X2", l - 1);
        c.command(Exact, format!("{wt} is not in I + (X1^{l}) (d = {d})"), "class outside the image", &format!("assert_not_member {wt}, I"), |o| {
            Ok((o.passed == Some(true)).into())
        });
        let wt2 = wt.clone();
        c.session_check(Exact, format!("{wt} * I is in I^2 + (X1^{l}) (d = {d})"), "class lies in the closure of the image", move |s| {
            let (i, w) = handle_and(s, "I", &wt2)?;
            Ok(verify_power_member(&w, &i, 1, 1)?.into())
        });
    }
}
