use super::{gen_set, gens, holds, is_member, max_power, mono, not_member_up_to, status_kind, DEFAULT};
use crate::corpus::Kind::{Bounded, Exact};
use crate::corpus::{Case, CaseDef, Check};

pub(super) fn cases() -> Vec<CaseDef> {
    vec![
        CaseDef { id: "EX-INTRO-A", title: "closure is not monotone", config: DEFAULT, run: intro_a },
        CaseDef { id: "EX-INTRO-B", title: "integral element outside the closure", config: DEFAULT, run: intro_b },
        CaseDef { id: "EX-INTRO-C", title: "closure and powers of a four-generated ideal", config: DEFAULT, run: intro_c },
    ]
}

fn intro_a(c: &mut Case) {
    c.setup("ring R = QQ[X,Y];\nideal I = (X^3, Y^3);\nideal J = (X^4, X^3*Y, X*Y^3, Y^4);");
    let k = c.cfg().k_max;
    c.command(Exact, "J is contained in I", "smaller ideal", "assert_contains I, J", |o| Ok((o.passed == Some(true)).into()));
    c.command(Exact, "X^2*Y^2 lies in the closure of J", "closure of the smaller ideal", "rr_probe X^2*Y^2, J", |o| {
        Ok(is_member(o).into())
    });
    c.command(
        Bounded,
        format!("X^2*Y^2 is not in I^(k+1) : I^k for k <= {k}"),
        "closure of the larger ideal",
        "rr_probe X^2*Y^2, I",
        |o| Ok(not_member_up_to(o, k).into()),
    );
    c.command(Bounded, "I is closed through the chain bound", "larger ideal is closed", "is_rr_closed I", |o| {
        Ok(holds(o).into())
    });
}

fn intro_b(c: &mut Case) {
    c.setup("ring R = QQ[X,Y];\nideal I = (X^4, X^3*Y, X^2*Y^2, Y^4);");
    let k = c.cfg().k_max;
    c.command(Exact, "X*Y^3 is not in I", "element outside I", "assert_not_member X*Y^3, I", |o| Ok((o.passed == Some(true)).into()));
    c.command(Exact, "X*Y^3 is integral over I", "integral element", "is_integral X*Y^3, I", |o| Ok((o.result == true).into()));
    c.command(
        Bounded,
        format!("X*Y^3 is not in I^(k+1) : I^k for k <= {k}"),
        "integral element outside the closure",
        "rr_probe X*Y^3, I",
        |o| Ok(not_member_up_to(o, k).into()),
    );
    let i = mono(c, "I");
    c.command(
        Bounded,
        format!("the chain I^(k+1) : I^k stays at I through k = {k}"),
        "I is closed",
        &format!("rr_closure I [window={k}]"),
        move |o| Ok((gens(o) == gen_set(&i?) && status_kind(o) == "stabilized-window").into()),
    );
}

fn intro_c(c: &mut Case) {
    c.setup("ring R = QQ[X,Y];\nideal I = (X^4, X^3*Y, X*Y^3, Y^4);");
    let i = mono(c, "I");
    let target = i.clone().and_then(|i| max_power(&i, 4));
    let ic = i.clone().and_then(|i| i.integral_closure());
    c.command(
        Exact,
        "the closure of I is (X,Y)^4",
        "closure is the full power of the maximal ideal",
        "rr_closure I",
        move |o| {
            let t = target?;
            Ok(Check::new(gens(o) == gen_set(&t) && ic? == t).detail("lower bound equals the integral closure"))
        },
    );
    for n in [2u32, 3] {
        let i = i.clone();
        c.command(
            Exact,
            format!("I^{n} = (X,Y)^{} and its closure is itself", 4 * n),
            "higher powers are closed",
            &format!("rr_power I, {n}"),
            move |o| {
                let i = i?;
                let t = max_power(&i, 4 * n)?;
                Ok((i.power(n)? == t && gens(o) == gen_set(&t)).into())
            },
        );
    }
}
