use super::{fails_with, gens, set, status_kind, DEFAULT};
use crate::corpus::Kind::Exact;
use crate::corpus::{Case, CaseDef, Check};
use crate::error::{AlgebraError, Result};
use crate::ideal::IdealRing;
use crate::lang::{CommandOutput, Session};
use crate::semigroup_rings::{AffineIdeal, SemigroupIdeal};

pub(super) fn cases() -> Vec<CaseDef> {
    vec![
        CaseDef { id: "EX-1.7/4.4", title: "affine semigroup ring with a non-closed reduction", config: DEFAULT, run: ex_1_7 },
        CaseDef { id: "EX-4.3", title: "numerical semigroup ring generated in degrees 4, 5, 11", config: DEFAULT, run: ex_4_3 },
    ]
}

fn affine(s: &Session, name: &str) -> Result<AffineIdeal> {
    s.affine(name).cloned().ok_or_else(|| AlgebraError::Internal(format!("{name} is not an affine ideal")))
}

fn numerical(s: &Session, name: &str) -> Result<SemigroupIdeal> {
    s.numerical(name).cloned().ok_or_else(|| AlgebraError::Internal(format!("{name} is not a semigroup ideal")))
}

fn bounded_value(o: &CommandOutput) -> (Option<&str>, Option<u64>) {
    (o.result["status"].as_str(), o.result["value"].as_u64())
}

fn ex_1_7(c: &mut Case) {
    c.setup("affine A = <(1,0),(0,2),(0,7),(2,5),(3,1)>;\nideal I = ((1,0), (0,2));");
    c.session_check(Exact, "(1,5) and (2,3) are not in the semigroup", "the semigroup has holes", |s| {
        let i = affine(s, "I")?;
        let sg = i.semigroup();
        Ok((!sg.contains((1, 5)) && !sg.contains((2, 3)) && sg.contains((2, 5))).into())
    });
    c.command(Exact, "X^2*Y^5 is not in I", "element outside I", "assert_not_member (2,5), I", |o| Ok((o.passed == Some(true)).into()));
    c.session_check(Exact, "X^2*Y^5 * I is in I^2", "element of I^2 : I", |s| {
        let i = affine(s, "I")?;
        Ok(i.power(2)?.contains(&i.mul_elem(&(2, 5))?)?.into())
    });
    c.command(Exact, "the closedness probe of I fails with witness (2,5)", "I is not closed", "is_rr_closed I", |o| {
        Ok(fails_with(o, "(2,5)").into())
    });
    c.command(Exact, "I is its own reduction with reduction number 0", "reduction number of I", "reduction_number I, I", |o| {
        Ok((o.result == 0).into())
    });
    c.command(Exact, "the closure reduction number of I with respect to I is at least 1", "closure reduction number", "rr_reduction_number I, I", |o| {
        let (status, value) = bounded_value(o);
        Ok(Check::new(status.is_some() && value.is_some_and(|v| v >= 1)))
    });
}

fn ex_4_3(c: &mut Case) {
    c.setup("semiring S = <4,5,11>;\nideal I = (t^4, t^5, t^11);\nideal P = (t^4);");
    c.session_check(Exact, "the gaps of the semigroup are 1, 2, 3, 6, 7", "semigroup structure", |s| {
        let i = numerical(s, "I")?;
        Ok(Check::new(i.semigroup().gaps() == [1, 2, 3, 6, 7] && i.semigroup().conductor() == 8))
    });
    c.command(Exact, "the reduction number of I with respect to (t^4) is 3", "reduction number", "reduction_number I, P", |o| {
        Ok((o.result == 3).into())
    });
    c.command(Exact, "the closure of I is I", "I is closed", "rr_closure I", |o| {
        Ok((gens(o) == set(&["t^4", "t^5", "t^11"]) && status_kind(o) == "exact").into())
    });
    c.command(Exact, "the closure of I^2 is (t^8, t^9, t^10, t^11)", "closure of the square", "rr_power I, 2", |o| {
        Ok((gens(o) == set(&["t^8", "t^9", "t^10", "t^11"]) && status_kind(o) == "exact").into())
    });
    c.session_check(Exact, "t^11 is not in I^2", "square is not closed", |s| Ok((!numerical(s, "I")?.power(2)?.contains_elem(&11)?).into()));
    c.command(Exact, "s(I) = 3", "invariant s", "s_invariant I", |o| Ok((bounded_value(o) == (Some("exact"), Some(3))).into()));
    c.command(Exact, "the closure reduction number of I with respect to (t^4) is 2", "closure reduction number", "rr_reduction_number I, P", |o| {
        Ok((bounded_value(o) == (Some("exact"), Some(2))).into())
    });
    c.command(Exact, "the four principal-reduction conditions agree and hold at t = 2", "conditions at t = 2", "principal_conditions I, t^4, 2", |o| {
        let r = &o.result;
        Ok((r["b"] == true && r["d"] == true && r["e"] == true && r["cokernel_trivial"] == true && r["certified"] == true).into())
    });
    c.command(Exact, "the four principal-reduction conditions agree and fail at t = 1", "conditions at t = 1", "principal_conditions I, t^4, 1", |o| {
        let r = &o.result;
        Ok((r["b"] == false && r["d"] == false && r["e"] == false && r["cokernel_trivial"] == false && r["certified"] == true).into())
    });
    c.command(Exact, "s <= r, closure reduction number <= r, and I^3 lies in (t^4)", "comparison with the reduction number", "principal_comparison I, t^4", |o| {
        let r = &o.result;
        Ok((r["s_le_r"] == true && r["rr_r_le_r"] == true && r["equality_criterion"] == true && r["power_in_reduction"] == true).into())
    });
}
