//! Seeded randomized property cases.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::cases::cfg;
use super::Kind::{Bounded, Exact};
use super::{Case, CaseDef, Check};
use crate::algebra::Monomial;
use crate::error::Result;
use crate::monomial_ideal::MonomialIdeal;
use crate::ratliff_rush::{depth_zero_witness_search, rr_defect};
use crate::reductions::{is_reduction, reduction_number, rr_reduction_number};

pub const SAMPLE_SIZE: usize = 50;

pub(super) fn cases() -> Vec<CaseDef> {
    vec![
        CaseDef { id: "PROP-1.9", title: "depth and closure of (d+1)-generated zero-dimensional ideals", config: cfg(6, 3, 4), run: prop_1_9 },
        CaseDef { id: "PROP-4.5", title: "closure reduction number bounded by the reduction number", config: cfg(8, 3, 6), run: prop_4_5 },
    ]
}

fn names(d: usize) -> Vec<&'static str> {
    ["X", "Y", "Z"][..d].to_vec()
}

/// `(X_1^a_1, ..., X_d^a_d, X^v)` with `v_i < a_i` and at least two `v_i` positive.
pub fn sample_d_plus_one(rng: &mut ChaCha8Rng, d: usize) -> Result<MonomialIdeal> {
    let alpha: Vec<u32> = (0..d).map(|_| rng.gen_range(2..=5)).collect();
    let mut nu: Vec<u32> = alpha.iter().map(|&a| rng.gen_range(0..a)).collect();
    while nu.iter().filter(|&&v| v > 0).count() < 2 {
        let i = rng.gen_range(0..d);
        nu[i] = rng.gen_range(1..alpha[i]);
    }
    let mut gens: Vec<Vec<u32>> = (0..d)
        .map(|i| {
            let mut e = vec![0; d];
            e[i] = alpha[i];
            e
        })
        .collect();
    gens.push(nu);
    let g: Vec<&[u32]> = gens.iter().map(Vec::as_slice).collect();
    MonomialIdeal::from_exponents(&names(d), &g)
}

fn prop_1_9(c: &mut Case) {
    let cfg = c.cfg();
    for d in [2usize, 3] {
        let mut rng = c.rng(d as u64);
        let sample: Result<Vec<MonomialIdeal>> = (0..SAMPLE_SIZE).map(|_| sample_d_plus_one(&mut rng, d)).collect();
        let sample = match sample {
            Ok(s) => s,
            Err(e) => return c.check(Exact, format!("sampling in {d} variables"), "sampled ideals", || Err(e)),
        };
        let s1 = sample.clone();
        c.check(Exact, format!("{SAMPLE_SIZE} sampled ideals in {d} variables are zero-dimensional with {} generators", d + 1), "sampled ideals", move || {
            let bad = s1.iter().find(|i| !i.is_zero_dimensional() || i.num_min_gens() != d + 1);
            Ok(bad.map_or(Check::new(true), |i| Check::new(false).witness(i.format())))
        });
        let s2 = sample.clone();
        c.check(
            Bounded,
            format!("no depth-zero witness in the graded ring for n <= {} ({d} variables)", cfg.n_max),
            "graded ring has positive depth",
            move || {
                for i in &s2 {
                    if !depth_zero_witness_search(i, &cfg)?.verdict.holds() {
                        return Ok(Check::new(false).witness(i.format()));
                    }
                }
                Ok(true.into())
            },
        );
        c.check(Bounded, format!("every power I^n with n <= 3 is closed ({d} variables)"), "all powers are closed", move || {
            for i in &sample {
                for n in 0..=3 {
                    if !rr_defect(i, n, &cfg)?.is_empty() {
                        return Ok(Check::new(false).witness(i.format()).detail(format!("defect at n = {n}")));
                    }
                }
            }
            Ok(true.into())
        });
    }
}

/// An m-primary ideal `(X^a, Y^b, mixed...)` integral over `(X^a, Y^b)`.
pub fn sample_primary(rng: &mut ChaCha8Rng) -> Result<(MonomialIdeal, MonomialIdeal)> {
    let a = rng.gen_range(2..=7u32);
    let b = rng.gen_range(2..=7u32);
    let mut gens = vec![vec![a, 0], vec![0, b]];
    for _ in 0..rng.gen_range(1..=3) {
        let i = rng.gen_range(1..a);
        let lo = (a * b - i * b).div_ceil(a);
        if lo < b {
            gens.push(vec![i, rng.gen_range(lo..b)]);
        }
    }
    let g: Vec<&[u32]> = gens.iter().map(Vec::as_slice).collect();
    let i = MonomialIdeal::from_exponents(&["X", "Y"], &g)?;
    let j = MonomialIdeal::minimal_generators(i.names().clone(), vec![Monomial::new(vec![a, 0]), Monomial::new(vec![0, b])])?;
    Ok((i, j))
}

fn prop_4_5(c: &mut Case) {
    let cfg = c.cfg();
    let mut rng = c.rng(45);
    let mut sample = Vec::new();
    let mut drawn = 0;
    let found = (|| -> Result<()> {
        while sample.len() < SAMPLE_SIZE && drawn < 20 * SAMPLE_SIZE {
            drawn += 1;
            let (i, j) = sample_primary(&mut rng)?;
            if is_reduction(&i, &j, cfg.n_max)?.verdict.holds() {
                sample.push((i, j));
            }
        }
        Ok(())
    })();
    let n = sample.len();
    c.check(Exact, format!("{SAMPLE_SIZE} sampled m-primary ideals have verified reductions (X^a, Y^b)"), "sampled reductions", move || {
        found?;
        Ok(Check::new(n == SAMPLE_SIZE).detail(format!("{n} verified out of {drawn} drawn")))
    });
    c.check(Bounded, "closure reduction number <= reduction number whenever both are exact", "comparison of reduction numbers", move || {
        let mut compared = 0;
        for (i, j) in &sample {
            let r = reduction_number(i, j, cfg.n_max)?;
            if let Some(rr) = rr_reduction_number(i, j, &cfg)?.exact() {
                compared += 1;
                if rr > r {
                    return Ok(Check::new(false).witness(i.format()).detail(format!("r = {r}, closure r = {rr}")));
                }
            }
        }
        Ok(Check::new(true).detail(format!("{compared} of {} compared", sample.len())))
    });
}
