//! The reproduction checklist run by `gf2tr report`.
//!
//! Wall-clock limits gate each row but timings are not printed.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bilinear::{
    compose, host_algorithm, karatsuba2, truncated2_over, TowerAlgorithm, VerifyMode, VERIFY_SEED,
};
use crate::cc_construct::{ev_place, plan_places, reconstruct, synthesize, Place, MAX_PLAN_N};
use crate::curve_count::{place_counts, CurveStep};
use crate::error::Result;
use crate::gf2k::{canonical_modulus, irreducibles_of_degree, necklace_count, BinaryPoly, FieldSpec};
use crate::tower_bounds::{
    bound_derivative, bound_simple, certified, delta_lower, genus_exact, genus_info, k_interval,
    legacy_bounds, m2_derivative, select_step, Rational, TowerStep,
};

/// Random pairs for sweep verification above the exhaustive limit.
pub const SWEEP_RANDOM_PAIRS: u64 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub detail: String,
    pub id: u32,
    pub name: String,
    pub passed: bool,
}

fn row(id: u32, name: &str, limit: Duration, check: impl FnOnce() -> Result<(bool, String)>) -> ReportRow {
    let start = Instant::now();
    let (passed, detail) = match check() {
        Ok(v) => v,
        Err(e) => (false, format!("error: {e}")),
    };
    let in_time = start.elapsed() < limit;
    ReportRow {
        detail: if in_time {
            detail
        } else {
            format!("{detail}; exceeded {}s", limit.as_secs())
        },
        id,
        name: name.into(),
        passed: passed && in_time,
    }
}

fn optimal_small_case() -> Result<(bool, String)> {
    let alg = synthesize(2)?;
    let ok = alg.rank() == 3 && alg.verify(VerifyMode::Exhaustive)?;
    Ok((ok, format!("rank {}, exhaustive over 16 pairs", alg.rank())))
}

fn construction_sweep() -> Result<(bool, String)> {
    let mut failures = Vec::new();
    for n in 1..=MAX_PLAN_N {
        let plan = plan_places(n)?;
        let alg = synthesize(n)?;
        let verified = alg.verify_default(SWEEP_RANDOM_PAIRS)?;
        if !verified || alg.rank() != plan.tally().rank_formula() {
            failures.push(n);
        }
    }
    Ok((
        failures.is_empty(),
        if failures.is_empty() {
            "n = 1..17 verified, ranks match N1+2l1+3N2+6l2+9(N4+2l4)".into()
        } else {
            format!("failing n: {failures:?}")
        },
    ))
}

fn composition() -> Result<(bool, String)> {
    let f4 = FieldSpec::canonical(2)?;
    let alg = compose(&TowerAlgorithm::karatsuba2(f4)?, &karatsuba2())?;
    let ok = alg.rank() == 9 && alg.field().degree() == 4 && alg.verify(VerifyMode::Exhaustive)?;
    Ok((ok, format!("rank {} over GF(16), exhaustive", alg.rank())))
}

fn table_reproduction() -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for step in CurveStep::ALL {
        let pc = place_counts(step)?;
        let got = (pc.genus, pc.n1, pc.n2, pc.n4);
        parts.push(format!("{step}={got:?}"));
        ok &= match step {
            CurveStep::H21 => pc.genus == 23 && pc.n1 == 4 && pc.n2 == 1,
            _ => pc.matches_published.all(),
        };
        if step == CurveStep::H21 {
            parts.push(format!(
                "H21 N4 recomputed {} vs published {} (sum {} vs {}, lower bound {})",
                pc.n4, pc.published.n4, pc.place_sum, pc.published.place_sum, pc.place_sum_lower
            ));
        }
    }
    Ok((ok, parts.join("; ")))
}

fn bound_formulas() -> Result<(bool, String)> {
    let legacy = legacy_bounds();
    let n = 1_000_000i128;
    let diff = bound_derivative(n) / Rational::from_integer(n) - m2_derivative();
    let gap = if diff < Rational::from_integer(0) { -diff } else { diff };
    let slope = bound_simple(3) - bound_simple(2);
    let ok = bound_derivative(26) == Rational::new(999, 2)
        && gap < Rational::new(3, 100_000)
        && slope == Rational::new(45, 2)
        && legacy.m2_composed == Rational::new(297, 13)
        && legacy.m2_remark == Rational::from_integer(38)
        && legacy.c2 == Rational::from_integer(54);
    Ok((
        ok,
        format!(
            "derivative(26) = {}, gap at 1e6 = {}, simple slope = {}, legacy = {} and {}, C_2 = {}",
            bound_derivative(26),
            gap,
            slope,
            legacy.m2_composed,
            legacy.m2_remark,
            legacy.c2
        ),
    ))
}

fn step_selection() -> Result<(bool, String)> {
    let table = [(2..=5, (1, 0)), (6..=11, (1, 1)), (12..=23, (2, 0)), (24..=27, (2, 1))];
    let mut bad = Vec::new();
    for (range, (k, s)) in table {
        for n in range {
            if select_step(n)? != TowerStep::new(k, s)? {
                bad.push(n);
            }
        }
    }
    for n in 28..=1000u64 {
        let st = select_step(n)?;
        let (lo, hi) = k_interval(n);
        if !certified(st, n as i128) || st.k < lo || st.k > hi {
            bad.push(n);
        }
    }
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            "table steps for n <= 27, certified in-interval steps for 28..=1000".into()
        } else {
            format!("failing n: {bad:?}")
        },
    ))
}

fn genus_spot_checks() -> Result<(bool, String)> {
    let exact = |k, s| -> Result<i128> {
        Ok(genus_info(TowerStep::new(k, s)?)?
            .exact
            .expect("tabulated"))
    };
    let dg10 = exact(1, 1)? - exact(1, 0)?;
    let dg20 = exact(2, 1)? - exact(2, 0)?;
    let d10 = delta_lower(TowerStep::new(1, 0)?)?;
    let d20 = delta_lower(TowerStep::new(2, 0)?)?;
    let mut ok = dg10 == 2 && d10 == 2 && dg20 == 17 && d20 == 8 && dg10 >= d10 && dg20 >= d20;
    for k in 4..=10 {
        ok &= genus_exact(k)? > 4i128.pow(k);
    }
    Ok((
        ok,
        format!("dg(1,0) = {dg10} >= {d10}, dg(2,0) = {dg20} >= {d20}, g_k > 4^k for k = 4..10"),
    ))
}

fn random_poly(rng: &mut ChaCha8Rng, max_degree: usize) -> BinaryPoly {
    let mut p = BinaryPoly::zero();
    for i in 0..=max_degree {
        p.set_coeff(i, rng.gen());
    }
    p
}

fn property_suites() -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(VERIFY_SEED);
    let mut ok = true;

    // ring axioms and division round trip
    for _ in 0..300 {
        let (a, b, c) = (random_poly(&mut rng, 70), random_poly(&mut rng, 70), random_poly(&mut rng, 40));
        ok &= &(&a * &b) * &c == &a * &(&b * &c);
        ok &= &a * &(&b + &c) == &(&a * &b) + &(&a * &c);
        ok &= &a * &b == &b * &a;
        if !c.is_zero() {
            let (q, r) = a.divmod(&c)?;
            ok &= &(&q * &c) + &r == a && r.degree() < c.degree();
        }
    }

    // evaluation / reconstruction round trip
    for n in 1..=MAX_PLAN_N {
        let plan = plan_places(n)?;
        for _ in 0..20 {
            let h = random_poly(&mut rng, 2 * n - 2);
            ok &= reconstruct(&plan, &plan.evaluate(&h)?)? == h;
        }
    }

    // bilinearity of synthesized algorithms
    for n in [5usize, 9, 13] {
        let alg = synthesize(n)?;
        let mask = alg.field().mask();
        for _ in 0..200 {
            let (x1, x2, y) = (rng.gen::<u64>() & mask, rng.gen::<u64>() & mask, rng.gen::<u64>() & mask);
            ok &= alg.evaluate_raw(x1 ^ x2, y) == alg.evaluate_raw(x1, y) ^ alg.evaluate_raw(x2, y);
            ok &= alg.evaluate_raw(y, x1 ^ x2) == alg.evaluate_raw(y, x1) ^ alg.evaluate_raw(y, x2);
        }
    }

    // derivative product rule at every finite place of the inventory
    for d in [1usize, 2, 4] {
        for p in irreducibles_of_degree(d)? {
            let place = Place::finite(p.clone())?;
            let host = host_algorithm(FieldSpec::with_modulus(&p)?)?;
            let trunc = truncated2_over(&host);
            for _ in 0..50 {
                let (f, g) = (random_poly(&mut rng, 15), random_poly(&mut rng, 15));
                let fg = &f * &g;
                let lhs = ev_place(&fg, &place, 2, 30)?.packed(d) as u128;
                let rhs = trunc.apply(
                    ev_place(&f, &place, 2, 30)?.packed(d),
                    ev_place(&g, &place, 2, 30)?.packed(d),
                );
                ok &= lhs == rhs;
            }
        }
    }

    // Moebius integrality: counts per degree and place-count inversion
    for d in 1..=8 {
        ok &= irreducibles_of_degree(d)?.len() as u64 == necklace_count(d);
    }
    for step in CurveStep::ALL {
        let pc = place_counts(step)?;
        ok &= pc.n2 >= 0 && pc.n4 >= 0;
    }
    ok &= canonical_modulus(64).is_ok();

    Ok((
        ok,
        "ring axioms, ev/reconstruct, bilinearity, product rule, Moebius integrality".into(),
    ))
}

/// Runs every check in order.
pub fn run_report() -> Vec<ReportRow> {
    let secs = Duration::from_secs;
    vec![
        row(1, "optimal small case", secs(1), optimal_small_case),
        row(2, "construction sweep", secs(120), construction_sweep),
        row(3, "composition", secs(1), composition),
        row(4, "place-count table", secs(10), table_reproduction),
        row(5, "bound formulas", secs(1), bound_formulas),
        row(6, "step selection", secs(5), step_selection),
        row(7, "genus spot checks", secs(1), genus_spot_checks),
        row(8, "property suites", secs(60), property_suites),
    ]
}

/// One line per row: `PASS 3 composition: rank 9 over GF(16), exhaustive`.
pub fn render_text(rows: &[ReportRow]) -> String {
    rows.iter()
        .map(|r| {
            format!(
                "{} {} {}: {}\n",
                if r.passed { "PASS" } else { "FAIL" },
                r.id,
                r.name,
                r.detail
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_rows_pass() {
        for (id, f) in [
            (1, optimal_small_case as fn() -> Result<(bool, String)>),
            (3, composition),
            (4, table_reproduction),
            (5, bound_formulas),
            (6, step_selection),
            (7, genus_spot_checks),
        ] {
            let (ok, detail) = f().unwrap();
            assert!(ok, "row {id}: {detail}");
        }
    }

    #[test]
    fn render_format() {
        let rows = vec![ReportRow {
            detail: "d".into(),
            id: 1,
            name: "x".into(),
            passed: false,
        }];
        assert_eq!(render_text(&rows), "FAIL 1 x: d\n");
    }
}
