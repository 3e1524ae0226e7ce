use super::plan::{plan_places, EvaluationPlan, MAX_PLAN_N};
use super::residue::{ev_place, interpolate_unchecked, Residue, ResidueVector};
use crate::bilinear::{
    compose, host_algorithm, truncated2_over, BilinearAlgorithm, BilinearMap, Term, TowerAlgorithm,
};
use crate::error::{Error, Result};
use crate::gf2k::{BinaryPoly, FieldSpec, MAX_FIELD_DEGREE};

/// Rank-one terms for the unreduced product of two polynomials with `n`
/// coefficients, output as a polynomial of degree at most `2n - 2`.
fn product_terms(plan: &EvaluationPlan) -> Result<Vec<(u64, u64, BinaryPoly)>> {
    let n = plan.n();
    let inputs: Vec<BinaryPoly> = (0..n).map(BinaryPoly::monomial).collect();
    let zero = plan.evaluate(&BinaryPoly::zero())?;
    let mut out = Vec::with_capacity(plan.cost());
    for (i, asg) in plan.assignments().iter().enumerate() {
        let d = asg.place.degree();
        let host = host_algorithm(asg.place.residue_field())?;
        let local = if asg.u == 1 {
            host.as_map()
        } else {
            truncated2_over(&host)
        };
        let ev_cols = inputs
            .iter()
            .map(|f| Ok(ev_place(f, &asg.place, asg.u, n - 1)?.packed(d)))
            .collect::<Result<Vec<u64>>>()?;
        let out_cols = (0..d * asg.u)
            .map(|j| {
                let mut res: ResidueVector = zero.clone();
                res.0[i] = Residue::from_packed(1 << j, d, asg.u);
                interpolate_unchecked(plan, &res)
            })
            .collect::<Result<Vec<BinaryPoly>>>()?;
        for t in local.terms() {
            let c = out_cols
                .iter()
                .enumerate()
                .filter(|(j, _)| t.c >> j & 1 == 1)
                .fold(BinaryPoly::zero(), |acc, (_, col)| &acc + col);
            out.push((pull_back(&ev_cols, t.a), pull_back(&ev_cols, t.b), c));
        }
    }
    Ok(out)
}

/// The linear form `x -> <form, E x>` for `E` given by its columns.
fn pull_back(cols: &[u64], form: u64) -> u64 {
    cols.iter()
        .enumerate()
        .fold(0, |acc, (s, &col)| acc | (((col & form).count_ones() & 1) as u64) << s)
}

/// Bilinear algorithm for the canonical `GF(2^n)`, `1 <= n <= 17`, by
/// evaluation at the places of [`plan_places`] and interpolation.
///
/// The rank equals the plan cost.
pub fn synthesize(n: usize) -> Result<BilinearAlgorithm> {
    let plan = plan_places(n)?;
    let field = FieldSpec::canonical(n)?;
    let q = field.modulus();
    let mut a = Vec::with_capacity(plan.cost());
    let mut b = Vec::with_capacity(plan.cost());
    let mut c = Vec::with_capacity(plan.cost());
    for (ai, bi, ci) in product_terms(&plan)? {
        a.push(ai);
        b.push(bi);
        c.push(ci.rem(&q)?.to_u64().expect("reduced below degree n"));
    }
    BilinearAlgorithm::new(field, a, b, c)
}

/// Unreduced product of two polynomials with `n` coefficients, `1 <= n <= 17`.
pub fn polynomial_product(n: usize) -> Result<BilinearMap> {
    let plan = plan_places(n)?;
    let terms = product_terms(&plan)?
        .into_iter()
        .map(|(a, b, c)| Term {
            a,
            b,
            c: c.to_u128().expect("degree <= 32"),
        })
        .collect();
    BilinearMap::new(n, 2 * n - 1, terms)
}

/// Split `n = m * k` used for `n > 17`: smallest `m >= 2` with both factors at most 17.
pub fn composite_split(n: usize) -> Option<(usize, usize)> {
    (2..=MAX_PLAN_N)
        .filter(|m| n % m == 0)
        .map(|m| (m, n / m))
        .find(|&(_, k)| k <= MAX_PLAN_N)
}

/// [`synthesize`] for `n <= 17`; beyond that, the synthesized algorithm for
/// `GF(2^m)` composed with the lifted polynomial product in `k` coefficients.
pub fn synthesize_any(n: usize) -> Result<BilinearAlgorithm> {
    if n <= MAX_PLAN_N {
        return synthesize(n);
    }
    if n > MAX_FIELD_DEGREE {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as i64,
            min: 1,
            max: MAX_FIELD_DEGREE as i64,
        });
    }
    let (m, k) = composite_split(n).ok_or_else(|| {
        Error::Unsupported(format!("n = {n} has no factorization m*k with 2 <= m, k <= 17"))
    })?;
    let inner = synthesize(m)?;
    let outer = TowerAlgorithm::lift_polynomial_product(*inner.field(), &polynomial_product(k)?)?;
    compose(&outer, &inner)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bilinear::VerifyMode;
    use crate::gf2k::clmul64;

    #[test]
    fn small_cases_verify() {
        for (n, rank) in [(1, 1), (2, 3), (3, 6)] {
            let alg = synthesize(n).unwrap();
            assert_eq!(alg.rank(), rank);
            assert!(alg.field().is_canonical());
            assert!(alg.verify(VerifyMode::Exhaustive).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn n8_matches_plan_cost() {
        let alg = synthesize(8).unwrap();
        assert_eq!(alg.rank(), plan_places(8).unwrap().cost());
        assert!(alg.verify(VerifyMode::Exhaustive).unwrap());
    }

    #[test]
    fn polynomial_products_match_clmul() {
        for n in [1, 2, 5, 9] {
            let map = polynomial_product(n).unwrap();
            let mask = (1u64 << n) - 1;
            for x in (0..1u64 << n).step_by(3) {
                let y = x.wrapping_mul(0x9e37_79b9) & mask;
                assert_eq!(map.apply(x, y), clmul64(x, y), "n = {n}");
            }
        }
    }

    #[test]
    fn composite_route() {
        assert_eq!(composite_split(18), Some((2, 9)));
        assert_eq!(composite_split(34), Some((2, 17)));
        assert_eq!(composite_split(19), None);
        assert_eq!(composite_split(64), Some((4, 16)));
        let alg = synthesize_any(20).unwrap();
        assert!(alg.field().is_canonical());
        assert_eq!(alg.rank(), 3 * polynomial_product(10).unwrap().rank());
        assert!(alg.verify(VerifyMode::Random(2000)).unwrap());
        assert!(synthesize_any(19).is_err());
        assert!(synthesize_any(65).is_err());
    }
}
