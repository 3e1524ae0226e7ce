use gf2_tensor_rank::bilinear::{host_algorithm, truncated2_over};
use gf2_tensor_rank::cc_construct::{ev_place, plan_places, reconstruct, Assignment, EvaluationPlan, Place};
use gf2_tensor_rank::gf2k::{irreducibles_of_degree, BinaryPoly, FieldSpec};
use proptest::prelude::*;

fn config() -> ProptestConfig {
    ProptestConfig { cases: 1000, rng_algorithm: prop::test_runner::RngAlgorithm::ChaCha, ..ProptestConfig::default() }
}

fn finite_places() -> Vec<(Place, FieldSpec)> {
    [1, 2, 4]
        .into_iter()
        .flat_map(|d| irreducibles_of_degree(d).unwrap())
        .map(|p| (Place::finite(p.clone()).unwrap(), FieldSpec::with_modulus(&p).unwrap()))
        .collect()
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn ev_reconstruct_round_trip(n in 1usize..=17, bits in any::<u64>()) {
        let plan = plan_places(n).unwrap();
        let h = BinaryPoly::from_u64(bits).truncate(2 * n - 1);
        prop_assert_eq!(reconstruct(&plan, &plan.evaluate(&h).unwrap()).unwrap(), h);
    }

    #[test]
    fn derivative_product_rule(f in any::<u32>(), g in any::<u32>(), which in 0usize..6) {
        let (place, field) = finite_places().swap_remove(which);
        let d = field.degree();
        let (f, g) = (BinaryPoly::from_u64(f as u64), BinaryPoly::from_u64(g as u64));
        let fg = &f * &g;
        let ev = |h: &BinaryPoly| ev_place(h, &place, 2, 62).unwrap();
        let trunc = truncated2_over(&host_algorithm(field).unwrap());
        prop_assert_eq!(ev(&fg).packed(d) as u128, trunc.apply(ev(&f).packed(d), ev(&g).packed(d)));
    }

    #[test]
    fn evaluation_is_multiplicative(f in any::<u32>(), g in any::<u32>(), which in 0usize..6) {
        let (place, field) = finite_places().swap_remove(which);
        let (f, g) = (BinaryPoly::from_u64(f as u64), BinaryPoly::from_u64(g as u64));
        let ev = |h: &BinaryPoly| ev_place(h, &place, 1, 62).unwrap().value;
        prop_assert_eq!(ev(&(&f * &g)), field.mul(ev(&f), ev(&g)));
    }
}

#[test]
fn plans_are_minimal() {
    for n in 1..=6 {
        let plan = plan_places(n).unwrap();
        let need = plan.product_degree_bound() + 1;
        assert!(plan.capacity() >= need);
        let list = plan.assignments();
        for skip in 0..list.len() {
            let rest: Vec<Assignment> =
                list.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, a)| a.clone()).collect();
            let cap: usize = rest.iter().map(|a| a.capacity()).sum();
            assert!(cap < need, "n = {n}: dropping {skip} keeps capacity");
            assert!(EvaluationPlan::new(n, rest).is_err());
        }
    }
}
