use gf2_tensor_rank::bilinear::{codegen, interpret, BilinearAlgorithm, VerifyMode};
use gf2_tensor_rank::cc_construct::{polynomial_product, synthesize, synthesize_any};
use gf2_tensor_rank::gf2k::clmul64;
use proptest::prelude::*;

fn config() -> ProptestConfig {
    ProptestConfig { cases: 1000, rng_algorithm: prop::test_runner::RngAlgorithm::ChaCha, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn bilinear_in_each_argument(n in 1usize..=17, x1 in any::<u64>(), x2 in any::<u64>(), y in any::<u64>()) {
        let alg = synthesize(n).unwrap();
        let m = alg.field().mask();
        let (x1, x2, y) = (x1 & m, x2 & m, y & m);
        prop_assert_eq!(alg.evaluate_raw(x1 ^ x2, y), alg.evaluate_raw(x1, y) ^ alg.evaluate_raw(x2, y));
        prop_assert_eq!(alg.evaluate_raw(y, x1 ^ x2), alg.evaluate_raw(y, x1) ^ alg.evaluate_raw(y, x2));
        prop_assert_eq!(alg.evaluate_raw(x1, y), alg.field().mul(x1, y));
    }

    #[test]
    fn polynomial_product_is_clmul(n in 1usize..=17, x in any::<u64>(), y in any::<u64>()) {
        let pp = polynomial_product(n).unwrap();
        let m = (1u64 << n) - 1;
        prop_assert_eq!(pp.apply(x & m, y & m), clmul64(x & m, y & m));
    }
}

#[test]
fn codegen_interprets_to_field_product() {
    for n in 1..=8 {
        let alg = synthesize(n).unwrap();
        let program = codegen(&alg);
        for x in 0..1u64 << n {
            for y in 0..1u64 << n {
                assert_eq!(interpret(&program, n, x, y).unwrap(), alg.field().mul(x, y), "n = {n}");
            }
        }
    }
}

#[test]
fn json_round_trip() {
    for n in [1, 2, 5, 13, 24] {
        let alg = synthesize_any(n).unwrap();
        let back = BilinearAlgorithm::from_json_str(&alg.to_json_string()).unwrap();
        assert_eq!(back, alg);
        assert_eq!(back.to_json_string(), alg.to_json_string());
    }
}

#[test]
fn tampered_algorithm_fails_verification() {
    let alg = synthesize(4).unwrap();
    let mut doc = alg.to_json();
    doc.c[0] = format!("{:x}", u64::from_str_radix(&doc.c[0], 16).unwrap() ^ 1);
    let bad = BilinearAlgorithm::from_json(&doc).unwrap();
    assert!(!bad.verify(VerifyMode::Exhaustive).unwrap());
}

#[test]
fn composite_degrees_verify() {
    for n in [18, 20, 24, 32, 48, 64] {
        let alg = synthesize_any(n).unwrap();
        assert_eq!(alg.n(), n);
        assert!(alg.verify(VerifyMode::Random(2000)).unwrap(), "n = {n}");
    }
    for n in [19, 23, 65] {
        assert!(synthesize_any(n).is_err());
    }
}
