//! Exact rank bounds at a few extension degrees.
use gf2_tensor_rank::tower_bounds::{bound_derivative, bound_simple, decimal, legacy_bounds, m2_derivative};

fn main() {
    for n in [26i128, 100, 1000, 1_000_000] {
        let d = bound_derivative(n);
        println!("n {n:>8}  simple {:>14}  derivative {:>14}", decimal(bound_simple(n), 3), decimal(d, 3));
    }
    let l = legacy_bounds();
    println!("slope {} vs earlier {} and {}", m2_derivative(), l.m2_composed, l.m2_remark);
}
