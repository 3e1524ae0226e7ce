//! Genus, place-count and step-selection formulas for the descended tower
//! over `F2`, and the tensor-rank bounds built on them, all in exact rationals.

mod bounds;
mod step;

pub use bounds::{
    arnaud_i, arnaud_ii, bound_derivative, bound_generic, bound_report, bound_simple, c_q,
    decimal, legacy_bounds, m2_derivative, m2_simple, n0_from_counts, n0_value, phi,
    table_place_sum, vertex_ratio, AsymptoticJson, BoundReport, LegacyBounds,
    LegacyJson, Rational, RationalJson, StepJson,
};
pub use step::{
    certified, delta_lower, genus_exact, genus_info, genus_upper, k_interval, n0_lower,
    place_sum_lower, select_step, GenusInfo, TowerStep, MAX_K, P, Q,
};
