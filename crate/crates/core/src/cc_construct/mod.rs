//! Genus-zero evaluation/interpolation: choose places of degree 1, 2, 4 on
//! the projective line with multiplicity at most 2, and fold evaluation,
//! local products, CRT reconstruction and reduction into one tensor.

mod place;
mod plan;
mod residue;
mod synth;

pub use place::{inventory, Place};
pub use plan::{
    plan_places, Assignment, AssignmentJson, EvaluationPlan, PlaceTally, PlanJson, MAX_PLAN_N,
};
pub use residue::{ev_place, reconstruct, Residue, ResidueVector};
pub use synth::{composite_split, polynomial_product, synthesize, synthesize_any};
