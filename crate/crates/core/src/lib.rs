//! Explicit bilinear multiplication algorithms for `GF(2^n)` built by
//! genus-zero evaluation/interpolation with derivative evaluations, together
//! with genus, place-count and tensor-rank bound computations for the
//! descended Garcia–Stichtenoth tower over `F2`.
//!
//! * [`gf2k`]: binary polynomials and binary fields.
//! * [`bilinear`]: tensor decompositions, verification, composition, codegen.
//! * [`cc_construct`]: evaluation plans and algorithm synthesis.
//! * [`tower_bounds`]: exact-rational bound formulas and step selection.
//! * [`curve_count`]: brute-force place counts for the first tower steps.
//! * [`report`]: the reproduction checklist used by the `gf2tr report` command.

pub mod bilinear;
pub mod cc_construct;
pub mod curve_count;
mod error;
pub mod gf2k;
pub mod report;
pub mod tower_bounds;

pub use error::{Error, Result};
