//! Bilinear algorithms for binary-field multiplication: representation,
//! verification, the hard-coded base formulas, tower composition and
//! straight-line code generation.

mod algorithm;
mod base;
mod codegen;
mod compose;
mod tower;

pub use algorithm::{
    AlgorithmJson, BilinearAlgorithm, BilinearMap, Term, VerifyMode, MAX_EXHAUSTIVE_N, VERIFY_SEED,
};
pub use base::{
    host_algorithm, karatsuba2, nested4, rank_one, truncated2, truncated2_over, RankBudget,
    RANK_BUDGET,
};
pub use codegen::{codegen, count_ands, count_xors, interpret};
pub use compose::{compose, compose_into};
pub use tower::TowerAlgorithm;
