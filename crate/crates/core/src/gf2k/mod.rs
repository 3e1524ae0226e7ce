//! Binary polynomials, the fields `F2[x]/(p)` they define, and irreducible
//! polynomial enumeration.
//!
//! Polynomials serialize as lowercase hex of their coefficient bits with the
//! constant term in the least significant bit, so `x^2 + x + 1` is `"7"`.

pub mod ext;
mod field;
mod irreducible;
mod poly;

pub use field::{field_mul, FieldElement, FieldSpec};
pub use irreducible::{
    canonical_modulus, irreducibles_of_degree, is_irreducible, necklace_count,
    MAX_ENUMERATION_DEGREE, MAX_FIELD_DEGREE,
};
pub use poly::{clmul64, poly_divmod, poly_mul, BinaryPoly, ZERO_DEGREE};
