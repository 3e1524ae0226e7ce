use std::fmt;

use crate::error::{Error, Result};
use crate::gf2k::{irreducibles_of_degree, is_irreducible, BinaryPoly, FieldSpec};

/// A place of the rational function field `F2(x)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Place {
    /// The zero of a monic irreducible polynomial.
    Finite(BinaryPoly),
    /// The pole of `x`.
    Infinity,
}

impl Place {
    /// A finite place; the modulus must be irreducible of degree 1, 2 or 4.
    pub fn finite(modulus: BinaryPoly) -> Result<Self> {
        if !is_irreducible(&modulus)? {
            return Err(Error::Reducible(modulus.to_string()));
        }
        if ![1, 2, 4].contains(&modulus.degree()) {
            return Err(Error::Unsupported(format!(
                "places of degree {} are outside the inventory",
                modulus.degree()
            )));
        }
        Ok(Place::Finite(modulus))
    }

    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(p) => p.degree() as usize,
            Place::Infinity => 1,
        }
    }

    /// Residue field as a binary field; `F2[x]/(x)` stands in for infinity.
    pub fn residue_field(&self) -> FieldSpec {
        match self {
            Place::Finite(p) => FieldSpec::with_modulus(p).expect("checked on construction"),
            Place::Infinity => FieldSpec::canonical(1).expect("degree 1"),
        }
    }

    /// Hex modulus, or `"inf"`.
    pub fn label(&self) -> String {
        match self {
            Place::Finite(p) => p.to_hex(),
            Place::Infinity => "inf".into(),
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "{p}"),
            Place::Infinity => f.write_str("inf"),
        }
    }
}

impl fmt::Debug for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Place({self})")
    }
}

/// Places of degree 1, 2 and 4: `x`, `x + 1`, infinity, `x^2 + x + 1`, then the
/// three quartics in canonical order.
pub fn inventory() -> Vec<Place> {
    let mut out = vec![
        Place::Finite(BinaryPoly::x()),
        Place::Finite(BinaryPoly::from_u64(0b11)),
        Place::Infinity,
    ];
    for d in [2, 4] {
        out.extend(
            irreducibles_of_degree(d)
                .expect("small degree")
                .into_iter()
                .map(Place::Finite),
        );
    }
    out
}
