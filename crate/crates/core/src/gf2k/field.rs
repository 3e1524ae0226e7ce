use std::fmt;

use super::irreducible::{canonical_modulus, is_irreducible, MAX_FIELD_DEGREE};
use super::poly::{clmul64, BinaryPoly};
use crate::error::{Error, Result};

/// A binary field F2[x]/(modulus) of degree at most 64.
///
/// Elements are `u64` words whose bit `i` is the coefficient of `x^i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    degree: u32,
    modulus: u128,
}

impl FieldSpec {
    /// The field defined by the canonical modulus of degree `d`.
    pub fn canonical(d: usize) -> Result<Self> {
        let m = canonical_modulus(d)?;
        Ok(Self {
            degree: d as u32,
            modulus: m.to_u128().expect("degree <= 64"),
        })
    }

    /// The field defined by an arbitrary irreducible modulus.
    pub fn with_modulus(p: &BinaryPoly) -> Result<Self> {
        let d = p.degree();
        if !(1..=MAX_FIELD_DEGREE as i64).contains(&d) {
            return Err(Error::OutOfRange {
                what: "field degree",
                value: d,
                min: 1,
                max: MAX_FIELD_DEGREE as i64,
            });
        }
        if !is_irreducible(p)? {
            return Err(Error::Reducible(p.to_string()));
        }
        Ok(Self {
            degree: d as u32,
            modulus: p.to_u128().expect("degree <= 64"),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree as usize
    }

    pub fn modulus(&self) -> BinaryPoly {
        BinaryPoly::from_u128(self.modulus)
    }

    pub fn modulus_bits(&self) -> u128 {
        self.modulus
    }

    pub fn is_canonical(&self) -> bool {
        canonical_modulus(self.degree()).map(|m| m == self.modulus()).unwrap_or(false)
    }

    /// Mask of valid element bits.
    pub fn mask(&self) -> u64 {
        if self.degree == 64 {
            u64::MAX
        } else {
            (1u64 << self.degree) - 1
        }
    }

    pub fn order(&self) -> u128 {
        1u128 << self.degree
    }

    pub fn contains(&self, v: u64) -> bool {
        v & !self.mask() == 0
    }

    /// Reduces a polynomial of degree < 128 modulo the field modulus.
    #[inline]
    pub fn reduce(&self, mut v: u128) -> u64 {
        let d = self.degree;
        while v >> d != 0 {
            let top = 127 - v.leading_zeros();
            v ^= self.modulus << (top - d);
        }
        v as u64
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.reduce(clmul64(a, b))
    }

    #[inline]
    pub fn square(&self, a: u64) -> u64 {
        self.mul(a, a)
    }

    pub fn pow(&self, a: u64, mut e: u128) -> u64 {
        let (mut base, mut acc) = (a, 1u64);
        while e != 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u64) -> Option<u64> {
        (a != 0).then(|| self.pow(a, self.order() - 2))
    }

    /// Absolute trace to F2.
    pub fn trace(&self, a: u64) -> u64 {
        let mut acc = 0;
        let mut t = a;
        for _ in 0..self.degree {
            acc ^= t;
            t = self.square(t);
        }
        acc
    }

    pub fn element(&self, value: u64) -> Result<FieldElement> {
        if !self.contains(value) {
            return Err(Error::Malformed(format!(
                "element {value:#x} has degree >= {}",
                self.degree
            )));
        }
        Ok(FieldElement { spec: *self, value })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { spec: *self, value: 0 }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { spec: *self, value: 1 }
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{}) mod {}", self.degree, self.modulus())
    }
}

/// An element of a [`FieldSpec`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FieldElement {
    spec: FieldSpec,
    value: u64,
}

impl FieldElement {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn as_poly(&self) -> BinaryPoly {
        BinaryPoly::from_u64(self.value)
    }
}

/// Product of two elements of the same field.
pub fn field_mul(a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
    if a.spec != b.spec {
        return Err(Error::FieldMismatch(format!("{:?} vs {:?}", a.spec, b.spec)));
    }
    Ok(FieldElement {
        spec: a.spec,
        value: a.spec.mul(a.value, b.value),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_examples() {
        let f4 = FieldSpec::canonical(2).unwrap();
        let x = f4.element(0b10).unwrap();
        assert_eq!(field_mul(&x, &x).unwrap().value(), 0b11);
        assert_eq!(field_mul(&x, &f4.one()).unwrap(), x);
        assert_eq!(field_mul(&x, &f4.zero()).unwrap(), f4.zero());
    }

    #[test]
    fn mismatched_fields_rejected() {
        let f4 = FieldSpec::canonical(2).unwrap();
        let f8 = FieldSpec::canonical(3).unwrap();
        assert!(matches!(
            field_mul(&f4.one(), &f8.one()),
            Err(Error::FieldMismatch(_))
        ));
        assert!(f4.element(0b100).is_err());
    }

    #[test]
    fn inverses_and_trace() {
        for d in [1, 2, 4, 8, 13] {
            let f = FieldSpec::canonical(d).unwrap();
            for a in 1..(1u64 << d).min(300) {
                let inv = f.inv(a).unwrap();
                assert_eq!(f.mul(a, inv), 1);
                assert!(f.trace(a) <= 1);
            }
            assert_eq!(f.inv(0), None);
        }
    }

    #[test]
    fn with_modulus_checks_irreducibility() {
        assert!(FieldSpec::with_modulus(&BinaryPoly::from_u64(0b101)).is_err());
        let f = FieldSpec::with_modulus(&BinaryPoly::from_u64(0b10011)).unwrap();
        assert_eq!(f.degree(), 4);
        assert!(!f.is_canonical());
        assert!(FieldSpec::canonical(4).unwrap().is_canonical());
    }

    #[test]
    fn degree_64_field() {
        let f = FieldSpec::canonical(64).unwrap();
        let a = 0xdead_beef_cafe_f00d;
        assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        assert_eq!(f.mask(), u64::MAX);
    }
}
