use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use crate::error::{Error, Result};

/// Degree reported for the zero polynomial.
pub const ZERO_DEGREE: i64 = -1;

/// Polynomial over F2, stored as little-endian 64-bit limbs.
///
/// Bit `i` is the coefficient of `x^i`. The limb vector never ends in a
/// zero limb, so equal polynomials have equal representations.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BinaryPoly {
    limbs: Vec<u64>,
}

/// Carry-less product of two 64-bit words.
#[inline]
pub fn clmul64(a: u64, b: u64) -> u128 {
    let mut acc = 0u128;
    let wide = a as u128;
    let mut rest = b;
    while rest != 0 {
        let i = rest.trailing_zeros();
        acc ^= wide << i;
        rest &= rest - 1;
    }
    acc
}

impl BinaryPoly {
    pub fn zero() -> Self {
        Self { limbs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_u64(1)
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::from_u64(2)
    }

    pub fn monomial(i: usize) -> Self {
        let mut p = Self::zero();
        p.set_coeff(i, true);
        p
    }

    pub fn from_u64(v: u64) -> Self {
        Self::from_limbs(vec![v])
    }

    pub fn from_u128(v: u128) -> Self {
        Self::from_limbs(vec![v as u64, (v >> 64) as u64])
    }

    pub fn from_limbs(limbs: Vec<u64>) -> Self {
        let mut p = Self { limbs };
        p.normalize();
        p
    }

    /// Builds a polynomial from coefficients listed constant term first.
    pub fn from_coeffs(coeffs: &[u8]) -> Self {
        let mut p = Self::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            if c & 1 == 1 {
                p.set_coeff(i, true);
            }
        }
        p
    }

    fn normalize(&mut self) {
        while self.limbs.last() == Some(&0) {
            self.limbs.pop();
        }
    }

    pub fn limbs(&self) -> &[u64] {
        &self.limbs
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.limbs == [1]
    }

    /// Index of the highest set coefficient, or [`ZERO_DEGREE`] for zero.
    pub fn degree(&self) -> i64 {
        match self.limbs.last() {
            None => ZERO_DEGREE,
            Some(&top) => (64 * (self.limbs.len() - 1) + 63 - top.leading_zeros() as usize) as i64,
        }
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.limbs
            .get(i / 64)
            .is_some_and(|limb| (limb >> (i % 64)) & 1 == 1)
    }

    pub fn set_coeff(&mut self, i: usize, value: bool) {
        let w = i / 64;
        if value {
            if self.limbs.len() <= w {
                self.limbs.resize(w + 1, 0);
            }
            self.limbs[w] |= 1 << (i % 64);
        } else if w < self.limbs.len() {
            self.limbs[w] &= !(1 << (i % 64));
            self.normalize();
        }
    }

    pub fn flip_coeff(&mut self, i: usize) {
        let v = self.coeff(i);
        self.set_coeff(i, !v);
    }

    /// Value as a machine word, if the degree is below 64.
    pub fn to_u64(&self) -> Option<u64> {
        match self.limbs.len() {
            0 => Some(0),
            1 => Some(self.limbs[0]),
            _ => None,
        }
    }

    pub fn to_u128(&self) -> Option<u128> {
        match self.limbs.len() {
            0 => Some(0),
            1 => Some(self.limbs[0] as u128),
            2 => Some(self.limbs[0] as u128 | (self.limbs[1] as u128) << 64),
            _ => None,
        }
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> u32 {
        self.limbs.iter().map(|l| l.count_ones()).sum()
    }

    pub fn shl(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (words, bits) = (k / 64, k % 64);
        let mut out = vec![0u64; self.limbs.len() + words + 1];
        for (i, &l) in self.limbs.iter().enumerate() {
            out[i + words] ^= l << bits;
            if bits != 0 {
                out[i + words + 1] ^= l >> (64 - bits);
            }
        }
        Self::from_limbs(out)
    }

    /// Drops the `k` lowest coefficients (division by `x^k`, discarding the remainder).
    pub fn shr(&self, k: usize) -> Self {
        let (words, bits) = (k / 64, k % 64);
        if words >= self.limbs.len() {
            return Self::zero();
        }
        let src = &self.limbs[words..];
        let mut out = vec![0u64; src.len()];
        for i in 0..src.len() {
            out[i] = src[i] >> bits;
            if bits != 0 && i + 1 < src.len() {
                out[i] |= src[i + 1] << (64 - bits);
            }
        }
        Self::from_limbs(out)
    }

    /// Keeps the coefficients of `x^0 .. x^(k-1)`.
    pub fn truncate(&self, k: usize) -> Self {
        let mut limbs: Vec<u64> = self.limbs.iter().take(k.div_ceil(64)).copied().collect();
        if k % 64 != 0 {
            if let Some(last) = limbs.get_mut(k / 64) {
                *last &= (1u64 << (k % 64)) - 1;
            }
        }
        Self::from_limbs(limbs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![0u64; self.limbs.len() + other.limbs.len()];
        for (i, &a) in self.limbs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.limbs.iter().enumerate() {
                let p = clmul64(a, b);
                out[i + j] ^= p as u64;
                out[i + j + 1] ^= (p >> 64) as u64;
            }
        }
        Self::from_limbs(out)
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    /// Euclidean division: returns `(q, r)` with `self = q*m + r`, `deg r < deg m`.
    pub fn divmod(&self, m: &Self) -> Result<(Self, Self)> {
        if m.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dm = m.degree() as usize;
        let mut r = self.clone();
        let mut q = Self::zero();
        while r.degree() >= dm as i64 {
            let shift = r.degree() as usize - dm;
            r += &m.shl(shift);
            q.set_coeff(shift, true);
        }
        Ok((q, r))
    }

    pub fn rem(&self, m: &Self) -> Result<Self> {
        Ok(self.divmod(m)?.1)
    }

    pub fn mulmod(&self, other: &Self, m: &Self) -> Result<Self> {
        self.mul(other).rem(m)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        // odd-index coefficients shift down by one; even ones vanish in char 2
        let odd = Self::from_limbs(self.limbs.iter().map(|l| l & 0xAAAA_AAAA_AAAA_AAAA).collect());
        odd.shr(1)
    }

    /// Evaluates at an element of F2.
    pub fn eval_bit(&self, at: bool) -> bool {
        if at {
            self.weight() % 2 == 1
        } else {
            self.coeff(0)
        }
    }

    /// Lowercase hex of the coefficient bits, constant term in the least significant bit.
    pub fn to_hex(&self) -> String {
        match self.limbs.split_last() {
            None => "0".to_string(),
            Some((top, rest)) => {
                let mut s = format!("{top:x}");
                for l in rest.iter().rev() {
                    s.push_str(&format!("{l:016x}"));
                }
                s
            }
        }
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let s = s.trim();
        let digits = s.strip_prefix("0x").unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_hexdigit()) {
            return Err(Error::InvalidHex(s.to_string()));
        }
        let bytes = digits.as_bytes();
        let mut limbs = Vec::with_capacity(bytes.len().div_ceil(16));
        let mut end = bytes.len();
        while end > 0 {
            let start = end.saturating_sub(16);
            let chunk = std::str::from_utf8(&bytes[start..end]).expect("ascii");
            limbs.push(u64::from_str_radix(chunk, 16).map_err(|_| Error::InvalidHex(s.to_string()))?);
            end = start;
        }
        Ok(Self::from_limbs(limbs))
    }

    /// Indices of nonzero coefficients in increasing order.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.limbs.iter().enumerate().flat_map(|(w, &l)| {
            let mut rest = l;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(64 * w + i)
            })
        })
    }
}

/// Orders by degree, then coefficient by coefficient starting at the constant term.
impl Ord for BinaryPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let len = self.limbs.len();
            for w in 0..len {
                let (a, b) = (self.limbs[w], other.limbs[w]);
                if a != b {
                    // lowest differing coefficient decides
                    let i = (a ^ b).trailing_zeros();
                    return ((a >> i) & 1).cmp(&((b >> i) & 1));
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for BinaryPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl AddAssign<&BinaryPoly> for BinaryPoly {
    fn add_assign(&mut self, rhs: &BinaryPoly) {
        if self.limbs.len() < rhs.limbs.len() {
            self.limbs.resize(rhs.limbs.len(), 0);
        }
        for (a, b) in self.limbs.iter_mut().zip(&rhs.limbs) {
            *a ^= b;
        }
        self.normalize();
    }
}

impl Add for &BinaryPoly {
    type Output = BinaryPoly;
    fn add(self, rhs: &BinaryPoly) -> BinaryPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Mul for &BinaryPoly {
    type Output = BinaryPoly;
    fn mul(self, rhs: &BinaryPoly) -> BinaryPoly {
        BinaryPoly::mul(self, rhs)
    }
}

impl fmt::Display for BinaryPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<usize> = self.support().collect();
        let mut first = true;
        for &i in terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "1")?,
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryPoly({self})")
    }
}

/// Product in F2[x].
pub fn poly_mul(a: &BinaryPoly, b: &BinaryPoly) -> BinaryPoly {
    a.mul(b)
}

/// Quotient and remainder in F2[x].
pub fn poly_divmod(a: &BinaryPoly, m: &BinaryPoly) -> Result<(BinaryPoly, BinaryPoly)> {
    a.divmod(m)
}
