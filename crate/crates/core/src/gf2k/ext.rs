//! Polynomials with coefficients in a binary field `GF(2^m)`.
//!
//! Coefficient vectors are little-endian (`f[i]` multiplies `y^i`) and kept
//! trimmed, so the zero polynomial is the empty vector.

use super::field::FieldSpec;
use crate::error::{Error, Result};

pub type ExtPoly = Vec<u64>;

pub fn trim(mut f: ExtPoly) -> ExtPoly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

/// Degree, or `None` for zero.
pub fn degree(f: &[u64]) -> Option<usize> {
    f.iter().rposition(|&c| c != 0)
}

pub fn add(f: &[u64], g: &[u64]) -> ExtPoly {
    let mut out = vec![0; f.len().max(g.len())];
    for (i, &c) in f.iter().enumerate() {
        out[i] ^= c;
    }
    for (i, &c) in g.iter().enumerate() {
        out[i] ^= c;
    }
    trim(out)
}

pub fn mul(field: &FieldSpec, f: &[u64], g: &[u64]) -> ExtPoly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            out[i + j] ^= field.mul(a, b);
        }
    }
    trim(out)
}

pub fn scale(field: &FieldSpec, f: &[u64], c: u64) -> ExtPoly {
    trim(f.iter().map(|&a| field.mul(a, c)).collect())
}

pub fn divmod(field: &FieldSpec, f: &[u64], g: &[u64]) -> Result<(ExtPoly, ExtPoly)> {
    let dg = degree(g).ok_or(Error::DivisionByZero)?;
    let lead_inv = field.inv(g[dg]).expect("nonzero leading coefficient");
    let mut r = trim(f.to_vec());
    let mut q = vec![0; r.len().saturating_sub(dg).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < dg {
            break;
        }
        let c = field.mul(r[dr], lead_inv);
        let shift = dr - dg;
        q[shift] = c;
        for (j, &b) in g.iter().enumerate() {
            r[shift + j] ^= field.mul(c, b);
        }
        r = trim(r);
    }
    Ok((trim(q), r))
}

pub fn rem(field: &FieldSpec, f: &[u64], g: &[u64]) -> Result<ExtPoly> {
    Ok(divmod(field, f, g)?.1)
}

pub fn monic(field: &FieldSpec, f: &[u64]) -> ExtPoly {
    match degree(f) {
        None => Vec::new(),
        Some(d) => scale(field, f, field.inv(f[d]).expect("nonzero")),
    }
}

/// Monic gcd.
pub fn gcd(field: &FieldSpec, f: &[u64], g: &[u64]) -> ExtPoly {
    let (mut a, mut b) = (trim(f.to_vec()), trim(g.to_vec()));
    while !b.is_empty() {
        let r = rem(field, &a, &b).expect("nonzero divisor");
        a = b;
        b = r;
    }
    monic(field, &a)
}

pub fn eval(field: &FieldSpec, f: &[u64], at: u64) -> u64 {
    f.iter().rev().fold(0, |acc, &c| field.mul(acc, at) ^ c)
}

/// `h^(2^k) mod f`.
fn frobenius_pow(field: &FieldSpec, h: &[u64], k: usize, f: &[u64]) -> Result<ExtPoly> {
    let mut t = rem(field, h, f)?;
    for _ in 0..k {
        t = rem(field, &mul(field, &t, &t), f)?;
    }
    Ok(t)
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin irreducibility test over `GF(2^m)`.
pub fn is_irreducible(field: &FieldSpec, f: &[u64]) -> Result<bool> {
    let k = degree(f).ok_or(Error::ConstantPolynomial)?;
    if k == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let m = field.degree();
    let y: ExtPoly = rem(field, &[0, 1], f)?;
    let full = frobenius_pow(field, &y, m * k, f)?;
    if full != y {
        return Ok(false);
    }
    for l in prime_factors(k) {
        let h = add(&frobenius_pow(field, &y, m * (k / l), f)?, &y);
        if degree(&gcd(field, &h, f)) != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Lexicographically smallest monic irreducible of degree `k` over `field`,
/// comparing coefficients from the constant term upward.
pub fn smallest_irreducible(field: &FieldSpec, k: usize) -> Result<ExtPoly> {
    let m = field.degree();
    if k == 0 || m * k > 127 {
        return Err(Error::OutOfRange {
            what: "extension degree",
            value: k as i64,
            min: 1,
            max: (127 / m) as i64,
        });
    }
    let mask = field.mask() as u128;
    // a zero constant term means divisibility by y once k >= 2
    let start = if k == 1 { 0 } else { 1u128 << (m * (k - 1)) };
    for v in start.. {
        // coefficient i sits in counter digit (k-1-i), most significant first
        let mut f: ExtPoly = (0..k)
            .map(|i| ((v >> (m * (k - 1 - i))) & mask) as u64)
            .collect();
        f.push(1);
        if is_irreducible(field, &f)? {
            return Ok(f);
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// All roots of `f` in `field`, in increasing order.
///
/// Fails unless `f` is a product of distinct linear factors over `field`.
pub fn roots(field: &FieldSpec, f: &[u64]) -> Result<Vec<u64>> {
    let f = monic(field, f);
    let Some(k) = degree(&f) else {
        return Err(Error::NoSplitting);
    };
    if k == 0 {
        return Ok(Vec::new());
    }
    let y: ExtPoly = rem(field, &[0, 1], &f)?;
    if frobenius_pow(field, &y, field.degree(), &f)? != y {
        return Err(Error::NoSplitting);
    }
    let mut out = Vec::with_capacity(k);
    split_roots(field, &f, &mut out)?;
    out.sort_unstable();
    Ok(out)
}

/// Trace splitting: for a basis element `b`, `gcd(f, Tr(b*y))` separates roots
/// whose `b`-traces differ.
fn split_roots(field: &FieldSpec, f: &[u64], out: &mut Vec<u64>) -> Result<()> {
    match degree(f) {
        Some(0) | None => return Ok(()),
        Some(1) => {
            out.push(field.mul(f[0], field.inv(f[1]).expect("nonzero")));
            return Ok(());
        }
        _ => {}
    }
    for i in 0..field.degree() {
        let b = 1u64 << i;
        let mut t = rem(field, &[0, b], f)?;
        let mut acc = t.clone();
        for _ in 1..field.degree() {
            t = rem(field, &mul(field, &t, &t), f)?;
            acc = add(&acc, &t);
        }
        let g = gcd(field, f, &acc);
        let dg = degree(&g).unwrap_or(0);
        if dg > 0 && Some(dg) < degree(f) {
            let (h, r) = divmod(field, f, &g)?;
            debug_assert!(r.is_empty());
            split_roots(field, &g, out)?;
            split_roots(field, &h, out)?;
            return Ok(());
        }
    }
    Err(Error::NoSplitting)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_field_polynomial() {
        // y^16 - y vanishes on all of GF(16)
        let f16 = FieldSpec::canonical(4).unwrap();
        let mut f = vec![0u64; 17];
        f[16] = 1;
        f[1] = 1;
        assert_eq!(roots(&f16, &f).unwrap(), (0..16).collect::<Vec<_>>());
    }

    #[test]
    fn roots_brute_force_agreement() {
        let f256 = FieldSpec::canonical(8).unwrap();
        // (y - 3)(y - 7)(y - 200)(y - 0)
        let mut f: ExtPoly = vec![1];
        for r in [3u64, 7, 200, 0] {
            f = mul(&f256, &f, &[r, 1]);
        }
        let brute: Vec<u64> = (0..256).filter(|&a| eval(&f256, &f, a) == 0).collect();
        assert_eq!(roots(&f256, &f).unwrap(), brute);
    }

    #[test]
    fn irreducible_poly_has_no_roots_in_base() {
        let f4 = FieldSpec::canonical(2).unwrap();
        let r = smallest_irreducible(&f4, 2).unwrap();
        // y^2 + x*y + 1 is the first candidate with no root in GF(4)
        assert_eq!(r, vec![1, 2, 1]);
        assert!((0..4).all(|a| eval(&f4, &r, a) != 0));
        assert_eq!(roots(&f4, &r), Err(Error::NoSplitting));
    }

    #[test]
    fn smallest_irreducible_over_f2_is_canonical() {
        let f2 = FieldSpec::canonical(1).unwrap();
        for k in 1..=9 {
            let r = smallest_irreducible(&f2, k).unwrap();
            let canon = crate::gf2k::canonical_modulus(k).unwrap();
            let bits: Vec<u64> = (0..=k).map(|i| canon.coeff(i) as u64).collect();
            assert_eq!(r, bits);
        }
    }

    #[test]
    fn divmod_roundtrip() {
        let f = FieldSpec::canonical(5).unwrap();
        let a: ExtPoly = vec![3, 17, 0, 9, 31, 2];
        let b: ExtPoly = vec![5, 0, 11];
        let (q, r) = divmod(&f, &a, &b).unwrap();
        assert!(degree(&r) < degree(&b));
        assert_eq!(add(&mul(&f, &q, &b), &r), a);
    }
}
