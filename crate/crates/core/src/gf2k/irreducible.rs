use std::sync::OnceLock;

use super::poly::BinaryPoly;
use crate::error::{Error, Result};

/// Largest degree accepted by [`irreducibles_of_degree`].
pub const MAX_ENUMERATION_DEGREE: usize = 8;
/// Largest field degree supported by the word-sized field arithmetic.
pub const MAX_FIELD_DEGREE: usize = 64;

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n % f == 0 {
            out.push(f);
            while n % f == 0 {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's test: `x^(2^d) = x mod p` and `gcd(x^(2^(d/l)) - x, p) = 1` for every prime `l | d`.
pub fn is_irreducible(p: &BinaryPoly) -> Result<bool> {
    let d = p.degree();
    if d < 1 {
        return Err(Error::ConstantPolynomial);
    }
    let d = d as usize;
    let x = BinaryPoly::x().rem(p)?;
    // frob[i] = x^(2^i) mod p
    let mut frob = Vec::with_capacity(d + 1);
    frob.push(x.clone());
    for i in 0..d {
        let next = frob[i].square().rem(p)?;
        frob.push(next);
    }
    if frob[d] != x {
        return Ok(false);
    }
    for l in prime_factors(d) {
        let h = &frob[d / l] + &x;
        if !h.gcd(p).is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of monic irreducibles of degree `d` over F2: `(1/d) * sum_{e | d} mu(e) 2^(d/e)`.
pub fn necklace_count(d: usize) -> u64 {
    fn mobius(mut n: usize) -> i64 {
        let mut sign = 1;
        let mut f = 2;
        while f * f <= n {
            if n % f == 0 {
                n /= f;
                if n % f == 0 {
                    return 0;
                }
                sign = -sign;
            }
            f += 1;
        }
        if n > 1 {
            sign = -sign;
        }
        sign
    }
    let total: i64 = (1..=d)
        .filter(|e| d % e == 0)
        .map(|e| mobius(e) * (1i64 << (d / e)))
        .sum();
    (total / d as i64) as u64
}

/// All monic irreducibles of degree `d`, in constant-term-first lexicographic order.
pub fn irreducibles_of_degree(d: usize) -> Result<Vec<BinaryPoly>> {
    if !(1..=MAX_ENUMERATION_DEGREE).contains(&d) {
        return Err(Error::OutOfRange {
            what: "enumeration degree",
            value: d as i64,
            min: 1,
            max: MAX_ENUMERATION_DEGREE as i64,
        });
    }
    let mut out = Vec::new();
    for low in 0u64..(1 << d) {
        let p = BinaryPoly::from_u64(low | 1 << d);
        if is_irreducible(&p)? {
            out.push(p);
        }
    }
    out.sort();
    Ok(out)
}

static CANONICAL: [OnceLock<BinaryPoly>; MAX_FIELD_DEGREE + 1] =
    [const { OnceLock::new() }; MAX_FIELD_DEGREE + 1];

/// Lexicographically smallest irreducible of degree `d`, reading coefficients from the constant term.
pub fn canonical_modulus(d: usize) -> Result<BinaryPoly> {
    if !(1..=MAX_FIELD_DEGREE).contains(&d) {
        return Err(Error::OutOfRange {
            what: "field degree",
            value: d as i64,
            min: 1,
            max: MAX_FIELD_DEGREE as i64,
        });
    }
    Ok(CANONICAL[d]
        .get_or_init(|| {
            // counter bit (d-1-i) holds coefficient i, so counting up walks lexicographic order;
            // a zero constant term means divisibility by x once d >= 2
            let start = if d == 1 { 0 } else { 1u128 << (d - 1) };
            (start..)
                .map(|v| {
                    let mut p = BinaryPoly::monomial(d);
                    for i in 0..d {
                        if (v >> (d - 1 - i)) & 1 == 1 {
                            p.set_coeff(i, true);
                        }
                    }
                    p
                })
                .find(|p| is_irreducible(p).expect("degree >= 1"))
                .expect("irreducibles exist in every degree")
        })
        .clone())
}
