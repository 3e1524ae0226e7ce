use super::algorithm::{BilinearAlgorithm, BilinearMap, Term};
use super::compose::{compose, compose_into};
use super::tower::TowerAlgorithm;
use crate::error::{Error, Result};
use crate::gf2k::FieldSpec;

/// Unit costs of the base formulas: `mu(1)`, `mu(2)`, `mu(4)` over F2 and the
/// truncated-product cost `M^(2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankBudget {
    pub mu1: usize,
    pub mu2: usize,
    pub mu4: usize,
    pub mhat2: usize,
}

pub const RANK_BUDGET: RankBudget = RankBudget {
    mu1: 1,
    mu2: 3,
    mu4: 9,
    mhat2: 3,
};

impl RankBudget {
    /// Bilinear rank of the base formula for `GF(2^d)`.
    pub fn mu(&self, d: usize) -> Option<usize> {
        match d {
            1 => Some(self.mu1),
            2 => Some(self.mu2),
            4 => Some(self.mu4),
            _ => None,
        }
    }

    /// Multiplications spent on a place of degree `d` evaluated with multiplicity `u`.
    pub fn cost(&self, d: usize, u: usize) -> Option<usize> {
        let mhat = match u {
            1 => 1,
            2 => self.mhat2,
            _ => return None,
        };
        Some(self.mu(d)? * mhat)
    }
}

/// Multiplication in F2 itself, or in any degree-one field `F2[x]/(x + c)`.
pub fn rank_one(field: FieldSpec) -> Result<BilinearAlgorithm> {
    if field.degree() != 1 {
        return Err(Error::Unsupported(format!(
            "rank-one formula needs a degree-1 field, got {:?}",
            field
        )));
    }
    BilinearAlgorithm::new(field, vec![1], vec![1], vec![1])
}

/// Karatsuba over `GF(4) = F2[x]/(x^2 + x + 1)`: products `a0 b0`, `a1 b1`,
/// `(a0 + a1)(b0 + b1)`.
pub fn karatsuba2() -> BilinearAlgorithm {
    let f4 = FieldSpec::canonical(2).expect("degree 2 supported");
    // x^2 = x + 1: a1 b1 contributes 1 + x, and its x part cancels against the middle term
    BilinearAlgorithm::new(f4, vec![0b01, 0b10, 0b11], vec![0b01, 0b10, 0b11], vec![0b11, 0b01, 0b10])
        .expect("well-formed")
}

/// Rank-9 algorithm for the canonical `GF(16)`: Karatsuba over `GF(4)`
/// composed with Karatsuba over F2.
pub fn nested4() -> BilinearAlgorithm {
    let f4 = FieldSpec::canonical(2).expect("degree 2 supported");
    compose(&TowerAlgorithm::karatsuba2(f4).expect("quadratic exists"), &karatsuba2())
        .expect("karatsuba tower composes")
}

/// Base formula of rank `mu(d)` for the field `F2[x]/(p)` with `deg p` in {1, 2, 4}.
pub fn host_algorithm(field: FieldSpec) -> Result<BilinearAlgorithm> {
    match field.degree() {
        1 => rank_one(field),
        // x^2 + x + 1 is the only quadratic irreducible
        2 => Ok(karatsuba2()),
        4 => {
            let f4 = FieldSpec::canonical(2)?;
            compose_into(&TowerAlgorithm::karatsuba2(f4)?, &karatsuba2(), field)
        }
        d => Err(Error::Unsupported(format!("no base formula for degree {d}"))),
    }
}

/// Product modulo `t^2` with coefficients in the field of `host`.
///
/// Inputs pack `(v0, v1)` as `v0 | v1 << d`. Three host products: `c0 = a0 b0`,
/// `c1 = (a0 + a1)(b0 + b1) - a0 b0 - a1 b1`.
pub fn truncated2_over(host: &BilinearAlgorithm) -> BilinearMap {
    let d = host.n();
    let lo = |v: u64| v as u128;
    let hi = |v: u64| (v as u128) << d;
    let mut terms = Vec::with_capacity(3 * host.rank());
    for (a, b, c) in host.terms() {
        terms.push(Term {
            a,
            b,
            c: lo(c) | hi(c),
        });
    }
    for (a, b, c) in host.terms() {
        terms.push(Term {
            a: a << d,
            b: b << d,
            c: hi(c),
        });
    }
    for (a, b, c) in host.terms() {
        terms.push(Term {
            a: a | a << d,
            b: b | b << d,
            c: hi(c),
        });
    }
    BilinearMap::new(2 * d, 2 * d, terms).expect("dimensions follow host")
}

/// Truncated product over the canonical `GF(2^d)`, `d` in {1, 2, 4}.
pub fn truncated2(d: usize) -> Result<BilinearMap> {
    let host = match d {
        1 => rank_one(FieldSpec::canonical(1)?)?,
        2 => karatsuba2(),
        4 => nested4(),
        _ => return Err(Error::Unsupported(format!("no base formula for degree {d}"))),
    };
    Ok(truncated2_over(&host))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bilinear::VerifyMode;
    use crate::gf2k::irreducibles_of_degree;

    #[test]
    fn budget_values() {
        assert_eq!(RANK_BUDGET.mu(2), Some(3));
        assert_eq!(RANK_BUDGET.mu(4), Some(9));
        assert_eq!(RANK_BUDGET.mhat2, 3);
        assert_eq!(RANK_BUDGET.cost(4, 2), Some(27));
        assert_eq!(RANK_BUDGET.cost(2, 1), Some(3));
        assert_eq!(RANK_BUDGET.cost(3, 1), None);
        assert_eq!(RANK_BUDGET.cost(1, 3), None);
    }

    #[test]
    fn karatsuba_and_nested_verify() {
        let k = karatsuba2();
        assert_eq!(k.rank(), 3);
        assert!(k.verify(VerifyMode::Exhaustive).unwrap());
        let n4 = nested4();
        assert_eq!(n4.rank(), 9);
        assert!(n4.field().is_canonical());
        assert!(n4.verify(VerifyMode::Exhaustive).unwrap());
    }

    #[test]
    fn broken_karatsuba_fails() {
        let k = karatsuba2();
        let mut c = k.c_vecs().to_vec();
        c[1] = 0;
        let broken =
            BilinearAlgorithm::new(*k.field(), k.a_forms().to_vec(), k.b_forms().to_vec(), c).unwrap();
        assert!(!broken.verify(VerifyMode::Exhaustive).unwrap());
    }

    #[test]
    fn host_algorithms_for_every_place_field() {
        for d in [1, 2, 4] {
            for p in irreducibles_of_degree(d).unwrap() {
                let f = FieldSpec::with_modulus(&p).unwrap();
                let h = host_algorithm(f).unwrap();
                assert_eq!(h.rank(), RANK_BUDGET.mu(d).unwrap());
                assert_eq!(h.field(), &f);
                assert!(h.verify(VerifyMode::Exhaustive).unwrap(), "{p}");
            }
        }
        let f8 = FieldSpec::canonical(3).unwrap();
        assert!(host_algorithm(f8).is_err());
    }

    #[test]
    fn truncated_square_of_one_plus_t() {
        let t = truncated2(1).unwrap();
        assert_eq!(t.rank(), 3);
        // (1 + t)^2 = 1 + 2t = 1 mod t^2 in characteristic 2
        assert_eq!(t.apply(0b11, 0b11), 0b01);
    }

    #[test]
    fn truncated_products_match_reference() {
        for d in [1usize, 2, 4] {
            let t = truncated2(d).unwrap();
            assert_eq!(t.rank(), 3 * RANK_BUDGET.mu(d).unwrap());
            let f = FieldSpec::canonical(d).unwrap();
            let m = f.mask();
            for x in 0..(1u64 << (2 * d)) {
                for y in 0..(1u64 << (2 * d)) {
                    let (x0, x1, y0, y1) = (x & m, x >> d, y & m, y >> d);
                    let c0 = f.mul(x0, y0);
                    let c1 = f.mul(x0, y1) ^ f.mul(x1, y0);
                    assert_eq!(t.apply(x, y), (c0 | c1 << d) as u128);
                }
            }
        }
        assert!(truncated2(3).is_err());
    }
}
