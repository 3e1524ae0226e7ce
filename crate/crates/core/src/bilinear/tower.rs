use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algorithm::{BilinearMap, VERIFY_SEED};
use crate::error::{Error, Result};
use crate::gf2k::ext::{self, ExtPoly};
use crate::gf2k::FieldSpec;

/// A bilinear algorithm for `K[y]/(R)` over a base field `K = GF(2^m)`:
/// `X*Y = sum_l a_l(X) b_l(Y) c_l` with `a_l, b_l` in `(K^k)*` and `c_l` in `K^k`.
///
/// This is the outer factor of [`compose`](super::compose); each base-field
/// product it performs is later replaced by an F2 algorithm for `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerAlgorithm {
    base: FieldSpec,
    modulus: ExtPoly,
    a: Vec<Vec<u64>>,
    b: Vec<Vec<u64>>,
    c: Vec<Vec<u64>>,
}

impl TowerAlgorithm {
    pub fn new(
        base: FieldSpec,
        modulus: ExtPoly,
        a: Vec<Vec<u64>>,
        b: Vec<Vec<u64>>,
        c: Vec<Vec<u64>>,
    ) -> Result<Self> {
        let k = ext::degree(&modulus).unwrap_or(0);
        if k == 0 || modulus[k] != 1 || modulus.len() != k + 1 {
            return Err(Error::Malformed("tower modulus must be monic of degree >= 1".into()));
        }
        if !ext::is_irreducible(&base, &modulus)? {
            return Err(Error::Reducible(format!("{modulus:?} over {base:?}")));
        }
        if a.is_empty() || a.len() != b.len() || a.len() != c.len() {
            return Err(Error::Malformed("tower form counts differ or are empty".into()));
        }
        let ok = |v: &Vec<u64>| v.len() == k && v.iter().all(|&e| base.contains(e));
        if !a.iter().chain(&b).chain(&c).all(ok) {
            return Err(Error::Malformed(format!("tower vectors must have {k} base entries")));
        }
        Ok(Self {
            base,
            modulus,
            a,
            b,
            c,
        })
    }

    /// `K` as a degree-one extension of itself.
    pub fn identity(base: FieldSpec) -> Self {
        Self::new(base, vec![0, 1], vec![vec![1]], vec![vec![1]], vec![vec![1]])
            .expect("y is irreducible")
    }

    /// Karatsuba for `K[y]/(y^2 + r1 y + r0)` with the smallest irreducible quadratic over `K`.
    pub fn karatsuba2(base: FieldSpec) -> Result<Self> {
        let modulus = ext::smallest_irreducible(&base, 2)?;
        let (r0, r1) = (modulus[0], modulus[1]);
        // y^2 = r1 y + r0 folds a1 b1 into (r0, 1 + r1)
        let c = vec![vec![1, 1], vec![r0, 1 ^ r1], vec![0, 1]];
        let forms = vec![vec![1, 0], vec![0, 1], vec![1, 1]];
        Self::new(base, modulus, forms.clone(), forms, c)
    }

    /// Lifts an F2 algorithm for the unreduced product of two polynomials with
    /// `k` coefficients to `K[y]/(R)`, `R` the smallest irreducible of degree `k` over `K`.
    ///
    /// Valid because an F2 tensor identity survives extension of scalars;
    /// reduction modulo `R` is folded into the output vectors.
    pub fn lift_polynomial_product(base: FieldSpec, product: &BilinearMap) -> Result<Self> {
        let k = product.in_bits();
        let modulus = ext::smallest_irreducible(&base, k)?;
        let bits = |v: u64| -> Vec<u64> { (0..k).map(|i| (v >> i) & 1).collect() };
        let mut a = Vec::with_capacity(product.rank());
        let mut b = Vec::with_capacity(product.rank());
        let mut c = Vec::with_capacity(product.rank());
        for t in product.terms() {
            a.push(bits(t.a));
            b.push(bits(t.b));
            let poly: ExtPoly = (0..product.out_bits()).map(|i| ((t.c >> i) & 1) as u64).collect();
            let mut r = ext::rem(&base, &poly, &modulus)?;
            r.resize(k, 0);
            c.push(r);
        }
        Self::new(base, modulus, a, b, c)
    }

    pub fn base(&self) -> &FieldSpec {
        &self.base
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Extension degree over the base.
    pub fn k(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    pub fn a_forms(&self) -> &[Vec<u64>] {
        &self.a
    }

    pub fn b_forms(&self) -> &[Vec<u64>] {
        &self.b
    }

    pub fn c_vecs(&self) -> &[Vec<u64>] {
        &self.c
    }

    pub(crate) fn apply_form(&self, form: &[u64], x: &[u64]) -> u64 {
        form.iter()
            .zip(x)
            .fold(0, |acc, (&f, &v)| acc ^ self.base.mul(f, v))
    }

    /// Evaluates on coordinate vectors of length `k`.
    pub fn evaluate(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let mut out = vec![0; self.k()];
        for l in 0..self.rank() {
            let p = self
                .base
                .mul(self.apply_form(&self.a[l], x), self.apply_form(&self.b[l], y));
            for (o, &c) in out.iter_mut().zip(&self.c[l]) {
                *o ^= self.base.mul(p, c);
            }
        }
        out
    }

    /// Reference product in `K[y]/(R)`.
    pub fn multiply(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let prod = ext::mul(&self.base, x, y);
        let mut r = ext::rem(&self.base, &prod, &self.modulus).expect("monic modulus");
        r.resize(self.k(), 0);
        r
    }

    /// Compares against [`multiply`](Self::multiply) on `count` seeded random pairs.
    pub fn verify_random(&self, count: u64) -> bool {
        let mut rng = ChaCha8Rng::seed_from_u64(VERIFY_SEED);
        let mask = self.base.mask();
        (0..count).all(|_| {
            let x: Vec<u64> = (0..self.k()).map(|_| rng.gen::<u64>() & mask).collect();
            let y: Vec<u64> = (0..self.k()).map(|_| rng.gen::<u64>() & mask).collect();
            self.evaluate(&x, &y) == self.multiply(&x, &y)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn karatsuba_over_f4_exhaustive() {
        let f4 = FieldSpec::canonical(2).unwrap();
        let t = TowerAlgorithm::karatsuba2(f4).unwrap();
        assert_eq!(t.rank(), 3);
        assert_eq!(t.modulus(), &[1, 2, 1]);
        for x in 0..16u64 {
            for y in 0..16u64 {
                let (xv, yv) = (vec![x & 3, x >> 2], vec![y & 3, y >> 2]);
                assert_eq!(t.evaluate(&xv, &yv), t.multiply(&xv, &yv));
            }
        }
    }

    #[test]
    fn identity_is_rank_one() {
        let f16 = FieldSpec::canonical(4).unwrap();
        let t = TowerAlgorithm::identity(f16);
        assert_eq!((t.k(), t.rank()), (1, 1));
        assert!(t.verify_random(100));
    }

    #[test]
    fn rejects_reducible_modulus() {
        let f2 = FieldSpec::canonical(1).unwrap();
        let r = TowerAlgorithm::new(f2, vec![1, 0, 1], vec![vec![1, 0]], vec![vec![1, 0]], vec![vec![1, 0]]);
        assert!(matches!(r, Err(Error::Reducible(_))));
    }
}
