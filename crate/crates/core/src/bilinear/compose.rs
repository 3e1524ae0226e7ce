use super::algorithm::{BilinearAlgorithm, VerifyMode};
use super::tower::TowerAlgorithm;
use crate::error::{Error, Result};
use crate::gf2k::{ext, FieldSpec, MAX_FIELD_DEGREE};

/// Number of random pairs used to sanity-check every composition.
const COMPOSE_CHECK_PAIRS: u64 = 256;

/// Composes an outer algorithm over `K = GF(2^m)` with an F2 algorithm for `K`,
/// giving an F2 algorithm for the canonical field of degree `m*k`.
///
/// The result has rank `rank(outer) * rank(inner)`.
pub fn compose(outer: &TowerAlgorithm, inner: &BilinearAlgorithm) -> Result<BilinearAlgorithm> {
    let n = outer.k() * inner.n();
    if n > MAX_FIELD_DEGREE {
        return Err(Error::OutOfRange {
            what: "composed degree",
            value: n as i64,
            min: 1,
            max: MAX_FIELD_DEGREE as i64,
        });
    }
    compose_into(outer, inner, FieldSpec::canonical(n)?)
}

/// As [`compose`], expressed over an explicit target field of degree `m*k`.
pub fn compose_into(
    outer: &TowerAlgorithm,
    inner: &BilinearAlgorithm,
    target: FieldSpec,
) -> Result<BilinearAlgorithm> {
    if inner.field() != outer.base() {
        return Err(Error::FieldMismatch(format!(
            "inner algorithm over {:?}, outer over {:?}",
            inner.field(),
            outer.base()
        )));
    }
    let (m, k) = (inner.n(), outer.k());
    let n = m * k;
    if target.degree() != n {
        return Err(Error::FieldMismatch(format!(
            "target {:?} has degree {}, composition has {n}",
            target,
            target.degree()
        )));
    }
    let basis = TowerBasis::new(outer, target)?;

    let mut a = Vec::with_capacity(outer.rank() * inner.rank());
    let mut b = Vec::with_capacity(a.capacity());
    let mut c = Vec::with_capacity(a.capacity());
    // value of the outer form on the tower image of each flat basis vector
    let outer_on_basis = |form: &[u64]| -> Vec<u64> {
        (0..n)
            .map(|s| outer.apply_form(form, &basis.to_tower(1 << s)))
            .collect()
    };
    for l in 0..outer.rank() {
        let al = outer_on_basis(&outer.a_forms()[l]);
        let bl = outer_on_basis(&outer.b_forms()[l]);
        let cl = &outer.c_vecs()[l];
        for (ai, bi, ci) in inner.terms() {
            let pull = |vals: &[u64], form: u64| -> u64 {
                vals.iter()
                    .enumerate()
                    .fold(0, |acc, (s, &v)| acc | (((v & form).count_ones() & 1) as u64) << s)
            };
            a.push(pull(&al, ai));
            b.push(pull(&bl, bi));
            let coords: Vec<u64> = cl.iter().map(|&cj| outer.base().mul(ci, cj)).collect();
            c.push(basis.to_flat(&coords));
        }
    }
    let alg = BilinearAlgorithm::new(target, a, b, c)?;
    if !alg.verify(VerifyMode::Random(COMPOSE_CHECK_PAIRS))? {
        return Err(Error::VerificationFailed(format!(
            "composition into {:?} disagrees with field multiplication",
            target
        )));
    }
    Ok(alg)
}

/// Change of basis between `K[y]/(R)` and a flat field of the same size.
///
/// Tower coordinate bit `j*m + i` maps to `xi^i eta^j`, where `xi` is the smallest
/// root of the modulus of `K` in the flat field and `eta` the smallest root of `R`.
struct TowerBasis {
    m: usize,
    k: usize,
    to_flat_cols: Vec<u64>,
    to_tower_cols: Vec<u64>,
}

impl TowerBasis {
    fn new(outer: &TowerAlgorithm, target: FieldSpec) -> Result<Self> {
        let base = outer.base();
        let (m, k) = (base.degree(), outer.k());
        let n = m * k;
        let inner_mod: Vec<u64> = (0..=m).map(|i| base.modulus().coeff(i) as u64).collect();
        let xi = *ext::roots(&target, &inner_mod)?.first().ok_or(Error::NoSplitting)?;
        let embed = |c: u64| -> u64 {
            (0..m)
                .filter(|i| c >> i & 1 == 1)
                .fold(0, |acc, i| acc ^ target.pow(xi, i as u128))
        };
        let outer_mod: Vec<u64> = outer.modulus().iter().map(|&c| embed(c)).collect();
        let eta = *ext::roots(&target, &outer_mod)?.first().ok_or(Error::NoSplitting)?;

        let mut to_flat_cols = Vec::with_capacity(n);
        for j in 0..k {
            let ej = target.pow(eta, j as u128);
            for i in 0..m {
                to_flat_cols.push(target.mul(target.pow(xi, i as u128), ej));
            }
        }
        let to_tower_cols = invert(&to_flat_cols).ok_or_else(|| {
            Error::VerificationFailed("tower basis is not linearly independent".into())
        })?;
        Ok(Self {
            m,
            k,
            to_flat_cols,
            to_tower_cols,
        })
    }

    fn to_tower(&self, v: u64) -> Vec<u64> {
        let bits = apply_cols(&self.to_tower_cols, v);
        let mask = if self.m == 64 { u64::MAX } else { (1u64 << self.m) - 1 };
        (0..self.k).map(|j| (bits >> (j * self.m)) & mask).collect()
    }

    fn to_flat(&self, coords: &[u64]) -> u64 {
        let packed = coords
            .iter()
            .enumerate()
            .fold(0u64, |acc, (j, &c)| acc | c << (j * self.m));
        apply_cols(&self.to_flat_cols, packed)
    }
}

/// Matrix-vector product over F2 with the matrix given by columns.
fn apply_cols(cols: &[u64], v: u64) -> u64 {
    cols.iter()
        .enumerate()
        .filter(|(s, _)| v >> s & 1 == 1)
        .fold(0, |acc, (_, &c)| acc ^ c)
}

/// Inverse of a square F2 matrix given by columns, by Gauss-Jordan elimination.
fn invert(cols: &[u64]) -> Option<Vec<u64>> {
    let n = cols.len();
    // work on columns: column operations applied to both sides
    let mut work = cols.to_vec();
    let mut inv: Vec<u64> = (0..n).map(|s| 1u64 << s).collect();
    for r in 0..n {
        let p = (r..n).find(|&s| work[s] >> r & 1 == 1)?;
        work.swap(r, p);
        inv.swap(r, p);
        for s in 0..n {
            if s != r && work[s] >> r & 1 == 1 {
                work[s] ^= work[r];
                inv[s] ^= inv[r];
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bilinear::{karatsuba2, BilinearMap, Term};

    #[test]
    fn identity_outer_keeps_rank() {
        let f4 = FieldSpec::canonical(2).unwrap();
        let alg = compose(&TowerAlgorithm::identity(f4), &karatsuba2()).unwrap();
        assert_eq!(alg.rank(), 3);
        assert!(alg.verify(VerifyMode::Exhaustive).unwrap());
    }

    #[test]
    fn cubic_karatsuba_over_f4_gives_rank_18() {
        // six products for a degree-2 by degree-2 polynomial product
        let forms = [0b001, 0b010, 0b100, 0b011, 0b101, 0b110];
        let out = |i: u32| 1u128 << i;
        let cs = [
            out(0) | out(1) | out(2),
            out(1) | out(2) | out(3),
            out(2) | out(3) | out(4),
            out(1),
            out(2),
            out(3),
        ];
        let terms = forms
            .iter()
            .zip(cs)
            .map(|(&a, c)| Term { a, b: a, c })
            .collect();
        let product = BilinearMap::new(3, 5, terms).unwrap();
        for x in 0..8u64 {
            for y in 0..8u64 {
                assert_eq!(product.apply(x, y), crate::gf2k::clmul64(x, y));
            }
        }
        let f4 = FieldSpec::canonical(2).unwrap();
        let outer = TowerAlgorithm::lift_polynomial_product(f4, &product).unwrap();
        assert!(outer.verify_random(200));
        let alg = compose(&outer, &karatsuba2()).unwrap();
        assert_eq!(alg.rank(), 18);
        assert!(alg.field().is_canonical());
        assert!(alg.verify(VerifyMode::Exhaustive).unwrap());
    }

    #[test]
    fn field_mismatch_rejected() {
        let f16 = FieldSpec::canonical(4).unwrap();
        assert!(matches!(
            compose(&TowerAlgorithm::identity(f16), &karatsuba2()),
            Err(Error::FieldMismatch(_))
        ));
    }

    #[test]
    fn invert_roundtrip() {
        let cols = vec![0b011, 0b110, 0b001];
        let inv = invert(&cols).unwrap();
        for v in 0..8 {
            assert_eq!(apply_cols(&inv, apply_cols(&cols, v)), v);
        }
        assert!(invert(&[0b01, 0b01]).is_none());
    }
}
