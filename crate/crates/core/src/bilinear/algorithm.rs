use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2k::{BinaryPoly, FieldElement, FieldSpec};

/// Seed for randomized verification.
pub const VERIFY_SEED: u64 = 0x6766_3274_656e_736f;
/// Largest extension degree accepted for exhaustive verification.
pub const MAX_EXHAUSTIVE_N: usize = 12;

#[inline]
fn parity(v: u64) -> u64 {
    (v.count_ones() & 1) as u64
}

/// A rank-one summand `<a, x> <b, y> c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Term {
    pub a: u64,
    pub b: u64,
    pub c: u128,
}

/// An F2-bilinear map `F2^in x F2^in -> F2^out` given as a sum of rank-one terms.
///
/// Used for products that are not field multiplications: truncated products
/// modulo `t^2`, unreduced polynomial products, local residue products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearMap {
    in_bits: usize,
    out_bits: usize,
    terms: Vec<Term>,
}

impl BilinearMap {
    pub fn new(in_bits: usize, out_bits: usize, terms: Vec<Term>) -> Result<Self> {
        if in_bits == 0 || in_bits > 64 || out_bits == 0 || out_bits > 128 {
            return Err(Error::Malformed(format!(
                "bilinear map dimensions {in_bits} -> {out_bits}"
            )));
        }
        let in_mask = mask64(in_bits);
        let out_mask = mask128(out_bits);
        if terms
            .iter()
            .any(|t| t.a & !in_mask != 0 || t.b & !in_mask != 0 || t.c & !out_mask != 0)
        {
            return Err(Error::Malformed("term exceeds map dimensions".into()));
        }
        Ok(Self {
            in_bits,
            out_bits,
            terms,
        })
    }

    pub fn in_bits(&self) -> usize {
        self.in_bits
    }

    pub fn out_bits(&self) -> usize {
        self.out_bits
    }

    pub fn rank(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    #[inline]
    pub fn apply(&self, x: u64, y: u64) -> u128 {
        self.terms
            .iter()
            .filter(|t| parity(t.a & x) & parity(t.b & y) == 1)
            .fold(0, |acc, t| acc ^ t.c)
    }
}

pub(crate) fn mask64(bits: usize) -> u64 {
    if bits >= 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

pub(crate) fn mask128(bits: usize) -> u128 {
    if bits >= 128 {
        u128::MAX
    } else {
        (1u128 << bits) - 1
    }
}

/// Verification strategy for [`BilinearAlgorithm::verify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    /// All `2^(2n)` input pairs; requires `n <= 12`.
    Exhaustive,
    /// The given number of pairs drawn from a ChaCha8 stream seeded with [`VERIFY_SEED`].
    Random(u64),
}

/// A tensor decomposition `x*y = sum_l <a_l, x> <b_l, y> c_l` of multiplication
/// in a binary field `GF(2^n)`, `n <= 64`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearAlgorithm {
    field: FieldSpec,
    a: Vec<u64>,
    b: Vec<u64>,
    c: Vec<u64>,
}

impl BilinearAlgorithm {
    pub fn new(field: FieldSpec, a: Vec<u64>, b: Vec<u64>, c: Vec<u64>) -> Result<Self> {
        if a.len() != b.len() || a.len() != c.len() {
            return Err(Error::Malformed(format!(
                "form counts differ: {} a, {} b, {} c",
                a.len(),
                b.len(),
                c.len()
            )));
        }
        if a.is_empty() {
            return Err(Error::Malformed("rank must be at least 1".into()));
        }
        if a.iter().chain(&b).chain(&c).any(|&v| !field.contains(v)) {
            return Err(Error::Malformed(format!(
                "bit-vector longer than n = {}",
                field.degree()
            )));
        }
        Ok(Self { field, a, b, c })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.field.degree()
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    pub fn a_forms(&self) -> &[u64] {
        &self.a
    }

    pub fn b_forms(&self) -> &[u64] {
        &self.b
    }

    pub fn c_vecs(&self) -> &[u64] {
        &self.c
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, u64, u64)> + '_ {
        self.a
            .iter()
            .zip(&self.b)
            .zip(&self.c)
            .map(|((&a, &b), &c)| (a, b, c))
    }

    /// Same decomposition viewed as a plain bilinear map.
    pub fn as_map(&self) -> BilinearMap {
        BilinearMap {
            in_bits: self.n(),
            out_bits: self.n(),
            terms: self
                .terms()
                .map(|(a, b, c)| Term { a, b, c: c as u128 })
                .collect(),
        }
    }

    /// Evaluates on raw element words; exactly `rank` bit products are formed.
    #[inline]
    pub fn evaluate_raw(&self, x: u64, y: u64) -> u64 {
        let mut acc = 0;
        for (a, b, c) in self.terms() {
            acc ^= c & (parity(a & x) & parity(b & y)).wrapping_neg();
        }
        acc
    }

    pub fn evaluate(&self, x: &FieldElement, y: &FieldElement) -> Result<FieldElement> {
        for e in [x, y] {
            if e.spec() != &self.field {
                return Err(Error::FieldMismatch(format!(
                    "{:?} vs algorithm field {:?}",
                    e.spec(),
                    self.field
                )));
            }
        }
        self.field.element(self.evaluate_raw(x.value(), y.value()))
    }

    /// Checks the decomposition against field multiplication.
    pub fn verify(&self, mode: VerifyMode) -> Result<bool> {
        let n = self.n();
        let field = self.field;
        match mode {
            VerifyMode::Exhaustive => {
                if n > MAX_EXHAUSTIVE_N {
                    return Err(Error::ExhaustiveTooLarge(n));
                }
                let size = 1u64 << n;
                Ok((0..size).into_par_iter().all(|x| {
                    (0..size).all(|y| self.evaluate_raw(x, y) == field.mul(x, y))
                }))
            }
            VerifyMode::Random(count) => {
                let mask = field.mask();
                let mut rng = ChaCha8Rng::seed_from_u64(VERIFY_SEED);
                let pairs: Vec<(u64, u64)> = (0..count)
                    .map(|_| (rng.gen::<u64>() & mask, rng.gen::<u64>() & mask))
                    .collect();
                Ok(pairs
                    .par_iter()
                    .all(|&(x, y)| self.evaluate_raw(x, y) == field.mul(x, y)))
            }
        }
    }

    /// Exhaustive when `n <= 12`, otherwise the given number of random pairs.
    pub fn verify_default(&self, random_pairs: u64) -> Result<bool> {
        if self.n() <= MAX_EXHAUSTIVE_N {
            self.verify(VerifyMode::Exhaustive)
        } else {
            self.verify(VerifyMode::Random(random_pairs))
        }
    }

    pub fn to_json(&self) -> AlgorithmJson {
        let hex = |v: &u64| BinaryPoly::from_u64(*v).to_hex();
        AlgorithmJson {
            a: self.a.iter().map(hex).collect(),
            b: self.b.iter().map(hex).collect(),
            c: self.c.iter().map(hex).collect(),
            modulus: self.field.modulus().to_hex(),
            n: self.n(),
            rank: self.rank(),
        }
    }

    pub fn from_json(doc: &AlgorithmJson) -> Result<Self> {
        let modulus = BinaryPoly::from_hex(&doc.modulus)?;
        let field = FieldSpec::with_modulus(&modulus)?;
        if field.degree() != doc.n {
            return Err(Error::Malformed(format!(
                "n = {} but modulus has degree {}",
                doc.n,
                field.degree()
            )));
        }
        let parse = |v: &[String]| -> Result<Vec<u64>> {
            v.iter()
                .map(|s| {
                    BinaryPoly::from_hex(s)?
                        .to_u64()
                        .ok_or_else(|| Error::Malformed(format!("vector {s} too long")))
                })
                .collect()
        };
        let alg = Self::new(field, parse(&doc.a)?, parse(&doc.b)?, parse(&doc.c)?)?;
        if alg.rank() != doc.rank {
            return Err(Error::Malformed(format!(
                "rank field {} but {} terms",
                doc.rank,
                alg.rank()
            )));
        }
        Ok(alg)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("plain data serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let doc: AlgorithmJson =
            serde_json::from_str(s).map_err(|e| Error::Malformed(e.to_string()))?;
        Self::from_json(&doc)
    }
}

/// Wire form of a [`BilinearAlgorithm`]; field order is alphabetical.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgorithmJson {
    pub a: Vec<String>,
    pub b: Vec<String>,
    pub c: Vec<String>,
    pub modulus: String,
    pub n: usize,
    pub rank: usize,
}
