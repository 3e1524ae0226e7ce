use super::place::Place;
use super::plan::EvaluationPlan;
use crate::error::{Error, Result};
use crate::gf2k::BinaryPoly;

/// Local data of a polynomial at one place: the value, and for `u = 2` the
/// next coefficient of the local expansion.
///
/// Values live in the residue field `F2[x]/(p)` as bit words.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Residue {
    pub value: u64,
    pub derivative: Option<u64>,
}

impl Residue {
    pub fn multiplicity(&self) -> usize {
        1 + self.derivative.is_some() as usize
    }

    /// `value | derivative << d`, the layout used by the truncated product.
    pub fn packed(&self, d: usize) -> u64 {
        self.value | self.derivative.unwrap_or(0) << d
    }

    pub fn from_packed(bits: u64, d: usize, u: usize) -> Self {
        let mask = (1u64 << d) - 1;
        Self {
            value: bits & mask,
            derivative: (u == 2).then_some(bits >> d & mask),
        }
    }
}

/// One [`Residue`] per plan assignment, in plan order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ResidueVector(pub Vec<Residue>);

/// Multiplicative section of `F2[x]/(p^2) -> F2[x]/(p)`: `r^(2^d) mod p^2`.
///
/// Lifting with it makes `f -> (f(P), f'(P))` a ring map onto `F_{2^d}[t]/(t^2)`,
/// which is what the truncated-product formula needs.
fn frobenius_lift(r: &BinaryPoly, p: &BinaryPoly) -> BinaryPoly {
    let p2 = p.square();
    let mut t = r.clone();
    for _ in 0..p.degree() {
        t = t.square().rem(&p2).expect("nonzero modulus");
    }
    t
}

fn word(p: &BinaryPoly) -> u64 {
    p.to_u64().expect("residue fits a word")
}

/// Local expansion of `f` at `place` to order `u`.
///
/// At infinity the expansion is read from the coefficients of `x^top` and
/// `x^(top-1)`, `top` being the degree bound of the space `f` lives in.
pub fn ev_place(f: &BinaryPoly, place: &Place, u: usize, top: usize) -> Result<Residue> {
    if !(1..=2).contains(&u) {
        return Err(Error::Unsupported(format!("multiplicity {u}")));
    }
    if f.degree() > top as i64 {
        return Err(Error::OutOfRange {
            what: "polynomial degree",
            value: f.degree(),
            min: 0,
            max: top as i64,
        });
    }
    match place {
        Place::Infinity => Ok(Residue {
            value: f.coeff(top) as u64,
            derivative: (u == 2).then(|| (top >= 1 && f.coeff(top - 1)) as u64),
        }),
        Place::Finite(p) => {
            let r = f.rem(p)?;
            let derivative = if u == 2 {
                let p2 = p.square();
                let diff = &f.rem(&p2)? + &frobenius_lift(&r, p);
                let (q, rest) = diff.divmod(p)?;
                debug_assert!(rest.is_zero());
                Some(word(&q))
            } else {
                None
            };
            Ok(Residue {
                value: word(&r),
                derivative,
            })
        }
    }
}

impl EvaluationPlan {
    /// Residues of a polynomial of degree at most `2n - 2`.
    pub fn evaluate(&self, f: &BinaryPoly) -> Result<ResidueVector> {
        let top = self.product_degree_bound();
        self.assignments()
            .iter()
            .map(|a| ev_place(f, &a.place, a.u, top))
            .collect::<Result<Vec<_>>>()
            .map(ResidueVector)
    }
}

/// Polynomial with the given residues and degree at most `2n - 2`.
pub fn reconstruct(plan: &EvaluationPlan, residues: &ResidueVector) -> Result<BinaryPoly> {
    let (h, slack_top) = interpolate(plan, residues)?;
    if h.degree() > slack_top {
        return Err(Error::InconsistentResidues(plan.product_degree_bound()));
    }
    let top = plan.product_degree_bound();
    let mut full = h;
    full += &infinity_part(plan, residues, top);
    Ok(full)
}

fn infinity_part(plan: &EvaluationPlan, residues: &ResidueVector, top: usize) -> BinaryPoly {
    let mut t = BinaryPoly::zero();
    for (a, r) in plan.assignments().iter().zip(&residues.0) {
        if a.place == Place::Infinity {
            t.set_coeff(top, r.value & 1 == 1);
            if let Some(v1) = r.derivative {
                if top >= 1 {
                    t.set_coeff(top - 1, v1 & 1 == 1);
                }
            }
        }
    }
    t
}

/// Linear interpolation without the image check: returns the finite-place part
/// and the degree it must not exceed for the residues to be consistent.
fn interpolate(plan: &EvaluationPlan, residues: &ResidueVector) -> Result<(BinaryPoly, i64)> {
    if residues.0.len() != plan.assignments().len()
        || plan
            .assignments()
            .iter()
            .zip(&residues.0)
            .any(|(a, r)| a.u != r.multiplicity())
    {
        return Err(Error::Malformed("residue arity does not match the plan".into()));
    }
    let top = plan.product_degree_bound();
    let t = infinity_part(plan, residues, top);
    let mut slack_top = top as i64;
    let mut moduli = Vec::new();
    let mut targets = Vec::new();
    for (a, r) in plan.assignments().iter().zip(&residues.0) {
        match &a.place {
            Place::Infinity => slack_top -= a.u as i64,
            Place::Finite(p) => {
                let v0 = BinaryPoly::from_u64(r.value);
                let (m, local) = match r.derivative {
                    None => (p.clone(), v0),
                    Some(v1) => {
                        let lifted = &frobenius_lift(&v0, p) + &(&BinaryPoly::from_u64(v1) * p);
                        (p.square(), lifted)
                    }
                };
                let target = &local + &t.rem(&m)?;
                moduli.push(m);
                targets.push(target);
            }
        }
    }
    Ok((crt(&moduli, &targets)?, slack_top.max(-1)))
}

/// `h` with `h = targets[i] mod moduli[i]` and `deg h < deg prod(moduli)`.
fn crt(moduli: &[BinaryPoly], targets: &[BinaryPoly]) -> Result<BinaryPoly> {
    let total = moduli.iter().fold(BinaryPoly::one(), |acc, m| &acc * m);
    let mut h = BinaryPoly::zero();
    for (m, r) in moduli.iter().zip(targets) {
        let (cofactor, _) = total.divmod(m)?;
        let inv = inverse_mod(&cofactor.rem(m)?, m)?;
        h += &(&(r * &inv).rem(m)? * &cofactor);
    }
    h.rem(&total)
}

/// Inverse modulo `m` by the extended Euclidean algorithm.
fn inverse_mod(a: &BinaryPoly, m: &BinaryPoly) -> Result<BinaryPoly> {
    let (mut r0, mut r1) = (m.clone(), a.rem(m)?);
    let (mut s0, mut s1) = (BinaryPoly::zero(), BinaryPoly::one());
    while !r1.is_zero() {
        let (q, r) = r0.divmod(&r1)?;
        let s = &s0 + &(&q * &s1);
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s);
    }
    if !r0.is_one() {
        return Err(Error::Malformed(format!("{a} is not invertible modulo {m}")));
    }
    s0.rem(m)
}

/// Linear reconstruction used for synthesis, where unit residue vectors need
/// not lie in the image.
pub(crate) fn interpolate_unchecked(plan: &EvaluationPlan, residues: &ResidueVector) -> Result<BinaryPoly> {
    let (h, _) = interpolate(plan, residues)?;
    Ok(&h + &infinity_part(plan, residues, plan.product_degree_bound()))
}
