use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::step::{delta_lower, genus_info, n0_lower, select_step, GenusInfo, TowerStep};
use crate::error::{Error, Result};

pub type Rational = Ratio<i128>;

fn r(n: i128, d: i128) -> Rational {
    Rational::new(n, d)
}

fn int(n: i128) -> Rational {
    Rational::from_integer(n)
}

/// `(9/2)(n + g + 5) + 9 l4`.
pub fn bound_generic(n: i128, g: i128, l4: i128) -> Rational {
    r(9, 2) * int(n + g + 5) + int(9 * l4)
}

/// Slope of [`bound_simple`].
pub fn m2_simple() -> Rational {
    r(45, 2)
}

/// Slope of [`bound_derivative`].
pub fn m2_derivative() -> Rational {
    r(477, 26)
}

/// `(45/2) n + 171/2`, without derivative evaluations.
pub fn bound_simple(n: i128) -> Rational {
    m2_simple() * int(n) + r(171, 2)
}

/// `(477/26) n + 45/2`, with derivative evaluations.
pub fn bound_derivative(n: i128) -> Rational {
    m2_derivative() * int(n) + r(45, 2)
}

/// Piecewise-linear cost of using step `(k, s)` or its successor for extension degree `x`.
///
/// Slope 9 while `x - n0 + 2 < D` (derivative evaluations on the lower step),
/// slope 9/2 afterwards (the next step).
pub fn phi(x: Rational, n0: i128, g_ks: i128, dg: i128, d: i128) -> Rational {
    let offset = x - int(n0);
    if offset + int(2) < int(d) {
        int(9) * offset + r(9, 2) * int(n0 + g_ks + 5) + int(9)
    } else {
        r(9, 2) * offset + r(9, 2) * int(n0 + g_ks + 5 + dg)
    }
}

/// `n0 = floor((M - 2g - 7) / 2)` from a place sum `M` and genus `g`.
pub fn n0_from_counts(place_sum: i128, genus: i128) -> i128 {
    (place_sum - 2 * genus - 7).div_euclid(2)
}

/// Place sums `N1 + 2 N2 + 4 N4` for the four tabulated steps as published.
pub fn table_place_sum(step: TowerStep) -> Option<i128> {
    match (step.k, step.s) {
        (1, 0) => Some(3 + 2 + 4 * 3),
        (1, 1) => Some(3 + 2 + 4 * 7),
        (2, 0) | (1, 2) => Some(3 + 2 + 4 * 15),
        (2, 1) => Some(4 + 2 + 4 * 28),
        _ => None,
    }
}

/// `n0` for a step: from the table where available, otherwise [`n0_lower`].
pub fn n0_value(step: TowerStep) -> Result<i128> {
    let step = step.densified();
    match table_place_sum(step) {
        Some(m) => {
            let g = genus_info(step)?.exact.expect("tabulated steps have exact genus");
            Ok(n0_from_counts(m, g))
        }
        None => Ok(n0_lower(step)),
    }
}

/// Vertex `X = n0 + D - 2` of the cost function at `(k, s)` and the ratio `g_{k,s+1} / X`.
pub fn vertex_ratio(step: TowerStep) -> Result<(Rational, Rational)> {
    let d = delta_lower(step)?;
    let x = n0_value(step)? + d - 2;
    let next = TowerStep {
        s: step.s + 1,
        ..step
    };
    let info = genus_info(next)?;
    let g_next = info.exact.unwrap_or(info.upper);
    if x <= 0 {
        return Err(Error::Unsupported(format!("vertex X = {x} at {step}")));
    }
    Ok((int(x), r(g_next, x)))
}

/// Arnaud's bound (i) constant: `mu_{q^2}(n) <= c n`.
pub fn arnaud_i(q: i128, p: i128) -> Rational {
    int(2) * (int(1) + int(p) / (int(q - 3) + int(p - 1) * (int(1) - r(1, q + 1))))
}

/// Arnaud's bound (ii) constant: `mu_q(n) <= c n`.
pub fn arnaud_ii(q: i128, p: i128) -> Rational {
    int(3) * (int(1) + int(2 * p) / (int(q - 3) + int(2 * (p - 1)) * (int(1) - r(1, q + 1))))
}

/// `(p, r)` with `q = p^r`, or `None` if `q` is not a prime power.
fn prime_power(q: i128) -> Option<(i128, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut e = 0;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

fn exact_sqrt(q: i128) -> Option<i128> {
    let s = (q as f64).sqrt().round() as i128;
    (s * s == q).then_some(s)
}

/// Linear constant `C_q` in `mu_q(n) <= C_q n`, first matching case wins.
pub fn c_q(q: i128) -> Option<Rational> {
    let (p, e) = prime_power(q)?;
    Some(match q {
        2 => int(54),
        3 => int(27),
        _ if e == 1 && q >= 5 => int(3) * (int(1) + r(4, q - 3)),
        _ if e == 2 && q >= 25 => int(2) * (int(1) + r(2, exact_sqrt(q)? - 3)),
        _ if e % 2 == 0 && q >= 16 => int(2) * (int(1) + r(p, exact_sqrt(q)? - 3)),
        _ if q >= 16 => int(3) * (int(1) + r(2 * p, q - 3)),
        _ => int(6) * (int(1) + r(p, q - 3)),
    })
}

/// Earlier asymptotic constants, reproduced from their closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LegacyBounds {
    /// `mu_2(2) * (ii) at q = 4`.
    pub m2_composed: Rational,
    /// `mu_2(4) * (i) at q = 4`.
    pub m2_remark: Rational,
    pub c2: Rational,
    pub c3: Rational,
}

pub fn legacy_bounds() -> LegacyBounds {
    LegacyBounds {
        m2_composed: int(3) * arnaud_ii(4, 2),
        m2_remark: int(9) * arnaud_i(4, 2),
        c2: c_q(2).expect("prime"),
        c3: c_q(3).expect("prime"),
    }
}

/// Exact rational as `{"decimal", "den", "num"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    pub decimal: String,
    pub den: i128,
    pub num: i128,
}

impl From<Rational> for RationalJson {
    fn from(v: Rational) -> Self {
        Self {
            decimal: decimal(v, 6),
            den: *v.denom(),
            num: *v.numer(),
        }
    }
}

/// Decimal rendering rounded half away from zero to `places` digits, trailing zeros trimmed.
pub fn decimal(v: Rational, places: u32) -> String {
    let scale = 10i128.pow(places);
    let scaled = v * int(scale);
    let rounded = scaled.round().to_integer();
    let sign = if rounded < 0 { "-" } else { "" };
    let a = rounded.abs();
    let (whole, frac) = (a / scale, a % scale);
    if frac == 0 {
        return format!("{sign}{whole}");
    }
    let digits = format!("{frac:0width$}", width = places as usize);
    format!("{sign}{whole}.{}", digits.trim_end_matches('0'))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    pub k: u32,
    pub label: String,
    pub s: u32,
}

impl From<TowerStep> for StepJson {
    fn from(s: TowerStep) -> Self {
        Self {
            k: s.k,
            label: s.label(),
            s: s.s,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LegacyJson {
    pub arnaud_composed: RationalJson,
    pub arnaud_remark: RationalJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AsymptoticJson {
    #[serde(rename = "M2_derivative")]
    pub m2_derivative: RationalJson,
    #[serde(rename = "M2_simple")]
    pub m2_simple: RationalJson,
}

/// Every bound evaluated at one `n`; field order is alphabetical.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub asymptotic_constants: AsymptoticJson,
    pub derivative_bound: RationalJson,
    pub genus: GenusInfo,
    pub legacy_bounds: LegacyJson,
    pub n: u64,
    pub selected_step: StepJson,
    pub simple_bound: RationalJson,
}

pub fn bound_report(n: u64) -> Result<BoundReport> {
    let step = select_step(n)?;
    let info = genus_info(step)?;
    let legacy = legacy_bounds();
    let ni = n as i128;
    Ok(BoundReport {
        asymptotic_constants: AsymptoticJson {
            m2_derivative: m2_derivative().into(),
            m2_simple: m2_simple().into(),
        },
        derivative_bound: bound_derivative(ni).into(),
        genus: info,
        legacy_bounds: LegacyJson {
            arnaud_composed: (legacy.m2_composed * int(ni)).into(),
            arnaud_remark: (legacy.m2_remark * int(ni)).into(),
        },
        n,
        selected_step: step.into(),
        simple_bound: bound_simple(ni).into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_values() {
        assert_eq!(bound_generic(2, 0, 0), r(63, 2));
        assert_eq!(bound_generic(7, 3, 1) - bound_generic(7, 3, 0), int(9));
        assert_eq!(bound_generic(10, 6, 0), r(189, 2));
        assert_eq!(bound_simple(2), r(261, 2));
        assert_eq!(bound_simple(100), r(4671, 2));
        assert_eq!(bound_derivative(26), r(999, 2));
    }

    #[test]
    fn legacy_values() {
        let l = legacy_bounds();
        assert_eq!(l.m2_composed, r(297, 13));
        assert_eq!(l.m2_remark, int(38));
        assert_eq!(l.c2, int(54));
        assert_eq!(l.c3, int(27));
        assert_eq!(c_q(5), Some(int(9)));
        assert_eq!(c_q(6), None);
        assert_eq!(c_q(25), Some(int(4)));
        assert_eq!(c_q(16), Some(int(6)));
        assert_eq!(c_q(4), Some(int(18)));
    }

    #[test]
    fn phi_branches() {
        let (n0, g, dg, d) = (23, 6, 17, 8);
        assert_eq!(phi(int(n0), n0, g, dg, d), r(9, 2) * int(n0 + g + 5) + int(9));
        let x = int(n0 + d - 2);
        assert_eq!(phi(x, n0, g, dg, d), r(9, 2) * (x + int(g + dg + 5)));
    }

    #[test]
    fn table_n0() {
        let st = |k, s| TowerStep::new(k, s).unwrap();
        let got: Vec<i128> = [st(1, 0), st(1, 1), st(2, 0), st(2, 1)]
            .into_iter()
            .map(|s| n0_value(s).unwrap())
            .collect();
        assert_eq!(got, [5, 11, 23, 32]);
    }

    #[test]
    fn decimals() {
        assert_eq!(decimal(r(999, 2), 6), "499.5");
        assert_eq!(decimal(r(477, 26), 6), "18.346154");
        assert_eq!(decimal(int(38), 6), "38");
        assert_eq!(decimal(r(-1, 3), 3), "-0.333");
    }

    #[test]
    fn report_json_keys_sorted() {
        let v = serde_json::to_value(bound_report(26).unwrap()).unwrap();
        assert_eq!(v["derivative_bound"]["num"], 999);
        assert_eq!(v["derivative_bound"]["den"], 2);
        let s = serde_json::to_string(&bound_report(26).unwrap()).unwrap();
        let reparsed: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(serde_json::to_string(&reparsed).unwrap(), s);
    }
}
