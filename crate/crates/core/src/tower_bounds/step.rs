use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Characteristic of the tower's constant field.
pub const P: i128 = 2;
/// `q = p^2`, the field the undescended tower lives over.
pub const Q: i128 = 4;
/// Largest `k` whose genus formulas fit comfortably in `i128`.
pub const MAX_K: u32 = 60;

fn pow(base: i128, e: u32) -> i128 {
    base.pow(e)
}

/// Step `H_{k,s}` of the descended tower; `(k, 2)` and `(k + 1, 0)` are the same field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TowerStep {
    pub k: u32,
    pub s: u32,
}

impl TowerStep {
    pub fn new(k: u32, s: u32) -> Result<Self> {
        if !(1..=MAX_K).contains(&k) {
            return Err(Error::OutOfRange {
                what: "tower level k",
                value: k as i64,
                min: 1,
                max: MAX_K as i64,
            });
        }
        if s > 2 {
            return Err(Error::OutOfRange {
                what: "tower sublevel s",
                value: s as i64,
                min: 0,
                max: 2,
            });
        }
        Ok(Self { k, s })
    }

    /// `(k, 2)` rewritten as `(k + 1, 0)`.
    pub fn densified(self) -> Self {
        if self.s == 2 {
            Self { k: self.k + 1, s: 0 }
        } else {
            self
        }
    }

    /// Short name used by the place-count table: `H1`, `H11`, `H2`, `H21`, ...
    pub fn label(&self) -> String {
        let d = self.densified();
        match d.s {
            0 => format!("H{}", d.k),
            _ => format!("H{}{}", d.k, d.s),
        }
    }
}

impl fmt::Display for TowerStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H_{{{},{}}}", self.k, self.s)
    }
}

/// Genus of `H_k = H_{k,0}` by the closed form over `q = 4`.
pub fn genus_exact(k: u32) -> Result<i128> {
    TowerStep::new(k, 0)?;
    let qk = pow(Q, k);
    let qk1 = pow(Q, k - 1);
    Ok(if k % 2 == 1 {
        qk + qk1 - pow(Q, (k + 1) / 2) - 2 * pow(Q, (k - 1) / 2) + 1
    } else {
        let h = k / 2;
        // (1/2) q^(h+1) + (3/2) q^h = q^h (q + 3) / 2
        qk + qk1 - pow(Q, h) * (Q + 3) / 2 - pow(Q, h - 1) + 1
    })
}

/// Genus values known exactly for `s = 1` (first two levels).
fn table_genus(step: TowerStep) -> Option<i128> {
    match (step.k, step.s) {
        (1, 1) => Some(2),
        (2, 1) => Some(23),
        _ => None,
    }
}

/// Minimum of the two closed-form upper bounds on `g_{k,s}`:
/// `q^(k-1) (q+1) p^s` and, for `k >= 2`, `(q^k (q+1) - q^(k/2) (q-1)) / p^(2-s)`.
pub fn genus_upper(step: TowerStep) -> i128 {
    let k = step.k;
    let iii = pow(Q, k - 1) * (Q + 1) * pow(P, step.s);
    if k < 2 {
        return iii;
    }
    // q^(k/2) = 2^k
    let iv = (pow(Q, k) * (Q + 1) - pow(P, k) * (Q - 1)).div_euclid(pow(P, 2 - step.s));
    iii.min(iv)
}

/// `D_{k,s} = p^(s+1) q^(k-1)`, a lower bound on `g_{k,s+1} - g_{k,s}`.
pub fn delta_lower(step: TowerStep) -> Result<i128> {
    if step.s > 1 {
        return Err(Error::OutOfRange {
            what: "delta sublevel s",
            value: step.s as i64,
            min: 0,
            max: 1,
        });
    }
    Ok(pow(P, step.s + 1) * pow(Q, step.k - 1))
}

/// Lower bound `(q^2 - 1) q^(k-1) p^s` on `N1 + 2 N2 + 4 N4`.
pub fn place_sum_lower(step: TowerStep) -> i128 {
    (Q * Q - 1) * pow(Q, step.k - 1) * pow(P, step.s)
}

/// `ceil((5/2) q^(k-1) - 7/2)`, a lower bound on `n0` at level `k`.
pub fn n0_lower(step: TowerStep) -> i128 {
    // ceil((5 q^(k-1) - 7) / 2)
    let num = 5 * pow(Q, step.k - 1) - 7;
    num.div_euclid(2) + num.rem_euclid(2)
}

/// Genus bracket for a step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusInfo {
    pub exact: Option<i128>,
    pub lower: i128,
    pub upper: i128,
}

/// Exact genus where known (`s` in {0, 2}, plus the two tabulated `s = 1`
/// steps), otherwise Hurwitz and gap lower bounds against [`genus_upper`].
pub fn genus_info(step: TowerStep) -> Result<GenusInfo> {
    let upper = genus_upper(step);
    let exact = match step.s {
        0 => Some(genus_exact(step.k)?),
        2 => Some(genus_exact(step.k + 1)?),
        _ => table_genus(step),
    };
    let lower = match step.s {
        1 => {
            let gk = genus_exact(step.k)?;
            let hurwitz = 2 * gk - 1;
            let gap = gk + delta_lower(TowerStep { s: 0, ..step })?;
            hurwitz.max(gap).max(0)
        }
        _ => exact.expect("closed form"),
    };
    Ok(GenusInfo {
        exact,
        lower,
        upper,
    })
}

/// Whether the place-count bounds certify a place of degree `n` on `step`:
/// `place_sum_lower >= 2n + 2 genus_upper + 7`.
pub fn certified(step: TowerStep, n: i128) -> bool {
    place_sum_lower(step) >= 2 * n + 2 * genus_upper(step) + 7
}

/// Admissible levels `[ceil(1/2 log2(4/5 (2n + 6))), floor((n - 12) / 4)]` for `n >= 28`.
pub fn k_interval(n: u64) -> (u32, u32) {
    let n = n as i128;
    // 1/2 log2(4/5 (2n+6)) <= k  <=>  5 * 4^k >= 4 (2n + 6)
    let mut lo = 0u32;
    while 5 * pow(Q, lo) < 4 * (2 * n + 6) {
        lo += 1;
    }
    let hi = (n - 12).div_euclid(4).max(0) as u32;
    (lo, hi)
}

/// Tower step used for `GF(2^n)`.
///
/// Small `n` follow the computed table (`H1` up to 5, `H11` up to 11, `H2` up
/// to 23, `H21` up to 27); larger `n` take the first certified step with `k`
/// in [`k_interval`].
pub fn select_step(n: u64) -> Result<TowerStep> {
    let table = |k, s| Ok(TowerStep { k, s });
    match n {
        0 | 1 => Err(Error::OutOfRange {
            what: "select_step n",
            value: n as i64,
            min: 2,
            max: i64::MAX,
        }),
        2..=5 => table(1, 0),
        6..=11 => table(1, 1),
        12..=23 => table(2, 0),
        24..=27 => table(2, 1),
        _ => {
            let (lo, hi) = k_interval(n);
            (lo.max(1)..=hi.min(MAX_K))
                .flat_map(|k| [0, 1].map(|s| TowerStep { k, s }))
                .find(|&st| certified(st, n as i128))
                .ok_or_else(|| {
                    Error::Unsupported(format!("no certified tower step for n = {n}"))
                })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(k: u32, s: u32) -> TowerStep {
        TowerStep::new(k, s).unwrap()
    }

    #[test]
    fn genus_values() {
        assert_eq!(genus_exact(1).unwrap(), 0);
        assert_eq!(genus_exact(2).unwrap(), 6);
        assert_eq!(genus_exact(3).unwrap(), 57);
        assert_eq!(genus_exact(4).unwrap(), 261);
        assert!(genus_exact(0).is_err());
    }

    #[test]
    fn upper_bounds() {
        assert_eq!(genus_upper(st(1, 1)), 10);
        assert_eq!(genus_upper(st(2, 1)), 34);
        assert!(genus_upper(st(2, 0)) >= 6);
    }

    #[test]
    fn deltas_and_counts() {
        assert_eq!(delta_lower(st(1, 0)).unwrap(), 2);
        assert_eq!(delta_lower(st(2, 0)).unwrap(), 8);
        assert_eq!(delta_lower(st(3, 1)).unwrap(), 64);
        assert!(delta_lower(st(1, 2)).is_err());
        assert_eq!(place_sum_lower(st(1, 0)), 15);
        assert_eq!(place_sum_lower(st(1, 1)), 30);
        assert_eq!(place_sum_lower(st(2, 1)), 120);
        let n0: Vec<i128> = (1..=3).map(|k| n0_lower(st(k, 0))).collect();
        assert_eq!(n0, [-1, 7, 37]);
    }

    #[test]
    fn genus_info_brackets() {
        for k in 1..=10 {
            for s in 0..=2 {
                let gi = genus_info(st(k, s)).unwrap();
                assert!(gi.lower <= gi.upper, "{k},{s}");
                if let Some(e) = gi.exact {
                    assert!(gi.lower <= e && e <= gi.upper, "{k},{s}");
                }
            }
        }
        assert_eq!(genus_info(st(2, 1)).unwrap().exact, Some(23));
    }

    #[test]
    fn table_steps() {
        for (range, k, s) in [(2..=5, 1, 0), (6..=11, 1, 1), (12..=23, 2, 0), (24..=27, 2, 1)] {
            for n in range {
                assert_eq!(select_step(n).unwrap(), st(k, s));
            }
        }
        assert!(select_step(1).is_err());
        assert_eq!(select_step(28).unwrap(), st(3, 0));
    }

    #[test]
    fn labels() {
        assert_eq!(st(1, 2).label(), "H2");
        assert_eq!(st(2, 1).label(), "H21");
        assert_eq!(st(1, 2).densified(), st(2, 0));
    }
}
