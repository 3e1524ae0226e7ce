use serde::{Deserialize, Serialize};

use super::place::{inventory, Place};
use crate::bilinear::RANK_BUDGET;
use crate::error::{Error, Result};

/// Largest `n` the genus-zero inventory can serve: capacity 34 >= 2n - 1.
pub const MAX_PLAN_N: usize = 17;

/// A place together with its evaluation multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    pub place: Place,
    pub u: usize,
}

impl Assignment {
    pub fn capacity(&self) -> usize {
        self.u * self.place.degree()
    }

    pub fn cost(&self) -> usize {
        RANK_BUDGET
            .cost(self.place.degree(), self.u)
            .expect("inventory degrees and u <= 2")
    }
}

/// Places of each degree and how many of them carry `u = 2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaceTally {
    #[serde(rename = "N1")]
    pub n1: usize,
    #[serde(rename = "N2")]
    pub n2: usize,
    #[serde(rename = "N4")]
    pub n4: usize,
    pub l1: usize,
    pub l2: usize,
    pub l4: usize,
}

impl PlaceTally {
    /// `N1 + 2 l1 + 3 N2 + 6 l2 + 9 (N4 + 2 l4)`.
    pub fn rank_formula(&self) -> usize {
        self.n1 + 2 * self.l1 + 3 * self.n2 + 6 * self.l2 + 9 * (self.n4 + 2 * self.l4)
    }
}

/// Evaluation places chosen for `GF(2^n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvaluationPlan {
    n: usize,
    assignments: Vec<Assignment>,
}

impl EvaluationPlan {
    pub fn new(n: usize, assignments: Vec<Assignment>) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange {
                what: "n",
                value: 0,
                min: 1,
                max: MAX_PLAN_N as i64,
            });
        }
        for (i, a) in assignments.iter().enumerate() {
            if !(1..=2).contains(&a.u) {
                return Err(Error::Unsupported(format!("multiplicity {} at {}", a.u, a.place)));
            }
            if let Place::Finite(p) = &a.place {
                Place::finite(p.clone())?;
            }
            if assignments[..i].iter().any(|b| b.place == a.place) {
                return Err(Error::Malformed(format!("place {} repeated", a.place)));
            }
        }
        let plan = Self { n, assignments };
        if plan.capacity() < 2 * n - 1 {
            return Err(Error::Malformed(format!(
                "capacity {} below 2n - 1 = {}",
                plan.capacity(),
                2 * n - 1
            )));
        }
        Ok(plan)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn assignments(&self) -> &[Assignment] {
        &self.assignments
    }

    /// Degree bound `2n - 2` of the products being interpolated.
    pub fn product_degree_bound(&self) -> usize {
        2 * self.n - 2
    }

    pub fn capacity(&self) -> usize {
        self.assignments.iter().map(Assignment::capacity).sum()
    }

    pub fn cost(&self) -> usize {
        self.assignments.iter().map(Assignment::cost).sum()
    }

    pub fn tally(&self) -> PlaceTally {
        let mut t = PlaceTally::default();
        for a in &self.assignments {
            let doubled = (a.u == 2) as usize;
            match a.place.degree() {
                1 => {
                    t.n1 += 1;
                    t.l1 += doubled;
                }
                2 => {
                    t.n2 += 1;
                    t.l2 += doubled;
                }
                _ => {
                    t.n4 += 1;
                    t.l4 += doubled;
                }
            }
        }
        t
    }

    pub fn to_json(&self) -> PlanJson {
        PlanJson {
            assignments: self
                .assignments
                .iter()
                .map(|a| AssignmentJson {
                    degree: a.place.degree(),
                    place: a.place.label(),
                    u: a.u,
                })
                .collect(),
            counts: self.tally(),
            n: self.n,
            rank: self.cost(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssignmentJson {
    pub degree: usize,
    pub place: String,
    pub u: usize,
}

/// Wire form of an [`EvaluationPlan`]; field order is alphabetical.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanJson {
    pub assignments: Vec<AssignmentJson>,
    pub counts: PlaceTally,
    pub n: usize,
    pub rank: usize,
}

/// Cheapest plan for `GF(2^n)`, `1 <= n <= 17`, by exhaustive search over the
/// `3^7` multiplicity vectors on the inventory.
///
/// Ties go to the smaller capacity, then to the vector that is smallest when
/// read from the quartic places down to `x`.
pub fn plan_places(n: usize) -> Result<EvaluationPlan> {
    if !(1..=MAX_PLAN_N).contains(&n) {
        return Err(Error::OutOfRange {
            what: "plan n",
            value: n as i64,
            min: 1,
            max: MAX_PLAN_N as i64,
        });
    }
    let places = inventory();
    let degrees: Vec<usize> = places.iter().map(Place::degree).collect();
    let need = 2 * n - 1;
    let mut best: Option<((usize, usize, Vec<usize>), Vec<usize>)> = None;
    for code in 0..3usize.pow(places.len() as u32) {
        let us: Vec<usize> = (0..places.len())
            .map(|i| code / 3usize.pow(i as u32) % 3)
            .collect();
        let capacity: usize = us.iter().zip(&degrees).map(|(u, d)| u * d).sum();
        if capacity < need {
            continue;
        }
        let cost: usize = us
            .iter()
            .zip(&degrees)
            .filter(|(&u, _)| u > 0)
            .map(|(&u, &d)| RANK_BUDGET.cost(d, u).expect("u <= 2"))
            .sum();
        let key = (cost, capacity, us.iter().rev().copied().collect::<Vec<_>>());
        if best.as_ref().map_or(true, |(k, _)| key < *k) {
            best = Some((key, us));
        }
    }
    let (_, us) = best.expect("full inventory has capacity 34");
    let assignments = places
        .into_iter()
        .zip(us)
        .filter(|(_, u)| *u > 0)
        .map(|(place, u)| Assignment { place, u })
        .collect();
    EvaluationPlan::new(n, assignments)
}
