//! Dense two-phase simplex over the rationals with Bland's rule.
//!
//! Problems have the form `min c.x` subject to `<a_i, x> >= b_i` and
//! `x >= 0`. Every optimal answer carries dual multipliers and is re-checked
//! for primal feasibility, dual feasibility and a zero duality gap.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::exponent::ExponentVector;
use crate::algebra::rational::Rational;
use crate::json::{rat_vec, RatJson};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearProgram {
    pub objective: Vec<Rational>,
    pub constraints: Vec<(Vec<Rational>, Rational)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpResult {
    pub status: LpStatus,
    pub value: Option<Rational>,
    pub point: Option<Vec<Rational>>,
    /// Constraints holding with equality at `point`.
    pub active_set: Vec<usize>,
    pub duals: Option<Vec<Rational>>,
}

impl LpResult {
    fn without_solution(status: LpStatus) -> Self {
        LpResult {
            status,
            value: None,
            point: None,
            active_set: vec![],
            duals: None,
        }
    }
}

impl LinearProgram {
    pub fn new(objective: Vec<Rational>) -> Self {
        LinearProgram {
            objective,
            constraints: vec![],
        }
    }

    pub fn nvars(&self) -> usize {
        self.objective.len()
    }

    pub fn add_constraint(&mut self, a: Vec<Rational>, b: Rational) {
        assert_eq!(a.len(), self.nvars(), "constraint width");
        self.constraints.push((a, b));
    }

    pub fn is_feasible(&self, x: &[Rational]) -> bool {
        x.len() == self.nvars()
            && x.iter().all(|v| !v.is_negative())
            && self.constraints.iter().all(|(a, b)| dot(a, x) >= *b)
    }

    /// Primal feasibility, dual feasibility and equal objective values.
    pub fn verify_optimal(&self, x: &[Rational], y: &[Rational]) -> bool {
        if !self.is_feasible(x)
            || y.len() != self.constraints.len()
            || y.iter().any(|v| v.is_negative())
        {
            return false;
        }
        for j in 0..self.nvars() {
            let col: Rational = self
                .constraints
                .iter()
                .zip(y)
                .map(|((a, _), yi)| &a[j] * yi)
                .sum();
            if col > self.objective[j] {
                return false;
            }
        }
        let dual_value: Rational = self
            .constraints
            .iter()
            .zip(y)
            .map(|((_, b), yi)| b * yi)
            .sum();
        dual_value == dot(&self.objective, x)
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(u, v)| u * v).sum()
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    obj: Vec<Rational>,
    obj_value: Rational,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        let inv = p.recip();
        for v in self.rows[r].iter_mut() {
            *v *= &inv;
        }
        self.rhs[r] *= &inv;
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r {
                continue;
            }
            let f = self.rows[i][c].clone();
            if f.is_zero() {
                continue;
            }
            for (v, pv) in self.rows[i].iter_mut().zip(&prow) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
            self.rhs[i] -= &f * &prhs;
        }
        let f = self.obj[c].clone();
        if !f.is_zero() {
            for (v, pv) in self.obj.iter_mut().zip(&prow) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
            self.obj_value -= &f * &prhs;
        }
        self.basis[r] = c;
    }

    fn set_objective(&mut self, cost: &[Rational]) {
        self.obj = cost.to_vec();
        self.obj_value = Rational::zero();
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = cost[b].clone();
            if cb.is_zero() {
                continue;
            }
            for (v, t) in self.obj.iter_mut().zip(&self.rows[i]) {
                *v -= &cb * t;
            }
            self.obj_value -= &cb * &self.rhs[i];
        }
    }

    /// Runs to optimality; `false` when unbounded.
    fn optimize(&mut self, enterable: usize) -> bool {
        loop {
            let Some(c) = (0..enterable).find(|&j| self.obj[j].is_negative()) else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                best = match best {
                    None => Some((i, ratio)),
                    Some((bi, br)) => {
                        if ratio < br || (ratio == br && self.basis[i] < self.basis[bi]) {
                            Some((i, ratio))
                        } else {
                            Some((bi, br))
                        }
                    }
                };
            }
            match best {
                None => return false,
                Some((r, _)) => self.pivot(r, c),
            }
        }
    }
}

/// Exact minimization with Bland's anti-cycling rule.
pub fn simplex_min(lp: &LinearProgram) -> LpResult {
    let n = lp.nvars();
    let m = lp.constraints.len();
    if m == 0 {
        if lp.objective.iter().any(|c| c.is_negative()) {
            return LpResult::without_solution(LpStatus::Unbounded);
        }
        return LpResult {
            status: LpStatus::Optimal,
            value: Some(Rational::zero()),
            point: Some(vec![Rational::zero(); n]),
            active_set: vec![],
            duals: Some(vec![]),
        };
    }
    // columns: x (n), surplus (m), artificial (m)
    let width = n + 2 * m;
    let mut signs = Vec::with_capacity(m);
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for (i, (a, b)) in lp.constraints.iter().enumerate() {
        let s = if b.is_negative() {
            -Rational::one()
        } else {
            Rational::one()
        };
        let mut row = vec![Rational::zero(); width];
        for j in 0..n {
            row[j] = &a[j] * &s;
        }
        row[n + i] = -s.clone();
        row[n + m + i] = Rational::one();
        rows.push(row);
        rhs.push(b * &s);
        signs.push(s);
    }
    let mut t = Tableau {
        rows,
        rhs,
        obj: vec![],
        obj_value: Rational::zero(),
        basis: (n + m..n + 2 * m).collect(),
    };

    let mut phase1 = vec![Rational::zero(); width];
    for v in phase1.iter_mut().skip(n + m) {
        *v = Rational::one();
    }
    t.set_objective(&phase1);
    t.optimize(n + m);
    if !t.obj_value.is_zero() {
        return LpResult::without_solution(LpStatus::Infeasible);
    }
    for r in 0..m {
        if t.basis[r] >= n + m {
            if let Some(c) = (0..n + m).find(|&j| !t.rows[r][j].is_zero()) {
                t.pivot(r, c);
            }
        }
    }

    let mut cost = vec![Rational::zero(); width];
    cost[..n].clone_from_slice(&lp.objective);
    t.set_objective(&cost);
    if !t.optimize(n + m) {
        return LpResult::without_solution(LpStatus::Unbounded);
    }

    let mut x = vec![Rational::zero(); n];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < n {
            x[b] = t.rhs[i].clone();
        }
    }
    let duals: Vec<Rational> = (0..m).map(|i| -&t.obj[n + m + i] * &signs[i]).collect();
    let value = dot(&lp.objective, &x);
    assert!(
        lp.verify_optimal(&x, &duals),
        "simplex certificate failed exact re-check"
    );
    let active_set = lp
        .constraints
        .iter()
        .enumerate()
        .filter(|(_, (a, b))| dot(a, &x) == *b)
        .map(|(i, _)| i)
        .collect();
    LpResult {
        status: LpStatus::Optimal,
        value: Some(value),
        point: Some(x),
        active_set,
        duals: Some(duals),
    }
}

/// Minimal weight sum over a support, with interiority information.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSumResult {
    pub lp: LpResult,
    /// Some optimal weight has every entry strictly positive.
    pub interior_optimum: bool,
    /// Some optimal weight has a zero entry.
    pub boundary_optimum: bool,
    /// An optimal weight, strictly positive whenever `interior_optimum`.
    pub weight: Option<Vec<Rational>>,
}

impl WeightSumResult {
    pub fn value(&self) -> Option<&Rational> {
        self.lp.value.as_ref()
    }
}

/// `min sum(alpha)` subject to `<alpha, nu> >= 1` for every `nu` in the
/// support and `alpha >= 0`.
///
/// When some variable occurs in no monomial the weight on that coordinate
/// is not pinned down by the support and the status is `unbounded`.
pub fn min_weight_sum(support: &[ExponentVector], nvars: usize) -> WeightSumResult {
    let unbounded = WeightSumResult {
        lp: LpResult::without_solution(LpStatus::Unbounded),
        interior_optimum: false,
        boundary_optimum: false,
        weight: None,
    };
    if support.is_empty() || (0..nvars).any(|i| support.iter().all(|e| e.get(i) == 0)) {
        return unbounded;
    }
    let mut lp = LinearProgram::new(vec![Rational::one(); nvars]);
    for e in support {
        lp.add_constraint(exp_row(e, nvars), Rational::one());
    }
    let res = simplex_min(&lp);
    if res.status != LpStatus::Optimal {
        return WeightSumResult {
            lp: res,
            interior_optimum: false,
            boundary_optimum: false,
            weight: None,
        };
    }
    let v = res.value.clone().unwrap();
    let vertex = res.point.clone().unwrap();

    // max t with alpha_i >= t on the optimal face
    let mut lp2 = LinearProgram::new({
        let mut c = vec![Rational::zero(); nvars + 1];
        c[nvars] = -Rational::one();
        c
    });
    for e in support {
        let mut row = exp_row(e, nvars);
        row.push(Rational::zero());
        lp2.add_constraint(row, Rational::one());
    }
    for i in 0..nvars {
        let mut row = vec![Rational::zero(); nvars + 1];
        row[i] = Rational::one();
        row[nvars] = -Rational::one();
        lp2.add_constraint(row, Rational::zero());
    }
    let mut cap = vec![-Rational::one(); nvars];
    cap.push(Rational::zero());
    lp2.add_constraint(cap, -v.clone());
    let r2 = simplex_min(&lp2);
    let interior =
        r2.status == LpStatus::Optimal && r2.value.as_ref().is_some_and(|t| t.is_negative());

    // min alpha_i on the optimal face
    let mut boundary = vertex.iter().any(|a| a.is_zero());
    if !boundary {
        for i in 0..nvars {
            let mut c = vec![Rational::zero(); nvars];
            c[i] = Rational::one();
            let mut lp3 = LinearProgram::new(c);
            lp3.constraints = lp.constraints.clone();
            lp3.add_constraint(vec![-Rational::one(); nvars], -v.clone());
            if simplex_min(&lp3).value.is_some_and(|m| m.is_zero()) {
                boundary = true;
                break;
            }
        }
    }
    let weight = if vertex.iter().all(|a| a.is_positive()) || !interior {
        Some(vertex)
    } else {
        r2.point.map(|p| p[..nvars].to_vec())
    };
    WeightSumResult {
        lp: res,
        interior_optimum: interior,
        boundary_optimum: boundary,
        weight,
    }
}

fn exp_row(e: &ExponentVector, nvars: usize) -> Vec<Rational> {
    (0..nvars)
        .map(|i| Rational::from_integer(e.get(i).into()))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct LpJson {
    pub status: LpStatus,
    pub value: Option<RatJson>,
    pub point: Option<Vec<RatJson>>,
    pub interior_optimum: bool,
    pub boundary_optimum: bool,
}

impl From<&WeightSumResult> for LpJson {
    fn from(r: &WeightSumResult) -> Self {
        LpJson {
            status: r.lp.status,
            value: r.lp.value.as_ref().map(RatJson::from),
            point: r.weight.as_ref().map(|p| rat_vec(p)),
            interior_optimum: r.interior_optimum,
            boundary_optimum: r.boundary_optimum,
        }
    }
}
