//! Milnor numbers by several routes, the Newton number of a convenient
//! three-variable polynomial, and two elementary inequalities on weights.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::exponent::ExponentVector;
use crate::algebra::polynomial::Polynomial;
use crate::algebra::rational::{fmt_rational, Rational};
use crate::algebra::weight::Weight;
use crate::error::{Error, Result};
use crate::groebner::{
    count_standard_below, groebner_with_budget, leading_truncated_mod_p,
    local_standard_basis_truncated, local_standard_basis_with_budget, quotient_dimension, Budget,
    MonomialOrder, QuotientDim,
};
use crate::lp::min_weight_sum;
use crate::newton::polyhedron::NewtonPolyhedron;

/// `prod_i (1/alpha_i - 1)`, required to be a positive integer.
pub fn milnor_orlik(alpha: &Weight) -> Result<u64> {
    let prod = alpha.entries().iter().fold(Rational::one(), |acc, a| {
        acc * (a.recip() - Rational::one())
    });
    if !prod.is_integer() || !prod.is_positive() {
        return Err(Error::NonIntegerMilnor(fmt_rational(&prod)));
    }
    prod.to_integer()
        .to_u64()
        .ok_or_else(|| Error::NonIntegerMilnor(fmt_rational(&prod)))
}

pub fn jacobian(f: &Polynomial) -> Vec<Polynomial> {
    (0..f.nvars()).map(|i| f.partial_derivative(i)).collect()
}

/// A positive weight adapted to the Newton boundary of `f`, used to pick a
/// local order under which standard bases stay small.
pub fn adapted_weight(f: &Polynomial) -> Option<Weight> {
    let r = min_weight_sum(&f.support(), f.nvars());
    let w = r.weight?;
    if w.iter().all(|a| a.is_positive()) {
        Weight::new(w).ok()
    } else {
        None
    }
}

/// Local Milnor number at the origin via a Mora standard basis of the
/// Jacobian ideal.
pub fn milnor_from_basis(f: &Polynomial) -> Result<QuotientDim> {
    milnor_from_basis_with(f, None, &mut Budget::default())
}

pub fn milnor_from_basis_with(
    f: &Polynomial,
    alpha: Option<&Weight>,
    budget: &mut Budget,
) -> Result<QuotientDim> {
    if !f.constant_term().is_zero() {
        return Err(Error::InvalidInput(
            "polynomial must vanish at the origin".into(),
        ));
    }
    let weights = match alpha.cloned().or_else(|| adapted_weight(f)) {
        Some(w) => MonomialOrder::weights_of(&w),
        None => vec![1; f.nvars()],
    };
    let order = MonomialOrder::NegWeightedRevLex(weights.clone());
    let jac = jacobian(f);
    if let Some(mu) = truncated_milnor(&jac, &order, &weights, budget)? {
        return Ok(QuotientDim::Finite(mu));
    }
    let sb = local_standard_basis_with_budget(&jac, &order, budget)?;
    Ok(quotient_dimension(&sb))
}

const TRUNCATION_CAP: u64 = 50_000;

/// Local quotient dimension from standard bases modulo `I_s`, the monomials
/// of degree `>= s`. If `J + I_s = J + I_{s+m}` with `m` the largest weight,
/// then `I_s` lies in `J + m I_s`, so `I_s` is in `J` by Nakayama.
fn truncated_milnor(
    jac: &[Polynomial],
    order: &MonomialOrder,
    weights: &[u64],
    budget: &mut Budget,
) -> Result<Option<u64>> {
    stabilized_count(jac, order, weights, budget, |jac, order, bound, budget| {
        Ok(local_standard_basis_truncated(jac, order, bound, budget)?.leading)
    })
}

type LeadingFn = fn(&[Polynomial], &MonomialOrder, u64, &mut Budget) -> Result<Vec<ExponentVector>>;

fn stabilized_count(
    jac: &[Polynomial],
    order: &MonomialOrder,
    weights: &[u64],
    budget: &mut Budget,
    leading: LeadingFn,
) -> Result<Option<u64>> {
    let maxw = *weights.iter().max().unwrap_or(&1);
    let degree = jac
        .iter()
        .flat_map(|g| g.terms().map(|(e, _)| order.degree(e)))
        .max()
        .unwrap_or(1);
    let mut s = degree.max(maxw) + 1;
    loop {
        let upper = s + maxw;
        let lead = leading(jac, order, upper, budget)?;
        let (Some(lo), Some(hi)) = (
            count_standard_below(&lead, weights, s, TRUNCATION_CAP),
            count_standard_below(&lead, weights, upper, TRUNCATION_CAP),
        ) else {
            return Ok(None);
        };
        if lo == hi {
            return Ok(Some(lo));
        }
        s += (s / 2).max(maxw);
    }
}

/// Upper bound for the local Milnor number from a computation modulo a
/// large prime. The truncated Jacobian algebras are finitely generated
/// abelian groups, so their dimension mod `p` bounds their rank, and a
/// stabilized count mod `p` bounds every rational count from above.
/// `None` when the count does not stabilize below the enumeration cap.
pub fn milnor_upper_bound_mod_p(
    f: &Polynomial,
    alpha: Option<&Weight>,
    budget: &mut Budget,
) -> Result<Option<u64>> {
    if !f.constant_term().is_zero() {
        return Err(Error::InvalidInput(
            "polynomial must vanish at the origin".into(),
        ));
    }
    let weights = match alpha.cloned().or_else(|| adapted_weight(f)) {
        Some(w) => MonomialOrder::weights_of(&w),
        None => vec![1; f.nvars()],
    };
    let order = MonomialOrder::NegWeightedRevLex(weights.clone());
    stabilized_count(
        &jacobian(f),
        &order,
        &weights,
        budget,
        leading_truncated_mod_p,
    )
}

/// Global Jacobian quotient dimension (sum of Milnor numbers over all
/// critical points).
pub fn milnor_global(f: &Polynomial, budget: &mut Budget) -> Result<QuotientDim> {
    let gb = groebner_with_budget(&jacobian(f), &MonomialOrder::GrevLex, budget)?;
    Ok(quotient_dimension(&gb))
}

/// Newton number `3! V - 2! (S_1 + S_2 + S_3) + (J + K + L) - 1` of a
/// convenient polynomial in three variables.
pub fn newton_number_3d(f: &Polynomial) -> Result<i64> {
    if f.nvars() != 3 {
        return Err(Error::InvalidInput("three variables expected".into()));
    }
    let mut axis = [0i64; 3];
    for (i, slot) in axis.iter_mut().enumerate() {
        *slot = f
            .terms()
            .filter(|(e, _)| e.get(i) > 0 && (0..3).all(|j| j == i || e.get(j) == 0))
            .map(|(e, _)| e.get(i) as i64)
            .min()
            .ok_or_else(|| Error::InvalidInput("polynomial is not convenient".into()))?;
    }
    let np = NewtonPolyhedron::from_support(&f.support(), 3);
    let mut six_v: i64 = 0;
    for face in np.faces_of_dimension(2) {
        six_v += cone_volume_times_six(&face.vertices);
    }
    let mut two_s: i64 = 0;
    for drop in 0..3 {
        let keep: Vec<usize> = (0..3).filter(|&j| j != drop).collect();
        let pts: Vec<(i64, i64)> = f
            .terms()
            .filter(|(e, _)| e.get(drop) == 0)
            .map(|(e, _)| (e.get(keep[0]) as i64, e.get(keep[1]) as i64))
            .collect();
        two_s += polygon_area_times_two(&pts);
    }
    Ok(six_v - two_s + axis.iter().sum::<i64>() - 1)
}

/// Twice the area under the Newton polygon of planar points.
fn polygon_area_times_two(pts: &[(i64, i64)]) -> i64 {
    let as_u: Vec<(u64, u64)> = pts.iter().map(|&(a, b)| (a as u64, b as u64)).collect();
    let hull = crate::newton::ProjectedBoundary::from_points(as_u).vertices;
    hull.windows(2)
        .map(|w| {
            let (a, b) = (w[0], w[1]);
            (a.0 as i64 * b.1 as i64 - a.1 as i64 * b.0 as i64).abs()
        })
        .sum()
}

/// `3!` times the volume of the cone from the origin over a planar convex
/// polygon in `R^3`.
fn cone_volume_times_six(vertices: &[ExponentVector]) -> i64 {
    if vertices.len() < 3 {
        return 0;
    }
    let v: Vec<[i64; 3]> = vertices
        .iter()
        .map(|e| [e.get(0) as i64, e.get(1) as i64, e.get(2) as i64])
        .collect();
    let v0 = v[0];
    let sub = |a: [i64; 3], b: [i64; 3]| [a[0] - b[0], a[1] - b[1], a[2] - b[2]];
    let cross = |a: [i64; 3], b: [i64; 3]| {
        [
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ]
    };
    let dot = |a: [i64; 3], b: [i64; 3]| a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    // plane normal from the first non-degenerate triple
    let mut normal = [0i64; 3];
    'outer: for i in 1..v.len() {
        for j in i + 1..v.len() {
            let n = cross(sub(v[i], v0), sub(v[j], v0));
            if n != [0, 0, 0] {
                normal = n;
                break 'outer;
            }
        }
    }
    // angular order around v0, which is extreme in the polygon
    let mut rest: Vec<[i64; 3]> = v[1..].to_vec();
    rest.sort_by(|a, b| {
        let s = dot(cross(sub(*a, v0), sub(*b, v0)), normal);
        0i64.cmp(&s)
    });
    rest.windows(2)
        .map(|w| {
            let det = dot(v0, cross(w[0], w[1]));
            det.abs()
        })
        .sum()
}

/// `(j - 1)(k - 1)(l - 1)`.
pub fn milnor_lower_bound(j: &Rational, k: &Rational, l: &Rational) -> Rational {
    let one = Rational::one();
    (j - &one) * (k - &one) * (l - &one)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step3Report {
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
    /// `(c-1)(g'-g)(c(g+g')-1) / (g g' (1-c g)(1-c g'))` with `c = 1/(g+d)`;
    /// equals `rhs - lhs`.
    pub factored: Rational,
}

/// Compares `(1/g - 1)(1/d - 1)` with `(1/g' - 1)(1/d' - 1)` along the
/// line `g + d = g' + d'`.
///
/// Requires `0 < d' < d <= g < g' < 1`, `g + d = g' + d'` and `g + d < 1`.
pub fn step3_inequality(
    g: &Rational,
    d: &Rational,
    g2: &Rational,
    d2: &Rational,
) -> Result<Step3Report> {
    let zero = Rational::zero();
    let one = Rational::one();
    let ordered = &zero < d2 && d2 < d && d <= g && g < g2 && g2 < &one;
    if !ordered || g + d != g2 + d2 || g + d >= one {
        return Err(Error::InvalidInput(
            "need 0 < d' < d <= g < g' < 1, g + d = g' + d' and g + d < 1".into(),
        ));
    }
    let lhs = (g.recip() - &one) * (d.recip() - &one);
    let rhs = (g2.recip() - &one) * (d2.recip() - &one);
    let c = (g + d).recip();
    let factored = (&c - &one) * (g2 - g) * (&c * (g + g2) - &one)
        / (g * g2 * (&one - &c * g) * (&one - &c * g2));
    Ok(Step3Report {
        holds: lhs < rhs,
        lhs,
        rhs,
        factored,
    })
}

/// Milnor numbers of one polynomial by every applicable method.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MilnorReport {
    pub mu_orlik: Option<u64>,
    pub mu_basis: Option<QuotientDim>,
    pub newton_number: Option<i64>,
    pub agreement: bool,
    /// Set when the standard-basis computation ran out of budget.
    pub undecided: bool,
}

pub fn milnor_report(
    f: &Polynomial,
    alpha: Option<&Weight>,
    budget: &mut Budget,
) -> Result<MilnorReport> {
    let mu_orlik = match alpha {
        Some(a) => Some(milnor_orlik(a)?),
        None => None,
    };
    let (mu_basis, undecided) = match milnor_from_basis_with(f, alpha, budget) {
        Ok(d) => (Some(d), false),
        Err(Error::BudgetExhausted(_)) => (None, true),
        Err(e) => return Err(e),
    };
    let newton_number = if f.nvars() == 3 {
        newton_number_3d(f).ok()
    } else {
        None
    };
    let mut values: Vec<i128> = Vec::new();
    if let Some(m) = mu_orlik {
        values.push(m as i128);
    }
    if let Some(QuotientDim::Finite(m)) = mu_basis {
        values.push(m as i128);
    }
    if let Some(n) = newton_number {
        values.push(n as i128);
    }
    let agreement = !undecided
        && mu_basis != Some(QuotientDim::Infinite)
        && values.windows(2).all(|w| w[0] == w[1]);
    Ok(MilnorReport {
        mu_orlik,
        mu_basis,
        newton_number,
        agreement,
        undecided,
    })
}

/// Exact integer value of `r` when it is integral.
pub fn as_integer(r: &Rational) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn p4(s: &str) -> Polynomial {
        Polynomial::parse(4, s).unwrap()
    }

    fn p3(s: &str) -> Polynomial {
        Polynomial::parse(3, s).unwrap()
    }

    #[test]
    fn orlik_products() {
        assert_eq!(
            milnor_orlik(&Weight::from_ratios(&[(1, 2), (1, 3), (1, 12), (1, 12)]).unwrap())
                .unwrap(),
            242
        );
        assert_eq!(
            milnor_orlik(&Weight::from_ratios(&[(1, 2), (1, 3), (5, 54), (2, 27)]).unwrap())
                .unwrap(),
            245
        );
        assert_eq!(
            milnor_orlik(&Weight::from_ratios(&[(1, 2); 4]).unwrap()).unwrap(),
            1
        );
        assert!(milnor_orlik(&Weight::from_ratios(&[(2, 5), (1, 2)]).unwrap()).is_err());
    }

    #[test]
    fn basis_milnor() {
        assert_eq!(
            milnor_from_basis(&p4("x^2 + y^3 + z^9 + w^18")).unwrap(),
            QuotientDim::Finite(272)
        );
        assert_eq!(
            milnor_from_basis(&p4("x^2 + y^3 + z^11 + z*w^12")).unwrap(),
            QuotientDim::Finite(244)
        );
        assert_eq!(
            milnor_from_basis(&p4("x^2")).unwrap(),
            QuotientDim::Infinite
        );
    }

    #[test]
    fn newton_numbers() {
        assert_eq!(newton_number_3d(&p3("x^2 + y^3 + z^7")).unwrap(), 12);
        assert_eq!(newton_number_3d(&p3("x^2 + y^2 + z^2")).unwrap(), 1);
        assert_eq!(newton_number_3d(&p3("x^3 + y^9 + z^18")).unwrap(), 272);
        assert!(newton_number_3d(&p3("x^2 + y^3")).is_err());
    }

    #[test]
    fn lower_bound() {
        assert_eq!(milnor_lower_bound(&int(3), &int(10), &int(15)), int(252));
        assert_eq!(milnor_lower_bound(&int(1), &int(10), &int(15)), int(0));
    }

    #[test]
    fn step3_sample() {
        let r = step3_inequality(&rat(1, 4), &rat(1, 4), &rat(1, 3), &rat(1, 6)).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(9), int(10)));
        assert!(r.holds);
        assert_eq!(r.factored, &r.rhs - &r.lhs);
        assert!(step3_inequality(&rat(1, 4), &rat(1, 4), &rat(1, 4), &rat(1, 4)).is_err());
    }
}
