//! Singular loci of initial parts and the two rationality checks applied to
//! them: an isolated singularity, or a singular curve whose transversal
//! slices are rational double points.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::exponent::ExponentVector;
use crate::algebra::polynomial::Polynomial;
use crate::algebra::rational::{int, Rational};
use crate::algebra::univariate::UniPoly;
use crate::algebra::{W, X, Y, Z};
use crate::certifier::lemma::{lemma_3_2_check, SurfacePattern};
use crate::error::Result;
use crate::groebner::{
    groebner_with_budget, krull_dimension_of_leading, quotient_dimension, Budget, MonomialOrder,
    QuotientDim,
};
use crate::invariants::jacobian;

/// Dimension of `V(f, df/dx_0, ..., df/dx_n)`; `None` when it is empty.
pub fn singular_locus_dimension(f0: &Polynomial) -> Result<Option<usize>> {
    singular_locus_dimension_with(f0, &MonomialOrder::GrevLex, &mut Budget::default())
}

pub fn singular_locus_dimension_with(
    f0: &Polynomial,
    order: &MonomialOrder,
    budget: &mut Budget,
) -> Result<Option<usize>> {
    let mut gens = vec![f0.clone()];
    gens.extend(jacobian(f0));
    let gb = groebner_with_budget(&gens, order, budget)?;
    Ok(krull_dimension_of_leading(&gb))
}

/// What was established about an initial part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum InitialPartCheck {
    /// The global Jacobian algebra is finite, so the only singular point of
    /// the quasi-homogeneous initial part is the origin.
    Isolated { jacobian_quotient_dim: u64 },
    /// One-dimensional singular locus whose points away from the origin are
    /// all rational double points.
    CurveCase { charts: Vec<ChartReport> },
}

/// Rationality of the singular points in one chart of `Sing(f0) - {0}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartReport {
    pub chart: String,
    pub cut: String,
    pub empty: bool,
    pub cut_isolated: bool,
    /// No point of the chart has a slice of corank two with a cubic cone.
    pub only_a_d: bool,
    /// Patterns matched at the remaining rational points.
    pub surface_patterns: Vec<SurfacePattern>,
    pub passed: bool,
}

struct Chart {
    name: &'static str,
    /// Coordinates fixed on the points of the chart.
    fixed: &'static [(usize, i64)],
    /// Variable whose level set is the slice.
    cut: usize,
}

const CHARTS: [Chart; 3] = [
    Chart {
        name: "w=1",
        fixed: &[(W, 1)],
        cut: W,
    },
    Chart {
        name: "w=0,z=1",
        fixed: &[(W, 0), (Z, 1)],
        cut: Z,
    },
    Chart {
        name: "w=0,z=0,y=1",
        fixed: &[(W, 0), (Z, 0), (Y, 1)],
        cut: Y,
    },
];

/// Splits `f0 = c x^2 + h` with `h` free of `x`.
fn split_x(f0: &Polynomial) -> Option<Polynomial> {
    let h = f0.filter_terms(|e, _| e.get(X) == 0);
    let xpart = f0 - &h;
    let x2 = ExponentVector::unit(X).mul(&ExponentVector::unit(X));
    (xpart.len() == 1 && xpart.contains(&x2)).then_some(h)
}

/// Runs the isolated check and then, for a one-dimensional singular locus,
/// the chart checks. `None` when neither applies.
pub fn check_initial_part(
    f0: &Polynomial,
    order: &MonomialOrder,
    budget: &mut Budget,
) -> Result<Option<InitialPartCheck>> {
    let gb = groebner_with_budget(&jacobian(f0), order, budget)?;
    if let QuotientDim::Finite(n) = quotient_dimension(&gb) {
        return Ok(Some(InitialPartCheck::Isolated {
            jacobian_quotient_dim: n,
        }));
    }
    if singular_locus_dimension_with(f0, order, budget)? != Some(1) {
        return Ok(None);
    }
    let Some(h) = split_x(f0) else {
        return Ok(None);
    };
    let mut charts = Vec::new();
    for chart in &CHARTS {
        let r = check_chart(&h, chart, order, budget)?;
        let passed = r.passed;
        charts.push(r);
        if !passed {
            return Ok(None);
        }
    }
    Ok(Some(InitialPartCheck::CurveCase { charts }))
}

fn at_fixed(p: &Polynomial, fixed: &[(usize, i64)]) -> Polynomial {
    fixed
        .iter()
        .fold(p.clone(), |acc, &(v, c)| acc.evaluate_var(v, &int(c)))
}

fn is_unit(gens: &[Polynomial], order: &MonomialOrder, budget: &mut Budget) -> Result<bool> {
    if gens.iter().any(|g| g.is_constant() && !g.is_zero()) {
        return Ok(true);
    }
    let gens: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if gens.is_empty() {
        return Ok(false);
    }
    Ok(groebner_with_budget(&gens, order, budget)?.is_unit_ideal())
}

fn check_chart(
    h: &Polynomial,
    chart: &Chart,
    order: &MonomialOrder,
    budget: &mut Budget,
) -> Result<ChartReport> {
    let n = h.nvars();
    let [u, v]: [usize; 2] = [Y, Z, W]
        .into_iter()
        .filter(|&i| i != chart.cut)
        .collect::<Vec<_>>()
        .try_into()
        .expect("two slice variables");
    let killers: Vec<Polynomial> = std::iter::once(X)
        .chain(chart.fixed.iter().map(|&(i, _)| i))
        .map(|i| Polynomial::var(n, i))
        .collect();

    let mut sing: Vec<Polynomial> = vec![at_fixed(h, chart.fixed)];
    for i in [Y, Z, W] {
        sing.push(at_fixed(&h.partial_derivative(i), chart.fixed));
    }
    sing.extend(killers.iter().cloned());
    let mut report = ChartReport {
        chart: chart.name.into(),
        cut: crate::algebra::VAR_NAMES[chart.cut].into(),
        empty: false,
        cut_isolated: false,
        only_a_d: false,
        surface_patterns: vec![],
        passed: false,
    };
    if is_unit(&sing, order, budget)? {
        report.empty = true;
        report.passed = true;
        return Ok(report);
    }

    // the slice through the chart points is the level set of the cut variable
    let level = chart
        .fixed
        .iter()
        .find(|&&(i, _)| i == chart.cut)
        .map(|&(_, c)| c)
        .expect("cut variable is fixed");
    let on_slice = |p: &Polynomial| p.evaluate_var(chart.cut, &int(level));
    let hu = h.partial_derivative(u);
    let hv = h.partial_derivative(v);
    let slice_gens = vec![
        on_slice(h),
        on_slice(&hu),
        on_slice(&hv),
        Polynomial::var(n, X),
        Polynomial::var(n, chart.cut),
    ];
    let gb = groebner_with_budget(&slice_gens, order, budget)?;
    report.cut_isolated = matches!(quotient_dimension(&gb), QuotientDim::Finite(_));
    if !report.cut_isolated {
        return Ok(report);
    }

    let huu = hu.partial_derivative(u);
    let huv = hu.partial_derivative(v);
    let hvv = hv.partial_derivative(v);
    let t = [
        huu.partial_derivative(u),
        huu.partial_derivative(v),
        huv.partial_derivative(v),
        hvv.partial_derivative(v),
    ];
    // Hessian covariant of the cubic: zero exactly for perfect cubes
    let cov = [
        &(&t[0] * &t[2]) - &(&t[1] * &t[1]),
        &(&t[0] * &t[3]) - &(&t[1] * &t[2]),
        &(&t[1] * &t[3]) - &(&t[2] * &t[2]),
    ];
    let mut bad = sing.clone();
    for p in [&huu, &huv, &hvv].into_iter().chain(cov.iter()) {
        bad.push(at_fixed(p, chart.fixed));
    }
    if is_unit(&bad, order, budget)? {
        report.only_a_d = true;
        report.passed = true;
        return Ok(report);
    }

    // remaining points: try the surface patterns at rational points
    let Some(points) = rational_points(&bad, chart, order, budget)? else {
        return Ok(report);
    };
    for p in points {
        let germ = slice_germ(h, &p, chart.cut, u, v)?;
        match slice_pattern(&germ)? {
            Some(pat) => report.surface_patterns.push(pat),
            None => return Ok(report),
        }
    }
    report.passed = true;
    Ok(report)
}

/// Rational points of a zero-dimensional chart ideal, when the chart leaves
/// at most one coordinate free and every root is rational.
fn rational_points(
    gens: &[Polynomial],
    chart: &Chart,
    order: &MonomialOrder,
    budget: &mut Budget,
) -> Result<Option<Vec<[Rational; 4]>>> {
    let free: Vec<usize> = [Y, Z, W]
        .into_iter()
        .filter(|i| chart.fixed.iter().all(|&(j, _)| j != *i))
        .collect();
    let mut base = [
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
    ];
    for &(i, c) in chart.fixed {
        base[i] = int(c);
    }
    match free.as_slice() {
        [] => Ok(Some(vec![base])),
        [var] => {
            let gb = groebner_with_budget(gens, order, budget)?;
            let mut g: Option<UniPoly> = None;
            for p in &gb.generators {
                if (0..p.nvars()).any(|i| i != *var && p.involves(i)) {
                    continue;
                }
                let uni = UniPoly::new(
                    p.coefficients_in(*var)
                        .iter()
                        .map(|c| c.constant_term())
                        .collect(),
                );
                g = Some(match g {
                    None => uni,
                    Some(prev) => prev.gcd(&uni),
                });
            }
            let Some(g) = g else { return Ok(None) };
            let roots = g.rational_roots();
            // every root must be rational
            let square_free_deg: usize = g
                .square_free_decomposition()
                .iter()
                .map(|(_, p)| p.degree().unwrap_or(0))
                .sum();
            if g.is_zero() || square_free_deg != roots.len() {
                return Ok(None);
            }
            Ok(Some(
                roots
                    .into_iter()
                    .map(|(r, _)| {
                        let mut pt = base.clone();
                        pt[*var] = r;
                        pt
                    })
                    .collect(),
            ))
        }
        _ => Ok(None),
    }
}

/// `x^2 + h` near `p`, restricted to the slice through `p`, as a germ in
/// `(x, u, v)`.
fn slice_germ(
    h: &Polynomial,
    p: &[Rational; 4],
    cut: usize,
    u: usize,
    v: usize,
) -> Result<Polynomial> {
    let n = h.nvars();
    let mut g = h.clone();
    for i in [Y, Z, W] {
        if i == cut || p[i].is_zero() {
            continue;
        }
        let shifted = &Polynomial::var(n, i) + &Polynomial::constant(n, p[i].clone());
        g = g.substitute(i, &shifted)?;
    }
    let g = g.evaluate_var(cut, &p[cut]);
    let mut out = Polynomial::monomial(3, ExponentVector::new(&[2, 0, 0]), Rational::one());
    for (e, c) in g.terms() {
        out.add_term(ExponentVector::new(&[0, e.get(u), e.get(v)]), c.clone());
    }
    Ok(out)
}

/// Puts a corank-two germ with cubic cone `l^3` into coordinates with
/// `l = y` and matches the surface patterns.
fn slice_pattern(germ: &Polynomial) -> Result<Option<SurfacePattern>> {
    if !germ.constant_term().is_zero() {
        return Ok(None);
    }
    let cubic = germ.filter_terms(|e, _| e.get(0) == 0 && e.total_degree() == 3);
    let a = cubic.coeff(&ExponentVector::new(&[0, 3, 0]));
    let candidates: Vec<Polynomial> = if !a.is_zero() {
        let b = cubic.coeff(&ExponentVector::new(&[0, 2, 1]));
        let t = &b / (&a * int(3));
        // l = u + t v, so the new first slice coordinate is u + t v
        let shifted = &Polynomial::var(3, 1) - &Polynomial::var(3, 2).scale(&t);
        vec![germ.substitute(1, &shifted)?]
    } else {
        vec![germ.permute(&[0, 2, 1])]
    };
    for g in candidates {
        if let Ok(r) = lemma_3_2_check(&g) {
            if let Some(p) = r.pattern {
                return Ok(Some(p));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(4, s).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(
            singular_locus_dimension(&p("x^2 + y^3 + z^9 + w^18")).unwrap(),
            Some(0)
        );
        assert_eq!(
            singular_locus_dimension(&p("x^2 + y^3 - 9/2*z*w*y^2")).unwrap(),
            Some(2)
        );
        assert_eq!(
            singular_locus_dimension(&p("x^2 - 9/2*z^2*y^2 + w^5*y")).unwrap(),
            Some(1)
        );
        assert_eq!(singular_locus_dimension(&p("x + y^2")).unwrap(), None);
    }

    #[test]
    fn isolated_initial_part() {
        let r = check_initial_part(
            &p("x^2 + y^3 + z*w + w^12"),
            &MonomialOrder::GrevLex,
            &mut Budget::default(),
        )
        .unwrap();
        assert!(matches!(r, Some(InitialPartCheck::Isolated { .. })));
    }

    #[test]
    fn d_type_curve() {
        // singular along the z- and y-axes with D-type slices
        let f0 = p("x^2 - 9*z^2*w*y^2 - 3*w^4*y^2 + 3*z^3*w^8 + z*w^11 + z^5*w^5");
        let r = check_initial_part(&f0, &MonomialOrder::GrevLex, &mut Budget::default()).unwrap();
        let Some(InitialPartCheck::CurveCase { charts }) = r else {
            panic!("expected the curve case, got {r:?}");
        };
        assert!(charts.iter().all(|c| c.passed));
        assert!(!charts[1].empty && !charts[2].empty);
    }

    #[test]
    fn bad_curve_rejected() {
        // slices along the z-axis are y^3 + w^6, not a rational double point
        let f0 = p("x^2 + y^3 + w^6");
        let r = check_initial_part(&f0, &MonomialOrder::GrevLex, &mut Budget::default()).unwrap();
        assert_eq!(r, None);
    }

    #[test]
    fn e_type_curve_accepted() {
        let f0 = p("x^2 + y^3 + w^4");
        let r = check_initial_part(&f0, &MonomialOrder::GrevLex, &mut Budget::default()).unwrap();
        let Some(InitialPartCheck::CurveCase { charts }) = r else {
            panic!("expected the curve case, got {r:?}");
        };
        assert_eq!(charts[1].surface_patterns, vec![SurfacePattern::Two]);
    }
}
