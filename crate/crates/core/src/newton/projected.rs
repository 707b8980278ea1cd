use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::algebra::polynomial::Polynomial;
use crate::algebra::rational::{rat, Rational};
use crate::algebra::{W, X, Y, Z};
use crate::error::{Error, Result};
use crate::json::RatJson;

/// Lower-left hull of the projected point set in the `(z, w)` exponent plane.
///
/// Points are stored doubled so that the `3/2`-scaled points coming from
/// `y z^k w^l` stay integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectedBoundary {
    pub points: Vec<(u64, u64)>,
    pub vertices: Vec<(u64, u64)>,
    /// Ordered from the `w`-axis side to the `z`-axis side.
    pub edges: Vec<Edge>,
}

/// Compact edge `gamma Z + delta W = 1` from `(k1, l1)` to `(k0, l0)`, with
/// `k1 < k0` and `l1 > l0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub upper: (u64, u64),
    pub lower: (u64, u64),
    pub gamma: Rational,
    pub delta: Rational,
}

impl Edge {
    pub fn k1(&self) -> Rational {
        rat(self.upper.0 as i64, 2)
    }
    pub fn l1(&self) -> Rational {
        rat(self.upper.1 as i64, 2)
    }
    pub fn k0(&self) -> Rational {
        rat(self.lower.0 as i64, 2)
    }
    pub fn l0(&self) -> Rational {
        rat(self.lower.1 as i64, 2)
    }

    /// `k1 < 6` and `l0 < 6`.
    pub fn within_six(&self) -> bool {
        self.upper.0 < 12 && self.lower.1 < 12
    }

    /// `gamma / delta`.
    pub fn ratio(&self) -> Rational {
        &self.gamma / &self.delta
    }

    /// The segment meets the diagonal `Z = W`.
    pub fn meets_diagonal(&self) -> bool {
        self.upper.0 <= self.upper.1 && self.lower.0 >= self.lower.1
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EdgeJson {
    pub from: [RatJson; 2],
    pub to: [RatJson; 2],
    pub gamma: RatJson,
    pub delta: RatJson,
    pub within_six: bool,
}

impl From<&Edge> for EdgeJson {
    fn from(e: &Edge) -> Self {
        EdgeJson {
            from: [RatJson::from(&e.k1()), RatJson::from(&e.l1())],
            to: [RatJson::from(&e.k0()), RatJson::from(&e.l0())],
            gamma: RatJson::from(&e.gamma),
            delta: RatJson::from(&e.delta),
            within_six: e.within_six(),
        }
    }
}

impl ProjectedBoundary {
    pub fn has_compact_edge(&self) -> bool {
        !self.edges.is_empty()
    }

    pub fn from_points(mut points: Vec<(u64, u64)>) -> Self {
        points.sort();
        points.dedup();
        // Pareto-minimal points, increasing k and strictly decreasing l.
        let mut front: Vec<(u64, u64)> = Vec::new();
        for &p in &points {
            if front.last().is_none_or(|q| p.1 < q.1) {
                front.push(p);
            }
        }
        let mut hull: Vec<(u64, u64)> = Vec::new();
        for &p in &front {
            while hull.len() >= 2 {
                let a = hull[hull.len() - 2];
                let b = hull[hull.len() - 1];
                let cross = (b.0 as i128 - a.0 as i128) * (p.1 as i128 - a.1 as i128)
                    - (b.1 as i128 - a.1 as i128) * (p.0 as i128 - a.0 as i128);
                if cross <= 0 {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(p);
        }
        let edges = hull.windows(2).map(|w| edge_between(w[0], w[1])).collect();
        ProjectedBoundary {
            points,
            vertices: hull,
            edges,
        }
    }
}

fn edge_between(upper: (u64, u64), lower: (u64, u64)) -> Edge {
    let (k1, l1) = (BigInt::from(upper.0), BigInt::from(upper.1));
    let (k0, l0) = (BigInt::from(lower.0), BigInt::from(lower.1));
    let d = &k1 * &l0 - &l1 * &k0;
    // doubled coordinates: scale normals back by two
    let gamma = Rational::new(BigInt::from(2) * (&l0 - &l1), d.clone());
    let delta = Rational::new(BigInt::from(2) * (&k1 - &k0), d);
    Edge {
        upper,
        lower,
        gamma,
        delta,
    }
}

/// Doubled projected points of `f`.
///
/// With `allow_square`, `y^2 z^k w^l` terms contribute `3 (k, l)`.
pub(crate) fn lambda_points(f: &Polynomial, allow_square: bool) -> Result<Vec<(u64, u64)>> {
    let mut pts = Vec::new();
    for (e, _) in f.terms() {
        let (a, b, k, l) = (e.get(X), e.get(Y), e.get(Z) as u64, e.get(W) as u64);
        if (4..f.nvars()).any(|i| e.get(i) != 0) {
            return Err(Error::ShapeViolation("extra variables present".into()));
        }
        match (a, b) {
            (2, 0) if k == 0 && l == 0 => {}
            (0, 3) if k == 0 && l == 0 => {}
            (0, 0) => pts.push((2 * k, 2 * l)),
            (0, 1) => pts.push((3 * k, 3 * l)),
            (0, 2) if allow_square => pts.push((6 * k, 6 * l)),
            _ => {
                return Err(Error::ShapeViolation(format!(
                    "term with exponents {:?} is not of the form x^2, y^3, y z^k w^l or z^k w^l",
                    e.to_vec(f.nvars())
                )))
            }
        }
    }
    Ok(pts)
}

/// Projected boundary of `f = x^2 + y^3 + y B(z, w) + C(z, w)`.
pub fn projected_boundary(f: &Polynomial) -> Result<ProjectedBoundary> {
    if f.nvars() < 4 {
        return Err(Error::ShapeViolation("four variables required".into()));
    }
    let x2 = crate::algebra::ExponentVector::new(&[2, 0, 0, 0]);
    let y3 = crate::algebra::ExponentVector::new(&[0, 3, 0, 0]);
    if f.coeff(&x2).is_zero() || f.coeff(&y3).is_zero() {
        return Err(Error::ShapeViolation("x^2 and y^3 must both occur".into()));
    }
    Ok(ProjectedBoundary::from_points(lambda_points(f, false)?))
}

/// `gamma + delta > 1/6`.
pub fn face_weight_sum_check(gamma: &Rational, delta: &Rational) -> bool {
    gamma + delta > rat(1, 6)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(4, s).unwrap()
    }

    #[test]
    fn brieskorn_edge() {
        let b = projected_boundary(&p("x^2 + y^3 + z^9 + w^18")).unwrap();
        assert_eq!(b.points, vec![(0, 36), (18, 0)]);
        assert_eq!(b.edges.len(), 1);
        assert_eq!(b.edges[0].gamma, rat(1, 9));
        assert_eq!(b.edges[0].delta, rat(1, 18));
        assert!(!face_weight_sum_check(&b.edges[0].gamma, &b.edges[0].delta));
    }

    #[test]
    fn scaled_points_from_y_terms() {
        let b = projected_boundary(&p("x^2 + y^3 + y*z^7 + z^9*w^2 + w^14")).unwrap();
        assert!(b.points.contains(&(21, 0)));
        assert!(b.points.contains(&(18, 4)));
        assert!(b.points.contains(&(0, 28)));
        assert_eq!(b.edges.len(), 1);
        assert_eq!(b.edges[0].gamma, rat(2, 21));
        assert_eq!(b.edges[0].delta, rat(1, 14));
    }

    #[test]
    fn single_point_has_no_edge() {
        let b = projected_boundary(&p("x^2 + y^3 + z^6*w^6")).unwrap();
        assert!(!b.has_compact_edge());
        assert_eq!(b.vertices, vec![(12, 12)]);
    }

    #[test]
    fn shape_violation() {
        assert!(projected_boundary(&p("x^2 + y^3 + x*z^5")).is_err());
        assert!(projected_boundary(&p("x^2 + y^3 + y^2*z^5")).is_err());
    }

    #[test]
    fn sum_check_examples() {
        assert!(face_weight_sum_check(&rat(3, 25), &rat(2, 25)));
        assert!(!face_weight_sum_check(&rat(1, 12), &rat(1, 12)));
    }
}
