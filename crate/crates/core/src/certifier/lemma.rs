use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::exponent::ExponentVector;
use crate::algebra::factor::{double_factor, DoubleFactor};
use crate::algebra::polynomial::Polynomial;
use crate::error::{Error, Result};

/// Surface patterns `x^2 + beta y^3 + phi(z) y^2 + chi(z) y + psi(z)` known
/// to give rational double points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SurfacePattern {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "1'")]
    OnePrime,
    #[serde(rename = "2")]
    Two,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceReport {
    pub pattern: Option<SurfacePattern>,
    pub rational: bool,
}

/// Matches a germ in `(x, y, z)` against the three patterns. The match is
/// syntactic in the given coordinates; isolatedness is the caller's concern.
pub fn lemma_3_2_check(f: &Polynomial) -> Result<SurfaceReport> {
    if f.nvars() != 3 {
        return Err(Error::ShapeViolation("three variables required".into()));
    }
    if !f.constant_term().is_zero() {
        return Err(Error::ShapeViolation(
            "germ must vanish at the origin".into(),
        ));
    }
    if f.terms().any(|(e, _)| e.get(0) == 1) {
        return Err(Error::ShapeViolation(
            "terms linear in x are not allowed".into(),
        ));
    }
    if f.coeff(&ExponentVector::new(&[2, 0, 0])).is_zero() {
        return Err(Error::ShapeViolation(
            "the coefficient of x^2 must be a unit".into(),
        ));
    }
    let rest = f.filter_terms(|e, _| e.get(0) == 0);
    let beta = Polynomial::from_terms(
        3,
        rest.terms().filter(|(e, _)| e.get(1) >= 3).map(|(e, c)| {
            let mut e2 = *e;
            e2.set(1, e.get(1) - 3);
            (e2, c.clone())
        }),
    );
    let phi = rest.coefficient_in(1, 2);
    let chi = rest.coefficient_in(1, 1);
    let psi = rest.coefficient_in(1, 0);

    let beta0 = beta.constant_term();
    let ord_phi = phi.ord();
    let ord = |p: &Polynomial| p.ord().unwrap_or(u64::MAX);

    let no_triple = || -> Result<bool> {
        let y = Polynomial::var(3, 1);
        let cubic = &(&(&Polynomial::constant(3, beta0.clone()) * &y.pow(3))
            + &(&lowest(&phi) * &y.pow(2)))
            + &(&(&lowest(&chi) * &y) + &lowest(&psi));
        Ok(!matches!(
            double_factor(&cubic, 1)?,
            DoubleFactor::Triple { .. }
        ))
    };

    let pattern = if !beta0.is_zero() && ord_phi == Some(1) && no_triple()? {
        Some(SurfacePattern::One)
    } else if (beta.is_zero() || beta0.is_zero()) && ord_phi == Some(1) {
        Some(SurfacePattern::OnePrime)
    } else if !beta0.is_zero() && (ord(&chi) <= 3 || ord(&psi) <= 5) && no_triple()? {
        Some(SurfacePattern::Two)
    } else {
        None
    };
    Ok(SurfaceReport {
        pattern,
        rational: pattern.is_some(),
    })
}

/// Lowest-order homogeneous part.
fn lowest(p: &Polynomial) -> Polynomial {
    match p.ord() {
        Some(d) => p.filter_terms(|e, _| e.total_degree() == d),
        None => p.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(3, s).unwrap()
    }

    #[test]
    fn patterns() {
        let r = lemma_3_2_check(&p("x^2 + y^3 + z*y^2 + z^5")).unwrap();
        assert_eq!(r.pattern, Some(SurfacePattern::One));
        assert!(r.rational);
        let r = lemma_3_2_check(&p("x^2 + y^3 + z^7*y")).unwrap();
        assert_eq!(r.pattern, None);
        assert!(!r.rational);
        let r = lemma_3_2_check(&p("x^2 + z*y^2")).unwrap();
        assert_eq!(r.pattern, Some(SurfacePattern::OnePrime));
    }

    #[test]
    fn e_types_match_two() {
        for s in ["x^2 + y^3 + z^4", "x^2 + y^3 + y*z^3", "x^2 + y^3 + z^5"] {
            assert_eq!(
                lemma_3_2_check(&p(s)).unwrap().pattern,
                Some(SurfacePattern::Two),
                "{s}"
            );
        }
        assert_eq!(
            lemma_3_2_check(&p("x^2 + y^3 + z^6")).unwrap().pattern,
            None
        );
    }

    #[test]
    fn shape_errors() {
        assert!(lemma_3_2_check(&p("x*y + y^3")).is_err());
        assert!(lemma_3_2_check(&p("y^3 + z^5")).is_err());
        assert!(lemma_3_2_check(&Polynomial::parse(4, "x^2 + y^3").unwrap()).is_err());
    }
}
