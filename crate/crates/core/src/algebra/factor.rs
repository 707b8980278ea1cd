use serde::Serialize;

use super::polynomial::Polynomial;
use super::rational::{int, rat};
use crate::error::{Error, Result};

/// Outcome of searching a cubic `h(v)` for a repeated linear factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DoubleFactor {
    /// Square-free over the fraction field.
    None,
    /// `h = (v + g)^2 (v + h)` with `g != h`.
    Double {
        #[serde(serialize_with = "ser_poly")]
        g: Polynomial,
        #[serde(serialize_with = "ser_poly")]
        h: Polynomial,
    },
    /// `h = (v + g)^3`.
    Triple {
        #[serde(serialize_with = "ser_poly")]
        g: Polynomial,
    },
    /// A repeated root exists but is not polynomial in the other variables.
    NotPolynomial,
}

fn ser_poly<S: serde::Serializer>(p: &Polynomial, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

/// Repeated-factor analysis of `h`, a cubic in `var` whose leading
/// coefficient is a nonzero constant.
pub fn double_factor(h: &Polynomial, var: usize) -> Result<DoubleFactor> {
    if var >= h.nvars() {
        return Err(Error::VariableOutOfRange {
            var,
            nvars: h.nvars(),
        });
    }
    let coeffs = h.coefficients_in(var);
    if coeffs.len() != 4 {
        return Err(Error::ShapeViolation(format!(
            "expected a cubic in variable {var}"
        )));
    }
    if !coeffs[3].is_constant() {
        return Err(Error::ShapeViolation(
            "leading coefficient must be constant".into(),
        ));
    }
    let lc = coeffs[3].constant_term();
    let inv = lc.recip();
    let a = coeffs[2].scale(&inv);
    let b = coeffs[1].scale(&inv);
    let c = coeffs[0].scale(&inv);

    // depressed form u^3 + p u + q with v = u - a/3
    let a3 = a.scale(&rat(1, 3));
    let p = &b - &(&a * &a).scale(&rat(1, 3));
    let q = &(&(&a * &a).scale(&rat(2, 27)) * &a) - (&(&a * &b).scale(&rat(1, 3))) + c.clone();

    if p.is_zero() && q.is_zero() {
        return Ok(DoubleFactor::Triple { g: a3 });
    }
    let disc = &(&(&p * &p) * &p).scale(&int(-4)) - &(&q * &q).scale(&int(27));
    if !disc.is_zero() {
        return Ok(DoubleFactor::None);
    }
    // double root u0 = -3q / (2p)
    let Some(u0) = q.scale(&rat(-3, 2)).div_exact(&p) else {
        return Ok(DoubleFactor::NotPolynomial);
    };
    let g = &a3 - &u0;
    let hh = &a3 + &u0.scale(&int(2));
    let v = Polynomial::var(h.nvars(), var);
    let lin_g = &v + &g;
    let rebuilt = &(&(&lin_g * &lin_g) * &(&v + &hh)).scale(&lc) - h;
    if !rebuilt.is_zero() {
        return Ok(DoubleFactor::NotPolynomial);
    }
    Ok(DoubleFactor::Double { g, h: hh })
}

/// Writes `h = A (v + phi)^2` for a quadratic in `var` whose leading
/// coefficient `A` is a nonzero polynomial free of `var`; `None` when `h` is
/// not such a square.
pub fn quadratic_square(h: &Polynomial, var: usize) -> Option<(Polynomial, Polynomial)> {
    let coeffs = h.coefficients_in(var);
    if coeffs.len() != 3 {
        return None;
    }
    let (c0, c1, c2) = (&coeffs[0], &coeffs[1], &coeffs[2]);
    if (c1 * c1) != (c2 * c0).scale(&int(4)) {
        return None;
    }
    let phi = c1.scale(&rat(1, 2)).div_exact(c2)?;
    Some((c2.clone(), phi))
}

/// Expands `(v + g)^2 (v + h)`.
pub fn expand_double(nvars: usize, var: usize, g: &Polynomial, h: &Polynomial) -> Polynomial {
    let v = Polynomial::var(nvars, var);
    let lg = &v + g;
    &(&lg * &lg) * &(&v + h)
}
