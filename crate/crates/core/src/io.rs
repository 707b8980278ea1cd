//! The JSON term format: an array of `[num, den, e_1, ..., e_n]` rows.
//! Numerators and denominators may be JSON integers or decimal strings
//! (for values beyond 64 bits).

use std::path::Path;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::Value;

use crate::algebra::exponent::{ExponentVector, MAX_VARS};
use crate::algebra::polynomial::Polynomial;
use crate::algebra::rational::Rational;
use crate::error::{Error, Result};

/// Largest accepted exponent.
pub const MAX_EXPONENT: u64 = 1 << 16;

pub fn parse_terms(text: &str) -> Result<Polynomial> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        col: e.column(),
        msg: e.to_string(),
    })?;
    let rows = v
        .as_array()
        .ok_or_else(|| row_error(text, 0, "expected an array of terms"))?;
    if rows.is_empty() {
        return Err(row_error(text, 0, "no terms"));
    }
    let mut nvars = None;
    let mut terms = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let items = row
            .as_array()
            .ok_or_else(|| row_error(text, i, "term must be an array"))?;
        let n = items
            .len()
            .checked_sub(2)
            .filter(|n| (1..=MAX_VARS).contains(n));
        let n = n.ok_or_else(|| row_error(text, i, "term needs num, den and 1 to 6 exponents"))?;
        if *nvars.get_or_insert(n) != n {
            return Err(row_error(text, i, "terms have different variable counts"));
        }
        let num = integer(&items[0]).ok_or_else(|| row_error(text, i, "bad numerator"))?;
        let den = integer(&items[1]).ok_or_else(|| row_error(text, i, "bad denominator"))?;
        if den.is_zero() {
            return Err(row_error(text, i, "zero denominator"));
        }
        if num.is_zero() {
            return Err(row_error(text, i, "zero coefficient"));
        }
        let mut exps = Vec::with_capacity(n);
        for e in &items[2..] {
            let e = integer(e).ok_or_else(|| row_error(text, i, "bad exponent"))?;
            if e.is_negative() {
                return Err(row_error(text, i, "negative exponent"));
            }
            let e: u64 = e.try_into().unwrap_or(u64::MAX);
            if e > MAX_EXPONENT {
                return Err(row_error(text, i, "exponent too large"));
            }
            exps.push(e as u32);
        }
        terms.push((ExponentVector::new(&exps), Rational::new(num, den)));
    }
    let n = nvars.unwrap();
    let mut p = Polynomial::zero(n);
    for (e, c) in terms {
        if p.contains(&e) {
            let m = Polynomial::monomial(n, e, Rational::from_integer(1.into()));
            return Err(Error::InvalidInput(format!("repeated monomial {m}")));
        }
        p.add_term(e, c);
    }
    Ok(p)
}

fn integer(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .or_else(|| n.as_u64().map(BigInt::from)),
        Value::String(s) => s.trim().parse().ok(),
        _ => None,
    }
}

/// Locates the `index`-th row of the outer array for error messages.
fn row_error(text: &str, index: usize, msg: &str) -> Error {
    let mut depth = 0usize;
    let mut seen = 0usize;
    let mut at = 0;
    let mut in_str = false;
    for (pos, ch) in text.char_indices() {
        match ch {
            '"' => in_str = !in_str,
            '[' if !in_str => {
                depth += 1;
                if depth == 1 {
                    at = pos;
                }
                if depth == 2 {
                    if seen == index {
                        at = pos;
                        break;
                    }
                    seen += 1;
                }
            }
            ']' if !in_str => depth = depth.saturating_sub(1),
            _ => {}
        }
    }
    let before = &text[..at];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    Error::Parse {
        line,
        col,
        msg: format!("term {index}: {msg}"),
    }
}

/// One term per line, in the polynomial's canonical order.
pub fn to_terms(f: &Polynomial) -> String {
    let rows: Vec<String> = f
        .terms()
        .map(|(e, c)| {
            let mut items = vec![c.numer().to_string(), c.denom().to_string()];
            items.extend((0..f.nvars()).map(|i| e.get(i).to_string()));
            format!("  [{}]", items.join(", "))
        })
        .collect();
    format!("[\n{}\n]\n", rows.join(",\n"))
}

/// Reads the term format, or an infix expression in `x y z w` when the file
/// does not start with `[`.
pub fn load_polynomial(path: &Path) -> Result<Polynomial> {
    let text = std::fs::read_to_string(path)?;
    parse_polynomial_text(&text)
}

pub fn parse_polynomial_text(text: &str) -> Result<Polynomial> {
    if text.trim_start().starts_with('[') {
        parse_terms(text)
    } else {
        Polynomial::parse(4, text.trim())
    }
}

pub fn save_polynomial(path: &Path, f: &Polynomial) -> Result<()> {
    std::fs::write(path, to_terms(f))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_terms() {
        let f = parse_terms("[[1,1,2,0,0,0],[1,1,0,3,0,0]]").unwrap();
        assert_eq!(f, Polynomial::parse(4, "x^2 + y^3").unwrap());
        let f = parse_terms(r#"[["-3","4",1,0,0,1]]"#).unwrap();
        assert_eq!(f.to_string(), "-3/4*x*w");
    }

    #[test]
    fn rejects_bad_rows() {
        let e = parse_terms("[[0,1,0,0,0,0]]").unwrap_err();
        assert!(e.to_string().contains("zero coefficient"), "{e}");
        let e = parse_terms("[\n [1,1,2,0,0,0],\n [1,1,0,-3,0,0]\n]").unwrap_err();
        assert!(
            matches!(
                e,
                Error::Parse {
                    line: 3,
                    col: 2,
                    ..
                }
            ),
            "{e}"
        );
        assert!(parse_terms("[[1,0,1,0,0,0]]").is_err());
        assert!(parse_terms("[[1,1,1,0,0,0],[1,1,1,0]]").is_err());
        assert!(parse_terms("[[1,1,1,0,0,0],[2,1,1,0,0,0]]").is_err());
        let e = parse_terms("[[1,1,2,0,0,0]").unwrap_err();
        assert!(matches!(e, Error::Parse { .. }));
    }

    #[test]
    fn round_trip() {
        for e in crate::dataset::entries() {
            let s = to_terms(&e.polynomial);
            assert_eq!(parse_terms(&s).unwrap(), e.polynomial);
        }
    }
}
