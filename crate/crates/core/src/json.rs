//! Shared JSON shapes.

use serde::{Deserialize, Serialize};

use crate::algebra::rational::Rational;

/// An exact rational as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatJson {
    pub num: String,
    pub den: String,
}

impl From<&Rational> for RatJson {
    fn from(r: &Rational) -> Self {
        RatJson {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

impl RatJson {
    pub fn to_rational(&self) -> Option<Rational> {
        let n = self.num.parse().ok()?;
        let d: num_bigint::BigInt = self.den.parse().ok()?;
        if d == 0.into() {
            return None;
        }
        Some(Rational::new(n, d))
    }
}

pub fn rat_vec(v: &[Rational]) -> Vec<RatJson> {
    v.iter().map(RatJson::from).collect()
}
