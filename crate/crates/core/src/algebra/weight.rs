use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{common_denominator, fmt_rational, Rational};
use crate::error::{Error, Result};

/// A strictly positive rational weight vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Weight(Vec<Rational>);

/// Integer form `(p_1, ..., p_n; p)` with `alpha_i = p_i / p` and
/// `gcd(p_1, ..., p_n, p) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimitiveWeight {
    pub p_vector: Vec<String>,
    pub p: String,
}

impl Weight {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if entries.is_empty() || entries.iter().any(|a| !a.is_positive()) {
            return Err(Error::NonPositiveWeight);
        }
        Ok(Weight(entries))
    }

    pub fn from_ratios(pairs: &[(i64, i64)]) -> Result<Self> {
        let mut v = Vec::with_capacity(pairs.len());
        for &(n, d) in pairs {
            if d == 0 {
                return Err(Error::InvalidInput("zero denominator in weight".into()));
            }
            v.push(Rational::new(BigInt::from(n), BigInt::from(d)));
        }
        Self::new(v)
    }

    /// Builds `alpha_i = p_i / p`.
    pub fn from_integers(ps: &[BigInt], p: &BigInt) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::InvalidInput("zero denominator in weight".into()));
        }
        Self::new(
            ps.iter()
                .map(|pi| Rational::new(pi.clone(), p.clone()))
                .collect(),
        )
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.0[i]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, a| acc + a)
    }

    /// Multiplies all entries by a positive scalar.
    pub fn scaled(&self, s: &Rational) -> Result<Self> {
        Self::new(self.0.iter().map(|a| a * s).collect())
    }

    pub fn swapped(&self, i: usize, j: usize) -> Self {
        let mut v = self.0.clone();
        v.swap(i, j);
        Weight(v)
    }

    /// `(p_1, ..., p_n)` and `p`.
    pub fn primitive_parts(&self) -> (Vec<BigInt>, BigInt) {
        let p = common_denominator(self.0.iter());
        let ps: Vec<BigInt> = self
            .0
            .iter()
            .map(|a| (a * Rational::from_integer(p.clone())).to_integer())
            .collect();
        let g = ps.iter().fold(p.clone(), |g, x| g.gcd(x));
        if g.is_one() {
            (ps, p)
        } else {
            (ps.iter().map(|x| x / &g).collect(), &p / &g)
        }
    }

    pub fn primitive(&self) -> PrimitiveWeight {
        let (ps, p) = self.primitive_parts();
        PrimitiveWeight {
            p_vector: ps.iter().map(|x| x.to_string()).collect(),
            p: p.to_string(),
        }
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(fmt_rational).collect()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn rejects_non_positive() {
        assert!(Weight::new(vec![rat(1, 2), rat(0, 1)]).is_err());
        assert!(Weight::new(vec![rat(-1, 2)]).is_err());
    }

    #[test]
    fn primitive_form() {
        let a = Weight::from_ratios(&[(1, 2), (1, 3), (1, 10), (1, 15)]).unwrap();
        let (ps, p) = a.primitive_parts();
        assert_eq!(p, BigInt::from(30));
        assert_eq!(
            ps,
            vec![15, 10, 3, 2]
                .into_iter()
                .map(BigInt::from)
                .collect::<Vec<_>>()
        );
        let b = Weight::from_ratios(&[(1, 2), (1, 3), (5, 54), (2, 27)]).unwrap();
        assert_eq!(b.primitive().p, "54");
        assert_eq!(b.sum(), rat(1, 1));
    }
}
