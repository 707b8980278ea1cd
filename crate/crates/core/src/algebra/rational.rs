//! Helpers around `BigRational`, the exact scalar type used everywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Renders `p/q` or `p` when the denominator is one.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a, I: IntoIterator<Item = &'a Rational>>(vals: I) -> BigInt {
    vals.into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Integer power with a signed exponent (`r` must be nonzero when `e < 0`).
pub fn pow_i(r: &Rational, e: i32) -> Rational {
    if e >= 0 {
        num_traits::pow(r.clone(), e as usize)
    } else {
        num_traits::pow(r.recip(), (-e) as usize)
    }
}

/// Exact `n`-th root of a rational when it exists.
pub fn exact_root(r: &Rational, n: u32) -> Option<Rational> {
    if n == 0 {
        return None;
    }
    if r.is_negative() {
        if n.is_multiple_of(2) {
            return None;
        }
        return exact_root(&-r, n).map(|v| -v);
    }
    let num = exact_int_root(r.numer(), n)?;
    let den = exact_int_root(r.denom(), n)?;
    Some(Rational::new(num, den))
}

fn exact_int_root(v: &BigInt, n: u32) -> Option<BigInt> {
    if v.is_zero() {
        return Some(BigInt::zero());
    }
    let root = v.nth_root(n);
    if num_traits::pow(root.clone(), n as usize) == *v {
        Some(root)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        assert_eq!(rat(6, -8), rat(-3, 4));
        assert_eq!(fmt_rational(&rat(4, 2)), "2");
        assert_eq!(fmt_rational(&rat(-3, 4)), "-3/4");
    }

    #[test]
    fn roots() {
        assert_eq!(exact_root(&rat(8, 27), 3), Some(rat(2, 3)));
        assert_eq!(exact_root(&rat(-8, 27), 3), Some(rat(-2, 3)));
        assert_eq!(exact_root(&rat(4, 1), 3), None);
        assert_eq!(exact_root(&rat(-4, 1), 2), None);
    }
}
