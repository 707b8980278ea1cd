//! Dense univariate polynomials over the rationals, coefficients in
//! ascending degree order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{common_denominator, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly(Vec<Rational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.0.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading();
        UniPoly(self.0.iter().map(|c| c / &lc).collect())
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let z = Rational::zero();
        UniPoly::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) - other.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let lc = d.leading();
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (UniPoly(vec![]), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            let c = &r[k] / &lc;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.0.iter().enumerate() {
                r[k - dd + j] -= &c * dc;
            }
            q[k - dd] = c;
        }
        r.truncate(dd);
        (UniPoly::new(q), UniPoly::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's algorithm: returns `(m, P_m)` with `P_m` square-free, pairwise
    /// coprime and `self = lc * prod P_m^m`.
    pub fn square_free_decomposition(&self) -> Vec<(usize, UniPoly)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.div_rem(&a0).0;
        let mut c = fp.div_rem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut m = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((m, a.clone()));
            }
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            d = c.sub(&b.derivative());
            m += 1;
        }
        out
    }

    /// Rational roots with multiplicities, ascending by root.
    pub fn rational_roots(&self) -> Vec<(Rational, usize)> {
        let mut out = Vec::new();
        for (m, p) in self.square_free_decomposition() {
            for r in square_free_rational_roots(&p) {
                out.push((r, m));
            }
        }
        out.sort();
        out
    }
}

const DIVISOR_SEARCH_LIMIT: u64 = 1_000_000;

fn square_free_rational_roots(p: &UniPoly) -> Vec<Rational> {
    let mut roots = Vec::new();
    let mut p = p.clone();
    // zero as a root
    while p.degree().unwrap_or(0) > 0 && p.0[0].is_zero() {
        roots.push(Rational::zero());
        p = UniPoly::new(p.0[1..].to_vec());
    }
    match p.degree() {
        None | Some(0) => return roots,
        Some(1) => {
            roots.push(-&p.0[0] / &p.0[1]);
            return roots;
        }
        _ => {}
    }
    let den = common_denominator(p.0.iter());
    let ints: Vec<BigInt> =
        p.0.iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
    let (Some(a0), Some(an)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) else {
        return roots;
    };
    for num in &a0 {
        for d in &an {
            for sign in [1i64, -1] {
                let r = Rational::new(num * BigInt::from(sign), d.clone());
                if p.eval(&r).is_zero() && !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
    }
    roots
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n == 0 {
        return None;
    }
    let mut out = Vec::new();
    let mut i = 1u64;
    while i.saturating_mul(i) <= n {
        if i > DIVISOR_SEARCH_LIMIT {
            return None;
        }
        if n % i == 0 {
            out.push(BigInt::from(i));
            if i != n / i {
                out.push(BigInt::from(n / i));
            }
        }
        i += 1;
    }
    Some(out)
}

/// Integer `gcd` of a slice, zero for an empty slice.
pub fn gcd_all(vals: &[BigInt]) -> BigInt {
    vals.iter().fold(BigInt::zero(), |g, v| g.gcd(v))
}

/// `(x - r)^m` expanded.
pub fn linear_power(r: &Rational, m: usize) -> UniPoly {
    let mut out = UniPoly(vec![Rational::one()]);
    let lin = UniPoly(vec![-r.clone(), Rational::one()]);
    for _ in 0..m {
        out = out.mul(&lin);
    }
    out
}

impl UniPoly {
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly(vec![]);
        }
        let mut v = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UniPoly::new(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    #[test]
    fn yun_recovers_multiplicities() {
        let f = linear_power(&int(2), 3)
            .mul(&linear_power(&rat(-1, 3), 1))
            .mul(&linear_power(&int(5), 6));
        let roots = f.rational_roots();
        assert_eq!(roots, vec![(rat(-1, 3), 1), (int(2), 3), (int(5), 6)]);
    }

    #[test]
    fn irreducible_quadratic_has_no_roots() {
        let f = UniPoly::new(vec![int(2), int(0), int(1)]);
        assert!(f.rational_roots().is_empty());
        assert_eq!(f.square_free_decomposition().len(), 1);
    }

    #[test]
    fn gcd_is_monic() {
        let a = linear_power(&int(1), 2).mul(&linear_power(&int(3), 1));
        let b = linear_power(&int(1), 1).mul(&linear_power(&int(4), 1));
        assert_eq!(a.gcd(&b), linear_power(&int(1), 1));
    }
}
