use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::exponent::{ExponentVector, MAX_VARS};
use super::rational::{fmt_rational, Rational};
use super::weight::Weight;
use crate::error::{Error, Result};

/// Display names for variable slots; the first four are the fixed coordinates.
pub const VAR_NAMES: [&str; MAX_VARS] = ["x", "y", "z", "w", "t", "u"];

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a `BTreeMap` keyed by exponent vector (graded
/// lexicographic order) and zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables");
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(nvars, ExponentVector::zero(), c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        Self::monomial(nvars, ExponentVector::unit(i), Rational::one())
    }

    pub fn monomial(nvars: usize, exp: ExponentVector, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        assert!(exp.span() <= nvars, "exponent vector wider than polynomial");
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    /// Collects terms, merging duplicates and discarding zeros.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, Rational)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (ExponentVector, Rational)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, e: &ExponentVector) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn contains(&self, e: &ExponentVector) -> bool {
        self.terms.contains_key(e)
    }

    pub fn support(&self) -> Vec<ExponentVector> {
        self.terms.keys().copied().collect()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&ExponentVector::zero())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.is_zero())
    }

    /// Largest term in graded lexicographic order.
    pub fn leading_term(&self) -> Option<(&ExponentVector, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, e: ExponentVector, c: Rational) {
        debug_assert!(e.span() <= self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiplies by the monomial `c * x^e`.
    pub fn mul_term(&self, e: &ExponentVector, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, v)| (k.mul(e), v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one(self.nvars);
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|e| e.total_degree()).max()
    }

    /// Order (lowest total degree of a term); `None` for the zero polynomial.
    pub fn ord(&self) -> Option<u64> {
        self.terms.keys().map(|e| e.total_degree()).min()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e.get(var)).max()
    }

    pub fn min_degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e.get(var)).min()
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|e| e.get(var) > 0)
    }

    /// Coefficient of `var^k`, as a polynomial in the remaining variables.
    pub fn coefficient_in(&self, var: usize, k: u32) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e.get(var) == k {
                let mut e2 = *e;
                e2.set(var, 0);
                p.terms.insert(e2, c.clone());
            }
        }
        p
    }

    /// Splits into coefficients of `var^0, var^1, ...`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Self> {
        let d = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![Self::zero(self.nvars); d + 1];
        for (e, c) in &self.terms {
            let k = e.get(var) as usize;
            let mut e2 = *e;
            e2.set(var, 0);
            out[k].terms.insert(e2, c.clone());
        }
        out
    }

    /// Rebuilds `sum_k coeffs[k] * var^k`.
    pub fn from_coefficients_in(nvars: usize, var: usize, coeffs: &[Self]) -> Self {
        let mut p = Self::zero(nvars);
        for (k, c) in coeffs.iter().enumerate() {
            for (e, v) in &c.terms {
                let mut e2 = *e;
                e2.set(var, e.get(var) + k as u32);
                p.add_term(e2, v.clone());
            }
        }
        p
    }

    /// Formal partial derivative with respect to `var`.
    pub fn partial_derivative(&self, var: usize) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e.get(var);
            if k > 0 {
                let mut e2 = *e;
                e2.set(var, k - 1);
                p.terms
                    .insert(e2, c * Rational::from_integer(BigInt::from(k)));
            }
        }
        p
    }

    /// Replaces `var` by `g` and expands.
    pub fn substitute(&self, var: usize, g: &Polynomial) -> Result<Self> {
        if var >= self.nvars {
            return Err(Error::VariableOutOfRange {
                var,
                nvars: self.nvars,
            });
        }
        if g.nvars != self.nvars {
            return Err(Error::VariableCountMismatch {
                left: self.nvars,
                right: g.nvars,
            });
        }
        let coeffs = self.coefficients_in(var);
        let mut acc = Self::zero(self.nvars);
        for c in coeffs.iter().rev() {
            acc = &(&acc * g) + c;
        }
        Ok(acc)
    }

    /// Sets `var` to a rational value, keeping the variable count.
    pub fn evaluate_var(&self, var: usize, value: &Rational) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e.get(var);
            let mut e2 = *e;
            e2.set(var, 0);
            let v = if k == 0 {
                c.clone()
            } else {
                c * num_traits::pow(value.clone(), k as usize)
            };
            p.add_term(e2, v);
        }
        p
    }

    /// Evaluates every variable.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert!(point.len() >= self.nvars);
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, v) in point.iter().enumerate().take(self.nvars) {
                let k = e.get(i);
                if k > 0 {
                    t *= num_traits::pow(v.clone(), k as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Reinterprets the polynomial with a different variable count.
    pub fn with_nvars(&self, nvars: usize) -> Result<Self> {
        if self.terms.keys().any(|e| e.span() > nvars) {
            return Err(Error::VariableCountMismatch {
                left: self.nvars,
                right: nvars,
            });
        }
        Ok(Polynomial {
            nvars,
            terms: self.terms.clone(),
        })
    }

    /// Applies a permutation of variable slots: slot `i` moves to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars);
        let mut p = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e2 = ExponentVector::zero();
            for (i, &j) in perm.iter().enumerate() {
                e2.set(j, e.get(i));
            }
            p.terms.insert(e2, c.clone());
        }
        p
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Self> {
        let (ld, lc) = d.leading_term()?;
        let (ld, lc) = (*ld, lc.clone());
        let mut r = self.clone();
        let mut q = Self::zero(self.nvars);
        while let Some((lr, cr)) = r.leading_term() {
            let m = lr.div(&ld)?;
            let c = cr / &lc;
            r = &r - &d.mul_term(&m, &c);
            q.add_term(m, c);
        }
        Some(q)
    }

    /// Sum of the terms whose exponent satisfies `pred`.
    pub fn filter_terms<F: Fn(&ExponentVector, &Rational) -> bool>(&self, pred: F) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, c)| pred(e, c))
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Divides by the leading coefficient (graded lex).
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Parses expressions such as `x^2 + y^3 - 9/2*z*w*y^2` over variables
    /// `x, y, z, w, t, u`.
    pub fn parse(nvars: usize, s: &str) -> Result<Self> {
        super::parse::parse_polynomial(nvars, s)
    }
}

/// Weighted degree `sum_i alpha_i nu_i`.
pub fn weighted_degree(nu: &ExponentVector, alpha: &Weight) -> Rational {
    let mut acc = Rational::zero();
    for (i, a) in alpha.entries().iter().enumerate() {
        let k = nu.get(i);
        if k > 0 {
            acc += a * Rational::from_integer(BigInt::from(k));
        }
    }
    acc
}

/// Minimum weighted degree over the support.
pub fn min_degree(f: &Polynomial, alpha: &Weight) -> Result<Rational> {
    check_weight_dims(f, alpha)?;
    f.terms
        .keys()
        .map(|e| weighted_degree(e, alpha))
        .min()
        .ok_or(Error::ZeroPolynomial)
}

/// Sum of the terms attaining the minimal weighted degree.
pub fn initial_part(f: &Polynomial, alpha: &Weight) -> Result<Polynomial> {
    let d = min_degree(f, alpha)?;
    Ok(f.filter_terms(|e, _| weighted_degree(e, alpha) == d))
}

fn check_weight_dims(f: &Polynomial, alpha: &Weight) -> Result<()> {
    if alpha.len() < f.nvars {
        return Err(Error::DimensionMismatch(format!(
            "weight of length {} for a polynomial in {} variables",
            alpha.len(),
            f.nvars
        )));
    }
    Ok(())
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let nvars = self.nvars.max(rhs.nvars);
        let (big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut p = Polynomial {
            nvars,
            terms: big.terms.clone(),
        };
        for (e, c) in &small.terms {
            p.add_term(*e, c.clone());
        }
        p
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut p = Polynomial {
            nvars: self.nvars.max(rhs.nvars),
            terms: self.terms.clone(),
        };
        for (e, c) in &rhs.terms {
            p.add_term(*e, -c);
        }
        p
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut p = Polynomial::zero(self.nvars.max(rhs.nvars));
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                p.add_term(e1.mul(e2), c1 * c2);
            }
        }
        p
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Display order: ascending total degree, then descending lexicographic.
fn display_order(terms: &BTreeMap<ExponentVector, Rational>) -> Vec<(&ExponentVector, &Rational)> {
    let mut v: Vec<_> = terms.iter().collect();
    v.sort_by(|a, b| {
        a.0.total_degree()
            .cmp(&b.0.total_degree())
            .then_with(|| b.0.cmp_lex(a.0))
    });
    v
}

pub(crate) fn monomial_string(e: &ExponentVector, nvars: usize) -> String {
    let mut parts = Vec::new();
    for i in 0..nvars {
        match e.get(i) {
            0 => {}
            1 => parts.push(VAR_NAMES[i].to_string()),
            k => parts.push(format!("{}^{}", VAR_NAMES[i], k)),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in display_order(&self.terms).into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if e.is_zero() {
                write!(f, "{}", fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", monomial_string(e, self.nvars))?;
            } else {
                write!(
                    f,
                    "{}*{}",
                    fmt_rational(&abs),
                    monomial_string(e, self.nvars)
                )?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.nvars, self)
    }
}
