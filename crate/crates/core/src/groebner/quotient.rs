use serde::Serialize;

use super::basis::StandardBasis;
use crate::algebra::exponent::ExponentVector;

/// Dimension of `k[x]/I` (global) or of the localization (local order).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum QuotientDim {
    Finite(u64),
    Infinite,
}

impl QuotientDim {
    pub fn finite(self) -> Option<u64> {
        match self {
            QuotientDim::Finite(n) => Some(n),
            QuotientDim::Infinite => None,
        }
    }
}

impl std::fmt::Display for QuotientDim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            QuotientDim::Finite(n) => write!(f, "{n}"),
            QuotientDim::Infinite => write!(f, "infinite"),
        }
    }
}

/// Standard monomials and their count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientBasis {
    pub monomials: Vec<ExponentVector>,
    pub dimension: QuotientDim,
}

fn pure_power_bounds(leading: &[ExponentVector], nvars: usize) -> Option<Vec<u32>> {
    (0..nvars)
        .map(|i| {
            leading
                .iter()
                .filter(|e| e.span() <= i + 1 && (0..i).all(|j| e.get(j) == 0))
                .map(|e| e.get(i))
                .filter(|&k| k > 0)
                .min()
                .or_else(|| leading.iter().any(|e| e.is_zero()).then_some(0))
        })
        .collect()
}

/// Standard monomials of a monomial ideal given by its generators.
pub fn standard_monomials_of(leading: &[ExponentVector], nvars: usize) -> QuotientBasis {
    if leading.iter().any(|e| e.is_zero()) {
        return QuotientBasis {
            monomials: vec![],
            dimension: QuotientDim::Finite(0),
        };
    }
    let Some(bounds) = pure_power_bounds(leading, nvars) else {
        return QuotientBasis {
            monomials: vec![],
            dimension: QuotientDim::Infinite,
        };
    };
    let mut monomials = Vec::new();
    let mut cur = vec![0u32; nvars];
    enumerate_box(&bounds, 0, &mut cur, leading, &mut monomials);
    monomials.sort();
    let n = monomials.len() as u64;
    QuotientBasis {
        monomials,
        dimension: QuotientDim::Finite(n),
    }
}

fn enumerate_box(
    bounds: &[u32],
    i: usize,
    cur: &mut Vec<u32>,
    leading: &[ExponentVector],
    out: &mut Vec<ExponentVector>,
) {
    if i == bounds.len() {
        out.push(ExponentVector::new(cur));
        return;
    }
    for k in 0..bounds[i] {
        cur[i] = k;
        let partial = ExponentVector::new(cur);
        // prune once a leading monomial divides the partial exponent
        if leading.iter().any(|l| l.divides(&partial)) {
            break;
        }
        enumerate_box(bounds, i + 1, cur, leading, out);
    }
    cur[i] = 0;
}

/// Counts monomials of degree `< bound` (grading `weights`) divisible by no
/// element of `leading`; `None` once the count passes `cap`.
pub fn count_standard_below(
    leading: &[ExponentVector],
    weights: &[u64],
    bound: u64,
    cap: u64,
) -> Option<u64> {
    let mut count = 0u64;
    let mut cur = vec![0u32; weights.len()];
    count_rec(leading, weights, bound, 0, 0, &mut cur, &mut count, cap).then_some(count)
}

#[allow(clippy::too_many_arguments)]
fn count_rec(
    leading: &[ExponentVector],
    weights: &[u64],
    bound: u64,
    i: usize,
    deg: u64,
    cur: &mut Vec<u32>,
    count: &mut u64,
    cap: u64,
) -> bool {
    if i == weights.len() {
        *count += 1;
        return *count <= cap;
    }
    let mut d = deg;
    let mut k = 0u32;
    while d < bound {
        cur[i] = k;
        let partial = ExponentVector::new(cur);
        if leading.iter().any(|l| l.divides(&partial)) {
            break;
        }
        if !count_rec(leading, weights, bound, i + 1, d, cur, count, cap) {
            cur[i] = 0;
            return false;
        }
        k += 1;
        d += weights[i];
    }
    cur[i] = 0;
    true
}

pub fn quotient_basis(sb: &StandardBasis) -> QuotientBasis {
    standard_monomials_of(&sb.leading, sb.nvars)
}

pub fn quotient_dimension(sb: &StandardBasis) -> QuotientDim {
    quotient_basis(sb).dimension
}

/// Krull dimension of the leading monomial ideal; `None` for the unit ideal.
pub fn krull_dimension_of_leading(sb: &StandardBasis) -> Option<usize> {
    krull_dimension_monomial(&sb.leading, sb.nvars)
}

/// Largest set of variables containing the support of no generator.
pub fn krull_dimension_monomial(leading: &[ExponentVector], nvars: usize) -> Option<usize> {
    if leading.iter().any(|e| e.is_zero()) {
        return None;
    }
    let mut best = 0;
    for mask in 0u32..(1 << nvars) {
        let independent = leading
            .iter()
            .all(|e| (0..nvars).any(|i| e.get(i) > 0 && mask & (1 << i) == 0));
        if independent {
            best = best.max(mask.count_ones() as usize);
        }
    }
    Some(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v)
    }

    #[test]
    fn counts() {
        let l = [
            e(&[1, 0, 0, 0]),
            e(&[0, 2, 0, 0]),
            e(&[0, 0, 8, 0]),
            e(&[0, 0, 0, 17]),
        ];
        assert_eq!(
            standard_monomials_of(&l, 4).dimension,
            QuotientDim::Finite(272)
        );
        assert_eq!(
            standard_monomials_of(&[e(&[])], 4).dimension,
            QuotientDim::Finite(0)
        );
        assert_eq!(
            standard_monomials_of(&[e(&[1, 0, 0, 0]), e(&[0, 1, 0, 0])], 4).dimension,
            QuotientDim::Infinite
        );
    }

    #[test]
    fn mixed_leading_terms() {
        // <x^2, x y, y^3> has 1, x, y, y^2
        let l = [e(&[2, 0]), e(&[1, 1]), e(&[0, 3])];
        let q = standard_monomials_of(&l, 2);
        assert_eq!(q.dimension, QuotientDim::Finite(4));
    }

    #[test]
    fn bounded_count() {
        let l = [e(&[1, 0]), e(&[0, 2])];
        assert_eq!(count_standard_below(&l, &[1, 1], 10, 100), Some(2));
        assert_eq!(count_standard_below(&[], &[1, 1], 3, 100), Some(6));
        assert_eq!(count_standard_below(&[], &[1, 1], 30, 10), None);
    }

    #[test]
    fn krull() {
        let all = [
            e(&[1, 0, 0, 0]),
            e(&[0, 1, 0, 0]),
            e(&[0, 0, 1, 0]),
            e(&[0, 0, 0, 1]),
        ];
        assert_eq!(krull_dimension_monomial(&all, 4), Some(0));
        assert_eq!(
            krull_dimension_monomial(&[e(&[1, 0, 0, 0]), e(&[0, 2, 0, 0])], 4),
            Some(2)
        );
        assert_eq!(krull_dimension_monomial(&[e(&[])], 4), None);
    }
}
