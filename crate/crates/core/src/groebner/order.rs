use std::cmp::Ordering;

use num_traits::ToPrimitive;

use crate::algebra::exponent::{ExponentVector, MAX_VARS};
use crate::algebra::weight::Weight;

/// Monomial orderings. Global orders are well-orders; local orders rank
/// `1` above every other monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    GrevLex,
    WeightedGrevLex(Vec<u64>),
    NegDegRevLex,
    NegWeightedRevLex(Vec<u64>),
}

impl MonomialOrder {
    /// Integer weights `p_i` from the primitive form of `alpha`.
    pub fn weights_of(alpha: &Weight) -> Vec<u64> {
        let (ps, _) = alpha.primitive_parts();
        ps.iter()
            .map(|p| p.to_u64().expect("weight fits in u64"))
            .collect()
    }

    pub fn weighted(alpha: &Weight) -> Self {
        MonomialOrder::WeightedGrevLex(Self::weights_of(alpha))
    }

    pub fn local_weighted(alpha: &Weight) -> Self {
        MonomialOrder::NegWeightedRevLex(Self::weights_of(alpha))
    }

    pub fn is_local(&self) -> bool {
        matches!(
            self,
            MonomialOrder::NegDegRevLex | MonomialOrder::NegWeightedRevLex(_)
        )
    }

    /// The grading underlying the order.
    #[inline]
    pub fn degree(&self, e: &ExponentVector) -> u64 {
        match self {
            MonomialOrder::GrevLex | MonomialOrder::NegDegRevLex => e.total_degree(),
            MonomialOrder::WeightedGrevLex(w) | MonomialOrder::NegWeightedRevLex(w) => {
                w.iter()
                    .enumerate()
                    .map(|(i, &wi)| wi * e.get(i) as u64)
                    .sum::<u64>()
                    + (w.len()..MAX_VARS).map(|i| e.get(i) as u64).sum::<u64>()
            }
        }
    }

    /// `Greater` when `a` is the larger monomial.
    #[inline]
    pub fn cmp(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        let (da, db) = (self.degree(a), self.degree(b));
        let by_degree = if self.is_local() {
            db.cmp(&da)
        } else {
            da.cmp(&db)
        };
        by_degree.then_with(|| revlex(a, b))
    }
}

fn revlex(a: &ExponentVector, b: &ExponentVector) -> Ordering {
    for i in (0..MAX_VARS).rev() {
        let (x, y) = (a.get(i), b.get(i));
        if x != y {
            return y.cmp(&x);
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v)
    }

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrder::GrevLex;
        assert_eq!(o.cmp(&e(&[0, 2]), &e(&[1])), Ordering::Greater);
        assert_eq!(o.cmp(&e(&[1, 0, 1]), &e(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&e(&[2, 0]), &e(&[1, 1])), Ordering::Greater);
    }

    #[test]
    fn local_ranks_one_highest() {
        let o = MonomialOrder::NegDegRevLex;
        assert_eq!(o.cmp(&e(&[]), &e(&[0, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&e(&[0, 2]), &e(&[0, 3])), Ordering::Greater);
    }
}
