use num_traits::{One, Signed, Zero};

use crate::algebra::polynomial::{min_degree, Polynomial, VAR_NAMES};
use crate::algebra::rational::Rational;
use crate::algebra::weight::Weight;
use crate::error::{Error, Result};
use crate::lp::{simplex_min, LinearProgram, LpStatus};
use crate::newton::polyhedron::minimal_points;

/// A strictly positive weight with `deg(f) = 1` and weight sum at most one,
/// or `None` when every such weight has sum above one.
///
/// Solves `max t` over `alpha_i >= t`, `<alpha, nu> >= 1` on the support and
/// `sum(alpha) <= 1`; a witness exists exactly when the optimum is positive.
pub fn reid_noncanonical_witness(f: &Polynomial) -> Result<Option<Weight>> {
    if !f.constant_term().is_zero() {
        return Err(Error::InvalidInput(
            "polynomial must vanish at the origin".into(),
        ));
    }
    let n = f.nvars();
    if let Some(i) = (0..n).find(|&i| !f.involves(i)) {
        return Err(Error::ShapeViolation(format!(
            "variable {} does not occur, the support is degenerate",
            VAR_NAMES[i]
        )));
    }
    let support = minimal_points(&f.support());
    let mut objective = vec![Rational::zero(); n + 1];
    objective[n] = -Rational::one();
    let mut lp = LinearProgram::new(objective);
    for i in 0..n {
        let mut row = vec![Rational::zero(); n + 1];
        row[i] = Rational::one();
        row[n] = -Rational::one();
        lp.add_constraint(row, Rational::zero());
    }
    for e in &support {
        let mut row: Vec<Rational> = (0..n)
            .map(|i| Rational::from_integer(e.get(i).into()))
            .collect();
        row.push(Rational::zero());
        lp.add_constraint(row, Rational::one());
    }
    let mut cap = vec![-Rational::one(); n];
    cap.push(Rational::zero());
    lp.add_constraint(cap, -Rational::one());

    let res = simplex_min(&lp);
    if res.status != LpStatus::Optimal || !res.value.as_ref().is_some_and(|v| v.is_negative()) {
        return Ok(None);
    }
    let point = res.point.expect("optimal point");
    let alpha = Weight::new(point[..n].to_vec())?;
    let m = min_degree(f, &alpha)?;
    let alpha = alpha.scaled(&m.recip())?;
    debug_assert!(alpha.sum() <= Rational::one());
    Ok(Some(alpha))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset;

    #[test]
    fn dataset_weights_are_witnesses() {
        for e in dataset::entries() {
            let w = reid_noncanonical_witness(&e.polynomial).unwrap().unwrap();
            assert_eq!(w, e.weight, "entry {}", e.id);
        }
    }

    #[test]
    fn canonical_examples_have_none() {
        let a1 = Polynomial::parse(4, "x^2 + y^2 + z^2 + w^2").unwrap();
        assert!(reid_noncanonical_witness(&a1).unwrap().is_none());
        let d = Polynomial::parse(4, "x^2 + y^3 + z^9 + w^18 + z*w^3").unwrap();
        assert!(reid_noncanonical_witness(&d).unwrap().is_none());
    }

    #[test]
    fn degenerate_support_reported() {
        let f = Polynomial::parse(4, "x^2 + y^3 + z^9").unwrap();
        assert!(reid_noncanonical_witness(&f).is_err());
    }
}
