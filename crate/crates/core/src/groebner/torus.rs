use serde::Serialize;

use super::basis::{groebner_with_budget, Budget};
use super::order::MonomialOrder;
use crate::algebra::exponent::{ExponentVector, MAX_VARS};
use crate::algebra::polynomial::Polynomial;
use crate::algebra::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TorusSolvability {
    Solvable,
    NotSolvable,
    Undecided,
}

/// Whether the generators have a common zero with every coordinate nonzero,
/// decided by testing `1 in (gens, t * x_1 ... x_n - 1)`.
pub fn solvable_in_torus(gens: &[Polynomial]) -> Result<TorusSolvability> {
    solvable_in_torus_with_budget(gens, &mut Budget::default())
}

pub fn solvable_in_torus_with_budget(
    gens: &[Polynomial],
    budget: &mut Budget,
) -> Result<TorusSolvability> {
    let nvars = gens.iter().map(|g| g.nvars()).max().unwrap_or(0);
    if nvars + 1 > MAX_VARS {
        return Err(Error::InvalidInput(
            "too many variables for the torus test".into(),
        ));
    }
    let n = nvars + 1;
    let mut ext: Vec<Polynomial> = gens
        .iter()
        .map(|g| g.with_nvars(n))
        .collect::<Result<_>>()?;
    if ext.iter().all(|g| g.is_zero()) {
        return Ok(TorusSolvability::Solvable);
    }
    let mut all = vec![1u32; n];
    all[..nvars].iter_mut().for_each(|v| *v = 1);
    let torus = &Polynomial::monomial(
        n,
        ExponentVector::new(&all),
        Rational::from_integer(1.into()),
    ) - &Polynomial::one(n);
    ext.push(torus);
    match groebner_with_budget(&ext, &MonomialOrder::GrevLex, budget) {
        Ok(gb) if gb.is_unit_ideal() => Ok(TorusSolvability::NotSolvable),
        Ok(_) => Ok(TorusSolvability::Solvable),
        Err(Error::BudgetExhausted(_)) => Ok(TorusSolvability::Undecided),
        Err(e) => Err(e),
    }
}
