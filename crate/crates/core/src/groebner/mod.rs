//! Groebner and standard bases over the rationals.

pub mod basis;
pub mod field;
pub mod order;
pub mod quotient;
pub mod torus;

pub use basis::{
    groebner, groebner_with_budget, ideal_membership, leading_truncated_mod_p,
    local_standard_basis, local_standard_basis_truncated, local_standard_basis_with_budget,
    normal_form, Budget, StandardBasis, DEFAULT_BUDGET,
};
pub use order::MonomialOrder;
pub use quotient::{
    count_standard_below, krull_dimension_of_leading, quotient_basis, quotient_dimension,
    standard_monomials_of, QuotientBasis, QuotientDim,
};
pub use torus::{solvable_in_torus, solvable_in_torus_with_budget, TorusSolvability};
