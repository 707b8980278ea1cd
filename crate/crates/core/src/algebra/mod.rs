//! Exact polynomial arithmetic over the rationals.

pub mod exponent;
pub mod factor;
pub mod parse;
pub mod polynomial;
pub mod rational;
pub mod univariate;
pub mod weight;

pub use exponent::{ExponentVector, MAX_VARS};
pub use factor::{double_factor, quadratic_square, DoubleFactor};
pub use polynomial::{initial_part, min_degree, weighted_degree, Polynomial, VAR_NAMES};
pub use rational::{int, rat, Rational};
pub use univariate::UniPoly;
pub use weight::{PrimitiveWeight, Weight};

/// Variable slots of the four coordinates.
pub const X: usize = 0;
pub const Y: usize = 1;
pub const Z: usize = 2;
pub const W: usize = 3;
