pub mod algebra;
pub mod certifier;
pub mod cli;
pub mod dataset;
pub mod deformation;
pub mod error;
pub mod groebner;
pub mod invariants;
pub mod io;
pub mod json;
pub mod lp;
pub mod newton;

pub use error::{Error, Result};
