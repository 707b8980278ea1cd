//! Milnor numbers three ways: the weight formula, a local standard basis of
//! the Jacobian ideal, and the Newton number for three variables.
//!
//!     cargo run --release --example milnor_numbers

use std::time::Instant;

use k3cert::algebra::Polynomial;
use k3cert::dataset;
use k3cert::groebner::Budget;
use k3cert::invariants::{
    milnor_from_basis, milnor_orlik, milnor_upper_bound_mod_p, newton_number_3d,
};

fn main() -> k3cert::Result<()> {
    for id in [10, 83] {
        let e = dataset::entry(id)?;
        let t = Instant::now();
        let basis = milnor_from_basis(&e.polynomial)?;
        println!(
            "No.{id}: weight formula {}, standard basis {basis} ({:?})",
            milnor_orlik(&e.weight)?,
            t.elapsed()
        );
    }

    let g = Polynomial::parse(3, "x^2 + y^3 + z^7 + y*z^5")?;
    println!(
        "{g}: Newton number {}, mu {}",
        newton_number_3d(&g)?,
        milnor_from_basis(&g)?
    );

    // a mu-dropping deformation of No.12; the modular count bounds mu from above
    let f = Polynomial::parse(4, "x^2 + y^3 + z^9 + w^18 + z^3*w^3")?;
    let bound = milnor_upper_bound_mod_p(&f, None, &mut Budget::default())?;
    println!(
        "{f}: mu <= {bound:?} (mod p), mu = {}",
        milnor_from_basis(&f)?
    );
    Ok(())
}
