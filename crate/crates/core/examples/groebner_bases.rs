//! Groebner bases for global orders and standard bases for local ones, with
//! quotient dimensions.
//!
//!     cargo run --example groebner_bases

use k3cert::algebra::{Polynomial, Weight};
use k3cert::groebner::{groebner, local_standard_basis, quotient_dimension, MonomialOrder};
use k3cert::invariants::jacobian;

fn main() -> k3cert::Result<()> {
    let p = |s: &str| Polynomial::parse(3, s);
    let ideal = vec![p("x*y - z")?, p("y*z - x")?, p("z*x - y")?];
    let gb = groebner(&ideal, &MonomialOrder::GrevLex)?;
    println!("(xy - z, yz - x, zx - y), grevlex basis:");
    for g in &gb.generators {
        println!("  {g}");
    }
    println!("  dim k[x,y,z]/I = {}", quotient_dimension(&gb));

    // the global quotient counts every critical point, the local one only the origin
    let f = p("x^2 + y^3 + z^4 - z^5")?;
    let jac = jacobian(&f);
    let global = groebner(&jac, &MonomialOrder::GrevLex)?;
    let alpha = Weight::from_ratios(&[(1, 2), (1, 3), (1, 4)])?;
    let local = local_standard_basis(&jac, &MonomialOrder::local_weighted(&alpha))?;
    println!(
        "{f}: global {} critical points, local mu {}",
        quotient_dimension(&global),
        quotient_dimension(&local)
    );
    Ok(())
}
