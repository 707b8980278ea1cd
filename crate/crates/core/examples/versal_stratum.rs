//! Versal deformations: the monomial basis of the Jacobi ring, its split by
//! weighted degree, and mu along deformations inside and outside the
//! mu-constant stratum.
//!
//!     cargo run --release --example versal_stratum

use k3cert::algebra::rat;
use k3cert::dataset;
use k3cert::deformation::{
    build_deformation, mu_constant_stratum, versal_basis, DeformationAssignment,
};
use k3cert::invariants::milnor_from_basis;

fn main() -> k3cert::Result<()> {
    let e = dataset::entry(12)?;
    let vb = versal_basis(&e.polynomial, &e.weight)?;
    let st = mu_constant_stratum(&vb);
    println!(
        "No.12: {} basis monomials, {} of degree below one, stratum codimension {}",
        vb.len(),
        vb.below_one().len(),
        st.codimension
    );

    let above = vb.above_one()[0];
    let below = *vb.below_one().last().unwrap();
    for pairs in [
        vec![(above, rat(3, 2))],
        vec![(above, rat(3, 2)), (below, rat(1, 5))],
    ] {
        let d = build_deformation(&e.polynomial, &vb, &DeformationAssignment::new(pairs))?;
        println!(
            "{}: mu {}, leaves the stratum: {}",
            d.polynomial,
            milnor_from_basis(&d.polynomial)?,
            d.mu_dropping()
        );
    }
    Ok(())
}
