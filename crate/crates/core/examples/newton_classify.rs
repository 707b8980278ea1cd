//! Newton polyhedra: the simple K3 criterion and nondegeneracy for the
//! embedded normal forms and for a few germs that fail.
//!
//!     cargo run --example newton_classify

use k3cert::algebra::Polynomial;
use k3cert::dataset;
use k3cert::newton::{newton_polyhedron, nondegenerate, simple_k3_check};

fn main() -> k3cert::Result<()> {
    for e in dataset::entries() {
        let r = simple_k3_check(&e.polynomial)?;
        let np = newton_polyhedron(&e.polynomial)?;
        println!(
            "No.{:<3} simple K3 {:<5} weight {}  {} compact faces  {:?}",
            e.id,
            r.is_simple_k3,
            r.weight.map(|w| w.to_string()).unwrap_or_default(),
            np.compact_faces.len(),
            nondegenerate(&e.polynomial)?,
        );
    }

    // too small a polyhedron, too large, and a degenerate face
    for s in [
        "x^2 + y^3 + z^5 + w^7",
        "x^2 + y^3 + z^13 + w^13",
        "x^2 + y^3 + (z^6 - w^6)^2",
    ] {
        let f = Polynomial::parse(4, s)?;
        let r = simple_k3_check(&f)?;
        println!("{s}: {:?}, {:?}", r.position, nondegenerate(&f)?);
    }
    Ok(())
}
