//! Exact polynomial arithmetic: parsing, coordinate changes, weighted
//! initial parts and repeated factors of a cubic.
//!
//!     cargo run --example polynomial_algebra

use k3cert::algebra::{
    double_factor, initial_part, min_degree, rat, DoubleFactor, Polynomial, Weight, Y,
};

fn main() -> k3cert::Result<()> {
    let f = Polynomial::parse(4, "x^2 + y^3 - 27/4*z^2*w^2*y - 27/4*z^3*w^3")?;
    println!("f           = {f}");

    // y^3 - 27/4 g^2 y - 27/4 g^3 with g = zw has the double factor (y + 3/2 g)^2
    match double_factor(&f.filter_terms(|e, _| e.get(0) == 0), Y)? {
        DoubleFactor::Double { g, h } => {
            println!("double root : y = {}, simple root y = {}", -&g, -&h)
        }
        other => println!("no double root: {other:?}"),
    }

    let shifted = f.substitute(Y, &Polynomial::parse(4, "y - 3/2*z*w")?)?;
    println!("y := y - 3/2 zw gives {shifted}");

    let alpha = Weight::new(vec![rat(1, 2), rat(1, 3), rat(1, 6), rat(1, 6)])?;
    println!(
        "weight {alpha}: min degree {}",
        min_degree(&shifted, &alpha)?
    );
    println!("initial part {}", initial_part(&shifted, &alpha)?);
    let p = alpha.primitive();
    println!("primitive form ({}) / {}", p.p_vector.join(", "), p.p);
    Ok(())
}
