//! Exact linear programming over weights: the least weight sum making every
//! monomial of degree at least one.
//!
//!     cargo run --example weight_lp

use k3cert::algebra::rational::fmt_rational;
use k3cert::algebra::{rat, Rational};
use k3cert::dataset;
use k3cert::deformation::versal_basis;
use k3cert::lp::{min_weight_sum, simplex_min, LinearProgram};

fn main() -> k3cert::Result<()> {
    let mut lp = LinearProgram::new(vec![rat(1, 1), rat(2, 1)]);
    lp.add_constraint(vec![rat(1, 1), rat(1, 1)], rat(3, 1));
    lp.add_constraint(vec![rat(-1, 1), rat(1, 1)], rat(-1, 1));
    let r = simplex_min(&lp);
    println!(
        "min x + 2y, x + y >= 3, y >= x - 1: {:?} at {}",
        r.status,
        show(r.point.as_deref())
    );

    let e = dataset::entry(47)?;
    let supp = e.polynomial.support();
    let base = min_weight_sum(&supp, 4);
    println!(
        "No.47 alone: {} at {}",
        show_value(base.value()),
        show(base.weight.as_deref())
    );

    // each monomial of degree below one pushes the optimum above one
    let vb = versal_basis(&e.polynomial, &e.weight)?;
    for &i in vb
        .below_one()
        .iter()
        .filter(|&&i| vb.monomials[i].exponent.total_degree() > 0)
        .take(5)
    {
        let mut s = supp.clone();
        s.push(vb.monomials[i].exponent);
        let r = min_weight_sum(&s, 4);
        println!(
            "  + {:?} (degree {}): {}",
            vb.monomials[i].exponent.to_vec(4),
            vb.monomials[i].degree,
            show_value(r.value())
        );
    }
    Ok(())
}

fn show_value(v: Option<&Rational>) -> String {
    v.map_or("-".into(), fmt_rational)
}

fn show(p: Option<&[Rational]>) -> String {
    match p {
        Some(p) => format!(
            "({})",
            p.iter().map(fmt_rational).collect::<Vec<_>>().join(", ")
        ),
        None => "-".into(),
    }
}
