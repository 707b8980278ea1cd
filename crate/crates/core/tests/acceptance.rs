//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::path::Path;
use std::time::{Duration, Instant};

use k3cert::algebra::{int, rat, Polynomial, Rational, Weight};
use k3cert::certifier::{self, canonical_json, Outcome};
use k3cert::dataset;
use k3cert::deformation::{build_deformation, versal_basis, DeformationAssignment};
use k3cert::groebner::{Budget, QuotientDim};
use k3cert::invariants::{
    milnor_from_basis, milnor_from_basis_with, milnor_lower_bound, milnor_orlik, newton_number_3d,
    step3_inequality,
};
use k3cert::io::load_polynomial;
use k3cert::lp::min_weight_sum;
use k3cert::newton::{nondegenerate, simple_k3_check, Nondegeneracy};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(t: Duration, limit: u64) -> Result<(), String> {
    ensure(t.as_secs() < limit, || {
        format!("took {t:?}, limit {limit} s")
    })
}

fn p4(s: &str) -> Polynomial {
    Polynomial::parse(4, s).unwrap()
}

fn mu(f: &Polynomial) -> Result<u64, String> {
    match milnor_from_basis(f).map_err(|e| e.to_string())? {
        QuotientDim::Finite(m) => Ok(m),
        QuotientDim::Infinite => Err(format!("{f} is not isolated")),
    }
}

fn milnor_242() -> Check {
    let t = Instant::now();
    let w = Weight::from_ratios(&[(1, 2), (1, 3), (1, 12), (1, 12)]).unwrap();
    let a = milnor_orlik(&w).map_err(|e| e.to_string())?;
    let b = mu(&p4("x^2 + y^3 + z^12 + w^12"))?;
    ensure(a == 242 && b == 242, || format!("orlik {a}, basis {b}"))?;
    within(t.elapsed(), 10)?;
    Ok(format!("orlik {a}, basis {b}"))
}

fn milnor_245() -> Check {
    let t = Instant::now();
    let f = p4("x^2 + y^3 + y*w^9 + z^10*w + z^2*w^11");
    let w = simple_k3_check(&f)
        .map_err(|e| e.to_string())?
        .weight
        .ok_or("no weight")?;
    let a = milnor_orlik(&w).map_err(|e| e.to_string())?;
    let b = mu(&f)?;
    ensure(a == 245 && b == 245, || format!("orlik {a}, basis {b}"))?;
    within(t.elapsed(), 60)?;
    Ok(format!("orlik {a}, basis {b}, weight {w}"))
}

fn bound_252() -> Check {
    let b = milnor_lower_bound(&int(3), &int(10), &int(15));
    ensure(b == int(252), || format!("got {b}"))?;
    Ok("(3-1)(10-1)(15-1) = 252".into())
}

fn dataset_classification() -> Check {
    let t = Instant::now();
    for e in dataset::entries() {
        let r = simple_k3_check(&e.polynomial).map_err(|x| x.to_string())?;
        let w = r.weight.clone().ok_or(format!("No.{}: no weight", e.id))?;
        ensure(r.is_simple_k3 && w.sum().is_one() && w == e.weight, || {
            format!("No.{}: weight {w}", e.id)
        })?;
        let nd = nondegenerate(&e.polynomial).map_err(|x| x.to_string())?;
        ensure(nd == Nondegeneracy::Nondegenerate, || {
            format!("No.{}: {nd:?}", e.id)
        })?;
        let a = milnor_orlik(&w).map_err(|x| x.to_string())?;
        let b = mu(&e.polynomial)?;
        ensure(a == b && a == e.milnor, || {
            format!("No.{}: {a} vs {b}", e.id)
        })?;
    }
    within(t.elapsed(), 600)?;
    Ok(format!("12 entries, 0 mismatches, {:?}", t.elapsed()))
}

fn lp_suite() -> Check {
    let t = Instant::now();
    let mut instances = 0;
    let mut skipped_constant = 0;
    let mut boundary_only = Vec::new();
    for e in dataset::entries() {
        let supp = e.polynomial.support();
        let r = min_weight_sum(&supp, 4);
        ensure(
            r.value() == Some(&Rational::one()) && r.interior_optimum,
            || format!("No.{}: base value {:?}", e.id, r.value()),
        )?;
        let vb = versal_basis(&e.polynomial, &e.weight).map_err(|x| x.to_string())?;
        for i in vb.below_one() {
            let nu = vb.monomials[i].exponent;
            // `<alpha, 0> >= 1` is infeasible, so the constant monomial says nothing
            if nu.total_degree() == 0 {
                skipped_constant += 1;
                continue;
            }
            let mut s = supp.clone();
            s.push(nu);
            let r = min_weight_sum(&s, 4);
            let v = r.value().cloned().unwrap_or_else(Rational::zero);
            // adding eps to every entry of a feasible weight keeps it feasible,
            // so the infimum over positive weights is the LP value
            ensure(v > Rational::one(), || {
                format!("No.{} with {:?}: value {v}", e.id, nu.to_vec(4))
            })?;
            if !r.interior_optimum {
                boundary_only.push(format!("No.{}+{:?}", e.id, nu.to_vec(4)));
            }
            instances += 1;
        }
    }
    within(t.elapsed(), 600)?;
    Ok(format!(
        "{instances} appended monomials, infimum over positive weights above 1 for all; \
         {} attained only on the boundary ({}); {skipped_constant} constant monomials skipped",
        boundary_only.len(),
        boundary_only.join(" ")
    ))
}

fn example_deformation() -> Check {
    let t = Instant::now();
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/example_deformation.json");
    let f = load_polynomial(&path).map_err(|e| e.to_string())?;
    let c = certifier::descent(&f, 8).map_err(|e| e.to_string())?;
    ensure(c.outcome.is_rational(), || {
        format!("outcome {:?}: {:?}", c.outcome, c.reason)
    })?;
    ensure(c.steps() <= 8, || format!("{} steps", c.steps()))?;
    let w = c
        .final_weight()
        .map_err(|e| e.to_string())?
        .ok_or("no final weight")?;
    ensure(w.sum() > Rational::one(), || {
        format!("weight sum {}", w.sum())
    })?;
    let expected = Weight::new(vec![rat(1, 2), rat(17, 50), rat(3, 25), rat(2, 25)]).unwrap();
    ensure(w == expected, || format!("final weight {w}"))?;
    let has = |kind: &str, var: &str, repl: &str| {
        c.chain
            .iter()
            .any(|s| s.kind == kind && s.var == var && s.replacement == repl)
    };
    ensure(c.chain.iter().any(|s| s.kind == "complete-cube"), || {
        "no cube completion".into()
    })?;
    ensure(has("shift-z", "z", "z - w"), || "no z shift".into())?;
    ensure(has("complete-cube", "y", "y - w^4"), || {
        "no w^4 cube completion".into()
    })?;
    let text = canonical_json(&c);
    let report = certifier::verify_text(&text).map_err(|e| e.to_string())?;
    ensure(report.ok, || {
        format!("verification mismatches {:?}", report.mismatches)
    })?;
    let again = certifier::descent(&f, 8).map_err(|e| e.to_string())?;
    ensure(canonical_json(&again) == text, || {
        "descent not deterministic".into()
    })?;
    Ok(format!(
        "{} steps, {} substitutions, weight sum {}, verified, {:?}",
        c.steps(),
        c.chain.len(),
        w.sum(),
        t.elapsed()
    ))
}

fn kouchnirenko() -> Check {
    let t = Instant::now();
    let brieskorn =
        |a: u32, b: u32, c: u32| Polynomial::parse(3, &format!("x^{a} + y^{b} + z^{c}")).unwrap();
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    let mut triples = vec![(2, 3, 7)];
    for _ in 0..5 {
        triples.push((
            rng.gen_range(2..=12),
            rng.gen_range(2..=12),
            rng.gen_range(2..=12),
        ));
    }
    let mut seen = Vec::new();
    for (a, b, c) in triples {
        let f = brieskorn(a, b, c);
        let nu = newton_number_3d(&f).map_err(|e| e.to_string())?;
        let m = mu(&f)?;
        let expected = ((a - 1) * (b - 1) * (c - 1)) as i64;
        ensure(nu == m as i64 && nu == expected, || {
            format!("({a},{b},{c}): {nu} vs {m}")
        })?;
        seen.push(format!("({a},{b},{c})={m}"));
    }
    within(t.elapsed(), 60)?;
    Ok(seen.join(" "))
}

fn random_rational(rng: &mut impl Rng, max_den: i64) -> Rational {
    let num = loop {
        let n = rng.gen_range(-6..=6i64);
        if n != 0 {
            break n;
        }
    };
    rat(num, rng.gen_range(1..=max_den))
}

fn semicontinuity() -> Check {
    let t = Instant::now();
    let e = dataset::entry(12).unwrap();
    let vb = versal_basis(&e.polynomial, &e.weight).map_err(|x| x.to_string())?;
    let upper: Vec<usize> = vb.on_one().into_iter().chain(vb.above_one()).collect();
    let lower: Vec<usize> = vb
        .below_one()
        .into_iter()
        .filter(|&i| vb.monomials[i].exponent.total_degree() > 0)
        .collect();
    let mut rng = rand::rngs::StdRng::seed_from_u64(272);
    let mut dropped = Vec::new();
    for k in 0..13 {
        let mut pairs: Vec<(usize, Rational)> = (0..3)
            .map(|_| {
                (
                    upper[rng.gen_range(0..upper.len())],
                    random_rational(&mut rng, 4),
                )
            })
            .collect();
        if k >= 10 {
            pairs.push((
                lower[rng.gen_range(0..lower.len())],
                random_rational(&mut rng, 4),
            ));
        }
        let d = build_deformation(&e.polynomial, &vb, &DeformationAssignment::new(pairs))
            .map_err(|x| x.to_string())?;
        let m = milnor_from_basis_with(&d.polynomial, None, &mut Budget::new(1 << 30))
            .map_err(|x| x.to_string())?
            .finite()
            .ok_or("non-isolated deformation")?;
        if k < 10 {
            ensure(m == 272, || format!("{}: mu {m}", d.polynomial))?;
        } else {
            ensure(d.mu_dropping() && m < 272, || {
                format!("{}: mu {m}", d.polynomial)
            })?;
            dropped.push(m.to_string());
        }
    }
    within(t.elapsed(), 600)?;
    Ok(format!(
        "10 deformations keep 272, 3 drop to {}",
        dropped.join(", ")
    ))
}

fn step3() -> Check {
    let mut rng = rand::rngs::StdRng::seed_from_u64(3);
    let mut n = 0;
    while n < 1000 {
        let den = rng.gen_range(8..=400i64);
        let s = rat(rng.gen_range(2..den), den);
        let d = &s * rat(rng.gen_range(1..=1000), 2000);
        let g = &s - &d;
        let g2 = &g + (&d * rat(rng.gen_range(1..1000), 1000));
        let d2 = &s - &g2;
        if !(d2 > Rational::zero() && d2 < d && d <= g && g < g2 && g2 < Rational::one()) {
            continue;
        }
        let r = step3_inequality(&g, &d, &g2, &d2).map_err(|e| e.to_string())?;
        ensure(r.holds && r.lhs < r.rhs, || {
            format!("fails at ({g}, {d}, {g2}, {d2})")
        })?;
        ensure(r.factored == &r.rhs - &r.lhs, || {
            format!("factored form differs at ({g}, {d}, {g2}, {d2})")
        })?;
        n += 1;
    }
    Ok(format!(
        "{n} samples, strict inequality and factored identity hold"
    ))
}

fn soundness() -> Check {
    for e in dataset::entries() {
        let c =
            certifier::descent(&e.polynomial, certifier::DEFAULT_CAP).map_err(|x| x.to_string())?;
        ensure(
            c.outcome == Outcome::Inconclusive && c.states.is_empty() && c.chain.is_empty(),
            || format!("No.{}: {:?} after {} steps", e.id, c.outcome, c.steps()),
        )?;
        ensure(c.milnor.as_ref().is_some_and(|m| !m.drops), || {
            format!("No.{}: drop reported", e.id)
        })?;
        let w = certifier::reid_noncanonical_witness(&e.polynomial)
            .map_err(|x| x.to_string())?
            .ok_or(format!("No.{}: no witness", e.id))?;
        ensure(w == e.weight, || format!("No.{}: witness {w}", e.id))?;
    }
    Ok("12 entries inconclusive before any step, witness = simple K3 weight".into())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("mu(No.10) = 242 by both methods", milnor_242),
        ("mu(No.83) = 245 by both methods", milnor_245),
        ("lower bound (3,10,15) = 252", bound_252),
        ("dataset classification", dataset_classification),
        ("weight-sum LP suite", lp_suite),
        ("worked deformation of No.12 certified", example_deformation),
        ("Newton number equals Milnor number", kouchnirenko),
        ("semicontinuity on No.12", semicontinuity),
        ("weight-sum monotonicity inequality", step3),
        ("undeformed entries never certified", soundness),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match r {
            Ok(detail) => println!(
                "criterion {:>2}: PASS  {name} ({secs:.2}s): {detail}",
                i + 1
            ),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
