use k3cert::algebra::factor::expand_double;
use k3cert::algebra::{
    double_factor, initial_part, min_degree, rat, DoubleFactor, ExponentVector, Polynomial,
    Rational, Weight, Y,
};
use k3cert::groebner::{groebner, MonomialOrder};
use k3cert::invariants::{milnor_from_basis, newton_number_3d, step3_inequality};
use k3cert::io::{parse_terms, to_terms};
use k3cert::lp::{min_weight_sum, simplex_min, LinearProgram, LpStatus};
use k3cert::newton::polyhedron::verify_face_weight;
use k3cert::newton::{newton_polyhedron, simple_k3_check};
use num_traits::One;
use proptest::prelude::*;

fn coeff() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| rat(n, d))
}

fn poly(nvars: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, nvars), coeff()),
        1..=max_terms,
    )
    .prop_map(move |ts| {
        Polynomial::from_terms(
            nvars,
            ts.into_iter().map(|(e, c)| (ExponentVector::new(&e), c)),
        )
    })
}

fn weight(nvars: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec((1i64..=12, 1i64..=24), nvars)
        .prop_map(|v| Weight::new(v.into_iter().map(|(n, d)| rat(n, d)).collect()).unwrap())
}

fn without_y(p: Polynomial) -> Polynomial {
    p.filter_terms(|e, _| e.get(Y) == 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coordinate_change_round_trip(f in poly(4, 3, 6), g in poly(4, 2, 3)) {
        let g = without_y(g);
        let y = Polynomial::var(4, Y);
        let there = f.substitute(Y, &(&y + &g)).unwrap();
        let back = there.substitute(Y, &(&y - &g)).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn initial_part_is_idempotent(f in poly(4, 4, 8), a in weight(4)) {
        let f0 = initial_part(&f, &a).unwrap();
        prop_assert_eq!(initial_part(&f0, &a).unwrap(), f0);
    }

    #[test]
    fn min_degree_is_additive(f in poly(4, 3, 5), g in poly(4, 3, 5), a in weight(4)) {
        let fg = &f * &g;
        prop_assert_eq!(
            min_degree(&fg, &a).unwrap(),
            min_degree(&f, &a).unwrap() + min_degree(&g, &a).unwrap()
        );
    }

    #[test]
    fn double_factor_expands_back(g in poly(4, 2, 3), h in poly(4, 2, 3)) {
        let (g, h) = (without_y(g), without_y(h));
        let cubic = expand_double(4, Y, &g, &h);
        match double_factor(&cubic, Y).unwrap() {
            DoubleFactor::Double { g: g2, h: h2 } => {
                prop_assert_eq!(expand_double(4, Y, &g2, &h2), cubic);
            }
            DoubleFactor::Triple { .. } => prop_assert_eq!(&g, &h),
            other => prop_assert!(false, "no double factor found: {:?}", other),
        }
    }

    #[test]
    fn reduced_basis_ignores_generator_order(a in poly(3, 3, 3), b in poly(3, 3, 3), c in poly(3, 2, 2)) {
        let one = groebner(&[a.clone(), b.clone(), c.clone()], &MonomialOrder::GrevLex).unwrap();
        let two = groebner(&[c, a, b], &MonomialOrder::GrevLex).unwrap();
        prop_assert_eq!(one.generators, two.generators);
    }

    #[test]
    fn terms_round_trip(f in poly(4, 20, 10)) {
        prop_assert_eq!(parse_terms(&to_terms(&f)).unwrap(), f);
    }

    #[test]
    fn step3_holds(num in 2i64..400, dfrac in 1i64..1000, gfrac in 1i64..1000) {
        let s = rat(num, 401);
        let d = &s * rat(dfrac, 2000);
        let g = &s - &d;
        let g2 = &g + &d * rat(gfrac, 1000);
        let d2 = &s - &g2;
        let r = step3_inequality(&g, &d, &g2, &d2).unwrap();
        prop_assert!(r.holds);
        prop_assert_eq!(r.factored, &r.rhs - &r.lhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lp_solutions_are_exactly_optimal(
        rows in prop::collection::vec((prop::collection::vec(-3i64..=5, 3), -4i64..=6), 1..6),
        obj in prop::collection::vec(0i64..=5, 3),
        t in 1i64..=7,
    ) {
        let mut lp = LinearProgram::new(obj.iter().map(|&c| rat(c, 1)).collect());
        for (a, b) in &rows {
            lp.add_constraint(a.iter().map(|&x| rat(x, 1)).collect(), rat(*b, 1));
        }
        let r = simplex_min(&lp);
        if r.status == LpStatus::Optimal {
            let x = r.point.clone().unwrap();
            let v = r.value.clone().unwrap();
            prop_assert!(lp.is_feasible(&x));
            let at: Rational = lp.objective.iter().zip(&x).map(|(c, xi)| c * xi).sum();
            prop_assert_eq!(&at, &v);
            prop_assert!(lp.verify_optimal(&x, r.duals.as_ref().unwrap()));

            // scaling every right-hand side scales the optimum
            let mut scaled = LinearProgram::new(lp.objective.clone());
            for (a, b) in &lp.constraints {
                scaled.add_constraint(a.clone(), b * rat(t, 1));
            }
            prop_assert_eq!(simplex_min(&scaled).value, Some(v * rat(t, 1)));
        }
    }

    #[test]
    fn face_weights_support_the_polyhedron(f in poly(4, 6, 7)) {
        let np = newton_polyhedron(&f).unwrap();
        for face in &np.compact_faces {
            prop_assert!(verify_face_weight(face, &f.support()));
        }
    }

    #[test]
    fn simple_k3_weights_sum_to_one(f in poly(4, 14, 6)) {
        let f = &f + &Polynomial::parse(4, "x^2 + y^3").unwrap();
        if f.terms().all(|(e, _)| e.total_degree() >= 2) {
            let r = simple_k3_check(&f).unwrap();
            if r.is_simple_k3 {
                prop_assert!(r.weight.unwrap().sum().is_one());
            }
        }
    }

    #[test]
    fn weight_sum_lp_matches_its_point(f in poly(4, 8, 8)) {
        let r = min_weight_sum(&f.support(), 4);
        if let (Some(v), Some(w)) = (r.value(), &r.weight) {
            let s: Rational = w.iter().sum();
            prop_assert_eq!(&s, v);
            for e in f.support() {
                let d: Rational = (0..4).map(|i| &w[i] * rat(e.get(i) as i64, 1)).sum();
                prop_assert!(d >= Rational::one());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn newton_number_bounds_milnor_from_below(
        a in 2u32..=7, b in 2u32..=7, c in 2u32..=7,
        extra in prop::collection::vec((prop::collection::vec(0u32..=4, 3), 1i64..=3), 0..3),
    ) {
        let mut f = Polynomial::parse(3, &format!("x^{a} + y^{b} + z^{c}")).unwrap();
        for (e, k) in extra {
            if e.iter().sum::<u32>() >= 2 {
                f.add_term(ExponentVector::new(&e), rat(k, 1));
            }
        }
        prop_assume!(f.terms().all(|(e, _)| e.total_degree() >= 2));
        let nu = newton_number_3d(&f).unwrap();
        if let Some(m) = milnor_from_basis(&f).unwrap().finite() {
            prop_assert!(nu <= m as i64, "{f}: newton {nu}, mu {m}");
        }
    }
}
