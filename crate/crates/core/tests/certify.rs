use std::path::Path;

use k3cert::algebra::{rat, Polynomial, Rational};
use k3cert::certifier::{
    canonical_json, descent, descent_with, reid_noncanonical_witness, verify, weight_search,
    DescentOptions, Outcome, DEFAULT_CAP,
};
use k3cert::io::load_polynomial;
use num_traits::One;

fn example() -> Polynomial {
    load_polynomial(
        &Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/example_deformation.json"),
    )
    .unwrap()
}

fn p(s: &str) -> Polynomial {
    Polynomial::parse(4, s).unwrap()
}

#[test]
fn worked_example_chain() {
    let c = descent(&example(), DEFAULT_CAP).unwrap();
    assert_eq!(c.outcome, Outcome::RationalByCurveCase);
    let chain: Vec<_> = c
        .chain
        .iter()
        .map(|s| (s.kind.as_str(), s.var.as_str(), s.replacement.as_str()))
        .collect();
    assert_eq!(
        chain,
        [
            ("complete-cube", "y", "y + z^3 - 3*z*w^2 - 2*w^3"),
            ("shift-z", "z", "z - w"),
            ("complete-cube", "y", "y - w^4"),
        ]
    );
    let ratios: Vec<_> = c.states.iter().map(|s| s.ratio.clone().unwrap()).collect();
    assert_eq!(ratios, ["1", "3/2", "3/2"]);
    assert_eq!(c.weight_sum.as_deref(), Some("26/25"));
    assert!(verify(&c).unwrap().ok);
}

#[test]
fn every_state_has_weight_sum_above_one() {
    let c = descent(&example(), DEFAULT_CAP).unwrap();
    for s in &c.states {
        let sum = Polynomial::parse(1, &s.weight_sum).unwrap().constant_term();
        assert!(sum > Rational::one());
        let lp = Polynomial::parse(1, s.lp_min_weight_sum.as_ref().unwrap())
            .unwrap()
            .constant_term();
        assert!(lp > Rational::one() && lp <= sum);
    }
}

#[test]
fn edge_ratios_increase_strictly() {
    let c = descent(&example(), DEFAULT_CAP).unwrap();
    let edges: Vec<Rational> = c
        .states
        .iter()
        .filter(|s| s.edge.is_some())
        .map(|s| {
            Polynomial::parse(1, s.ratio.as_ref().unwrap())
                .unwrap()
                .constant_term()
        })
        .collect();
    assert!(edges[0] >= Rational::one());
    assert!(edges.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn certified_means_no_reid_witness() {
    let cases = [
        example(),
        p("x^2 + y^3 + z^12 + w^12 + z*w"),
        p("x^2 + y^3 + z^9 + w^18 + z^4*w^2"),
        p("x^2 + y^3 + y*w^9 + z^10*w + z^2*w^11 + z^3*w^3"),
    ];
    for f in cases {
        let c = descent(&f, DEFAULT_CAP).unwrap();
        if c.outcome.is_rational() {
            assert!(reid_noncanonical_witness(&f).unwrap().is_none(), "{f}");
            assert!(verify(&c).unwrap().ok, "{f}");
        }
    }
}

#[test]
fn witness_blocks_certification() {
    // mu drops against the given reference, but a weight of sum below one has degree one
    let f = p("x^2 + y^3 + z^12 + w^13");
    let opts = DescentOptions {
        reference: Some(1000),
        ..DescentOptions::default()
    };
    let c = descent_with(&f, &opts).unwrap();
    assert_eq!(c.outcome, Outcome::NoncanonicalWitness);
    assert!(c.final_weight().unwrap().is_none());
    let w = reid_noncanonical_witness(&f).unwrap().unwrap();
    assert_eq!(c.witness, Some(w.primitive()));
    assert!(verify(&c).unwrap().ok);
}

#[test]
fn low_cap_is_inconclusive_not_wrong() {
    let c = descent(&example(), 1).unwrap();
    assert!(matches!(
        c.outcome,
        Outcome::Inconclusive
            | Outcome::RationalByCurveCase
            | Outcome::RationalByIsolatedInitialPart
    ));
    assert!(verify(&c).unwrap().ok);
}

#[test]
fn face_search_on_semi_quasihomogeneous_drop() {
    let f = p("x^2 + y^3 + z^9 + w^18 + z^3*w^3");
    let c = weight_search(&f).unwrap().expect("a face certifies");
    assert!(c.outcome.is_rational());
    assert!(c.final_weight().unwrap().unwrap().sum() > Rational::one());
    assert!(verify(&c).unwrap().ok);
    assert_eq!(
        canonical_json(&c),
        canonical_json(&weight_search(&f).unwrap().unwrap())
    );
}

#[test]
fn tampered_certificates_fail() {
    let mut c = descent(&example(), DEFAULT_CAP).unwrap();
    c.chain[1].replacement = "z + w".into();
    assert!(verify(&c).map(|r| !r.ok).unwrap_or(true));
    let mut c = descent(&example(), DEFAULT_CAP).unwrap();
    c.final_weight = Some(
        k3cert::algebra::Weight::new(vec![rat(1, 2), rat(1, 3), rat(1, 9), rat(1, 9)])
            .unwrap()
            .primitive(),
    );
    assert!(verify(&c).map(|r| !r.ok).unwrap_or(true));
}
