use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::algebra::polynomial::{initial_part, min_degree, Polynomial, VAR_NAMES};
use crate::algebra::rational::{fmt_rational, Rational};
use crate::algebra::weight::{PrimitiveWeight, Weight};
use crate::certifier::descent::{infer_reference, measure_milnor};
use crate::certifier::singular::{check_initial_part, InitialPartCheck};
use crate::error::{Error, Result};
use crate::groebner::{Budget, MonomialOrder};
use crate::lp::min_weight_sum;

pub const CERTIFICATE_FORMAT: &str = "k3cert-certificate/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    RationalByIsolatedInitialPart,
    RationalByCurveCase,
    NoncanonicalWitness,
    Inconclusive,
}

impl Outcome {
    pub fn is_rational(self) -> bool {
        matches!(
            self,
            Outcome::RationalByIsolatedInitialPart | Outcome::RationalByCurveCase
        )
    }
}

/// `var := replacement`, applied to the current polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Substitution {
    pub kind: String,
    pub var: String,
    pub replacement: String,
}

/// One weight visited by the descent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateRecord {
    pub step: usize,
    pub case: String,
    /// Number of chain entries applied before this state.
    pub chain_len: usize,
    pub weight: Vec<String>,
    pub weight_sum: String,
    /// `(k1, l1, k0, l0)` of the selected edge.
    pub edge: Option<Vec<String>>,
    pub ratio: Option<String>,
    pub lp_min_weight_sum: Option<String>,
    pub initial_part: String,
}

/// The Milnor-number drop required before a descent starts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MilnorCheck {
    pub reference: u64,
    pub reference_source: String,
    /// `mod-p-upper-bound` or `exact`.
    pub method: String,
    pub value: u64,
    pub drops: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Irreducibility {
    /// `verified`, `assumed-unverified` or `not-applicable`.
    pub status: String,
    pub reason: String,
}

impl Irreducibility {
    pub(crate) fn for_check(check: Option<&InitialPartCheck>) -> Self {
        match check {
            Some(_) => Irreducibility {
                status: "verified".into(),
                reason: "a product of two factors would be singular in dimension two".into(),
            },
            None => Irreducibility {
                status: "not-applicable".into(),
                reason: "no initial part is certified".into(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub format: String,
    pub input: String,
    pub outcome: Outcome,
    pub milnor: Option<MilnorCheck>,
    pub chain: Vec<Substitution>,
    pub states: Vec<StateRecord>,
    pub final_polynomial: Option<String>,
    pub final_weight: Option<PrimitiveWeight>,
    pub weight_sum: Option<String>,
    pub final_initial_part: Option<String>,
    pub check: Option<InitialPartCheck>,
    pub witness: Option<PrimitiveWeight>,
    pub irreducibility: Irreducibility,
    pub reason: Option<String>,
}

impl Certificate {
    pub fn input_polynomial(&self) -> Result<Polynomial> {
        Polynomial::parse(4, &self.input)
    }

    pub fn final_weight(&self) -> Result<Option<Weight>> {
        self.final_weight.as_ref().map(weight_of).transpose()
    }

    pub fn steps(&self) -> usize {
        self.states.len()
    }
}

/// Pretty JSON with a trailing newline; the byte form checked by
/// [`verify_text`].
pub fn canonical_json(c: &Certificate) -> String {
    let mut s = serde_json::to_string_pretty(c).expect("certificate serializes");
    s.push('\n');
    s
}

pub(crate) fn weight_strings(w: &Weight) -> Vec<String> {
    w.entries().iter().map(fmt_rational).collect()
}

pub(crate) fn weight_of(p: &PrimitiveWeight) -> Result<Weight> {
    let parse = |s: &str| {
        s.parse::<num_bigint::BigInt>()
            .map_err(|_| Error::InvalidInput(format!("bad integer `{s}` in weight")))
    };
    let ps = p
        .p_vector
        .iter()
        .map(|s| parse(s))
        .collect::<Result<Vec<_>>>()?;
    Weight::from_integers(&ps, &parse(&p.p)?)
}

fn parse_rational(s: &str) -> Result<Rational> {
    let p = Polynomial::parse(1, s)?;
    if !p.is_constant() {
        return Err(Error::InvalidInput(format!("`{s}` is not a number")));
    }
    Ok(p.constant_term())
}

fn var_index(name: &str) -> Result<usize> {
    VAR_NAMES[..4]
        .iter()
        .position(|v| *v == name)
        .ok_or_else(|| Error::InvalidInput(format!("unknown variable `{name}`")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub ok: bool,
    pub outcome: Outcome,
    /// Top-level fields whose recomputed value differs.
    pub mismatches: Vec<String>,
}

/// Replays the chain from the input, recomputes every recorded state, the
/// final initial part and its checks, and compares the rebuilt certificate
/// with the given one field by field.
pub fn verify(c: &Certificate) -> Result<VerifyReport> {
    let rebuilt = rebuild(c)?;
    let a = serde_json::to_value(c)?;
    let b = serde_json::to_value(&rebuilt)?;
    let mut mismatches = Vec::new();
    if let (Some(a), Some(b)) = (a.as_object(), b.as_object()) {
        for (k, v) in a {
            if b.get(k) != Some(v) {
                mismatches.push(k.clone());
            }
        }
    }
    if canonical_json(c) != canonical_json(&rebuilt) && mismatches.is_empty() {
        mismatches.push("<encoding>".into());
    }
    Ok(VerifyReport {
        ok: mismatches.is_empty(),
        outcome: c.outcome,
        mismatches,
    })
}

/// [`verify`] on a certificate file, which must also be byte-identical to
/// its canonical encoding.
pub fn verify_text(text: &str) -> Result<VerifyReport> {
    let c: Certificate = serde_json::from_str(text)?;
    let mut report = verify(&c)?;
    if text != canonical_json(&c) {
        report.ok = false;
        report.mismatches.push("<bytes>".into());
    }
    Ok(report)
}

fn rebuild(c: &Certificate) -> Result<Certificate> {
    if c.format != CERTIFICATE_FORMAT {
        return Err(Error::InvalidInput(format!(
            "unsupported certificate format `{}`",
            c.format
        )));
    }
    let input = c.input_polynomial()?;
    let mut budget = Budget::default();

    let milnor = match &c.milnor {
        None => None,
        Some(m) => {
            let reference = if m.reference_source == "given" {
                m.reference
            } else {
                match infer_reference(&input)? {
                    Some(r) if r.source == m.reference_source => r.milnor,
                    _ => {
                        return Err(Error::InvalidInput(
                            "reference germ does not match the input".into(),
                        ))
                    }
                }
            };
            let value = measure_milnor(&input, &m.method, &mut budget)?;
            Some(MilnorCheck {
                reference,
                reference_source: m.reference_source.clone(),
                method: m.method.clone(),
                value,
                drops: value < reference,
            })
        }
    };

    // replay, keeping every intermediate polynomial
    let mut polys = vec![input.clone()];
    for s in &c.chain {
        let var = var_index(&s.var)?;
        let repl = Polynomial::parse(4, &s.replacement)?;
        let next = polys.last().unwrap().substitute(var, &repl)?;
        polys.push(next);
    }

    let mut states = Vec::new();
    for s in &c.states {
        let f = polys
            .get(s.chain_len)
            .ok_or_else(|| Error::InvalidInput("state refers past the chain".into()))?;
        let w = Weight::new(
            s.weight
                .iter()
                .map(|x| parse_rational(x))
                .collect::<Result<Vec<_>>>()?,
        )?;
        if w.sum() <= Rational::one() || !min_degree(f, &w)?.is_one() {
            return Err(Error::InvalidInput(format!(
                "state {} does not carry a weight of sum above one with degree one",
                s.step
            )));
        }
        let lp = min_weight_sum(&f.support(), f.nvars());
        states.push(StateRecord {
            step: s.step,
            case: s.case.clone(),
            chain_len: s.chain_len,
            weight: weight_strings(&w),
            weight_sum: fmt_rational(&w.sum()),
            edge: s.edge.clone(),
            ratio: s.ratio.clone(),
            lp_min_weight_sum: lp.value().map(fmt_rational),
            initial_part: initial_part(f, &w)?.to_string(),
        });
    }

    let last = polys.last().unwrap();
    let mut out = Certificate {
        format: CERTIFICATE_FORMAT.into(),
        input: input.to_string(),
        outcome: c.outcome,
        milnor,
        chain: c.chain.clone(),
        states,
        final_polynomial: None,
        final_weight: None,
        weight_sum: None,
        final_initial_part: None,
        check: None,
        witness: None,
        irreducibility: Irreducibility::for_check(None),
        reason: c.reason.clone(),
    };
    match c.outcome {
        Outcome::RationalByIsolatedInitialPart | Outcome::RationalByCurveCase => {
            if c.milnor.as_ref().is_some_and(|m| !m.drops) {
                return Err(Error::InvalidInput(
                    "rational outcome without a Milnor-number drop".into(),
                ));
            }
            let Some(pw) = &c.final_weight else {
                // the origin is off the hypersurface
                if input.constant_term() == Rational::from_integer(0.into()) {
                    return Err(Error::InvalidInput(
                        "rational outcome without a weight".into(),
                    ));
                }
                return Ok(out);
            };
            let w = weight_of(pw)?;
            if w.sum() <= Rational::one() || !min_degree(last, &w)?.is_one() {
                return Err(Error::InvalidInput(
                    "final weight must have sum above one and degree one".into(),
                ));
            }
            let f0 = initial_part(last, &w)?;
            let check = check_initial_part(&f0, &MonomialOrder::GrevLex, &mut budget)?;
            let expected = match &check {
                Some(InitialPartCheck::Isolated { .. }) => Outcome::RationalByIsolatedInitialPart,
                Some(InitialPartCheck::CurveCase { .. }) => Outcome::RationalByCurveCase,
                None => {
                    return Err(Error::InvalidInput(
                        "the initial part does not pass its checks".into(),
                    ))
                }
            };
            out.outcome = expected;
            out.final_polynomial = Some(last.to_string());
            out.final_weight = Some(w.primitive());
            out.weight_sum = Some(fmt_rational(&w.sum()));
            out.final_initial_part = Some(f0.to_string());
            out.irreducibility = Irreducibility::for_check(check.as_ref());
            out.check = check;
        }
        Outcome::NoncanonicalWitness => {
            let pw = c
                .witness
                .as_ref()
                .ok_or_else(|| Error::InvalidInput("witness missing".into()))?;
            let w = weight_of(pw)?;
            if w.sum() > Rational::one() || !min_degree(&input, &w)?.is_one() {
                return Err(Error::InvalidInput(
                    "witness must have sum at most one and degree one".into(),
                ));
            }
            out.witness = Some(w.primitive());
        }
        Outcome::Inconclusive => {}
    }
    Ok(out)
}
