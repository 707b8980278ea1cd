//! The descent: normalize to `x^2 + y^3 + B y + C`, pick a weight from an
//! edge of the projected boundary, and alternate between testing the
//! initial part and removing repeated factors by coordinate changes.

use num_traits::{One, Zero};

use crate::algebra::exponent::ExponentVector;
use crate::algebra::factor::{double_factor, quadratic_square, DoubleFactor};
use crate::algebra::polynomial::{initial_part, min_degree, Polynomial, VAR_NAMES};
use crate::algebra::rational::{fmt_rational, int, rat, Rational};
use crate::algebra::univariate::UniPoly;
use crate::algebra::weight::Weight;
use crate::algebra::{W, X, Y, Z};
use crate::certifier::certificate::{
    weight_strings, Certificate, Irreducibility, MilnorCheck, Outcome, StateRecord, Substitution,
    CERTIFICATE_FORMAT,
};
use crate::certifier::reid::reid_noncanonical_witness;
use crate::certifier::singular::{check_initial_part, InitialPartCheck};
use crate::dataset;
use crate::deformation::versal_basis;
use crate::error::{Error, Result};
use crate::groebner::{Budget, MonomialOrder, QuotientDim, DEFAULT_BUDGET};
use crate::invariants::{milnor_from_basis_with, milnor_upper_bound_mod_p};
use crate::lp::min_weight_sum;
use crate::newton::projected::lambda_points;
use crate::newton::{face_weight_sum_check, newton_polyhedron, Edge, ProjectedBoundary};

pub const DEFAULT_CAP: usize = 32;

/// Milnor number of the undeformed germ and where it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reference {
    pub milnor: u64,
    pub source: String,
}

#[derive(Clone, Debug)]
pub struct DescentOptions {
    pub cap: usize,
    /// Taken from the dataset when absent.
    pub reference: Option<u64>,
    pub budget: u64,
}

impl Default for DescentOptions {
    fn default() -> Self {
        DescentOptions {
            cap: DEFAULT_CAP,
            reference: None,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// The dataset germ of which `f` is a versal deformation: its own monomials
/// occur in `f` and every other monomial of `f` lies in its versal basis.
/// When the germ has exactly as many monomials as variables, with
/// independent exponents, their coefficients may be arbitrary nonzero
/// numbers, since rescaling the coordinates normalizes them.
pub fn infer_reference(f: &Polynomial) -> Result<Option<Reference>> {
    if f.nvars() != 4 {
        return Ok(None);
    }
    for e in dataset::entries() {
        let own = e.polynomial.support();
        if !own.iter().all(|m| f.contains(m)) {
            continue;
        }
        let rows: Vec<Vec<Rational>> = own
            .iter()
            .map(|m| (0..4).map(|i| int(m.get(i) as i64)).collect())
            .collect();
        let scalable = own.len() == 4 && crate::newton::polyhedron::rank(rows) == 4;
        if !scalable && !own.iter().all(|m| f.coeff(m) == e.polynomial.coeff(m)) {
            continue;
        }
        let vb = versal_basis(&e.polynomial, &e.weight)?;
        if f.terms()
            .all(|(m, _)| own.contains(m) || vb.index_of(m).is_some())
        {
            let source = if scalable {
                format!("dataset No.{} up to rescaling", e.id)
            } else {
                format!("dataset No.{}", e.id)
            };
            return Ok(Some(Reference {
                milnor: e.milnor,
                source,
            }));
        }
    }
    Ok(None)
}

/// `mod-p-upper-bound` or `exact`.
pub(crate) fn measure_milnor(f: &Polynomial, method: &str, budget: &mut Budget) -> Result<u64> {
    match method {
        "mod-p-upper-bound" => milnor_upper_bound_mod_p(f, None, budget)?
            .ok_or_else(|| Error::InvalidInput("modular Milnor bound did not stabilize".into())),
        "exact" => match milnor_from_basis_with(f, None, budget)? {
            QuotientDim::Finite(m) => Ok(m),
            QuotientDim::Infinite => Err(Error::InvalidInput("singularity is not isolated".into())),
        },
        _ => Err(Error::InvalidInput(format!("unknown method `{method}`"))),
    }
}

/// A modular upper bound below the reference proves the drop; otherwise
/// the exact value decides.
fn milnor_check(f: &Polynomial, reference: &Reference, budget: &mut Budget) -> Result<MilnorCheck> {
    let mk = |method: &str, value: u64| MilnorCheck {
        reference: reference.milnor,
        reference_source: reference.source.clone(),
        method: method.into(),
        value,
        drops: value < reference.milnor,
    };
    if let Some(b) = milnor_upper_bound_mod_p(f, None, budget)? {
        if b < reference.milnor {
            return Ok(mk("mod-p-upper-bound", b));
        }
    }
    Ok(mk("exact", measure_milnor(f, "exact", budget)?))
}

pub fn descent(f: &Polynomial, cap: usize) -> Result<Certificate> {
    descent_with(
        f,
        &DescentOptions {
            cap,
            ..DescentOptions::default()
        },
    )
}

pub fn descent_with(f: &Polynomial, opts: &DescentOptions) -> Result<Certificate> {
    if f.nvars() != 4 {
        return Err(Error::ShapeViolation("four variables required".into()));
    }
    if !f.constant_term().is_zero() {
        return Err(Error::ShapeViolation(
            "polynomial must vanish at the origin".into(),
        ));
    }
    let mut budget = Budget::new(opts.budget);
    let reference = match opts.reference {
        Some(m) => Reference {
            milnor: m,
            source: "given".into(),
        },
        None => infer_reference(f)?.ok_or_else(|| {
            Error::InvalidInput(
                "not a versal deformation of a dataset germ; supply the reference Milnor number"
                    .into(),
            )
        })?,
    };
    let mut run = Run::new(f.clone());
    let check = milnor_check(f, &reference, &mut budget)?;
    let drops = check.drops;
    run.milnor = Some(check);
    if !drops {
        return Ok(run.inconclusive("the Milnor number does not drop"));
    }
    if let Some(w) = reid_noncanonical_witness(f)? {
        let mut c = run.inconclusive("a weight with sum at most one has degree one");
        c.outcome = Outcome::NoncanonicalWitness;
        c.witness = Some(w.primitive());
        return Ok(c);
    }
    run.normalize()?;
    run.descend(opts.cap, &mut budget)
}

/// Tries the supporting weights of the three-dimensional faces of the
/// Newton polyhedron whose sum exceeds one.
pub fn weight_search(f: &Polynomial) -> Result<Option<Certificate>> {
    let mut run = Run::new(f.clone());
    if !f.constant_term().is_zero() {
        let mut c = run.inconclusive("the origin is not on the hypersurface");
        c.outcome = Outcome::RationalByIsolatedInitialPart;
        return Ok(Some(c));
    }
    let mut budget = Budget::default();
    if milnor_upper_bound_mod_p(f, None, &mut budget)?.is_none()
        && milnor_from_basis_with(f, None, &mut budget)? == QuotientDim::Infinite
    {
        return Err(Error::InvalidInput("singularity is not isolated".into()));
    }
    run.search_faces(&mut budget)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Orientation {
    /// `gamma >= delta`; branches `z = c w^L`.
    ZOverW,
    /// `gamma < delta`; branches `w = c z^K`.
    WOverZ,
}

impl Orientation {
    fn of(e: &Edge) -> Self {
        if e.gamma >= e.delta {
            Orientation::ZOverW
        } else {
            Orientation::WOverZ
        }
    }

    fn ratio(self, gamma: &Rational, delta: &Rational) -> Rational {
        match self {
            Orientation::ZOverW => gamma / delta,
            Orientation::WOverZ => delta / gamma,
        }
    }

    /// `(u, v)` with branches `u = c v^L`.
    fn vars(self) -> (usize, usize) {
        match self {
            Orientation::ZOverW => (Z, W),
            Orientation::WOverZ => (W, Z),
        }
    }
}

struct Run {
    input: Polynomial,
    poly: Polynomial,
    chain: Vec<Substitution>,
    states: Vec<StateRecord>,
    milnor: Option<MilnorCheck>,
}

impl Run {
    fn new(f: Polynomial) -> Self {
        Run {
            input: f.clone(),
            poly: f,
            chain: vec![],
            states: vec![],
            milnor: None,
        }
    }

    fn base(&self, outcome: Outcome) -> Certificate {
        Certificate {
            format: CERTIFICATE_FORMAT.into(),
            input: self.input.to_string(),
            outcome,
            milnor: self.milnor.clone(),
            chain: self.chain.clone(),
            states: self.states.clone(),
            final_polynomial: None,
            final_weight: None,
            weight_sum: None,
            final_initial_part: None,
            check: None,
            witness: None,
            irreducibility: Irreducibility::for_check(None),
            reason: None,
        }
    }

    fn inconclusive(&self, reason: &str) -> Certificate {
        let mut c = self.base(Outcome::Inconclusive);
        c.reason = Some(reason.into());
        c
    }

    fn certified(&self, alpha: &Weight, f0: &Polynomial, check: InitialPartCheck) -> Certificate {
        let outcome = match check {
            InitialPartCheck::Isolated { .. } => Outcome::RationalByIsolatedInitialPart,
            InitialPartCheck::CurveCase { .. } => Outcome::RationalByCurveCase,
        };
        let mut c = self.base(outcome);
        c.final_polynomial = Some(self.poly.to_string());
        c.final_weight = Some(alpha.primitive());
        c.weight_sum = Some(fmt_rational(&alpha.sum()));
        c.final_initial_part = Some(f0.to_string());
        c.irreducibility = Irreducibility::for_check(Some(&check));
        c.check = Some(check);
        c
    }

    fn apply(&mut self, kind: &str, var: usize, replacement: Polynomial) -> Result<()> {
        self.poly = self.poly.substitute(var, &replacement)?;
        self.chain.push(Substitution {
            kind: kind.into(),
            var: VAR_NAMES[var].into(),
            replacement: replacement.to_string(),
        });
        Ok(())
    }

    fn record(
        &mut self,
        case: &str,
        alpha: &Weight,
        edge: Option<&Edge>,
        ratio: Option<&Rational>,
    ) -> Result<Polynomial> {
        let f0 = initial_part(&self.poly, alpha)?;
        let lp = min_weight_sum(&self.poly.support(), self.poly.nvars());
        self.states.push(StateRecord {
            step: self.states.len(),
            case: case.into(),
            chain_len: self.chain.len(),
            weight: weight_strings(alpha),
            weight_sum: fmt_rational(&alpha.sum()),
            edge: edge.map(|e| {
                [e.k1(), e.l1(), e.k0(), e.l0()]
                    .iter()
                    .map(fmt_rational)
                    .collect()
            }),
            ratio: ratio.map(fmt_rational),
            lp_min_weight_sum: lp.value().map(fmt_rational),
            initial_part: f0.to_string(),
        });
        Ok(f0)
    }

    /// Completes the square in `x` and removes the `y^2` term.
    fn normalize(&mut self) -> Result<()> {
        let n = self.poly.nvars();
        if self.poly.degree_in(X) != Some(2) {
            return Err(Error::ShapeViolation(
                "x must occur exactly to degree two".into(),
            ));
        }
        let c2 = self.poly.coefficient_in(X, 2);
        if !c2.is_constant() {
            return Err(Error::ShapeViolation(
                "the coefficient of x^2 must be a constant".into(),
            ));
        }
        let c1 = self.poly.coefficient_in(X, 1);
        if !c1.is_zero() {
            let shift = c1.scale(&(c2.constant_term() * int(2)).recip());
            self.apply("complete-square", X, &Polynomial::var(n, X) - &shift)?;
        }
        if self.poly.degree_in(Y) != Some(3) || !self.poly.coefficient_in(Y, 3).is_constant() {
            return Err(Error::ShapeViolation(
                "y must occur to degree three with a constant leading coefficient".into(),
            ));
        }
        let e = self.poly.coefficient_in(Y, 3).constant_term();
        let a = self.poly.coefficient_in(Y, 2);
        if !a.is_zero() {
            let shift = a.scale(&(e * int(3)).recip());
            self.apply("depress-cubic", Y, &Polynomial::var(n, Y) - &shift)?;
        }
        Ok(())
    }

    fn descend(mut self, cap: usize, budget: &mut Budget) -> Result<Certificate> {
        let n = self.poly.nvars();
        let mut pending: Option<(Weight, &'static str)> = None;
        let mut orient: Option<Orientation> = None;
        let mut ratio: Option<Rational> = None;
        let mut stop = "step cap reached";

        for _ in 0..cap {
            let (alpha, case, edge) = match pending.take() {
                Some((w, case)) => (w, case, None),
                None => {
                    let prev = orient.zip(ratio.clone());
                    let Some((e, o)) = select_edge(&self.poly, prev)? else {
                        stop = "no admissible edge";
                        break;
                    };
                    let w =
                        Weight::new(vec![rat(1, 2), rat(1, 3), e.gamma.clone(), e.delta.clone()])?;
                    let case = if orient.is_none() {
                        "initial-edge"
                    } else {
                        "steeper-edge"
                    };
                    orient = Some(o);
                    ratio = Some(o.ratio(&e.gamma, &e.delta));
                    (w, case, Some(e))
                }
            };
            let (o, r) = (orient.unwrap(), ratio.clone().unwrap());
            if alpha.sum() <= Rational::one() {
                stop = "weight sum not above one";
                break;
            }
            if !min_degree(&self.poly, &alpha)?.is_one() {
                stop = "the weight leaves terms of degree below one";
                break;
            }
            let f0 = self.record(case, &alpha, edge.as_ref(), Some(&r))?;
            if let Some(check) = check_initial_part(&f0, &MonomialOrder::weighted(&alpha), budget)?
            {
                return Ok(self.certified(&alpha, &f0, check));
            }

            let (gamma, delta) = (alpha.get(Z).clone(), alpha.get(W).clone());
            let h0 = f0.filter_terms(|e, _| e.get(X) == 0);
            let (u, v) = o.vars();
            if f0.degree_in(Y) == Some(3) {
                match double_factor(&h0, Y)? {
                    DoubleFactor::Double { g, .. } if !g.is_zero() => {
                        self.apply("complete-cube", Y, &Polynomial::var(n, Y) - &g)?;
                        let a = part(&self.poly, 2);
                        let g0 = zw_initial(&a, &gamma, &delta);
                        if let Some(rho) = repeated_branch(&g0, o, &r) {
                            if !rho.is_zero() {
                                let kind = if u == Z { "shift-z" } else { "shift-w" };
                                self.apply(kind, u, branch_shift(n, u, v, &rho, &r))?;
                            }
                            continue;
                        }
                        match reweight(&self.poly, &gamma, &delta) {
                            Some(w) => pending = Some((w, "reweight")),
                            None => {
                                stop = "no admissible reweighting";
                                break;
                            }
                        }
                    }
                    DoubleFactor::None => match bad_branch(&f0, o, &r) {
                        Some(rho) => {
                            self.apply("shift-branch", u, branch_shift(n, u, v, &rho, &r))?;
                        }
                        None => {
                            stop = "initial part fails its checks without a repeated factor";
                            break;
                        }
                    },
                    _ => {
                        stop = "the cubic has a triple or non-polynomial repeated factor";
                        break;
                    }
                }
            } else {
                match quadratic_square(&h0, Y) {
                    Some((_, phi)) if !phi.is_zero() => {
                        self.apply("complete-square-y", Y, &Polynomial::var(n, Y) - &phi)?;
                        match reweight(&self.poly, &gamma, &delta) {
                            Some(w) => pending = Some((w, "reweight")),
                            None => {
                                stop = "no admissible reweighting";
                                break;
                            }
                        }
                    }
                    _ => {
                        stop = "the quadratic part is not a square";
                        break;
                    }
                }
            }
        }
        if let Some(c) = self.search_faces(budget)? {
            return Ok(c);
        }
        Ok(self.inconclusive(stop))
    }

    fn search_faces(&mut self, budget: &mut Budget) -> Result<Option<Certificate>> {
        let f = self.poly.clone();
        let n = f.nvars();
        let mut weights = Vec::new();
        if f.terms().any(|(e, _)| e.total_degree() == 1) {
            weights.push(Weight::new(vec![Rational::one(); n])?);
        }
        let poly = newton_polyhedron(&f)?;
        for face in poly.faces_of_dimension(n - 1) {
            if face.weight.sum() > Rational::one() {
                weights.push(face.weight.clone());
            }
        }
        for w in weights {
            if !min_degree(&f, &w)?.is_one() {
                continue;
            }
            let f0 = initial_part(&f, &w)?;
            if let Some(check) = check_initial_part(&f0, &MonomialOrder::weighted(&w), budget)? {
                self.record("face-search", &w, None, None)?;
                return Ok(Some(self.certified(&w, &f0, check)));
            }
        }
        Ok(None)
    }
}

/// The edge for the next weight: initially the edge crossing the diagonal
/// (the `gamma >= delta` one at a vertex), afterwards the least steep edge
/// steeper than the previous one.
fn select_edge(
    f: &Polynomial,
    prev: Option<(Orientation, Rational)>,
) -> Result<Option<(Edge, Orientation)>> {
    let pb = ProjectedBoundary::from_points(lambda_points(f, true)?);
    let mut cands: Vec<Edge> = pb
        .edges
        .into_iter()
        .filter(|e| e.within_six() && face_weight_sum_check(&e.gamma, &e.delta))
        .collect();
    match prev {
        None => {
            cands.retain(|e| e.meets_diagonal());
            cands.sort_by_key(|e| Orientation::of(e) != Orientation::ZOverW);
            Ok(cands.into_iter().next().map(|e| {
                let o = Orientation::of(&e);
                (e, o)
            }))
        }
        Some((o, r)) => Ok(cands
            .into_iter()
            .filter(|e| o.ratio(&e.gamma, &e.delta) > r)
            .min_by(|a, b| {
                o.ratio(&a.gamma, &a.delta)
                    .cmp(&o.ratio(&b.gamma, &b.delta))
            })
            .map(|e| (e, o))),
    }
}

/// Coefficient of `y^j`, without the `x^2` term.
fn part(f: &Polynomial, j: u32) -> Polynomial {
    f.coefficient_in(Y, j).filter_terms(|e, _| e.get(X) == 0)
}

fn zw_degree(e: &ExponentVector, gamma: &Rational, delta: &Rational) -> Rational {
    gamma * int(e.get(Z) as i64) + delta * int(e.get(W) as i64)
}

fn zw_min_degree(p: &Polynomial, gamma: &Rational, delta: &Rational) -> Option<Rational> {
    p.terms().map(|(e, _)| zw_degree(e, gamma, delta)).min()
}

fn zw_initial(p: &Polynomial, gamma: &Rational, delta: &Rational) -> Polynomial {
    match zw_min_degree(p, gamma, delta) {
        Some(m) => p.filter_terms(|e, _| zw_degree(e, gamma, delta) == m),
        None => p.clone(),
    }
}

fn univariate_at_one(p: &Polynomial, u: usize, v: usize) -> UniPoly {
    let q = p.evaluate_var(v, &Rational::one());
    UniPoly::new(
        q.coefficients_in(u)
            .iter()
            .map(|c| c.constant_term())
            .collect(),
    )
}

fn multiplicity(p: &Polynomial, u: usize, v: usize, rho: &Rational) -> usize {
    if p.is_zero() {
        return usize::MAX;
    }
    univariate_at_one(p, u, v)
        .rational_roots()
        .into_iter()
        .find(|(r, _)| r == rho)
        .map_or(0, |(_, m)| m)
}

/// `rho` with `(u - rho v^L)^2` dividing `g0`, where `L` is the ratio.
fn repeated_branch(g0: &Polynomial, o: Orientation, ratio: &Rational) -> Option<Rational> {
    if g0.is_zero() {
        return None;
    }
    let (u, v) = o.vars();
    let roots = univariate_at_one(g0, u, v).rational_roots();
    if ratio.is_integer() {
        if let Some((r, _)) = roots
            .iter()
            .filter(|(r, m)| *m >= 2 && !r.is_zero())
            .max_by_key(|(_, m)| *m)
        {
            return Some(r.clone());
        }
    }
    (g0.min_degree_in(u).unwrap_or(0) >= 2).then(Rational::zero)
}

/// A branch `u = rho v^L` along which the slices are not rational double
/// points: `y^3 + a y^2 + b y + c` with orders at least `2, 4, 6`.
fn bad_branch(f0: &Polynomial, o: Orientation, ratio: &Rational) -> Option<Rational> {
    if !ratio.is_integer() {
        return None;
    }
    let (u, v) = o.vars();
    let (a, b, c) = (part(f0, 2), part(f0, 1), part(f0, 0));
    univariate_at_one(&c, u, v)
        .rational_roots()
        .into_iter()
        .find(|(r, m)| {
            !r.is_zero()
                && *m >= 6
                && multiplicity(&b, u, v, r) >= 4
                && multiplicity(&a, u, v, r) >= 2
        })
        .map(|(r, _)| r)
}

/// `u + rho v^L`.
fn branch_shift(n: usize, u: usize, v: usize, rho: &Rational, ratio: &Rational) -> Polynomial {
    let l: u32 = ratio
        .to_integer()
        .try_into()
        .expect("branch exponent fits in u32");
    let mut e = ExponentVector::new(&[]);
    e.set(v, l);
    &Polynomial::var(n, u) + &Polynomial::monomial(n, e, rho.clone())
}

/// Keeps the ratio of the `z` and `w` weights and puts the `y^2` terms on
/// degree one: with `a`, `b`, `c` the least degrees of the `y^2`, `y` and
/// constant coefficients, the scale is `max(1/(2b - a), 1/c)` and
/// `beta = (1 - s a) / 2`.
fn reweight(f: &Polynomial, gamma: &Rational, delta: &Rational) -> Option<Weight> {
    let a = zw_min_degree(&part(f, 2), gamma, delta)?;
    let b = zw_min_degree(&part(f, 1), gamma, delta);
    let c = zw_min_degree(&part(f, 0), gamma, delta);
    let mut scales = Vec::new();
    if let Some(b) = b {
        let d = &b * int(2) - &a;
        if d <= Rational::zero() {
            return None;
        }
        scales.push(d.recip());
    }
    if let Some(c) = c {
        if c.is_zero() {
            return None;
        }
        scales.push(c.recip());
    }
    let s = scales.into_iter().max()?;
    let beta = (Rational::one() - &s * &a) / int(2);
    if beta < rat(1, 3) {
        return None;
    }
    Weight::new(vec![rat(1, 2), beta, &s * gamma, &s * delta]).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(4, s).unwrap()
    }

    #[test]
    fn reference_inference() {
        let r = infer_reference(&p("x^2 + y^3 + z^12 + w^12 + z*w"))
            .unwrap()
            .unwrap();
        assert_eq!(r.milnor, 242);
        let r = infer_reference(&p("x^2 + y^3 + 2*z^9 + w^18 + y*w^6"))
            .unwrap()
            .unwrap();
        assert_eq!(r.milnor, 272);
        assert!(infer_reference(&p("x^2 + y^3 + z^9 + w^18 + z^10"))
            .unwrap()
            .is_none());
    }

    #[test]
    fn reweight_formula() {
        // y^2 coefficient of degree 1/3, y coefficient 17/24, constant 25/24
        let f = p("x^2 + y^3 - 9*z^2*w*y^2 - 3*w^4*y^2 + z*w^7*y + z^5*w^5");
        let w = reweight(&f, &rat(1, 8), &rat(1, 12)).unwrap();
        assert_eq!(
            w,
            Weight::from_ratios(&[(1, 2), (17, 50), (3, 25), (2, 25)]).unwrap()
        );
    }

    #[test]
    fn branch_detection() {
        let g0 = p("z^3 - 3*z*w^2 - 2*w^3");
        assert_eq!(
            repeated_branch(&g0, Orientation::ZOverW, &int(1)),
            Some(int(-1))
        );
        let g0 = p("z^2*w + w^4");
        assert_eq!(repeated_branch(&g0, Orientation::ZOverW, &rat(3, 2)), None);
        let g0 = p("z^2*w");
        assert_eq!(
            repeated_branch(&g0, Orientation::ZOverW, &rat(3, 2)),
            Some(Rational::zero())
        );
    }

    #[test]
    fn tenth_entry_with_zw_certifies() {
        let f = p("x^2 + y^3 + z^12 + w^12 + z*w");
        let c = descent(&f, DEFAULT_CAP).unwrap();
        assert_eq!(c.outcome, Outcome::RationalByIsolatedInitialPart);
        assert!(c.steps() <= 2);
        assert!(crate::certifier::verify(&c).unwrap().ok);
    }

    #[test]
    fn undeformed_entries_fail_precondition() {
        for e in dataset::entries() {
            let c = descent(&e.polynomial, DEFAULT_CAP).unwrap();
            assert_eq!(c.outcome, Outcome::Inconclusive, "entry {}", e.id);
            assert!(c.states.is_empty());
            assert!(!c.milnor.unwrap().drops);
        }
    }

    #[test]
    fn smooth_and_unit_deformations() {
        let c = weight_search(&p("x^2 + y^2 + z^2 + w^2 + 1"))
            .unwrap()
            .unwrap();
        assert!(c.outcome.is_rational());
        assert!(crate::certifier::verify(&c).unwrap().ok);
        let c = weight_search(&p("x^2 + y^2 + z^2 + w^2")).unwrap().unwrap();
        assert_eq!(c.outcome, Outcome::RationalByIsolatedInitialPart);
        assert!(weight_search(&dataset::entry(12).unwrap().polynomial)
            .unwrap()
            .is_none());
    }
}
