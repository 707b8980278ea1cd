//! Buchberger's algorithm for global orders and Mora's tangent-cone
//! algorithm for local orders, sharing pair management (Gebauer-Moeller
//! criteria, normal selection).

use std::cmp::Ordering;

use super::field::{Field, Fp};
use super::order::MonomialOrder;
use crate::algebra::exponent::ExponentVector;
use crate::algebra::polynomial::Polynomial;
use crate::algebra::rational::Rational;
use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Caps the number of reduction steps; exhaustion yields `BudgetExhausted`.
#[derive(Clone, Debug)]
pub struct Budget {
    pub limit: u64,
    pub used: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    #[inline]
    fn spend(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExhausted(self.limit))
        } else {
            Ok(())
        }
    }
}

/// A Groebner basis (global order) or standard basis (local order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardBasis {
    pub nvars: usize,
    pub order: MonomialOrder,
    /// Monic generators sorted by increasing leading monomial.
    pub generators: Vec<Polynomial>,
    pub leading: Vec<ExponentVector>,
    pub reduced: bool,
}

impl StandardBasis {
    pub fn is_unit_ideal(&self) -> bool {
        self.leading.iter().any(|e| e.is_zero())
    }
}

type Terms<C = Rational> = Vec<(ExponentVector, C)>;

#[derive(Clone, Debug)]
struct IPoly<C> {
    terms: Terms<C>,
    ecart: u64,
}

impl<C> IPoly<C> {
    fn lm(&self) -> &ExponentVector {
        &self.terms[0].0
    }
}

fn to_terms(p: &Polynomial, order: &MonomialOrder) -> Terms {
    let mut t: Terms = p.terms().map(|(e, c)| (*e, c.clone())).collect();
    t.sort_by(|a, b| order.cmp(&b.0, &a.0));
    t
}

fn ecart<C>(t: &Terms<C>, order: &MonomialOrder) -> u64 {
    if !order.is_local() || t.is_empty() {
        return 0;
    }
    let lead = order.degree(&t[0].0);
    t.iter().map(|(e, _)| order.degree(e)).max().unwrap_or(lead) - lead
}

fn make_monic<C: Field>(t: &mut Terms<C>) {
    if let Some((_, c)) = t.first() {
        if !c.is_one() {
            let inv = c.inv();
            for (_, v) in t.iter_mut() {
                *v = v.mul(&inv);
            }
        }
    }
}

/// `a - c * x^m * b` for order-sorted term lists.
fn sub_scaled<C: Field>(
    a: &Terms<C>,
    c: &C,
    m: &ExponentVector,
    b: &Terms<C>,
    order: &MonomialOrder,
) -> Terms<C> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() {
            out.extend_from_slice(&a[i..]);
            break;
        }
        let be = b[j].0.mul(m);
        if i == a.len() {
            out.push((be, c.mul(&b[j].1).neg()));
            j += 1;
            continue;
        }
        match order.cmp(&a[i].0, &be) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((be, c.mul(&b[j].1).neg()));
                j += 1;
            }
            Ordering::Equal => {
                let v = a[i].1.sub(&c.mul(&b[j].1));
                if !v.is_zero() {
                    out.push((be, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Cancels the leading term of `h` against monic `g`.
fn reduce_lead<C: Field>(h: &Terms<C>, g: &Terms<C>, order: &MonomialOrder) -> Terms<C> {
    let m = h[0].0.div(&g[0].0).expect("divisible");
    sub_scaled(h, &h[0].1, &m, g, order)
}

fn spoly<C: Field>(f: &Terms<C>, g: &Terms<C>, order: &MonomialOrder) -> Terms<C> {
    let l = f[0].0.lcm(&g[0].0);
    let mf = l.div(&f[0].0).unwrap();
    let mg = l.div(&g[0].0).unwrap();
    let fm: Terms<C> = f.iter().map(|(e, c)| (e.mul(&mf), c.clone())).collect();
    sub_scaled(&fm, &C::one(), &mg, g, order)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: ExponentVector,
}

struct Engine<'a, C> {
    order: &'a MonomialOrder,
    polys: Vec<IPoly<C>>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    budget: &'a mut Budget,
    /// Work modulo all monomials of degree `>= bound`.
    truncate: Option<u64>,
}

impl<C: Field> Engine<'_, C> {
    fn cut(&self, mut h: Terms<C>) -> Terms<C> {
        if let Some(b) = self.truncate {
            h.retain(|(e, _)| self.order.degree(e) < b);
        }
        h
    }

    fn update(&mut self, h: IPoly<C>) {
        let hi = self.polys.len();
        let hl = *h.lm();
        let mut c: Vec<Pair> = (0..hi)
            .filter(|&i| self.active[i])
            .map(|i| Pair {
                i,
                j: hi,
                lcm: self.polys[i].lm().lcm(&hl),
            })
            .collect();
        let mut d: Vec<Pair> = Vec::new();
        while !c.is_empty() {
            let p = c.remove(0);
            let coprime = self.polys[p.i].lm().coprime(&hl);
            let dominated = c.iter().chain(d.iter()).any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                d.push(p);
            }
        }
        let e: Vec<Pair> = d
            .into_iter()
            .filter(|p| !self.polys[p.i].lm().coprime(&hl))
            .collect();
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(hl.divides(&p.lcm)
                && polys[p.i].lm().lcm(&hl) != p.lcm
                && polys[p.j].lm().lcm(&hl) != p.lcm)
        });
        self.pairs.extend(e);
        for i in 0..hi {
            if self.active[i] && hl.divides(self.polys[i].lm()) {
                self.active[i] = false;
            }
        }
        self.polys.push(h);
        self.active.push(true);
    }

    fn select_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = self.order;
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let ord = if order.is_local() {
                order
                    .degree(&a.lcm)
                    .cmp(&order.degree(&b.lcm))
                    .then_with(|| order.cmp(&b.lcm, &a.lcm))
            } else {
                order.cmp(&a.lcm, &b.lcm)
            };
            let ord = ord.then_with(|| (a.i, a.j).cmp(&(b.i, b.j)));
            if ord == Ordering::Less {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn find_reducer(&self, lm: &ExponentVector) -> Option<usize> {
        (0..self.polys.len()).find(|&i| self.active[i] && self.polys[i].lm().divides(lm))
    }

    /// Top-reduction for global orders.
    fn nf_global(&mut self, mut h: Terms<C>) -> Result<Terms<C>> {
        while !h.is_empty() {
            let Some(g) = self.find_reducer(&h[0].0) else {
                break;
            };
            self.budget.spend()?;
            h = self.cut(reduce_lead(&h, &self.polys[g].terms, self.order));
        }
        Ok(h)
    }

    /// Mora's normal form with ecart-driven choice of reducers.
    fn nf_mora(&mut self, mut h: Terms<C>) -> Result<Terms<C>> {
        let order = self.order;
        make_monic(&mut h);
        let mut h = IPoly {
            ecart: ecart(&h, order),
            terms: h,
        };
        let mut t: Vec<IPoly<C>> = Vec::new();
        loop {
            if h.terms.is_empty() {
                return Ok(h.terms);
            }
            let lm = *h.lm();
            let mut best: Option<(u64, bool, usize)> = None;
            for i in 0..self.polys.len() {
                if self.active[i] && self.polys[i].lm().divides(&lm) {
                    let e = self.polys[i].ecart;
                    if best.is_none_or(|b| e < b.0) {
                        best = Some((e, false, i));
                    }
                }
            }
            for (i, p) in t.iter().enumerate() {
                if p.lm().divides(&lm) && best.is_none_or(|b| p.ecart < b.0) {
                    best = Some((p.ecart, true, i));
                }
            }
            let Some((e, in_t, idx)) = best else {
                return Ok(h.terms);
            };
            self.budget.spend()?;
            let g = if in_t {
                t[idx].terms.clone()
            } else {
                self.polys[idx].terms.clone()
            };
            if e > h.ecart {
                t.push(h.clone());
            }
            let mut next = reduce_lead(&h.terms, &g, order);
            make_monic(&mut next);
            h = IPoly {
                ecart: ecart(&next, order),
                terms: next,
            };
        }
    }

    fn run(&mut self) -> Result<()> {
        while let Some(p) = self.select_pair() {
            if self
                .truncate
                .is_some_and(|b| self.order.degree(&p.lcm) >= b)
            {
                continue;
            }
            let s = self.cut(spoly(
                &self.polys[p.i].terms,
                &self.polys[p.j].terms,
                self.order,
            ));
            let mut h = if self.order.is_local() && self.truncate.is_none() {
                self.nf_mora(s)?
            } else {
                self.nf_global(s)?
            };
            if h.is_empty() {
                continue;
            }
            make_monic(&mut h);
            let ec = ecart(&h, self.order);
            self.update(IPoly {
                terms: h,
                ecart: ec,
            });
        }
        Ok(())
    }
}

fn gens_nvars(gens: &[Polynomial]) -> Result<usize> {
    gens.iter()
        .map(|g| g.nvars())
        .max()
        .ok_or(Error::InvalidInput("no generators".into()))
}

fn compute<C: Field>(
    gens: Vec<Terms<C>>,
    order: &MonomialOrder,
    budget: &mut Budget,
    truncate: Option<u64>,
) -> Result<Vec<Terms<C>>> {
    let mut eng = Engine {
        order,
        polys: vec![],
        active: vec![],
        pairs: vec![],
        budget,
        truncate,
    };
    for g in gens {
        let mut t = eng.cut(g);
        if truncate.is_some() {
            t = eng.nf_global(t)?;
        }
        if t.is_empty() {
            continue;
        }
        make_monic(&mut t);
        let ec = ecart(&t, order);
        eng.update(IPoly {
            terms: t,
            ecart: ec,
        });
    }
    eng.run()?;
    Ok(eng
        .polys
        .into_iter()
        .zip(eng.active)
        .filter(|(_, a)| *a)
        .map(|(p, _)| p.terms)
        .collect())
}

fn rational_gens(gens: &[Polynomial], order: &MonomialOrder) -> Vec<Terms> {
    gens.iter().map(|g| to_terms(g, order)).collect()
}

fn finish(
    mut polys: Vec<Terms>,
    nvars: usize,
    order: &MonomialOrder,
    reduced: bool,
) -> StandardBasis {
    polys.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    let generators: Vec<Polynomial> = polys
        .iter()
        .map(|t| Polynomial::from_terms(nvars, t.iter().cloned()))
        .collect();
    let leading = polys.iter().map(|t| t[0].0).collect();
    StandardBasis {
        nvars,
        order: order.clone(),
        generators,
        leading,
        reduced,
    }
}

/// Reduced Groebner basis for a global order.
pub fn groebner(gens: &[Polynomial], order: &MonomialOrder) -> Result<StandardBasis> {
    groebner_with_budget(gens, order, &mut Budget::default())
}

pub fn groebner_with_budget(
    gens: &[Polynomial],
    order: &MonomialOrder,
    budget: &mut Budget,
) -> Result<StandardBasis> {
    if order.is_local() {
        return Err(Error::InvalidInput("groebner needs a global order".into()));
    }
    let nvars = gens_nvars(gens)?;
    let all = compute(rational_gens(gens, order), order, budget, None)?;
    // minimal basis: no leading monomial divides another, first copy wins on ties
    let polys: Vec<Terms> = all
        .iter()
        .enumerate()
        .filter(|(k, p)| {
            !all.iter()
                .enumerate()
                .any(|(j, q)| j != *k && q[0].0.divides(&p[0].0) && (q[0].0 != p[0].0 || j < *k))
        })
        .map(|(_, p)| p.clone())
        .collect();
    if polys.is_empty() {
        return Ok(StandardBasis {
            nvars,
            order: order.clone(),
            generators: vec![],
            leading: vec![],
            reduced: true,
        });
    }
    // tail reduction
    let mut reduced = Vec::with_capacity(polys.len());
    for (k, p) in polys.iter().enumerate() {
        let mut rest: Terms = p[1..].to_vec();
        let mut out: Terms = vec![p[0].clone()];
        while !rest.is_empty() {
            let lm = rest[0].0;
            let red = polys
                .iter()
                .enumerate()
                .find(|(j, q)| *j != k && q[0].0.divides(&lm));
            match red {
                Some((_, q)) => {
                    budget.spend()?;
                    rest = reduce_lead(&rest, q, order);
                }
                None => out.push(rest.remove(0)),
            }
        }
        reduced.push(out);
    }
    Ok(finish(reduced, nvars, order, true))
}

/// Standard basis for a local order (Mora).
pub fn local_standard_basis(gens: &[Polynomial], order: &MonomialOrder) -> Result<StandardBasis> {
    local_standard_basis_with_budget(gens, order, &mut Budget::default())
}

pub fn local_standard_basis_with_budget(
    gens: &[Polynomial],
    order: &MonomialOrder,
    budget: &mut Budget,
) -> Result<StandardBasis> {
    if !order.is_local() {
        return Err(Error::InvalidInput(
            "local_standard_basis needs a local order".into(),
        ));
    }
    let nvars = gens_nvars(gens)?;
    let polys = compute(rational_gens(gens, order), order, budget, None)?;
    Ok(finish(polys, nvars, order, false))
}

/// Standard basis of `gens + <monomials of degree >= bound>` for a local
/// order; the monomial part is implicit.
pub fn local_standard_basis_truncated(
    gens: &[Polynomial],
    order: &MonomialOrder,
    bound: u64,
    budget: &mut Budget,
) -> Result<StandardBasis> {
    if !order.is_local() {
        return Err(Error::InvalidInput(
            "local_standard_basis needs a local order".into(),
        ));
    }
    let nvars = gens_nvars(gens)?;
    let polys = compute(rational_gens(gens, order), order, budget, Some(bound))?;
    Ok(finish(polys, nvars, order, false))
}

/// Leading monomials of the truncated local standard basis computed over
/// `Z/p` with `p` the prime [`super::field::PRIME`].
pub fn leading_truncated_mod_p(
    gens: &[Polynomial],
    order: &MonomialOrder,
    bound: u64,
    budget: &mut Budget,
) -> Result<Vec<ExponentVector>> {
    if !order.is_local() {
        return Err(Error::InvalidInput(
            "local_standard_basis needs a local order".into(),
        ));
    }
    let mut modular = Vec::with_capacity(gens.len());
    for t in rational_gens(gens, order) {
        let mut out: Terms<Fp> = Vec::with_capacity(t.len());
        for (e, c) in t {
            let r = Fp::from_rational(&c)
                .ok_or_else(|| Error::InvalidInput("denominator divisible by the prime".into()))?;
            if !r.is_zero() {
                out.push((e, r));
            }
        }
        modular.push(out);
    }
    let polys = compute(modular, order, budget, Some(bound))?;
    let mut leading: Vec<ExponentVector> = polys.iter().map(|t| t[0].0).collect();
    leading.sort_by(|a, b| order.cmp(a, b));
    Ok(leading)
}

/// Normal form of `f` with respect to a reduced global basis.
pub fn normal_form(f: &Polynomial, sb: &StandardBasis) -> Polynomial {
    assert!(!sb.order.is_local(), "normal form needs a global order");
    let order = &sb.order;
    let basis: Vec<Terms> = sb.generators.iter().map(|g| to_terms(g, order)).collect();
    let mut rest = to_terms(f, order);
    let mut out = Polynomial::zero(f.nvars().max(sb.nvars));
    while !rest.is_empty() {
        let lm = rest[0].0;
        match basis.iter().find(|q| q[0].0.divides(&lm)) {
            Some(q) => rest = reduce_lead(&rest, q, order),
            None => {
                let (e, c) = rest.remove(0);
                out.add_term(e, c);
            }
        }
    }
    out
}

pub fn ideal_membership(f: &Polynomial, sb: &StandardBasis) -> bool {
    normal_form(f, sb).is_zero()
}
