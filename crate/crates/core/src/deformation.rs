//! Monomial bases of the Jacobian algebra of a quasi-homogeneous germ, the
//! degree partition of the versal base and concrete deformations.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::algebra::exponent::ExponentVector;
use crate::algebra::polynomial::{monomial_string, weighted_degree, Polynomial};
use crate::algebra::rational::Rational;
use crate::algebra::weight::Weight;
use crate::error::{Error, Result};
use crate::groebner::{
    groebner_with_budget, ideal_membership, quotient_basis, Budget, MonomialOrder, QuotientDim,
};
use crate::invariants::jacobian;
use crate::json::RatJson;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DegreeClass {
    BelowOne,
    OnOne,
    AboveOne,
}

impl DegreeClass {
    pub fn of(deg: &Rational) -> Self {
        match deg.cmp(&Rational::from_integer(1.into())) {
            Ordering::Less => DegreeClass::BelowOne,
            Ordering::Equal => DegreeClass::OnOne,
            Ordering::Greater => DegreeClass::AboveOne,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisMonomial {
    pub exponent: ExponentVector,
    pub degree: Rational,
    pub class: DegreeClass,
}

/// Standard monomials of the Jacobian algebra, sorted by increasing degree.
#[derive(Clone, Debug)]
pub struct VersalBasis {
    pub nvars: usize,
    pub weight: Weight,
    pub monomials: Vec<BasisMonomial>,
}

impl VersalBasis {
    fn indices(&self, class: DegreeClass) -> Vec<usize> {
        (0..self.monomials.len())
            .filter(|&i| self.monomials[i].class == class)
            .collect()
    }

    pub fn below_one(&self) -> Vec<usize> {
        self.indices(DegreeClass::BelowOne)
    }

    pub fn on_one(&self) -> Vec<usize> {
        self.indices(DegreeClass::OnOne)
    }

    pub fn above_one(&self) -> Vec<usize> {
        self.indices(DegreeClass::AboveOne)
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, e: &ExponentVector) -> Option<usize> {
        self.monomials.iter().position(|m| &m.exponent == e)
    }

    pub fn to_json(&self) -> Vec<BasisMonomialJson> {
        self.monomials
            .iter()
            .enumerate()
            .map(|(index, m)| BasisMonomialJson {
                index,
                monomial: monomial_string(&m.exponent, self.nvars),
                degree: RatJson::from(&m.degree),
                class: m.class,
            })
            .collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BasisMonomialJson {
    pub index: usize,
    pub monomial: String,
    pub degree: RatJson,
    pub class: DegreeClass,
}

pub fn is_quasi_homogeneous(f: &Polynomial, alpha: &Weight) -> bool {
    let one = Rational::from_integer(1.into());
    !f.is_zero() && f.terms().all(|(e, _)| weighted_degree(e, alpha) == one)
}

pub fn versal_basis(f: &Polynomial, alpha: &Weight) -> Result<VersalBasis> {
    versal_basis_with_budget(f, alpha, &mut Budget::default())
}

/// For quasi-homogeneous `f` the Jacobian ideal is weighted homogeneous, so a
/// weighted global basis yields the local standard monomials.
pub fn versal_basis_with_budget(
    f: &Polynomial,
    alpha: &Weight,
    budget: &mut Budget,
) -> Result<VersalBasis> {
    if alpha.len() != f.nvars() {
        return Err(Error::DimensionMismatch(format!(
            "weight has {} entries for {} variables",
            alpha.len(),
            f.nvars()
        )));
    }
    if !is_quasi_homogeneous(f, alpha) {
        return Err(Error::InvalidInput(
            "polynomial is not quasi-homogeneous for this weight".into(),
        ));
    }
    let gb = groebner_with_budget(&jacobian(f), &MonomialOrder::weighted(alpha), budget)?;
    // Euler relation
    assert!(
        ideal_membership(f, &gb),
        "quasi-homogeneous polynomial outside its Jacobian ideal"
    );
    let q = quotient_basis(&gb);
    if q.dimension == QuotientDim::Infinite {
        return Err(Error::InvalidInput("singularity is not isolated".into()));
    }
    let mut monomials: Vec<BasisMonomial> = q
        .monomials
        .into_iter()
        .map(|e| {
            let degree = weighted_degree(&e, alpha);
            BasisMonomial {
                exponent: e,
                class: DegreeClass::of(&degree),
                degree,
            }
        })
        .collect();
    monomials.sort_by(|a, b| {
        a.degree
            .cmp(&b.degree)
            .then_with(|| a.exponent.cmp(&b.exponent))
    });
    Ok(VersalBasis {
        nvars: f.nvars(),
        weight: alpha.clone(),
        monomials,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MuConstantStratum {
    pub codimension: usize,
    pub free_indices: Vec<usize>,
}

/// The coordinate subspace where every coefficient of degree below one
/// vanishes.
pub fn mu_constant_stratum(vb: &VersalBasis) -> MuConstantStratum {
    let mut free = vb.on_one();
    free.extend(vb.above_one());
    free.sort_unstable();
    MuConstantStratum {
        codimension: vb.below_one().len(),
        free_indices: free,
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DeformationAssignment {
    pub pairs: Vec<(usize, Rational)>,
}

impl DeformationAssignment {
    pub fn new(pairs: Vec<(usize, Rational)>) -> Self {
        DeformationAssignment {
            pairs: pairs
                .into_iter()
                .filter(|(_, l)| *l != Rational::from_integer(0.into()))
                .collect(),
        }
    }

    /// Parses `i=lambda` items such as `3=1/2`.
    pub fn parse(items: &[String]) -> Result<Self> {
        let mut pairs = Vec::new();
        for item in items {
            let (i, l) = item.split_once('=').ok_or_else(|| {
                Error::InvalidInput(format!("expected index=value, got `{item}`"))
            })?;
            let i: usize = i
                .trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad index `{i}`")))?;
            let l = Polynomial::parse(1, l)?;
            if !l.is_constant() {
                return Err(Error::InvalidInput(format!(
                    "coefficient `{item}` is not a number"
                )));
            }
            pairs.push((i, l.constant_term()));
        }
        Ok(Self::new(pairs))
    }
}

#[derive(Clone, Debug)]
pub struct Deformation {
    pub polynomial: Polynomial,
    /// Assigned indices of degree below one.
    pub dropping_indices: Vec<usize>,
}

impl Deformation {
    /// Whether the assignment leaves the mu-constant stratum. The stratum
    /// description holds for small parameters only, which is not checked.
    pub fn mu_dropping(&self) -> bool {
        !self.dropping_indices.is_empty()
    }
}

pub fn build_deformation(
    f: &Polynomial,
    vb: &VersalBasis,
    a: &DeformationAssignment,
) -> Result<Deformation> {
    let mut out = f.clone();
    let mut dropping = Vec::new();
    for (i, lambda) in &a.pairs {
        let m = vb.monomials.get(*i).ok_or_else(|| {
            Error::InvalidInput(format!(
                "basis index {i} out of range (basis has {} monomials)",
                vb.len()
            ))
        })?;
        out.add_term(m.exponent, lambda.clone());
        if m.class == DegreeClass::BelowOne {
            dropping.push(*i);
        }
    }
    dropping.sort_unstable();
    dropping.dedup();
    Ok(Deformation {
        polynomial: out,
        dropping_indices: dropping,
    })
}

/// Expresses `g - f` in the versal basis when it is supported there.
pub fn assignment_of(
    f: &Polynomial,
    vb: &VersalBasis,
    g: &Polynomial,
) -> Option<DeformationAssignment> {
    let diff = g - f;
    let mut pairs = Vec::new();
    for (e, c) in diff.terms() {
        pairs.push((vb.index_of(e)?, c.clone()));
    }
    Some(DeformationAssignment::new(pairs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(4, s).unwrap()
    }

    #[test]
    fn entry_twelve_partition() {
        let e = crate::dataset::entry(12).unwrap();
        let vb = versal_basis(&e.polynomial, &e.weight).unwrap();
        assert_eq!(vb.len(), 272);
        // brute force over b <= 1, c <= 7, d <= 16
        let mut below = 0;
        for b in 0..=1u32 {
            for c in 0..=7u32 {
                for d in 0..=16u32 {
                    let e = ExponentVector::new(&[0, b, c, d]);
                    assert!(vb.index_of(&e).is_some());
                    if 6 * b + 2 * c + d < 18 {
                        below += 1;
                    }
                }
            }
        }
        assert_eq!(vb.below_one().len(), below);
        let s = mu_constant_stratum(&vb);
        assert_eq!(s.codimension, below);
        assert_eq!(s.free_indices.len(), 272 - below);
    }

    #[test]
    fn a1_has_unit_basis() {
        let w = Weight::from_ratios(&[(1, 2); 4]).unwrap();
        let vb = versal_basis(&p("x^2 + y^2 + z^2 + w^2"), &w).unwrap();
        assert_eq!(vb.len(), 1);
        assert_eq!(vb.below_one(), vec![0]);
        assert_eq!(mu_constant_stratum(&vb).codimension, 1);
    }

    #[test]
    fn rejects_wrong_weight() {
        let w = Weight::from_ratios(&[(1, 2), (1, 3), (1, 9), (1, 9)]).unwrap();
        assert!(versal_basis(&p("x^2 + y^3 + z^9 + w^18"), &w).is_err());
    }

    #[test]
    fn deformation_flags() {
        let e = crate::dataset::entry(12).unwrap();
        let vb = versal_basis(&e.polynomial, &e.weight).unwrap();
        let empty =
            build_deformation(&e.polynomial, &vb, &DeformationAssignment::default()).unwrap();
        assert_eq!(empty.polynomial, e.polynomial);
        assert!(!empty.mu_dropping());
        let zw3 = vb.index_of(&ExponentVector::new(&[0, 0, 1, 3])).unwrap();
        let d = build_deformation(
            &e.polynomial,
            &vb,
            &DeformationAssignment::new(vec![(zw3, rat(1, 2))]),
        )
        .unwrap();
        assert!(d.mu_dropping());
        assert_eq!(d.polynomial, p("x^2 + y^3 + z^9 + w^18 + 1/2*z*w^3"));
        assert_eq!(
            assignment_of(&e.polynomial, &vb, &d.polynomial)
                .unwrap()
                .pairs,
            vec![(zw3, rat(1, 2))]
        );
        assert!(build_deformation(
            &e.polynomial,
            &vb,
            &DeformationAssignment::new(vec![(999, rat(1, 1))])
        )
        .is_err());
    }

    #[test]
    fn parse_assignment() {
        let a =
            DeformationAssignment::parse(&["3=1/2".into(), "5=-2".into(), "7=0".into()]).unwrap();
        assert_eq!(a.pairs, vec![(3, rat(1, 2)), (5, rat(-2, 1))]);
        assert!(DeformationAssignment::parse(&["x".into()]).is_err());
    }
}
