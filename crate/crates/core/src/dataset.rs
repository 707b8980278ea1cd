//! The twelve simple K3 normal forms `x^2 + y^3 + g(z, w)` used throughout,
//! with their weights and Milnor numbers.

use serde::Serialize;

use crate::algebra::polynomial::Polynomial;
use crate::algebra::rational::int;
use crate::algebra::weight::Weight;
use crate::error::{Error, Result};
use crate::groebner::Budget;
use crate::invariants::{milnor_from_basis_with, milnor_lower_bound, milnor_orlik};
use crate::newton::{nondegenerate, simple_k3_check, Nondegeneracy};

#[derive(Clone, Debug)]
pub struct DatasetEntry {
    pub id: u32,
    pub polynomial: Polynomial,
    pub weight: Weight,
    pub milnor: u64,
    pub gates: Vec<Gate>,
}

/// A numeric anchor an entry must reproduce.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Gate {
    pub name: &'static str,
    pub value: u64,
}

const GATES: [(u32, Gate); 3] = [
    (
        10,
        Gate {
            name: "milnor",
            value: 242,
        },
    ),
    (
        83,
        Gate {
            name: "milnor",
            value: 245,
        },
    ),
    (
        83,
        Gate {
            name: "milnor-lower-bound-3-10-15",
            value: 252,
        },
    ),
];

const ENTRIES: [(u32, &str, [(i64, i64); 4], u64); 12] = [
    (
        10,
        "x^2 + y^3 + z^12 + w^12",
        [(1, 2), (1, 3), (1, 12), (1, 12)],
        242,
    ),
    (
        11,
        "x^2 + y^3 + z^10 + w^15",
        [(1, 2), (1, 3), (1, 10), (1, 15)],
        252,
    ),
    (
        12,
        "x^2 + y^3 + z^9 + w^18",
        [(1, 2), (1, 3), (1, 9), (1, 18)],
        272,
    ),
    (
        13,
        "x^2 + y^3 + z^8 + w^24",
        [(1, 2), (1, 3), (1, 8), (1, 24)],
        322,
    ),
    (
        14,
        "x^2 + y^3 + z^7 + w^42",
        [(1, 2), (1, 3), (1, 7), (1, 42)],
        492,
    ),
    (
        46,
        "x^2 + y^3 + z^11 + z*w^12",
        [(1, 2), (1, 3), (1, 11), (5, 66)],
        244,
    ),
    (
        47,
        "x^2 + y^3 + y*z^7 + z^9*w^2 + w^14",
        [(1, 2), (1, 3), (2, 21), (1, 14)],
        247,
    ),
    (
        48,
        "x^2 + y^3 + z^9*w + w^16",
        [(1, 2), (1, 3), (5, 48), (1, 16)],
        258,
    ),
    (
        49,
        "x^2 + y^3 + z^8*w + w^21",
        [(1, 2), (1, 3), (5, 42), (1, 21)],
        296,
    ),
    (
        50,
        "x^2 + y^3 + y*z^5 + z^7*w^2 + w^30",
        [(1, 2), (1, 3), (2, 15), (1, 30)],
        377,
    ),
    (
        51,
        "x^2 + y^3 + z^7*w + w^36",
        [(1, 2), (1, 3), (5, 36), (1, 36)],
        434,
    ),
    (
        83,
        "x^2 + y^3 + y*w^9 + z^10*w + z^2*w^11",
        [(1, 2), (1, 3), (5, 54), (2, 27)],
        245,
    ),
];

pub fn entries() -> Vec<DatasetEntry> {
    ENTRIES
        .iter()
        .map(|(id, poly, w, mu)| DatasetEntry {
            id: *id,
            polynomial: Polynomial::parse(4, poly).expect("dataset polynomial parses"),
            weight: Weight::from_ratios(w).expect("dataset weight is positive"),
            milnor: *mu,
            gates: GATES
                .iter()
                .filter(|(gid, _)| gid == id)
                .map(|(_, g)| *g)
                .collect(),
        })
        .collect()
}

pub fn ids() -> Vec<u32> {
    ENTRIES.iter().map(|e| e.0).collect()
}

pub fn entry(id: u32) -> Result<DatasetEntry> {
    entries()
        .into_iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownEntry(id.to_string()))
}

/// Parses `"12"` or `"No.12"`.
pub fn parse_id(s: &str) -> Option<u32> {
    let t = s.trim();
    let t = t
        .strip_prefix("No.")
        .or_else(|| t.strip_prefix("no."))
        .unwrap_or(t);
    let id: u32 = t.parse().ok()?;
    ids().contains(&id).then_some(id)
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryJson {
    pub id: u32,
    pub polynomial: String,
    pub weight: Vec<String>,
    pub milnor: u64,
    pub gates: Vec<Gate>,
}

impl From<&DatasetEntry> for EntryJson {
    fn from(e: &DatasetEntry) -> Self {
        EntryJson {
            id: e.id,
            polynomial: e.polynomial.to_string(),
            weight: e.weight.to_strings(),
            milnor: e.milnor,
            gates: e.gates.clone(),
        }
    }
}

/// Recomputed invariants of one entry.
#[derive(Clone, Debug, Serialize)]
pub struct EntryCheck {
    pub id: u32,
    pub simple_k3: bool,
    pub weight_matches: bool,
    pub nondegenerate: Nondegeneracy,
    pub mu_orlik: u64,
    pub mu_basis: Option<u64>,
    pub gates_hold: bool,
    pub ok: bool,
}

/// Recomputes the weight from the Newton polyhedron, nondegeneracy and the
/// Milnor number by both formulas, and evaluates the gates.
pub fn verify_entry(e: &DatasetEntry) -> Result<EntryCheck> {
    let k3 = simple_k3_check(&e.polynomial)?;
    let weight_matches = k3.weight.as_ref() == Some(&e.weight);
    let nd = nondegenerate(&e.polynomial)?;
    let mu_orlik = milnor_orlik(&e.weight)?;
    let mu_basis =
        milnor_from_basis_with(&e.polynomial, Some(&e.weight), &mut Budget::default())?.finite();
    let gates_hold = e.gates.iter().all(|g| match g.name {
        "milnor" => mu_basis == Some(g.value) && mu_orlik == g.value,
        _ => milnor_lower_bound(&int(3), &int(10), &int(15)) == int(g.value as i64),
    });
    let ok = k3.is_simple_k3
        && weight_matches
        && nd == Nondegeneracy::Nondegenerate
        && mu_orlik == e.milnor
        && mu_basis == Some(e.milnor)
        && gates_hold;
    Ok(EntryCheck {
        id: e.id,
        simple_k3: k3.is_simple_k3,
        weight_matches,
        nondegenerate: nd,
        mu_orlik,
        mu_basis,
        gates_hold,
        ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::polynomial::weighted_degree;
    use num_traits::One;

    #[test]
    fn weights_make_entries_quasi_homogeneous() {
        for e in entries() {
            for (nu, _) in e.polynomial.terms() {
                assert!(weighted_degree(nu, &e.weight).is_one(), "entry {}", e.id);
            }
            assert!(e.weight.sum().is_one(), "entry {}", e.id);
            assert_eq!(
                crate::invariants::milnor_orlik(&e.weight).unwrap(),
                e.milnor,
                "entry {}",
                e.id
            );
        }
    }

    #[test]
    fn gates_attached() {
        assert_eq!(entry(10).unwrap().gates.len(), 1);
        assert_eq!(entry(83).unwrap().gates.len(), 2);
        assert!(entry(12).unwrap().gates.is_empty());
        let c = verify_entry(&entry(83).unwrap()).unwrap();
        assert!(c.ok && c.gates_hold);
    }

    #[test]
    fn ids_parse() {
        assert_eq!(parse_id("No.83"), Some(83));
        assert_eq!(parse_id("12"), Some(12));
        assert_eq!(parse_id("15"), None);
    }
}
