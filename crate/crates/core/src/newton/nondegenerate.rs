use serde::Serialize;

use super::polyhedron::newton_polyhedron;
use crate::algebra::exponent::ExponentVector;
use crate::algebra::polynomial::Polynomial;
use crate::error::Result;
use crate::groebner::{solvable_in_torus_with_budget, Budget, TorusSolvability};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Nondegeneracy {
    Nondegenerate,
    Degenerate,
    Undecided,
}

#[derive(Clone, Debug)]
pub struct NondegeneracyReport {
    pub verdict: Nondegeneracy,
    /// Vertices of the first face whose partials share a torus zero.
    pub witness_face: Option<Vec<ExponentVector>>,
}

pub fn nondegenerate(f: &Polynomial) -> Result<Nondegeneracy> {
    Ok(nondegeneracy_report(f, &mut Budget::default())?.verdict)
}

/// Tests every compact face `D` for a common zero of the partials of `f_D`
/// in the torus.
pub fn nondegeneracy_report(f: &Polynomial, budget: &mut Budget) -> Result<NondegeneracyReport> {
    let np = newton_polyhedron(f)?;
    let mut undecided = false;
    for face in &np.compact_faces {
        let fd = face.restrict(f);
        let partials: Vec<Polynomial> = (0..f.nvars()).map(|i| fd.partial_derivative(i)).collect();
        match solvable_in_torus_with_budget(&partials, budget)? {
            TorusSolvability::NotSolvable => {}
            TorusSolvability::Solvable => {
                return Ok(NondegeneracyReport {
                    verdict: Nondegeneracy::Degenerate,
                    witness_face: Some(face.vertices.clone()),
                })
            }
            TorusSolvability::Undecided => undecided = true,
        }
    }
    let verdict = if undecided {
        Nondegeneracy::Undecided
    } else {
        Nondegeneracy::Nondegenerate
    };
    Ok(NondegeneracyReport {
        verdict,
        witness_face: None,
    })
}
