//! Newton polyhedra, compact faces and the projected boundary used by the
//! descent.

pub mod nondegenerate;
pub mod polyhedron;
pub mod projected;

pub use nondegenerate::{nondegeneracy_report, nondegenerate, Nondegeneracy, NondegeneracyReport};
pub use polyhedron::{
    newton_polyhedron, simple_k3_check, Face, FaceJson, Facet, NewtonPolyhedron, OnesPosition,
    SimpleK3Report,
};
pub use projected::{face_weight_sum_check, projected_boundary, Edge, ProjectedBoundary};
