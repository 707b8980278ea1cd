//! Rationality certificates for deformations of simple K3 germs.
//!
//! A certificate records a chain of exact coordinate changes, a final
//! weight with sum above one, the initial part of the transformed
//! polynomial for that weight, and the checks showing the initial part has
//! only rational singularities away from the origin. [`verify`] replays and
//! rechecks all of it.

mod certificate;
mod descent;
mod lemma;
mod reid;
mod singular;

pub use certificate::{
    canonical_json, verify, verify_text, Certificate, Irreducibility, MilnorCheck, Outcome,
    StateRecord, Substitution, VerifyReport, CERTIFICATE_FORMAT,
};
pub use descent::{
    descent, descent_with, infer_reference, weight_search, DescentOptions, Reference, DEFAULT_CAP,
};
pub use lemma::{lemma_3_2_check, SurfacePattern, SurfaceReport};
pub use reid::reid_noncanonical_witness;
pub use singular::{
    check_initial_part, singular_locus_dimension, singular_locus_dimension_with, ChartReport,
    InitialPartCheck,
};
