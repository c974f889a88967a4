//! The proof kernel: axiom schemes, theories and proof checking.

mod proof;
mod scheme;
mod theory;

pub use proof::{
    check_proof, discover, discover_partial, justify_line, DiscoveryFailure, Justification, LineFailure, LineNo,
    LineVerdict, Proof, ProofLine, Verdict,
};
pub use scheme::{is_instance, recognize_scheme, Evidence, SchemeId, SchemeMatch};
pub use theory::{equality_axioms, peano_axioms, InductionVariable, Theory, TheoryError};
