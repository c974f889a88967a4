//! Files, command line and parallel scans on top of `peano-core`.

pub mod cli;
pub mod proof_file;
pub mod report;
pub mod scan;
pub mod table;

pub use proof_file::{parse_proof_file, print_proof, ProofFile, ProofFileError};
pub use scan::parallel_scan;
