//! A workbench for first-order Peano arithmetic.
//!
//! * [`syntax`]: terms, formulas, the ASCII grammar and capture-checked
//!   substitution.
//! * [`kernel`]: axiom-scheme recognition, theories and Hilbert-style proof
//!   checking and annotation.
//! * [`arith`]: numerals and builders for primality, the set 𝔑 and the
//!   restricted Goldbach sentence.
//! * [`models`]: interpretations whose domain is the image of ℕ under a
//!   coding function, with a bounded three-valued evaluator.
//! * [`goldbach`]: concrete primality, 𝔑 membership and partition scans.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod arith;
pub mod goldbach;
pub mod kernel;
pub mod models;
pub mod syntax;
