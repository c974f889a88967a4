//! Interpretations I_(α,u) of arithmetic on coded domains, the limit
//! interpretation at `u = 1`, and bounded evaluation of formulas in them.

mod coding;
mod eval;
mod structure;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;
use num_traits::{CheckedMul, One};

pub use coding::{default_coding, CodingFunction, LinearForm, Slope, StandInCoding};
pub use eval::{eval_bounded, eval_with_indices, EvalError, ThreeValued, Trace};
pub use structure::{CodedModel, CodedNat, ModelKey, StandardModel, Structure};

use crate::kernel::peano_axioms;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelError {
    AlphaNotInFrakN(u64),
    ParameterBelowOne,
    /// Operands come from different coded models.
    ModelMismatch,
    Overflow,
    /// The parameters of a limit table must decrease strictly.
    NotDecreasing,
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::AlphaNotInFrakN(a) => write!(f, "alpha = {a} is not in 𝔑"),
            ModelError::ParameterBelowOne => f.write_str("u must be at least 1"),
            ModelError::ModelMismatch => f.write_str("operands belong to different models"),
            ModelError::Overflow => f.write_str("arithmetic overflow"),
            ModelError::NotDecreasing => f.write_str("u values must be strictly decreasing"),
        }
    }
}

impl core::error::Error for ModelError {}

/// The coded model I_(α,u) with the stand-in coding.
pub fn coded_model(alpha: u64, u: Ratio<u64>) -> Result<CodedModel<StandInCoding>, ModelError> {
    Ok(CodedModel::new(default_coding(alpha, u)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: String,
    pub verdict: ThreeValued,
}

/// Evaluates N1–N6 in `model`. None of them can be True under bounded
/// search; a False is a defect in the structure.
pub fn check_axioms<S: Structure>(model: &S, bound: u64) -> Result<Vec<AxiomCheck>, EvalError> {
    peano_axioms()
        .into_iter()
        .map(|(axiom, w)| {
            let verdict = eval_bounded(model, &w, &Default::default(), bound)?;
            Ok(AxiomCheck { axiom, verdict })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitRow {
    pub u: Ratio<u64>,
    pub n: u64,
    pub psi: LinearForm,
    /// |ψ(n) − n| = b·(u − 1), exact.
    pub deviation: Ratio<u64>,
}

/// Deviation of ψ_(α,u)(n) from `n` for `n ≤ n_max` and each `u`.
///
/// Rows are grouped by `u` in the given order, then by `n` ascending.
pub fn limit_table(alpha: u64, n_max: u64, u_sequence: &[Ratio<u64>]) -> Result<Vec<LimitRow>, ModelError> {
    if u_sequence.windows(2).any(|w| w[1] >= w[0]) {
        return Err(ModelError::NotDecreasing);
    }
    let mut rows = Vec::new();
    for &u in u_sequence {
        let coding = default_coding(alpha, u)?;
        let excess = u - Ratio::one();
        for n in 0..=n_max {
            let psi = coding.psi(n);
            let deviation = excess.checked_mul(&Ratio::from_integer(psi.us)).ok_or(ModelError::Overflow)?;
            rows.push(LimitRow { u, n, psi, deviation });
        }
    }
    Ok(rows)
}

/// `u = 1 + 2^-k` for `k = 1..=steps`, followed by `u = 1`.
pub fn halving_sequence(steps: u32) -> Vec<Ratio<u64>> {
    assert!(steps < 63, "2^-{steps} does not fit the parameter type");
    let mut seq: Vec<Ratio<u64>> = (1..=steps).map(|k| Ratio::new((1u64 << k) + 1, 1u64 << k)).collect();
    seq.push(Ratio::one());
    seq
}
