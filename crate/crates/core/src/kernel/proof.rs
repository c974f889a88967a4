//! Hilbert-style proofs: sequences of formulas each of which is an axiom or
//! follows from earlier lines by modus ponens or generalization.
//!
//! Lines are numbered from 1 everywhere, matching the proof-file format.
//! Generalization is unrestricted: any variable may be generalized, whether
//! or not it is free in some hypothesis. There are no hypotheses here, so
//! this is the textbook rule for theorems, but variants with side
//! conditions exist and would reject some proofs this checker accepts.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::syntax::{VarIndex, Wff};

use super::scheme::{is_instance, recognize_scheme, SchemeId};
use super::theory::Theory;

/// 1-based line number.
pub type LineNo = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Justification {
    Scheme(SchemeId),
    ProperAxiom(String),
    /// From line `minor` (`A`) and line `major` (`A → B`) infer `B`.
    ModusPonens {
        minor: LineNo,
        major: LineNo,
    },
    /// From line `premise` (`A`) infer `∀x A`.
    Generalization {
        premise: LineNo,
        var: VarIndex,
    },
    /// No justification supplied.
    Unknown,
}

impl fmt::Display for Justification {
    /// Proof-file syntax.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Justification::Scheme(s) => write!(f, "{s}"),
            Justification::ProperAxiom(n) => write!(f, "AX {n}"),
            Justification::ModusPonens { minor, major } => write!(f, "MP {minor} {major}"),
            Justification::Generalization { premise, var } => write!(f, "GEN {premise} x{var}"),
            Justification::Unknown => f.write_str("?"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofLine {
    pub wff: Wff,
    pub justification: Justification,
}

#[derive(Clone, Debug)]
pub struct Proof {
    pub theory: Theory,
    pub lines: Vec<ProofLine>,
}

impl Proof {
    pub fn new(theory: Theory, lines: Vec<ProofLine>) -> Proof {
        Proof { theory, lines }
    }

    /// The last line's formula.
    pub fn conclusion(&self) -> Option<&Wff> {
        self.lines.last().map(|l| &l.wff)
    }

    /// The same lines checked against another theory.
    pub fn under(&self, theory: Theory) -> Proof {
        Proof { theory, lines: self.lines.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineFailure {
    EmptyProof,
    /// The formula is not an instance of the claimed scheme.
    SchemeMismatch {
        claimed: SchemeId,
        recognized: Option<SchemeId>,
    },
    SchemeNotInTheory(SchemeId),
    UnknownAxiom(String),
    AxiomMismatch(String),
    /// A cited line is not strictly earlier than the citing one.
    BadReference(LineNo),
    MajorPremiseMismatch,
    GeneralizationMismatch,
    Unjustified,
    /// Discovery found nothing for the line.
    NotDerivable {
        first_line: bool,
    },
}

impl fmt::Display for LineFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineFailure::EmptyProof => f.write_str("proof has no lines"),
            LineFailure::SchemeMismatch { claimed, recognized: Some(r) } => {
                write!(f, "not an instance of {claimed} (recognized as {r})")
            }
            LineFailure::SchemeMismatch { claimed, recognized: None } => {
                write!(f, "not an instance of {claimed}")
            }
            LineFailure::SchemeNotInTheory(s) => write!(f, "scheme {s} is not part of the theory"),
            LineFailure::UnknownAxiom(n) => write!(f, "theory has no axiom named {n}"),
            LineFailure::AxiomMismatch(n) => write!(f, "formula differs from axiom {n}"),
            LineFailure::BadReference(l) => write!(f, "cited line {l} is not an earlier line"),
            LineFailure::MajorPremiseMismatch => f.write_str("major premise shape mismatch"),
            LineFailure::GeneralizationMismatch => f.write_str("generalization shape mismatch"),
            LineFailure::Unjustified => f.write_str("no justification given"),
            LineFailure::NotDerivable { first_line: true } => f.write_str("not an axiom; no earlier lines"),
            LineFailure::NotDerivable { first_line: false } => {
                f.write_str("not an axiom; does not follow from earlier lines by MP or GEN")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineVerdict {
    pub line: LineNo,
    pub result: Result<(), LineFailure>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub per_line: Vec<LineVerdict>,
}

impl Verdict {
    pub fn accepted(&self) -> bool {
        !self.per_line.is_empty() && self.per_line.iter().all(|l| l.result.is_ok())
    }

    pub fn first_failure(&self) -> Option<&LineVerdict> {
        self.per_line.iter().find(|l| l.result.is_err())
    }
}

fn earlier(lines: &[ProofLine], at: LineNo, cited: LineNo) -> Result<&Wff, LineFailure> {
    if cited == 0 || cited >= at {
        return Err(LineFailure::BadReference(cited));
    }
    Ok(&lines[cited - 1].wff)
}

fn check_line(theory: &Theory, lines: &[ProofLine], at: LineNo) -> Result<(), LineFailure> {
    let line = &lines[at - 1];
    let w = &line.wff;
    match &line.justification {
        Justification::Scheme(id) => {
            if !theory.has_scheme(*id) {
                Err(LineFailure::SchemeNotInTheory(*id))
            } else if is_instance(theory, *id, w) {
                Ok(())
            } else {
                Err(LineFailure::SchemeMismatch {
                    claimed: *id,
                    recognized: recognize_scheme(theory, w).map(|m| m.scheme),
                })
            }
        }
        Justification::ProperAxiom(name) => match theory.axiom(name) {
            None => Err(LineFailure::UnknownAxiom(name.clone())),
            Some(ax) if ax == w => Ok(()),
            Some(_) => Err(LineFailure::AxiomMismatch(name.clone())),
        },
        Justification::ModusPonens { minor, major } => {
            let a = earlier(lines, at, *minor)?;
            let ab = earlier(lines, at, *major)?;
            match ab {
                Wff::Implies(l, r) if l.as_ref() == a && r.as_ref() == w => Ok(()),
                _ => Err(LineFailure::MajorPremiseMismatch),
            }
        }
        Justification::Generalization { premise, var } => {
            let a = earlier(lines, at, *premise)?;
            match w {
                Wff::ForAll(v, body) if v == var && body.as_ref() == a => Ok(()),
                _ => Err(LineFailure::GeneralizationMismatch),
            }
        }
        Justification::Unknown => Err(LineFailure::Unjustified),
    }
}

/// Checks every line against its stated justification.
pub fn check_proof(p: &Proof) -> Verdict {
    if p.lines.is_empty() {
        return Verdict { per_line: alloc::vec![LineVerdict { line: 0, result: Err(LineFailure::EmptyProof) }] };
    }
    let per_line =
        (1..=p.lines.len()).map(|at| LineVerdict { line: at, result: check_line(&p.theory, &p.lines, at) }).collect();
    Verdict { per_line }
}

/// Lines that discovery could not justify.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscoveryFailure {
    pub unjustified: Vec<(LineNo, LineFailure)>,
}

impl fmt::Display for DiscoveryFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (line, why)) in self.unjustified.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "line {line}: {why}")?;
        }
        Ok(())
    }
}

/// Searches for a justification of `wffs[at - 1]` given the earlier lines.
///
/// Order: proper axioms, schemes K1..K6 and N7, modus ponens pairs by
/// (minor, major) ascending, generalization premises ascending. The modus
/// ponens search is quadratic in the number of earlier lines.
pub fn justify_line(theory: &Theory, wffs: &[&Wff], at: LineNo) -> Option<Justification> {
    let w = wffs[at - 1];
    if let Some((name, _)) = theory.proper_axioms().into_iter().find(|(_, ax)| *ax == w) {
        return Some(Justification::ProperAxiom(name.into()));
    }
    if let Some(m) = recognize_scheme(theory, w) {
        return Some(Justification::Scheme(m.scheme));
    }
    let before = &wffs[..at - 1];
    for (i, a) in before.iter().enumerate() {
        for (j, ab) in before.iter().enumerate() {
            if let Wff::Implies(l, r) = ab {
                if l.as_ref() == *a && r.as_ref() == w {
                    return Some(Justification::ModusPonens { minor: i + 1, major: j + 1 });
                }
            }
        }
    }
    if let Wff::ForAll(v, body) = w {
        if let Some(i) = before.iter().position(|a| *a == body.as_ref()) {
            return Some(Justification::Generalization { premise: i + 1, var: *v });
        }
    }
    None
}

/// Annotates a bare sequence of formulas.
pub fn discover(theory: &Theory, wffs: Vec<Wff>) -> Result<Proof, DiscoveryFailure> {
    discover_partial(theory, wffs.into_iter().map(|w| (w, Justification::Unknown)).collect())
}

/// Fills in every [`Justification::Unknown`], leaving supplied ones as they
/// are (they are not checked here).
pub fn discover_partial(theory: &Theory, lines: Vec<(Wff, Justification)>) -> Result<Proof, DiscoveryFailure> {
    let wffs: Vec<&Wff> = lines.iter().map(|(w, _)| w).collect();
    let mut out = Vec::with_capacity(lines.len());
    let mut unjustified = Vec::new();
    for (k, (w, j)) in lines.iter().enumerate() {
        let at = k + 1;
        let justification = match j {
            Justification::Unknown => match justify_line(theory, &wffs, at) {
                Some(found) => found,
                None => {
                    unjustified.push((at, LineFailure::NotDerivable { first_line: at == 1 }));
                    Justification::Unknown
                }
            },
            given => given.clone(),
        };
        out.push(ProofLine { wff: w.clone(), justification });
    }
    if lines.is_empty() {
        unjustified.push((0, LineFailure::EmptyProof));
    }
    if unjustified.is_empty() {
        Ok(Proof::new(theory.clone(), out))
    } else {
        Err(DiscoveryFailure { unjustified })
    }
}
