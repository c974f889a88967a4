//! The line-oriented proof file format.
//!
//! ```text
//! # comment
//! axiom Ex: (all x1 ((x1 * S(0)) = x1))
//! theory: Nstar
//! 1. (all x1 ((x1 * S(0)) = x1)) ; AX Ex
//! 2. ((0 = 0) -> ((0 = 0) -> (0 = 0))) ; ?
//! ```
//!
//! A header naming a theory that is not built in defines an extension of
//! `N` by the declared axioms; `theory: <name> extends <base>` picks another
//! base. Without a header the theory is `N`.

use std::fmt::{self, Write as _};

use peano_core::kernel::{Justification, Proof, ProofLine, SchemeId, Theory, TheoryError};
use peano_core::syntax::{parse_core, print_wff, ParseError, Wff};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ProofFileError {
    /// 1-based line of the file, not the proof line number.
    pub line: usize,
    pub kind: ProofFileErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ProofFileErrorKind {
    #[error("cannot parse formula: {0}")]
    Formula(ParseError),
    #[error("bad justification `{0}`")]
    Justification(String),
    #[error("expected `<k>. <wff> ; <justification>`")]
    Malformed,
    #[error("expected line number {expected}, found {found}")]
    Numbering { expected: usize, found: String },
    #[error("unknown base theory `{0}`")]
    UnknownTheory(String),
    #[error("declared axioms need a theory name other than the built-in `{0}`")]
    BuiltinWithAxioms(String),
    #[error("header and axiom declarations must precede the proof lines")]
    LateHeader,
    #[error("second theory header")]
    DuplicateHeader,
    #[error("axiom declarations without a theory header")]
    MissingHeader,
    #[error("{0}")]
    Theory(TheoryError),
}

/// A parsed file: its theory and lines, `?` justifications kept as
/// [`Justification::Unknown`].
#[derive(Clone, Debug)]
pub struct ProofFile {
    pub theory: Theory,
    pub lines: Vec<(Wff, Justification)>,
}

impl ProofFile {
    /// The lines as given, for checking.
    pub fn to_proof(&self) -> Proof {
        let lines = self
            .lines
            .iter()
            .map(|(wff, justification)| ProofLine { wff: wff.clone(), justification: justification.clone() })
            .collect();
        Proof::new(self.theory.clone(), lines)
    }
}

fn err(line: usize, kind: ProofFileErrorKind) -> ProofFileError {
    ProofFileError { line, kind }
}

pub fn parse_justification(text: &str) -> Option<Justification> {
    let parts: Vec<&str> = text.split_whitespace().collect();
    let number = |s: &str| s.parse::<usize>().ok().filter(|n| *n > 0);
    match parts.as_slice() {
        ["?"] => Some(Justification::Unknown),
        [tag] => tag.parse::<SchemeId>().ok().map(Justification::Scheme),
        ["AX", name] => Some(Justification::ProperAxiom((*name).to_string())),
        ["MP", i, j] => Some(Justification::ModusPonens { minor: number(i)?, major: number(j)? }),
        ["GEN", i, v] => {
            let var = v.strip_prefix('x')?.parse::<u32>().ok().filter(|v| *v > 0)?;
            Some(Justification::Generalization { premise: number(i)?, var })
        }
        _ => None,
    }
}

fn parse_formula(text: &str, line: usize) -> Result<Wff, ProofFileError> {
    parse_core(text.trim()).map_err(|e| err(line, ProofFileErrorKind::Formula(e)))
}

pub fn parse_proof_file(text: &str) -> Result<ProofFile, ProofFileError> {
    let mut declared: Vec<(String, Wff)> = Vec::new();
    let mut header: Option<(usize, String, Option<String>)> = None;
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let at = i + 1;
        let src = raw.trim();
        if src.is_empty() || src.starts_with('#') {
            continue;
        }
        if let Some(rest) = src.strip_prefix("axiom ") {
            if !lines.is_empty() {
                return Err(err(at, ProofFileErrorKind::LateHeader));
            }
            let (name, wff) = rest.split_once(':').ok_or_else(|| err(at, ProofFileErrorKind::Malformed))?;
            declared.push((name.trim().to_string(), parse_formula(wff, at)?));
            continue;
        }
        if let Some(rest) = src.strip_prefix("theory:") {
            if !lines.is_empty() {
                return Err(err(at, ProofFileErrorKind::LateHeader));
            }
            if header.is_some() {
                return Err(err(at, ProofFileErrorKind::DuplicateHeader));
            }
            let words: Vec<&str> = rest.split_whitespace().collect();
            header = Some(match words.as_slice() {
                [name] => (at, name.to_string(), None),
                [name, "extends", base] => (at, name.to_string(), Some(base.to_string())),
                _ => return Err(err(at, ProofFileErrorKind::Malformed)),
            });
            continue;
        }
        let (number, rest) = src.split_once('.').ok_or_else(|| err(at, ProofFileErrorKind::Malformed))?;
        let expected = lines.len() + 1;
        if number.trim().parse::<usize>() != Ok(expected) {
            return Err(err(at, ProofFileErrorKind::Numbering { expected, found: number.trim().to_string() }));
        }
        let (wff, just) = rest.rsplit_once(';').ok_or_else(|| err(at, ProofFileErrorKind::Malformed))?;
        let justification = parse_justification(just)
            .ok_or_else(|| err(at, ProofFileErrorKind::Justification(just.trim().to_string())))?;
        lines.push((parse_formula(wff, at)?, justification));
    }
    let theory = match header {
        None if declared.is_empty() => Theory::peano(),
        None => return Err(err(1, ProofFileErrorKind::MissingHeader)),
        Some((at, name, base)) => resolve_theory(&name, base.as_deref(), declared).map_err(|k| err(at, k))?,
    };
    Ok(ProofFile { theory, lines })
}

fn resolve_theory(name: &str, base: Option<&str>, declared: Vec<(String, Wff)>) -> Result<Theory, ProofFileErrorKind> {
    if base.is_none() {
        if let Some(t) = Theory::builtin(name) {
            if !declared.is_empty() {
                return Err(ProofFileErrorKind::BuiltinWithAxioms(name.to_string()));
            }
            return Ok(t);
        }
    }
    let base_name = base.unwrap_or("N");
    let parent = Theory::builtin(base_name).ok_or_else(|| ProofFileErrorKind::UnknownTheory(base_name.to_string()))?;
    if Theory::builtin(name).is_some() {
        return Err(ProofFileErrorKind::BuiltinWithAxioms(name.to_string()));
    }
    parent.extend(name, declared).map_err(ProofFileErrorKind::Theory)
}

/// Axioms `theory` adds to its parent, in declaration order.
fn own_axioms(theory: &Theory) -> Vec<(&str, &Wff)> {
    let inherited = |n: &str| theory.parent().is_some_and(|p| p.axiom(n).is_some());
    theory.proper_axioms().into_iter().filter(|(n, _)| !inherited(n)).collect()
}

/// Renders `proof` in the file format, formulas in canonical core form.
pub fn print_proof(proof: &Proof) -> String {
    let mut out = String::new();
    write_proof(&mut out, proof).expect("writing to a String cannot fail");
    out
}

fn write_proof(out: &mut String, proof: &Proof) -> fmt::Result {
    let theory = &proof.theory;
    if Theory::builtin(theory.name()).is_none() {
        for (name, w) in own_axioms(theory) {
            writeln!(out, "axiom {name}: {}", print_wff(w, false))?;
        }
        match theory.parent() {
            Some(p) if p.name() != "N" => writeln!(out, "theory: {} extends {}", theory.name(), p.name())?,
            _ => writeln!(out, "theory: {}", theory.name())?,
        }
    } else {
        writeln!(out, "theory: {}", theory.name())?;
    }
    for (k, line) in proof.lines.iter().enumerate() {
        writeln!(out, "{}. {} ; {}", k + 1, print_wff(&line.wff, false), line.justification)?;
    }
    Ok(())
}
