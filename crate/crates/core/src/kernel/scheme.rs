//! Recognition of axiom-scheme instances.
//!
//! Each recognizer checks the shape of a formula and then the scheme's side
//! condition. A formula that has the right shape but violates the side
//! condition is not an instance.

use core::fmt;
use core::str::FromStr;

use crate::syntax::{match_substitution_result, MatchResult, Term, VarIndex, Wff};

use super::theory::{InductionVariable, Theory};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SchemeId {
    K1,
    K2,
    K3,
    K4,
    K5,
    K6,
    N7,
}

impl SchemeId {
    /// Recognition order.
    pub const ALL: [SchemeId; 7] =
        [SchemeId::K1, SchemeId::K2, SchemeId::K3, SchemeId::K4, SchemeId::K5, SchemeId::K6, SchemeId::N7];

    pub fn name(self) -> &'static str {
        match self {
            SchemeId::K1 => "K1",
            SchemeId::K2 => "K2",
            SchemeId::K3 => "K3",
            SchemeId::K4 => "K4",
            SchemeId::K5 => "K5",
            SchemeId::K6 => "K6",
            SchemeId::N7 => "N7",
        }
    }
}

impl fmt::Display for SchemeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SchemeId {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SchemeId::ALL.into_iter().find(|id| id.name() == s).ok_or(())
    }
}

/// The parts of a formula that instantiate a scheme's metavariables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence<'a> {
    /// `A → (B → A)`
    K1 { a: &'a Wff, b: &'a Wff },
    /// `(A → (B → C)) → ((A → B) → (A → C))`
    K2 { a: &'a Wff, b: &'a Wff, c: &'a Wff },
    /// `(¬A → ¬B) → (B → A)`
    K3 { a: &'a Wff, b: &'a Wff },
    /// `∀x A → A`, `x` not free in `A`.
    K4 { var: VarIndex, body: &'a Wff },
    /// `∀x A(x) → A(t)`. `term` is `None` when `x` is not free in `A`.
    K5 { var: VarIndex, body: &'a Wff, term: Option<Term> },
    /// `∀x (A → B) → (A → ∀x B)`, `x` not free in `A`.
    K6 { var: VarIndex, a: &'a Wff, b: &'a Wff },
    /// `A(0) → (∀x (A(x) → A(S x)) → ∀x A(x))`
    N7 { var: VarIndex, formula: &'a Wff },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeMatch<'a> {
    pub scheme: SchemeId,
    pub evidence: Evidence<'a>,
}

fn imp(w: &Wff) -> Option<(&Wff, &Wff)> {
    match w {
        Wff::Implies(a, b) => Some((a, b)),
        _ => None,
    }
}

fn neg(w: &Wff) -> Option<&Wff> {
    match w {
        Wff::Not(a) => Some(a),
        _ => None,
    }
}

fn all(w: &Wff) -> Option<(VarIndex, &Wff)> {
    match w {
        Wff::ForAll(v, b) => Some((*v, b)),
        _ => None,
    }
}

pub(crate) fn match_k1(w: &Wff) -> Option<Evidence<'_>> {
    let (a, rest) = imp(w)?;
    let (b, a2) = imp(rest)?;
    (a == a2).then_some(Evidence::K1 { a, b })
}

pub(crate) fn match_k2(w: &Wff) -> Option<Evidence<'_>> {
    let (l, r) = imp(w)?;
    let (a, bc) = imp(l)?;
    let (b, c) = imp(bc)?;
    let (ab, ac) = imp(r)?;
    let (a2, b2) = imp(ab)?;
    let (a3, c2) = imp(ac)?;
    (a == a2 && a == a3 && b == b2 && c == c2).then_some(Evidence::K2 { a, b, c })
}

pub(crate) fn match_k3(w: &Wff) -> Option<Evidence<'_>> {
    let (l, r) = imp(w)?;
    let (na, nb) = imp(l)?;
    let (a, b) = (neg(na)?, neg(nb)?);
    let (b2, a2) = imp(r)?;
    (a == a2 && b == b2).then_some(Evidence::K3 { a, b })
}

pub(crate) fn match_k4(w: &Wff) -> Option<Evidence<'_>> {
    let (l, r) = imp(w)?;
    let (var, body) = all(l)?;
    (body == r && !body.is_free(var)).then_some(Evidence::K4 { var, body })
}

pub(crate) fn match_k5(w: &Wff) -> Option<Evidence<'_>> {
    let (l, r) = imp(w)?;
    let (var, body) = all(l)?;
    match match_substitution_result(body, var, r) {
        MatchResult::Witness(t) => Some(Evidence::K5 { var, body, term: Some(t) }),
        MatchResult::AnyTerm => Some(Evidence::K5 { var, body, term: None }),
        MatchResult::NoMatch => None,
    }
}

pub(crate) fn match_k6(w: &Wff) -> Option<Evidence<'_>> {
    let (l, r) = imp(w)?;
    let (var, inner) = all(l)?;
    let (a, b) = imp(inner)?;
    let (a2, qb) = imp(r)?;
    let (var2, b2) = all(qb)?;
    (var == var2 && a == a2 && b == b2 && !a.is_free(var)).then_some(Evidence::K6 { var, a, b })
}

pub(crate) fn match_n7(w: &Wff, mode: InductionVariable) -> Option<Evidence<'_>> {
    let (base, rest) = imp(w)?;
    let (step, conclusion) = imp(rest)?;
    let (var, formula) = all(conclusion)?;
    if mode == InductionVariable::FirstOnly && var != 1 {
        return None;
    }
    if !formula.is_free(var) {
        return None;
    }
    let (var2, step_body) = all(step)?;
    let (hyp, next) = imp(step_body)?;
    if var2 != var || hyp != formula {
        return None;
    }
    let zero = match_substitution_result(formula, var, base) == MatchResult::Witness(Term::zero());
    let succ = match_substitution_result(formula, var, next) == MatchResult::Witness(Term::succ(Term::Var(var)));
    (zero && succ).then_some(Evidence::N7 { var, formula })
}

fn match_scheme<'a>(id: SchemeId, w: &'a Wff, theory: &Theory) -> Option<Evidence<'a>> {
    match id {
        SchemeId::K1 => match_k1(w),
        SchemeId::K2 => match_k2(w),
        SchemeId::K3 => match_k3(w),
        SchemeId::K4 => match_k4(w),
        SchemeId::K5 => match_k5(w),
        SchemeId::K6 => match_k6(w),
        SchemeId::N7 => match_n7(w, theory.induction_variable()),
    }
}

/// Returns the first scheme enabled in `theory`, in the order K1..K6, N7,
/// of which `w` is an instance.
pub fn recognize_scheme<'a>(theory: &Theory, w: &'a Wff) -> Option<SchemeMatch<'a>> {
    SchemeId::ALL
        .into_iter()
        .filter(|id| theory.has_scheme(*id))
        .find_map(|id| match_scheme(id, w, theory).map(|evidence| SchemeMatch { scheme: id, evidence }))
}

/// Whether `w` is an instance of the given scheme (regardless of order).
pub fn is_instance(theory: &Theory, id: SchemeId, w: &Wff) -> bool {
    theory.has_scheme(id) && match_scheme(id, w, theory).is_some()
}
