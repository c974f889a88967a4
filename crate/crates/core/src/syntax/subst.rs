//! Substitution of terms for free variables.
//!
//! Substitution never renames bound variables. If a variable of the
//! substituted term would be captured the operation fails with
//! [`CaptureError`], which is what the kernel uses to enforce the
//! "free for" side condition of the instantiation scheme.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

use super::ast::{Term, VarIndex, Wff};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaptureError {
    pub var: VarIndex,
    pub term: Term,
    /// The binder that would capture a variable of `term`.
    pub binder: VarIndex,
}

impl fmt::Display for CaptureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "term {} is not free for x{}: x{} would be captured", self.term, self.var, self.binder)
    }
}

impl core::error::Error for CaptureError {}

/// Result of recovering `t` from `A` and `A(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatchResult {
    /// `A′ = A(t)` for this uniquely determined `t`, and `t` is free for `x`.
    Witness(Term),
    /// `x` is not free in `A` and `A′ = A`, so every term works.
    AnyTerm,
    NoMatch,
}

/// True iff no free occurrence of `x` in `w` lies in the scope of a
/// quantifier binding a variable of `t`.
pub fn is_free_for(t: &Term, x: VarIndex, w: &Wff) -> bool {
    capturing_binder(t, x, w, &mut Vec::new()).is_none()
}

fn capturing_binder(t: &Term, x: VarIndex, w: &Wff, bound: &mut Vec<VarIndex>) -> Option<VarIndex> {
    match w {
        Wff::Atom(_, args) => {
            if args.iter().any(|a| a.contains_var(x)) {
                bound.iter().rev().copied().find(|b| t.contains_var(*b))
            } else {
                None
            }
        }
        Wff::Not(a) => capturing_binder(t, x, a, bound),
        Wff::Implies(a, b) => capturing_binder(t, x, a, bound).or_else(|| capturing_binder(t, x, b, bound)),
        Wff::ForAll(v, body) => {
            if *v == x {
                return None;
            }
            bound.push(*v);
            let r = capturing_binder(t, x, body, bound);
            bound.pop();
            r
        }
    }
}

/// Replaces every free occurrence of `x` in `w` by `t`.
pub fn substitute(w: &Wff, x: VarIndex, t: &Term) -> Result<Wff, CaptureError> {
    if let Some(binder) = capturing_binder(t, x, w, &mut Vec::new()) {
        return Err(CaptureError { var: x, term: t.clone(), binder });
    }
    Ok(substitute_unchecked(w, x, t))
}

fn substitute_unchecked(w: &Wff, x: VarIndex, t: &Term) -> Wff {
    match w {
        Wff::Atom(p, args) => Wff::Atom(*p, args.iter().map(|a| a.replace_var(x, t)).collect()),
        Wff::Not(a) => Wff::Not(Box::new(substitute_unchecked(a, x, t))),
        Wff::Implies(a, b) => {
            Wff::Implies(Box::new(substitute_unchecked(a, x, t)), Box::new(substitute_unchecked(b, x, t)))
        }
        Wff::ForAll(v, _) if *v == x => w.clone(),
        Wff::ForAll(v, body) => Wff::ForAll(*v, Box::new(substitute_unchecked(body, x, t))),
    }
}

/// Decides whether `a_prime` is `a` with its free `x` replaced by a single
/// term, and recovers that term.
pub fn match_substitution_result(a: &Wff, x: VarIndex, a_prime: &Wff) -> MatchResult {
    let mut witness = None;
    if !match_wff(a, x, a_prime, &mut witness) {
        return MatchResult::NoMatch;
    }
    match witness {
        None => MatchResult::AnyTerm,
        Some(t) if is_free_for(&t, x, a) => MatchResult::Witness(t),
        Some(_) => MatchResult::NoMatch,
    }
}

fn match_wff(a: &Wff, x: VarIndex, b: &Wff, witness: &mut Option<Term>) -> bool {
    match (a, b) {
        (Wff::Atom(p, xs), Wff::Atom(q, ys)) => {
            p == q && xs.len() == ys.len() && xs.iter().zip(ys).all(|(s, t)| match_term(s, x, t, witness))
        }
        (Wff::Not(s), Wff::Not(t)) => match_wff(s, x, t, witness),
        (Wff::Implies(s1, s2), Wff::Implies(t1, t2)) => match_wff(s1, x, t1, witness) && match_wff(s2, x, t2, witness),
        (Wff::ForAll(v, s), Wff::ForAll(w, t)) if v == w => {
            if *v == x {
                s == t
            } else {
                match_wff(s, x, t, witness)
            }
        }
        _ => false,
    }
}

fn match_term(s: &Term, x: VarIndex, t: &Term, witness: &mut Option<Term>) -> bool {
    match s {
        Term::Var(v) if *v == x => match witness {
            Some(w) => w == t,
            None => {
                *witness = Some(t.clone());
                true
            }
        },
        Term::Var(_) | Term::Const(_) => s == t,
        Term::App(f, args) => match t {
            Term::App(g, targs) if f == g && args.len() == targs.len() => {
                args.iter().zip(targs).all(|(a, b)| match_term(a, x, b, witness))
            }
            _ => false,
        },
    }
}
