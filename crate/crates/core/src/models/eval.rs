//! Bounded three-valued evaluation.
//!
//! A quantifier `∀x` is checked on the elements with index `0..=bound`.
//! A counterexample makes it False. Without one the answer is Unknown,
//! except in one situation where the bound provably cannot matter: the body
//! has the form `∀y… (s = t → C)`, up to double negation, where one side
//! of the equation does not mention `x` or the `y…`, and a lower bound on the other side, valid for
//! every `x > bound`, already exceeds it. Then no element past the bound can
//! satisfy the hypothesis and the quantifier is True. This is what lets
//! formulas such as "v is prime" (`∀a∀b (a·b = v → …)`) evaluate to True.
//!
//! True and False are therefore always correct in the structure, and a
//! decisive verdict at one bound stays decisive at every larger bound.
//! Negation and implication follow the strong Kleene tables.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::syntax::{Term, VarIndex, Wff, ADD_LETTER, EQ_PREDICATE, MUL_LETTER, SUCC_LETTER};

use super::structure::Structure;
use super::ModelError;

/// Quantifier instantiations that decided a verdict, outermost first:
/// the witnesses of a True existential or the counterexample of a False
/// universal.
pub type Trace = Vec<(VarIndex, u64)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThreeValued {
    True(Trace),
    False(Trace),
    /// Some quantifier ran out of indices without deciding.
    Unknown,
}

impl ThreeValued {
    pub fn is_true(&self) -> bool {
        matches!(self, ThreeValued::True(_))
    }

    pub fn is_false(&self) -> bool {
        matches!(self, ThreeValued::False(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, ThreeValued::Unknown)
    }

    /// `"True"`, `"False"` or `"Unknown"`.
    pub fn label(&self) -> &'static str {
        match self {
            ThreeValued::True(_) => "True",
            ThreeValued::False(_) => "False",
            ThreeValued::Unknown => "Unknown",
        }
    }

    pub fn trace(&self) -> &[(VarIndex, u64)] {
        match self {
            ThreeValued::True(t) | ThreeValued::False(t) => t,
            ThreeValued::Unknown => &[],
        }
    }

    fn negate(self) -> ThreeValued {
        match self {
            ThreeValued::True(t) => ThreeValued::False(t),
            ThreeValued::False(t) => ThreeValued::True(t),
            ThreeValued::Unknown => ThreeValued::Unknown,
        }
    }
}

impl fmt::Display for ThreeValued {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())?;
        let trace = self.trace();
        if !trace.is_empty() {
            f.write_str(" [")?;
            for (i, (v, n)) in trace.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "x{v}={n}")?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalError {
    UnboundVariable(VarIndex),
    UninterpretedConstant(u32),
    UninterpretedFunction { letter: u32, arity: usize },
    UninterpretedPredicate { letter: u32, arity: usize },
    Model(ModelError),
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::UnboundVariable(v) => write!(f, "free variable x{v} has no value"),
            EvalError::UninterpretedConstant(k) => write!(f, "constant a{k} has no interpretation"),
            EvalError::UninterpretedFunction { letter, arity } => {
                write!(f, "function letter f{{{letter},{arity}}} has no interpretation")
            }
            EvalError::UninterpretedPredicate { letter, arity } => {
                write!(f, "predicate letter A{{{letter},{arity}}} has no interpretation")
            }
            EvalError::Model(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for EvalError {}

impl From<ModelError> for EvalError {
    fn from(e: ModelError) -> Self {
        EvalError::Model(e)
    }
}

struct Evaluator<'m, S: Structure> {
    model: &'m S,
    bound: u64,
    env: BTreeMap<VarIndex, S::Elem>,
}

impl<S: Structure> Evaluator<'_, S> {
    fn term(&self, t: &Term) -> Result<S::Elem, EvalError> {
        match t {
            Term::Var(v) => self.env.get(v).cloned().ok_or(EvalError::UnboundVariable(*v)),
            Term::Const(k) => self.model.constant(*k).ok_or(EvalError::UninterpretedConstant(*k)),
            Term::App(f, args) => match (*f, args.as_slice()) {
                (SUCC_LETTER, [x]) => Ok(self.model.succ(&self.term(x)?)?),
                (ADD_LETTER, [x, y]) => Ok(self.model.add(&self.term(x)?, &self.term(y)?)?),
                (MUL_LETTER, [x, y]) => Ok(self.model.mul(&self.term(x)?, &self.term(y)?)?),
                _ => Err(EvalError::UninterpretedFunction { letter: *f, arity: args.len() }),
            },
        }
    }

    fn wff(&mut self, w: &Wff) -> Result<ThreeValued, EvalError> {
        match w {
            Wff::Atom(EQ_PREDICATE, args) if args.len() == 2 => {
                let (l, r) = (self.term(&args[0])?, self.term(&args[1])?);
                Ok(if self.model.equal(&l, &r) {
                    ThreeValued::True(Vec::new())
                } else {
                    ThreeValued::False(Vec::new())
                })
            }
            Wff::Atom(p, args) => Err(EvalError::UninterpretedPredicate { letter: *p, arity: args.len() }),
            Wff::Not(a) => Ok(self.wff(a)?.negate()),
            Wff::Implies(a, b) => {
                let left = self.wff(a)?;
                if let ThreeValued::False(t) = left {
                    return Ok(ThreeValued::True(t));
                }
                let right = self.wff(b)?;
                Ok(match (left, right) {
                    (_, ThreeValued::True(t)) => ThreeValued::True(t),
                    (ThreeValued::True(mut t), ThreeValued::False(u)) => {
                        t.extend(u);
                        ThreeValued::False(t)
                    }
                    _ => ThreeValued::Unknown,
                })
            }
            Wff::ForAll(v, body) => self.forall(*v, body),
        }
    }

    fn forall(&mut self, v: VarIndex, body: &Wff) -> Result<ThreeValued, EvalError> {
        let saved = self.env.remove(&v);
        let mut undecided = false;
        let mut result = None;
        for i in 0..=self.bound {
            self.env.insert(v, self.model.element(i));
            match self.wff(body) {
                Ok(ThreeValued::False(t)) => {
                    let mut trace = alloc::vec![(v, i)];
                    trace.extend(t);
                    result = Some(Ok(ThreeValued::False(trace)));
                    break;
                }
                Ok(ThreeValued::Unknown) => undecided = true,
                Ok(ThreeValued::True(_)) => {}
                Err(e) => {
                    result = Some(Err(e));
                    break;
                }
            }
        }
        self.env.remove(&v);
        let result = match result {
            Some(r) => r,
            None if !undecided && self.model.arithmetic_is_standard() && self.vacuous_beyond_bound(v, body) => {
                Ok(ThreeValued::True(Vec::new()))
            }
            None => Ok(ThreeValued::Unknown),
        };
        if let Some(old) = saved {
            self.env.insert(v, old);
        }
        result
    }

    /// Whether `body` holds for every `v` with index above the bound
    /// because its hypothesis cannot be satisfied there.
    fn vacuous_beyond_bound(&self, v: VarIndex, body: &Wff) -> bool {
        let mut inner = Vec::new();
        let mut cur = body;
        loop {
            match cur {
                Wff::ForAll(y, _) if *y == v => return false,
                Wff::ForAll(y, b) => {
                    inner.push(*y);
                    cur = b;
                }
                Wff::Not(a) => match a.as_ref() {
                    Wff::Not(b) => cur = b,
                    _ => break,
                },
                _ => break,
            }
        }
        let Wff::Implies(hyp, _) = cur else { return false };
        let Wff::Atom(EQ_PREDICATE, sides) = hyp.as_ref() else { return false };
        let [l, r] = sides.as_slice() else { return false };
        let quantified = |t: &Term| t.contains_var(v) || inner.iter().any(|y| t.contains_var(*y));
        let (fixed, growing) = match (quantified(l), quantified(r)) {
            (false, true) => (l, r),
            (true, false) => (r, l),
            _ => return false,
        };
        let Ok(fixed) = self.term(fixed) else { return false };
        let target = self.model.index_of(&fixed);
        self.lower_bound(growing, v, &inner, target >= 1) > target
    }

    /// A lower bound on the index of `t` over all assignments giving `v` an
    /// index above the bound and the `inner` variables any index. With
    /// `nonzero` the bound may assume `t` is not 0: a product equal to a
    /// nonzero number has nonzero factors.
    fn lower_bound(&self, t: &Term, v: VarIndex, inner: &[VarIndex], nonzero: bool) -> u64 {
        match t {
            Term::Var(x) if *x == v => self.bound.saturating_add(1),
            Term::Var(x) if inner.contains(x) => 0,
            Term::Var(x) => self.env.get(x).map_or(0, |e| self.model.index_of(e)),
            Term::Const(_) => self.term(t).map_or(0, |e| self.model.index_of(&e)),
            Term::App(f, args) => match (*f, args.as_slice()) {
                (SUCC_LETTER, [x]) => self.lower_bound(x, v, inner, false).saturating_add(1),
                (ADD_LETTER, [x, y]) => {
                    self.lower_bound(x, v, inner, false).saturating_add(self.lower_bound(y, v, inner, false))
                }
                (MUL_LETTER, [x, y]) if nonzero => self
                    .lower_bound(x, v, inner, true)
                    .max(1)
                    .saturating_mul(self.lower_bound(y, v, inner, true).max(1)),
                (MUL_LETTER, [x, y]) => {
                    self.lower_bound(x, v, inner, false).saturating_mul(self.lower_bound(y, v, inner, false))
                }
                _ => 0,
            },
        }
    }
}

/// Evaluates `w` with quantifiers searching indices `0..=bound`.
///
/// `env` must give a value to every free variable of `w`.
pub fn eval_bounded<S: Structure>(
    model: &S,
    w: &Wff,
    env: &BTreeMap<VarIndex, S::Elem>,
    bound: u64,
) -> Result<ThreeValued, EvalError> {
    if let Some(v) = w.free_vars().into_iter().find(|v| !env.contains_key(v)) {
        return Err(EvalError::UnboundVariable(v));
    }
    Evaluator { model, bound, env: env.clone() }.wff(w)
}

/// [`eval_bounded`] with the free variables given by index.
pub fn eval_with_indices<S: Structure>(
    model: &S,
    w: &Wff,
    env: &BTreeMap<VarIndex, u64>,
    bound: u64,
) -> Result<ThreeValued, EvalError> {
    let env = env.iter().map(|(v, i)| (*v, model.element(*i))).collect();
    eval_bounded(model, w, &env, bound)
}
