use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::syntax::{Term, VarIndex, Wff};

use super::scheme::SchemeId;

/// Which variable the induction scheme may quantify.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InductionVariable {
    /// Only `x1`, the variable the scheme is stated with.
    FirstOnly,
    /// Any variable.
    Any,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TheoryError {
    DuplicateAxiom(String),
    OpenAxiom { name: String, free: Vec<VarIndex> },
}

impl fmt::Display for TheoryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoryError::DuplicateAxiom(name) => write!(f, "axiom name {name:?} is already used"),
            TheoryError::OpenAxiom { name, free } => {
                write!(f, "axiom {name:?} is not closed (free:")?;
                for v in free {
                    write!(f, " x{v}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl core::error::Error for TheoryError {}

/// A theory: the base calculus plus enabled schemes and proper axioms,
/// possibly extending a parent theory.
///
/// Extending never removes anything, so every proof accepted under a theory
/// is accepted under each of its extensions.
#[derive(Clone, Debug)]
pub struct Theory {
    name: String,
    parent: Option<Arc<Theory>>,
    schemes: BTreeSet<SchemeId>,
    axioms: Vec<(String, Wff)>,
    induction: InductionVariable,
}

fn forall2(body: Wff) -> Wff {
    Wff::forall(1, Wff::forall(2, body))
}

fn forall3(body: Wff) -> Wff {
    Wff::forall(1, Wff::forall(2, Wff::forall(3, body)))
}

fn x(i: VarIndex) -> Term {
    Term::Var(i)
}

/// The six proper axioms of Peano arithmetic.
pub fn peano_axioms() -> Vec<(String, Wff)> {
    let axioms = [
        ("N1", Wff::forall(1, Wff::not(Wff::equals(Term::succ(x(1)), Term::zero())))),
        ("N2", forall2(Wff::implies(Wff::equals(Term::succ(x(1)), Term::succ(x(2))), Wff::equals(x(1), x(2))))),
        ("N3", Wff::forall(1, Wff::equals(Term::add(x(1), Term::zero()), x(1)))),
        ("N4", forall2(Wff::equals(Term::add(x(1), Term::succ(x(2))), Term::succ(Term::add(x(1), x(2)))))),
        ("N5", Wff::forall(1, Wff::equals(Term::mul(x(1), Term::zero()), Term::zero()))),
        ("N6", forall2(Wff::equals(Term::mul(x(1), Term::succ(x(2))), Term::add(Term::mul(x(1), x(2)), x(1))))),
    ];
    axioms.into_iter().map(|(n, w)| (n.to_string(), w)).collect()
}

/// Equality axioms for the arithmetic language: reflexivity, the
/// Euclidean law and substitutivity for successor, sum and product.
pub fn equality_axioms() -> Vec<(String, Wff)> {
    let eq = |a: Term, b: Term| Wff::equals(a, b);
    let x1_eq_x2 = || eq(x(1), x(2));
    let axioms = [
        ("E1", Wff::forall(1, eq(x(1), x(1)))),
        ("E2", forall3(Wff::implies(x1_eq_x2(), Wff::implies(eq(x(1), x(3)), eq(x(2), x(3)))))),
        ("E3", forall2(Wff::implies(x1_eq_x2(), eq(Term::succ(x(1)), Term::succ(x(2)))))),
        ("E4", forall3(Wff::implies(x1_eq_x2(), eq(Term::add(x(1), x(3)), Term::add(x(2), x(3)))))),
        ("E5", forall3(Wff::implies(x1_eq_x2(), eq(Term::add(x(3), x(1)), Term::add(x(3), x(2)))))),
        ("E6", forall3(Wff::implies(x1_eq_x2(), eq(Term::mul(x(1), x(3)), Term::mul(x(2), x(3)))))),
        ("E7", forall3(Wff::implies(x1_eq_x2(), eq(Term::mul(x(3), x(1)), Term::mul(x(3), x(2)))))),
    ];
    axioms.into_iter().map(|(n, w)| (n.to_string(), w)).collect()
}

impl Theory {
    /// The pure calculus: schemes K1–K6, no proper axioms.
    pub fn base_calculus() -> Theory {
        Theory {
            name: "K".to_string(),
            parent: None,
            schemes: SchemeId::ALL.into_iter().filter(|s| *s != SchemeId::N7).collect(),
            axioms: Vec::new(),
            induction: InductionVariable::FirstOnly,
        }
    }

    /// First-order arithmetic: the base calculus with N1–N6 and the
    /// induction scheme N7.
    pub fn peano() -> Theory {
        Theory::base_calculus()
            .extend_with("N", [SchemeId::N7], peano_axioms())
            .expect("the Peano axioms are closed and distinctly named")
    }

    /// Arithmetic with explicit equality axioms E1–E7.
    pub fn peano_with_equality() -> Theory {
        Theory::peano().extend("N-eq", equality_axioms()).expect("the equality axioms are closed and distinctly named")
    }

    /// Looks up one of the prebuilt theories by name.
    pub fn builtin(name: &str) -> Option<Theory> {
        match name {
            "K" => Some(Theory::base_calculus()),
            "N" => Some(Theory::peano()),
            "N-eq" => Some(Theory::peano_with_equality()),
            _ => None,
        }
    }

    /// A child theory with every scheme and axiom of `self` plus `extra`.
    pub fn extend(
        &self,
        name: impl Into<String>,
        extra: impl IntoIterator<Item = (String, Wff)>,
    ) -> Result<Theory, TheoryError> {
        self.extend_with(name, [], extra)
    }

    fn extend_with(
        &self,
        name: impl Into<String>,
        schemes: impl IntoIterator<Item = SchemeId>,
        extra: impl IntoIterator<Item = (String, Wff)>,
    ) -> Result<Theory, TheoryError> {
        let mut axioms: Vec<(String, Wff)> = Vec::new();
        for (n, w) in extra {
            if self.axiom(&n).is_some() || axioms.iter().any(|(m, _)| *m == n) {
                return Err(TheoryError::DuplicateAxiom(n));
            }
            let free = w.free_vars();
            if !free.is_empty() {
                return Err(TheoryError::OpenAxiom { name: n, free: free.into_iter().collect() });
            }
            axioms.push((n, w));
        }
        let mut all_schemes = self.schemes.clone();
        all_schemes.extend(schemes);
        Ok(Theory {
            name: name.into(),
            parent: Some(Arc::new(self.clone())),
            schemes: all_schemes,
            axioms,
            induction: self.induction,
        })
    }

    /// Lets the induction scheme quantify any variable, not only `x1`.
    pub fn with_relaxed_induction(mut self) -> Theory {
        self.induction = InductionVariable::Any;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn parent(&self) -> Option<&Theory> {
        self.parent.as_deref()
    }

    pub fn induction_variable(&self) -> InductionVariable {
        self.induction
    }

    pub fn has_scheme(&self, id: SchemeId) -> bool {
        self.schemes.contains(&id)
    }

    pub fn schemes(&self) -> impl Iterator<Item = SchemeId> + '_ {
        self.schemes.iter().copied()
    }

    pub fn axiom(&self, name: &str) -> Option<&Wff> {
        self.axioms
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, w)| w)
            .or_else(|| self.parent.as_ref().and_then(|p| p.axiom(name)))
    }

    /// All proper axioms, inherited ones first, in declaration order.
    pub fn proper_axioms(&self) -> Vec<(&str, &Wff)> {
        let mut out = self.parent.as_ref().map(|p| p.proper_axioms()).unwrap_or_default();
        out.extend(self.axioms.iter().map(|(n, w)| (n.as_str(), w)));
        out
    }

    /// Whether `other` is `self` or one of its ancestors.
    pub fn extends(&self, other: &Theory) -> bool {
        let mut cur = Some(self);
        while let Some(t) = cur {
            if t.name == other.name && t.axioms == other.axioms && t.schemes == other.schemes {
                return true;
            }
            cur = t.parent();
        }
        false
    }
}
