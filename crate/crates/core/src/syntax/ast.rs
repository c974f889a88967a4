use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

/// Index `i` of the variable `x_i`. Always at least 1.
pub type VarIndex = u32;

/// Predicate letter index used for equality (`A_1^2`).
pub const EQ_PREDICATE: u32 = 1;
/// Constant index of `a_1`, the zero of arithmetic.
pub const ZERO_CONST: u32 = 1;
/// Function letter index of successor (`f_1^1`).
pub const SUCC_LETTER: u32 = 1;
/// Function letter index of sum (`f_1^2`).
pub const ADD_LETTER: u32 = 1;
/// Function letter index of product (`f_2^2`).
pub const MUL_LETTER: u32 = 2;

/// A first-order term.
///
/// The arity of a function letter is the length of its argument list, so
/// `App(1, [t])` is `f_1^1` and `App(1, [t, u])` is `f_1^2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(VarIndex),
    Const(u32),
    App(u32, Vec<Term>),
}

impl Term {
    pub fn zero() -> Term {
        Term::Const(ZERO_CONST)
    }

    pub fn succ(t: Term) -> Term {
        Term::App(SUCC_LETTER, vec![t])
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(l: Term, r: Term) -> Term {
        Term::App(ADD_LETTER, vec![l, r])
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(l: Term, r: Term) -> Term {
        Term::App(MUL_LETTER, vec![l, r])
    }

    pub fn arity(&self) -> usize {
        match self {
            Term::App(_, args) => args.len(),
            _ => 0,
        }
    }

    /// Inserts every variable of the term into `out`.
    pub fn collect_vars(&self, out: &mut BTreeSet<VarIndex>) {
        match self {
            Term::Var(v) => {
                out.insert(*v);
            }
            Term::Const(_) => {}
            Term::App(_, args) => args.iter().for_each(|a| a.collect_vars(out)),
        }
    }

    pub fn vars(&self) -> BTreeSet<VarIndex> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    pub fn contains_var(&self, v: VarIndex) -> bool {
        match self {
            Term::Var(w) => *w == v,
            Term::Const(_) => false,
            Term::App(_, args) => args.iter().any(|a| a.contains_var(v)),
        }
    }

    pub fn is_closed(&self) -> bool {
        match self {
            Term::Var(_) => false,
            Term::Const(_) => true,
            Term::App(_, args) => args.iter().all(Term::is_closed),
        }
    }

    /// Replaces every occurrence of `x` by `t`.
    pub fn replace_var(&self, x: VarIndex, t: &Term) -> Term {
        match self {
            Term::Var(v) if *v == x => t.clone(),
            Term::Var(_) | Term::Const(_) => self.clone(),
            Term::App(f, args) => Term::App(*f, args.iter().map(|a| a.replace_var(x, t)).collect()),
        }
    }
}

/// A core well-formed formula: only `¬`, `→` and `∀` occur.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Wff {
    /// Predicate letter `A_k^n` applied to `n` terms.
    Atom(u32, Vec<Term>),
    Not(Box<Wff>),
    Implies(Box<Wff>, Box<Wff>),
    ForAll(VarIndex, Box<Wff>),
}

impl Wff {
    pub fn equals(l: Term, r: Term) -> Wff {
        Wff::Atom(EQ_PREDICATE, vec![l, r])
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(w: Wff) -> Wff {
        Wff::Not(Box::new(w))
    }

    pub fn implies(a: Wff, b: Wff) -> Wff {
        Wff::Implies(Box::new(a), Box::new(b))
    }

    pub fn forall(v: VarIndex, body: Wff) -> Wff {
        Wff::ForAll(v, Box::new(body))
    }

    /// `(∃x)A`, written out as `¬(∀x)¬A`.
    pub fn exists(v: VarIndex, body: Wff) -> Wff {
        Wff::not(Wff::forall(v, Wff::not(body)))
    }

    /// `A ∧ B`, written out as `¬(A → ¬B)`.
    pub fn and(a: Wff, b: Wff) -> Wff {
        Wff::not(Wff::implies(a, Wff::not(b)))
    }

    /// `A ∨ B`, written out as `¬A → B`.
    pub fn or(a: Wff, b: Wff) -> Wff {
        Wff::implies(Wff::not(a), b)
    }

    /// `A ↔ B`, written out as `(A → B) ∧ (B → A)`.
    pub fn iff(a: Wff, b: Wff) -> Wff {
        Wff::and(Wff::implies(a.clone(), b.clone()), Wff::implies(b, a))
    }

    /// Right-nested conjunction of a nonempty list.
    pub fn and_all(mut parts: Vec<Wff>) -> Wff {
        let mut acc = parts.pop().expect("and_all of an empty list");
        while let Some(p) = parts.pop() {
            acc = Wff::and(p, acc);
        }
        acc
    }

    pub fn free_vars(&self) -> BTreeSet<VarIndex> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<VarIndex>, out: &mut BTreeSet<VarIndex>) {
        match self {
            Wff::Atom(_, args) => {
                for a in args {
                    for v in a.vars() {
                        if !bound.contains(&v) {
                            out.insert(v);
                        }
                    }
                }
            }
            Wff::Not(a) => a.collect_free(bound, out),
            Wff::Implies(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Wff::ForAll(v, body) => {
                bound.push(*v);
                body.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn is_free(&self, x: VarIndex) -> bool {
        match self {
            Wff::Atom(_, args) => args.iter().any(|a| a.contains_var(x)),
            Wff::Not(a) => a.is_free(x),
            Wff::Implies(a, b) => a.is_free(x) || b.is_free(x),
            Wff::ForAll(v, body) => *v != x && body.is_free(x),
        }
    }

    pub fn is_closed(&self) -> bool {
        self.free_vars().is_empty()
    }

    /// Every variable index occurring anywhere, bound or free.
    pub fn all_vars(&self) -> BTreeSet<VarIndex> {
        let mut out = BTreeSet::new();
        self.collect_all(&mut out);
        out
    }

    fn collect_all(&self, out: &mut BTreeSet<VarIndex>) {
        match self {
            Wff::Atom(_, args) => args.iter().for_each(|a| a.collect_vars(out)),
            Wff::Not(a) => a.collect_all(out),
            Wff::Implies(a, b) => {
                a.collect_all(out);
                b.collect_all(out);
            }
            Wff::ForAll(v, body) => {
                out.insert(*v);
                body.collect_all(out);
            }
        }
    }
}

/// Formula as written by a user: core connectives plus the abbreviations
/// `∃`, `∧`, `∨` and `↔`. Only [`lower`] turns it into a [`Wff`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SurfaceWff {
    Atom(u32, Vec<Term>),
    Not(Box<SurfaceWff>),
    Implies(Box<SurfaceWff>, Box<SurfaceWff>),
    ForAll(VarIndex, Box<SurfaceWff>),
    Exists(VarIndex, Box<SurfaceWff>),
    And(Box<SurfaceWff>, Box<SurfaceWff>),
    Or(Box<SurfaceWff>, Box<SurfaceWff>),
    Iff(Box<SurfaceWff>, Box<SurfaceWff>),
}

impl From<&Wff> for SurfaceWff {
    fn from(w: &Wff) -> Self {
        match w {
            Wff::Atom(p, args) => SurfaceWff::Atom(*p, args.clone()),
            Wff::Not(a) => SurfaceWff::Not(Box::new(a.as_ref().into())),
            Wff::Implies(a, b) => SurfaceWff::Implies(Box::new(a.as_ref().into()), Box::new(b.as_ref().into())),
            Wff::ForAll(v, b) => SurfaceWff::ForAll(*v, Box::new(b.as_ref().into())),
        }
    }
}

/// Expands every abbreviation, innermost first.
pub fn lower(s: &SurfaceWff) -> Wff {
    match s {
        SurfaceWff::Atom(p, args) => Wff::Atom(*p, args.clone()),
        SurfaceWff::Not(a) => Wff::not(lower(a)),
        SurfaceWff::Implies(a, b) => Wff::implies(lower(a), lower(b)),
        SurfaceWff::ForAll(v, b) => Wff::forall(*v, lower(b)),
        SurfaceWff::Exists(v, b) => Wff::exists(*v, lower(b)),
        SurfaceWff::And(a, b) => Wff::and(lower(a), lower(b)),
        SurfaceWff::Or(a, b) => Wff::or(lower(a), lower(b)),
        SurfaceWff::Iff(a, b) => Wff::iff(lower(a), lower(b)),
    }
}

/// Smallest variable index that is not in `used`.
pub fn fresh_var(used: &BTreeSet<VarIndex>) -> VarIndex {
    (1..).find(|i| !used.contains(i)).unwrap()
}
