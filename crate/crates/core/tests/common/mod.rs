#![allow(dead_code)]

use peano_core::syntax::{SurfaceWff, Term, Wff, EQ_PREDICATE};
use proptest::prelude::*;

pub fn term(max_var: u32) -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![(1..=max_var).prop_map(Term::Var), Just(Term::zero()), Just(Term::Const(2)),];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Term::succ),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::add(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::mul(a, b)),
            inner.prop_map(|a| Term::App(3, vec![a])),
        ]
    })
}

pub fn atom(max_var: u32) -> impl Strategy<Value = Wff> {
    prop_oneof![
        4 => (term(max_var), term(max_var)).prop_map(|(a, b)| Wff::equals(a, b)),
        1 => term(max_var).prop_map(|a| Wff::Atom(2, vec![a])),
    ]
}

pub fn wff(max_var: u32) -> impl Strategy<Value = Wff> {
    atom(max_var).prop_recursive(4, 24, 2, move |inner| {
        prop_oneof![
            inner.clone().prop_map(Wff::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Wff::implies(a, b)),
            (1..=max_var, inner).prop_map(|(v, b)| Wff::forall(v, b)),
        ]
    })
}

pub fn surface(max_var: u32) -> impl Strategy<Value = SurfaceWff> {
    let leaf = (term(max_var), term(max_var)).prop_map(|(a, b)| SurfaceWff::Atom(EQ_PREDICATE, vec![a, b]));
    leaf.prop_recursive(4, 24, 2, move |inner| {
        let b = |w| Box::new(w);
        prop_oneof![
            inner.clone().prop_map(move |w| SurfaceWff::Not(b(w))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| SurfaceWff::Implies(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| SurfaceWff::And(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| SurfaceWff::Or(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| SurfaceWff::Iff(b(x), b(y))),
            (1..=max_var, inner.clone()).prop_map(move |(v, w)| SurfaceWff::ForAll(v, b(w))),
            (1..=max_var, inner).prop_map(move |(v, w)| SurfaceWff::Exists(v, b(w))),
        ]
    })
}

/// Plain trial division.
pub fn trial_division(n: u64) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Terms of the arithmetic language: variables, 0, S, + and ·.
pub fn arith_term(max_var: u32) -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![(1..=max_var).prop_map(Term::Var), Just(Term::zero())];
    leaf.prop_recursive(3, 8, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Term::succ),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::add(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Term::mul(a, b)),
        ]
    })
}

/// Core wffs whose only predicate is equality.
pub fn arith_wff(max_var: u32) -> impl Strategy<Value = Wff> {
    let atom = (arith_term(max_var), arith_term(max_var)).prop_map(|(a, b)| Wff::equals(a, b));
    atom.prop_recursive(4, 16, 2, move |inner| {
        prop_oneof![
            inner.clone().prop_map(Wff::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Wff::implies(a, b)),
            ((1..=max_var), inner).prop_map(|(v, a)| Wff::forall(v, a)),
        ]
    })
}
