//! Numerals and formula builders for arithmetic statements.
//!
//! Bound variables are always the smallest indices not already in use by
//! the surrounding context, so the emitted formulas are reproducible.

use alloc::collections::BTreeSet;
use alloc::vec;
use core::fmt;

use crate::syntax::{fresh_var, substitute, Term, VarIndex, Wff, SUCC_LETTER, ZERO_CONST};

/// `S(S(...S(0)...))` with `n` successors.
pub fn numeral(n: u64) -> Term {
    (0..n).fold(Term::zero(), |t, _| Term::succ(t))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotANumeral(pub Term);

impl fmt::Display for NotANumeral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} is not a numeral", self.0)
    }
}

impl core::error::Error for NotANumeral {}

pub fn decode_numeral(t: &Term) -> Result<u64, NotANumeral> {
    let mut n = 0;
    let mut cur = t;
    loop {
        match cur {
            Term::Const(ZERO_CONST) => return Ok(n),
            Term::App(SUCC_LETTER, args) if args.len() == 1 => {
                n += 1;
                cur = &args[0];
            }
            _ => return Err(NotANumeral(t.clone())),
        }
    }
}

fn with(used: &BTreeSet<VarIndex>, extra: VarIndex) -> BTreeSet<VarIndex> {
    let mut out = used.clone();
    out.insert(extra);
    out
}

fn eq(l: Term, r: Term) -> Wff {
    Wff::equals(l, r)
}

/// "`v` is prime", binding only variables outside `used ∪ {v}`.
pub fn prime_wff_avoiding(v: VarIndex, used: &BTreeSet<VarIndex>) -> Wff {
    let used = with(used, v);
    let a = fresh_var(&used);
    let b = fresh_var(&with(&used, a));
    let one = || Term::succ(Term::zero());
    let divisor_is_trivial = Wff::forall(
        a,
        Wff::forall(
            b,
            Wff::implies(
                eq(Term::mul(Term::Var(a), Term::Var(b)), Term::Var(v)),
                Wff::or(eq(Term::Var(a), one()), eq(Term::Var(a), Term::Var(v))),
            ),
        ),
    );
    Wff::and_all(vec![Wff::not(eq(Term::Var(v), Term::zero())), Wff::not(eq(Term::Var(v), one())), divisor_is_trivial])
}

/// `v ≠ 0 ∧ v ≠ 1 ∧ ∀a∀b (a·b = v → a = 1 ∨ a = v)`, with `v` the only free
/// variable.
pub fn prime_wff(v: VarIndex) -> Wff {
    prime_wff_avoiding(v, &BTreeSet::new())
}

/// "`v` is even": `∃b (b + b = v)`.
fn even_wff(v: VarIndex, used: &BTreeSet<VarIndex>) -> Wff {
    let b = fresh_var(&with(used, v));
    Wff::exists(b, eq(Term::add(Term::Var(b), Term::Var(b)), Term::Var(v)))
}

/// "`v ≥ k`": `∃d (d + k = v)`.
fn at_least_wff(v: VarIndex, k: u64, used: &BTreeSet<VarIndex>) -> Wff {
    let d = fresh_var(&with(used, v));
    Wff::exists(d, eq(Term::add(Term::Var(d), numeral(k)), Term::Var(v)))
}

/// Membership in 𝔑, binding only variables outside `used ∪ {v}`.
#[allow(non_snake_case)]
pub fn frakN_wff_avoiding(v: VarIndex, used: &BTreeSet<VarIndex>) -> Wff {
    let ctx = with(used, v);
    let b = fresh_var(&ctx);
    let half_not_prime = Wff::exists(
        b,
        Wff::and(
            eq(Term::add(Term::Var(b), Term::Var(b)), Term::Var(v)),
            Wff::not(prime_wff_avoiding(b, &with(&ctx, b))),
        ),
    );
    let c = fresh_var(&ctx);
    let minus_three_not_prime = Wff::exists(
        c,
        Wff::and(
            eq(Term::add(Term::Var(c), numeral(3)), Term::Var(v)),
            Wff::not(prime_wff_avoiding(c, &with(&ctx, c))),
        ),
    );
    Wff::and_all(vec![even_wff(v, used), at_least_wff(v, 16, used), half_not_prime, minus_three_not_prime])
}

/// `∃b (b+b = v) ∧ ∃d (d+16 = v) ∧ ∃b (b+b = v ∧ ¬prime b) ∧ ∃c (c+3 = v ∧ ¬prime c)`.
#[allow(non_snake_case)]
pub fn frakN_wff(v: VarIndex) -> Wff {
    frakN_wff_avoiding(v, &BTreeSet::new())
}

const ALPHA: VarIndex = 1;
const P: VarIndex = 2;
const Q: VarIndex = 3;

fn sum_of_two_primes(used: &BTreeSet<VarIndex>) -> Wff {
    Wff::exists(
        P,
        Wff::exists(
            Q,
            Wff::and_all(vec![
                prime_wff_avoiding(P, used),
                prime_wff_avoiding(Q, used),
                eq(Term::add(Term::Var(P), Term::Var(Q)), Term::Var(ALPHA)),
            ]),
        ),
    )
}

/// Goldbach's statement restricted to 𝔑:
/// `∀x1 (x1 ∈ 𝔑 → ∃x2 ∃x3 (prime x2 ∧ prime x3 ∧ x2 + x3 = x1))`.
pub fn goldbach_sentence() -> Wff {
    let used: BTreeSet<VarIndex> = [ALPHA, P, Q].into_iter().collect();
    Wff::forall(ALPHA, Wff::implies(frakN_wff_avoiding(ALPHA, &used), sum_of_two_primes(&used)))
}

/// The classical statement: every even number greater than 2 is a sum of
/// two primes.
pub fn classical_goldbach_sentence() -> Wff {
    let used: BTreeSet<VarIndex> = [ALPHA, P, Q].into_iter().collect();
    let hypothesis = Wff::and(even_wff(ALPHA, &used), at_least_wff(ALPHA, 4, &used));
    Wff::forall(ALPHA, Wff::implies(hypothesis, sum_of_two_primes(&used)))
}

/// Strips the outer `∀x` of `w` and puts the numeral for `n` in its place.
/// Returns `None` when `w` is not universally quantified.
pub fn instantiate(w: &Wff, n: u64) -> Option<Wff> {
    match w {
        Wff::ForAll(v, body) => {
            Some(substitute(body, *v, &numeral(n)).expect("closed terms are free for any variable"))
        }
        _ => None,
    }
}
