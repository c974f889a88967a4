use alloc::string::String;
use core::fmt::{self, Write};

use super::ast::{Term, VarIndex, Wff, ADD_LETTER, EQ_PREDICATE, MUL_LETTER, SUCC_LETTER, ZERO_CONST};

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(i) => write!(f, "x{i}"),
            Term::Const(ZERO_CONST) => f.write_str("0"),
            Term::Const(k) => write!(f, "a{k}"),
            Term::App(SUCC_LETTER, args) if args.len() == 1 => write!(f, "S({})", args[0]),
            Term::App(ADD_LETTER, args) if args.len() == 2 => write!(f, "({} + {})", args[0], args[1]),
            Term::App(MUL_LETTER, args) if args.len() == 2 => write!(f, "({} * {})", args[0], args[1]),
            Term::App(k, args) => {
                write!(f, "f{{{},{}}}(", k, args.len())?;
                write_list(f, args)?;
                f.write_str(")")
            }
        }
    }
}

fn write_list(f: &mut impl Write, args: &[Term]) -> fmt::Result {
    for (i, a) in args.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{a}")?;
    }
    Ok(())
}

/// Canonical core syntax.
impl fmt::Display for Wff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_wff(f, self, false)
    }
}

/// Prints a core formula. With `resugar` the abbreviation patterns are
/// shown as `ex`, `&`, `|` and `<->`; the text lowers back to `w` either way.
pub fn print_wff(w: &Wff, resugar: bool) -> String {
    let mut out = String::new();
    write_wff(&mut out, w, resugar).expect("writing to a String");
    out
}

enum Sugar<'a> {
    Exists(VarIndex, &'a Wff),
    And(&'a Wff, &'a Wff),
    Or(&'a Wff, &'a Wff),
    Iff(&'a Wff, &'a Wff),
}

fn as_and(w: &Wff) -> Option<(&Wff, &Wff)> {
    match w {
        Wff::Not(inner) => match inner.as_ref() {
            Wff::Implies(a, nb) => match nb.as_ref() {
                Wff::Not(b) => Some((a, b)),
                _ => None,
            },
            _ => None,
        },
        _ => None,
    }
}

fn sugar(w: &Wff) -> Option<Sugar<'_>> {
    if let Some((l, r)) = as_and(w) {
        if let (Wff::Implies(a, b), Wff::Implies(b2, a2)) = (l, r) {
            if a == a2 && b == b2 {
                return Some(Sugar::Iff(a, b));
            }
        }
        return Some(Sugar::And(l, r));
    }
    match w {
        Wff::Not(inner) => match inner.as_ref() {
            Wff::ForAll(v, body) => match body.as_ref() {
                Wff::Not(b) => Some(Sugar::Exists(*v, b)),
                _ => None,
            },
            _ => None,
        },
        Wff::Implies(na, b) => match na.as_ref() {
            Wff::Not(a) => Some(Sugar::Or(a, b)),
            _ => None,
        },
        _ => None,
    }
}

fn write_wff(f: &mut impl Write, w: &Wff, resugar: bool) -> fmt::Result {
    if resugar {
        if let Some(s) = sugar(w) {
            let (op, l, r) = match s {
                Sugar::Exists(v, body) => {
                    write!(f, "(ex x{v} ")?;
                    write_wff(f, body, resugar)?;
                    return f.write_str(")");
                }
                Sugar::And(l, r) => (" & ", l, r),
                Sugar::Or(l, r) => (" | ", l, r),
                Sugar::Iff(l, r) => (" <-> ", l, r),
            };
            f.write_str("(")?;
            write_wff(f, l, resugar)?;
            f.write_str(op)?;
            write_wff(f, r, resugar)?;
            return f.write_str(")");
        }
    }
    match w {
        Wff::Atom(EQ_PREDICATE, args) if args.len() == 2 => write!(f, "({} = {})", args[0], args[1]),
        Wff::Atom(k, args) => {
            write!(f, "A{{{},{}}}(", k, args.len())?;
            write_list(f, args)?;
            f.write_str(")")
        }
        Wff::Not(a) => {
            f.write_str("~")?;
            write_wff(f, a, resugar)
        }
        Wff::Implies(a, b) => {
            f.write_str("(")?;
            write_wff(f, a, resugar)?;
            f.write_str(" -> ")?;
            write_wff(f, b, resugar)?;
            f.write_str(")")
        }
        Wff::ForAll(v, body) => {
            write!(f, "(all x{v} ")?;
            write_wff(f, body, resugar)?;
            f.write_str(")")
        }
    }
}
