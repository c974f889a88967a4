//! Terms and formulas of the first-order language, their ASCII syntax,
//! and substitution.

mod ast;
mod parser;
mod printer;
mod subst;

pub use ast::{
    fresh_var, lower, SurfaceWff, Term, VarIndex, Wff, ADD_LETTER, EQ_PREDICATE, MUL_LETTER, SUCC_LETTER, ZERO_CONST,
};
pub use parser::{parse_core, parse_term, parse_wff, ParseError, ParseErrorKind};
pub use printer::print_wff;
pub use subst::{is_free_for, match_substitution_result, substitute, CaptureError, MatchResult};
