//! Recursive-descent parser for the ASCII formula grammar.
//!
//! ```text
//! wff  := atom | "~" wff | "(" wff ")" | "(" wff bin wff ")" | "(" q var wff ")"
//! bin  := "->" | "&" | "|" | "<->"        q := "all" | "ex"
//! atom := term "=" term | "A{" k "," n "}(" termlist ")"
//! term := var | const | "0" | "S(" term ")" | "(" term "+" term ")"
//!       | "(" term "*" term ")" | "f{" k "," n "}(" termlist ")"
//! ```
//!
//! A parenthesis opening a wff may also open a term (`((x1 + 0) = x1)`),
//! so an atom is tried first and the parser backtracks to a parenthesized
//! wff when that fails. Errors report the furthest byte offset reached.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

use super::ast::{
    lower, SurfaceWff, Term, VarIndex, Wff, ADD_LETTER, EQ_PREDICATE, MUL_LETTER, SUCC_LETTER, ZERO_CONST,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    Expected(&'static str),
    UnexpectedEnd,
    /// `A{k,n}` or `f{k,n}` applied to the wrong number of terms.
    ArityMismatch {
        declared: u32,
        found: usize,
    },
    /// Variables, constants and letters are numbered from 1; arities too.
    ZeroIndex,
    NumberTooLarge,
    TrailingInput,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at byte {}: ", self.pos)?;
        match &self.kind {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            ParseErrorKind::Expected(what) => write!(f, "expected {what}"),
            ParseErrorKind::UnexpectedEnd => write!(f, "unexpected end of input"),
            ParseErrorKind::ArityMismatch { declared, found } => {
                write!(f, "letter declared with arity {declared} applied to {found} terms")
            }
            ParseErrorKind::ZeroIndex => write!(f, "indices and arities start at 1"),
            ParseErrorKind::NumberTooLarge => write!(f, "number too large"),
            ParseErrorKind::TrailingInput => write!(f, "unexpected input after formula"),
        }
    }
}

impl core::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Tilde,
    Arrow,
    DoubleArrow,
    Amp,
    Bar,
    Eq,
    Plus,
    Star,
    All,
    Ex,
    Succ,
    PredLetter,
    FuncLetter,
    Var(VarIndex),
    Const(u32),
    Num(u32),
}

struct Token {
    tok: Tok,
    pos: usize,
}

fn parse_index(digits: &str, pos: usize) -> Result<u32, ParseError> {
    digits.parse::<u32>().map_err(|_| ParseError { pos, kind: ParseErrorKind::NumberTooLarge })
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let single = match c {
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b'{' => Some(Tok::LBrace),
            b'}' => Some(Tok::RBrace),
            b',' => Some(Tok::Comma),
            b'~' => Some(Tok::Tilde),
            b'&' => Some(Tok::Amp),
            b'|' => Some(Tok::Bar),
            b'=' => Some(Tok::Eq),
            b'+' => Some(Tok::Plus),
            b'*' => Some(Tok::Star),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Token { tok, pos: start });
            i += 1;
            continue;
        }
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if text[i..].starts_with("->") {
            out.push(Token { tok: Tok::Arrow, pos: start });
            i += 2;
            continue;
        }
        if text[i..].starts_with("<->") {
            out.push(Token { tok: Tok::DoubleArrow, pos: start });
            i += 3;
            continue;
        }
        if c.is_ascii_alphanumeric() {
            while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                i += 1;
            }
            let word = &text[start..i];
            let tok = match word {
                "all" => Tok::All,
                "ex" => Tok::Ex,
                "S" => Tok::Succ,
                "A" => Tok::PredLetter,
                "f" => Tok::FuncLetter,
                _ => {
                    let (head, rest) = word.split_at(1);
                    let numeric = !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit());
                    match head {
                        "x" if numeric => Tok::Var(nonzero(parse_index(rest, start)?, start)?),
                        "a" if numeric => Tok::Const(nonzero(parse_index(rest, start)?, start)?),
                        _ if word.bytes().all(|b| b.is_ascii_digit()) => Tok::Num(parse_index(word, start)?),
                        _ => return Err(ParseError { pos: start, kind: ParseErrorKind::UnexpectedChar(c as char) }),
                    }
                }
            };
            out.push(Token { tok, pos: start });
            continue;
        }
        let ch = text[i..].chars().next().unwrap();
        return Err(ParseError { pos: start, kind: ParseErrorKind::UnexpectedChar(ch) });
    }
    Ok(out)
}

fn nonzero(n: u32, pos: usize) -> Result<u32, ParseError> {
    if n == 0 {
        Err(ParseError { pos, kind: ParseErrorKind::ZeroIndex })
    } else {
        Ok(n)
    }
}

struct Parser<'a> {
    toks: &'a [Token],
    end: usize,
    at: usize,
    furthest: Option<ParseError>,
}

type PResult<T> = Result<T, ParseError>;

impl Parser<'_> {
    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.pos)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.tok)
    }

    fn fail<T>(&mut self, kind: ParseErrorKind) -> PResult<T> {
        let kind = if self.at >= self.toks.len() && !matches!(kind, ParseErrorKind::ArityMismatch { .. }) {
            ParseErrorKind::UnexpectedEnd
        } else {
            kind
        };
        let err = ParseError { pos: self.pos(), kind };
        match &self.furthest {
            Some(f) if f.pos > err.pos => {}
            _ => self.furthest = Some(err.clone()),
        }
        Err(err)
    }

    fn expect(&mut self, tok: Tok, what: &'static str) -> PResult<()> {
        if self.peek() == Some(&tok) {
            self.at += 1;
            Ok(())
        } else {
            self.fail(ParseErrorKind::Expected(what))
        }
    }

    fn wff(&mut self) -> PResult<SurfaceWff> {
        match self.peek() {
            Some(Tok::Tilde) => {
                self.at += 1;
                Ok(SurfaceWff::Not(Box::new(self.wff()?)))
            }
            Some(Tok::LParen) => {
                if matches!(self.toks.get(self.at + 1).map(|t| &t.tok), Some(Tok::All | Tok::Ex)) {
                    return self.quantified();
                }
                let save = self.at;
                if let Ok(atom) = self.atom() {
                    return Ok(atom);
                }
                self.at = save + 1;
                let left = self.wff()?;
                let ctor: fn(Box<SurfaceWff>, Box<SurfaceWff>) -> SurfaceWff = match self.peek() {
                    Some(Tok::RParen) => {
                        self.at += 1;
                        return Ok(left);
                    }
                    Some(Tok::Arrow) => SurfaceWff::Implies,
                    Some(Tok::Amp) => SurfaceWff::And,
                    Some(Tok::Bar) => SurfaceWff::Or,
                    Some(Tok::DoubleArrow) => SurfaceWff::Iff,
                    _ => return self.fail(ParseErrorKind::Expected("connective or ')'")),
                };
                self.at += 1;
                let right = self.wff()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(ctor(Box::new(left), Box::new(right)))
            }
            _ => self.atom(),
        }
    }

    fn quantified(&mut self) -> PResult<SurfaceWff> {
        self.at += 1;
        let universal = matches!(self.peek(), Some(Tok::All));
        self.at += 1;
        let v = match self.peek() {
            Some(Tok::Var(v)) => *v,
            _ => return self.fail(ParseErrorKind::Expected("variable")),
        };
        self.at += 1;
        let body = Box::new(self.wff()?);
        self.expect(Tok::RParen, "')'")?;
        Ok(if universal { SurfaceWff::ForAll(v, body) } else { SurfaceWff::Exists(v, body) })
    }

    fn atom(&mut self) -> PResult<SurfaceWff> {
        if self.peek() == Some(&Tok::PredLetter) {
            self.at += 1;
            let (k, args) = self.letter_application()?;
            return Ok(SurfaceWff::Atom(k, args));
        }
        let l = self.term()?;
        self.expect(Tok::Eq, "'='")?;
        let r = self.term()?;
        Ok(SurfaceWff::Atom(EQ_PREDICATE, alloc::vec![l, r]))
    }

    /// Parses `{k,n}(t1, ..., tn)` after the letter `A` or `f`.
    fn letter_application(&mut self) -> PResult<(u32, Vec<Term>)> {
        self.expect(Tok::LBrace, "'{'")?;
        let k = self.index()?;
        self.expect(Tok::Comma, "','")?;
        let n = self.index()?;
        self.expect(Tok::RBrace, "'}'")?;
        self.expect(Tok::LParen, "'('")?;
        let mut args = alloc::vec![self.term()?];
        while self.peek() == Some(&Tok::Comma) {
            self.at += 1;
            args.push(self.term()?);
        }
        self.expect(Tok::RParen, "')'")?;
        if args.len() != n as usize {
            return self.fail(ParseErrorKind::ArityMismatch { declared: n, found: args.len() });
        }
        Ok((k, args))
    }

    fn index(&mut self) -> PResult<u32> {
        match self.peek() {
            Some(Tok::Num(0)) => self.fail(ParseErrorKind::ZeroIndex),
            Some(Tok::Num(n)) => {
                let n = *n;
                self.at += 1;
                Ok(n)
            }
            _ => self.fail(ParseErrorKind::Expected("index")),
        }
    }

    fn term(&mut self) -> PResult<Term> {
        match self.peek().cloned() {
            Some(Tok::Var(v)) => {
                self.at += 1;
                Ok(Term::Var(v))
            }
            Some(Tok::Const(k)) => {
                self.at += 1;
                Ok(Term::Const(k))
            }
            Some(Tok::Num(0)) => {
                self.at += 1;
                Ok(Term::Const(ZERO_CONST))
            }
            Some(Tok::Succ) => {
                self.at += 1;
                self.expect(Tok::LParen, "'('")?;
                let t = self.term()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(Term::App(SUCC_LETTER, alloc::vec![t]))
            }
            Some(Tok::FuncLetter) => {
                self.at += 1;
                let (k, args) = self.letter_application()?;
                Ok(Term::App(k, args))
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let l = self.term()?;
                let letter = match self.peek() {
                    Some(Tok::Plus) => ADD_LETTER,
                    Some(Tok::Star) => MUL_LETTER,
                    _ => return self.fail(ParseErrorKind::Expected("'+' or '*'")),
                };
                self.at += 1;
                let r = self.term()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(Term::App(letter, alloc::vec![l, r]))
            }
            _ => self.fail(ParseErrorKind::Expected("term")),
        }
    }
}

/// Parses a formula, keeping abbreviations as written.
pub fn parse_wff(text: &str) -> Result<SurfaceWff, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks: &toks, end: text.len(), at: 0, furthest: None };
    match p.wff() {
        Ok(w) if p.at == toks.len() => Ok(w),
        Ok(_) => Err(ParseError { pos: p.pos(), kind: ParseErrorKind::TrailingInput }),
        Err(e) => Err(p.furthest.filter(|f| f.pos >= e.pos).unwrap_or(e)),
    }
}

/// Parses and lowers to core form.
pub fn parse_core(text: &str) -> Result<Wff, ParseError> {
    parse_wff(text).map(|s| lower(&s))
}

/// Parses a single term.
pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks: &toks, end: text.len(), at: 0, furthest: None };
    match p.term() {
        Ok(t) if p.at == toks.len() => Ok(t),
        Ok(_) => Err(ParseError { pos: p.pos(), kind: ParseErrorKind::TrailingInput }),
        Err(e) => Err(p.furthest.filter(|f| f.pos >= e.pos).unwrap_or(e)),
    }
}

impl core::str::FromStr for Wff {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_core(s)
    }
}
