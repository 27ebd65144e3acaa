//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary ('*' unary)*
//! unary := '-' unary | power
//! power := atom ('^' exponent)?
//! atom  := integer | integer '/' integer | ident | '(' expr ')'
//! ```
//!
//! `*` is mandatory between factors and `^` does not chain.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::polyring::{Coeff, Monomial, Polynomial};

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 1 << 16;

/// Ordered, distinct variable names. The position of a name is its index in
/// exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarTable {
    names: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VarTableError {
    #[error("variable list is empty")]
    Empty,
    #[error("invalid variable name {0:?}")]
    InvalidName(String),
    #[error("duplicate variable name {0:?}")]
    Duplicate(String),
}

impl VarTable {
    pub fn new<I, S>(names: I) -> Result<Self, VarTableError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(VarTableError::Empty);
        }
        for (i, name) in names.iter().enumerate() {
            let mut chars = name.chars();
            let valid = chars.next().is_some_and(|c| c.is_ascii_alphabetic())
                && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(VarTableError::InvalidName(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(VarTableError::Duplicate(name.clone()));
            }
        }
        Ok(VarTable { names })
    }

    /// Parses a comma-separated list such as `x,y,z`.
    pub fn from_csv(list: &str) -> Result<Self, VarTableError> {
        Self::new(list.split(',').map(str::trim).filter(|s| !s.is_empty()))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn render(&self, p: &Polynomial) -> String {
        p.display_with(&self.names).to_string()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    EmptyInput,
    UnknownIdentifier(String),
    MalformedExponent(String),
    ExponentOverflow,
    UnbalancedParenthesis,
    ChainedExponent,
    DivisionByZero,
    UnexpectedChar(char),
    UnexpectedToken(String),
    UnexpectedEnd,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EmptyInput => write!(f, "empty input"),
            Self::UnknownIdentifier(name) => write!(f, "unknown identifier {name:?}"),
            Self::MalformedExponent(what) => {
                write!(
                    f,
                    "malformed exponent {what:?}: expected a nonnegative integer"
                )
            }
            Self::ExponentOverflow => write!(f, "exponent exceeds {MAX_EXPONENT}"),
            Self::UnbalancedParenthesis => write!(f, "unbalanced parenthesis"),
            Self::ChainedExponent => {
                write!(f, "'^' does not chain; add parentheses")
            }
            Self::DivisionByZero => write!(f, "zero denominator in rational literal"),
            Self::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            Self::UnexpectedToken(t) => {
                write!(f, "unexpected {t}; '*' is required between factors")
            }
            Self::UnexpectedEnd => write!(f, "unexpected end of input"),
        }
    }
}

/// A parse failure at a byte offset into the source.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at position {position}: {kind}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(n) => format!("number {n}"),
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = src[start..i].parse().expect("digits");
            out.push((Tok::Num(n), start));
            continue;
        }
        if c.is_ascii_alphabetic() {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(src[start..i].to_string()), start));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => {
                let ch = src[start..].chars().next().unwrap_or(c);
                return Err(ParseError {
                    kind: ParseErrorKind::UnexpectedChar(ch),
                    position: start,
                });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    vars: &'a VarTable,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(_, o)| *o).unwrap_or(self.end)
    }

    fn err<T>(&self, kind: ParseErrorKind) -> Result<T, ParseError> {
        Err(ParseError {
            kind,
            position: self.offset(),
        })
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.bump();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        if let Some(Tok::Minus) = self.peek() {
            self.bump();
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let e = self.exponent()?;
            if let Some(Tok::Caret) = self.peek() {
                return self.err(ParseErrorKind::ChainedExponent);
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        let at = self.offset();
        match self.bump() {
            Some(Tok::Num(n)) => {
                if let Some(Tok::Slash) = self.peek() {
                    return Err(ParseError {
                        kind: ParseErrorKind::MalformedExponent(format!("{n}/...")),
                        position: at,
                    });
                }
                match n.to_u32() {
                    Some(e) if e <= MAX_EXPONENT => Ok(e),
                    _ => Err(ParseError {
                        kind: ParseErrorKind::ExponentOverflow,
                        position: at,
                    }),
                }
            }
            Some(Tok::Minus) => Err(ParseError {
                kind: ParseErrorKind::MalformedExponent("negative".into()),
                position: at,
            }),
            Some(t) => Err(ParseError {
                kind: ParseErrorKind::MalformedExponent(t.describe()),
                position: at,
            }),
            None => Err(ParseError {
                kind: ParseErrorKind::UnexpectedEnd,
                position: at,
            }),
        }
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let n = self.vars.len();
        let at = self.offset();
        match self.bump() {
            Some(Tok::Num(num)) => {
                if let Some(Tok::Slash) = self.peek() {
                    self.bump();
                    let den_at = self.offset();
                    match self.bump() {
                        Some(Tok::Num(den)) if den.is_zero() => Err(ParseError {
                            kind: ParseErrorKind::DivisionByZero,
                            position: den_at,
                        }),
                        Some(Tok::Num(den)) => Ok(Polynomial::constant(n, Coeff::new(num, den))),
                        Some(t) => Err(ParseError {
                            kind: ParseErrorKind::UnexpectedToken(t.describe()),
                            position: den_at,
                        }),
                        None => Err(ParseError {
                            kind: ParseErrorKind::UnexpectedEnd,
                            position: den_at,
                        }),
                    }
                } else {
                    Ok(Polynomial::constant(n, Coeff::from_integer(num)))
                }
            }
            Some(Tok::Ident(name)) => match self.vars.index_of(&name) {
                Some(i) => Ok(Polynomial::monomial(
                    Monomial::var(n, i),
                    Coeff::from_integer(1.into()),
                )),
                None => Err(ParseError {
                    kind: ParseErrorKind::UnknownIdentifier(name),
                    position: at,
                }),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.bump();
                        Ok(inner)
                    }
                    _ => Err(ParseError {
                        kind: ParseErrorKind::UnbalancedParenthesis,
                        position: at,
                    }),
                }
            }
            Some(Tok::RParen) => Err(ParseError {
                kind: ParseErrorKind::UnbalancedParenthesis,
                position: at,
            }),
            Some(t) => Err(ParseError {
                kind: ParseErrorKind::UnexpectedToken(t.describe()),
                position: at,
            }),
            None => Err(ParseError {
                kind: ParseErrorKind::UnexpectedEnd,
                position: at,
            }),
        }
    }
}

/// Parses `src` into a polynomial in the variables of `vars`.
pub fn parse(src: &str, vars: &VarTable) -> Result<Polynomial, ParseError> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(ParseError {
            kind: ParseErrorKind::EmptyInput,
            position: 0,
        });
    }
    let mut parser = Parser {
        toks,
        pos: 0,
        end: src.len(),
        vars,
    };
    let poly = parser.expr()?;
    match parser.peek() {
        None => Ok(poly),
        Some(Tok::RParen) => parser.err(ParseErrorKind::UnbalancedParenthesis),
        Some(t) => {
            let kind = ParseErrorKind::UnexpectedToken(t.describe());
            parser.err(kind)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::int;
    use proptest::prelude::*;

    fn xyz() -> VarTable {
        VarTable::new(["x", "y", "z"]).unwrap()
    }

    fn p(nvars: usize, terms: &[(i64, &[u32])]) -> Polynomial {
        Polynomial::from_int_terms(nvars, terms)
    }

    #[test]
    fn parses_example_surface_and_function() {
        let v = xyz();
        assert_eq!(
            parse("x^2 - y^2", &v).unwrap(),
            p(3, &[(1, &[2, 0, 0]), (-1, &[0, 2, 0])])
        );
        assert_eq!(
            parse("x + 2*y + z^2", &v).unwrap(),
            p(3, &[(1, &[1, 0, 0]), (2, &[0, 1, 0]), (1, &[0, 0, 2])])
        );
        assert!(parse("-(x - x)", &v).unwrap().is_zero());
    }

    #[test]
    fn precedence() {
        let v = xyz();
        assert_eq!(parse("-x^2", &v).unwrap(), p(3, &[(-1, &[2, 0, 0])]));
        assert_eq!(parse("2*-x", &v).unwrap(), p(3, &[(-2, &[1, 0, 0])]));
        assert_eq!(
            parse("(x+y)^2 - x*y", &v).unwrap(),
            p(3, &[(1, &[2, 0, 0]), (1, &[1, 1, 0]), (1, &[0, 2, 0])])
        );
        assert_eq!(
            parse("1 - 2 - 3", &v).unwrap(),
            Polynomial::constant(3, int(-4))
        );
        assert_eq!(
            parse("3/4*x", &v).unwrap(),
            Polynomial::monomial(Monomial::var(3, 0), Coeff::new(3.into(), 4.into()))
        );
        assert_eq!(parse("2^3", &v).unwrap(), Polynomial::constant(3, int(8)));
    }

    #[test]
    fn errors_carry_positions() {
        let v = xyz();
        let e = parse("x + w", &v).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownIdentifier("w".into()));
        assert_eq!(e.position, 4);

        let e = parse("x^-1", &v).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::MalformedExponent(_)));
        assert_eq!(e.position, 2);

        let e = parse("x^y", &v).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::MalformedExponent(_)));

        let e = parse("x^1/2", &v).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::MalformedExponent(_)));

        let e = parse("(x + y", &v).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnbalancedParenthesis);
        assert_eq!(e.position, 0);

        let e = parse("x + y)", &v).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnbalancedParenthesis);
        assert_eq!(e.position, 5);

        assert_eq!(
            parse("   ", &v).unwrap_err().kind,
            ParseErrorKind::EmptyInput
        );
        assert_eq!(parse("", &v).unwrap_err().kind, ParseErrorKind::EmptyInput);

        assert!(matches!(
            parse("2x", &v).unwrap_err().kind,
            ParseErrorKind::UnexpectedToken(_)
        ));
        assert_eq!(
            parse("x^2^3", &v).unwrap_err().kind,
            ParseErrorKind::ChainedExponent
        );
        assert_eq!(
            parse("x^70000", &v).unwrap_err().kind,
            ParseErrorKind::ExponentOverflow
        );
        assert_eq!(
            parse("1/0", &v).unwrap_err().kind,
            ParseErrorKind::DivisionByZero
        );
        assert_eq!(
            parse("x $ y", &v).unwrap_err().kind,
            ParseErrorKind::UnexpectedChar('$')
        );
        assert_eq!(
            parse("x +", &v).unwrap_err().kind,
            ParseErrorKind::UnexpectedEnd
        );
    }

    #[test]
    fn var_table_validation() {
        assert_eq!(
            VarTable::new(Vec::<String>::new()),
            Err(VarTableError::Empty)
        );
        assert!(matches!(
            VarTable::new(["x", "1y"]),
            Err(VarTableError::InvalidName(_))
        ));
        assert!(matches!(
            VarTable::new(["x", "x"]),
            Err(VarTableError::Duplicate(_))
        ));
        assert_eq!(VarTable::from_csv("x, y,z").unwrap().names(), xyz().names());
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((prop::collection::vec(0u32..=2, 3), -99i64..=99), 0..8).prop_map(
            |ts| Polynomial::from_terms(3, ts.into_iter().map(|(e, c)| (Monomial::new(e), int(c)))),
        )
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(f in arb_poly()) {
            let v = xyz();
            let printed = v.render(&f);
            prop_assert_eq!(parse(&printed, &v).unwrap(), f);
        }
    }
}
