//! Expression parser for polynomials.
//!
//! Grammar (standard precedence, `^` non-associative):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' INT)?
//! atom   := INT | IDENT | '(' expr ')'
//! ```
//!
//! Division is only allowed by a nonzero constant, which covers rational
//! literals such as `3/2*x1^2`.

use thiserror::Error;

use super::{Polynomial, Rational, VarSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {pos}: expected {expected}, found {found}")]
    Syntax {
        pos: usize,
        expected: String,
        found: String,
    },
    #[error("undeclared variable `{name}` at offset {pos}")]
    UndeclaredVariable { name: String, pos: usize },
    #[error("division by a non-constant or zero expression at offset {pos}")]
    BadDivision { pos: usize },
    #[error("invalid exponent at offset {pos}: {reason}")]
    BadExponent { pos: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(String),
    Ident(String),
    Op(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(s) => format!("number `{s}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Op(c) => format!("`{c}`"),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Int(src[start..i].to_string()), start));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(src[start..i].to_string()), start));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), i));
            i += 1;
        } else {
            return Err(ParseError::Syntax {
                pos: i,
                expected: "number, identifier, operator or parenthesis".into(),
                found: format!("`{c}`"),
            });
        }
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    vars: &'a VarSet,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        ParseError::Syntax {
            pos: self.pos(),
            expected: expected.into(),
            found: self.peek().describe(),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Op('+') => {
                    self.bump();
                    acc = acc + self.term()?;
                }
                Tok::Op('-') => {
                    self.bump();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Op('*') => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Op('/') => {
                    self.bump();
                    let pos = self.pos();
                    let d = self.unary()?;
                    if !d.is_constant() || d.is_zero() {
                        return Err(ParseError::BadDivision { pos });
                    }
                    acc = acc.scale(&d.constant_term().recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        if self.peek() == &Tok::Op('-') {
            self.bump();
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if self.peek() != &Tok::Op('^') {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        let exp = match self.bump() {
            Tok::Int(s) => s.parse::<u32>().map_err(|e| ParseError::BadExponent {
                pos,
                reason: e.to_string(),
            })?,
            other => {
                return Err(ParseError::Syntax {
                    pos,
                    expected: "positive integer exponent".into(),
                    found: other.describe(),
                })
            }
        };
        if exp == 0 {
            return Err(ParseError::BadExponent {
                pos,
                reason: "exponent must be positive".into(),
            });
        }
        if self.peek() == &Tok::Op('^') {
            return Err(self.unexpected("operator other than `^` (exponentiation is non-associative)"));
        }
        Ok(base.pow(exp))
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Int(s) => {
                self.bump();
                let r: Rational = s.parse().map_err(|_| ParseError::Syntax {
                    pos,
                    expected: "integer".into(),
                    found: format!("`{s}`"),
                })?;
                Ok(Polynomial::constant(r))
            }
            Tok::Ident(name) => {
                self.bump();
                match self.vars.index(&name) {
                    Some(v) => Ok(Polynomial::var(v)),
                    None => Err(ParseError::UndeclaredVariable { name, pos }),
                }
            }
            Tok::Op('(') => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != &Tok::Op(')') {
                    return Err(self.unexpected("`)`"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("number, variable or `(`")),
        }
    }
}

/// Parses `expr` over the declared variables into canonical form.
pub fn parse_poly(expr: &str, vars: &VarSet) -> Result<Polynomial, ParseError> {
    let mut p = Parser {
        toks: tokenize(expr)?,
        at: 0,
        vars,
    };
    let out = p.expr()?;
    if p.peek() != &Tok::End {
        return Err(p.unexpected("operator or end of input"));
    }
    Ok(out)
}
