//! Shared text grammar for scalars and generator expressions.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := unary (('*' | '/') unary | unary)*      juxtaposition multiplies
//! unary    := ('-' | '+') unary | power
//! power    := atom ('^' exponent)?
//! exponent := sign? INT | '(' sign? INT ')'
//! atom     := INT | 'q' | generator | '(' expr ')'
//! generator:= 'L[' a ',' b ']' | 'p[' a ']' | 'SL[' a ',' b ']' | 'Sp[' a ']'
//! ```
//!
//! Generator indices are 1-based in the text. Positions in errors are byte
//! offsets into the input.

use num_bigint::BigInt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    L,
    P,
    SL,
    SP,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(BigInt),
    Q,
    Gen {
        kind: GenKind,
        /// 1-based as written.
        indices: Vec<usize>,
        pos: usize,
    },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Pow(Box<Expr>, i64, usize),
}

/// Values an [`Expr`] can be evaluated into.
pub trait ExprValue: Sized {
    fn int(n: BigInt) -> Self;
    fn q(pos: usize) -> Result<Self>;
    fn gen(kind: GenKind, indices: &[usize], pos: usize) -> Result<Self>;
    fn add(self, other: Self) -> Self;
    fn sub(self, other: Self) -> Self;
    fn mul(self, other: Self) -> Self;
    fn neg(self) -> Self;
    fn div(self, other: Self, pos: usize) -> Result<Self>;
    fn pow(self, exp: i64, pos: usize) -> Result<Self>;
}

impl Expr {
    pub fn eval<V: ExprValue>(&self) -> Result<V> {
        Ok(match self {
            Expr::Int(n) => V::int(n.clone()),
            Expr::Q => V::q(0)?,
            Expr::Gen { kind, indices, pos } => V::gen(*kind, indices, *pos)?,
            Expr::Neg(a) => a.eval::<V>()?.neg(),
            Expr::Add(a, b) => a.eval::<V>()?.add(b.eval::<V>()?),
            Expr::Sub(a, b) => a.eval::<V>()?.sub(b.eval::<V>()?),
            Expr::Mul(a, b) => a.eval::<V>()?.mul(b.eval::<V>()?),
            Expr::Div(a, b, pos) => a.eval::<V>()?.div(b.eval::<V>()?, *pos)?,
            Expr::Pow(a, e, pos) => a.eval::<V>()?.pow(*e, *pos)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Q,
    Gen(GenKind, Vec<usize>),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((Tok::Int(n), start));
                continue;
            }
            b'+' => out.push((Tok::Plus, start)),
            b'-' => out.push((Tok::Minus, start)),
            b'*' => out.push((Tok::Star, start)),
            b'/' => out.push((Tok::Slash, start)),
            b'^' => out.push((Tok::Caret, start)),
            b'(' => out.push((Tok::LParen, start)),
            b')' => out.push((Tok::RParen, start)),
            b'a'..=b'z' | b'A'..=b'Z' => {
                while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                    i += 1;
                }
                let word = &text[start..i];
                let kind = match word {
                    "q" => {
                        out.push((Tok::Q, start));
                        continue;
                    }
                    "L" => GenKind::L,
                    "p" => GenKind::P,
                    "SL" => GenKind::SL,
                    "Sp" => GenKind::SP,
                    _ => {
                        return Err(Error::Parse {
                            pos: start,
                            msg: format!("unknown symbol '{word}'"),
                        })
                    }
                };
                let (indices, next) = lex_indices(text, i)?;
                let arity = match kind {
                    GenKind::L | GenKind::SL => 2,
                    GenKind::P | GenKind::SP => 1,
                };
                if indices.len() != arity {
                    return Err(Error::Parse {
                        pos: start,
                        msg: format!("'{word}' takes {arity} index(es), got {}", indices.len()),
                    });
                }
                out.push((Tok::Gen(kind, indices), start));
                i = next;
                continue;
            }
            _ => {
                return Err(Error::Parse {
                    pos: start,
                    msg: format!("unexpected character '{}'", text[start..].chars().next().unwrap()),
                })
            }
        }
        i += 1;
    }
    Ok(out)
}

fn lex_indices(text: &str, mut i: usize) -> Result<(Vec<usize>, usize)> {
    let bytes = text.as_bytes();
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    skip_ws(&mut i);
    if i >= bytes.len() || bytes[i] != b'[' {
        return Err(Error::Parse {
            pos: i,
            msg: "expected '[' after generator name".into(),
        });
    }
    i += 1;
    let mut indices = Vec::new();
    loop {
        skip_ws(&mut i);
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        if start == i {
            return Err(Error::Parse {
                pos: i,
                msg: "expected an index".into(),
            });
        }
        let idx: usize = text[start..i].parse().map_err(|_| Error::Parse {
            pos: start,
            msg: "index too large".into(),
        })?;
        if idx == 0 {
            return Err(Error::Parse {
                pos: start,
                msg: "generator indices are 1-based".into(),
            });
        }
        indices.push(idx);
        skip_ws(&mut i);
        match bytes.get(i) {
            Some(b',') => i += 1,
            Some(b']') => return Ok((indices, i + 1)),
            _ => {
                return Err(Error::Parse {
                    pos: i,
                    msg: "expected ',' or ']'".into(),
                })
            }
        }
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(t, _)| t.clone());
        self.at += 1;
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Tok::Slash) => {
                    let pos = self.pos();
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), pos);
                }
                Some(Tok::Int(_) | Tok::Q | Tok::Gen(..) | Tok::LParen) => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            let pos = self.pos();
            self.bump();
            let exp = self.exponent()?;
            if self.peek() == Some(&Tok::Caret) {
                return self.err("chained exponents need parentheses");
            }
            return Ok(Expr::Pow(Box::new(base), exp, pos));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64> {
        let paren = self.peek() == Some(&Tok::LParen);
        if paren {
            self.bump();
        }
        let neg = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                true
            }
            Some(Tok::Plus) => {
                self.bump();
                false
            }
            _ => false,
        };
        let pos = self.pos();
        let n = match self.bump() {
            Some(Tok::Int(n)) => i64::try_from(&n).map_err(|_| Error::Parse {
                pos,
                msg: "exponent out of range".into(),
            })?,
            _ => {
                self.at -= 1;
                return self.err("expected an integer exponent");
            }
        };
        if paren && self.bump() != Some(Tok::RParen) {
            self.at -= 1;
            return self.err("expected ')'");
        }
        Ok(if neg { -n } else { n })
    }

    fn atom(&mut self) -> Result<Expr> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(Expr::Int(n)),
            Some(Tok::Q) => Ok(Expr::Q),
            Some(Tok::Gen(kind, indices)) => Ok(Expr::Gen { kind, indices, pos }),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                if self.bump() != Some(Tok::RParen) {
                    self.at -= 1;
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(_) => {
                self.at -= 1;
                self.err("expected a number, 'q', a generator or '('")
            }
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
    };
    if p.peek().is_none() {
        return p.err("empty expression");
    }
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_of_unary_minus_and_power() {
        let e = parse("-q^2").unwrap();
        assert!(matches!(e, Expr::Neg(_)));
        let e = parse("q^-1").unwrap();
        assert!(matches!(e, Expr::Pow(_, -1, _)));
        let e = parse("q^(-2)").unwrap();
        assert!(matches!(e, Expr::Pow(_, -2, _)));
    }

    #[test]
    fn generators_and_juxtaposition() {
        let e = parse("p[2]*L[1,2] - q^-1 L[1,2] p[2]").unwrap();
        assert!(matches!(e, Expr::Sub(..)));
    }

    #[test]
    fn errors_carry_positions() {
        match parse("q + ") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        match parse("q $ 1") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("{other:?}"),
        }
        assert!(parse("L[1]").is_err());
        assert!(parse("p[0]").is_err());
        assert!(parse("(q").is_err());
        assert!(parse("q^q").is_err());
    }
}
