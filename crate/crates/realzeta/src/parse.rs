//! Polynomial expressions in x and y over Q.
//!
//! Grammar: integers, rational literals `p/q`, the variables `x` and `y`,
//! `+ - * ^` with nonnegative integer exponents, and parentheses. Implicit
//! multiplication is rejected. Unary minus binds looser than `^`.

use crate::arith::{BiPoly, Q};
use crate::Error;
use num_bigint::BigInt;
use num_traits::Zero;

const MAX_EXPONENT: u32 = 4096;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(char),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse { offset, message: message.into() }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, Error> {
    let b = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Num(text[start..i].parse().unwrap()), start));
            continue;
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            let start = i;
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            let id = &text[start..i];
            match id {
                "x" => out.push((Tok::Var('x'), start)),
                "y" => out.push((Tok::Var('y'), start)),
                _ => return Err(err(start, format!("unknown identifier '{}'", id))),
            }
            continue;
        }
        let t = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'/' => Tok::Slash,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                let ch = text[i..].chars().next().unwrap();
                return Err(err(i, format!("unexpected character '{}'", ch)));
            }
        };
        out.push((t, i));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<BiPoly<Q>, Error> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BiPoly<Q>, Error> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<BiPoly<Q>, Error> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(self.unary()?.neg())
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<BiPoly<Q>, Error> {
        let base = self.primary()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        match self.bump() {
            Tok::Num(n) => {
                let e: u32 = u32::try_from(&n)
                    .ok()
                    .filter(|e| *e <= MAX_EXPONENT)
                    .ok_or_else(|| err(at, format!("exponent too large (max {})", MAX_EXPONENT)))?;
                if *self.peek() == Tok::Caret {
                    return Err(err(self.offset(), "chained exponents need parentheses"));
                }
                Ok(base.pow(e))
            }
            _ => Err(err(at, "expected a nonnegative integer exponent")),
        }
    }

    fn primary(&mut self) -> Result<BiPoly<Q>, Error> {
        let at = self.offset();
        match self.bump() {
            Tok::Num(n) => {
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let dat = self.offset();
                    match self.bump() {
                        Tok::Num(d) if !d.is_zero() => Ok(BiPoly::constant(Q::new(n, d))),
                        Tok::Num(_) => Err(err(dat, "zero denominator")),
                        _ => Err(err(dat, "expected an integer denominator")),
                    }
                } else {
                    Ok(BiPoly::constant(Q::from_integer(n)))
                }
            }
            Tok::Var('x') => Ok(BiPoly::x()),
            Tok::Var(_) => Ok(BiPoly::y()),
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.offset();
                match self.bump() {
                    Tok::RParen => Ok(inner),
                    _ => Err(err(close, "expected ')'")),
                }
            }
            Tok::End => Err(err(at, "unexpected end of input")),
            t => Err(err(at, format!("unexpected {}", describe(&t)))),
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Plus => "'+'",
        Tok::Minus => "'-'",
        Tok::Star => "'*'",
        Tok::Caret => "'^'",
        Tok::Slash => "'/' (only integer p/q literals are allowed)",
        Tok::RParen => "')'",
        Tok::LParen => "'('",
        _ => "token",
    }
}

/// Parse a polynomial in x, y with rational coefficients.
pub fn parse_polynomial(text: &str) -> Result<BiPoly<Q>, Error> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let v = p.expr()?;
    if *p.peek() != Tok::End {
        let at = p.offset();
        let msg = match p.peek() {
            Tok::Var(_) | Tok::Num(_) | Tok::LParen => "implicit multiplication is not allowed; use '*'".to_string(),
            t => format!("unexpected {}", describe(t)),
        };
        return Err(err(at, msg));
    }
    Ok(v)
}

/// Parse `EXPR[:EXP]` as used by repeated factored input.
pub fn parse_factor(text: &str) -> Result<(BiPoly<Q>, u32), Error> {
    match text.rfind(':') {
        Some(i) => {
            let e: u32 = text[i + 1..]
                .trim()
                .parse()
                .map_err(|_| err(i + 1, "expected a nonnegative integer exponent after ':'"))?;
            Ok((parse_polynomial(&text[..i])?, e))
        }
        None => Ok((parse_polynomial(text)?, 1)),
    }
}
