//! Polynomial strings in `z1..zr` and `t`.
//!
//! Grammar: sums and differences of products, `^` with a nonnegative integer
//! exponent, unary minus, parentheses, `i` for the imaginary unit and `/` by
//! a nonzero numeric constant. Multiplication must be written with `*`.

use std::fmt;

use crate::arith::{Field, GaussianRational, MPoly, RatFunc, UPoly};

type G = GaussianRational;
/// Polynomial in `z` with coefficients polynomial in `t`.
pub type TPoly = MPoly<RatFunc<G>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    Syntax { line: usize, column: usize, message: String },
    UnknownVariable { line: usize, column: usize, name: String },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { line, column, message } => write!(f, "{line}:{column}: {message}"),
            ParseError::UnknownVariable { line, column, name } => write!(f, "{line}:{column}: unknown variable `{name}`"),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Var(String),
    Op(char),
}

struct Lexed {
    toks: Vec<(Tok, usize)>,
}

fn position(src: &str, offset: usize) -> (usize, usize) {
    let before = &src[..offset.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.chars().rev().take_while(|&c| c != '\n').count() + 1;
    (line, column)
}

fn lex(src: &str) -> Result<Lexed, ParseError> {
    let mut toks = Vec::new();
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut k = 0;
    while k < chars.len() {
        let (off, c) = chars[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].1.is_ascii_digit() {
                k += 1;
            }
            toks.push((Tok::Num(chars[start..k].iter().map(|x| x.1).collect()), off));
        } else if c.is_ascii_alphabetic() {
            let start = k;
            while k < chars.len() && chars[k].1.is_ascii_alphanumeric() {
                k += 1;
            }
            toks.push((Tok::Var(chars[start..k].iter().map(|x| x.1).collect()), off));
        } else if "+-*/^()".contains(c) {
            toks.push((Tok::Op(c), off));
            k += 1;
        } else if c == '−' {
            toks.push((Tok::Op('-'), off));
            k += 1;
        } else {
            let (line, column) = position(src, off);
            return Err(ParseError::Syntax { line, column, message: format!("unexpected character `{c}`") });
        }
    }
    Ok(Lexed { toks })
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    r: usize,
}

impl Parser<'_> {
    fn err(&self, message: impl Into<String>) -> ParseError {
        let off = self.toks.get(self.pos).map_or(self.src.len(), |t| t.1);
        let (line, column) = position(self.src, off);
        ParseError::Syntax { line, column, message: message.into() }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn constant(&self, c: RatFunc<G>) -> TPoly {
        MPoly::constant(self.r, c)
    }

    fn expr(&mut self) -> Result<TPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<TPoly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat('/') {
                let at = self.pos;
                let d = self.unary()?;
                let c = numeric_constant(&d).ok_or_else(|| {
                    self.pos = at;
                    self.err("division is only allowed by a nonzero number")
                })?;
                acc = acc.scale(&RatFunc::from_poly(UPoly::constant(c.inv())));
            } else if matches!(self.peek(), Some(Tok::Num(_) | Tok::Var(_))) || self.peek() == Some(&Tok::Op('(')) {
                return Err(self.err("implicit multiplication is not allowed; use `*`"));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<TPoly, ParseError> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<TPoly, ParseError> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(s)) => {
                    self.pos += 1;
                    let e: u32 = s.parse().map_err(|_| self.err("exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(self.err("expected a nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<TPoly, ParseError> {
        let Some((tok, off)) = self.toks.get(self.pos).cloned() else {
            return Err(self.err("unexpected end of input"));
        };
        match tok {
            Tok::Num(s) => {
                self.pos += 1;
                let v: G = s.parse().map_err(|_| self.err("bad number"))?;
                Ok(self.constant(RatFunc::from_poly(UPoly::constant(v))))
            }
            Tok::Var(name) => {
                self.pos += 1;
                if name == "i" {
                    return Ok(self.constant(RatFunc::from_poly(UPoly::constant(G::i()))));
                }
                if name == "t" {
                    return Ok(self.constant(RatFunc::var()));
                }
                let index = name.strip_prefix('z').and_then(|d| d.parse::<usize>().ok());
                match index {
                    Some(k) if k >= 1 && k <= self.r && !name[1..].starts_with('0') => Ok(MPoly::var(self.r, k - 1)),
                    _ => {
                        let (line, column) = position(self.src, off);
                        Err(ParseError::UnknownVariable { line, column, name })
                    }
                }
            }
            Tok::Op('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(e)
            }
            Tok::Op(c) => Err(self.err(format!("unexpected `{c}`"))),
        }
    }
}

fn numeric_constant(p: &TPoly) -> Option<G> {
    if p.len() != 1 {
        return None;
    }
    let (e, c) = p.terms().iter().next()?;
    if e.iter().any(|&x| x != 0) || !c.is_polynomial() || c.num().deg0() != 0 {
        return None;
    }
    let v = c.num().coeff(0);
    (!v.is_zero()).then_some(v)
}

/// Parse a polynomial in `z1..zr` whose coefficients may involve `t`.
pub fn parse_family(src: &str, r: usize) -> Result<TPoly, ParseError> {
    let Lexed { toks } = lex(src)?;
    let mut p = Parser { src, toks, pos: 0, r };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

/// Parse a polynomial in `z1..zr` with Gaussian-rational coefficients.
pub fn parse_polynomial(src: &str, r: usize) -> Result<MPoly<G>, ParseError> {
    let p = parse_family(src, r)?;
    let mut terms = Vec::new();
    for (e, c) in p.terms() {
        if !c.is_polynomial() || c.num().deg0() != 0 {
            let off = src.find('t').unwrap_or(0);
            let (line, column) = position(src, off);
            return Err(ParseError::UnknownVariable { line, column, name: "t".into() });
        }
        terms.push((e.clone(), c.num().coeff(0)));
    }
    Ok(MPoly::from_terms(r, terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_precedence() {
        let p = parse_polynomial("z1^4+z1^2*z2+z1*z2^2-z1*z2*z3^2", 3).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.coeff(&[1, 1, 2]), G::from_i64(-1));
        let q = parse_polynomial("-(z1 - z2)^2/2 + (1+2*i)*z3", 3).unwrap();
        assert_eq!(q.coeff(&[1, 1, 0]), G::from_i64(1));
        assert_eq!(q.coeff(&[0, 0, 1]), G::from_parts((1, 1), (2, 1)));
    }

    #[test]
    fn family_coefficients() {
        let f = parse_family("z1^2 + t*z2^3 + z4", 6).unwrap();
        assert_eq!(f.len(), 3);
        assert!(!f.coeff(&[0, 3, 0, 0, 0, 0]).is_one());
    }

    #[test]
    fn reports_positions() {
        match parse_polynomial("z1 + z9", 3) {
            Err(ParseError::UnknownVariable { column, .. }) => assert_eq!(column, 6),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_polynomial("2 z1", 3), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_polynomial("z1/z2", 3), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_polynomial("z1 + t", 3), Err(ParseError::UnknownVariable { .. })));
        assert!(matches!(parse_polynomial("z1^-1", 3), Err(ParseError::Syntax { .. })));
    }
}
