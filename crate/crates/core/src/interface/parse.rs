//! Expression grammar:
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := ['-'] (rational ('*' factor)* | factor ('*' factor)*)
//! factor   := ident ['^' integer]
//! rational := integer ['/' positive-integer]
//! ```
//!
//! Whitespace is ignored.

use std::fmt;

use thiserror::Error;

use crate::exactalg::{format_rational, int, LaurentPoly, Rational};
use crate::vars;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Context {
    Section,
    Spinor,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Rational,
    pub factors: Vec<(String, i32)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExprAst {
    pub terms: Vec<Term>,
}

impl fmt::Display for ExprAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coeff < int(0);
            let abs = if neg {
                -t.coeff.clone()
            } else {
                t.coeff.clone()
            };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = abs == int(1) && !t.factors.is_empty();
            if !unit {
                write!(f, "{}", format_rational(&abs))?;
            }
            for (k, (name, e)) in t.factors.iter().enumerate() {
                if k > 0 || !unit {
                    f.write_str("*")?;
                }
                if *e == 1 {
                    write!(f, "{name}")?;
                } else {
                    write!(f, "{name}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        self.pos += len;
        (len > 0).then(|| &self.src[start..start + len])
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        if start >= bytes.len() || !bytes[start].is_ascii_alphabetic() {
            return None;
        }
        let len = self.src[start..]
            .bytes()
            .take_while(|b| b.is_ascii_alphanumeric() || *b == b'_')
            .count();
        self.pos += len;
        Some(&self.src[start..start + len])
    }

    fn integer(&mut self) -> Result<i32, ParseError> {
        let neg = self.eat('-');
        let at = self.pos;
        let d = self
            .digits()
            .ok_or_else(|| self.err("malformed exponent"))?;
        let v: i32 = d.parse().map_err(|_| ParseError {
            position: at,
            message: "exponent too large".into(),
        })?;
        Ok(if neg { -v } else { v })
    }
}

fn check_ident(name: &str, exp: i32, ctx: Context, at: usize) -> Result<(), ParseError> {
    let alphabet = match ctx {
        Context::Section => vars::section(),
        Context::Spinor => vars::spinor(),
    };
    let Some(v) = alphabet.index_of(name) else {
        return Err(ParseError {
            position: at,
            message: format!("unknown identifier {name}"),
        });
    };
    if exp < 0 && !alphabet.allows_negative(v) {
        return Err(ParseError {
            position: at,
            message: format!("negative exponent on {name} is not allowed here"),
        });
    }
    Ok(())
}

fn parse_factor(lx: &mut Lexer<'_>, ctx: Context) -> Result<(String, i32), ParseError> {
    lx.skip_ws();
    let at = lx.pos;
    let name = lx.ident().ok_or_else(|| lx.err("expected identifier"))?;
    let exp = if lx.eat('^') { lx.integer()? } else { 1 };
    check_ident(name, exp, ctx, at)?;
    Ok((name.to_string(), exp))
}

fn parse_term(lx: &mut Lexer<'_>, ctx: Context, sign: i64) -> Result<Term, ParseError> {
    let mut coeff = int(sign);
    let mut factors = Vec::new();
    match lx.peek() {
        Some(c) if c.is_ascii_digit() => {
            let n: Rational = lx
                .digits()
                .expect("digit")
                .parse::<num_bigint::BigInt>()
                .map(Rational::from_integer)
                .expect("digits");
            let mut r = n;
            if lx.eat('/') {
                let at = lx.pos;
                let d = lx.digits().ok_or_else(|| lx.err("expected denominator"))?;
                let d: num_bigint::BigInt = d.parse().expect("digits");
                if d == 0.into() {
                    return Err(ParseError {
                        position: at,
                        message: "zero denominator".into(),
                    });
                }
                r /= Rational::from_integer(d);
            }
            coeff *= r;
        }
        Some(c) if c.is_ascii_alphabetic() => factors.push(parse_factor(lx, ctx)?),
        Some(c) => return Err(lx.err(format!("unexpected character {c:?}"))),
        None => return Err(lx.err("unexpected end of input")),
    }
    while lx.eat('*') {
        factors.push(parse_factor(lx, ctx)?);
    }
    Ok(Term { coeff, factors })
}

pub fn parse_expr(text: &str, ctx: Context) -> Result<ExprAst, ParseError> {
    let mut lx = Lexer { src: text, pos: 0 };
    let mut terms = Vec::new();
    let mut sign = if lx.eat('-') { -1 } else { 1 };
    loop {
        terms.push(parse_term(&mut lx, ctx, sign)?);
        if lx.eat('+') {
            sign = 1;
        } else if lx.eat('-') {
            sign = -1;
        } else {
            break;
        }
    }
    if let Some(c) = lx.peek() {
        return Err(lx.err(format!("unexpected character {c:?}")));
    }
    Ok(ExprAst { terms })
}

pub fn ast_to_poly(ast: &ExprAst, ctx: Context) -> LaurentPoly {
    let alphabet = match ctx {
        Context::Section => vars::section(),
        Context::Spinor => vars::spinor(),
    };
    let mut out = LaurentPoly::zero(alphabet);
    for t in &ast.terms {
        let powers: Vec<(&str, i32)> = t.factors.iter().map(|(n, e)| (n.as_str(), *e)).collect();
        let m = LaurentPoly::monomial(alphabet, &powers, t.coeff.clone())
            .expect("checked while parsing");
        out = &out + &m;
    }
    out
}

pub fn parse_poly(text: &str, ctx: Context) -> Result<LaurentPoly, ParseError> {
    Ok(ast_to_poly(&parse_expr(text, ctx)?, ctx))
}

/// Canonical text of a polynomial, in graded-lexicographic term order.
pub fn format_poly(p: &LaurentPoly) -> String {
    let a = p.alphabet();
    let terms = p
        .sorted_terms()
        .into_iter()
        .map(|(e, c)| Term {
            coeff: c,
            factors: (0..a.len())
                .filter(|&v| e.get(v) != 0)
                .map(|v| (a.name(v).to_string(), e.get(v)))
                .collect(),
        })
        .collect();
    ExprAst { terms }.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    #[test]
    fn examples() {
        let ast = parse_expr("z11^2 * zeta1^-1 * zeta2^-1 * zeta3^-1", Context::Section).unwrap();
        assert_eq!(ast.terms.len(), 1);
        assert_eq!(ast.terms[0].factors[0], ("z11".to_string(), 2));
        let ast = parse_expr("1/2 * x1_11 * x2_12", Context::Spinor).unwrap();
        assert_eq!(ast.terms[0].coeff, rat(1, 2));
        let e = parse_expr("zeta1^-1 + q", Context::Section).unwrap_err();
        assert_eq!(e.position, 11);
        assert!(e.message.contains("unknown identifier q"));
    }

    #[test]
    fn rejections() {
        assert!(parse_expr("z11^-1", Context::Section).is_err());
        assert!(parse_expr("x12^-1", Context::Spinor).is_err());
        assert!(parse_expr("zeta1^-1", Context::Spinor).is_err());
        assert!(parse_expr("z11^", Context::Section).is_err());
        assert!(parse_expr("3/0", Context::Section).is_err());
        assert!(parse_expr("z11 z12", Context::Section).is_err());
    }

    #[test]
    fn round_trip() {
        for t in [
            "-z0 + 3/4*z11*zeta1^-2 - 2",
            "x12 - 1/2*x1_11*x2_12 + x2_31^3",
            "0",
        ] {
            let ctx = if t.contains('x') {
                Context::Spinor
            } else {
                Context::Section
            };
            let ast = parse_expr(t, ctx).unwrap();
            assert_eq!(parse_expr(&ast.to_string(), ctx).unwrap(), ast);
            let p = ast_to_poly(&ast, ctx);
            assert_eq!(parse_poly(&format_poly(&p), ctx).unwrap(), p);
        }
    }
}
