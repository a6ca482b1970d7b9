//! Text syntax for polynomials.
//!
//! Coefficients are integers or rationals (`3`, `-2/5`), `^` raises a
//! variable to a power, and `*` is optional between a coefficient and the
//! monomial that follows it: `z*x - x^2`, `3x + 1`, `1/2*t^2 + 3/2*t`.

use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::monomial::Monomial;
use crate::poly::polynomial::{Polynomial, Rational};
use crate::poly::ring::PolyRing;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn lex(input: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let n = BigInt::from_str(&text)
                .map_err(|e| Error::Parse(format!("bad integer `{text}`: {e}")))?;
            tokens.push(Token::Number(n));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            tokens.push(Token::Ident(chars[start..i].iter().collect()));
        } else {
            let tok = match c {
                '+' => Token::Plus,
                '-' => Token::Minus,
                '*' => Token::Star,
                '^' => Token::Caret,
                '/' => Token::Slash,
                other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
            };
            tokens.push(tok);
            i += 1;
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    ring: &'a Arc<PolyRing>,
    tokens: Vec<Token>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn parse_poly(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.ring);
        let mut sign = match self.peek() {
            Some(Token::Minus) => {
                self.bump();
                -1
            }
            Some(Token::Plus) => {
                self.bump();
                1
            }
            _ => 1,
        };
        loop {
            let term = self.parse_term(sign)?;
            acc = acc.checked_add(&term)?;
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    sign = 1;
                }
                Some(Token::Minus) => {
                    self.bump();
                    sign = -1;
                }
                None => break,
                Some(t) => return Err(Error::Parse(format!("unexpected token {t:?}"))),
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self, sign: i32) -> Result<Polynomial> {
        let mut coeff = if sign < 0 {
            -Rational::one()
        } else {
            Rational::one()
        };
        let mut exps = vec![0u32; self.ring.nvars()];
        let mut saw_factor = false;
        loop {
            match self.peek().cloned() {
                Some(Token::Number(n)) => {
                    self.bump();
                    let mut value = Rational::from_integer(n);
                    if matches!(self.peek(), Some(Token::Slash)) {
                        self.bump();
                        match self.bump() {
                            Some(Token::Number(d)) => {
                                let d = Rational::from_integer(d);
                                if d.numer().sign() == num_bigint::Sign::NoSign {
                                    return Err(Error::Parse("zero denominator".into()));
                                }
                                value /= d;
                            }
                            _ => return Err(Error::Parse("expected denominator".into())),
                        }
                    }
                    coeff *= value;
                    saw_factor = true;
                    // `*` is optional between a coefficient and a monomial.
                    if matches!(self.peek(), Some(Token::Star)) {
                        self.bump();
                        continue;
                    }
                    if matches!(self.peek(), Some(Token::Ident(_))) {
                        continue;
                    }
                    break;
                }
                Some(Token::Ident(name)) => {
                    self.bump();
                    let idx = self
                        .ring
                        .var_index(&name)
                        .ok_or_else(|| Error::UnknownVariable(name.clone()))?;
                    let mut pow = 1u32;
                    if matches!(self.peek(), Some(Token::Caret)) {
                        self.bump();
                        match self.bump() {
                            Some(Token::Number(n)) => {
                                pow = u32::try_from(n).map_err(|_| {
                                    Error::Parse("exponent out of range".into())
                                })?;
                            }
                            _ => return Err(Error::Parse("expected exponent".into())),
                        }
                    }
                    exps[idx] += pow;
                    saw_factor = true;
                    if matches!(self.peek(), Some(Token::Star)) {
                        self.bump();
                        continue;
                    }
                    if matches!(self.peek(), Some(Token::Ident(_))) {
                        // Adjacent identifiers require an explicit `*`; a bare
                        // `xy` is a single variable name handled above.
                        return Err(Error::Parse("missing `*` between factors".into()));
                    }
                    break;
                }
                _ => {
                    if saw_factor {
                        break;
                    }
                    return Err(Error::Parse("expected a term".into()));
                }
            }
        }
        Ok(Polynomial::monomial(self.ring, Monomial::new(exps), coeff))
    }
}

/// Parses the textual polynomial syntax in the given ring.
pub fn parse_polynomial(ring: &Arc<PolyRing>, input: &str) -> Result<Polynomial> {
    let tokens = lex(input)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut parser = Parser {
        ring,
        tokens,
        pos: 0,
    };
    let p = parser.parse_poly()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse("trailing input".into()));
    }
    Ok(p)
}

/// Parses `n` or `n/d` as an exact rational.
pub fn parse_rational(input: &str) -> Result<Rational> {
    Rational::from_str(input.trim())
        .map_err(|e| Error::Parse(format!("bad rational `{input}`: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_spec_syntax() {
        let r = PolyRing::new(&["x", "y"], &["z"]).unwrap();
        let f = parse_polynomial(&r, "z*x - x^2").unwrap();
        assert_eq!(f.to_string(), "-x^2 + x*z");
        let g = parse_polynomial(&r, "x + y - z").unwrap();
        assert_eq!(g.to_string(), "x + y - z");
        let h = parse_polynomial(&r, "-2/5").unwrap();
        assert_eq!(h.to_string(), "-2/5");
        let k = parse_polynomial(&r, "3x").unwrap();
        assert_eq!(k.to_string(), "3*x");
    }

    #[test]
    fn whole_words_are_single_variables() {
        let r = PolyRing::new(&["x", "y", "xy"], &[]).unwrap();
        let f = parse_polynomial(&r, "xy").unwrap();
        assert_eq!(f.terms().len(), 1);
        assert_eq!(f.terms()[0].0.exps(), &[0, 0, 1]);
    }

    #[test]
    fn rejects_garbage() {
        let r = PolyRing::new(&["x"], &[]).unwrap();
        assert!(parse_polynomial(&r, "x +").is_err());
        assert!(parse_polynomial(&r, "x y").is_err());
        assert!(parse_polynomial(&r, "w").is_err());
        assert!(parse_polynomial(&r, "x^").is_err());
        assert!(parse_polynomial(&r, "1/0").is_err());
        assert!(parse_polynomial(&r, "").is_err());
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3").unwrap(), Rational::from_integer(3.into()));
        assert_eq!(
            parse_rational("-1/2").unwrap(),
            Rational::new((-1).into(), 2.into())
        );
        assert!(parse_rational("a").is_err());
    }
}
