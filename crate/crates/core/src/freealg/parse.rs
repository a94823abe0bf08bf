//! Recursive-descent parser for noncommutative polynomial expressions.
//!
//! ```text
//! expr     := ['-'] term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := atom ('^' nat)?
//! atom     := rational | ident | '(' expr ')'
//! rational := int ('/' nat)?
//! ```
//!
//! A leading minus is accepted so that rendered output parses back.

use num_bigint::BigInt;
use thiserror::Error;

use crate::exactnum::{Coefficient, Rational};

use super::{Gen, NCPoly, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown identifier `{name}` at position {position}")]
    UnknownIdentifier { name: String, position: usize },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

struct Lexer;

impl Lexer {
    fn tokens(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
        let bytes: Vec<char> = text.chars().collect();
        let mut out = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = bytes[start..i].iter().collect();
                out.push((start, Tok::Int(s.parse().expect("digits"))));
            } else if c.is_ascii_alphabetic() {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(bytes[start..i].iter().collect())));
            } else if "+-*^/()".contains(c) {
                out.push((i, Tok::Sym(c)));
                i += 1;
            } else {
                return Err(ParseError::Syntax {
                    position: i,
                    message: format!("unexpected character `{c}`"),
                });
            }
        }
        Ok(out)
    }
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    alphabet: &'a [Gen],
    params: &'a [&'a str],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { position: self.position(), message: message.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr<S: Coefficient>(&mut self) -> Result<NCPoly<S>, ParseError> {
        let negate = self.eat('-');
        let mut acc = self.term::<S>()?;
        if negate {
            acc = acc.neg();
        }
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

    fn term<S: Coefficient>(&mut self) -> Result<NCPoly<S>, ParseError> {
        let mut acc = self.factor::<S>()?;
        while self.eat('*') {
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor<S: Coefficient>(&mut self) -> Result<NCPoly<S>, ParseError> {
        let base = self.atom::<S>()?;
        if self.eat('^') {
            let Some(Tok::Int(n)) = self.peek().cloned() else {
                return self.err("expected a natural-number exponent after `^`");
            };
            let Ok(n) = u32::try_from(n) else {
                return self.err("exponent too large");
            };
            self.pos += 1;
            Ok(base.pow(n))
        } else {
            Ok(base)
        }
    }

    fn atom<S: Coefficient>(&mut self) -> Result<NCPoly<S>, ParseError> {
        let position = self.position();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let value = if self.eat('/') {
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) if d != BigInt::from(0) => {
                            self.pos += 1;
                            Rational::from_bigints(n, d)
                        }
                        Some(Tok::Int(_)) => return self.err("zero denominator"),
                        _ => return self.err("expected a denominator after `/`"),
                    }
                } else {
                    Rational::from(n)
                };
                Ok(NCPoly::constant(S::from(value)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if let Some(g) = self.alphabet.iter().find(|g| g.name() == name) {
                    Ok(NCPoly::monomial(Word::letter(g.clone()), S::from(Rational::one())))
                } else if self.params.contains(&name.as_str()) {
                    match S::parameter(&name) {
                        Some(p) => Ok(NCPoly::constant(p)),
                        None => Err(ParseError::UnknownIdentifier { name, position }),
                    }
                } else {
                    Err(ParseError::UnknownIdentifier { name, position })
                }
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(inner)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parse `text` into a polynomial over `alphabet`. Identifiers listed in
/// `params` become scalar parameters of the coefficient ring.
pub fn parse<S: Coefficient>(
    text: &str,
    alphabet: &[Gen],
    params: &[&str],
) -> Result<NCPoly<S>, ParseError> {
    let toks = Lexer::tokens(text)?;
    let mut p = Parser { toks, pos: 0, end: text.chars().count(), alphabet, params };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

/// Parse with rational coefficients and no parameters.
pub fn parse_rational(text: &str, alphabet: &[Gen]) -> Result<NCPoly<Rational>, ParseError> {
    parse(text, alphabet, &[])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::MultiPoly;
    use crate::freealg::gens;

    fn xy() -> Vec<Gen> {
        gens(&["x", "y"])
    }

    fn w(names: &[&str]) -> Word {
        Word::from_names(names)
    }

    #[test]
    fn direct_reading() {
        let p = parse_rational("x*y - 2*y*x", &xy()).unwrap();
        assert_eq!(p.coeff(&w(&["x", "y"])), Rational::one());
        assert_eq!(p.coeff(&w(&["y", "x"])), Rational::integer(-2));
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn square_expands() {
        let p = parse_rational("(x+y)^2", &xy()).unwrap();
        assert_eq!(p.len(), 4);
        for word in [["x", "x"], ["x", "y"], ["y", "x"], ["y", "y"]] {
            assert_eq!(p.coeff(&w(&word)), Rational::one());
        }
    }

    #[test]
    fn rational_coefficient() {
        let p = parse_rational("3/2*u^2", &gens(&["u"])).unwrap();
        assert_eq!(p.coeff(&w(&["u", "u"])), Rational::new(3, 2));
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn errors_carry_position_and_name() {
        let e = parse_rational("x + z", &xy()).unwrap_err();
        assert_eq!(e, ParseError::UnknownIdentifier { name: "z".into(), position: 4 });
        let e = parse_rational("x + * y", &xy()).unwrap_err();
        assert!(matches!(e, ParseError::Syntax { position: 4, .. }));
        let e = parse_rational("(x + y", &xy()).unwrap_err();
        assert!(matches!(e, ParseError::Syntax { position: 6, .. }));
        assert!(parse_rational("x^", &xy()).is_err());
        assert!(parse_rational("1/0", &xy()).is_err());
        assert!(parse_rational("x $ y", &xy()).is_err());
    }

    #[test]
    fn parameters_need_a_parametric_ring() {
        let p: NCPoly<MultiPoly> = parse("lam*x + 1", &xy(), &["lam"]).unwrap();
        assert_eq!(p.coeff(&w(&["x"])), MultiPoly::var("lam"));
        let e = parse::<Rational>("lam*x", &xy(), &["lam"]).unwrap_err();
        assert!(matches!(e, ParseError::UnknownIdentifier { .. }));
    }

    #[test]
    fn render_round_trip() {
        let p = parse_rational("-(x+y)^3 + 5/7*y*x*x - 2", &xy()).unwrap();
        let text = p.render(&xy());
        assert_eq!(parse_rational(&text, &xy()).unwrap(), p);
    }
}
