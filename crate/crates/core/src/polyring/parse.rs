//! Text form of polynomials.
//!
//! ```text
//! poly    := ['+' | '-'] product (('+' | '-') product)*
//! product := factor ('*' factor)*
//! factor  := INT ['/' INT] | IDENT ['^' INT]
//! ```
//! Whitespace is insignificant. Example: `3*z00^2*z11 - 1/2*z21^3`.

use std::fmt::Write;
use std::sync::Arc;

use num_bigint::BigInt;

use super::coeff::Coefficient;
use super::monomial::Monomial;
use super::poly::Polynomial;
use super::ring::PolyRing;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && (bytes[i].is_ascii_alphabetic() || bytes[i] == b'_') {
                    return Err(Error::MalformedCoefficient(format!(
                        "`{}` at position {start}",
                        &text[start..=i]
                    )));
                }
                out.push((start, Tok::Int(text[start..i].to_string())));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                return Err(Error::Syntax {
                    position: start,
                    message: format!("unexpected character `{c}`"),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ring: &'a Arc<PolyRing>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.ring);
        let mut negate = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let (c, m) = self.product()?;
            let c = if negate { c.neg() } else { c };
            acc = &acc + &Polynomial::from_terms(self.ring, vec![(c, m)]);
            match self.peek() {
                None => return Ok(acc),
                Some(Tok::Plus) => negate = false,
                Some(Tok::Minus) => negate = true,
                Some(t) => return self.syntax(format!("expected `+` or `-`, found {t:?}")),
            }
            self.pos += 1;
        }
    }

    fn product(&mut self) -> Result<(Coefficient, Monomial)> {
        let field = self.ring.field();
        let mut c = field.one();
        let mut m = Monomial::one(self.ring.arity());
        loop {
            let start = self.offset();
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    self.pos += 1;
                    let num: BigInt = n.parse().expect("lexer yields digits");
                    let den = if self.peek() == Some(&Tok::Slash) {
                        self.pos += 1;
                        match self.peek().cloned() {
                            Some(Tok::Int(d)) => {
                                self.pos += 1;
                                d.parse().expect("lexer yields digits")
                            }
                            _ => {
                                return Err(Error::MalformedCoefficient(format!(
                                    "missing denominator at position {}",
                                    self.offset()
                                )))
                            }
                        }
                    } else {
                        BigInt::from(1)
                    };
                    c = c.mul(&field.from_fraction(&num, &den).map_err(|e| match e {
                        Error::MalformedCoefficient(msg) => {
                            Error::MalformedCoefficient(format!("{msg} at position {start}"))
                        }
                        e => e,
                    })?);
                }
                Some(Tok::Ident(name)) => {
                    self.pos += 1;
                    let idx = self.ring.index_of(&name).ok_or(Error::UnknownVariable {
                        name: name.clone(),
                        position: start,
                    })?;
                    let mut e: u32 = 1;
                    if self.peek() == Some(&Tok::Caret) {
                        self.pos += 1;
                        match self.peek().cloned() {
                            Some(Tok::Int(d)) => {
                                self.pos += 1;
                                e = match d.parse::<u16>() {
                                    Ok(v) if v > 0 => v as u32,
                                    _ => {
                                        return Err(Error::Syntax {
                                            position: start,
                                            message: format!("invalid exponent `{d}`"),
                                        })
                                    }
                                };
                            }
                            _ => return self.syntax("expected a positive integer exponent"),
                        }
                    }
                    let mut v = Monomial::one(self.ring.arity());
                    for _ in 0..e {
                        v = v.mul(&Monomial::var(self.ring.arity(), idx));
                    }
                    m = m.mul(&v);
                }
                Some(t) => return self.syntax(format!("expected a number or variable, found {t:?}")),
                None => return self.syntax("unexpected end of input"),
            }
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
            } else {
                return Ok((c, m));
            }
        }
    }
}

/// Parses `text` into a canonical polynomial of `ring`.
pub fn parse_poly(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(Error::Syntax {
            position: 0,
            message: "empty input".into(),
        });
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        ring,
    };
    p.poly()
}

fn format_monomial(out: &mut String, m: &Monomial, names: &[String]) {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(&names[i]);
        if e > 1 {
            write!(out, "^{e}").unwrap();
        }
    }
}

/// Canonical text: terms in descending order, `*` products, `^` powers.
pub fn format_poly(f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let names = f.ring().names();
    let mut out = String::new();
    for (k, (c, m)) in f.terms().iter().enumerate() {
        let neg = c.is_negative();
        let abs = if neg { c.neg() } else { c.clone() };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if m.is_one() {
            write!(out, "{abs}").unwrap();
        } else {
            if !abs.is_one() {
                write!(out, "{abs}*").unwrap();
            }
            format_monomial(&mut out, m, names);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::ArithOp;
    use proptest::prelude::*;

    fn ring(p: u64) -> Arc<PolyRing> {
        PolyRing::with_characteristic(&["x", "y", "z"], p).unwrap()
    }

    #[test]
    fn parses_fermat() {
        let r = PolyRing::with_characteristic(&["x0", "x1", "x2"], 0).unwrap();
        let f = parse_poly("x0^3 + x1^3 + x2^3", &r).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f.to_string(), "x0^3 + x1^3 + x2^3");
    }

    #[test]
    fn zero_and_cancellation() {
        assert!(parse_poly("0", &ring(0)).unwrap().is_zero());
        assert!(parse_poly("2*x - 7*x", &ring(5)).unwrap().is_zero());
        assert_eq!(parse_poly("2*x - 7*x", &ring(0)).unwrap().to_string(), "-5*x");
    }

    #[test]
    fn rational_coefficients() {
        let r = PolyRing::with_characteristic(&["z00", "z11", "z21"], 0).unwrap();
        let f = parse_poly("3*z00^2*z11 - 1/2*z21^3", &r).unwrap();
        assert_eq!(f.to_string(), "3*z00^2*z11 - 1/2*z21^3");
        let g = parse_poly(" - z21^3 * 1/2+z11*3*z00 ^ 2", &r).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn error_positions() {
        match parse_poly("x + w", &ring(0)) {
            Err(Error::UnknownVariable { name, position }) => {
                assert_eq!(name, "w");
                assert_eq!(position, 4);
            }
            other => panic!("unexpected {other:?}"),
        }
        match parse_poly("x + * y", &ring(0)) {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_poly("1/0*x", &ring(0)), Err(Error::MalformedCoefficient(_))));
        assert!(matches!(parse_poly("1/5*x", &ring(5)), Err(Error::MalformedCoefficient(_))));
        assert!(matches!(parse_poly("2x", &ring(0)), Err(Error::MalformedCoefficient(_))));
        assert!(matches!(parse_poly("x^0", &ring(0)), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("", &ring(0)), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("x +", &ring(0)), Err(Error::Syntax { .. })));
    }

    fn arb_poly(p: u64) -> impl Strategy<Value = Polynomial> {
        let r = ring(p);
        proptest::collection::vec(
            ((-20i64..20), (1i64..5), proptest::collection::vec(0u32..4, 3)),
            0..8,
        )
        .prop_map(move |ts| {
            let field = r.field();
            let terms = ts
                .into_iter()
                .map(|(n, d, e)| {
                    let c = field
                        .from_fraction(&BigInt::from(n), &BigInt::from(if p == 0 { d } else { 1 }))
                        .unwrap();
                    (c, Monomial::from_exponents(&e))
                })
                .collect();
            Polynomial::from_terms(&r, terms)
        })
    }

    proptest! {
        #[test]
        fn format_parse_roundtrip_q(f in arb_poly(0)) {
            prop_assert_eq!(parse_poly(&format_poly(&f), f.ring()).unwrap(), f);
        }

        #[test]
        fn format_parse_roundtrip_f7(f in arb_poly(7)) {
            prop_assert_eq!(parse_poly(&format_poly(&f), f.ring()).unwrap(), f);
        }

        #[test]
        fn ring_laws(a in arb_poly(0), b in arb_poly(0), c in arb_poly(0)) {
            let ab = a.arith(&b, ArithOp::Add).unwrap();
            prop_assert_eq!(&ab, &(&b + &a));
            prop_assert_eq!(&(&ab + &c), &(&a + &(&b + &c)));
            prop_assert_eq!(&(&a * &b), &(&b * &a));
            prop_assert_eq!(&(&(&a * &b) * &c), &(&a * &(&b * &c)));
            prop_assert_eq!(&(&a * &(&b + &c)), &(&(&a * &b) + &(&a * &c)));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn ring_laws_f11(a in arb_poly(11), b in arb_poly(11), c in arb_poly(11)) {
            prop_assert_eq!(&(&a * &(&b + &c)), &(&(&a * &b) + &(&a * &c)));
            prop_assert_eq!(&(&(&a * &b) * &c), &(&a * &(&b * &c)));
            prop_assert_eq!(&(&a - &b), &(-&(&b - &a)));
        }
    }
}
