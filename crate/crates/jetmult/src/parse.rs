//! Text grammar for polynomials (also the golden-file format):
//!
//! ```text
//! variable := "x" int "_" int        x3_2 means x_3^(2)
//! term     := [rational "*"] variable ("^" int)? ("*" variable ("^" int)?)*
//! poly     := term (("+"|"-") term)*
//! rational := int ("/" int)?
//! ```
//!
//! A bare rational is accepted as a constant term (and `0` as the zero
//! polynomial) so every canonical serialization re-reads. Whitespace is
//! allowed between tokens. Errors carry a 1-based line and column.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::vars::JetVar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    ZeroDenominator,
    ExponentOutOfRange,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub col: usize,
    pub message: String,
}

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Self {
        Scanner {
            src: src.as_bytes(),
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.bump();
        }
    }

    fn err(&self, kind: ParseErrorKind, message: impl Into<String>) -> ParseError {
        ParseError {
            kind,
            line: self.line,
            col: self.col,
            message: message.into(),
        }
    }

    fn syntax(&self, message: impl Into<String>) -> ParseError {
        self.err(ParseErrorKind::Syntax, message)
    }

    /// Unsigned digit run as a big integer.
    fn digits(&mut self, what: &str) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if self.pos == start {
            return Err(self.syntax(format!("expected {what}")));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    fn small_uint(&mut self, what: &str) -> Result<u32, ParseError> {
        let n = self.digits(what)?;
        u32::try_from(&n).map_err(|_| self.syntax(format!("{what} out of range")))
    }

    /// rational := ["-"] int ("/" int)?
    fn rational(&mut self) -> Result<BigRational, ParseError> {
        let negative = if self.peek() == Some(b'-') {
            self.bump();
            true
        } else {
            false
        };
        let mut numer = self.digits("a number")?;
        if negative {
            numer = -numer;
        }
        if self.peek() == Some(b'/') {
            self.bump();
            let (dline, dcol) = (self.line, self.col);
            let denom = self.digits("a denominator")?;
            if denom.is_zero() {
                return Err(ParseError {
                    kind: ParseErrorKind::ZeroDenominator,
                    line: dline,
                    col: dcol,
                    message: "denominator must be nonzero".into(),
                });
            }
            Ok(BigRational::new(numer, denom))
        } else {
            Ok(BigRational::from(numer))
        }
    }

    /// variable := "x" int "_" int
    fn variable(&mut self) -> Result<JetVar, ParseError> {
        match self.peek() {
            Some(b'x') => {
                self.bump();
            }
            _ => return Err(self.syntax("expected a variable like x1_0")),
        }
        let (bline, bcol) = (self.line, self.col);
        let base = self.small_uint("a base index")?;
        if base == 0 {
            return Err(ParseError {
                kind: ParseErrorKind::Syntax,
                line: bline,
                col: bcol,
                message: "variable base must be >= 1".into(),
            });
        }
        match self.peek() {
            Some(b'_') => {
                self.bump();
            }
            _ => return Err(self.syntax("expected '_' in variable")),
        }
        let order = self.small_uint("a jet order")?;
        Ok(JetVar::new(base, order))
    }

    /// variable ("^" int)? ("*" variable ("^" int)?)*
    fn factors(&mut self) -> Result<Monomial, ParseError> {
        let mut mono = Monomial::one();
        loop {
            let v = self.variable()?;
            let exp = if self.peek() == Some(b'^') {
                self.bump();
                let (eline, ecol) = (self.line, self.col);
                let e = self.small_uint("an exponent")?;
                if e == 0 {
                    return Err(ParseError {
                        kind: ParseErrorKind::ExponentOutOfRange,
                        line: eline,
                        col: ecol,
                        message: "exponent must be >= 1".into(),
                    });
                }
                e
            } else {
                1
            };
            mono = mono.mul(&Monomial::var_pow(v, exp));
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.bump();
                self.skip_ws();
            } else {
                return Ok(mono);
            }
        }
    }

    fn term(&mut self) -> Result<(BigRational, Monomial), ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == b'-' || c.is_ascii_digit() => {
                let coeff = self.rational()?;
                self.skip_ws();
                if self.peek() == Some(b'*') {
                    self.bump();
                    self.skip_ws();
                    let mono = self.factors()?;
                    Ok((coeff, mono))
                } else {
                    // Constant term.
                    Ok((coeff, Monomial::one()))
                }
            }
            Some(b'x') => {
                let mono = self.factors()?;
                Ok((BigRational::from(BigInt::from(1)), mono))
            }
            _ => Err(self.syntax("expected a term")),
        }
    }
}

/// Parses the canonical polynomial grammar into a [`Polynomial`].
pub fn parse_polynomial(src: &str) -> Result<Polynomial, ParseError> {
    let mut s = Scanner::new(src);
    s.skip_ws();
    if s.peek().is_none() {
        return Err(s.syntax("empty input"));
    }
    let mut terms = Vec::new();
    let (c, m) = s.term()?;
    terms.push((m, c));
    loop {
        s.skip_ws();
        match s.peek() {
            None => break,
            Some(b'+') => {
                s.bump();
                let (c, m) = s.term()?;
                terms.push((m, c));
            }
            Some(b'-') => {
                s.bump();
                let (c, m) = s.term()?;
                terms.push((m, -c));
            }
            Some(_) => return Err(s.syntax("expected '+' or '-'")),
        }
    }
    Ok(Polynomial::from_terms(terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn parses_monomial_product() {
        let p = parse_polynomial("x1_0*x2_0").unwrap();
        let expected = Polynomial::monomial(Monomial::from_exponents([
            (JetVar::new(1, 0), 1),
            (JetVar::new(2, 0), 1),
        ]));
        assert_eq!(p, expected);
    }

    #[test]
    fn parses_first_order_jet_generator() {
        let p = parse_polynomial("x1_0*x2_1 + x1_1*x2_0").unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.to_canonical_string(), "x1_0*x2_1 + x1_1*x2_0");
    }

    #[test]
    fn parses_exact_rational_coefficients() {
        let p = parse_polynomial("1/2*x1_0^2 - x2_3").unwrap();
        assert_eq!(p.num_terms(), 2);
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(p.coeff(&Monomial::var_pow(JetVar::new(1, 0), 2)), half);
        assert_eq!(
            p.coeff(&Monomial::var(JetVar::new(2, 3))),
            -BigRational::one()
        );
        // Round-trips through the canonical serializer.
        assert_eq!(
            parse_polynomial(&p.to_canonical_string()).unwrap(),
            p
        );
    }

    #[test]
    fn accepts_constants_and_zero() {
        assert_eq!(
            parse_polynomial("0").unwrap(),
            Polynomial::zero()
        );
        assert_eq!(
            parse_polynomial("-7/3").unwrap(),
            Polynomial::constant(BigRational::new((-7).into(), 3.into()))
        );
    }

    #[test]
    fn combines_repeated_monomials() {
        let p = parse_polynomial("x1_0 + x1_0").unwrap();
        assert_eq!(p.to_canonical_string(), "2*x1_0");
    }

    #[test]
    fn syntax_error_carries_position() {
        let e = parse_polynomial("x1_0 + + x2_0").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Syntax);
        assert_eq!((e.line, e.col), (1, 8));
    }

    #[test]
    fn rejects_zero_denominator() {
        let e = parse_polynomial("1/0*x1_0").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::ZeroDenominator);
    }

    #[test]
    fn rejects_zero_exponent() {
        let e = parse_polynomial("x1_0^0").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::ExponentOutOfRange);
    }

    #[test]
    fn rejects_base_zero() {
        let e = parse_polynomial("x0_1").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Syntax);
        assert!(e.message.contains("base"));
    }

    #[test]
    fn rejects_trailing_garbage() {
        assert!(parse_polynomial("x1_0 y").is_err());
        assert!(parse_polynomial("2*3").is_err());
    }
}
