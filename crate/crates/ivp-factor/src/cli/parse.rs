//! Textual expression grammar:
//!
//! ```text
//! expr       := product ("/" natural)?
//! product    := atom ("*" atom)*
//! atom       := "(" polynomial ")" ("^" natural)? | polynomial
//! polynomial := signed integer-coefficient terms in x, "^" for powers
//! ```
//!
//! Whitespace is insignificant. Coefficients are juxtaposed ("3x^2"); `*`
//! separates factors. Example: `(x^6-109)*(x-3)*(x-39)/9`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::factored::{CertPolicy, FactoredIVP, Sign};
use crate::irred::CertifyOptions;
use crate::poly::IntPoly;

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(found) if found == c => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.error(format!("expected '{}'", c as char))),
        }
    }

    fn error(&self, message: String) -> Error {
        Error::Parse {
            offset: self.pos,
            message,
        }
    }

    fn natural(&mut self) -> Result<BigUint> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a number".into()));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    fn exponent(&mut self) -> Result<u32> {
        let n = self.natural()?;
        match u32::try_from(&n) {
            Ok(e) if e <= 1_000_000 => Ok(e),
            _ => Err(self.error("exponent too large".into())),
        }
    }

    /// One polynomial: signed terms until a character outside the term
    /// alphabet ('*', '/', ')', or end).
    fn polynomial(&mut self) -> Result<IntPoly> {
        let mut poly = IntPoly::zero();
        let mut any = false;
        loop {
            let sign = match self.peek() {
                Some(b'+') => {
                    self.bump();
                    BigInt::one()
                }
                Some(b'-') => {
                    self.bump();
                    -BigInt::one()
                }
                _ => {
                    if any {
                        break;
                    }
                    BigInt::one()
                }
            };
            // term := natural? ("x" ("^" natural)?)?
            let mut coeff: Option<BigInt> = None;
            if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                let n = self.natural()?;
                coeff = Some(BigInt::from_biguint(num_bigint::Sign::Plus, n));
            }
            let mut exp = 0usize;
            if self.peek() == Some(b'x') {
                self.bump();
                exp = 1;
                if self.peek() == Some(b'^') {
                    self.bump();
                    exp = self.exponent()? as usize;
                }
            } else if coeff.is_none() {
                return Err(self.error("expected a term".into()));
            }
            let coeff = coeff.unwrap_or_else(BigInt::one);
            poly = poly.add(&IntPoly::monomial(exp, sign * coeff));
            any = true;
            match self.peek() {
                Some(b'+') | Some(b'-') => continue,
                _ => break,
            }
        }
        Ok(poly)
    }

    fn atom(&mut self) -> Result<(IntPoly, u32)> {
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let poly = self.polynomial()?;
                self.expect(b')')?;
                let mult = if self.peek() == Some(b'^') {
                    self.bump();
                    self.exponent()?
                } else {
                    1
                };
                Ok((poly, mult))
            }
            Some(_) => {
                let poly = self.polynomial()?;
                Ok((poly, 1))
            }
            None => Err(self.error("expected a factor".into())),
        }
    }

    fn product(&mut self) -> Result<Vec<(IntPoly, u32)>> {
        let mut factors = vec![self.atom()?];
        while self.peek() == Some(b'*') {
            self.bump();
            factors.push(self.atom()?);
        }
        Ok(factors)
    }
}

/// Parse an expression into factored raw form: sign is carried by the factor
/// polynomials themselves, the denominator defaults to 1.
fn parse_raw(text: &str) -> Result<(Vec<(IntPoly, u32)>, BigUint)> {
    let mut scanner = Scanner::new(text);
    let factors = scanner.product()?;
    let denom = if scanner.peek() == Some(b'/') {
        scanner.bump();
        scanner.natural()?
    } else {
        BigUint::one()
    };
    if let Some(c) = scanner.peek() {
        return Err(scanner.error(format!("unexpected '{}'", c as char)));
    }
    Ok((factors, denom))
}

/// Parse and canonicalize, certifying every factor.
pub fn parse_expression(text: &str) -> Result<FactoredIVP> {
    parse_expression_with(text, CertPolicy::Require, &CertifyOptions::default())
}

pub fn parse_expression_with(
    text: &str,
    policy: CertPolicy,
    opts: &CertifyOptions,
) -> Result<FactoredIVP> {
    let (factors, denom) = parse_raw(text)?;
    if denom.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    FactoredIVP::canonicalize(Sign::Pos, denom, factors, policy, opts)
}

/// Parse a product without a denominator, returning the raw factor list.
pub fn parse_product(text: &str) -> Result<Vec<(IntPoly, u32)>> {
    let (factors, denom) = parse_raw(text)?;
    if !denom.is_one() {
        return Err(Error::InvalidParams {
            what: "a plain product may not carry a denominator".into(),
        });
    }
    Ok(factors)
}

/// Parse a single dense polynomial (no '*', '/', or parentheses).
pub fn parse_polynomial(text: &str) -> Result<IntPoly> {
    let mut scanner = Scanner::new(text);
    let poly = scanner.polynomial()?;
    if let Some(c) = scanner.peek() {
        return Err(scanner.error(format!("unexpected '{}'", c as char)));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_intro_element() {
        let f = parse_expression("x*(x^2+3)/2").unwrap();
        assert_eq!(f.to_string(), "x*(x^2+3)/2");
        assert_eq!(f.denom(), &BigUint::from(2u32));
    }

    #[test]
    fn parses_powered_atoms() {
        let f = parse_expression("(x^8-17)^4*(x-4)^2*(x-8)^2/16").unwrap();
        assert_eq!(f.slots(), 8);
        assert_eq!(f.denom(), &BigUint::from(16u32));
    }

    #[test]
    fn syntax_error_carries_offset() {
        match parse_expression("x*/2") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn whitespace_insignificant() {
        let a = parse_expression(" x * ( x^2 + 3 ) / 2 ").unwrap();
        let b = parse_expression("x*(x^2+3)/2").unwrap();
        assert!(a.same_element(&b));
    }

    #[test]
    fn juxtaposed_coefficients() {
        let p = parse_polynomial("2x^2-3x+4").unwrap();
        assert_eq!(p, IntPoly::from_i64(&[4, -3, 2]));
        let p = parse_polynomial("x^6-109").unwrap();
        assert_eq!(p, IntPoly::from_i64(&[-109, 0, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn negative_leading_factor_normalizes() {
        let f = parse_expression("-x*(x^2+3)/2").unwrap();
        assert_eq!(f.sign(), crate::factored::Sign::Neg);
    }

    #[test]
    fn display_round_trips() {
        for text in [
            "x*(x^2+3)/2",
            "(x^8-17)^4*(x-4)^2*(x-8)^2/16",
            "(x-39)*(x-3)*(x^6-109)/9",
            "(x^2+4)*(x^4+7)/4",
        ] {
            let f = parse_expression(text).unwrap();
            let again = parse_expression(&f.to_string()).unwrap();
            assert!(f.same_element(&again), "round trip failed for {}", text);
        }
    }

    #[test]
    fn constant_product_folds() {
        // 2*(x+1)*(x-1)/2 cancels the 2
        let f = parse_expression("2*(x+1)*(x-1)/2").unwrap();
        assert_eq!(f.denom(), &BigUint::one());
        assert_eq!(f.slots(), 2);
    }
}
