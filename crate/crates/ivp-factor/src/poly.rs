//! Dense univariate polynomials over the integers with exact arithmetic.
//!
//! Everything downstream (fixed divisors, valuations, certificates) evaluates
//! these polynomials exactly; there is no floating point anywhere.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign as IntSign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `coeffs[i]` holds the coefficient of `x^i`. The highest stored entry is
/// nonzero; the zero polynomial stores nothing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    pub fn x() -> Self {
        IntPoly::monomial(1, BigInt::one())
    }

    /// c * x^k
    pub fn monomial(k: usize, c: BigInt) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    /// x - a
    pub fn x_minus(a: &BigInt) -> Self {
        IntPoly::new(vec![-a.clone(), BigInt::one()])
    }

    #[cfg(test)]
    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    /// Nonzero terms as (exponent, coefficient), ascending exponent.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.terms() {
            for (j, b) in other.terms() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn pow(&self, k: u32) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Substitution x -> x + c, computed by Horner over (x + c).
    pub fn shift(&self, c: &BigInt) -> IntPoly {
        let mut res = IntPoly::zero();
        for a in self.coeffs.iter().rev() {
            // res = res * (x + c) + a
            let mut next = vec![BigInt::zero(); res.coeffs.len() + 1];
            for (i, r) in res.coeffs.iter().enumerate() {
                next[i + 1] += r;
                next[i] += r * c;
            }
            next[0] += a;
            res = IntPoly::new(next);
        }
        res
    }

    /// Exact evaluation. Works term-by-term so that sparse high-degree
    /// polynomials do not drag an enormous accumulator through every exponent.
    pub fn eval(&self, a: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut prev_exp: Option<usize> = None;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            match prev_exp {
                None => acc = c.clone(),
                Some(pe) => {
                    acc *= a.pow((pe - e) as u32);
                    acc += c;
                }
            }
            prev_exp = Some(e);
        }
        match prev_exp {
            None => BigInt::zero(),
            Some(e) => acc * a.pow(e as u32),
        }
    }

    /// Evaluation mod m (m >= 1), with modular exponentiation across exponent
    /// gaps. This is what keeps degree-10^4 sparse numerators cheap. Callers
    /// evaluating the same polynomial at many points should hold a [`TermView`].
    pub fn eval_mod(&self, a: &BigUint, m: &BigUint) -> BigUint {
        TermView::new(self).eval_mod(a, m)
    }

    /// Gcd of the coefficients. Errors on the zero polynomial.
    pub fn content(&self) -> Result<BigUint> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut g = BigUint::zero();
        for c in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            g = g.gcd(&c.magnitude().clone());
            if g.is_one() {
                break;
            }
        }
        Ok(g)
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_ok_and(|c| c.is_one())
    }

    /// (content, primitive part); the primitive part keeps this polynomial's sign.
    pub fn primitive_part(&self) -> Result<(BigUint, IntPoly)> {
        let content = self.content()?;
        let c = BigInt::from_biguint(IntSign::Plus, content.clone());
        let coeffs = self.coeffs.iter().map(|a| a / &c).collect();
        Ok((content, IntPoly { coeffs }))
    }

    /// Flip the sign if the leading coefficient is negative.
    /// Returns (was_negated, normalized).
    pub fn normalize_sign(&self) -> (bool, IntPoly) {
        match self.leading_coeff() {
            Some(c) if c.is_negative() => (true, self.neg()),
            _ => (false, self.clone()),
        }
    }
}

/// Nonzero terms of one polynomial, cached so that evaluating the same
/// polynomial at many points skips the dense coefficient scan every time.
pub struct TermView<'a> {
    /// (exponent, coefficient), descending exponent.
    terms: Vec<(usize, &'a BigInt)>,
}

impl<'a> TermView<'a> {
    pub fn new(poly: &'a IntPoly) -> Self {
        let mut terms: Vec<(usize, &'a BigInt)> = poly.terms().collect();
        terms.reverse();
        TermView { terms }
    }

    pub fn eval_mod(&self, a: &BigUint, m: &BigUint) -> BigUint {
        if m.is_one() {
            return BigUint::zero();
        }
        let a = a % m;
        let m_int = BigInt::from_biguint(IntSign::Plus, m.clone());
        let mut acc = BigUint::zero();
        let mut prev_exp: Option<usize> = None;
        for &(e, c) in &self.terms {
            let c_mod = c
                .mod_floor(&m_int)
                .to_biguint()
                .expect("mod_floor yields nonnegative");
            match prev_exp {
                None => acc = c_mod,
                Some(pe) => {
                    acc = acc * a.modpow(&BigUint::from(pe - e), m) % m;
                    acc = (acc + c_mod) % m;
                }
            }
            prev_exp = Some(e);
        }
        match prev_exp {
            None => BigUint::zero(),
            Some(e) => acc * a.modpow(&BigUint::from(e), m) % m,
        }
    }
}

/// Terms reduced modulo a word-size modulus, for tight evaluation loops.
pub(crate) struct ReducedTerms {
    /// (exponent, coefficient mod m), descending exponent.
    terms: Vec<(usize, u64)>,
    m: u64,
}

impl ReducedTerms {
    pub(crate) fn eval(&self, a: u64) -> u64 {
        let m = self.m;
        if m == 1 {
            return 0;
        }
        let a = a % m;
        let mut acc = 0u64;
        let mut prev_exp: Option<usize> = None;
        for &(e, c) in &self.terms {
            match prev_exp {
                None => acc = c,
                Some(pe) => {
                    acc = crate::arith::mulmod_u64(
                        acc,
                        crate::arith::powmod_u64(a, (pe - e) as u64, m),
                        m,
                    );
                    acc = (acc + c) % m;
                }
            }
            prev_exp = Some(e);
        }
        match prev_exp {
            None => 0,
            Some(e) => crate::arith::mulmod_u64(acc, crate::arith::powmod_u64(a, e as u64, m), m),
        }
    }
}

impl<'a> TermView<'a> {
    pub(crate) fn reduce_u64(&self, m: u64) -> ReducedTerms {
        let m_int = BigInt::from(m);
        ReducedTerms {
            terms: self
                .terms
                .iter()
                .map(|&(e, c)| {
                    (
                        e,
                        c.mod_floor(&m_int)
                            .to_biguint()
                            .expect("nonnegative")
                            .iter_u64_digits()
                            .next()
                            .unwrap_or(0),
                    )
                })
                .collect(),
            m,
        }
    }
}

/// Canonical order: by degree, then by the coefficient sequence.
impl Ord for IntPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl PartialOrd for IntPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let mag = c.magnitude();
            if e == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}", mag)?;
                }
                if e == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_exact() {
        // x^2 + 3 at 1
        let p = IntPoly::from_i64(&[3, 0, 1]);
        assert_eq!(p.eval(&BigInt::from(1)), BigInt::from(4));
        // x^3 - 17 at 2
        let p = IntPoly::from_i64(&[-17, 0, 0, 1]);
        assert_eq!(p.eval(&BigInt::from(2)), BigInt::from(-9));
        // x^4 + x^3 + 8 at 0
        let p = IntPoly::from_i64(&[8, 0, 0, 1, 1]);
        assert_eq!(p.eval(&BigInt::from(0)), BigInt::from(8));
    }

    #[test]
    fn content_examples() {
        assert_eq!(
            IntPoly::from_i64(&[4, 2]).content().unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(
            IntPoly::from_i64(&[0, 3, 0, 1]).content().unwrap(),
            BigUint::from(1u32)
        );
        assert_eq!(
            IntPoly::from_i64(&[3, -9, 6]).content().unwrap(),
            BigUint::from(3u32)
        );
        assert!(IntPoly::zero().content().is_err());
    }

    #[test]
    fn mul_and_shift() {
        let x = IntPoly::x();
        assert_eq!(x.mul(&x), IntPoly::from_i64(&[0, 0, 1]));
        // (x+1)^2 - 17 = x^2 + 2x - 16
        let p = IntPoly::from_i64(&[-17, 0, 1]);
        assert_eq!(p.shift(&BigInt::from(1)), IntPoly::from_i64(&[-16, 2, 1]));
        // (x-3)(x^3-17) = x^4 - 3x^3 - 17x + 51
        let a = IntPoly::from_i64(&[-3, 1]);
        let b = IntPoly::from_i64(&[-17, 0, 0, 1]);
        assert_eq!(a.mul(&b), IntPoly::from_i64(&[51, -17, 0, -3, 1]));
    }

    #[test]
    fn eval_mod_agrees_with_exact() {
        let p = IntPoly::from_i64(&[-109, 0, 0, 0, 0, 0, 1]); // x^6 - 109
        let m = BigUint::from(81u32);
        for a in 0u32..20 {
            let exact = p.eval(&BigInt::from(a));
            let exact_mod = exact.mod_floor(&BigInt::from(81)).to_biguint().unwrap();
            assert_eq!(p.eval_mod(&BigUint::from(a), &m), exact_mod);
        }
    }

    #[test]
    fn display_round_shapes() {
        assert_eq!(
            IntPoly::from_i64(&[-109, 0, 0, 0, 0, 0, 1]).to_string(),
            "x^6-109"
        );
        assert_eq!(IntPoly::from_i64(&[0, 1]).to_string(), "x");
        assert_eq!(IntPoly::from_i64(&[4, -1]).to_string(), "-x+4");
        assert_eq!(IntPoly::from_i64(&[3, 0, 2]).to_string(), "2x^2+3");
    }

    #[test]
    fn sign_normalization() {
        let p = IntPoly::from_i64(&[4, -1]);
        let (neg, q) = p.normalize_sign();
        assert!(neg);
        assert_eq!(q, IntPoly::from_i64(&[-4, 1]));
    }

    #[test]
    fn canonical_order_by_degree_then_coeffs() {
        let a = IntPoly::from_i64(&[-4, 1]); // x - 4
        let b = IntPoly::from_i64(&[0, 1]); // x
        let c = IntPoly::from_i64(&[3, 0, 1]); // x^2 + 3
        let mut v = vec![c.clone(), a.clone(), b.clone()];
        v.sort();
        assert_eq!(v, vec![a, b, c]);
    }
}
