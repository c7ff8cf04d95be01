//! Canonical factored form of nonzero rational polynomials.
//!
//! Every nonzero f in `Q[x]` is (±1/b) * Π g_i with b a positive integer and the
//! g_i primitive, irreducible over Q and with positive leading coefficient;
//! the representation is unique up to factor order. These are the elements of
//! Int(Z) this crate studies — residual integer content is rejected loudly, so
//! units stay ±1 and constant parts never occur downstream.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::irred::{certify_q_irreducible, CertifyFailure, CertifyOptions, IrredCertificate};
use crate::poly::IntPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn combine(self, other: Sign) -> Sign {
        if self == other {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn pow(self, k: u32) -> Sign {
        match self {
            Sign::Pos => Sign::Pos,
            Sign::Neg => {
                if k.is_multiple_of(2) {
                    Sign::Pos
                } else {
                    Sign::Neg
                }
            }
        }
    }
}

/// One distinct irreducible factor with its multiplicity and the certificate
/// that backed its irreducibility over Q.
#[derive(Clone, Debug)]
pub struct FactorEntry {
    pub poly: IntPoly,
    pub mult: u32,
    pub cert: IrredCertificate,
}

/// A nonzero rational polynomial in canonical factored form.
#[derive(Clone, Debug)]
pub struct FactoredIVP {
    sign: Sign,
    denom: BigUint,
    factors: Vec<FactorEntry>,
}

/// How canonicalization reacts when the certification ladder cannot settle a
/// factor: reject, or keep it with an `Asserted` certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertPolicy {
    Require,
    AssertOnFailure,
}

impl FactoredIVP {
    /// Normalize raw input into canonical form.
    ///
    /// Factor contents and signs fold into the leading sign and the
    /// denominator; factors become primitive with positive leading
    /// coefficient; reducible factors are rejected with the splitting found;
    /// a residual non-unit integer content is an error.
    pub fn canonicalize(
        sign: Sign,
        denom: BigUint,
        raw: Vec<(IntPoly, u32)>,
        policy: CertPolicy,
        opts: &CertifyOptions,
    ) -> Result<FactoredIVP> {
        if denom.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let mut sign = sign;
        let mut numer_content = BigUint::one();
        let mut parts: Vec<(IntPoly, u32)> = Vec::new();
        for (g, mult) in raw {
            if mult == 0 {
                continue;
            }
            if g.is_zero() {
                return Err(Error::ZeroFactor);
            }
            let (content, prim) = g.primitive_part()?;
            let (negated, prim) = prim.normalize_sign();
            if negated && mult % 2 == 1 {
                sign = sign.flip();
            }
            numer_content *= content.pow(mult);
            let (prim, mult) = match prim.degree() {
                Some(0) => continue, // a constant; its magnitude went into the content
                // a pure monomial x^k is k copies of the factor x
                Some(k) if prim.terms().count() == 1 => (IntPoly::x(), mult * k as u32),
                _ => (prim, mult),
            };
            match parts.iter_mut().find(|(p, _)| *p == prim) {
                Some((_, m)) => *m += mult,
                None => parts.push((prim, mult)),
            }
        }
        // Reduce the integer content against the denominator.
        let g = numer_content.gcd(&denom);
        let numer_content = numer_content / &g;
        let denom = denom / &g;
        if !numer_content.is_one() {
            return Err(Error::NonUnitContent {
                content: numer_content,
            });
        }
        if parts.is_empty() {
            return Err(Error::NoPolynomialFactor);
        }
        let mut factors = Vec::with_capacity(parts.len());
        for (poly, mult) in parts {
            let cert = match certify_q_irreducible(&poly, opts) {
                Ok(cert) => cert,
                Err(CertifyFailure::Reducible { left, right }) => {
                    return Err(Error::ReducibleFactor {
                        factor: poly,
                        left,
                        right,
                    })
                }
                Err(CertifyFailure::Inconclusive) => match policy {
                    CertPolicy::Require => return Err(Error::UncertifiedFactor { factor: poly }),
                    CertPolicy::AssertOnFailure => IrredCertificate::Asserted,
                },
            };
            factors.push(FactorEntry { poly, mult, cert });
        }
        factors.sort_by(|a, b| a.poly.cmp(&b.poly));
        Ok(FactoredIVP {
            sign,
            denom,
            factors,
        })
    }

    /// Assemble from entries already known to be canonical (primitive,
    /// positive leading coefficient, certified, sorted or not).
    pub(crate) fn from_entries_unchecked(
        sign: Sign,
        denom: BigUint,
        mut factors: Vec<FactorEntry>,
    ) -> FactoredIVP {
        factors.sort_by(|a, b| a.poly.cmp(&b.poly));
        factors.retain(|e| e.mult > 0);
        FactoredIVP {
            sign,
            denom,
            factors,
        }
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn denom(&self) -> &BigUint {
        &self.denom
    }

    pub fn factor_entries(&self) -> &[FactorEntry] {
        &self.factors
    }

    /// (factor, multiplicity) view of the numerator.
    pub fn numer_factors(&self) -> Vec<(&IntPoly, u32)> {
        self.factors.iter().map(|e| (&e.poly, e.mult)).collect()
    }

    /// Number of irreducible factor slots counted with multiplicity.
    pub fn slots(&self) -> u32 {
        self.factors.iter().map(|e| e.mult).sum()
    }

    pub fn degree(&self) -> usize {
        self.factors
            .iter()
            .map(|e| e.poly.degree().unwrap_or(0) * e.mult as usize)
            .sum()
    }

    /// Expand the numerator into a dense polynomial. Meant for small elements
    /// (tests, reports); the computational paths stay factored.
    pub fn expand_numerator(&self) -> IntPoly {
        let mut acc = IntPoly::one();
        for e in &self.factors {
            acc = acc.mul(&e.poly.pow(e.mult));
        }
        acc
    }

    pub fn pow(&self, k: u32) -> FactoredIVP {
        FactoredIVP {
            sign: self.sign.pow(k),
            denom: self.denom.pow(k),
            factors: self
                .factors
                .iter()
                .map(|e| FactorEntry {
                    poly: e.poly.clone(),
                    mult: e.mult * k,
                    cert: e.cert.clone(),
                })
                .collect(),
        }
    }

    pub fn mul(&self, other: &FactoredIVP) -> FactoredIVP {
        let mut factors = self.factors.clone();
        for e in &other.factors {
            match factors.iter_mut().find(|f| f.poly == e.poly) {
                Some(f) => f.mult += e.mult,
                None => factors.push(e.clone()),
            }
        }
        FactoredIVP::from_entries_unchecked(
            self.sign.combine(other.sign),
            &self.denom * &other.denom,
            factors,
        )
    }

    pub fn negate(&self) -> FactoredIVP {
        FactoredIVP {
            sign: self.sign.flip(),
            denom: self.denom.clone(),
            factors: self.factors.clone(),
        }
    }

    /// Identity ignoring certificates but not sign.
    pub fn same_element(&self, other: &FactoredIVP) -> bool {
        self.sign == other.sign && self.abs_key() == other.abs_key()
    }

    /// Comparison key that forgets sign and certificates: equal keys mean the
    /// two elements are associated in Int(Z) (units are ±1).
    pub fn abs_key(&self) -> (BigUint, Vec<(IntPoly, u32)>) {
        (
            self.denom.clone(),
            self.factors
                .iter()
                .map(|e| (e.poly.clone(), e.mult))
                .collect(),
        )
    }
}

impl PartialEq for FactoredIVP {
    fn eq(&self, other: &Self) -> bool {
        self.same_element(other)
    }
}

impl Eq for FactoredIVP {}

impl Ord for FactoredIVP {
    fn cmp(&self, other: &Self) -> Ordering {
        self.abs_key()
            .cmp(&other.abs_key())
            .then_with(|| self.sign.cmp(&other.sign))
    }
}

impl PartialOrd for FactoredIVP {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FactoredIVP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == Sign::Neg {
            write!(f, "-")?;
        }
        let mut first = true;
        for e in &self.factors {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            let single_term = e.poly.terms().count() == 1;
            if e.mult == 1 && single_term {
                write!(f, "{}", e.poly)?;
            } else if e.mult == 1 {
                write!(f, "({})", e.poly)?;
            } else {
                write!(f, "({})^{}", e.poly, e.mult)?;
            }
        }
        if !self.denom.is_one() {
            write!(f, "/{}", self.denom)?;
        }
        Ok(())
    }
}

/// True iff f = u*g for a unit u of Int(Z); the units are ±1, so this is
/// equality up to the sign field.
pub fn associated_intz(f: &FactoredIVP, g: &FactoredIVP) -> bool {
    f.abs_key() == g.abs_key()
}

/// Convenience: canonicalize integer polynomial factors given as (poly, mult)
/// over a denominator, requiring certification, with default options.
pub fn element(sign: Sign, denom: u64, raw: Vec<(IntPoly, u32)>) -> Result<FactoredIVP> {
    FactoredIVP::canonicalize(
        sign,
        BigUint::from(denom),
        raw,
        CertPolicy::Require,
        &CertifyOptions::default(),
    )
}

#[allow(unused)]
pub(crate) fn entry_for_tests(poly: IntPoly, mult: u32) -> FactorEntry {
    FactorEntry {
        poly,
        mult,
        cert: IrredCertificate::Asserted,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn canonicalize_folds_contents() {
        // (+1, 4, [2x+2, x-1]) -> denom 2, factors {x+1, x-1}
        let f = element(Sign::Pos, 4, vec![(poly(&[2, 2]), 1), (poly(&[-1, 1]), 1)]).unwrap();
        assert_eq!(f.denom(), &BigUint::from(2u32));
        assert_eq!(f.sign(), Sign::Pos);
        let polys: Vec<_> = f
            .numer_factors()
            .iter()
            .map(|(p, _)| (*p).clone())
            .collect();
        assert_eq!(polys, vec![poly(&[-1, 1]), poly(&[1, 1])]);
    }

    #[test]
    fn canonicalize_normalizes_signs() {
        // (-1, 1, [-x]) -> +x
        let f = element(Sign::Neg, 1, vec![(poly(&[0, -1]), 1)]).unwrap();
        assert_eq!(f.sign(), Sign::Pos);
        assert_eq!(f.to_string(), "x");
    }

    #[test]
    fn canonicalize_keeps_reference_element() {
        let f = element(
            Sign::Pos,
            2,
            vec![(poly(&[0, 1]), 1), (poly(&[3, 0, 1]), 1)],
        )
        .unwrap();
        assert_eq!(f.to_string(), "x*(x^2+3)/2");
    }

    #[test]
    fn residual_content_is_rejected() {
        let err = element(Sign::Pos, 1, vec![(poly(&[0, 2]), 1)]).unwrap_err();
        assert!(matches!(err, Error::NonUnitContent { .. }));
    }

    #[test]
    fn reducible_factor_is_rejected_with_split() {
        // x^2 - 1 = (x-1)(x+1)
        let err = element(Sign::Pos, 1, vec![(poly(&[-1, 0, 1]), 1)]).unwrap_err();
        match err {
            Error::ReducibleFactor { left, right, .. } => {
                let prod = left.mul(&right);
                assert_eq!(prod, poly(&[-1, 0, 1]));
            }
            other => panic!("expected reducible factor error, got {other:?}"),
        }
    }

    #[test]
    fn zero_factor_rejected() {
        assert!(matches!(
            element(Sign::Pos, 1, vec![(IntPoly::zero(), 1)]),
            Err(Error::ZeroFactor)
        ));
    }

    #[test]
    fn order_insensitive_and_idempotent() {
        let a = element(
            Sign::Pos,
            4,
            vec![(poly(&[0, 1]), 2), (poly(&[3, 0, 1]), 1)],
        )
        .unwrap();
        let b = element(
            Sign::Pos,
            4,
            vec![(poly(&[3, 0, 1]), 1), (poly(&[0, 1]), 2)],
        )
        .unwrap();
        assert!(a.same_element(&b));
        // feeding the canonical parts back in reproduces the element
        let again = element(
            Sign::Pos,
            4,
            a.numer_factors()
                .iter()
                .map(|(p, m)| ((*p).clone(), *m))
                .collect(),
        )
        .unwrap();
        assert!(a.same_element(&again));
    }

    #[test]
    fn association_ignores_sign_only() {
        let f = element(Sign::Pos, 1, vec![(poly(&[0, 1]), 1)]).unwrap();
        let g = f.negate();
        assert!(associated_intz(&f, &g));
        let h = element(Sign::Pos, 1, vec![(poly(&[-1, 1]), 1)]).unwrap();
        assert!(!associated_intz(&f, &h));
    }

    #[test]
    fn pow_and_mul() {
        let f = element(
            Sign::Pos,
            2,
            vec![(poly(&[0, 1]), 1), (poly(&[3, 0, 1]), 1)],
        )
        .unwrap();
        let f2 = f.pow(2);
        assert_eq!(f2.denom(), &BigUint::from(4u32));
        assert_eq!(f2.slots(), 4);
        let prod = f.mul(&f);
        assert!(f2.same_element(&prod));
    }
}
