//! The prime-power denominator element families.
//!
//! Shared shape: a high-degree Eisenstein piece h whose values carry deep
//! p-adic valuation on every unit class, times linear factors with roots in a
//! controlled residue class of p^2, over a prime-power (or two-prime)
//! denominator. The valuation bookkeeping makes the element irreducible while
//! leaving room to reshuffle factors between copies in a power.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{is_prime_u64, primes_up_to};
use crate::error::{Error, Result};
use crate::factored::{CertPolicy, FactoredIVP, Sign};
use crate::fixdiv::class_valuation_product;
use crate::irred::{is_irreducible_intz_with, IntZOptions};
use crate::poly::IntPoly;
use crate::powfact::{
    enumerate_factorizations_with, essentially_same, trivial_power_factorization,
    verify_factorization, Factorization,
};

use super::{find_prime, find_root, unit_group_exponent, RootSpec, SearchBounds};

fn require_odd_prime(p: u64) -> Result<()> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Err(Error::InvalidParams {
            what: "p must be an odd prime".into(),
        });
    }
    Ok(())
}

/// x^degree - subtrahend
fn power_minus(degree: u64, subtrahend: &BigUint) -> IntPoly {
    let mut coeffs = vec![BigInt::zero(); degree as usize + 1];
    coeffs[0] = -BigInt::from_biguint(num_bigint::Sign::Plus, subtrahend.clone());
    coeffs[degree as usize] = BigInt::one();
    IntPoly::new(coeffs)
}

fn linear_slots(roots: &[BigInt]) -> Vec<(IntPoly, u32)> {
    roots.iter().map(|a| (IntPoly::x_minus(a), 1u32)).collect()
}

/// Minimum class valuation of h over the unit classes mod p.
fn min_unit_class_valuation(h: &IntPoly, p: u64, k_max: u32) -> Result<u64> {
    let mut min = u64::MAX;
    for t in 1..p {
        let v = class_valuation_product(&[(h, 1)], p, 1, &BigUint::from(t), k_max)?;
        min = min.min(v);
    }
    Ok(min)
}

fn check_root_product_valuation(roots: &[BigInt], p: u64, expected: u64, k_max: u32) -> Result<()> {
    let linears: Vec<IntPoly> = roots.iter().map(IntPoly::x_minus).collect();
    let factors: Vec<(&IntPoly, u32)> = linears.iter().map(|g| (g, 1)).collect();
    let v = class_valuation_product(&factors, p, 1, &BigUint::zero(), k_max)?;
    if v != expected {
        return Err(Error::SelfCheck {
            what: format!(
                "minimum {}-adic valuation of the root product on the zero class is {}, expected exactly {}",
                p, v, expected
            ),
        });
    }
    Ok(())
}

fn check_irreducible(f: &FactoredIVP, bounds: &SearchBounds) -> Result<()> {
    let opts = IntZOptions {
        k_max: bounds.enumerate.k_max,
        partition_cap: bounds.enumerate.partition_cap,
    };
    let report = is_irreducible_intz_with(f, &opts)?;
    if !report.verdict.is_irreducible() {
        return Err(Error::SelfCheck {
            what: format!(
                "generated element {} is not irreducible: {:?}",
                f, report.verdict
            ),
        });
    }
    Ok(())
}

/// Squares of the unit group mod p^n.
fn unit_squares(p: u64, n: u32) -> Vec<bool> {
    let modulus = (p as u128).pow(n) as u64;
    let mut is_square = vec![false; modulus as usize];
    for w in 1..modulus {
        if w % p != 0 {
            let sq = ((w as u128 * w as u128) % modulus as u128) as usize;
            is_square[sq] = true;
        }
    }
    is_square
}

/// Check that val_p(g(u)) >= n exactly on the prescribed half of the unit
/// classes mod p^(n+1) (squares for `on_squares`, non-squares otherwise).
fn check_square_split(g: &IntPoly, p: u64, n: u32, on_squares: bool) -> Result<()> {
    let pn = (p as u128).pow(n) as u64;
    let modulus_big = BigUint::from(pn);
    let sweep = (p as u128).pow(n + 1);
    if sweep > 2_000_000 {
        return Err(Error::InvalidParams {
            what: format!(
                "unit sweep mod {}^{} too large for the split self-check",
                p,
                n + 1
            ),
        });
    }
    let squares = unit_squares(p, n);
    for u in 0..sweep as u64 {
        if u % p == 0 {
            continue;
        }
        let deep = g.eval_mod(&BigUint::from(u), &modulus_big).is_zero();
        let is_sq = squares[(u % pn) as usize];
        let expected = if on_squares { is_sq } else { !is_sq };
        if deep != expected {
            return Err(Error::SelfCheck {
                what: format!(
                    "valuation split failed at unit {}: val >= {} is {}, squareness is {}",
                    u, n, deep, is_sq
                ),
            });
        }
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct SameLengthParams {
    pub p: u64,
    pub n: u32,
    pub distinct_roots: u32,
    /// Expert override for the roots; all self-checks still run.
    pub root_override: Option<Vec<BigInt>>,
    pub bounds: SearchBounds,
}

impl SameLengthParams {
    pub fn new(p: u64, n: u32, distinct_roots: u32) -> Self {
        SameLengthParams {
            p,
            n,
            distinct_roots,
            root_override: None,
            bounds: SearchBounds::default(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SameLengthFamily {
    pub element: FactoredIVP,
    pub h: IntPoly,
    pub q: BigUint,
    pub roots: Vec<BigInt>,
    pub p: u64,
    pub n: u32,
}

/// f = h(x) * prod (x - a_i) / p^n with h = x^(p^(n-1)(p-1)) - q.
///
/// Every factorization of every power f^k then has length exactly k; with at
/// least two distinct roots, f^k also has factorizations essentially
/// different from the trivial one.
pub fn same_length_family(params: &SameLengthParams) -> Result<SameLengthFamily> {
    let SameLengthParams { p, n, .. } = *params;
    let bounds = &params.bounds;
    require_odd_prime(p)?;
    if n < 2 {
        return Err(Error::InvalidParams {
            what: "n must exceed 1".into(),
        });
    }
    if params.distinct_roots == 0 || params.distinct_roots > n {
        return Err(Error::InvalidParams {
            what: "distinct_roots must lie in 1..=n".into(),
        });
    }
    let e = unit_group_exponent(p, n, bounds)?;
    let modulus = BigUint::from(p).pow(n + 1);
    let q = find_prime(
        &BigUint::one(),
        &modulus,
        &BigUint::from(e + n as u64),
        bounds,
    )?;
    let h = power_minus(e, &q);
    let roots = match &params.root_override {
        Some(r) => {
            if r.len() != n as usize {
                return Err(Error::InvalidParams {
                    what: format!("root override must supply exactly {} roots", n),
                });
            }
            r.clone()
        }
        None => {
            let avoid: Vec<u64> = primes_up_to(e + n as u64)
                .into_iter()
                .filter(|&l| l != p)
                .collect();
            let spec = RootSpec {
                congruences: vec![(BigUint::from(p * p), BigUint::from(p))],
                avoid_primes: avoid,
            };
            let mut distinct = Vec::new();
            for _ in 0..params.distinct_roots {
                distinct.push(find_root(&spec, &distinct, bounds.root_candidates)?);
            }
            (0..n as usize)
                .map(|i| distinct[i.min(distinct.len() - 1)].clone())
                .collect()
        }
    };
    let mut raw = vec![(h.clone(), 1u32)];
    raw.extend(linear_slots(&roots));
    let element = FactoredIVP::canonicalize(
        Sign::Pos,
        BigUint::from(p).pow(n),
        raw,
        CertPolicy::Require,
        &bounds.certify,
    )?;
    // the minimum valuation of h over the unit classes must be exactly n
    let unit_min = min_unit_class_valuation(&h, p, bounds.enumerate.k_max)?;
    if unit_min != n as u64 {
        return Err(Error::SelfCheck {
            what: format!(
                "unit-class valuation of h is {}, expected exactly {}",
                unit_min, n
            ),
        });
    }
    check_root_product_valuation(&roots, p, n as u64, bounds.enumerate.k_max)?;
    check_irreducible(&element, bounds)?;
    Ok(SameLengthFamily {
        element,
        h,
        q,
        roots,
        p,
        n,
    })
}

#[derive(Clone, Debug)]
pub struct SplitFamily {
    pub element: FactoredIVP,
    pub c: IntPoly,
    pub d: IntPoly,
    pub q: BigUint,
    pub r: BigUint,
    pub roots: Vec<BigInt>,
    pub p: u64,
    pub n: u32,
}

/// Variant of the same-length family with h = c*d, where the valuations of c
/// and d split over square and non-square unit classes mod p^n.
pub fn same_length_split_family(p: u64, n: u32, bounds: &SearchBounds) -> Result<SplitFamily> {
    require_odd_prime(p)?;
    if n < 2 {
        return Err(Error::InvalidParams {
            what: "n must exceed 1".into(),
        });
    }
    let e = unit_group_exponent(p, n, bounds)?;
    let modulus = BigUint::from(p).pow(n + 1);
    let lower = BigUint::from(e + n as u64);
    let q = find_prime(&BigUint::one(), &modulus, &lower, bounds)?;
    let r = find_prime(&(&modulus - BigUint::one()), &modulus, &lower, bounds)?;
    let c = power_minus(e / 2, &q);
    let d = power_minus(e / 2, &r);
    let avoid: Vec<u64> = primes_up_to(e + n as u64)
        .into_iter()
        .filter(|&l| l != p)
        .collect();
    let spec = RootSpec {
        congruences: vec![(BigUint::from(p * p), BigUint::from(p))],
        avoid_primes: avoid,
    };
    let mut roots = Vec::new();
    for _ in 0..n {
        roots.push(find_root(&spec, &roots, bounds.root_candidates)?);
    }
    let mut raw = vec![(c.clone(), 1u32), (d.clone(), 1u32)];
    raw.extend(linear_slots(&roots));
    let element = FactoredIVP::canonicalize(
        Sign::Pos,
        BigUint::from(p).pow(n),
        raw,
        CertPolicy::Require,
        &bounds.certify,
    )?;
    check_square_split(&c, p, n, true)?;
    check_square_split(&d, p, n, false)?;
    let cd = c.mul(&d);
    let unit_min = min_unit_class_valuation(&cd, p, bounds.enumerate.k_max)?;
    if unit_min != n as u64 {
        return Err(Error::SelfCheck {
            what: format!(
                "unit-class valuation of c*d is {}, expected exactly {}",
                unit_min, n
            ),
        });
    }
    check_root_product_valuation(&roots, p, n as u64, bounds.enumerate.k_max)?;
    check_irreducible(&element, bounds)?;
    Ok(SplitFamily {
        element,
        c,
        d,
        q,
        r,
        roots,
        p,
        n,
    })
}

#[derive(Clone, Debug)]
pub struct MixedPrimeFamily {
    pub element: FactoredIVP,
    pub h: IntPoly,
    pub r: BigUint,
    pub roots: Vec<BigInt>,
    pub p: u64,
    pub q: u64,
    pub n: u32,
    /// The advertised factorization of f^2 into two members.
    pub displayed: (FactoredIVP, FactoredIVP),
}

/// Two-prime denominator q * p^n. The first q roots run through a complete
/// residue system mod q; the rest are ≡ 1 mod q. Squaring the first q roots in
/// one copy and roots q+1..2q in the other yields an essentially different
/// factorization of f^2.
pub fn mixed_prime_family(
    p: u64,
    q: u64,
    n: u32,
    bounds: &SearchBounds,
) -> Result<MixedPrimeFamily> {
    require_odd_prime(p)?;
    require_odd_prime(q)?;
    if p == q {
        return Err(Error::InvalidParams {
            what: "p and q must be distinct".into(),
        });
    }
    if (n as u64) < 2 * q {
        return Err(Error::InvalidParams {
            what: format!("n must be at least 2q = {}", 2 * q),
        });
    }
    let e = unit_group_exponent(p, n, bounds)?;
    let modulus = BigUint::from(p).pow(n + 1);
    let r = find_prime(
        &BigUint::one(),
        &modulus,
        &BigUint::from(e + n as u64),
        bounds,
    )?;
    let h = power_minus(e, &r);
    let avoid: Vec<u64> = primes_up_to(e + n as u64 - 1)
        .into_iter()
        .filter(|&l| l != p && l != q)
        .collect();
    let mut roots: Vec<BigInt> = Vec::new();
    for i in 0..n as u64 {
        let q_residue = if i < q { i % q } else { 1 };
        let spec = RootSpec {
            congruences: vec![
                (BigUint::from(p * p), BigUint::from(p)),
                (BigUint::from(q), BigUint::from(q_residue)),
            ],
            avoid_primes: avoid.clone(),
        };
        roots.push(find_root(&spec, &roots, bounds.root_candidates)?);
    }
    let denom = BigUint::from(q) * BigUint::from(p).pow(n);
    let mut raw = vec![(h.clone(), 1u32)];
    raw.extend(linear_slots(&roots));
    let element =
        FactoredIVP::canonicalize(Sign::Pos, denom, raw, CertPolicy::Require, &bounds.certify)?;
    let unit_min = min_unit_class_valuation(&h, p, bounds.enumerate.k_max)?;
    if unit_min != n as u64 {
        return Err(Error::SelfCheck {
            what: format!(
                "unit-class valuation of h is {}, expected exactly {}",
                unit_min, n
            ),
        });
    }
    check_root_product_valuation(&roots, p, n as u64, bounds.enumerate.k_max)?;
    check_irreducible(&element, bounds)?;
    // the advertised square factorization: first q roots doubled over q^2 p^n,
    // roots q+1..2q doubled over p^n, remaining roots in both parts
    let qu = q as usize;
    let tail: Vec<(IntPoly, u32)> = roots[2 * qu..]
        .iter()
        .map(|a| (IntPoly::x_minus(a), 1))
        .collect();
    let mut left_raw = vec![(h.clone(), 1u32)];
    left_raw.extend(roots[..qu].iter().map(|a| (IntPoly::x_minus(a), 2)));
    left_raw.extend(tail.clone());
    let mut right_raw = vec![(h.clone(), 1u32)];
    right_raw.extend(roots[qu..2 * qu].iter().map(|a| (IntPoly::x_minus(a), 2)));
    right_raw.extend(tail);
    let left = FactoredIVP::canonicalize(
        Sign::Pos,
        BigUint::from(q * q) * BigUint::from(p).pow(n),
        left_raw,
        CertPolicy::Require,
        &bounds.certify,
    )?;
    let right = FactoredIVP::canonicalize(
        Sign::Pos,
        BigUint::from(p).pow(n),
        right_raw,
        CertPolicy::Require,
        &bounds.certify,
    )?;
    let square = element.pow(2);
    if !left.mul(&right).same_element(&square) {
        return Err(Error::SelfCheck {
            what: "advertised square factorization does not multiply back to f^2".into(),
        });
    }
    for part in [&left, &right] {
        let report = is_irreducible_intz_with(
            part,
            &IntZOptions {
                k_max: bounds.enumerate.k_max,
                partition_cap: bounds.enumerate.partition_cap,
            },
        )?;
        if !report.verdict.is_irreducible() {
            return Err(Error::SelfCheck {
                what: format!("advertised square part {} is not irreducible", part),
            });
        }
    }
    let displayed_fact = Factorization::new(vec![left.clone(), right.clone()]);
    if essentially_same(&displayed_fact, &trivial_power_factorization(&element, 2)) {
        return Err(Error::SelfCheck {
            what: "advertised square factorization is essentially the trivial one".into(),
        });
    }
    Ok(MixedPrimeFamily {
        element,
        h,
        r,
        roots,
        p,
        q,
        n,
        displayed: (left, right),
    })
}

#[derive(Clone, Debug)]
pub struct TwoPrimeFamily {
    pub element: FactoredIVP,
    pub h: IntPoly,
    pub r: BigUint,
    pub t_exponent: u64,
    pub roots: Vec<BigInt>,
    pub p: u64,
    pub q: u64,
    pub n: u32,
    pub m: u32,
}

/// Denominator p^n q^m with q < p, 1 < m <= n; h = x^t - r where t is the lcm
/// of the two unit-group exponents and r ≡ 1 mod p^(n+1) q^(m+1).
pub fn two_prime_family(
    p: u64,
    q: u64,
    n: u32,
    m: u32,
    bounds: &SearchBounds,
) -> Result<TwoPrimeFamily> {
    require_odd_prime(p)?;
    require_odd_prime(q)?;
    if q >= p {
        return Err(Error::InvalidParams {
            what: "q must be smaller than p".into(),
        });
    }
    if m < 2 {
        return Err(Error::InvalidParams {
            what: "m must exceed 1".into(),
        });
    }
    if m > n {
        return Err(Error::InvalidParams {
            what: "m must not exceed n".into(),
        });
    }
    let ep = unit_group_exponent(p, n, bounds)?;
    let eq = unit_group_exponent(q, m, bounds)?;
    let t = ep.lcm(&eq);
    if t > bounds.max_degree {
        return Err(Error::InvalidParams {
            what: format!("degree {} exceeds the configured limit", t),
        });
    }
    let modulus = BigUint::from(p).pow(n + 1) * BigUint::from(q).pow(m + 1);
    let r = find_prime(
        &BigUint::one(),
        &modulus,
        &BigUint::from(t + n as u64),
        bounds,
    )?;
    let h = power_minus(t, &r);
    let avoid: Vec<u64> = primes_up_to(t + n as u64 - 1)
        .into_iter()
        .filter(|&l| l != p && l != q)
        .collect();
    let mut roots = Vec::new();
    for i in 0..n {
        let congruences = if i < m {
            vec![
                (BigUint::from(p * p), BigUint::from(p)),
                (BigUint::from(q * q), BigUint::from(q)),
            ]
        } else {
            vec![
                (BigUint::from(p * p), BigUint::from(p)),
                (BigUint::from(q), BigUint::one()),
            ]
        };
        let spec = RootSpec {
            congruences,
            avoid_primes: avoid.clone(),
        };
        roots.push(find_root(&spec, &roots, bounds.root_candidates)?);
    }
    let denom = BigUint::from(p).pow(n) * BigUint::from(q).pow(m);
    let mut raw = vec![(h.clone(), 1u32)];
    raw.extend(linear_slots(&roots));
    let element =
        FactoredIVP::canonicalize(Sign::Pos, denom, raw, CertPolicy::Require, &bounds.certify)?;
    for (prime, depth) in [(p, n as u64), (q, m as u64)] {
        let unit_min = min_unit_class_valuation(&h, prime, bounds.enumerate.k_max)?;
        if unit_min < depth {
            return Err(Error::SelfCheck {
                what: format!(
                    "unit-class valuation of h at {} is {}, expected at least {}",
                    prime, unit_min, depth
                ),
            });
        }
        check_root_product_valuation(&roots, prime, depth, bounds.enumerate.k_max)?;
    }
    check_irreducible(&element, bounds)?;
    Ok(TwoPrimeFamily {
        element,
        h,
        r,
        t_exponent: t,
        roots,
        p,
        q,
        n,
        m,
    })
}

#[derive(Clone, Debug)]
pub struct VariedLengthFamily {
    pub element: FactoredIVP,
    pub c: IntPoly,
    pub d: IntPoly,
    pub q: BigUint,
    pub r: BigUint,
    pub roots: Vec<BigInt>,
    pub p: u64,
    pub n: u32,
    pub m: u32,
    /// The advertised factorization of f^n of length 2n - m.
    pub displayed_power: Factorization,
}

/// f = c*d*prod_{i<=m}(x - a_i) / p^m with n > m: the square/non-square split
/// of c and d lets f^n shed n-m copies of each of c and d as separate parts,
/// so powers acquire factorizations of several lengths.
pub fn varied_length_family(
    p: u64,
    n: u32,
    m: u32,
    bounds: &SearchBounds,
) -> Result<VariedLengthFamily> {
    require_odd_prime(p)?;
    if !(n > m && m >= 1) {
        return Err(Error::InvalidParams {
            what: "need n > m >= 1".into(),
        });
    }
    let e = unit_group_exponent(p, n, bounds)?;
    let modulus = BigUint::from(p).pow(n + 1);
    let lower = BigUint::from(e + m as u64);
    let q = find_prime(&BigUint::one(), &modulus, &lower, bounds)?;
    let r = find_prime(&(&modulus - BigUint::one()), &modulus, &lower, bounds)?;
    let c = power_minus(e / 2, &q);
    let d = power_minus(e / 2, &r);
    let avoid: Vec<u64> = primes_up_to(e + m as u64)
        .into_iter()
        .filter(|&l| l != p)
        .collect();
    let spec = RootSpec {
        congruences: vec![(BigUint::from(p * p), BigUint::from(p))],
        avoid_primes: avoid,
    };
    let mut roots = Vec::new();
    for _ in 0..m {
        roots.push(find_root(&spec, &roots, bounds.root_candidates)?);
    }
    let mut raw = vec![(c.clone(), 1u32), (d.clone(), 1u32)];
    raw.extend(linear_slots(&roots));
    let element = FactoredIVP::canonicalize(
        Sign::Pos,
        BigUint::from(p).pow(m),
        raw,
        CertPolicy::Require,
        &bounds.certify,
    )?;
    check_square_split(&c, p, n, true)?;
    check_square_split(&d, p, n, false)?;
    check_root_product_valuation(&roots, p, m as u64, bounds.enumerate.k_max)?;
    check_irreducible(&element, bounds)?;
    // advertised f^n factorization: per root, c*d*(x-a_i)^n / p^n; plus n-m
    // loose copies of each of c and d
    let intz = IntZOptions {
        k_max: bounds.enumerate.k_max,
        partition_cap: bounds.enumerate.partition_cap,
    };
    let mut parts = Vec::new();
    for a in &roots {
        let part = FactoredIVP::canonicalize(
            Sign::Pos,
            BigUint::from(p).pow(n),
            vec![(c.clone(), 1), (d.clone(), 1), (IntPoly::x_minus(a), n)],
            CertPolicy::Require,
            &bounds.certify,
        )?;
        let report = is_irreducible_intz_with(&part, &intz)?;
        if !report.verdict.is_irreducible() {
            return Err(Error::SelfCheck {
                what: format!("advertised power part {} is not irreducible", part),
            });
        }
        parts.push(part);
    }
    let c_alone = FactoredIVP::canonicalize(
        Sign::Pos,
        BigUint::one(),
        vec![(c.clone(), 1)],
        CertPolicy::Require,
        &bounds.certify,
    )?;
    let d_alone = FactoredIVP::canonicalize(
        Sign::Pos,
        BigUint::one(),
        vec![(d.clone(), 1)],
        CertPolicy::Require,
        &bounds.certify,
    )?;
    for _ in 0..(n - m) {
        parts.push(c_alone.clone());
        parts.push(d_alone.clone());
    }
    let displayed_power = Factorization::new(parts);
    let power = element.pow(n);
    if !verify_factorization(&power, &displayed_power) {
        return Err(Error::SelfCheck {
            what: "advertised power factorization does not multiply back".into(),
        });
    }
    if essentially_same(&displayed_power, &trivial_power_factorization(&element, n)) {
        return Err(Error::SelfCheck {
            what: "advertised power factorization is essentially trivial".into(),
        });
    }
    // cross-check through the enumerator whenever the power fits the cap
    if power.slots() <= bounds.enumerate.slot_cap {
        let all = enumerate_factorizations_with(&power, &bounds.enumerate)?;
        if !all.iter().any(|f| essentially_same(f, &displayed_power)) {
            return Err(Error::SelfCheck {
                what: "enumerator does not find the advertised power factorization".into(),
            });
        }
    }
    Ok(VariedLengthFamily {
        element,
        c,
        d,
        q,
        r,
        roots,
        p,
        n,
        m,
        displayed_power,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_length_3_2_reproduces_reference_instance() {
        let fam = same_length_family(&SameLengthParams::new(3, 2, 2)).unwrap();
        assert_eq!(fam.q, BigUint::from(109u32));
        assert_eq!(fam.roots, vec![BigInt::from(3), BigInt::from(39)]);
        assert_eq!(fam.element.to_string(), "(x-39)*(x-3)*(x^6-109)/9");
    }

    #[test]
    fn same_length_single_root_class() {
        let fam = same_length_family(&SameLengthParams::new(3, 2, 1)).unwrap();
        assert_eq!(fam.roots, vec![BigInt::from(3), BigInt::from(3)]);
        assert_eq!(fam.element.denom(), &BigUint::from(9u32));
    }

    #[test]
    fn same_length_rejects_even_prime() {
        let err = same_length_family(&SameLengthParams::new(2, 2, 1)).unwrap_err();
        assert!(matches!(err, Error::InvalidParams { .. }));
    }

    #[test]
    fn split_family_3_2() {
        let fam = same_length_split_family(3, 2, &SearchBounds::default()).unwrap();
        assert_eq!(fam.c, IntPoly::from_i64(&[-109, 0, 0, 1]));
        assert_eq!(fam.d, IntPoly::from_i64(&[-53, 0, 0, 1]));
    }

    #[test]
    fn split_family_5_2_has_degree_ten_pieces() {
        let fam = same_length_split_family(5, 2, &SearchBounds::default()).unwrap();
        assert_eq!(fam.c.degree(), Some(10));
        assert_eq!(fam.d.degree(), Some(10));
    }

    #[test]
    fn split_family_rejects_even_prime() {
        assert!(same_length_split_family(2, 2, &SearchBounds::default()).is_err());
    }

    #[test]
    fn varied_length_3_2_1() {
        let fam = varied_length_family(3, 2, 1, &SearchBounds::default()).unwrap();
        assert_eq!(fam.element.to_string(), "(x-3)*(x^3-109)*(x^3-53)/3");
        assert_eq!(fam.displayed_power.length(), 3);
    }

    #[test]
    fn varied_length_rejects_bad_orders() {
        assert!(varied_length_family(3, 2, 2, &SearchBounds::default()).is_err());
        assert!(varied_length_family(3, 1, 1, &SearchBounds::default()).is_err());
    }

    #[test]
    fn two_prime_5_3_2_2() {
        let fam = two_prime_family(5, 3, 2, 2, &SearchBounds::default()).unwrap();
        assert_eq!(fam.t_exponent, 60);
        assert_eq!(fam.element.denom(), &BigUint::from(225u32));
        assert_eq!(fam.roots, vec![BigInt::from(1605), BigInt::from(2055)]);
    }

    #[test]
    fn two_prime_rejects_bad_params() {
        let b = SearchBounds::default();
        assert!(two_prime_family(3, 5, 2, 2, &b).is_err()); // q >= p
        assert!(two_prime_family(5, 3, 2, 1, &b).is_err()); // m = 1
        assert!(two_prime_family(5, 3, 1, 2, &b).is_err()); // m > n
    }

    #[test]
    fn mixed_prime_rejects_bad_params() {
        let b = SearchBounds::default();
        assert!(mixed_prime_family(3, 3, 6, &b).is_err()); // equal primes
        assert!(mixed_prime_family(5, 3, 5, &b).is_err()); // n < 2q
    }
}
