//! Pattern elements: s "square-class" pieces c_i, t "non-square-class" pieces
//! d_i and n controlled roots over p^n. Every factorization of the element
//! corresponds to a triple (set partition of the roots, injection into the
//! c's, injection into the d's) and has length s + t - (number of blocks).

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::arith::primes_up_to;
use crate::error::{Error, Result};
use crate::factored::{CertPolicy, FactoredIVP, Sign};
use crate::fixdiv::is_member;
use crate::irred::{is_irreducible_intz_with, IntZOptions};
use crate::poly::IntPoly;
use crate::powfact::{verify_factorization, Factorization};

use super::{find_root, unit_group_exponent, RootSpec, SearchBounds};

#[derive(Clone, Debug)]
pub struct PatternFamily {
    pub element: FactoredIVP,
    pub c: Vec<IntPoly>,
    pub d: Vec<IntPoly>,
    pub c_primes: Vec<BigUint>,
    pub d_primes: Vec<BigUint>,
    pub roots: Vec<BigInt>,
    pub p: u64,
    pub n: u32,
    pub s: u32,
    pub t: u32,
    bounds: SearchBounds,
}

/// One factorization pattern: a partition of the root indices into blocks,
/// plus injections assigning a c and a d to each block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternTriple {
    pub blocks: Vec<Vec<usize>>,
    pub theta: Vec<usize>,
    pub sigma: Vec<usize>,
}

pub fn pattern_family(
    p: u64,
    n: u32,
    s: u32,
    t: u32,
    bounds: &SearchBounds,
) -> Result<PatternFamily> {
    if !crate::arith::is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Err(Error::InvalidParams {
            what: "p must be an odd prime".into(),
        });
    }
    if n < 2 || s < 2 || t < 2 {
        return Err(Error::InvalidParams {
            what: "n, s and t must all exceed 1".into(),
        });
    }
    let e = unit_group_exponent(p, n, bounds)?;
    let modulus = BigUint::from(p).pow(n + 1);
    let lower = BigUint::from(e + n as u64);
    let mut c_primes = Vec::with_capacity(s as usize);
    let mut last = lower.clone();
    for _ in 0..s {
        let q = super::find_prime(&BigUint::one(), &modulus, &last, bounds)?;
        last = q.clone();
        c_primes.push(q);
    }
    let mut d_primes = Vec::with_capacity(t as usize);
    let mut last = lower.clone();
    let minus_one = &modulus - BigUint::one();
    for _ in 0..t {
        let r = super::find_prime(&minus_one, &modulus, &last, bounds)?;
        last = r.clone();
        d_primes.push(r);
    }
    let half = (e / 2) as usize;
    let make = |q: &BigUint| {
        let mut coeffs = vec![BigInt::from(0); half + 1];
        coeffs[0] = -BigInt::from_biguint(num_bigint::Sign::Plus, q.clone());
        coeffs[half] = BigInt::one();
        IntPoly::new(coeffs)
    };
    let c: Vec<IntPoly> = c_primes.iter().map(&make).collect();
    let d: Vec<IntPoly> = d_primes.iter().map(&make).collect();
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
    let mut raw: Vec<(IntPoly, u32)> = Vec::new();
    raw.extend(c.iter().map(|g| (g.clone(), 1)));
    raw.extend(d.iter().map(|g| (g.clone(), 1)));
    raw.extend(roots.iter().map(|a| (IntPoly::x_minus(a), 1)));
    let element = FactoredIVP::canonicalize(
        Sign::Pos,
        BigUint::from(p).pow(n),
        raw,
        CertPolicy::Require,
        &bounds.certify,
    )?;
    if !is_member(&element)? {
        return Err(Error::SelfCheck {
            what: "pattern element is not integer-valued".into(),
        });
    }
    Ok(PatternFamily {
        element,
        c,
        d,
        c_primes,
        d_primes,
        roots,
        p,
        n,
        s,
        t,
        bounds: bounds.clone(),
    })
}

/// Set partitions of {0..n-1} via restricted growth strings, blocks listed by
/// their smallest element.
fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn rec(i: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == rgs.len() {
            let blocks_count = max + 1;
            let mut blocks = vec![Vec::new(); blocks_count];
            for (idx, &b) in rgs.iter().enumerate() {
                blocks[b].push(idx);
            }
            out.push(blocks);
            return;
        }
        for b in 0..=max + 1 {
            rgs[i] = b;
            rec(i + 1, max.max(b), rgs, out);
        }
    }
    if n == 0 {
        return out;
    }
    rgs[0] = 0;
    rec(1, 0, &mut rgs, &mut out);
    out
}

/// Ordered arrangements of k distinct values out of 0..n-1.
fn injections(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !cur.contains(&v) {
                cur.push(v);
                rec(n, k, cur, out);
                cur.pop();
            }
        }
    }
    rec(n, k, &mut cur, &mut out);
    out
}

/// Every triple with its induced factorization of the pattern element. Each
/// block part is checked irreducible and each factorization is verified to
/// multiply back and to have length s + t - (block count).
pub fn enumerate_pattern_triples(
    fam: &PatternFamily,
) -> Result<Vec<(PatternTriple, Factorization)>> {
    let bounds = &fam.bounds;
    let intz = IntZOptions {
        k_max: bounds.enumerate.k_max,
        partition_cap: bounds.enumerate.partition_cap,
    };
    let n = fam.n as usize;
    let s = fam.s as usize;
    let t = fam.t as usize;
    let mut out = Vec::new();
    for blocks in set_partitions(n) {
        let m = blocks.len();
        if m > s.min(t) {
            continue;
        }
        for theta in injections(s, m) {
            for sigma in injections(t, m) {
                let mut parts = Vec::with_capacity(s + t - m);
                for (i, block) in blocks.iter().enumerate() {
                    let mut raw = vec![
                        (fam.c[theta[i]].clone(), 1u32),
                        (fam.d[sigma[i]].clone(), 1u32),
                    ];
                    for &j in block {
                        raw.push((IntPoly::x_minus(&fam.roots[j]), 1));
                    }
                    let part = FactoredIVP::canonicalize(
                        Sign::Pos,
                        BigUint::from(fam.p).pow(block.len() as u32),
                        raw,
                        CertPolicy::Require,
                        &bounds.certify,
                    )?;
                    let report = is_irreducible_intz_with(&part, &intz)?;
                    if !report.verdict.is_irreducible() {
                        return Err(Error::SelfCheck {
                            what: format!("pattern part {} is not irreducible", part),
                        });
                    }
                    parts.push(part);
                }
                for (j, g) in fam.c.iter().enumerate() {
                    if !theta.contains(&j) {
                        parts.push(FactoredIVP::canonicalize(
                            Sign::Pos,
                            BigUint::one(),
                            vec![(g.clone(), 1)],
                            CertPolicy::Require,
                            &bounds.certify,
                        )?);
                    }
                }
                for (j, g) in fam.d.iter().enumerate() {
                    if !sigma.contains(&j) {
                        parts.push(FactoredIVP::canonicalize(
                            Sign::Pos,
                            BigUint::one(),
                            vec![(g.clone(), 1)],
                            CertPolicy::Require,
                            &bounds.certify,
                        )?);
                    }
                }
                let fact = Factorization::new(parts);
                if fact.length() != s + t - m {
                    return Err(Error::SelfCheck {
                        what: format!(
                            "pattern factorization length {} differs from s+t-m = {}",
                            fact.length(),
                            s + t - m
                        ),
                    });
                }
                if !verify_factorization(&fam.element, &fact) {
                    return Err(Error::SelfCheck {
                        what: "pattern factorization does not multiply back".into(),
                    });
                }
                out.push((
                    PatternTriple {
                        blocks: blocks.clone(),
                        theta: theta.clone(),
                        sigma: sigma.clone(),
                    },
                    fact,
                ));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_partition_counts_are_bell_numbers() {
        assert_eq!(set_partitions(1).len(), 1);
        assert_eq!(set_partitions(2).len(), 2);
        assert_eq!(set_partitions(3).len(), 5);
        assert_eq!(set_partitions(4).len(), 15);
    }

    #[test]
    fn injection_counts() {
        assert_eq!(injections(2, 1).len(), 2);
        assert_eq!(injections(2, 2).len(), 2);
        assert_eq!(injections(3, 2).len(), 6);
    }

    #[test]
    fn pattern_3_2_2_2_primes() {
        let fam = pattern_family(3, 2, 2, 2, &SearchBounds::default()).unwrap();
        assert_eq!(
            fam.c_primes,
            vec![BigUint::from(109u32), BigUint::from(163u32)]
        );
        assert_eq!(
            fam.d_primes,
            vec![BigUint::from(53u32), BigUint::from(107u32)]
        );
        assert_eq!(fam.roots, vec![BigInt::from(3), BigInt::from(39)]);
    }

    #[test]
    fn pattern_3_2_2_2_has_eight_triples() {
        let fam = pattern_family(3, 2, 2, 2, &SearchBounds::default()).unwrap();
        let triples = enumerate_pattern_triples(&fam).unwrap();
        assert_eq!(triples.len(), 8);
        for (triple, fact) in &triples {
            assert_eq!(fact.length(), 4 - triple.blocks.len());
        }
    }

    #[test]
    fn pattern_rejects_small_parameters() {
        let b = SearchBounds::default();
        assert!(pattern_family(3, 2, 1, 2, &b).is_err());
        assert!(pattern_family(3, 1, 2, 2, &b).is_err());
        assert!(pattern_family(2, 2, 2, 2, &b).is_err());
    }
}
