//! Fixed divisors, image primitivity, p-adic valuations over residue classes,
//! and indispensability witnesses.
//!
//! The fixed divisor of g is gcd{g(a) : a in Z}, and it already equals the gcd
//! of the deg(g)+1 values g(0), ..., g(deg g). All computations here work on
//! factored products without expanding them, folding each value into the
//! running gcd modularly so that intermediates stay small.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{is_prime_u64, primes_up_to, trial_factor, val_p};
use crate::error::{Error, Result};
use crate::factored::FactoredIVP;
use crate::poly::{IntPoly, TermView};

pub const DEFAULT_K_MAX: u32 = 64;

/// Fixed divisor of a nonzero polynomial, as a positive integer.
pub fn fixed_divisor(g: &IntPoly) -> Result<BigUint> {
    fixed_divisor_product(&[(g, 1)])
}

/// Fixed divisor of a product given in factored form (factor, multiplicity).
/// The product is never expanded.
pub fn fixed_divisor_product(factors: &[(&IntPoly, u32)]) -> Result<BigUint> {
    let mut degree: usize = 0;
    for (g, m) in factors {
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        degree += g.degree().unwrap() * (*m as usize);
    }
    let eval_exact = |a: &BigInt| -> BigInt {
        let mut v = BigInt::one();
        for (g, m) in factors {
            v *= g.eval(a).pow(*m);
        }
        v
    };
    // Find the first window point with a nonzero value to seed the gcd.
    let mut d = BigUint::zero();
    let mut start = 0usize;
    for a in 0..=degree {
        let v = eval_exact(&BigInt::from(a));
        if !v.is_zero() {
            d = v.magnitude().clone();
            start = a;
            break;
        }
    }
    debug_assert!(
        !d.is_zero(),
        "a nonzero polynomial has a nonzero window value"
    );
    // Fold the remaining window values modulo the running gcd.
    let views: Vec<(TermView, u32)> = factors
        .iter()
        .map(|(g, m)| (TermView::new(g), *m))
        .collect();
    for a in 0..=degree {
        if a == start || d.is_one() {
            if d.is_one() {
                break;
            }
            continue;
        }
        let a_big = BigUint::from(a);
        let mut v = BigUint::zero();
        let mut first = true;
        for (view, m) in &views {
            let e = view.eval_mod(&a_big, &d);
            let e = if *m == 1 {
                e
            } else {
                e.modpow(&BigUint::from(*m), &d)
            };
            if first {
                v = e;
                first = false;
            } else {
                v = v * e % &d;
            }
        }
        d = d.gcd(&v);
    }
    Ok(d)
}

/// True iff the fixed divisor is 1.
pub fn is_image_primitive(g: &IntPoly) -> Result<bool> {
    Ok(fixed_divisor(g)?.is_one())
}

/// Membership in Int(Z): the denominator must divide the fixed divisor of the
/// (primitive) numerator.
pub fn is_member(f: &FactoredIVP) -> Result<bool> {
    let d = fixed_divisor_product(&f.numer_factors())?;
    Ok(d.is_multiple_of(f.denom()))
}

/// All primes <= deg g; for primitive g this is a superset of the primes that
/// can divide the fixed divisor.
pub fn prime_bound_candidates(g: &IntPoly) -> Result<Vec<u64>> {
    let deg = g.degree().ok_or(Error::ZeroPolynomial)?;
    Ok(primes_up_to(deg as u64))
}

/// Minimum p-adic valuation of g over a residue class t + p^j Z.
#[derive(Clone, Debug)]
pub struct ClassValuationQuery {
    pub g: IntPoly,
    pub p: u64,
    pub j: u32,
    pub t: BigUint,
}

impl ClassValuationQuery {
    pub fn new(g: IntPoly, p: u64, j: u32, t: BigUint) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        if j == 0 {
            return Err(Error::InvalidParams {
                what: "modulus exponent j must be >= 1".into(),
            });
        }
        let modulus = BigUint::from(p).pow(j);
        Ok(ClassValuationQuery {
            g,
            p,
            j,
            t: t % modulus,
        })
    }

    pub fn run(&self) -> Result<u64> {
        class_valuation_product(&[(&self.g, 1)], self.p, self.j, &self.t, DEFAULT_K_MAX)
    }
}

pub fn class_valuation(g: &IntPoly, p: u64, j: u32, t: &BigUint) -> Result<u64> {
    ClassValuationQuery::new(g.clone(), p, j, t.clone())?.run()
}

/// Exact min over b ≡ t (mod p^j) of val_p(∏ g_i(b)^{m_i}).
///
/// Iterative deepening on the modulus exponent. A subclass mod p^K decides a
/// factor once its value there is nonzero mod p^K (valuations below K are
/// constant on the subclass); subclasses whose undecided factors can no longer
/// beat the best fully-decided value are pruned. Refusing to answer past
/// `k_max` is a hard error, never a wrong value.
pub fn class_valuation_product(
    factors: &[(&IntPoly, u32)],
    p: u64,
    j: u32,
    t: &BigUint,
    k_max: u32,
) -> Result<u64> {
    for (g, _) in factors {
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
    }
    if factors.is_empty() {
        return Ok(0);
    }
    struct Node {
        w: BigUint,
        decided_sum: u64,
        undecided: Vec<usize>,
    }
    let views: Vec<(TermView, u32)> = factors
        .iter()
        .map(|(g, m)| (TermView::new(g), *m))
        .collect();
    let p_big = BigUint::from(p);
    let mut level: Vec<Node> = vec![Node {
        w: t.clone(),
        decided_sum: 0,
        undecided: (0..factors.len()).collect(),
    }];
    let mut best: Option<u64> = None;
    let mut k = j;
    while !level.is_empty() {
        if k > k_max {
            return Err(Error::DepthExceeded { p, k_max });
        }
        let modulus = p_big.pow(k);
        // word-size fast path: reduce each factor's terms mod p^k once per level
        let small = modulus.to_u64().map(|m_small| {
            views
                .iter()
                .map(|(view, _)| view.reduce_u64(m_small))
                .collect::<Vec<_>>()
        });
        // first settle every node of the level (so the pruning bound below
        // does not depend on processing order), then expand the survivors
        let mut pending: Vec<Node> = Vec::new();
        for mut node in level {
            let mut still = Vec::new();
            for &i in &node.undecided {
                let (view, m) = &views[i];
                let m = *m;
                let value_val = match &small {
                    Some(reduced) => {
                        let w = node.w.to_u64().expect("residue below a u64 modulus");
                        let v = reduced[i].eval(w);
                        if v == 0 {
                            None
                        } else {
                            let mut v = v;
                            let mut val = 0u64;
                            while v % p == 0 {
                                v /= p;
                                val += 1;
                            }
                            Some(val)
                        }
                    }
                    None => {
                        let value = view.eval_mod(&node.w, &modulus);
                        if value.is_zero() {
                            None
                        } else {
                            Some(val_p(&value, p))
                        }
                    }
                };
                match value_val {
                    None => still.push(i),
                    Some(v) => node.decided_sum += (m as u64) * v,
                }
            }
            if still.is_empty() {
                best = Some(match best {
                    None => node.decided_sum,
                    Some(b) => b.min(node.decided_sum),
                });
            } else {
                node.undecided = still;
                pending.push(node);
            }
        }
        let mut next: Vec<Node> = Vec::new();
        for node in pending {
            // everything undecided has valuation >= k on this subclass
            let lower_bound: u64 = node.decided_sum
                + node
                    .undecided
                    .iter()
                    .map(|&i| factors[i].1 as u64 * k as u64)
                    .sum::<u64>();
            if let Some(b) = best {
                if b <= lower_bound {
                    continue;
                }
            }
            let step = modulus.clone();
            for c in 0..p {
                next.push(Node {
                    w: &node.w + &step * BigUint::from(c),
                    decided_sum: node.decided_sum,
                    undecided: node.undecided.clone(),
                });
            }
        }
        level = next;
        k += 1;
    }
    Ok(best.expect("some subclass always decides"))
}

/// val_p of the fixed divisor, per residue class mod p: entry t is the class
/// valuation of g on t + pZ.
pub fn valuation_of_fixdiv_on_classes(g: &IntPoly, p: u64) -> Result<Vec<u64>> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    (0..p)
        .map(|t| class_valuation_product(&[(g, 1)], p, 1, &BigUint::from(t), DEFAULT_K_MAX))
        .collect()
}

/// Outcome of an indispensability search: the factor `index` is indispensable
/// for p among `family` iff a witness exists.
#[derive(Clone, Debug)]
pub struct IndispensabilityResult {
    pub index: usize,
    pub p: u64,
    pub witness: Option<BigUint>,
}

impl IndispensabilityResult {
    /// Re-check the defining valuation conditions at the stored witness.
    pub fn replay(&self, family: &[IntPoly]) -> bool {
        match &self.witness {
            None => true,
            Some(z) => {
                let z = BigInt::from_biguint(num_bigint::Sign::Plus, z.clone());
                let p = BigInt::from(self.p);
                family.iter().enumerate().all(|(i, g)| {
                    let v = g.eval(&z);
                    if i == self.index {
                        v.mod_floor(&p).is_zero()
                    } else {
                        !v.mod_floor(&p).is_zero()
                    }
                })
            }
        }
    }
}

/// Search for a witness z with val_p(g_k(z)) > 0 and val_p(g_i(z)) = 0 for all
/// other family members. All conditions only depend on z mod p, so scanning one
/// period suffices (a property test pits this against a wider brute scan).
pub fn indispensable(family: &[IntPoly], index: usize, p: u64) -> Result<IndispensabilityResult> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    if index >= family.len() {
        return Err(Error::InvalidParams {
            what: format!(
                "index {} out of range for family of {}",
                index,
                family.len()
            ),
        });
    }
    for g in family {
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !g.is_primitive() {
            return Err(Error::InvalidParams {
                what: format!("family member {} is not primitive", g),
            });
        }
    }
    let p_int = BigInt::from(p);
    let witness = (0..p).map(BigInt::from).find(|z| {
        family.iter().enumerate().all(|(i, g)| {
            let divisible = g.eval(z).mod_floor(&p_int).is_zero();
            if i == index {
                divisible
            } else {
                !divisible
            }
        })
    });
    Ok(IndispensabilityResult {
        index,
        p,
        witness: witness.map(|z| z.to_biguint().unwrap()),
    })
}

/// Shared fixed-divisor context for sub-products of one factor table.
///
/// `support` is a superset of every prime that can divide the fixed divisor of
/// any sub-product (fixed divisors multiply into the fixed divisor of the full
/// product, so the full product's support bounds them all). With the support
/// known, each sub-product's fixed divisor is assembled from per-prime class
/// valuations instead of another full gcd window.
pub(crate) struct ProductEnv {
    pub table: Vec<IntPoly>,
    pub support: Vec<u64>,
    pub k_max: u32,
    memo: HashMap<Vec<u32>, BigUint>,
}

impl ProductEnv {
    pub fn new(table: Vec<IntPoly>, support: Vec<u64>, k_max: u32) -> Self {
        ProductEnv {
            table,
            support,
            k_max,
            memo: HashMap::new(),
        }
    }

    /// Build an environment for sub-products of `factors`, computing the full
    /// product's fixed divisor once to learn the prime support.
    pub fn for_product(factors: &[(&IntPoly, u32)], k_max: u32) -> Result<(Self, BigUint)> {
        let full = fixed_divisor_product(factors)?;
        let degree: usize = factors
            .iter()
            .map(|(g, m)| g.degree().unwrap_or(0) * *m as usize)
            .sum();
        let (small, rest) = trial_factor(&full, &primes_up_to(degree as u64));
        if !rest.is_one() {
            return Err(Error::InvalidParams {
                what: format!("fixed divisor {} has a prime factor above the degree bound; numerator is not primitive", full),
            });
        }
        let support = small.into_iter().map(|(p, _)| p).collect();
        let table = factors.iter().map(|(g, _)| (*g).clone()).collect();
        Ok((ProductEnv::new(table, support, k_max), full))
    }

    /// Exact fixed divisor of the sub-product described by `counts`
    /// (multiplicity per table entry; entries may exceed the original
    /// multiset, which interchange products rely on).
    pub fn fixdiv_counts(&mut self, counts: &[u32]) -> Result<BigUint> {
        debug_assert_eq!(counts.len(), self.table.len());
        if let Some(hit) = self.memo.get(counts) {
            return Ok(hit.clone());
        }
        let factors: Vec<(&IntPoly, u32)> = self
            .table
            .iter()
            .zip(counts.iter())
            .filter(|(_, &c)| c > 0)
            .map(|(g, &c)| (g, c))
            .collect();
        let mut d = BigUint::one();
        if !factors.is_empty() {
            for &p in &self.support {
                let mut min_val = u64::MAX;
                for t in 0..p {
                    let v = class_valuation_product(&factors, p, 1, &BigUint::from(t), self.k_max)?;
                    min_val = min_val.min(v);
                    if min_val == 0 {
                        break;
                    }
                }
                if min_val > 0 {
                    d *= BigUint::from(p)
                        .pow(min_val.to_u32().expect("valuation fits u32 at desk scale"));
                }
            }
        }
        self.memo.insert(counts.to_vec(), d.clone());
        Ok(d)
    }
}
