//! Machine verifiers for the generalization lemmas: interchangeable subsets
//! and the two valuation-driven power-splitting constructions.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{primes_up_to, trial_factor};
use crate::error::{Error, Result};
use crate::factored::{FactoredIVP, Sign};
use crate::fixdiv::{class_valuation_product, ProductEnv};
use crate::irred::{is_irreducible_intz_with, part_from_counts, IntZOptions};
use crate::poly::IntPoly;
use crate::powfact::{
    essentially_same, refine_to_irreducibles, trivial_power_factorization, verify_factorization,
    EnumerateOptions, Factorization,
};

/// Disjoint nonempty proper sub-multisets J1, J2 of the factor multiset of an
/// irreducible f = Π g_i / b such that swapping them between two copies of f
/// preserves both fixed divisors (= b). Element-disjoint pairs yield
/// essentially different factorizations of f^2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterchangeablePair {
    /// Multiplicity vectors relative to the element's distinct factor list.
    pub j1: Vec<u32>,
    pub j2: Vec<u32>,
    /// The common fixed divisor of both swapped products (equals the denominator).
    pub fixdiv: BigUint,
    /// Whether the underlying polynomial sets are disjoint.
    pub element_disjoint: bool,
}

fn intz_opts(opts: &EnumerateOptions) -> IntZOptions {
    IntZOptions {
        k_max: opts.k_max,
        partition_cap: opts.partition_cap,
    }
}

fn require_irreducible(f: &FactoredIVP, opts: &EnumerateOptions) -> Result<()> {
    let report = is_irreducible_intz_with(f, &intz_opts(opts))?;
    if !report.verdict.is_irreducible() {
        return Err(Error::InvalidParams {
            what: format!("{} is not irreducible in Int(Z)", f),
        });
    }
    Ok(())
}

/// Translate a sub-multiset given as polynomial factors into a multiplicity
/// vector relative to f's distinct factor list.
pub fn subset_counts_for(f: &FactoredIVP, take: &[(IntPoly, u32)]) -> Result<Vec<u32>> {
    let entries = f.factor_entries();
    let mut counts = vec![0u32; entries.len()];
    for (poly, mult) in take {
        let (_, prim) = poly.primitive_part()?.1.normalize_sign();
        let idx =
            entries
                .iter()
                .position(|e| e.poly == prim)
                .ok_or_else(|| Error::InvalidParams {
                    what: format!("{} is not a factor of {}", poly, f),
                })?;
        counts[idx] += mult;
        if counts[idx] > entries[idx].mult {
            return Err(Error::InvalidParams {
                what: format!("multiplicity of {} exceeds its multiplicity in {}", poly, f),
            });
        }
    }
    Ok(counts)
}

fn counts_of(f: &FactoredIVP) -> Vec<u32> {
    f.factor_entries().iter().map(|e| e.mult).collect()
}

fn env_for(f: &FactoredIVP, opts: &EnumerateOptions) -> Result<ProductEnv> {
    let (env, _) = ProductEnv::for_product(&f.numer_factors(), opts.k_max)?;
    Ok(env)
}

/// All interchangeable pairs of f (which must be irreducible), each flagged
/// element-disjoint or not. Deterministic lexicographic order.
pub fn find_interchangeable(
    f: &FactoredIVP,
    opts: &EnumerateOptions,
) -> Result<Vec<InterchangeablePair>> {
    require_irreducible(f, opts)?;
    let slots = f.slots();
    if slots > opts.slot_cap {
        return Err(Error::TooLarge {
            slots,
            cap: opts.slot_cap,
        });
    }
    let counts = counts_of(f);
    let b = f.denom().clone();
    let mut env = env_for(f, opts)?;
    let n = counts.len();
    // enumerate ordered pairs of disjoint nonempty sub-multisets, keep j1 <= j2
    let mut subs: Vec<Vec<u32>> = Vec::new();
    let mut cur = vec![0u32; n];
    loop {
        let mut i = n;
        loop {
            if i == 0 {
                subs.retain(|s| s.iter().any(|&c| c > 0));
                let mut pairs = Vec::new();
                for a in 0..subs.len() {
                    for bidx in a..subs.len() {
                        let (j1, j2) = (&subs[a], &subs[bidx]);
                        if j1.iter().zip(j2).zip(&counts).any(|((x, y), c)| x + y > *c) {
                            continue;
                        }
                        let swapped1: Vec<u32> = counts
                            .iter()
                            .zip(j1)
                            .zip(j2)
                            .map(|((c, x), y)| c - y + x)
                            .collect();
                        let d1 = env.fixdiv_counts(&swapped1)?;
                        if d1 != b {
                            continue;
                        }
                        let swapped2: Vec<u32> = counts
                            .iter()
                            .zip(j1)
                            .zip(j2)
                            .map(|((c, x), y)| c - x + y)
                            .collect();
                        let d2 = env.fixdiv_counts(&swapped2)?;
                        if d2 != b {
                            continue;
                        }
                        let element_disjoint = !j1.iter().zip(j2).any(|(x, y)| *x > 0 && *y > 0);
                        pairs.push(InterchangeablePair {
                            j1: j1.clone(),
                            j2: j2.clone(),
                            fixdiv: b.clone(),
                            element_disjoint,
                        });
                    }
                }
                return Ok(pairs);
            }
            i -= 1;
            if cur[i] < counts[i] {
                cur[i] += 1;
                for v in cur.iter_mut().skip(i + 1) {
                    *v = 0;
                }
                break;
            }
        }
        if cur != counts {
            subs.push(cur.clone());
        }
    }
}

/// Replay an interchangeable pair's defining fixed-divisor equalities.
pub fn replay_interchange(
    f: &FactoredIVP,
    pair: &InterchangeablePair,
    opts: &EnumerateOptions,
) -> Result<bool> {
    let counts = counts_of(f);
    let mut env = env_for(f, opts)?;
    let swapped1: Vec<u32> = counts
        .iter()
        .zip(&pair.j1)
        .zip(&pair.j2)
        .map(|((c, x), y)| c.checked_sub(*y).map(|v| v + x))
        .collect::<Option<Vec<u32>>>()
        .ok_or_else(|| Error::InvalidParams {
            what: "pair does not fit the factor multiset".into(),
        })?;
    let swapped2: Vec<u32> = counts
        .iter()
        .zip(&pair.j1)
        .zip(&pair.j2)
        .map(|((c, x), y)| c - x + y)
        .collect();
    Ok(env.fixdiv_counts(&swapped1)? == *f.denom() && env.fixdiv_counts(&swapped2)? == *f.denom())
}

/// The swap factorization of f^k induced by an element-disjoint
/// interchangeable pair: the two swapped blocks over b, plus k-2 copies of f,
/// refined to irreducibles.
pub fn apply_interchange(
    f: &FactoredIVP,
    pair: &InterchangeablePair,
    k: u32,
    opts: &EnumerateOptions,
) -> Result<Factorization> {
    if k < 2 {
        return Err(Error::InvalidParams {
            what: "power must be at least 2".into(),
        });
    }
    if !pair.element_disjoint {
        return Err(Error::InvalidParams {
            what: "the pair must be element-disjoint".into(),
        });
    }
    if !replay_interchange(f, pair, opts)? {
        return Err(Error::Hypothesis {
            what: "pair fails replay: swapped fixed divisors do not both equal b".into(),
        });
    }
    let counts = counts_of(f);
    let swapped1: Vec<u32> = counts
        .iter()
        .zip(&pair.j1)
        .zip(&pair.j2)
        .map(|((c, x), y)| c - y + x)
        .collect();
    let swapped2: Vec<u32> = counts
        .iter()
        .zip(&pair.j1)
        .zip(&pair.j2)
        .map(|((c, x), y)| c - x + y)
        .collect();
    let left = part_from_counts(f.factor_entries(), &swapped1, f.denom().clone(), Sign::Pos);
    let right = part_from_counts(f.factor_entries(), &swapped2, f.denom().clone(), Sign::Pos);
    let mut parts = Vec::new();
    parts.extend(refine_to_irreducibles(&left, opts)?);
    parts.extend(refine_to_irreducibles(&right, opts)?);
    for _ in 0..k - 2 {
        parts.push(f.clone());
    }
    let fact = Factorization::new(parts);
    let power = f.pow(k);
    if !verify_factorization(&power, &fact) {
        return Err(Error::SelfCheck {
            what: "swap factorization does not multiply back to f^k".into(),
        });
    }
    if essentially_same(&fact, &trivial_power_factorization(f, k)) {
        return Err(Error::SelfCheck {
            what: "swap factorization is essentially trivial".into(),
        });
    }
    Ok(fact)
}

#[derive(Clone, Debug)]
pub struct DeepRootsOutcome {
    /// The exponent n+1 that was factored (n = max prime exponent of b).
    pub power: u32,
    pub factorization: Factorization,
}

/// Power factorization from uniformly deep root classes: if for every prime p
/// dividing b, every root class s mod p of the chosen sub-product has class
/// valuation strictly above e_p = val_p(b), then f^(n+1) (n the largest e_p)
/// splits off the sub-product as an integer-polynomial part.
pub fn apply_deep_roots(
    f: &FactoredIVP,
    subset: &[u32],
    opts: &EnumerateOptions,
) -> Result<DeepRootsOutcome> {
    require_irreducible(f, opts)?;
    let counts = counts_of(f);
    validate_subset(&counts, subset)?;
    let entries = f.factor_entries();
    let sub_factors: Vec<(&IntPoly, u32)> = entries
        .iter()
        .zip(subset)
        .filter(|(_, &c)| c > 0)
        .map(|(e, &c)| (&e.poly, c))
        .collect();
    let b = f.denom();
    let degree = f.degree() as u64;
    let (b_factors, rest) = trial_factor(b, &primes_up_to(degree.max(2)));
    debug_assert!(rest.is_one());
    let mut n: u32 = 0;
    for &(p, e_p) in &b_factors {
        n = n.max(e_p.to_u32().expect("exponent fits"));
        for s in 0..p {
            let s_big = BigUint::from(s);
            let modulus = BigUint::from(p);
            let is_root = sub_factors
                .iter()
                .fold(BigUint::one(), |acc, (g, m)| {
                    acc * g
                        .eval_mod(&s_big, &modulus)
                        .modpow(&BigUint::from(*m), &modulus)
                        % &modulus
                })
                .is_zero();
            if !is_root {
                continue;
            }
            let v = class_valuation_product(&sub_factors, p, 1, &s_big, opts.k_max)?;
            if v <= e_p {
                return Err(Error::Hypothesis {
                    what: format!(
                        "root class {} mod {} has valuation {}, not above e_p = {}",
                        s, p, v, e_p
                    ),
                });
            }
        }
    }
    // f^(n+1) = [ (Π_J g)^n (Π_rest g)^(n+1) / b^(n+1) ] * Π_J g
    let left_counts: Vec<u32> = counts
        .iter()
        .zip(subset)
        .map(|(c, j)| n * j + (n + 1) * (c - j))
        .collect();
    let left_denom = b.pow(n + 1);
    // membership of the left part at each prime of b
    for &(p, e_p) in &b_factors {
        let left_factors: Vec<(&IntPoly, u32)> = entries
            .iter()
            .zip(&left_counts)
            .filter(|(_, &c)| c > 0)
            .map(|(e, &c)| (&e.poly, c))
            .collect();
        let mut min_val = u64::MAX;
        for t in 0..p {
            min_val = min_val.min(class_valuation_product(
                &left_factors,
                p,
                1,
                &BigUint::from(t),
                opts.k_max,
            )?);
        }
        if min_val < (n as u64 + 1) * e_p {
            return Err(Error::SelfCheck {
                what: format!(
                    "left part is not integer-valued at {}: valuation {} < {}",
                    p,
                    min_val,
                    (n as u64 + 1) * e_p
                ),
            });
        }
    }
    let left = part_from_counts(entries, &left_counts, left_denom, Sign::Pos);
    let right = part_from_counts(entries, subset, BigUint::one(), Sign::Pos);
    let mut parts = refine_to_irreducibles(&left, opts)?;
    parts.extend(refine_to_irreducibles(&right, opts)?);
    let fact = Factorization::new(parts);
    let power = f.pow(n + 1);
    if !verify_factorization(&power, &fact) {
        return Err(Error::SelfCheck {
            what: "deep-roots factorization does not multiply back".into(),
        });
    }
    if essentially_same(&fact, &trivial_power_factorization(f, n + 1)) {
        return Err(Error::SelfCheck {
            what: "deep-roots factorization is essentially trivial".into(),
        });
    }
    Ok(DeepRootsOutcome {
        power: n + 1,
        factorization: fact,
    })
}

#[derive(Clone, Debug)]
pub struct ClassSplitOutcome {
    pub p: u64,
    pub n: u32,
    /// Common valuation on the shallow classes.
    pub e: u64,
    /// Minimum valuation over the deep classes.
    pub m: u64,
    /// The power m - e that acquires the new factorization.
    pub power: u32,
    pub deep_classes: Vec<u64>,
    pub shallow_classes: Vec<u64>,
    pub factorization: Factorization,
}

/// Power factorization from a valuation split over residue classes mod p.
///
/// For f = Π g_i / p^n (n > 1) and a proper sub-multiset J, partition the
/// classes mod p into S (valuation of Π_J g above n) and T (common valuation
/// e with 1 <= e < n). If on every T-class the valuations of Π_J g and the
/// complement sum to at least n, then with m the minimum valuation over S,
/// f^(m-e) factors as [ (Π_J g)^(n-e) (Π_rest g)^(m-e) / p^((n-e)m) ] times
/// m-n copies of Π_J g / p^e.
pub fn apply_class_split(
    f: &FactoredIVP,
    subset: &[u32],
    opts: &EnumerateOptions,
) -> Result<ClassSplitOutcome> {
    require_irreducible(f, opts)?;
    let counts = counts_of(f);
    validate_subset(&counts, subset)?;
    let degree = f.degree() as u64;
    let (b_factors, rest) = trial_factor(f.denom(), &primes_up_to(degree.max(2)));
    if !rest.is_one() || b_factors.len() != 1 {
        return Err(Error::InvalidParams {
            what: "the denominator must be a prime power".into(),
        });
    }
    let (p, n64) = b_factors[0];
    let n = n64.to_u32().expect("exponent fits");
    if n < 2 {
        return Err(Error::InvalidParams {
            what: "the denominator exponent must exceed 1".into(),
        });
    }
    let entries = f.factor_entries();
    let sub_factors: Vec<(&IntPoly, u32)> = entries
        .iter()
        .zip(subset)
        .filter(|(_, &c)| c > 0)
        .map(|(e, &c)| (&e.poly, c))
        .collect();
    let rest_counts: Vec<u32> = counts.iter().zip(subset).map(|(c, j)| c - j).collect();
    let rest_factors: Vec<(&IntPoly, u32)> = entries
        .iter()
        .zip(&rest_counts)
        .filter(|(_, &c)| c > 0)
        .map(|(e, &c)| (&e.poly, c))
        .collect();
    let mut deep = Vec::new();
    let mut shallow = Vec::new();
    let mut shallow_vals = Vec::new();
    for t in 0..p {
        let v = class_valuation_product(&sub_factors, p, 1, &BigUint::from(t), opts.k_max)?;
        if v > n as u64 {
            deep.push((t, v));
        } else {
            shallow.push(t);
            shallow_vals.push(v);
        }
    }
    if shallow.is_empty() {
        return Err(Error::Hypothesis {
            what: "every class is deep; the shallow valuation e is undefined".into(),
        });
    }
    if deep.is_empty() {
        return Err(Error::Hypothesis {
            what: format!("no class has valuation above n = {}", n),
        });
    }
    let e = shallow_vals[0];
    if shallow_vals.iter().any(|&v| v != e) {
        return Err(Error::Hypothesis {
            what: format!("shallow classes have mixed valuations {:?}", shallow_vals),
        });
    }
    if e < 1 || e >= n as u64 {
        return Err(Error::Hypothesis {
            what: format!(
                "shallow valuation e = {} must satisfy 1 <= e < n = {}",
                e, n
            ),
        });
    }
    for &t in &shallow {
        let v_rest = if rest_factors.is_empty() {
            0
        } else {
            class_valuation_product(&rest_factors, p, 1, &BigUint::from(t), opts.k_max)?
        };
        if e + v_rest < n as u64 {
            return Err(Error::Hypothesis {
                what: format!(
                    "class {} mod {}: valuations {} + {} fall below n = {}",
                    t, p, e, v_rest, n
                ),
            });
        }
    }
    let m = deep.iter().map(|&(_, v)| v).min().unwrap();
    let k = (m - e).to_u32().expect("power fits");
    let n_u64 = n as u64;
    // left part: (Π_J g)^(n-e) (Π_rest g)^k / p^((n-e) m)
    let ne = (n_u64 - e).to_u32().unwrap();
    let left_counts: Vec<u32> = subset
        .iter()
        .zip(&rest_counts)
        .map(|(j, r)| ne * j + k * r)
        .collect();
    let left_denom = BigUint::from(p).pow(((n_u64 - e) * m).to_u32().expect("fits"));
    let left = part_from_counts(entries, &left_counts, left_denom, Sign::Pos);
    // membership check of the left part
    {
        let left_factors: Vec<(&IntPoly, u32)> = entries
            .iter()
            .zip(&left_counts)
            .filter(|(_, &c)| c > 0)
            .map(|(en, &c)| (&en.poly, c))
            .collect();
        let mut min_val = u64::MAX;
        for t in 0..p {
            min_val = min_val.min(class_valuation_product(
                &left_factors,
                p,
                1,
                &BigUint::from(t),
                opts.k_max,
            )?);
        }
        if min_val < (n_u64 - e) * m {
            return Err(Error::SelfCheck {
                what: format!(
                    "left part is not integer-valued: valuation {} < {}",
                    min_val,
                    (n_u64 - e) * m
                ),
            });
        }
    }
    let right = part_from_counts(
        entries,
        subset,
        BigUint::from(p).pow(e.to_u32().expect("fits")),
        Sign::Pos,
    );
    let mut parts = refine_to_irreducibles(&left, opts)?;
    let right_parts = refine_to_irreducibles(&right, opts)?;
    for _ in 0..(m - n_u64) {
        parts.extend(right_parts.iter().cloned());
    }
    let fact = Factorization::new(parts);
    let power = f.pow(k);
    if !verify_factorization(&power, &fact) {
        return Err(Error::SelfCheck {
            what: "class-split factorization does not multiply back".into(),
        });
    }
    if essentially_same(&fact, &trivial_power_factorization(f, k)) {
        return Err(Error::SelfCheck {
            what: "class-split factorization is essentially trivial".into(),
        });
    }
    Ok(ClassSplitOutcome {
        p,
        n,
        e,
        m,
        power: k,
        deep_classes: deep.into_iter().map(|(t, _)| t).collect(),
        shallow_classes: shallow,
        factorization: fact,
    })
}

fn validate_subset(counts: &[u32], subset: &[u32]) -> Result<()> {
    if subset.len() != counts.len() {
        return Err(Error::InvalidParams {
            what: "subset vector length does not match the factor list".into(),
        });
    }
    if subset.iter().all(|&c| c == 0) {
        return Err(Error::InvalidParams {
            what: "subset must be nonempty".into(),
        });
    }
    if subset.iter().zip(counts).any(|(j, c)| j > c) {
        return Err(Error::InvalidParams {
            what: "subset exceeds the factor multiset".into(),
        });
    }
    if subset == counts {
        return Err(Error::InvalidParams {
            what: "subset must be proper".into(),
        });
    }
    Ok(())
}
