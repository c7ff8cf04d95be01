//! Parametric generators for elements of Int(Z) with prescribed factorization
//! behaviour of their powers, plus machine verifiers for the general lemmas
//! those constructions instantiate.
//!
//! Every generator replays its own arithmetic conditions (exact minimum class
//! valuations, irreducibility, the advertised power factorization) before
//! returning; a generator that cannot verify itself fails loudly.

mod constructions;
mod lemmas;
mod pattern;
mod replacements;

pub use constructions::{
    mixed_prime_family, same_length_family, same_length_split_family, two_prime_family,
    varied_length_family, MixedPrimeFamily, SameLengthFamily, SameLengthParams, SplitFamily,
    TwoPrimeFamily, VariedLengthFamily,
};
pub use lemmas::{
    apply_class_split, apply_deep_roots, apply_interchange, find_interchangeable,
    subset_counts_for, ClassSplitOutcome, DeepRootsOutcome, InterchangeablePair,
};
pub use pattern::{enumerate_pattern_triples, pattern_family, PatternFamily, PatternTriple};
pub use replacements::{overlap_family, replacement_polys, OverlapFamily};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::irred::CertifyOptions;
use crate::powfact::EnumerateOptions;

/// Caps for the searches the generators run.
#[derive(Clone, Debug)]
pub struct SearchBounds {
    /// Progression terms to scan per prime search.
    pub prime_candidates: usize,
    /// Candidates to scan per root slot.
    pub root_candidates: usize,
    /// Offsets to try per replacement polynomial.
    pub replacement_attempts: u32,
    /// Modulus-deepening rounds for replacements.
    pub replacement_rounds: u32,
    /// Refuse constructions whose numerator degree would exceed this.
    pub max_degree: u64,
    /// Optional directory memoizing prime-search results across runs.
    pub cache_dir: Option<std::path::PathBuf>,
    pub certify: CertifyOptions,
    pub enumerate: EnumerateOptions,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            prime_candidates: 500_000,
            root_candidates: 5_000_000,
            replacement_attempts: 500,
            replacement_rounds: 4,
            max_degree: 200_000,
            cache_dir: None,
            certify: CertifyOptions::default(),
            enumerate: EnumerateOptions::default(),
        }
    }
}

/// Prime search through an arithmetic progression, memoized in the optional
/// cache directory. Cached entries are revalidated against the query (prime,
/// right residue, above the bound) before use.
pub(crate) fn find_prime(
    residue: &BigUint,
    modulus: &BigUint,
    lower: &BigUint,
    bounds: &SearchBounds,
) -> Result<BigUint> {
    use std::io::Write;
    let key = format!("{} {} {}", residue, modulus, lower);
    let cache_file = bounds.cache_dir.as_ref().map(|d| d.join("primes.txt"));
    if let Some(path) = &cache_file {
        if let Ok(text) = std::fs::read_to_string(path) {
            for line in text.lines() {
                if let Some(rest) = line.strip_prefix(&key).and_then(|r| r.strip_prefix(' ')) {
                    if let Ok(p) = rest.trim().parse::<BigUint>() {
                        let valid =
                            crate::arith::is_prime(&p) && &(&p % modulus) == residue && &p > lower;
                        if valid {
                            return Ok(p);
                        }
                    }
                }
            }
        }
    }
    let p = crate::arith::prime_in_progression(residue, modulus, lower, bounds.prime_candidates)?;
    if let Some(path) = &cache_file {
        if let Some(dir) = path.parent() {
            let _ = std::fs::create_dir_all(dir);
        }
        if let Ok(mut file) = std::fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
        {
            let _ = writeln!(file, "{} {}", key, p);
        }
    }
    Ok(p)
}

/// p^(n-1) * (p-1), the exponent every h in these families is built around.
pub(crate) fn unit_group_exponent(p: u64, n: u32, bounds: &SearchBounds) -> Result<u64> {
    let pow = (p as u128).checked_pow(n - 1).ok_or(Error::InvalidParams {
        what: "p^(n-1) overflows".into(),
    })?;
    let e = pow.checked_mul(p as u128 - 1).ok_or(Error::InvalidParams {
        what: "p^(n-1)(p-1) overflows".into(),
    })?;
    if e > bounds.max_degree as u128 {
        return Err(Error::InvalidParams {
            what: format!(
                "construction degree {} exceeds the configured limit {}",
                e, bounds.max_degree
            ),
        });
    }
    Ok(e as u64)
}

/// Congruence profile for one root slot.
#[derive(Clone, Debug)]
pub(crate) struct RootSpec {
    /// (modulus, required residue); moduli are pairwise coprime in all uses.
    pub congruences: Vec<(BigUint, BigUint)>,
    /// Primes that must not divide the root.
    pub avoid_primes: Vec<u64>,
}

/// Smallest positive integer matching the profile and not in `exclude`.
pub(crate) fn find_root(
    spec: &RootSpec,
    exclude: &[BigInt],
    max_candidates: usize,
) -> Result<BigInt> {
    let (step, residue) = spec
        .congruences
        .first()
        .map(|(m, r)| (m.clone(), r.clone()))
        .unwrap_or((BigUint::from(1u32), BigUint::zero()));
    let mut candidate = if residue.is_zero() {
        step.clone()
    } else {
        residue
    };
    for _ in 0..max_candidates {
        let ok_congruences = spec
            .congruences
            .iter()
            .skip(1)
            .all(|(m, r)| &candidate % m == *r);
        if ok_congruences {
            let value = BigInt::from_biguint(num_bigint::Sign::Plus, candidate.clone());
            let ok_avoid = spec
                .avoid_primes
                .iter()
                .all(|&l| !value.mod_floor(&BigInt::from(l)).is_zero());
            if ok_avoid && !exclude.contains(&value) {
                return Ok(value);
            }
        }
        candidate += &step;
    }
    Err(Error::SearchExhausted {
        what: format!("no admissible root within {} candidates", max_candidates),
    })
}
