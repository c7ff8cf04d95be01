//! Integer helpers: primality, sieves, p-adic valuations, trial factorization,
//! and prime searches along arithmetic progressions.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Deterministic Miller-Rabin witnesses, valid for all n < 3.3 * 10^24.
const MR_BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

pub(crate) fn mulmod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn powmod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u64 = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod_u64(acc, base, m);
        }
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for &a in MR_BASES.iter() {
        let mut x = powmod_u64(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primality for arbitrary-precision candidates. Below 2^64 this defers to the
/// deterministic word-size test; above, Miller-Rabin with the fixed witness set
/// (deterministic for n < 3.3e24, far past anything the searches here reach).
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    if n.is_even() {
        return false;
    }
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &a in MR_BASES.iter() {
        let a = BigUint::from(a);
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All primes <= n, ascending.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| if b { Some(i as u64) } else { None })
        .collect()
}

/// Exact p-adic valuation of a nonzero natural number.
pub fn val_p(n: &BigUint, p: u64) -> u64 {
    debug_assert!(!n.is_zero());
    let p = BigUint::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if r.is_zero() {
            v += 1;
            n = q;
        } else {
            return v;
        }
    }
}

/// Split n into prime factors found by trial division over `primes`,
/// plus the remaining cofactor.
pub fn trial_factor(n: &BigUint, primes: &[u64]) -> (Vec<(u64, u64)>, BigUint) {
    let mut n = n.clone();
    let mut out = Vec::new();
    for &p in primes {
        if n.is_one() {
            break;
        }
        let v = val_p(&n, p);
        if v > 0 {
            out.push((p, v));
            n /= BigUint::from(p).pow(v as u32);
        }
    }
    (out, n)
}

/// Smallest prime q with q ≡ residue (mod modulus) and q > lower, scanning at
/// most `max_candidates` progression terms.
pub fn prime_in_progression(
    residue: &BigUint,
    modulus: &BigUint,
    lower: &BigUint,
    max_candidates: usize,
) -> Result<BigUint> {
    let mut candidate = residue.clone();
    if candidate.is_zero() {
        candidate = modulus.clone();
    }
    while candidate <= *lower {
        candidate += modulus;
    }
    for _ in 0..max_candidates {
        if is_prime(&candidate) {
            return Ok(candidate);
        }
        candidate += modulus;
    }
    Err(Error::SearchExhausted {
        what: format!(
            "no prime ≡ {} mod {} above {} within {} candidates",
            residue, modulus, lower, max_candidates
        ),
    })
}
