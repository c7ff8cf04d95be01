//! Replacement polynomials: given monic f_i, find monic Q-irreducible F_i of
//! the same degrees, pairwise non-associated, such that swapping any subset of
//! the f_i for their F_i leaves every sub-product's fixed divisor unchanged.
//! The congruence F_i ≡ f_i mod M (M a deep enough prime-power product) guides
//! the search; the property itself is then verified exhaustively.

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::arith::val_p;
use crate::error::{Error, Result};
use crate::factored::{CertPolicy, FactoredIVP, Sign};
use crate::fixdiv::fixed_divisor_product;
use crate::irred::{certify_q_irreducible, is_irreducible_intz_with, CertifyFailure, IntZOptions};
use crate::poly::IntPoly;
use crate::powfact::{
    enumerate_factorizations_with, essentially_same, trivial_power_factorization,
    verify_factorization, Factorization,
};

use super::SearchBounds;

/// Verify the replacement property for every subset J of the index set and
/// every split of J into kept-f and swapped-F indices.
fn verify_replacement_property(
    originals: &[IntPoly],
    replacements: &[IntPoly],
) -> Result<Option<String>> {
    let k = originals.len();
    let masks = 1u32 << k;
    // fixed divisors of all pure-original sub-products
    let mut pure = vec![BigUint::one(); masks as usize];
    for mask in 1..masks {
        let factors: Vec<(&IntPoly, u32)> = (0..k)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| (&originals[i], 1))
            .collect();
        pure[mask as usize] = fixed_divisor_product(&factors)?;
    }
    for mask in 1..masks {
        // `swap` runs over nonempty sub-masks of `mask`: indices replaced by F
        let mut swap = mask;
        loop {
            let factors: Vec<(&IntPoly, u32)> = (0..k)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| {
                    if swap & (1 << i) != 0 {
                        (&replacements[i], 1)
                    } else {
                        (&originals[i], 1)
                    }
                })
                .collect();
            let mixed = fixed_divisor_product(&factors)?;
            if mixed != pure[mask as usize] {
                return Ok(Some(format!(
                    "subset mask {:#b}, swapped {:#b}: fixed divisor {} differs from {}",
                    mask, swap, mixed, pure[mask as usize]
                )));
            }
            if swap == 0 {
                break;
            }
            swap = (swap - 1) & mask;
            if swap == 0 {
                break;
            }
        }
    }
    Ok(None)
}

/// Construct the replacements. `relevant_primes` bounds the primes that can
/// interact with any sub-product's fixed divisor (primes up to the total
/// degree always suffice).
pub fn replacement_polys(
    originals: &[IntPoly],
    relevant_primes: &[u64],
    bounds: &SearchBounds,
) -> Result<Vec<IntPoly>> {
    if originals.is_empty() {
        return Err(Error::InvalidParams {
            what: "at least one polynomial is required".into(),
        });
    }
    if originals.len() > 12 {
        return Err(Error::InvalidParams {
            what: "replacement verification is exponential; at most 12 inputs".into(),
        });
    }
    for g in originals {
        if !g.is_monic() {
            return Err(Error::InvalidParams {
                what: format!("{} is not monic", g),
            });
        }
    }
    let all: Vec<(&IntPoly, u32)> = originals.iter().map(|g| (g, 1)).collect();
    let full = fixed_divisor_product(&all)?;
    for round in 0..bounds.replacement_rounds {
        // depth: one past the deepest valuation the full product reaches
        let mut modulus = BigInt::one();
        for &l in relevant_primes {
            let depth = val_p(&full, l) as u32 + 1 + round;
            modulus *= BigInt::from(l).pow(depth);
        }
        let mut replacements: Vec<IntPoly> = Vec::with_capacity(originals.len());
        let mut ok = true;
        for g in originals {
            let mut found = None;
            for c in 1..=bounds.replacement_attempts {
                let candidate = g.add(&IntPoly::constant(BigInt::from(c) * &modulus));
                if replacements.contains(&candidate) {
                    continue;
                }
                match certify_q_irreducible(&candidate, &bounds.certify) {
                    Ok(_) => {
                        found = Some(candidate);
                        break;
                    }
                    Err(CertifyFailure::Reducible { .. }) | Err(CertifyFailure::Inconclusive) => {}
                }
            }
            match found {
                Some(c) => replacements.push(c),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        match verify_replacement_property(originals, &replacements)? {
            None => return Ok(replacements),
            Some(_failure) => continue, // deepen the modulus and retry
        }
    }
    Err(Error::SearchExhausted {
        what: format!(
            "no replacement system found within {} modulus rounds",
            bounds.replacement_rounds
        ),
    })
}

#[derive(Clone, Debug)]
pub struct OverlapFamily {
    pub element: FactoredIVP,
    pub bases: [IntPoly; 3],
    pub replacements: [IntPoly; 3],
    pub residues: Vec<BigInt>,
    pub p: u64,
    /// The advertised length-3 factorization of f^2 from the pairwise products.
    pub displayed: Factorization,
}

/// Build the three-factor overlap element f = G1 G2 G3 / p^3 whose square has
/// the essentially different factorization (G1G2/p^2)(G2G3/p^2)(G3G1/p^2).
///
/// The G_i replace products of linear factors over a complete residue system
/// mod p (that avoids complete systems mod smaller primes), each G_i dropping
/// one pair of squared roots so that every value class is covered by exactly
/// two of any pair G_i G_j.
pub fn overlap_family(p: u64, bounds: &SearchBounds) -> Result<OverlapFamily> {
    if !crate::arith::is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    if p <= 3 {
        return Err(Error::InvalidParams {
            what: "p must exceed 3".into(),
        });
    }
    // complete residues mod p, avoiding residue 0 mod every smaller prime
    let smaller: Vec<u64> = crate::arith::primes_up_to(p - 1);
    let mut residues = Vec::with_capacity(p as usize);
    for k in 0..p {
        let spec = super::RootSpec {
            congruences: vec![(BigUint::from(p), BigUint::from(k))],
            avoid_primes: smaller.clone(),
        };
        residues.push(super::find_root(&spec, &residues, bounds.root_candidates)?);
    }
    let tail: Vec<IntPoly> = residues[3..].iter().map(IntPoly::x_minus).collect();
    let squared_pair = |i: usize, j: usize| -> IntPoly {
        let mut g = IntPoly::x_minus(&residues[i])
            .pow(2)
            .mul(&IntPoly::x_minus(&residues[j]).pow(2));
        for t in &tail {
            g = g.mul(t);
        }
        g
    };
    let bases = [squared_pair(1, 2), squared_pair(0, 2), squared_pair(0, 1)];
    let total_degree: u64 = 3 * (p + 1);
    let relevant = crate::arith::primes_up_to(total_degree);
    let replacements_vec = replacement_polys(&bases, &relevant, bounds)?;
    let replacements: [IntPoly; 3] = [
        replacements_vec[0].clone(),
        replacements_vec[1].clone(),
        replacements_vec[2].clone(),
    ];
    // the advertised exponent pattern of p in the fixed divisors
    for (i, g) in replacements.iter().enumerate() {
        let e = val_p(&fixed_divisor_product(&[(g, 1)])?, p);
        if e != 0 {
            return Err(Error::SelfCheck {
                what: format!("e_p(G_{}) = {}, expected 0", i + 1, e),
            });
        }
    }
    for (i, j) in [(0, 1), (1, 2), (0, 2)] {
        let e = val_p(
            &fixed_divisor_product(&[(&replacements[i], 1), (&replacements[j], 1)])?,
            p,
        );
        if e != 2 {
            return Err(Error::SelfCheck {
                what: format!("e_p(G_{} G_{}) = {}, expected 2", i + 1, j + 1, e),
            });
        }
    }
    let e_all = val_p(
        &fixed_divisor_product(&[
            (&replacements[0], 1),
            (&replacements[1], 1),
            (&replacements[2], 1),
        ])?,
        p,
    );
    if e_all != 3 {
        return Err(Error::SelfCheck {
            what: format!("e_p(G_1 G_2 G_3) = {}, expected 3", e_all),
        });
    }
    let element = FactoredIVP::canonicalize(
        Sign::Pos,
        BigUint::from(p).pow(3),
        replacements.iter().map(|g| (g.clone(), 1)).collect(),
        CertPolicy::Require,
        &bounds.certify,
    )?;
    let intz = IntZOptions {
        k_max: bounds.enumerate.k_max,
        partition_cap: bounds.enumerate.partition_cap,
    };
    if !is_irreducible_intz_with(&element, &intz)?
        .verdict
        .is_irreducible()
    {
        return Err(Error::SelfCheck {
            what: "overlap element is not irreducible".into(),
        });
    }
    let p2 = BigUint::from(p).pow(2);
    let mut parts = Vec::new();
    for (i, j) in [(0, 1), (1, 2), (0, 2)] {
        let part = FactoredIVP::canonicalize(
            Sign::Pos,
            p2.clone(),
            vec![(replacements[i].clone(), 1), (replacements[j].clone(), 1)],
            CertPolicy::Require,
            &bounds.certify,
        )?;
        if !is_irreducible_intz_with(&part, &intz)?
            .verdict
            .is_irreducible()
        {
            return Err(Error::SelfCheck {
                what: format!("pairwise part {} is not irreducible", part),
            });
        }
        parts.push(part);
    }
    let displayed = Factorization::new(parts);
    let square = element.pow(2);
    if !verify_factorization(&square, &displayed) {
        return Err(Error::SelfCheck {
            what: "pairwise-product factorization does not multiply back to f^2".into(),
        });
    }
    if essentially_same(&displayed, &trivial_power_factorization(&element, 2)) {
        return Err(Error::SelfCheck {
            what: "pairwise-product factorization is essentially trivial".into(),
        });
    }
    // the enumerator must also find it
    let all = enumerate_factorizations_with(&square, &bounds.enumerate)?;
    if !all.iter().any(|f| essentially_same(f, &displayed)) {
        return Err(Error::SelfCheck {
            what: "enumerator does not find the pairwise-product factorization".into(),
        });
    }
    Ok(OverlapFamily {
        element,
        bases,
        replacements,
        residues,
        p,
        displayed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn replacement_for_two_linears() {
        let inputs = vec![IntPoly::x(), IntPoly::x_minus(&BigInt::from(1))];
        let out = replacement_polys(&inputs, &[2], &SearchBounds::default()).unwrap();
        assert_eq!(out.len(), 2);
        for (f, g) in inputs.iter().zip(&out) {
            assert_eq!(g.degree(), f.degree());
            assert!(g.is_monic());
        }
        assert_ne!(out[0], out[1]);
        // replay the property independently
        assert!(verify_replacement_property(&inputs, &out)
            .unwrap()
            .is_none());
    }

    #[test]
    fn replacement_rejects_empty_input() {
        assert!(replacement_polys(&[], &[2], &SearchBounds::default()).is_err());
    }

    #[test]
    fn replacement_rejects_non_monic() {
        let inputs = vec![IntPoly::from_i64(&[1, 2])];
        assert!(replacement_polys(&inputs, &[2], &SearchBounds::default()).is_err());
    }

    #[test]
    fn overlap_rejects_small_prime() {
        assert!(overlap_family(3, &SearchBounds::default()).is_err());
    }
}
