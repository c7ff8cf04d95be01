//! Enumeration of all essentially-different factorizations of an element of
//! Int(Z), length spectra, factorization types, and the bounded probe for
//! non-absolute irreducibility.
//!
//! A factorization is a multiset partition of the numerator's Q-irreducible
//! factor multiset, one block per part, where each part's denominator is
//! forced to the fixed divisor of its block (anything else would violate the
//! irreducibility criterion), the denominators multiply to the element's
//! denominator, and every part is irreducible in Int(Z).

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::factored::{FactoredIVP, Sign};
use crate::fixdiv::{ProductEnv, DEFAULT_K_MAX};
use crate::irred::{
    is_irreducible_intz_with, part_from_counts, partition_split, IntZOptions, IntZVerdict,
    ReducibleSplit,
};

/// Multiset of irreducible parts whose product is a fixed element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    parts: Vec<FactoredIVP>,
}

impl Factorization {
    pub fn new(mut parts: Vec<FactoredIVP>) -> Self {
        parts.sort();
        Factorization { parts }
    }

    pub fn parts(&self) -> &[FactoredIVP] {
        &self.parts
    }

    /// Number of irreducible factors counted with multiplicity.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    fn abs_multiset(&self) -> Vec<(BigUint, Vec<(crate::poly::IntPoly, u32)>)> {
        let mut keys: Vec<_> = self.parts.iter().map(|p| p.abs_key()).collect();
        keys.sort();
        keys
    }

    /// Product of the parts, as a canonical element.
    pub fn product(&self) -> Option<FactoredIVP> {
        let mut iter = self.parts.iter();
        let first = iter.next()?.clone();
        Some(iter.fold(first, |acc, p| acc.mul(p)))
    }
}

impl Ord for Factorization {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl PartialOrd for Factorization {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, " * ")?;
            }
            first = false;
            write!(f, "[{}]", p)?;
        }
        Ok(())
    }
}

/// Weakly decreasing positive blocks summing to n.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct NumberPartition {
    blocks: Vec<u32>,
}

impl NumberPartition {
    pub fn new(mut blocks: Vec<u32>) -> Result<Self> {
        if blocks.contains(&0) {
            return Err(Error::InvalidParams {
                what: "partition blocks must be positive".into(),
            });
        }
        blocks.sort_unstable_by(|a, b| b.cmp(a));
        Ok(NumberPartition { blocks })
    }

    pub fn blocks(&self) -> &[u32] {
        &self.blocks
    }

    pub fn total(&self) -> u32 {
        self.blocks.iter().sum()
    }
}

impl fmt::Display for NumberPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", b)?;
        }
        write!(f, ")")
    }
}

/// The number partition formed by the multiplicities of pairwise
/// non-associated parts of a factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationType {
    pub partition: NumberPartition,
}

#[derive(Clone, Copy, Debug)]
pub struct EnumerateOptions {
    /// Refuse factor multisets with more slots than this.
    pub slot_cap: u32,
    pub k_max: u32,
    pub partition_cap: u128,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            slot_cap: 16,
            k_max: DEFAULT_K_MAX,
            partition_cap: 1 << 22,
        }
    }
}

impl EnumerateOptions {
    fn intz(&self) -> IntZOptions {
        IntZOptions {
            k_max: self.k_max,
            partition_cap: self.partition_cap,
        }
    }
}

struct Enumerator<'a> {
    env: ProductEnv,
    entries: &'a [crate::factored::FactorEntry],
    irred_memo: HashMap<Vec<u32>, bool>,
    partition_cap: u128,
    out: BTreeSet<Factorization>,
}

impl<'a> Enumerator<'a> {
    fn block_irreducible(&mut self, counts: &[u32], d: &BigUint) -> Result<bool> {
        if let Some(&hit) = self.irred_memo.get(counts) {
            return Ok(hit);
        }
        let (split, _) = partition_split(&mut self.env, counts, d, self.partition_cap)?;
        let verdict = split.is_none();
        self.irred_memo.insert(counts.to_vec(), verdict);
        Ok(verdict)
    }

    fn recurse(
        &mut self,
        remaining: &mut Vec<u32>,
        budget: &BigUint,
        chosen: &mut Vec<(Vec<u32>, BigUint)>,
    ) -> Result<()> {
        let Some(anchor) = remaining.iter().position(|&c| c > 0) else {
            if budget.is_one() {
                let parts = chosen
                    .iter()
                    .map(|(counts, d)| part_from_counts(self.entries, counts, d.clone(), Sign::Pos))
                    .collect();
                self.out.insert(Factorization::new(parts));
            }
            return Ok(());
        };
        // every block of this partition level contains the anchor slot
        let n = remaining.len();
        let mut block = vec![0u32; n];
        block[anchor] = 1;
        loop {
            let d = self.env.fixdiv_counts(&block)?;
            if budget.is_multiple_of(&d) && self.block_irreducible(&block, &d)? {
                for (r, b) in remaining.iter_mut().zip(&block) {
                    *r -= b;
                }
                let next_budget = budget / &d;
                chosen.push((block.clone(), d));
                self.recurse(remaining, &next_budget, chosen)?;
                chosen.pop();
                for (r, b) in remaining.iter_mut().zip(&block) {
                    *r += b;
                }
            }
            // odometer over blocks containing the anchor
            let mut i = n;
            let mut advanced = false;
            while i > anchor {
                i -= 1;
                if block[i] < remaining[i] {
                    block[i] += 1;
                    for v in block.iter_mut().skip(i + 1) {
                        *v = 0;
                    }
                    if block[anchor] == 0 {
                        block[anchor] = 1;
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
        Ok(())
    }
}

/// All essentially-different factorizations of a canonical member with sign +1.
pub fn enumerate_factorizations(f: &FactoredIVP) -> Result<Vec<Factorization>> {
    enumerate_factorizations_with(f, &EnumerateOptions::default())
}

pub fn enumerate_factorizations_with(
    f: &FactoredIVP,
    opts: &EnumerateOptions,
) -> Result<Vec<Factorization>> {
    if f.sign() != Sign::Pos {
        return Err(Error::InvalidParams {
            what: "enumeration expects a positively signed element".into(),
        });
    }
    let slots = f.slots();
    if slots > opts.slot_cap {
        return Err(Error::TooLarge {
            slots,
            cap: opts.slot_cap,
        });
    }
    let factors = f.numer_factors();
    let (env, full) = ProductEnv::for_product(&factors, opts.k_max)?;
    if !full.is_multiple_of(f.denom()) {
        return Err(Error::InvalidParams {
            what: format!(
                "not a member of Int(Z): denominator {} does not divide the fixed divisor {}",
                f.denom(),
                full
            ),
        });
    }
    let mut counts: Vec<u32> = f.factor_entries().iter().map(|e| e.mult).collect();
    let mut enumerator = Enumerator {
        env,
        entries: f.factor_entries(),
        irred_memo: HashMap::new(),
        partition_cap: opts.partition_cap,
        out: BTreeSet::new(),
    };
    let budget = f.denom().clone();
    enumerator.recurse(&mut counts, &budget, &mut Vec::new())?;
    let out: Vec<Factorization> = enumerator.out.into_iter().collect();
    debug_assert!(out.iter().all(|fact| fact.length() <= slots as usize));
    Ok(out)
}

/// Multiset equality of parts up to units (±1) and reordering.
pub fn essentially_same(a: &Factorization, b: &Factorization) -> bool {
    a.length() == b.length() && a.abs_multiset() == b.abs_multiset()
}

/// Lengths of all factorizations, as a sorted multiset.
pub fn length_spectrum(f: &FactoredIVP, opts: &EnumerateOptions) -> Result<Vec<usize>> {
    let mut lengths: Vec<usize> = enumerate_factorizations_with(f, opts)?
        .iter()
        .map(|fact| fact.length())
        .collect();
    lengths.sort_unstable();
    Ok(lengths)
}

/// The factorization f^n = f * ... * f.
pub fn trivial_power_factorization(f: &FactoredIVP, n: u32) -> Factorization {
    Factorization::new(vec![f.clone(); n as usize])
}

/// Smallest n in 2..=max_power such that f^n has a factorization essentially
/// different from f * ... * f, together with one such factorization. `None`
/// certifies absolute irreducibility only up to the bound, nothing more.
pub fn find_nonabs_witness(
    f: &FactoredIVP,
    max_power: u32,
    opts: &EnumerateOptions,
) -> Result<Option<(u32, Factorization)>> {
    let report = is_irreducible_intz_with(f, &opts.intz())?;
    if !report.verdict.is_irreducible() {
        return Err(Error::InvalidParams {
            what: format!("element {} is not irreducible in Int(Z)", f),
        });
    }
    for n in 2..=max_power {
        let power = f.pow(n);
        let trivial = trivial_power_factorization(f, n);
        let found = enumerate_factorizations_with(&power, opts)?
            .into_iter()
            .find(|fact| !essentially_same(fact, &trivial));
        if let Some(fact) = found {
            return Ok(Some((n, fact)));
        }
    }
    Ok(None)
}

/// Group parts by association and sort the multiplicities descending.
pub fn type_of(fact: &Factorization) -> FactorizationType {
    let mut groups: std::collections::BTreeMap<_, u32> = std::collections::BTreeMap::new();
    for p in fact.parts() {
        *groups.entry(p.abs_key()).or_insert(0) += 1;
    }
    let blocks: Vec<u32> = groups.into_values().collect();
    FactorizationType {
        partition: NumberPartition::new(blocks).expect("nonzero multiplicities"),
    }
}

/// Exact polynomial identity: the parts multiply back to the target.
pub fn verify_factorization(target: &FactoredIVP, fact: &Factorization) -> bool {
    match fact.product() {
        Some(prod) => prod.same_element(target),
        None => false,
    }
}

/// Express a member as a product of irreducibles. The element's denominator
/// must already match the shape produced by canonical splits; elements whose
/// refinement would need integer constants are refused.
pub fn refine_to_irreducibles(
    part: &FactoredIVP,
    opts: &EnumerateOptions,
) -> Result<Vec<FactoredIVP>> {
    let report = is_irreducible_intz_with(part, &opts.intz())?;
    match report.verdict {
        IntZVerdict::Irreducible => Ok(vec![part.clone()]),
        IntZVerdict::NotMember => Err(Error::InvalidParams {
            what: format!("{} is not a member of Int(Z)", part),
        }),
        IntZVerdict::Inconclusive { reason } => Err(Error::InvalidParams { what: reason }),
        IntZVerdict::Reducible(ReducibleSplit::Parts(..))
        | IntZVerdict::Reducible(ReducibleSplit::ConstantFactor { .. }) => {
            let all = enumerate_factorizations_with(part, opts)?;
            match all.into_iter().next() {
                Some(fact) => Ok(fact.parts().to_vec()),
                None => Err(Error::ConstantRefinement),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factored::element;
    use crate::poly::IntPoly;

    fn poly(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    fn reference_element() -> FactoredIVP {
        element(
            Sign::Pos,
            2,
            vec![(poly(&[0, 1]), 1), (poly(&[3, 0, 1]), 1)],
        )
        .unwrap()
    }

    #[test]
    fn square_of_intro_element_has_two_factorizations() {
        let f = reference_element();
        let facts = enumerate_factorizations(&f.pow(2)).unwrap();
        assert_eq!(facts.len(), 2);
        let trivial = trivial_power_factorization(&f, 2);
        assert!(facts.iter().any(|c| essentially_same(c, &trivial)));
        // the other one is x^2(x^2+3)/4 * (x^2+3)
        let a = element(
            Sign::Pos,
            4,
            vec![(poly(&[0, 1]), 2), (poly(&[3, 0, 1]), 1)],
        )
        .unwrap();
        let b = element(Sign::Pos, 1, vec![(poly(&[3, 0, 1]), 1)]).unwrap();
        let expected = Factorization::new(vec![a, b]);
        assert!(facts.iter().any(|c| essentially_same(c, &expected)));
        for fact in &facts {
            assert!(verify_factorization(&f.pow(2), fact));
        }
    }

    #[test]
    fn irreducible_element_factors_only_as_itself() {
        let f = reference_element();
        let facts = enumerate_factorizations(&f).unwrap();
        assert_eq!(facts.len(), 1);
        assert_eq!(facts[0].length(), 1);
    }

    #[test]
    fn integer_polynomial_member_splits_into_q_factors() {
        let f = element(
            Sign::Pos,
            1,
            vec![(poly(&[0, 1]), 1), (poly(&[3, 0, 1]), 1)],
        )
        .unwrap();
        let facts = enumerate_factorizations(&f).unwrap();
        assert_eq!(facts.len(), 1);
        assert_eq!(facts[0].length(), 2);
    }

    #[test]
    fn witness_for_intro_element() {
        let f = reference_element();
        let (n, fact) = find_nonabs_witness(&f, 2, &EnumerateOptions::default())
            .unwrap()
            .expect("witness exists");
        assert_eq!(n, 2);
        assert_eq!(fact.length(), 2);
        assert!(!essentially_same(
            &fact,
            &trivial_power_factorization(&f, 2)
        ));
    }

    #[test]
    fn no_witness_for_linear_integer_polynomial() {
        let f = element(Sign::Pos, 1, vec![(poly(&[-3, 1]), 1)]).unwrap();
        assert!(find_nonabs_witness(&f, 5, &EnumerateOptions::default())
            .unwrap()
            .is_none());
    }

    #[test]
    fn witness_for_root_swap_element() {
        let f = element(
            Sign::Pos,
            4,
            vec![
                (poly(&[0, 1]), 1),
                (poly(&[-4, 1]), 1),
                (poly(&[3, 0, 1]), 1),
            ],
        )
        .unwrap();
        let (n, fact) = find_nonabs_witness(&f, 2, &EnumerateOptions::default())
            .unwrap()
            .expect("witness at n = 2");
        assert_eq!(n, 2);
        let a = element(
            Sign::Pos,
            4,
            vec![(poly(&[0, 1]), 2), (poly(&[3, 0, 1]), 1)],
        )
        .unwrap();
        let b = element(
            Sign::Pos,
            4,
            vec![(poly(&[-4, 1]), 2), (poly(&[3, 0, 1]), 1)],
        )
        .unwrap();
        assert!(essentially_same(&fact, &Factorization::new(vec![a, b])));
    }

    #[test]
    fn length_spectra() {
        let opts = EnumerateOptions::default();
        let f = reference_element();
        assert_eq!(length_spectrum(&f.pow(2), &opts).unwrap(), vec![2, 2]);
        assert_eq!(length_spectrum(&f, &opts).unwrap(), vec![1]);
        let g = element(
            Sign::Pos,
            3,
            vec![
                (poly(&[-3, 1]), 1),
                (poly(&[-17, 0, 0, 1]), 1),
                (poly(&[-19, 0, 0, 1]), 1),
            ],
        )
        .unwrap();
        let spectrum = length_spectrum(&g.pow(2), &opts).unwrap();
        assert!(spectrum.contains(&2) && spectrum.contains(&3));
    }

    #[test]
    fn essentially_same_absorbs_units() {
        let f = reference_element();
        let g = element(Sign::Pos, 1, vec![(poly(&[3, 0, 1]), 1)]).unwrap();
        let a = Factorization::new(vec![f.clone(), g.clone()]);
        let b = Factorization::new(vec![f.negate(), g.negate()]);
        assert!(essentially_same(&a, &b));
        let c = Factorization::new(vec![g.clone(), f.clone()]);
        assert!(essentially_same(&a, &c));
    }

    #[test]
    fn slot_cap_enforced() {
        let f = reference_element();
        let err = enumerate_factorizations_with(
            &f.pow(9),
            &EnumerateOptions {
                slot_cap: 16,
                ..Default::default()
            },
        )
        .unwrap_err();
        assert!(matches!(err, Error::TooLarge { slots: 18, cap: 16 }));
    }

    #[test]
    fn types_group_by_association() {
        let f = reference_element();
        let g = element(Sign::Pos, 1, vec![(poly(&[3, 0, 1]), 1)]).unwrap();
        let fact = Factorization::new(vec![f.clone(), f.negate(), g]);
        let t = type_of(&fact);
        assert_eq!(t.partition.blocks(), &[2, 1]);
    }

    #[test]
    fn refine_splits_reducible_member() {
        let f = element(
            Sign::Pos,
            1,
            vec![(poly(&[0, 1]), 1), (poly(&[3, 0, 1]), 1)],
        )
        .unwrap();
        let parts = refine_to_irreducibles(&f, &EnumerateOptions::default()).unwrap();
        assert_eq!(parts.len(), 2);
        // refinement of an element whose denominator undershoots its fixed
        // divisor requires constants and is refused
        let g = element(Sign::Pos, 1, vec![(poly(&[8, 0, 0, 1, 1]), 1)]).unwrap();
        assert!(matches!(
            refine_to_irreducibles(&g, &EnumerateOptions::default()),
            Err(Error::ConstantRefinement)
        ));
    }
}
