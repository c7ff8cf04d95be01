//! Shared test support: a brute-force factorization oracle that is
//! independent of the production enumeration path, plus the regression corpus
//! of reference elements.
//!
//! The oracle expands block products densely, computes fixed divisors as
//! plain gcds of exact window values, walks every multiset partition with
//! every denominator assignment, and applies the irreducibility criterion
//! directly. No class valuations, no modular folding, no forced denominators.

// each test binary uses a different slice of this module
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use ivp_factor::{FactoredIVP, Factorization, IntPoly};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

pub fn naive_fixdiv(g: &IntPoly) -> BigUint {
    let deg = g.degree().expect("nonzero");
    let mut d = BigUint::zero();
    for a in 0..=deg {
        let v = g.eval(&BigInt::from(a));
        if !v.is_zero() {
            d = d.gcd(v.magnitude());
        }
    }
    d
}

fn divisors_of(n: &BigUint) -> Vec<BigUint> {
    let mut divisors = vec![BigUint::one()];
    let mut rest = n.clone();
    let mut p = BigUint::from(2u32);
    while (&p * &p) <= rest {
        let mut exp = 0;
        while (&rest % &p).is_zero() {
            rest /= &p;
            exp += 1;
        }
        if exp > 0 {
            let mut next = Vec::new();
            let mut power = BigUint::one();
            for _ in 0..=exp {
                for d in &divisors {
                    next.push(d * &power);
                }
                power *= &p;
            }
            divisors = next;
        }
        p += BigUint::one();
    }
    if !rest.is_one() {
        let mut next = Vec::new();
        for d in &divisors {
            next.push(d.clone());
            next.push(d * &rest);
        }
        divisors = next;
    }
    divisors.sort();
    divisors
}

/// Canonical representation of one factorization: sorted (block counts,
/// denominator) pairs relative to a fixed factor table.
pub type OracleFact = Vec<(Vec<u32>, BigUint)>;

pub struct Oracle {
    table: Vec<IntPoly>,
    counts: Vec<u32>,
    denom: BigUint,
    fixdiv_memo: HashMap<Vec<u32>, BigUint>,
}

impl Oracle {
    pub fn new(f: &FactoredIVP) -> Self {
        Oracle {
            table: f.factor_entries().iter().map(|e| e.poly.clone()).collect(),
            counts: f.factor_entries().iter().map(|e| e.mult).collect(),
            denom: f.denom().clone(),
            fixdiv_memo: HashMap::new(),
        }
    }

    fn expand(&self, counts: &[u32]) -> IntPoly {
        let mut acc = IntPoly::one();
        for (g, &c) in self.table.iter().zip(counts) {
            if c > 0 {
                acc = acc.mul(&g.pow(c));
            }
        }
        acc
    }

    fn fixdiv(&mut self, counts: &[u32]) -> BigUint {
        if let Some(hit) = self.fixdiv_memo.get(counts) {
            return hit.clone();
        }
        let d = naive_fixdiv(&self.expand(counts));
        self.fixdiv_memo.insert(counts.to_vec(), d.clone());
        d
    }

    /// Direct reading of the irreducibility criterion: the denominator equals
    /// the block's fixed divisor and no proper sub-block pair multiplies to it.
    fn irreducible(&mut self, counts: &[u32], denom: &BigUint) -> bool {
        if self.fixdiv(counts) != *denom {
            return false;
        }
        let mut sub = vec![0u32; counts.len()];
        loop {
            let mut i = counts.len();
            loop {
                if i == 0 {
                    return true;
                }
                i -= 1;
                if sub[i] < counts[i] {
                    sub[i] += 1;
                    for v in sub.iter_mut().skip(i + 1) {
                        *v = 0;
                    }
                    break;
                }
            }
            if sub == counts {
                continue;
            }
            let complement: Vec<u32> = counts.iter().zip(&sub).map(|(c, s)| c - s).collect();
            let d1 = self.fixdiv(&sub);
            let d2 = self.fixdiv(&complement);
            if &d1 * &d2 == *denom {
                return false;
            }
        }
    }

    /// Every factorization: every multiset partition into blocks, every
    /// assignment of denominators multiplying to the element's denominator,
    /// filtered by membership and irreducibility of each part.
    pub fn enumerate(&mut self) -> BTreeSet<OracleFact> {
        let divisors = divisors_of(&self.denom);
        let mut out = BTreeSet::new();
        let mut remaining = self.counts.clone();
        let denom = self.denom.clone();
        let mut blocks: Vec<Vec<u32>> = Vec::new();
        self.partitions(&mut remaining, &mut blocks, &divisors, &denom, &mut out);
        out
    }

    fn partitions(
        &mut self,
        remaining: &mut Vec<u32>,
        blocks: &mut Vec<Vec<u32>>,
        divisors: &[BigUint],
        denom: &BigUint,
        out: &mut BTreeSet<OracleFact>,
    ) {
        let Some(anchor) = remaining.iter().position(|&c| c > 0) else {
            // assign denominators to the fixed block list
            let mut assignment: Vec<BigUint> = Vec::with_capacity(blocks.len());
            self.assign(blocks, 0, denom.clone(), divisors, &mut assignment, out);
            return;
        };
        let n = remaining.len();
        let mut block = vec![0u32; n];
        block[anchor] = 1;
        loop {
            for (r, b) in remaining.iter_mut().zip(&block) {
                *r -= b;
            }
            blocks.push(block.clone());
            self.partitions(remaining, blocks, divisors, denom, out);
            blocks.pop();
            for (r, b) in remaining.iter_mut().zip(&block) {
                *r += b;
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
    }

    fn assign(
        &mut self,
        blocks: &[Vec<u32>],
        index: usize,
        budget: BigUint,
        divisors: &[BigUint],
        assignment: &mut Vec<BigUint>,
        out: &mut BTreeSet<OracleFact>,
    ) {
        if index == blocks.len() {
            if budget.is_one() {
                let mut fact: OracleFact = blocks
                    .iter()
                    .cloned()
                    .zip(assignment.iter().cloned())
                    .collect();
                fact.sort();
                out.insert(fact);
            }
            return;
        }
        for d in divisors {
            if !budget.is_multiple_of(d) {
                continue;
            }
            // membership of the part
            if !self.fixdiv(&blocks[index]).is_multiple_of(d) {
                continue;
            }
            if !self.irreducible(&blocks[index], d) {
                continue;
            }
            assignment.push(d.clone());
            self.assign(blocks, index + 1, &budget / d, divisors, assignment, out);
            assignment.pop();
        }
    }

    /// Canonicalize a production factorization against this oracle's table.
    pub fn canonical(&self, fact: &Factorization) -> OracleFact {
        let mut rep: OracleFact = fact
            .parts()
            .iter()
            .map(|part| {
                let mut counts = vec![0u32; self.table.len()];
                for e in part.factor_entries() {
                    let idx = self
                        .table
                        .iter()
                        .position(|g| *g == e.poly)
                        .expect("part factor present in table");
                    counts[idx] += e.mult;
                }
                (counts, part.denom().clone())
            })
            .collect();
        rep.sort();
        rep
    }
}

/// The regression corpus: reference elements with at most 8 factor slots.
pub fn corpus() -> Vec<(&'static str, FactoredIVP, u32)> {
    use ivp_factor::cli::parse_expression;
    let parse = |s: &str| parse_expression(s).expect(s);
    vec![
        // (name, element, power to enumerate)
        ("intro", parse("x*(x^2+3)/2"), 2),
        ("intro-cube", parse("x*(x^2+3)/2"), 3),
        ("same-length-swap", parse("x*(x-4)*(x^2+3)/4"), 2),
        ("different-lengths", parse("(x-3)*(x^3-17)*(x^3-19)/3"), 2),
        ("class-split", parse("(x^4+x^3+8)*(x-3)/4"), 2),
        ("short-cube", parse("(x^2+4)*(x^4+7)/4"), 3),
        ("interchange", parse("(x-1)*(x-3)*(x^2+4)/4"), 2),
        (
            "partitions-of-four",
            parse("(x^8-17)^4*(x-4)^2*(x-8)^2/16"),
            1,
        ),
        ("integer-member", parse("x*(x^2+3)"), 1),
        ("single-irreducible", parse("x^2+3"), 1),
    ]
}
