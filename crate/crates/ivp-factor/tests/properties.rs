//! Property tests for the arithmetic invariants: content multiplicativity,
//! window independence of the fixed divisor, valuation bookkeeping,
//! certificate replay, canonical-form stability, and enumeration sanity.

mod support;

use ivp_factor::cli::{parse_expression, parse_polynomial};
use ivp_factor::families::{apply_interchange, find_interchangeable};
use ivp_factor::{
    associated_intz, certify_q_irreducible, class_valuation, element, enumerate_factorizations,
    essentially_same, fixed_divisor, indispensable, is_irreducible_intz, prime_bound_candidates,
    replay_certificate, CertifyFailure, CertifyOptions, EnumerateOptions, FactoredIVP,
    Factorization, IntPoly, IntZVerdict, ReducibleSplit, Sign,
};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;
use support::naive_fixdiv;

fn poly_strategy(max_deg: usize, height: i64) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-height..=height, 1..=max_deg + 1)
        .prop_map(|coeffs| IntPoly::new(coeffs.into_iter().map(BigInt::from).collect()))
        .prop_filter("nonzero", |p| !p.is_zero())
}

/// A small pool of certified Q-irreducible factors for element-level tests.
fn factor_pool() -> Vec<IntPoly> {
    [
        "x", "x-1", "x-3", "x-4", "x+2", "x^2+3", "x^2+4", "x^2+x+1", "x^3-17",
    ]
    .iter()
    .map(|s| parse_polynomial(s).unwrap())
    .collect()
}

fn element_strategy() -> impl Strategy<Value = FactoredIVP> {
    let pool = factor_pool();
    (
        prop::collection::vec((0..pool.len(), 1u32..=2), 1..=3),
        1u64..=12,
    )
        .prop_filter_map("canonicalizable member", move |(picks, denom)| {
            let raw: Vec<(IntPoly, u32)> = picks
                .into_iter()
                .map(|(i, m)| (pool[i].clone(), m))
                .collect();
            let f = element(Sign::Pos, denom, raw).ok()?;
            ivp_factor::is_member(&f).ok()?.then_some(f)
        })
}

proptest! {
    #[test]
    fn content_is_multiplicative(p in poly_strategy(5, 30), q in poly_strategy(5, 30)) {
        let lhs = p.mul(&q).content().unwrap();
        let rhs = p.content().unwrap() * q.content().unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_is_multiplicative(
        p in poly_strategy(5, 30),
        q in poly_strategy(5, 30),
        a in -50i64..=50,
    ) {
        let a = BigInt::from(a);
        prop_assert_eq!(p.mul(&q).eval(&a), p.eval(&a) * q.eval(&a));
    }

    #[test]
    fn shift_preserves_evaluation(p in poly_strategy(5, 30), c in -10i64..=10, a in -20i64..=20) {
        let shifted = p.shift(&BigInt::from(c));
        prop_assert_eq!(shifted.eval(&BigInt::from(a)), p.eval(&BigInt::from(a + c)));
    }

    #[test]
    fn fixed_divisor_window_independent(p in poly_strategy(4, 20), start in -30i64..=30) {
        prop_assume!(!p.is_zero());
        let fd = fixed_divisor(&p).unwrap();
        // gcd over any deg+1 consecutive integers gives the same value
        let deg = p.degree().unwrap() as i64;
        let mut acc = BigUint::zero();
        for a in start..=start + deg {
            let v = p.eval(&BigInt::from(a));
            if !v.is_zero() {
                acc = acc.gcd(v.magnitude());
            }
        }
        prop_assert_eq!(acc, fd);
    }

    #[test]
    fn fixed_divisor_supermultiplicative(p in poly_strategy(4, 20), q in poly_strategy(4, 20)) {
        let fp = fixed_divisor(&p).unwrap();
        let fq = fixed_divisor(&q).unwrap();
        let fpq = fixed_divisor(&p.mul(&q)).unwrap();
        prop_assert!(fpq.is_multiple_of(&(fp * fq)));
    }

    #[test]
    fn primitive_fixed_divisor_primes_bounded(p in poly_strategy(6, 40)) {
        let (_, prim) = p.primitive_part().unwrap();
        prop_assume!(prim.degree().is_some_and(|d| d >= 1));
        let fd = fixed_divisor(&prim).unwrap();
        let bound = prime_bound_candidates(&prim).unwrap();
        // every prime factor of the fixed divisor appears below the degree bound
        let mut rest = fd.clone();
        for p in &bound {
            let p = BigUint::from(*p);
            while (&rest % &p).is_zero() {
                rest /= &p;
            }
        }
        prop_assert!(rest == BigUint::from(1u32), "fixdiv {} left {}", fd, rest);
    }

    #[test]
    fn class_valuation_min_matches_fixdiv(p in poly_strategy(4, 20), prime in prop::sample::select(vec![2u64, 3, 5])) {
        let min_class = (0..prime)
            .map(|t| class_valuation(&p, prime, 1, &BigUint::from(t)).unwrap())
            .min()
            .unwrap();
        let fd = fixed_divisor(&p).unwrap();
        prop_assert_eq!(min_class, ivp_factor::arith::val_p(&fd, prime));
    }

    #[test]
    fn certificates_replay(p in poly_strategy(5, 25)) {
        let (_, prim) = p.primitive_part().unwrap();
        prop_assume!(prim.degree().is_some_and(|d| d >= 1));
        let opts = CertifyOptions::default();
        match certify_q_irreducible(&prim, &opts) {
            Ok(cert) => prop_assert!(replay_certificate(&cert, &prim, &opts)),
            Err(CertifyFailure::Reducible { left, right }) => {
                prop_assert_eq!(left.mul(&right), prim);
            }
            Err(CertifyFailure::Inconclusive) => {}
        }
    }

    #[test]
    fn indispensability_matches_brute_scan(
        shifts in prop::collection::vec(-6i64..=6, 2..=4),
        prime in prop::sample::select(vec![2u64, 3, 5]),
        index in 0usize..4,
    ) {
        let family: Vec<IntPoly> = shifts.iter().map(|&a| IntPoly::x_minus(&BigInt::from(a))).collect();
        prop_assume!(index < family.len());
        let result = indispensable(&family, index, prime).unwrap();
        prop_assert!(result.replay(&family));
        // one period suffices: compare against a scan over a window of width p^2 each side
        let p_int = BigInt::from(prime);
        let brute = (-(prime as i64 * prime as i64)..=(prime as i64 * prime as i64)).find(|&z| {
            let z = BigInt::from(z);
            family.iter().enumerate().all(|(i, g)| {
                let divisible = g.eval(&z).mod_floor(&p_int).is_zero();
                if i == index { divisible } else { !divisible }
            })
        });
        prop_assert_eq!(result.witness.is_some(), brute.is_some());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_is_order_insensitive(f in element_strategy(), seed in 0u64..1000) {
        // permute the factor list and re-canonicalize
        let mut raw: Vec<(IntPoly, u32)> = Vec::new();
        for e in f.factor_entries() {
            for _ in 0..e.mult {
                raw.push((e.poly.clone(), 1));
            }
        }
        let n = raw.len();
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            raw.swap(i, (state as usize) % (i + 1));
        }
        let denom = u64::try_from(f.denom()).unwrap();
        let again = element(f.sign(), denom, raw).unwrap();
        prop_assert!(f.same_element(&again));
    }

    #[test]
    fn parse_print_round_trip(f in element_strategy()) {
        let again = parse_expression(&f.to_string()).unwrap();
        prop_assert!(f.same_element(&again));
    }

    #[test]
    fn reducibility_splits_multiply_back(f in element_strategy()) {
        let report = is_irreducible_intz(&f).unwrap();
        match report.verdict {
            IntZVerdict::Reducible(ReducibleSplit::Parts(a, b)) => {
                prop_assert!(a.mul(&b).same_element(&f));
                prop_assert!(ivp_factor::is_member(&a).unwrap());
                prop_assert!(ivp_factor::is_member(&b).unwrap());
            }
            IntZVerdict::Reducible(ReducibleSplit::ConstantFactor { constant, rest }) => {
                prop_assert!(ivp_factor::is_member(&rest).unwrap());
                prop_assert_eq!(&(rest.denom() / f.denom()), &constant);
            }
            _ => {}
        }
    }

    #[test]
    fn integer_polynomial_special_case(f in element_strategy()) {
        // for denominator 1: irreducible iff image primitive with one factor slot
        prop_assume!(f.denom() == &BigUint::from(1u32));
        let report = is_irreducible_intz(&f).unwrap();
        let expected = f.slots() == 1 && report.fixdiv == BigUint::from(1u32);
        prop_assert_eq!(report.verdict.is_irreducible(), expected);
    }

    #[test]
    fn enumeration_is_sound(f in element_strategy()) {
        prop_assume!(f.sign() == Sign::Pos && f.slots() <= 6);
        let facts = enumerate_factorizations(&f).unwrap();
        let report = is_irreducible_intz(&f).unwrap();
        for fact in &facts {
            // parts multiply back exactly and lengths stay within the slot bound
            prop_assert!(ivp_factor::verify_factorization(&f, fact));
            prop_assert!(fact.length() <= f.slots() as usize);
            for part in fact.parts() {
                prop_assert!(is_irreducible_intz(part).unwrap().verdict.is_irreducible());
            }
        }
        if report.verdict.is_irreducible() {
            let own = Factorization::new(vec![f.clone()]);
            prop_assert!(facts.iter().any(|fact| essentially_same(fact, &own)));
        }
    }
}

#[test]
fn oracle_equivalence_on_random_members() {
    // random canonical members with few slots; denominators drawn from the
    // divisors of the numerator's fixed divisor so membership always holds
    use rand::{Rng, SeedableRng};
    let pool = factor_pool();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x0F1D_D1F0);
    let mut done = 0;
    while done < 60 {
        let k = rng.gen_range(2..=5);
        let raw: Vec<(IntPoly, u32)> = (0..k)
            .map(|_| (pool[rng.gen_range(0..pool.len())].clone(), 1))
            .collect();
        let refs: Vec<(&IntPoly, u32)> = raw.iter().map(|(g, m)| (g, *m)).collect();
        let fd = ivp_factor::fixed_divisor_product(&refs).unwrap();
        let divisors: Vec<BigUint> = {
            let mut out = Vec::new();
            let mut d = BigUint::from(1u32);
            while d <= fd {
                if fd.is_multiple_of(&d) {
                    out.push(d.clone());
                }
                d += 1u32;
            }
            out
        };
        let denom = divisors[rng.gen_range(0..divisors.len())].clone();
        let denom_u64 = u64::try_from(&denom).unwrap();
        let Ok(f) = element(Sign::Pos, denom_u64, raw) else {
            continue;
        };
        let facts = enumerate_factorizations(&f).unwrap();
        let mut oracle = support::Oracle::new(&f);
        let expected = oracle.enumerate();
        let got: std::collections::BTreeSet<_> =
            facts.iter().map(|fact| oracle.canonical(fact)).collect();
        assert_eq!(got, expected, "oracle mismatch on {f}");
        done += 1;
    }
}

#[test]
fn repeated_factor_pairs_are_not_element_disjoint() {
    // x^2(x^2+3)/4 swaps one copy of x for the other: interchangeable but not
    // element-disjoint, so no new factorization comes out of it
    let f = parse_expression("x^2*(x^2+3)/4").unwrap();
    let pairs = find_interchangeable(&f, &EnumerateOptions::default()).unwrap();
    assert!(!pairs.is_empty());
    assert!(pairs.iter().all(|p| !p.element_disjoint));
    for pair in &pairs {
        assert!(apply_interchange(&f, pair, 2, &EnumerateOptions::default()).is_err());
    }
}

#[test]
fn trivial_power_factorization_always_found() {
    for (name, f, power) in support::corpus() {
        if !is_irreducible_intz(&f).unwrap().verdict.is_irreducible() {
            continue;
        }
        let facts = enumerate_factorizations(&f.pow(power)).unwrap();
        let trivial = Factorization::new(vec![f.clone(); power as usize]);
        assert!(
            facts.iter().any(|fact| essentially_same(fact, &trivial)),
            "trivial factorization missing for {name}"
        );
    }
}

#[test]
fn interchange_closure_on_reference_elements() {
    // every element-disjoint pair induces a square factorization the
    // enumerator also finds
    let opts = EnumerateOptions::default();
    for expr in ["x*(x-4)*(x^2+3)/4", "(x-1)*(x-3)*(x^2+4)/4"] {
        let f = parse_expression(expr).unwrap();
        let pairs = find_interchangeable(&f, &opts).unwrap();
        assert!(
            !pairs.is_empty(),
            "{expr} should have interchangeable pairs"
        );
        let facts = enumerate_factorizations(&f.pow(2)).unwrap();
        for pair in pairs.iter().filter(|p| p.element_disjoint) {
            let fact = apply_interchange(&f, pair, 2, &opts).unwrap();
            assert!(
                facts.iter().any(|g| essentially_same(g, &fact)),
                "swap factorization not found by the enumerator for {expr}"
            );
        }
    }
}

#[test]
fn association_is_sign_blind() {
    let f = parse_expression("x*(x^2+3)/2").unwrap();
    assert!(associated_intz(&f, &f.negate()));
    let g = parse_expression("(x-1)*(x^2+3)/2");
    if let Ok(g) = g {
        assert!(!associated_intz(&f, &g));
    }
}

#[test]
fn naive_and_production_fixdiv_agree_on_corpus() {
    for (name, f, _) in support::corpus() {
        let expanded = f.expand_numerator();
        assert_eq!(
            naive_fixdiv(&expanded),
            ivp_factor::fixed_divisor_product(&f.numer_factors()).unwrap(),
            "fixdiv mismatch on {name}"
        );
    }
}

#[test]
fn irreducible_verdict_is_stable_under_rerun() {
    // re-running the partition search must reproduce the verdict
    for (name, f, _) in support::corpus() {
        let a = is_irreducible_intz(&f).unwrap();
        let b = is_irreducible_intz(&f).unwrap();
        assert_eq!(
            a.verdict.is_irreducible(),
            b.verdict.is_irreducible(),
            "unstable verdict on {name}"
        );
        assert_eq!(a.partitions_checked, b.partitions_checked);
    }
}
