//! Verb dispatch and report rendering for the `ivp-factor` binary.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::factored::{CertPolicy, FactoredIVP};
use crate::families::{
    apply_class_split, apply_deep_roots, apply_interchange, enumerate_pattern_triples,
    find_interchangeable, mixed_prime_family, overlap_family, pattern_family, same_length_family,
    same_length_split_family, subset_counts_for, two_prime_family, varied_length_family,
    SameLengthParams, SearchBounds,
};
use crate::fixdiv::fixed_divisor_product;
use crate::irred::{is_irreducible_intz_with, CertifyOptions, IntZOptions, IntZVerdict};
use crate::powfact::{
    enumerate_factorizations_with, find_nonabs_witness, type_of, EnumerateOptions, Factorization,
};

use super::config::Config;
use super::parse::{parse_expression_with, parse_product};

const SCHEMA: &str = "ivp-factor/1";

#[derive(Parser)]
#[command(
    name = "ivp-factor",
    about = "Exact factorization arithmetic for integer-valued polynomials",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Emit the versioned JSON report instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Flat key = value configuration file; flags override file values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Worker threads for independent checks (used by selftest).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Keep factors the certification ladder cannot settle, marked asserted.
    #[arg(long, global = true)]
    assert_irreducible: bool,
    /// Cap on factor slots for enumeration.
    #[arg(long, global = true)]
    slot_cap: Option<u32>,
    /// Depth ceiling for class valuations.
    #[arg(long, global = true)]
    k_max: Option<u32>,
}

#[derive(Subcommand)]
enum Verb {
    /// Fixed divisor of a polynomial product (no denominator).
    Fixdiv { expr: String },
    /// Decide membership in Int(Z).
    Member { expr: String },
    /// Decide irreducibility in Int(Z), with the evidence record.
    Irreducible { expr: String },
    /// Enumerate all essentially different factorizations of the element.
    Factorize { expr: String },
    /// Enumerate all essentially different factorizations of the n-th power.
    Power {
        #[arg(short = 'n', long = "power")]
        n: u32,
        expr: String,
    },
    /// Probe non-absolute irreducibility: smallest power with an essentially
    /// different factorization, up to the bound.
    Absirr {
        #[arg(short = 'N', long = "max-power", default_value_t = 3)]
        max_power: u32,
        expr: String,
    },
    /// Generate a parametric family element (with self-checks replayed).
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Apply one of the power-splitting constructions.
    Lemma {
        #[command(subcommand)]
        which: Lemma,
    },
    /// Build a pattern element and enumerate its factorization triples.
    Pattern {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        t: u32,
        /// Also cross-check the triples against the generic enumerator.
        #[arg(long)]
        cross_check: bool,
    },
    /// Re-run the built-in reference identities and print one line each.
    Selftest,
}

#[derive(Subcommand)]
enum Family {
    /// Single-prime denominator p^n; all power factorizations keep the
    /// trivial length.
    SameLength {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 2)]
        distinct: u32,
    },
    /// Same-length variant with the high-degree piece split into two
    /// square-class halves.
    SameLengthSplit {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u32,
    },
    /// Two-prime denominator q * p^n with a complete residue system mod q.
    Mixed {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
    },
    /// Denominator p^n q^m with q < p and 1 < m <= n.
    TwoPrime {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
    },
    /// c*d*roots / p^m with n > m: powers factor with several lengths.
    VariedLength {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
    },
    /// Three overlapping replacement polynomials over p^3.
    Overlap {
        #[arg(long)]
        p: u64,
    },
    /// The pattern element without the triple enumeration.
    Pattern {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        t: u32,
    },
}

#[derive(Subcommand)]
enum Lemma {
    /// Find interchangeable subsets of an irreducible element and apply the
    /// first element-disjoint swap to f^k.
    Interchange {
        expr: String,
        #[arg(short, long, default_value_t = 2)]
        k: u32,
    },
    /// Split off a sub-product all of whose root classes carry valuation
    /// above the denominator's exponents.
    DeepRoots {
        expr: String,
        /// Sub-product to split off, e.g. "(x^3-17)*(x^3-19)".
        #[arg(long)]
        take: String,
    },
    /// Valuation-split construction for prime-power denominators.
    ClassSplit {
        expr: String,
        /// Sub-product whose class valuations drive the split.
        #[arg(long)]
        take: String,
    },
}

struct Session {
    json: bool,
    policy: CertPolicy,
    certify: CertifyOptions,
    enumerate: EnumerateOptions,
    bounds: SearchBounds,
    threads: usize,
}

impl Session {
    fn intz(&self) -> IntZOptions {
        IntZOptions {
            k_max: self.enumerate.k_max,
            partition_cap: self.enumerate.partition_cap,
        }
    }

    fn parse(&self, text: &str) -> Result<FactoredIVP> {
        parse_expression_with(text, self.policy, &self.certify)
    }
}

fn element_json(f: &FactoredIVP) -> Value {
    json!({
        "display": f.to_string(),
        "sign": if f.sign() == crate::factored::Sign::Neg { -1 } else { 1 },
        "denominator": f.denom().to_string(),
        "factors": f.factor_entries().iter().map(|e| json!({
            "poly": e.poly.to_string(),
            "multiplicity": e.mult,
        })).collect::<Vec<_>>(),
    })
}

fn certificates_json(f: &FactoredIVP) -> Value {
    Value::Array(
        f.factor_entries()
            .iter()
            .map(|e| {
                json!({
                    "factor": e.poly.to_string(),
                    "certificate": e.cert.to_string(),
                })
            })
            .collect(),
    )
}

fn factorization_json(fact: &Factorization) -> Value {
    json!({
        "length": fact.length(),
        "type": type_of(fact).partition.to_string(),
        "parts": fact.parts().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
    })
}

struct Outcome {
    human: String,
    result: Value,
    certificates: Value,
    exit: i32,
}

fn run_verb(cli: &Cli, session: &Session) -> Result<(Outcome, Value)> {
    match &cli.verb {
        Verb::Fixdiv { expr } => {
            let factors = parse_product(expr)?;
            let refs: Vec<(&crate::poly::IntPoly, u32)> =
                factors.iter().map(|(g, m)| (g, *m)).collect();
            let d = fixed_divisor_product(&refs)?;
            Ok((
                Outcome {
                    human: d.to_string(),
                    result: json!({ "fixed_divisor": d.to_string() }),
                    certificates: Value::Array(vec![]),
                    exit: 0,
                },
                json!({ "expr": expr }),
            ))
        }
        Verb::Member { expr } => {
            let f = session.parse(expr)?;
            let d = fixed_divisor_product(&f.numer_factors())?;
            let member = num_integer::Integer::is_multiple_of(&d, f.denom());
            Ok((
                Outcome {
                    human: if member {
                        format!("member of Int(Z) (fixed divisor {})", d)
                    } else {
                        format!(
                            "not a member: denominator {} does not divide the fixed divisor {}",
                            f.denom(),
                            d
                        )
                    },
                    result: json!({ "member": member, "fixed_divisor": d.to_string(),
                                    "element": element_json(&f) }),
                    certificates: certificates_json(&f),
                    exit: if member { 0 } else { 1 },
                },
                json!({ "expr": expr }),
            ))
        }
        Verb::Irreducible { expr } => {
            let f = session.parse(expr)?;
            let report = is_irreducible_intz_with(&f, &session.intz())?;
            let (human, verdict_json, exit) = match &report.verdict {
                IntZVerdict::Irreducible => (
                    "irreducible in Int(Z)".to_string(),
                    json!({ "verdict": "irreducible" }),
                    0,
                ),
                IntZVerdict::Reducible(split) => {
                    let (human, split_json) = match split {
                        crate::irred::ReducibleSplit::Parts(a, b) => (
                            format!("reducible: ({}) * ({})", a, b),
                            json!({ "kind": "parts", "left": a.to_string(), "right": b.to_string() }),
                        ),
                        crate::irred::ReducibleSplit::ConstantFactor { constant, rest } => (
                            format!("reducible: {} * ({})", constant, rest),
                            json!({ "kind": "constant", "constant": constant.to_string(),
                                    "rest": rest.to_string() }),
                        ),
                    };
                    (
                        human,
                        json!({ "verdict": "reducible", "split": split_json }),
                        1,
                    )
                }
                IntZVerdict::NotMember => (
                    format!("not a member (fixdiv = {})", report.fixdiv),
                    json!({ "verdict": "not-member" }),
                    1,
                ),
                IntZVerdict::Inconclusive { reason } => (
                    format!("inconclusive: {}", reason),
                    json!({ "verdict": "inconclusive", "reason": reason }),
                    3,
                ),
            };
            let mut result = verdict_json;
            result["fixed_divisor"] = Value::String(report.fixdiv.to_string());
            result["denominator_matches_fixdiv"] = Value::Bool(report.denom_matches_fixdiv);
            result["partitions_checked"] = json!(report.partitions_checked);
            result["element"] = element_json(&f);
            Ok((
                Outcome {
                    human,
                    result,
                    certificates: certificates_json(&f),
                    exit,
                },
                json!({ "expr": expr }),
            ))
        }
        Verb::Factorize { expr } => {
            let f = session.parse(expr)?;
            let facts = enumerate_factorizations_with(&f, &session.enumerate)?;
            Ok((render_factorizations(&f, &facts), json!({ "expr": expr })))
        }
        Verb::Power { n, expr } => {
            if *n == 0 || *n > 64 {
                return Err(Error::InvalidParams {
                    what: "the power must lie in 1..=64".into(),
                });
            }
            let f = session.parse(expr)?;
            let power = f.pow(*n);
            let facts = enumerate_factorizations_with(&power, &session.enumerate)?;
            Ok((
                render_factorizations(&power, &facts),
                json!({ "expr": expr, "power": n }),
            ))
        }
        Verb::Absirr { max_power, expr } => {
            if *max_power > 64 {
                return Err(Error::InvalidParams {
                    what: "the power bound must not exceed 64".into(),
                });
            }
            let f = session.parse(expr)?;
            let witness = find_nonabs_witness(&f, *max_power, &session.enumerate)?;
            let (human, result, exit) = match witness {
                Some((n, fact)) => (
                    format!("not absolutely irreducible: f^{} = {}", n, fact),
                    json!({ "absolutely_irreducible": false, "power": n,
                            "factorization": factorization_json(&fact) }),
                    0,
                ),
                None => (
                    format!(
                        "absolutely irreducible up to power {} (bounded probe, not a proof)",
                        max_power
                    ),
                    json!({ "absolutely_irreducible": "up-to-bound", "bound": max_power }),
                    1,
                ),
            };
            Ok((
                Outcome {
                    human,
                    result,
                    certificates: certificates_json(&f),
                    exit,
                },
                json!({ "expr": expr, "max_power": max_power }),
            ))
        }
        Verb::Construct { family } => run_construct(family, session),
        Verb::Lemma { which } => run_lemma(which, session),
        Verb::Pattern {
            p,
            n,
            s,
            t,
            cross_check,
        } => {
            let fam = pattern_family(*p, *n, *s, *t, &session.bounds)?;
            let triples = enumerate_pattern_triples(&fam)?;
            let mut human = format!(
                "G = {}\n{} factorization triples:\n",
                fam.element,
                triples.len()
            );
            for (triple, fact) in &triples {
                human.push_str(&format!(
                    "  blocks {:?} theta {:?} sigma {:?}: {}\n",
                    triple.blocks, triple.theta, triple.sigma, fact
                ));
            }
            let mut checked = false;
            if *cross_check {
                let all = enumerate_factorizations_with(&fam.element, &session.enumerate)?;
                let mut triple_facts: Vec<Factorization> =
                    triples.iter().map(|(_, f)| f.clone()).collect();
                triple_facts.sort();
                triple_facts.dedup();
                if triple_facts.len() != all.len() || !triple_facts.iter().all(|f| all.contains(f))
                {
                    return Err(Error::SelfCheck {
                        what: "triple enumeration disagrees with the generic enumerator".into(),
                    });
                }
                human.push_str("cross-check against the generic enumerator: ok\n");
                checked = true;
            }
            Ok((
                Outcome {
                    human,
                    result: json!({
                        "element": element_json(&fam.element),
                        "triples": triples.iter().map(|(triple, fact)| json!({
                            "blocks": triple.blocks,
                            "theta": triple.theta,
                            "sigma": triple.sigma,
                            "factorization": factorization_json(fact),
                        })).collect::<Vec<_>>(),
                        "cross_checked": checked,
                    }),
                    certificates: certificates_json(&fam.element),
                    exit: 0,
                },
                json!({ "p": p, "n": n, "s": s, "t": t }),
            ))
        }
        Verb::Selftest => run_selftest(session),
    }
}

fn render_factorizations(target: &FactoredIVP, facts: &[Factorization]) -> Outcome {
    let mut human = format!(
        "{} essentially different factorization(s) of {}:\n",
        facts.len(),
        target
    );
    for fact in facts {
        human.push_str(&format!(
            "  length {} type {}: {}\n",
            fact.length(),
            type_of(fact).partition,
            fact
        ));
    }
    Outcome {
        human,
        result: json!({
            "element": element_json(target),
            "count": facts.len(),
            "factorizations": facts.iter().map(factorization_json).collect::<Vec<_>>(),
        }),
        certificates: certificates_json(target),
        exit: 0,
    }
}

fn family_outcome(element: &FactoredIVP, extra: Value, human: String) -> Outcome {
    Outcome {
        human,
        result: json!({ "element": element_json(element), "details": extra }),
        certificates: certificates_json(element),
        exit: 0,
    }
}

fn run_construct(family: &Family, session: &Session) -> Result<(Outcome, Value)> {
    let bounds = &session.bounds;
    match family {
        Family::SameLength { p, n, distinct } => {
            let mut params = SameLengthParams::new(*p, *n, *distinct);
            params.bounds = bounds.clone();
            let fam = same_length_family(&params)?;
            Ok((
                family_outcome(
                    &fam.element,
                    json!({ "q": fam.q.to_string(),
                            "roots": fam.roots.iter().map(|r| r.to_string()).collect::<Vec<_>>() }),
                    format!("f = {}", fam.element),
                ),
                json!({ "family": "same-length", "p": p, "n": n, "distinct": distinct }),
            ))
        }
        Family::SameLengthSplit { p, n } => {
            let fam = same_length_split_family(*p, *n, bounds)?;
            Ok((
                family_outcome(
                    &fam.element,
                    json!({ "q": fam.q.to_string(), "r": fam.r.to_string(),
                            "roots": fam.roots.iter().map(|r| r.to_string()).collect::<Vec<_>>() }),
                    format!("f = {}", fam.element),
                ),
                json!({ "family": "same-length-split", "p": p, "n": n }),
            ))
        }
        Family::Mixed { p, q, n } => {
            let fam = mixed_prime_family(*p, *q, *n, bounds)?;
            Ok((
                family_outcome(
                    &fam.element,
                    json!({ "r": fam.r.to_string(),
                            "roots": fam.roots.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                            "square_parts": [fam.displayed.0.to_string(), fam.displayed.1.to_string()] }),
                    format!(
                        "f = {}\nf^2 = [{}] * [{}]",
                        fam.element, fam.displayed.0, fam.displayed.1
                    ),
                ),
                json!({ "family": "mixed", "p": p, "q": q, "n": n }),
            ))
        }
        Family::TwoPrime { p, q, n, m } => {
            let fam = two_prime_family(*p, *q, *n, *m, bounds)?;
            Ok((
                family_outcome(
                    &fam.element,
                    json!({ "r": fam.r.to_string(), "t": fam.t_exponent,
                            "roots": fam.roots.iter().map(|r| r.to_string()).collect::<Vec<_>>() }),
                    format!("f = {}", fam.element),
                ),
                json!({ "family": "two-prime", "p": p, "q": q, "n": n, "m": m }),
            ))
        }
        Family::VariedLength { p, n, m } => {
            let fam = varied_length_family(*p, *n, *m, bounds)?;
            Ok((
                family_outcome(
                    &fam.element,
                    json!({ "q": fam.q.to_string(), "r": fam.r.to_string(),
                            "power_factorization": factorization_json(&fam.displayed_power) }),
                    format!("f = {}\nf^{} = {}", fam.element, fam.n, fam.displayed_power),
                ),
                json!({ "family": "varied-length", "p": p, "n": n, "m": m }),
            ))
        }
        Family::Overlap { p } => {
            let fam = overlap_family(*p, bounds)?;
            Ok((
                family_outcome(
                    &fam.element,
                    json!({
                        "bases": fam.bases.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                        "replacements": fam.replacements.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                        "square_factorization": factorization_json(&fam.displayed),
                    }),
                    format!("f = {}\nf^2 = {}", fam.element, fam.displayed),
                ),
                json!({ "family": "overlap", "p": p }),
            ))
        }
        Family::Pattern { p, n, s, t } => {
            let fam = pattern_family(*p, *n, *s, *t, bounds)?;
            Ok((
                family_outcome(
                    &fam.element,
                    json!({
                        "c_primes": fam.c_primes.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
                        "d_primes": fam.d_primes.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
                        "roots": fam.roots.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                    }),
                    format!("G = {}", fam.element),
                ),
                json!({ "family": "pattern", "p": p, "n": n, "s": s, "t": t }),
            ))
        }
    }
}

fn run_lemma(which: &Lemma, session: &Session) -> Result<(Outcome, Value)> {
    match which {
        Lemma::Interchange { expr, k } => {
            let f = session.parse(expr)?;
            let pairs = find_interchangeable(&f, &session.enumerate)?;
            let disjoint = pairs.iter().find(|p| p.element_disjoint);
            let mut human = format!("{} interchangeable pair(s)\n", pairs.len());
            let mut result = json!({
                "pairs": pairs.iter().map(|p| json!({
                    "j1": p.j1, "j2": p.j2,
                    "fixdiv": p.fixdiv.to_string(),
                    "element_disjoint": p.element_disjoint,
                })).collect::<Vec<_>>(),
            });
            let exit = match disjoint {
                Some(pair) => {
                    let fact = apply_interchange(&f, pair, *k, &session.enumerate)?;
                    human.push_str(&format!("f^{} = {}\n", k, fact));
                    result["factorization"] = factorization_json(&fact);
                    result["power"] = json!(k);
                    0
                }
                None => {
                    human.push_str("no element-disjoint pair; no swap factorization\n");
                    1
                }
            };
            Ok((
                Outcome {
                    human,
                    result,
                    certificates: certificates_json(&f),
                    exit,
                },
                json!({ "expr": expr, "k": k }),
            ))
        }
        Lemma::DeepRoots { expr, take } => {
            let f = session.parse(expr)?;
            let subset = subset_counts_for(&f, &parse_product(take)?)?;
            let out = apply_deep_roots(&f, &subset, &session.enumerate)?;
            Ok((
                Outcome {
                    human: format!("f^{} = {}", out.power, out.factorization),
                    result: json!({
                        "power": out.power,
                        "factorization": factorization_json(&out.factorization),
                    }),
                    certificates: certificates_json(&f),
                    exit: 0,
                },
                json!({ "expr": expr, "take": take }),
            ))
        }
        Lemma::ClassSplit { expr, take } => {
            let f = session.parse(expr)?;
            let subset = subset_counts_for(&f, &parse_product(take)?)?;
            let out = apply_class_split(&f, &subset, &session.enumerate)?;
            Ok((
                Outcome {
                    human: format!(
                        "p = {}, n = {}, e = {}, m = {}; f^{} = {}",
                        out.p, out.n, out.e, out.m, out.power, out.factorization
                    ),
                    result: json!({
                        "p": out.p, "n": out.n, "e": out.e, "m": out.m,
                        "power": out.power,
                        "deep_classes": out.deep_classes,
                        "shallow_classes": out.shallow_classes,
                        "factorization": factorization_json(&out.factorization),
                    }),
                    certificates: certificates_json(&f),
                    exit: 0,
                },
                json!({ "expr": expr, "take": take }),
            ))
        }
    }
}

type SelftestCheck = (&'static str, fn() -> Result<()>);

fn selftest_checks() -> Vec<SelftestCheck> {
    fn check(cond: bool, what: &str) -> Result<()> {
        if cond {
            Ok(())
        } else {
            Err(Error::SelfCheck { what: what.into() })
        }
    }

    vec![
        ("fixed divisor table", || {
            for (expr, expected) in [
                ("x*(x^2+3)", 2u64),
                ("x*(x-4)*(x^2+3)", 4),
                ("x^2*(x^2+3)", 4),
                ("(x-4)^2*(x^2+3)", 4),
                ("(x-1)^2*(x^2+4)", 4),
                ("(x-3)^2*(x^2+4)", 4),
                ("x*(x-1)*(x-2)", 6),
            ] {
                let factors = parse_product(expr)?;
                let refs: Vec<(&crate::poly::IntPoly, u32)> =
                    factors.iter().map(|(g, m)| (g, *m)).collect();
                check(
                    fixed_divisor_product(&refs)? == BigUint::from(expected),
                    &format!("fixdiv({expr}) != {expected}"),
                )?;
            }
            Ok(())
        }),
        ("intro element square", || {
            let f = super::parse::parse_expression("x*(x^2+3)/2")?;
            let facts = enumerate_factorizations_with(&f.pow(2), &EnumerateOptions::default())?;
            check(facts.len() == 2, "expected exactly 2 factorizations")
        }),
        ("interchange swap", || {
            let f = super::parse::parse_expression("x*(x-4)*(x^2+3)/4")?;
            let pairs = find_interchangeable(&f, &EnumerateOptions::default())?;
            let pair =
                pairs
                    .iter()
                    .find(|p| p.element_disjoint)
                    .ok_or_else(|| Error::SelfCheck {
                        what: "no element-disjoint pair".into(),
                    })?;
            let fact = apply_interchange(&f, pair, 2, &EnumerateOptions::default())?;
            check(fact.length() == 2, "swap factorization length")
        }),
        ("deep root classes", || {
            let f = super::parse::parse_expression("(x-3)*(x^3-17)*(x^3-19)/3")?;
            let subset = subset_counts_for(&f, &parse_product("(x^3-17)*(x^3-19)")?)?;
            let out = apply_deep_roots(&f, &subset, &EnumerateOptions::default())?;
            check(
                out.power == 2 && out.factorization.length() == 3,
                "expected a length-3 square factorization",
            )
        }),
        ("class split", || {
            let f = super::parse::parse_expression("(x^4+x^3+8)*(x-3)/4")?;
            let subset = subset_counts_for(&f, &parse_product("x^4+x^3+8")?)?;
            let out = apply_class_split(&f, &subset, &EnumerateOptions::default())?;
            check(
                (out.e, out.m, out.power) == (1, 3, 2),
                "class-split parameters",
            )
        }),
        ("indispensability", || {
            let family: Vec<crate::poly::IntPoly> = vec![
                super::parse::parse_polynomial("x")?,
                super::parse::parse_polynomial("x-1")?,
                super::parse::parse_polynomial("x-2")?,
            ];
            let hit = crate::fixdiv::indispensable(&family, 1, 2)?;
            let miss = crate::fixdiv::indispensable(&family, 0, 2)?;
            check(
                hit.witness == Some(BigUint::from(1u32)) && miss.witness.is_none(),
                "witness search",
            )
        }),
        ("class valuations", || {
            let g = super::parse::parse_polynomial("x^3-17")?;
            let v = crate::fixdiv::class_valuation(&g, 3, 1, &BigUint::from(2u32))?;
            check(v == 2, "val_3 over 2+3Z")?;
            let g = super::parse::parse_polynomial("x^4+x^3+8")?;
            let even = crate::fixdiv::class_valuation(&g, 2, 1, &BigUint::from(0u32))?;
            let odd = crate::fixdiv::class_valuation(&g, 2, 1, &BigUint::from(1u32))?;
            check(even == 3 && odd == 1, "val_2 on even/odd classes")
        }),
        ("short third power", || {
            let f = super::parse::parse_expression("(x^2+4)*(x^4+7)/4")?;
            let cube = f.pow(3);
            let a = super::parse::parse_expression("(x^2+4)^3*(x^4+7)^2/64")?;
            let b = super::parse::parse_expression("x^4+7")?;
            let fact = Factorization::new(vec![a, b]);
            check(
                crate::powfact::verify_factorization(&cube, &fact)
                    && fact.parts().iter().all(|p| {
                        is_irreducible_intz_with(p, &IntZOptions::default())
                            .map(|r| r.verdict.is_irreducible())
                            .unwrap_or(false)
                    }),
                "length-2 factorization of the cube",
            )
        }),
    ]
}

fn run_selftest(session: &Session) -> Result<(Outcome, Value)> {
    let checks = selftest_checks();
    let threads = session.threads.max(1);
    let mut results: Vec<(usize, &'static str, std::result::Result<(), String>, u128)> = Vec::new();
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for chunk in checks.chunks(checks.len().div_ceil(threads)) {
            let offset = results.len() + handles.iter().map(|(_, n): &(_, usize)| n).sum::<usize>();
            handles.push((
                scope.spawn(move || {
                    chunk
                        .iter()
                        .enumerate()
                        .map(|(i, (name, f))| {
                            let t0 = Instant::now();
                            let outcome = f().map_err(|e| e.to_string());
                            (offset + i, *name, outcome, t0.elapsed().as_millis())
                        })
                        .collect::<Vec<_>>()
                }),
                chunk.len(),
            ));
        }
        for (handle, _) in handles {
            results.extend(handle.join().expect("selftest worker"));
        }
    });
    results.sort_by_key(|(i, ..)| *i);
    let mut human = String::new();
    let mut all_ok = true;
    let mut rows = Vec::new();
    for (_, name, outcome, ms) in &results {
        let ok = outcome.is_ok();
        all_ok &= ok;
        human.push_str(&format!(
            "{} {} ({} ms){}\n",
            if ok { "PASS" } else { "FAIL" },
            name,
            ms,
            outcome
                .as_ref()
                .err()
                .map(|e| format!(": {e}"))
                .unwrap_or_default()
        ));
        rows.push(json!({ "name": name, "pass": ok, "ms": ms }));
    }
    Ok((
        Outcome {
            human,
            result: json!({ "checks": rows, "all_pass": all_ok }),
            certificates: Value::Array(vec![]),
            exit: if all_ok { 0 } else { 1 },
        },
        json!({}),
    ))
}

fn verb_name(verb: &Verb) -> &'static str {
    match verb {
        Verb::Fixdiv { .. } => "fixdiv",
        Verb::Member { .. } => "member",
        Verb::Irreducible { .. } => "irreducible",
        Verb::Factorize { .. } => "factorize",
        Verb::Power { .. } => "power",
        Verb::Absirr { .. } => "absirr",
        Verb::Construct { .. } => "construct",
        Verb::Lemma { .. } => "lemma",
        Verb::Pattern { .. } => "pattern",
        Verb::Selftest => "selftest",
    }
}

/// Print without panicking when the consumer closes the pipe early.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{}", text);
}

/// Parse arguments, run, print, and return the process exit code.
pub fn main_entry() -> i32 {
    let cli = Cli::parse();
    let config = match &cli.config {
        Some(path) => match Config::load(path) {
            Ok(c) => c,
            Err(e) => {
                eprintln!("error: {}", e);
                return e.exit_code();
            }
        },
        None => Config::default(),
    };
    let mut enumerate = config.enumerate_options();
    if let Some(v) = cli.slot_cap {
        enumerate.slot_cap = v;
    }
    if let Some(v) = cli.k_max {
        enumerate.k_max = v;
    }
    let mut bounds = config.search_bounds();
    bounds.enumerate = enumerate;
    let session = Session {
        json: cli.json,
        policy: if cli.assert_irreducible {
            CertPolicy::AssertOnFailure
        } else {
            CertPolicy::Require
        },
        certify: config.certify_options(),
        enumerate,
        bounds,
        threads: cli.threads.or(config.threads).unwrap_or(1),
    };
    let t0 = Instant::now();
    match run_verb(&cli, &session) {
        Ok((outcome, input)) => {
            if session.json {
                let report = json!({
                    "schema": SCHEMA,
                    "verb": verb_name(&cli.verb),
                    "input": input,
                    "result": outcome.result,
                    "certificates": outcome.certificates,
                    "timings": { "total_ms": t0.elapsed().as_millis() },
                });
                emit(&serde_json::to_string_pretty(&report).unwrap());
            } else {
                emit(outcome.human.trim_end());
            }
            outcome.exit
        }
        Err(e) => {
            if session.json {
                let report = json!({
                    "schema": SCHEMA,
                    "verb": verb_name(&cli.verb),
                    "input": Value::Null,
                    "error": e.to_string(),
                    "timings": { "total_ms": t0.elapsed().as_millis() },
                });
                emit(&serde_json::to_string_pretty(&report).unwrap());
            } else {
                eprintln!("error: {}", e);
            }
            e.exit_code()
        }
    }
}
