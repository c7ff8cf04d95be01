//! Exact arithmetic for non-unique factorization in the ring of
//! integer-valued polynomials `Int(Z) = { f in Q[x] : f(Z) ⊆ Z }`.
//!
//! The crate computes fixed divisors and p-adic class valuations, certifies
//! irreducibility over Q and in Int(Z), enumerates all essentially-different
//! factorizations of an element (typically a power f^n), probes absolute
//! irreducibility, generates parametric families of elements whose powers
//! factor in prescribed ways, and machine-checks the general lemmas behind
//! those families.
//!
//! Everything is exact integer arithmetic; no floating point is involved.
//!
//! ## Tour by example
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! cargo run --example fixed_divisors            # fixed divisors and membership
//! cargo run --example irreducibility            # certificates over Q and in Int(Z)
//! cargo run --example class_valuations          # minimum p-adic valuations on classes
//! cargo run --example power_factorizations      # all factorizations of f^2
//! cargo run --example same_length_powers        # swaps that preserve length
//! cargo run --example different_length_powers   # powers with several lengths
//! cargo run --example shorter_than_power        # f^3 with a length-2 factorization
//! cargo run --example factorization_types       # types over partitions of 4
//! cargo run --example pattern_triples           # block/injection pattern elements
//! cargo run --example interchangeable_subsets   # swap witnesses and their use
//! cargo run --example indispensable_witnesses   # per-prime indispensability
//! cargo run --example replacement_polynomials   # fixed-divisor-preserving replacements
//! cargo run --example family_generators         # the parametric element families
//! cargo run --example valuation_splits          # class-split power factorizations
//! ```
//!
//! The `ivp-factor` binary exposes the same operations as subcommands; see the
//! README for the CLI and its JSON report schema.

pub mod arith;
pub mod error;
pub mod poly;

pub mod factored;
pub mod fixdiv;
pub mod irred;

pub mod families;
pub mod powfact;

pub mod cli;

pub use error::{Error, Result};
pub use factored::{associated_intz, element, CertPolicy, FactorEntry, FactoredIVP, Sign};
pub use fixdiv::{
    class_valuation, class_valuation_product, fixed_divisor, fixed_divisor_product, indispensable,
    is_image_primitive, is_member, prime_bound_candidates, valuation_of_fixdiv_on_classes,
    ClassValuationQuery, IndispensabilityResult,
};
pub use irred::{
    certify_q_irreducible, is_irreducible_intz, is_irreducible_intz_with, replay_certificate,
    CertifyFailure, CertifyOptions, IntZIrredReport, IntZOptions, IntZVerdict, IrredCertificate,
    ReducibleSplit,
};
pub use poly::IntPoly;
pub use powfact::{
    enumerate_factorizations, enumerate_factorizations_with, essentially_same, find_nonabs_witness,
    length_spectrum, refine_to_irreducibles, type_of, verify_factorization, EnumerateOptions,
    Factorization, FactorizationType, NumberPartition,
};
