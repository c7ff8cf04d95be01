//! Pattern elements: every factorization corresponds to a triple (root
//! partition, injection into the c's, injection into the d's), with length
//! s + t - (number of blocks). The triple enumeration is cross-checked
//! against the generic enumerator.

use ivp_factor::enumerate_factorizations;
use ivp_factor::families::{enumerate_pattern_triples, pattern_family, SearchBounds};

fn main() {
    let fam = pattern_family(3, 2, 2, 2, &SearchBounds::default()).unwrap();
    println!("G = {}", fam.element);
    println!("c-primes: {:?}", fam.c_primes);
    println!("d-primes: {:?}", fam.d_primes);

    let triples = enumerate_pattern_triples(&fam).unwrap();
    println!("{} triples:", triples.len());
    for (triple, fact) in &triples {
        println!(
            "  blocks {:?}, theta {:?}, sigma {:?} -> length {}: {fact}",
            triple.blocks,
            triple.theta,
            triple.sigma,
            fact.length()
        );
    }

    let generic = enumerate_factorizations(&fam.element).unwrap();
    println!(
        "generic enumeration finds {} factorizations (must match the triples)",
        generic.len()
    );
}
