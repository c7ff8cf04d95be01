//! Power factorizations driven by valuation analysis: splitting off a
//! sub-product whose root classes all run deep, and the residue-class split
//! for prime-power denominators.

use ivp_factor::cli::{parse_expression, parse_product};
use ivp_factor::families::{apply_class_split, apply_deep_roots, subset_counts_for};
use ivp_factor::EnumerateOptions;

fn main() {
    let opts = EnumerateOptions::default();

    // every root class of (x^3-17)(x^3-19) mod 3 carries valuation 2 > 1
    let f = parse_expression("(x-3)*(x^3-17)*(x^3-19)/3").unwrap();
    let take = parse_product("(x^3-17)*(x^3-19)").unwrap();
    let subset = subset_counts_for(&f, &take).unwrap();
    let out = apply_deep_roots(&f, &subset, &opts).unwrap();
    println!("f = {f}");
    println!("f^{} = {}", out.power, out.factorization);

    // x^4+x^3+8 has valuation 3 on evens and 1 on odds at p = 2
    let f = parse_expression("(x^4+x^3+8)*(x-3)/4").unwrap();
    let take = parse_product("x^4+x^3+8").unwrap();
    let subset = subset_counts_for(&f, &take).unwrap();
    let out = apply_class_split(&f, &subset, &opts).unwrap();
    println!("\nf = {f}");
    println!(
        "p = {}, n = {}, deep classes {:?} (val >= {}), shallow classes {:?} (val {})",
        out.p, out.n, out.deep_classes, out.m, out.shallow_classes, out.e
    );
    println!("f^{} = {}", out.power, out.factorization);
}
