//! The parametric element families, smallest interesting parameters each.
//! Every generator replays its own valuation and irreducibility conditions
//! before returning.

use ivp_factor::families::{
    overlap_family, same_length_family, same_length_split_family, two_prime_family,
    varied_length_family, SameLengthParams, SearchBounds,
};

fn main() {
    let bounds = SearchBounds::default();

    let fam = same_length_family(&SameLengthParams::new(3, 2, 2)).unwrap();
    println!("same-length (p=3, n=2, two distinct roots):");
    println!("  f = {}", fam.element);

    let fam = same_length_split_family(3, 2, &bounds).unwrap();
    println!("same-length with split piece (p=3, n=2):");
    println!("  f = {}", fam.element);

    let fam = varied_length_family(3, 2, 1, &bounds).unwrap();
    println!("varied-length (p=3, n=2, m=1):");
    println!("  f = {}", fam.element);
    println!("  f^{} = {}", fam.n, fam.displayed_power);

    let fam = two_prime_family(5, 3, 2, 2, &bounds).unwrap();
    println!(
        "two-prime (p=5, q=3, n=m=2), h of degree {}:",
        fam.t_exponent
    );
    println!("  f = {}", fam.element);

    let fam = overlap_family(5, &bounds).unwrap();
    println!("overlap (p=5):");
    println!("  f = {}", fam.element);
    println!("  f^2 = {}", fam.displayed);

    // the mixed family's smallest instance has a degree-12500 piece and takes
    // a few seconds; run `cargo run --example family_generators -- --mixed`
    if std::env::args().any(|a| a == "--mixed" || a == "mixed") {
        let fam = ivp_factor::families::mixed_prime_family(5, 3, 6, &bounds).unwrap();
        println!("mixed (p=5, q=3, n=6):");
        println!("  f = {}", fam.element);
        println!("  f^2 = [{}] * [{}]", fam.displayed.0, fam.displayed.1);
    }
}
