//! A square with factorizations of two different lengths: the deep root
//! classes of (x^3-17)(x^3-19) let both cubes split off as integer
//! polynomials.

use ivp_factor::cli::parse_expression;
use ivp_factor::{enumerate_factorizations, length_spectrum, EnumerateOptions};

fn main() {
    let f = parse_expression("(x-3)*(x^3-17)*(x^3-19)/3").unwrap();
    println!("f = {f}");
    let square = f.pow(2);
    let spectrum = length_spectrum(&square, &EnumerateOptions::default()).unwrap();
    println!("length spectrum of f^2: {spectrum:?}");
    for fact in enumerate_factorizations(&square).unwrap() {
        println!("  length {}: {fact}", fact.length());
    }
}
