//! All essentially different factorizations of a power: the square of
//! x(x^2+3)/2 factors in exactly two ways, so the element is irreducible but
//! not absolutely irreducible.

use ivp_factor::cli::parse_expression;
use ivp_factor::{enumerate_factorizations, find_nonabs_witness, EnumerateOptions};

fn main() {
    let f = parse_expression("x*(x^2+3)/2").unwrap();
    println!("f = {f}");

    let square = f.pow(2);
    for fact in enumerate_factorizations(&square).unwrap() {
        println!("  f^2 = {fact}");
    }

    match find_nonabs_witness(&f, 3, &EnumerateOptions::default()).unwrap() {
        Some((n, fact)) => println!("witness: f^{n} = {fact}"),
        None => println!("absolutely irreducible up to the probe bound"),
    }

    // a degree-one integer polynomial never acquires new factorizations
    let g = parse_expression("x-3").unwrap();
    match find_nonabs_witness(&g, 5, &EnumerateOptions::default()).unwrap() {
        Some(_) => unreachable!(),
        None => println!("x-3: absolutely irreducible up to power 5 (bounded probe)"),
    }
}
