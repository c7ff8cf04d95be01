//! Interchangeable subsets: disjoint factor subsets that can swap between two
//! copies of f without changing either fixed divisor. Element-disjoint pairs
//! produce essentially different factorizations of every power; prime
//! denominators admit none.

use ivp_factor::cli::parse_expression;
use ivp_factor::families::{apply_interchange, find_interchangeable};
use ivp_factor::EnumerateOptions;

fn main() {
    let opts = EnumerateOptions::default();
    for expr in [
        "(x-1)*(x-3)*(x^2+4)/4",
        "x*(x-4)*(x^2+3)/4",
        "x*(x^2+3)/2", // prime denominator: no pairs
    ] {
        let f = parse_expression(expr).unwrap();
        let pairs = find_interchangeable(&f, &opts).unwrap();
        println!("{expr}: {} interchangeable pair(s)", pairs.len());
        for pair in &pairs {
            println!(
                "  j1 = {:?}, j2 = {:?}, element-disjoint: {}",
                pair.j1, pair.j2, pair.element_disjoint
            );
            if pair.element_disjoint {
                for k in [2u32, 3] {
                    let fact = apply_interchange(&f, pair, k, &opts).unwrap();
                    println!("    f^{k} = {fact}");
                }
            }
        }
    }
}
