//! A cube with a factorization shorter than the power: f^3 of
//! (x^2+4)(x^4+7)/4 has a length-2 factorization.

use ivp_factor::cli::parse_expression;
use ivp_factor::enumerate_factorizations;

fn main() {
    let f = parse_expression("(x^2+4)*(x^4+7)/4").unwrap();
    println!("f = {f}");
    let cube = f.pow(3);
    for fact in enumerate_factorizations(&cube).unwrap() {
        println!("  length {}: {fact}", fact.length());
    }
}
