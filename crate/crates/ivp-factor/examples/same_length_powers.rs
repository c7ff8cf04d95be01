//! Elements whose powers factor non-uniquely but only at the trivial length:
//! swapping the roots between two copies of x(x-4)(x^2+3)/4 gives a second
//! length-2 factorization of the square.

use ivp_factor::cli::parse_expression;
use ivp_factor::enumerate_factorizations;

fn main() {
    let f = parse_expression("x*(x-4)*(x^2+3)/4").unwrap();
    println!("f = {f}");
    for k in [2u32, 3] {
        let facts = enumerate_factorizations(&f.pow(k)).unwrap();
        println!("f^{k} has {} factorizations:", facts.len());
        for fact in facts {
            println!("  length {}: {fact}", fact.length());
        }
    }
}
