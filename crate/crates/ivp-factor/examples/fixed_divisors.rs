//! Fixed divisors and membership in Int(Z).
//!
//! The fixed divisor of g is gcd{g(a) : a in Z}; a quotient g/b is
//! integer-valued exactly when b divides it.

use ivp_factor::cli::{parse_expression, parse_product};
use ivp_factor::{fixed_divisor_product, is_member, IntPoly};

fn main() {
    println!("fixed divisors:");
    for expr in [
        "x*(x^2+3)",
        "x*(x-4)*(x^2+3)",
        "x^2*(x^2+3)",
        "(x-4)^2*(x^2+3)",
        "(x-1)^2*(x^2+4)",
        "(x-3)^2*(x^2+4)",
        "x*(x-1)*(x-2)",
    ] {
        let factors = parse_product(expr).unwrap();
        let refs: Vec<(&IntPoly, u32)> = factors.iter().map(|(g, m)| (g, *m)).collect();
        println!(
            "  fixdiv({expr}) = {}",
            fixed_divisor_product(&refs).unwrap()
        );
    }

    println!("\nmembership:");
    for expr in ["x*(x^2+3)/2", "x*(x^2+3)/4", "(x-3)*(x^3-17)*(x^3-19)/3"] {
        let f = parse_expression(expr).unwrap();
        println!(
            "  {} is {}a member of Int(Z)",
            expr,
            if is_member(&f).unwrap() { "" } else { "NOT " }
        );
    }
}
