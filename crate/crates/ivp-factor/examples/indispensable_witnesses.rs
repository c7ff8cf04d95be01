//! Indispensability witnesses: an integer z showing that exactly one member
//! of a family carries the prime p at z. Within x(x-1)(x-2), the middle
//! factor is indispensable for 2 (any odd number witnesses it); the outer two
//! are not.

use ivp_factor::cli::parse_polynomial;
use ivp_factor::indispensable;

fn main() {
    let family = ["x", "x-1", "x-2"]
        .map(|s| parse_polynomial(s).unwrap())
        .to_vec();
    for (k, name) in ["x", "x-1", "x-2"].iter().enumerate() {
        let result = indispensable(&family, k, 2).unwrap();
        match &result.witness {
            Some(z) => println!("{name} is indispensable for 2, witness z = {z}"),
            None => println!("{name} is not indispensable for 2"),
        }
        assert!(result.replay(&family));
    }
}
