//! Replacement polynomials: swap monic inputs for monic Q-irreducible
//! stand-ins of the same degree without disturbing any sub-product's fixed
//! divisor. The property is verified exhaustively over all subsets.

use ivp_factor::cli::parse_polynomial;
use ivp_factor::families::{replacement_polys, SearchBounds};
use ivp_factor::fixed_divisor_product;

fn main() {
    let inputs = ["x", "x-1"].map(|s| parse_polynomial(s).unwrap()).to_vec();
    let replacements = replacement_polys(&inputs, &[2], &SearchBounds::default()).unwrap();
    for (f, g) in inputs.iter().zip(&replacements) {
        println!("{f}  ->  {g}");
    }
    let before = fixed_divisor_product(&[(&inputs[0], 1), (&inputs[1], 1)]).unwrap();
    let after = fixed_divisor_product(&[(&replacements[0], 1), (&replacements[1], 1)]).unwrap();
    let mixed = fixed_divisor_product(&[(&inputs[0], 1), (&replacements[1], 1)]).unwrap();
    println!("fixdiv originals = {before}, replacements = {after}, mixed = {mixed}");
}
