//! Minimum p-adic valuations over residue classes: the arithmetic that makes
//! quotients integer-valued and drives every family construction.

use ivp_factor::cli::parse_polynomial;
use ivp_factor::{class_valuation, valuation_of_fixdiv_on_classes};
use num_bigint::BigUint;

fn main() {
    // gcd(a^3 - 17 : a ≡ 2 mod 3) = 3^2
    let g = parse_polynomial("x^3-17").unwrap();
    let v = class_valuation(&g, 3, 1, &BigUint::from(2u32)).unwrap();
    println!("min val_3(a^3-17) over a ≡ 2 (mod 3) = {v}");

    // per-class table for (x^3-17)(x^3-19) at 3
    let h = parse_polynomial("x^3-19").unwrap();
    let gh = g.mul(&h);
    let table = valuation_of_fixdiv_on_classes(&gh, 3).unwrap();
    println!("val_3 of (x^3-17)(x^3-19) per class mod 3: {table:?}");

    // the even/odd split of x^4 + x^3 + 8 at 2
    let g = parse_polynomial("x^4+x^3+8").unwrap();
    let even = class_valuation(&g, 2, 1, &BigUint::from(0u32)).unwrap();
    let odd = class_valuation(&g, 2, 1, &BigUint::from(1u32)).unwrap();
    println!("x^4+x^3+8: min val_2 on evens = {even}, on odds = {odd}");

    // deeper classes: x^2 - 17 on the odd class
    let g = parse_polynomial("x^2-17").unwrap();
    let v = class_valuation(&g, 2, 1, &BigUint::from(1u32)).unwrap();
    println!("min val_2(b^2-17) over odd b = {v}");
}
