//! Factorization types: grouping the parts of each factorization by
//! association yields a partition of the slot count. One element realizes
//! every partition of 4 except (4) itself.

use std::collections::BTreeMap;

use ivp_factor::cli::parse_expression;
use ivp_factor::{enumerate_factorizations, type_of};

fn main() {
    let f = parse_expression("(x^8-17)^4*(x-4)^2*(x-8)^2/16").unwrap();
    println!("f = {f}");
    let facts = enumerate_factorizations(&f).unwrap();
    println!("{} factorizations:", facts.len());
    let mut by_type: BTreeMap<String, usize> = BTreeMap::new();
    for fact in &facts {
        let t = type_of(fact).partition.to_string();
        *by_type.entry(t.clone()).or_insert(0) += 1;
        println!("  type {t}, length {}: {fact}", fact.length());
    }
    println!("\ncount per type: {by_type:?}");
}
