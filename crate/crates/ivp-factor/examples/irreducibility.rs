//! Irreducibility certificates over Q and verdicts in Int(Z).

use ivp_factor::cli::{parse_expression, parse_polynomial};
use ivp_factor::{certify_q_irreducible, is_irreducible_intz, CertifyOptions, IntZVerdict};

fn main() {
    println!("certificates over Q:");
    let opts = CertifyOptions::default();
    for text in ["x-3", "x^2+4", "x^6-109", "x^4+x^3+8", "x^4+7", "x^8-17"] {
        let g = parse_polynomial(text).unwrap();
        match certify_q_irreducible(&g, &opts) {
            Ok(cert) => println!("  {text}: {cert}"),
            Err(e) => println!("  {text}: {e:?}"),
        }
    }

    println!("\nverdicts in Int(Z):");
    for expr in [
        "x*(x^2+3)/2",
        "x^2*(x^2+3)/4",
        "(x^3-17)*(x^3-19)",
        "x*(x^2+3)/4",
        "x*(x^2+3)",
    ] {
        let f = parse_expression(expr).unwrap();
        let report = is_irreducible_intz(&f).unwrap();
        let verdict = match &report.verdict {
            IntZVerdict::Irreducible => "irreducible".to_string(),
            IntZVerdict::Reducible(split) => match split {
                ivp_factor::ReducibleSplit::Parts(a, b) => format!("reducible: ({a}) * ({b})"),
                ivp_factor::ReducibleSplit::ConstantFactor { constant, rest } => {
                    format!("reducible: {constant} * ({rest})")
                }
            },
            IntZVerdict::NotMember => format!("not a member (fixdiv = {})", report.fixdiv),
            IntZVerdict::Inconclusive { reason } => format!("inconclusive: {reason}"),
        };
        println!("  {expr}: {verdict}");
    }
}
