//! Command-line front end: expression/config parsing, verb dispatch, and the
//! versioned JSON report format.

mod config;
mod parse;
mod run;

pub use config::Config;
pub use parse::{parse_expression, parse_expression_with, parse_polynomial, parse_product};
pub use run::{main_entry, Cli};
