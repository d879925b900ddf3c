//! Parsing functions of `X, Y`, canonical printing and positioned errors.
//!
//! `cargo run --example parse_expressions`

use sunit_gcd::cli::{parse_ast, parse_function, parse_value};
use sunit_gcd::qplaces::fmt_rational;

fn main() {
    for text in ["(X - 1)/(Y - 1)", "1 + 2/3*X^2*Y^-1", "-X*Y -  -3", "(X+Y)/(2*X+2*Y)", "X^Y", "(X-1)/(Y-1"] {
        match parse_ast(text) {
            Ok(ast) => match parse_function(text) {
                Ok(f) => println!("{text:<20} -> {ast:<24} lowered {f}"),
                Err(e) => println!("{text:<20} -> {ast:<24} rejected: {e}"),
            },
            Err(e) => println!("{text:<20} -> {e}"),
        }
    }
    for text in ["-2^4*3^-1", "81", "1/2"] {
        match parse_value(text) {
            Ok(v) => println!("{text} = {}", fmt_rational(&v)),
            Err(e) => println!("{text}: {e}"),
        }
    }
}
