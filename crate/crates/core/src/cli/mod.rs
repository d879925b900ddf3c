//! Expression parsing, configuration, and CSV/JSON emitters behind the
//! `sunit-gcd` binary.

use std::fmt::Display;

use serde::Serializer;

use crate::qplaces::{fmt_rational, Rational};

pub fn ser_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rational(r))
}

pub fn ser_display<T: Display, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub mod commands;
pub mod config;
pub mod parse;

pub use parse::{is_canonical, parse_ast, parse_function, parse_value, ExprAst, Var};
pub use config::{ConfigOverrides, ScanConfig, ValidConfig};
