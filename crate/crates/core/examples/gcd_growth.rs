//! `gcd(a^n - 1, b^n - 1)` and its logarithmic growth rate.
//!
//! `cargo run --example gcd_growth -- 2 3 40`

use num_bigint::BigUint;
use sunit_gcd::cli::commands::gcd_growth;

fn main() -> sunit_gcd::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg = |i: usize, d: &str| args.get(i).cloned().unwrap_or_else(|| d.to_string());
    let a: BigUint = arg(0, "2").parse().expect("a: integer");
    let b: BigUint = arg(1, "3").parse().expect("b: integer");
    let n: u32 = arg(2, "40").parse().expect("n_max: integer");
    let out = gcd_growth(&a, &b, n)?;
    for w in &out.warnings {
        eprintln!("warning: {w}");
    }
    print!("{}", out.text);
    Ok(())
}
