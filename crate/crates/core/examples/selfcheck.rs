//! Runs the exact identity suites on seeded random inputs.
//!
//! `cargo run --release --example selfcheck -- 42`

fn main() -> sunit_gcd::Result<()> {
    let seed = std::env::args().nth(1).map_or(0, |s| s.parse().expect("seed: integer"));
    let out = sunit_gcd::cli::commands::selfcheck(seed)?;
    print!("{}", out.text);
    std::process::exit(out.exit);
}
