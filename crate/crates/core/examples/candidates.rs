//! The three candidate generators: colliding monomials of a function, short
//! directions for a given epsilon, and the scaled translates.
//!
//! `cargo run --example candidates`

use sunit_gcd::cli::commands::{candidates, CandidateMode, Format};
use sunit_gcd::qplaces::{int, rat};

fn main() -> sunit_gcd::Result<()> {
    let modes = [
        CandidateMode::Collision { function: "(X^2 - 4*Y)/(X*Y + 1)".into() },
        CandidateMode::Bounded { epsilon: rat(1, 2) },
        CandidateMode::Scaled { theta: int(2), eta: rat(1, 3), epsilon: rat(1, 2) },
    ];
    for mode in &modes {
        println!("{mode:?}");
        print!("{}", candidates(mode, Format::Csv)?.text);
    }
    print!("{}", candidates(&modes[0], Format::Json)?.text);
    Ok(())
}
