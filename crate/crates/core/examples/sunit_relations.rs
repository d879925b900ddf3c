//! S-units, multiplicative dependence and the parametrization of a
//! subtorus translate.
//!
//! `cargo run --example sunit_relations`

use sunit_gcd::qplaces::{fmt_rational, int, rat};
use sunit_gcd::sunits::{dependence, enumerate, parametrize, MultiplicativeRelation, SUnit, SignMode};
use sunit_gcd::PlaceSet;

fn main() -> sunit_gcd::Result<()> {
    let s = PlaceSet::new([2, 3])?;
    let count = enumerate(&s, 2, SignMode::Both).count();
    println!("S-units of {s} with exponents in [-2, 2], both signs: {count}");

    for (a, b) in [(int(4), int(8)), (int(12), rat(1, 18)), (int(2), int(3)), (int(-8), int(4))] {
        let u = SUnit::from_rational(&a, &s)?;
        let v = SUnit::from_rational(&b, &s)?;
        match dependence(&u, &v) {
            Some(rel) => println!("{} {}: dependent, u^{} v^{} = {}", fmt_rational(&a), fmt_rational(&b), rel.p, rel.q, fmt_rational(&rel.w)),
            None => println!("{} {}: independent", fmt_rational(&a), fmt_rational(&b)),
        }
    }

    // 6^2 / 144 = 1/4
    let rel = MultiplicativeRelation::new(2, -1, rat(1, 4))?;
    let u = SUnit::from_rational(&int(6), &s)?;
    let v = SUnit::from_rational(&int(144), &s)?;
    let par = parametrize(&u, &v, &rel)?;
    println!(
        "u^2 v^-1 = 1/4 at (6, 144): t = {}, wbar = {}, back to ({}, {})",
        fmt_rational(&par.t),
        fmt_rational(&par.wbar),
        fmt_rational(&par.u()),
        fmt_rational(&par.v())
    );
    Ok(())
}
