//! The gcd analogue of two values, its integer bridge and the inequality
//! testers at a handful of S-unit points.
//!
//! `cargo run --example gcd_inequalities`

use sunit_gcd::cli::parse_function;
use sunit_gcd::gcdcore::{
    check_gcd_bound, check_height_gap, check_shifted_gcd, decomposition_identity, integer_gcd_bridge,
};
use sunit_gcd::heights::PlaceFilter;
use sunit_gcd::qplaces::{fmt_rational, int, rat};
use sunit_gcd::PlaceSet;

fn main() -> sunit_gcd::Result<()> {
    let b = integer_gcd_bridge(2u128.pow(20) as i128 - 1, 3i128.pow(20) - 1)?;
    println!("gcd(2^20-1, 3^20-1) = {}  finite log^- part = 1/{}  equal = {}", b.gcd, b.finite_part, b.equal);

    let f = parse_function("(X - 1)/(Y - 1)")?;
    let (p, q) = f.as_fraction();
    let eps = rat(1, 10);
    let s = PlaceSet::new([2, 3])?;
    for (u, v) in [(int(4), int(9)), (int(16), int(81)), (rat(1, 2), int(3)), (int(64), int(9))] {
        let d = decomposition_identity(&p, &q, &u, &v)?;
        let gap = check_height_gap(&p, &q, &u, &v, &eps)?;
        let gcd = check_gcd_bound(&p, &q, &u, &v, &eps, PlaceFilter::All)?;
        let (all, outside) = check_shifted_gcd(&u, &v, &eps, &s)?;
        println!(
            "({}, {}): identity {}  gap {:?}  gcd {:?}  shifted {:?}/{:?}  lhs={:.4} rhs={:.4}",
            fmt_rational(&u),
            fmt_rational(&v),
            d.holds,
            gap.verdict,
            gcd.verdict,
            all.verdict,
            outside.verdict,
            gcd.lhs_f64(),
            gcd.rhs_f64()
        );
    }
    Ok(())
}
