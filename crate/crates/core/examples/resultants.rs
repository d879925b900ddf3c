//! Resultants of coprime polynomials and the divisibility of the two gcd
//! analogues at an S-unit point.
//!
//! `cargo run --example resultants`

use sunit_gcd::cli::parse_function;
use sunit_gcd::gcdcore::{integer_resultants, resultant_chain};
use sunit_gcd::laurent::{resultant_x, resultant_y};
use sunit_gcd::qplaces::{fmt_rational, int};
use sunit_gcd::PlaceSet;

fn main() -> sunit_gcd::Result<()> {
    let f = parse_function("(X^2 - Y)/(X*Y - 2)")?;
    let (p, q) = f.as_fraction();
    println!("Res_Y(p, q) = {}", resultant_y(&p, &q)?);
    println!("Res_X(p, q) = {}", resultant_x(&p, &q)?);
    let (r, s) = integer_resultants(&p, &q)?;
    println!("primitive integer forms: r(X) = {r}, s(Y) = {s}");

    let set = PlaceSet::new([2, 3])?;
    for (u, v) in [(int(3), int(8)), (int(4), int(2)), (int(6), int(27))] {
        let c = resultant_chain(&p, &q, &u, &v, &set)?;
        println!(
            "(u,v)=({}, {}): gcd outside S of p,q = {}, of r,s = {}, divides = {}",
            fmt_rational(&u),
            fmt_rational(&v),
            c.gcd_pq,
            c.gcd_rs,
            c.divides
        );
    }
    Ok(())
}
