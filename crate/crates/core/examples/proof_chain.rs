//! Parameters, the auxiliary point and the full chain of bounds on the
//! double product at an S-unit point.
//!
//! `cargo run --release --example proof_chain`

use sunit_gcd::proofscope::{build_point, choose_params, hp_bound_check, verify_chain};
use sunit_gcd::qplaces::{fmt_rational, int, rat};
use sunit_gcd::PlaceSet;

fn main() -> sunit_gcd::Result<()> {
    for eps in [int(1), rat(3, 5), rat(1, 4)] {
        let p = choose_params(&eps)?;
        println!("eps={}: k={} h={} N={} eps0={} delta={}", fmt_rational(&eps), p.k, p.h, p.n, fmt_rational(&p.epsilon0), fmt_rational(&p.delta));
    }
    let pt = build_point(&int(4), &int(9), 2, 3)?;
    println!("P(4, 9) with k=2 h=3 has {} coordinates; z_1 = {}", pt.len(), fmt_rational(pt.z(1)));
    let hp = hp_bound_check(&int(4), &int(9), 2, 3)?;
    println!("H(P) = {} (bounds hold: {})", fmt_rational(hp.height_point.value()), hp.holds());

    let s = PlaceSet::new([2, 3])?;
    let ledger = verify_chain(&int(16), &int(81), &choose_params(&rat(3, 5))?, &s)?;
    print!("{ledger}");
    println!("final bound: {:?}", ledger.final_bound());
    Ok(())
}
