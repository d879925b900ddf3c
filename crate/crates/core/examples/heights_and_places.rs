//! Absolute values at every place, the product formula and Weil heights.
//!
//! `cargo run --example heights_and_places`

use sunit_gcd::heights::{height_affine_point, height_projective, height_rational};
use sunit_gcd::qplaces::{abs_at, factor, fmt_rational, product_formula_check, rat, valuation};
use num_bigint::BigUint;
use sunit_gcd::PlaceSet;

fn main() -> sunit_gcd::Result<()> {
    let x = rat(-360, 77);
    let s = PlaceSet::new([2, 3, 5, 7, 11])?;
    for place in s.places() {
        println!("|{}|_{place} = {}", fmt_rational(&x), fmt_rational(&abs_at(&x, &place)));
    }
    println!("v_2 = {}", valuation(&x, 2)?);
    let r = product_formula_check(&x)?;
    println!("finite part {} * archimedean {} = {}", fmt_rational(&r.finite_part), fmt_rational(&r.archimedean), fmt_rational(&r.total));

    let h = height_rational(&x);
    println!("H(x) = {}  h(x) = {:.6}", fmt_rational(h.value()), h.ln());
    let pt = [rat(1, 2), rat(3, 4), rat(-5, 6)];
    println!("H(1/2:3/4:-5/6) = {}", fmt_rational(height_projective(&pt)?.value()));
    println!("H(1, 1/2, 3/4, -5/6) = {}", fmt_rational(height_affine_point(&pt)?.value()));

    let n: BigUint = "999999866000004473".parse().expect("integer literal");
    let f = factor(&n)?;
    println!("{n} = {}", f.iter().map(|(p, e)| format!("{p}^{e}")).collect::<Vec<_>>().join(" * "));
    Ok(())
}
