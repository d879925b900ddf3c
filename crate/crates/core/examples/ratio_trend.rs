//! Heights of `(u-1)/(v-1)` against `h(1:u:v)` over S-unit pairs, and the
//! running minimum of the ratio over independent pairs above a height
//! threshold.
//!
//! `cargo run --release --example ratio_trend`

use sunit_gcd::gcdcore::shifted_ratio;
use sunit_gcd::qplaces::fmt_rational;
use sunit_gcd::subtori::scan_points;
use sunit_gcd::sunits::SignMode;
use sunit_gcd::PlaceSet;

fn main() -> sunit_gcd::Result<()> {
    let s = PlaceSet::new([2, 3])?;
    let mut rows = Vec::new();
    for (u, v) in scan_points(&s, 6, SignMode::Positive) {
        let (u, v) = (u.value(), v.value());
        if num_traits::One::is_one(&u) || num_traits::One::is_one(&v) {
            continue;
        }
        let r = shifted_ratio(&u, &v)?;
        if !r.dependent() {
            rows.push((u, v, r.height_1uv.ln(), r.ratio.expect("h(1:u:v) > 0")));
        }
    }
    for h0 in [2.0, 5.0, 10.0, 15.0] {
        let best = rows.iter().filter(|r| r.2 >= h0).min_by(|a, b| a.3.total_cmp(&b.3));
        if let Some((u, v, h, ratio)) = best {
            println!("h(1:u:v) >= {h0:>4}: min ratio {ratio:.6} at ({}, {}), h = {h:.3}", fmt_rational(u), fmt_rational(v));
        }
    }
    Ok(())
}
