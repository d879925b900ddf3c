//! Scans S-unit points for violations of the shifted gcd bound and sorts
//! them into candidate subtori, other dependent points and independent
//! points.
//!
//! `cargo run --release --example exceptional_scan`

use sunit_gcd::logcmp::DecisionPolicy;
use sunit_gcd::qplaces::rat;
use sunit_gcd::subtori::{scan, Classification, ScanKind, ScanSpec};
use sunit_gcd::sunits::SignMode;
use sunit_gcd::PlaceSet;

fn main() -> sunit_gcd::Result<()> {
    let spec = ScanSpec {
        kind: ScanKind::ShiftedGcd,
        function: None,
        resultants: None,
        s: PlaceSet::new([2, 3])?,
        bound: 6,
        epsilon: rat(3, 5),
        signs: SignMode::Positive,
        policy: DecisionPolicy::default(),
    };
    let out = scan(&spec)?;
    println!("{} points, {} solutions, skipped {:?}", out.points_tested, out.solutions.len(), out.skipped);
    println!("candidates: {:?}", out.candidates.relations().map(|r| (r.p, r.q)).collect::<Vec<_>>());
    for sol in &out.solutions {
        let tag = match &sol.class {
            Classification::OnCandidate(r) => format!("on u^{} v^{} = {}", r.p, r.q, r.w),
            Classification::DependentSporadic(r) => format!("dependent u^{} v^{} = {}", r.p, r.q, r.w),
            Classification::Independent => "independent".into(),
        };
        println!("  ({}, {})  {:.3} < {:.3}  {tag}", sol.u, sol.v, sol.lhs.to_f64(), sol.rhs.to_f64());
    }
    Ok(())
}
