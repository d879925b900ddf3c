//! Collapse of a Laurent polynomial along a subtorus translate and the
//! monomial height bound.
//!
//! `cargo run --example laurent_collapse`

use sunit_gcd::cli::parse_function;
use sunit_gcd::laurent::{collapse_coefficients, monomial_height_bound, support_line_test, MonomialSet, univariate_degree, Function};
use sunit_gcd::qplaces::{fmt_rational, int, rat};

fn main() -> sunit_gcd::Result<()> {
    let Function::Laurent(f) = parse_function("X^2*Y + 3*X*Y^-1 - 4 + Y^3")? else {
        unreachable!("no quotient")
    };
    println!("f = {f}, degrees {:?}", f.degrees());
    for (p, q, wbar) in [(1, 1, int(1)), (2, -1, int(1)), (0, 1, rat(1, 2))] {
        let phi = collapse_coefficients(&f, p, q, &wbar);
        let coeffs: Vec<String> = phi.by_degree.iter().map(|(l, c)| format!("t^{l}:{}", fmt_rational(c))).collect();
        println!(
            "(p,q)=({p},{q}) wbar={}: {}  collisions {:?} degree {:?}",
            fmt_rational(&wbar),
            coeffs.join(" "),
            phi.collisions,
            univariate_degree(&phi).ok()
        );
    }

    let t = MonomialSet::new(f.support());
    println!("support on a line: {:?}", support_line_test(&t).map(|l| l.direction));
    let r = monomial_height_bound(&t, &rat(9, 4), &rat(-1, 8))?;
    println!(
        "max H(T_i) = {}, H(u) = {}, H(v) = {}, holds = {}",
        fmt_rational(r.lhs.value()),
        fmt_rational(r.height_u.value()),
        fmt_rational(r.height_v.value()),
        r.holds
    );
    Ok(())
}
