//! Cross-module invariants on random inputs.

use proptest::prelude::*;

use sunit_gcd::gcdcore::decomposition_of_values;
use sunit_gcd::heights::{height_projective, height_rational};
use sunit_gcd::qplaces::{rat, rpow};
use sunit_gcd::sunits::{dependence, SUnit};
use sunit_gcd::{PlaceSet, Rational};

fn nonzero() -> impl Strategy<Value = Rational> {
    (1i64..1_000_000, 1i64..1_000_000, any::<bool>()).prop_map(|(n, d, neg)| rat(if neg { -n } else { n }, d))
}

fn s_unit() -> impl Strategy<Value = (i64, i64, bool)> {
    (-12i64..=12, -12i64..=12, any::<bool>())
}

fn value((a, b, neg): (i64, i64, bool)) -> Rational {
    let x = rpow(&rat(2, 1), a) * rpow(&rat(3, 1), b);
    if neg {
        -x
    } else {
        x
    }
}

proptest! {
    #[test]
    fn projective_height_ignores_scaling(a in nonzero(), b in nonzero(), c in nonzero(), l in nonzero()) {
        let h = height_projective(&[a.clone(), b.clone(), c.clone()]).unwrap();
        let hl = height_projective(&[&a * &l, &b * &l, &c * &l]).unwrap();
        prop_assert_eq!(h, hl);
    }

    #[test]
    fn weil_height_of_inverse(x in nonzero()) {
        prop_assert_eq!(height_rational(&x), height_rational(&x.recip()));
        prop_assert_eq!(height_rational(&x), height_projective(&[x.clone(), rat(1, 1)]).unwrap());
    }

    #[test]
    fn decomposition_for_any_pair(a in nonzero(), b in nonzero()) {
        prop_assert!(decomposition_of_values(&a, &b).unwrap().holds);
    }

    #[test]
    fn dependence_matches_exponent_determinant(x in s_unit(), y in s_unit()) {
        let s = PlaceSet::new([2, 3]).unwrap();
        let (u, v) = (value(x), value(y));
        let su = SUnit::from_rational(&u, &s).unwrap();
        let sv = SUnit::from_rational(&v, &s).unwrap();
        let det = x.0 * y.1 - x.1 * y.0;
        match dependence(&su, &sv) {
            Some(rel) => {
                prop_assert_eq!(det, 0);
                prop_assert!(rel.holds_at(&u, &v));
                prop_assert!(rel.w == rat(1, 1) || rel.w == rat(-1, 1));
            }
            None => prop_assert_ne!(det, 0),
        }
    }
}
