//! S-units of `Q`, multiplicative dependence of pairs, and the
//! parametrization `u = t^q, v = wbar * t^-p` of a subtorus translate.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qplaces::{abs_num, den, factor, fmt_rational, rpow, PlaceSet, Rational};

/// `sign * prod p^e` over primes of some `S`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SUnit {
    sign: i8,
    /// Nonzero exponents only.
    exponents: BTreeMap<u64, i64>,
}

impl SUnit {
    pub fn one() -> Self {
        SUnit { sign: 1, exponents: BTreeMap::new() }
    }

    pub fn from_parts(sign: i8, exponents: impl IntoIterator<Item = (u64, i64)>) -> Self {
        assert!(sign == 1 || sign == -1);
        SUnit {
            sign,
            exponents: exponents.into_iter().filter(|&(_, e)| e != 0).collect(),
        }
    }

    /// Decomposes `x` over the primes of `S`, failing on the first prime
    /// outside `S`.
    pub fn from_rational(x: &Rational, s: &PlaceSet) -> Result<SUnit> {
        let u = Self::from_rational_any(x)?;
        if let Some(&p) = u.exponents.keys().find(|&&p| !s.contains_prime(p)) {
            return Err(Error::NotSUnit(fmt_rational(x), p));
        }
        Ok(u)
    }

    /// Decomposes a nonzero rational over the primes dividing it.
    pub fn from_rational_any(x: &Rational) -> Result<SUnit> {
        if x.is_zero() {
            return Err(Error::ValuationOfZero);
        }
        let mut exps = BTreeMap::new();
        for (p, e) in factor(&abs_num(x))? {
            exps.insert(p, e as i64);
        }
        for (p, e) in factor(&den(x))? {
            exps.insert(p, -(e as i64));
        }
        Ok(SUnit { sign: if x.is_negative() { -1 } else { 1 }, exponents: exps })
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn exponents(&self) -> &BTreeMap<u64, i64> {
        &self.exponents
    }

    pub fn exponent(&self, p: u64) -> i64 {
        self.exponents.get(&p).copied().unwrap_or(0)
    }

    /// `u = +-1`.
    pub fn is_torsion(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn value(&self) -> Rational {
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for (&p, &e) in &self.exponents {
            let pp = BigUint::from(p).pow(e.unsigned_abs() as u32);
            if e > 0 {
                num *= pp;
            } else {
                den *= pp;
            }
        }
        Rational::new(BigInt::from(self.sign) * BigInt::from(num), BigInt::from(den))
    }

    /// `self^a * other^b`.
    pub fn pow_mul(&self, a: i64, other: &SUnit, b: i64) -> SUnit {
        let mut exps = BTreeMap::new();
        for p in self.exponents.keys().chain(other.exponents.keys()) {
            exps.insert(*p, a * self.exponent(*p) + b * other.exponent(*p));
        }
        let neg = (self.sign < 0 && a.rem_euclid(2) == 1) ^ (other.sign < 0 && b.rem_euclid(2) == 1);
        SUnit::from_parts(if neg { -1 } else { 1 }, exps)
    }
}

impl fmt::Display for SUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_rational(&self.value()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum SignMode {
    Both,
    #[default]
    Positive,
}

/// All S-units with every exponent in `[-bound, bound]`, lexicographic in
/// the exponent vector (primes of `S` ascending), then `+` before `-`.
pub fn enumerate(s: &PlaceSet, bound: u32, signs: SignMode) -> impl Iterator<Item = SUnit> + '_ {
    let b = bound as i64;
    let k = s.primes().len();
    let width = (2 * b + 1) as u128;
    let total = width.pow(k as u32);
    let sign_choices: &'static [i8] = match signs {
        SignMode::Both => &[1, -1],
        SignMode::Positive => &[1],
    };
    (0..total).flat_map(move |mut idx| {
        let mut digits = vec![0i64; k];
        for slot in digits.iter_mut().rev() {
            *slot = (idx % width) as i64 - b;
            idx /= width;
        }
        let primes = s.primes().to_vec();
        sign_choices
            .iter()
            .map(move |&sg| SUnit::from_parts(sg, primes.iter().copied().zip(digits.iter().copied())))
    })
}

/// `u^p v^q = w` with coprime `(p, q)` in canonical sign.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MultiplicativeRelation {
    pub p: i64,
    pub q: i64,
    #[serde(serialize_with = "crate::cli::ser_rational")]
    pub w: Rational,
}

impl MultiplicativeRelation {
    /// Normalizes to `p > 0`, or `p = 0, q > 0`; flipping the sign inverts `w`.
    pub fn new(p: i64, q: i64, w: Rational) -> Result<Self> {
        if (p, q) == (0, 0) {
            return Err(Error::InvalidParameter("relation (0, 0)".into()));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidParameter(format!("({p}, {q}) not coprime")));
        }
        if w.is_zero() {
            return Err(Error::InvalidParameter("w = 0".into()));
        }
        if p < 0 || (p == 0 && q < 0) {
            Ok(MultiplicativeRelation { p: -p, q: -q, w: w.recip() })
        } else {
            Ok(MultiplicativeRelation { p, q, w })
        }
    }

    /// The subgroup `u^p v^q = 1`.
    pub fn subgroup(p: i64, q: i64) -> Result<Self> {
        Self::new(p, q, Rational::one())
    }

    pub fn holds_at(&self, u: &Rational, v: &Rational) -> bool {
        if u.is_zero() || v.is_zero() {
            return false;
        }
        rpow(u, self.p) * rpow(v, self.q) == self.w
    }
}

impl fmt::Display for MultiplicativeRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u^{} v^{} = {}", self.p, self.q, fmt_rational(&self.w))
    }
}

/// The minimal relation of a dependent pair, or `None` if `u, v` are
/// multiplicatively independent. A torsion coordinate gives the axis
/// relation `u = +-1` (checked first) or `v = +-1`.
pub fn dependence(u: &SUnit, v: &SUnit) -> Option<MultiplicativeRelation> {
    if u.is_torsion() {
        return MultiplicativeRelation::new(1, 0, u.value()).ok();
    }
    if v.is_torsion() {
        return MultiplicativeRelation::new(0, 1, v.value()).ok();
    }
    let primes: BTreeSet<u64> = u.exponents.keys().chain(v.exponents.keys()).copied().collect();
    let pivot = *u.exponents.keys().next().expect("non-torsion");
    let (a, b) = (u.exponent(pivot), v.exponent(pivot));
    // kernel of the two exponent columns restricted to the pivot prime
    let g = a.gcd(&b);
    let (p, q) = (b / g, -a / g);
    if primes.iter().any(|&r| p * u.exponent(r) + q * v.exponent(r) != 0) {
        return None;
    }
    let w = u.pow_mul(p, v, q);
    debug_assert!(w.is_torsion());
    MultiplicativeRelation::new(p, q, w.value()).ok()
}

pub fn on_subtorus(u: &SUnit, v: &SUnit, rel: &MultiplicativeRelation) -> bool {
    u.pow_mul(rel.p, v, rel.q).value() == rel.w
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Parametrization {
    #[serde(serialize_with = "crate::cli::ser_rational")]
    pub t: Rational,
    #[serde(serialize_with = "crate::cli::ser_rational")]
    pub wbar: Rational,
    pub p: i64,
    pub q: i64,
}

impl Parametrization {
    pub fn u(&self) -> Rational {
        rpow(&self.t, self.q)
    }

    pub fn v(&self) -> Rational {
        &self.wbar * rpow(&self.t, -self.p)
    }
}

/// Positive `n`-th root of a rational when one exists in `Q`, honoring the
/// sign for odd `n`.
pub fn rational_root(x: &Rational, n: u32) -> Option<Rational> {
    if n == 0 {
        return None;
    }
    if x.is_zero() {
        return Some(Rational::zero());
    }
    if x.is_negative() && n.is_multiple_of(2) {
        return None;
    }
    let a = abs_num(x);
    let c = den(x);
    let ra = a.nth_root(n);
    let rc = c.nth_root(n);
    if ra.pow(n) != a || rc.pow(n) != c {
        return None;
    }
    let r = Rational::new(BigInt::from(ra), BigInt::from(rc));
    Some(if x.is_negative() { -r } else { r })
}

/// Writes a point of `u^p v^q = w` as `u = t^q, v = wbar t^-p` with `t`
/// rational.
pub fn parametrize(u: &SUnit, v: &SUnit, rel: &MultiplicativeRelation) -> Result<Parametrization> {
    if !on_subtorus(u, v, rel) {
        return Err(Error::NotOnSubtorus);
    }
    let (p, q) = (rel.p, rel.q);
    if q == 0 {
        // u = t^0 forces u = 1; the translate u = w itself is not of this shape
        if u.value().is_one() {
            return Ok(Parametrization { t: Rational::one(), wbar: v.value(), p, q });
        }
        return Err(Error::DegenerateParametrization { p, q });
    }
    let base = if q > 0 { u.value() } else { u.value().recip() };
    let t = rational_root(&base, q.unsigned_abs() as u32).ok_or(Error::NeedsExtension)?;
    let wbar = v.value() * rpow(&t, p);
    let out = Parametrization { t, wbar, p, q };
    if out.u() != u.value() || out.v() != v.value() {
        return Err(Error::Invariant("parametrization round trip".into()));
    }
    Ok(out)
}
