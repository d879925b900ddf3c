//! Rational numbers, places of `Q` and their normalized absolute values.
//!
//! The finite place `p` carries `|x|_p = p^(-v_p(x))`, the archimedean place
//! the usual absolute value. Both are exact rationals here: every element of
//! `Q` has a rational archimedean absolute value, so nothing in this module
//! ever rounds.

pub mod factor;

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
pub use factor::{factor, factor_with, is_prime_u64, FactorConfig, Factorization};

/// Arbitrary-precision integer.
pub type Integer = BigInt;
/// Reduced fraction with positive denominator; zero is `0/1`.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `r^e` for any integer exponent; `r` must be nonzero when `e < 0`.
pub fn rpow(r: &Rational, e: i64) -> Rational {
    let mag = e.unsigned_abs();
    let num = r.numer().pow(mag as u32);
    let den = r.denom().pow(mag as u32);
    debug_assert!(mag <= u32::MAX as u64);
    // powers of coprime integers stay coprime
    if e >= 0 {
        Rational::new_raw(num, den)
    } else if num.is_negative() {
        Rational::new_raw(-den, -num)
    } else {
        Rational::new_raw(den, num)
    }
}

pub fn abs_num(r: &Rational) -> BigUint {
    r.numer().magnitude().clone()
}

pub fn den(r: &Rational) -> BigUint {
    r.denom().magnitude().clone()
}

/// Exponent of the prime `p` in `n > 0`.
pub fn uint_valuation(n: &BigUint, p: u64) -> u64 {
    let pb = BigUint::from(p);
    let mut v = 0;
    let mut rest = n.clone();
    if rest.is_zero() {
        return 0;
    }
    loop {
        let (q, r) = rest.div_rem(&pb);
        if !r.is_zero() {
            return v;
        }
        v += 1;
        rest = q;
    }
}

/// Removes every power of `p` from `n`.
pub fn strip_prime(n: &BigUint, p: u64) -> BigUint {
    let pb = BigUint::from(p);
    let mut rest = n.clone();
    if rest.is_zero() {
        return rest;
    }
    loop {
        let (q, r) = rest.div_rem(&pb);
        if !r.is_zero() {
            return rest;
        }
        rest = q;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Place {
    Archimedean,
    Finite(u64),
}

impl Place {
    pub fn finite(p: u64) -> Result<Place> {
        if is_prime_u64(p) {
            Ok(Place::Finite(p))
        } else {
            Err(Error::NotPrime(p.to_string()))
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Archimedean => write!(f, "inf"),
            Place::Finite(p) => write!(f, "{p}"),
        }
    }
}

/// A finite set `S` of places. The archimedean place is always a member;
/// only the finite primes are stored, strictly increasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PlaceSet {
    primes: Vec<u64>,
}

impl PlaceSet {
    pub fn new(primes: impl IntoIterator<Item = u64>) -> Result<PlaceSet> {
        let mut v: Vec<u64> = primes.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        for &p in &v {
            if !is_prime_u64(p) {
                return Err(Error::NotPrime(p.to_string()));
            }
        }
        Ok(PlaceSet { primes: v })
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn contains_prime(&self, p: u64) -> bool {
        self.primes.binary_search(&p).is_ok()
    }

    pub fn contains(&self, place: &Place) -> bool {
        match place {
            Place::Archimedean => true,
            Place::Finite(p) => self.contains_prime(*p),
        }
    }

    /// All places of `S`, archimedean first.
    pub fn places(&self) -> Vec<Place> {
        std::iter::once(Place::Archimedean)
            .chain(self.primes.iter().map(|&p| Place::Finite(p)))
            .collect()
    }

    /// Removes the primes of `S` from `n`.
    pub fn strip(&self, n: &BigUint) -> BigUint {
        self.primes.iter().fold(n.clone(), |acc, &p| strip_prime(&acc, p))
    }

    /// The `S`-part of `n`: the largest divisor of `n` supported on `S`.
    pub fn s_part(&self, n: &BigUint) -> BigUint {
        if n.is_zero() {
            return BigUint::zero();
        }
        n / self.strip(n)
    }
}

impl fmt::Display for PlaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{inf")?;
        for p in &self.primes {
            write!(f, ",{p}")?;
        }
        write!(f, "}}")
    }
}

/// `v_p(x)` for nonzero `x`.
pub fn valuation(x: &Rational, p: u64) -> Result<i64> {
    if x.is_zero() {
        return Err(Error::ValuationOfZero);
    }
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    let up = uint_valuation(&abs_num(x), p) as i64;
    let down = uint_valuation(&den(x), p) as i64;
    Ok(up - down)
}

/// Normalized absolute value `|x|_place`, exact for every place.
pub fn abs_at(x: &Rational, place: &Place) -> Rational {
    match place {
        Place::Archimedean => x.abs(),
        Place::Finite(p) => {
            if x.is_zero() {
                return Rational::zero();
            }
            let v = valuation(x, *p).expect("nonzero value at a prime place");
            rpow(&Rational::from_integer(BigInt::from(*p)), -v)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductFormulaReport {
    /// Product of `|x|_p` over all primes.
    pub finite_part: Rational,
    /// `|x|_inf`.
    pub archimedean: Rational,
    pub total: Rational,
    pub holds: bool,
}

/// Evaluates the product over all places of `|x|_mu` for `x != 0`. The
/// finite part runs over the primes dividing the numerator or denominator,
/// which are the only places where `|x|_p != 1`.
pub fn product_formula_check(x: &Rational) -> Result<ProductFormulaReport> {
    if x.is_zero() {
        return Err(Error::ValuationOfZero);
    }
    let mut finite = Rational::one();
    let num_f = factor(&abs_num(x))?;
    let den_f = factor(&den(x))?;
    for &p in num_f.keys().chain(den_f.keys()) {
        finite *= abs_at(x, &Place::Finite(p));
    }
    let arch = abs_at(x, &Place::Archimedean);
    let total = &finite * &arch;
    let expected = Rational::new(x.denom().clone(), x.numer().abs());
    Ok(ProductFormulaReport {
        holds: total.is_one() && finite == expected,
        finite_part: finite,
        archimedean: arch,
        total,
    })
}

/// Parses `"a"` or `"a/b"` into a rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Config(format!("not a rational: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// `"a"` for integers, `"a/b"` otherwise.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn sign_of(r: &Rational) -> Sign {
    r.numer().sign()
}
