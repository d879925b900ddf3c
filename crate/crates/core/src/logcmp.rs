//! Sign decisions for linear combinations of logarithms of rationals.
//!
//! A [`LogSum`] is `sum_i c_i * ln(r_i)` with rational `c_i` and positive
//! rational `r_i`. Every inequality in the crate reduces to the sign of
//! such a sum. The decision first tries exact arithmetic when the powered
//! products are small, then outward-rounded fixed-point intervals at
//! increasing precision, then exact arithmetic again under a larger size
//! budget. Only if all of that fails is the result `Undecided`.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::qplaces::{fmt_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogTerm {
    pub coeff: Rational,
    /// Strictly positive.
    pub arg: Rational,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LogSum {
    terms: Vec<LogTerm>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Decision {
    Negative,
    Zero,
    Positive,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecisionPolicy {
    /// First interval precision in fractional bits.
    pub start_bits: u32,
    /// Precision doubles until it exceeds this.
    pub max_bits: u32,
    /// Size budget (in bits of the powered products) for the cheap exact pass.
    pub exact_fast_bits: u64,
    /// Size budget for the final exact pass.
    pub exact_max_bits: u64,
}

impl Default for DecisionPolicy {
    fn default() -> Self {
        DecisionPolicy {
            start_bits: 128,
            max_bits: 1024,
            exact_fast_bits: 1 << 14,
            exact_max_bits: 1 << 24,
        }
    }
}

impl DecisionPolicy {
    /// Interval arithmetic only; used to exercise the precision ladder.
    pub fn intervals_only() -> Self {
        DecisionPolicy { exact_fast_bits: 0, exact_max_bits: 0, ..Self::default() }
    }
}

impl LogSum {
    pub fn zero() -> Self {
        LogSum::default()
    }

    /// `ln(arg)`; `arg` must be positive.
    pub fn ln(arg: Rational) -> Self {
        Self::term(Rational::one(), arg)
    }

    pub fn term(coeff: Rational, arg: Rational) -> Self {
        assert!(arg.is_positive(), "logarithm of non-positive value");
        let mut s = LogSum::zero();
        if !coeff.is_zero() && !arg.is_one() {
            s.terms.push(LogTerm { coeff, arg });
        }
        s
    }

    pub fn terms(&self) -> &[LogTerm] {
        &self.terms
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return LogSum::zero();
        }
        LogSum {
            terms: self
                .terms
                .iter()
                .map(|t| LogTerm { coeff: &t.coeff * c, arg: t.arg.clone() })
                .collect(),
        }
    }

    pub fn add(&self, other: &LogSum) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        LogSum { terms }
    }

    pub fn sub(&self, other: &LogSum) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|t| t.coeff.to_f64().unwrap_or(f64::NAN) * ln_rational_f64(&t.arg))
            .sum()
    }

    pub fn sign(&self) -> Decision {
        self.sign_with(&DecisionPolicy::default())
    }

    pub fn sign_with(&self, policy: &DecisionPolicy) -> Decision {
        if self.terms.is_empty() {
            return Decision::Zero;
        }
        if let Some(d) = self.exact_sign(policy.exact_fast_bits) {
            return d;
        }
        let mut bits = policy.start_bits.max(8);
        while bits <= policy.max_bits {
            if let Some(d) = self.interval_sign(bits) {
                return d;
            }
            bits *= 2;
        }
        self.exact_sign(policy.exact_max_bits).unwrap_or(Decision::Undecided)
    }

    /// Exact sign by clearing denominators of the coefficients and comparing
    /// two products of integer powers. `None` when the estimated size of the
    /// products exceeds `budget` bits.
    pub fn exact_sign(&self, budget: u64) -> Option<Decision> {
        let lcm = self
            .terms
            .iter()
            .fold(BigInt::one(), |acc, t| acc.lcm(t.coeff.denom()));
        let mut size: u64 = 0;
        let mut exps = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let e = (&t.coeff * Rational::from_integer(lcm.clone())).to_integer();
            let mag = e.magnitude().to_u64()?;
            let bits = t.arg.numer().bits() + t.arg.denom().bits();
            size = size.checked_add(mag.checked_mul(bits)?)?;
            if size > budget {
                return None;
            }
            exps.push(e);
        }
        // left = prod over positive exponents, right = prod over negative
        let (mut ln, mut ld) = (BigUint::one(), BigUint::one());
        let (mut rn, mut rd) = (BigUint::one(), BigUint::one());
        for (t, e) in self.terms.iter().zip(&exps) {
            let m = e.magnitude().to_u32()?;
            let n = t.arg.numer().magnitude().pow(m);
            let d = t.arg.denom().magnitude().pow(m);
            match e.sign() {
                Sign::Plus => {
                    ln *= n;
                    ld *= d;
                }
                Sign::Minus => {
                    rn *= n;
                    rd *= d;
                }
                Sign::NoSign => {}
            }
        }
        // sum > 0 iff ln/ld > rn/rd
        Some(match (ln * rd).cmp(&(rn * ld)) {
            std::cmp::Ordering::Greater => Decision::Positive,
            std::cmp::Ordering::Less => Decision::Negative,
            std::cmp::Ordering::Equal => Decision::Zero,
        })
    }

    /// Sign from an outward-rounded enclosure at `bits` fractional bits, or
    /// `None` if the enclosure contains zero.
    pub fn interval_sign(&self, bits: u32) -> Option<Decision> {
        let (mid, err) = self.enclosure(bits);
        if mid.magnitude() > &err {
            Some(if mid.is_positive() { Decision::Positive } else { Decision::Negative })
        } else {
            None
        }
    }

    /// Returns `(m, e)` with the true value inside `[(m - e), (m + e)] * 2^-w`
    /// for the working precision `w = bits + 64`.
    pub fn enclosure(&self, bits: u32) -> (BigInt, BigUint) {
        let w = bits as u64 + 64;
        let ln2 = FixedLn::ln2(w);
        let mut mid = BigInt::zero();
        let mut err = BigUint::zero();
        for t in &self.terms {
            let (a, ea) = fixed_ln_uint(t.arg.numer().magnitude(), w, &ln2);
            let (b, eb) = fixed_ln_uint(t.arg.denom().magnitude(), w, &ln2);
            let v = a - b;
            let e = ea + eb;
            let cn = t.coeff.numer();
            let cd = t.coeff.denom();
            mid += (cn * &v).div_floor(cd);
            err += (cn.magnitude() * &e).div_ceil(cd.magnitude()) + 1u32;
        }
        (mid, err)
    }
}

impl fmt::Display for LogSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*ln({})", fmt_rational(&t.coeff), fmt_rational(&t.arg))?;
        }
        Ok(())
    }
}

/// Natural log of a positive big integer as `f64`.
pub fn ln_uint_f64(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        n.to_f64().unwrap_or(f64::INFINITY).ln()
    } else {
        let shift = bits - 64;
        (n >> shift).to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
    }
}

pub fn ln_rational_f64(r: &Rational) -> f64 {
    ln_uint_f64(r.numer().magnitude()) - ln_uint_f64(r.denom().magnitude())
}

/// `ln 2` at a given working precision with its error bound in ulps.
struct FixedLn {
    value: BigInt,
    err: BigUint,
}

impl FixedLn {
    fn ln2(w: u64) -> FixedLn {
        // ln 2 = 2 atanh(1/3)
        let one = BigInt::one() << w;
        let s = &one / BigInt::from(3);
        let (v, e) = atanh_fixed(&s, w);
        FixedLn { value: v << 1, err: (e << 1u32) + 4u32 }
    }
}

/// `atanh(s)` for fixed-point `0 <= s <= 2^w / 3`, with an error bound.
fn atanh_fixed(s: &BigInt, w: u64) -> (BigInt, BigUint) {
    let s2 = (s * s) >> w;
    let mut power = s.clone();
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    while !power.is_zero() {
        sum += &power / BigInt::from(2 * k + 1);
        power = (&power * &s2) >> w;
        k += 1;
    }
    // each power carries at most 6 ulps of accumulated truncation error
    // (s^2 <= 1/9 damps the propagated part), each quotient one more, and the
    // dropped tail is below one ulp
    (sum, BigUint::from(8 * (k + 2)))
}

/// `ln n` in fixed point with `w` fractional bits, plus an error bound.
fn fixed_ln_uint(n: &BigUint, w: u64, ln2: &FixedLn) -> (BigInt, BigUint) {
    assert!(!n.is_zero());
    let e = n.bits() - 1;
    if e == 0 {
        return (BigInt::zero(), BigUint::zero());
    }
    let one = BigInt::one() << w;
    // m = n / 2^e in [1, 2), truncated
    let m = if e <= w {
        BigInt::from(n.clone()) << (w - e)
    } else {
        BigInt::from(n >> (e - w))
    };
    // s = (m - 1)/(m + 1) in [0, 1/3)
    let s = ((&m - &one) << w) / (&m + &one);
    let (at, at_err) = atanh_fixed(&s, w);
    let value = (at << 1) + &ln2.value * BigInt::from(e);
    let err = (at_err << 1u32) + 6u32 + &ln2.err * BigUint::from(e);
    (value, err)
}
