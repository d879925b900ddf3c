//! Weil heights, projective heights and `log^-` sums over sets of places,
//! carried in exact multiplicative form.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::logcmp::{ln_rational_f64, LogSum};
use crate::qplaces::{abs_num, den, PlaceSet, Rational};

/// A multiplicative height `H`; `h = log H` is available on demand.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct HeightValue {
    #[serde(serialize_with = "crate::cli::ser_rational")]
    value: Rational,
}

impl HeightValue {
    pub fn new(value: Rational) -> Self {
        debug_assert!(value.is_positive());
        HeightValue { value }
    }

    pub fn one() -> Self {
        HeightValue { value: Rational::one() }
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    /// `h = ln H` as `f64`.
    pub fn ln(&self) -> f64 {
        ln_rational_f64(&self.value)
    }

    pub fn log_sum(&self) -> LogSum {
        LogSum::ln(self.value.clone())
    }
}

/// `H(a/c) = max(|a|, c)` for a reduced fraction; `H(0) = 1`.
pub fn height_rational(x: &Rational) -> HeightValue {
    let a = abs_num(x);
    let c = den(x);
    HeightValue::new(Rational::from_integer(BigInt::from(a.max(c))))
}

/// Projective height: clears denominators, divides by the gcd, and takes the
/// largest absolute value of the resulting coprime integer vector.
pub fn height_projective(coords: &[Rational]) -> Result<HeightValue> {
    let ints = primitive_integer_vector(coords)?;
    let max = ints.iter().map(|n| n.magnitude().clone()).max().unwrap_or_default();
    Ok(HeightValue::new(Rational::from_integer(BigInt::from(max))))
}

/// Scales `coords` to a coprime integer vector with the same projective point.
pub fn primitive_integer_vector(coords: &[Rational]) -> Result<Vec<BigInt>> {
    if coords.iter().all(|c| c.is_zero()) {
        return Err(Error::ZeroVector);
    }
    let l = coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scaled: Vec<BigInt> = coords
        .iter()
        .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
        .collect();
    let g = scaled.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
    Ok(scaled.into_iter().map(|n| n / &g).collect())
}

/// `H(P) = prod_mu max_i |x_i|_mu` over all places, evaluated as
/// `max_i |x_i| * lcm(denominators) / gcd(numerators)`.
pub fn height_affine_point(coords: &[Rational]) -> Result<HeightValue> {
    if coords.iter().all(|c| c.is_zero()) {
        return Err(Error::ZeroVector);
    }
    let mut l = BigUint::one();
    let mut g = BigUint::zero();
    let mut max = Rational::zero();
    for c in coords.iter().filter(|c| !c.is_zero()) {
        l = l.lcm(&den(c));
        g = g.gcd(&abs_num(c));
        let a = c.abs();
        if a > max {
            max = a;
        }
    }
    let finite = Rational::new(BigInt::from(l), BigInt::from(g));
    Ok(HeightValue::new(max * finite))
}

/// Which places a `log^-` sum runs over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum PlaceFilter {
    All,
    FiniteOnly,
    /// Every place outside `S`; excludes the archimedean place.
    ComplementOf(PlaceSet),
    /// Every place of `S`, the archimedean one included.
    Within(PlaceSet),
}

impl PlaceFilter {
    pub fn includes_archimedean(&self) -> bool {
        matches!(self, PlaceFilter::All | PlaceFilter::Within(_))
    }

    /// Restricts a gcd of numerators to the filtered finite places.
    pub fn restrict(&self, m: &BigUint) -> BigUint {
        match self {
            PlaceFilter::All | PlaceFilter::FiniteOnly => m.clone(),
            PlaceFilter::ComplementOf(s) => s.strip(m),
            PlaceFilter::Within(s) => s.s_part(m),
        }
    }
}

/// `sum_mu log^- max_i |x_i|_mu` over a place filter. The finite part is
/// `-ln M` for a positive integer `M`; the archimedean part is `ln A` with
/// `A = min(1, max_i |x_i|)` exact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LogMinusSum {
    #[serde(serialize_with = "crate::cli::ser_display")]
    pub finite_part: BigUint,
    #[serde(serialize_with = "crate::cli::ser_rational")]
    pub archimedean_factor: Rational,
    #[serde(skip)]
    pub filter: PlaceFilter,
}

impl LogMinusSum {
    pub fn archimedean_part(&self) -> f64 {
        ln_rational_f64(&self.archimedean_factor)
    }

    /// `A / M`, the exponential of the total.
    pub fn multiplicative(&self) -> Rational {
        &self.archimedean_factor / Rational::from_integer(BigInt::from(self.finite_part.clone()))
    }

    pub fn total(&self) -> f64 {
        self.log_sum().to_f64()
    }

    pub fn log_sum(&self) -> LogSum {
        LogSum::ln(self.multiplicative())
    }
}

/// Computes the `log^-` sum of `values` through the gcd of their numerators:
/// for a reduced fraction the minimum valuation at `p` is positive exactly
/// when `p` divides every numerator, and then equals `v_p(gcd)`. Zero
/// entries are allowed as long as one value is nonzero.
pub fn logminus_sum(values: &[Rational], filter: PlaceFilter) -> Result<LogMinusSum> {
    if values.iter().all(|v| v.is_zero()) {
        return Err(Error::CommonZero);
    }
    let m = values.iter().fold(BigUint::zero(), |acc, v| acc.gcd(&abs_num(v)));
    let finite_part = filter.restrict(&m);
    let archimedean_factor = if filter.includes_archimedean() {
        let max = values.iter().map(|v| v.abs()).max().expect("nonempty");
        max.min(Rational::one())
    } else {
        Rational::one()
    };
    Ok(LogMinusSum { finite_part, archimedean_factor, filter })
}

pub fn log_plus(x: f64) -> Result<f64> {
    if x <= 0.0 || x.is_nan() {
        return Err(Error::NonPositiveLog);
    }
    Ok(x.ln().max(0.0))
}

pub fn log_minus(x: f64) -> Result<f64> {
    if x <= 0.0 || x.is_nan() {
        return Err(Error::NonPositiveLog);
    }
    Ok(x.ln().min(0.0))
}
