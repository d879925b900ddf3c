//! Bivariate Laurent polynomials over `Q` and the monomial machinery used
//! by the exceptional-subtorus arguments.

mod collapse;
mod ratfunc;
mod resultant;
mod upoly;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer as _;
use num_traits::{One, Zero};
use serde::Serialize;

pub use collapse::{collapse_coefficients, univariate_degree, univariate_eval, CollapseMap};
pub use ratfunc::{degrees, Function, RationalFunction2};
pub use resultant::{
    bareiss_det, primitive_integer_poly, raw_resultant_x, raw_resultant_y, resultant_x, resultant_y, sylvester_matrix,
};
pub use upoly::UPoly;

use crate::error::{Error, Result};
use crate::heights::{height_rational, HeightValue};
use crate::qplaces::{fmt_rational, rpow, Rational};

pub type Exponent = (i64, i64);

/// `sum a_{i,j} X^i Y^j` with finitely many nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly2 {
    terms: BTreeMap<Exponent, Rational>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rational, i: i64, j: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        LaurentPoly2 { terms }
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exponent, Rational)>) -> Self {
        let mut out = LaurentPoly2::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, e: Exponent, c: Rational) {
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, Rational> {
        &self.terms
    }

    pub fn coeff(&self, i: i64, j: i64) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> Vec<Exponent> {
        self.terms.keys().copied().collect()
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i >= 0 && j >= 0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly2 { terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect() }
    }

    /// Multiplies by `X^a Y^b`.
    pub fn shift(&self, a: i64, b: i64) -> Self {
        LaurentPoly2 {
            terms: self.terms.iter().map(|(&(i, j), c)| ((i + a, j + b), c.clone())).collect(),
        }
    }

    /// Smallest exponents of `X` and `Y` over the support (0 when empty).
    pub fn min_exponents(&self) -> Exponent {
        let mi = self.terms.keys().map(|e| e.0).min().unwrap_or(0);
        let mj = self.terms.keys().map(|e| e.1).min().unwrap_or(0);
        (mi, mj)
    }

    /// `(max |i|, max |j|)` over the support.
    pub fn degrees(&self) -> (u64, u64) {
        let d1 = self.terms.keys().map(|e| e.0.unsigned_abs()).max().unwrap_or(0);
        let d2 = self.terms.keys().map(|e| e.1.unsigned_abs()).max().unwrap_or(0);
        (d1, d2)
    }

    /// Exact value at `(u, v)`. A zero coordinate is only allowed when no
    /// term carries a negative power of it.
    pub fn eval(&self, u: &Rational, v: &Rational) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (&(i, j), c) in &self.terms {
            if (u.is_zero() && i < 0) || (v.is_zero() && j < 0) {
                return Err(Error::Pole);
            }
            acc += c * rpow(u, i) * rpow(v, j);
        }
        Ok(acc)
    }

    /// Leading coefficient in exponent order; used for normalization.
    pub fn leading_coeff(&self) -> Rational {
        self.terms.values().next_back().cloned().unwrap_or_else(Rational::zero)
    }
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, o: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, o: &LaurentPoly2) -> LaurentPoly2 {
        self + &(-o)
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        self.scale(&-Rational::one())
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, o: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = LaurentPoly2::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &o.terms {
                out.add_term((i + k, j + l), a * b);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (&(i, j), c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", fmt_rational(c))?;
            match i {
                0 => {}
                1 => write!(f, "*X")?,
                _ => write!(f, "*X^{i}")?,
            }
            match j {
                0 => {}
                1 => write!(f, "*Y")?,
                _ => write!(f, "*Y^{j}")?,
            }
        }
        Ok(())
    }
}

/// A deduplicated, sorted set of monomial exponents `T_1, ..., T_N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialSet {
    pub monomials: Vec<Exponent>,
    pub contains_one: bool,
    /// `max |i|`.
    pub d1: u64,
    /// `max |j|`.
    pub d2: u64,
}

impl MonomialSet {
    pub fn new(monomials: impl IntoIterator<Item = Exponent>) -> Self {
        let mut m: Vec<Exponent> = monomials.into_iter().collect();
        m.sort_unstable();
        m.dedup();
        let contains_one = m.contains(&(0, 0));
        let d1 = m.iter().map(|e| e.0.unsigned_abs()).max().unwrap_or(0);
        let d2 = m.iter().map(|e| e.1.unsigned_abs()).max().unwrap_or(0);
        MonomialSet { monomials: m, contains_one, d1, d2 }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// The non-constant monomials.
    pub fn non_constant(&self) -> MonomialSet {
        MonomialSet::new(self.monomials.iter().copied().filter(|&e| e != (0, 0)))
    }

    /// Rank of the subgroup of `Z^2` generated by the exponents.
    pub fn rank(&self) -> usize {
        if self.monomials.iter().all(|&e| e == (0, 0)) {
            return 0;
        }
        if independent_pair(&self.monomials).is_some() {
            2
        } else {
            1
        }
    }
}

/// First pair of linearly independent exponents, in list order.
fn independent_pair(t: &[Exponent]) -> Option<(Exponent, Exponent)> {
    for (n, &a) in t.iter().enumerate() {
        for &b in &t[n + 1..] {
            if a.0 * b.1 - a.1 * b.0 != 0 {
                return Some((a, b));
            }
        }
    }
    None
}

/// Primitive form of a nonzero integer vector with positive first nonzero
/// entry.
pub fn primitive_direction(v: Exponent) -> Exponent {
    let g = v.0.gcd(&v.1);
    let (a, b) = (v.0 / g, v.1 / g);
    if a < 0 || (a == 0 && b < 0) {
        (-a, -b)
    } else {
        (a, b)
    }
}

/// A support contained in a line: `T = { base + k * direction : k in positions }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportLine {
    pub direction: Exponent,
    /// `(0, 0)` whenever the line passes through the origin.
    pub base: Exponent,
    pub positions: Vec<i64>,
}

impl SupportLine {
    /// Coefficients of `phi` with `f(u, v) = u^b1 v^b2 phi(u^i0 v^j0)` where
    /// `(b1, b2)` is the base point and `(i0, j0)` the direction.
    pub fn phi(&self, f: &LaurentPoly2) -> BTreeMap<i64, Rational> {
        f.terms()
            .iter()
            .map(|(&e, c)| (self.position_of(e).expect("support on the line"), c.clone()))
            .collect()
    }

    fn position_of(&self, e: Exponent) -> Option<i64> {
        let (di, dj) = (e.0 - self.base.0, e.1 - self.base.1);
        let (a, b) = self.direction;
        if di * b - dj * a != 0 {
            return None;
        }
        Some(if a != 0 { di / a } else { dj / b })
    }
}

/// Detects supports contained in a line of `Z^2`. A singleton counts as a
/// line; its direction is the primitive form of the point itself (or
/// `(1, 0)` for the constant monomial).
pub fn support_line_test(t: &MonomialSet) -> Option<SupportLine> {
    let pts = &t.monomials;
    let first = *pts.first()?;
    let diff = pts.iter().map(|&e| (e.0 - first.0, e.1 - first.1)).find(|&d| d != (0, 0));
    let direction = match diff {
        Some(d) => primitive_direction(d),
        None if first == (0, 0) => (1, 0),
        None => primitive_direction(first),
    };
    let (a, b) = direction;
    if pts.iter().any(|&e| (e.0 - first.0) * b - (e.1 - first.1) * a != 0) {
        return None;
    }
    let through_origin = first.0 * b - first.1 * a == 0;
    let base = if through_origin { (0, 0) } else { first };
    let mut line = SupportLine { direction, base, positions: Vec::new() };
    line.positions = pts.iter().map(|&e| line.position_of(e).expect("collinear")).collect();
    Some(line)
}

/// Both sides of the monomial height bound
/// `max h(T_i(u,v)) >= (1/2) max{h(u)/d2, h(v)/d1}` in multiplicative form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialBoundReport {
    /// `max_i H(T_i(u, v))`.
    pub lhs: HeightValue,
    pub height_u: HeightValue,
    pub height_v: HeightValue,
    pub d1: u64,
    pub d2: u64,
    /// `lhs^(2 d2) >= H(u)` and `lhs^(2 d1) >= H(v)`.
    pub holds: bool,
    /// The sharper intermediate through one independent pair `a, b` of
    /// exponents with `d = det(a, b)`:
    /// `H(u)^|d| <= H(T_a)^|b2| H(T_b)^|a2|` and the analogue for `v`.
    pub witness_holds: bool,
}

pub fn monomial_value(e: Exponent, u: &Rational, v: &Rational) -> Rational {
    rpow(u, e.0) * rpow(v, e.1)
}

pub fn monomial_height_bound(t: &MonomialSet, u: &Rational, v: &Rational) -> Result<MonomialBoundReport> {
    if u.is_zero() || v.is_zero() {
        return Err(Error::InvalidParameter("point must lie on the torus".into()));
    }
    let nc = t.non_constant();
    let Some((a, b)) = independent_pair(&nc.monomials) else {
        return Err(Error::DegenerateSupport);
    };
    let heights: Vec<Rational> = nc
        .monomials
        .iter()
        .map(|&e| height_rational(&monomial_value(e, u, v)).value().clone())
        .collect();
    let lhs = heights.iter().max().cloned().expect("nonempty");
    let hu = height_rational(u).value().clone();
    let hv = height_rational(v).value().clone();
    let (d1, d2) = (nc.d1, nc.d2);
    let holds = rpow(&lhs, 2 * d2 as i64) >= hu && rpow(&lhs, 2 * d1 as i64) >= hv;

    let d = (a.0 * b.1 - a.1 * b.0).abs();
    let ha = height_rational(&monomial_value(a, u, v)).value().clone();
    let hb = height_rational(&monomial_value(b, u, v)).value().clone();
    // X^d = Ta^b2 Tb^-a2 and Y^d = Ta^-b1 Tb^a1
    let wu = rpow(&hu, d) <= rpow(&ha, b.1.abs()) * rpow(&hb, a.1.abs());
    let wv = rpow(&hv, d) <= rpow(&ha, b.0.abs()) * rpow(&hb, a.0.abs());
    Ok(MonomialBoundReport {
        lhs: HeightValue::new(lhs),
        height_u: HeightValue::new(hu),
        height_v: HeightValue::new(hv),
        d1,
        d2,
        holds,
        witness_holds: wu && wv,
    })
}
