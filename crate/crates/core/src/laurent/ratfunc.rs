//! Rational functions `p(X, Y) / q(X, Y)` with coprime polynomial parts.

use std::fmt;

use num_traits::{One, Zero};

use super::resultant::{raw_resultant_x, raw_resultant_y};
use super::{LaurentPoly2, MonomialSet};
use crate::error::{Error, Result};
use crate::qplaces::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction2 {
    numerator: LaurentPoly2,
    denominator: LaurentPoly2,
}

impl RationalFunction2 {
    /// Builds `num / den`. Negative exponents are cleared by a common
    /// monomial, the denominator is made monic in exponent order, and the
    /// two parts must be coprime in `Q[X, Y]`.
    pub fn new(num: LaurentPoly2, den: LaurentPoly2) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalFunction2 { numerator: num, denominator: LaurentPoly2::one() });
        }
        let (ni, nj) = num.min_exponents();
        let (di, dj) = den.min_exponents();
        let a = (-ni.min(di)).max(0);
        let b = (-nj.min(dj)).max(0);
        let (num, den) = (num.shift(a, b), den.shift(a, b));
        if !coprime(&num, &den) {
            return Err(Error::SharedFactor);
        }
        let lc = den.leading_coeff();
        let inv = Rational::one() / lc;
        Ok(RationalFunction2 { numerator: num.scale(&inv), denominator: den.scale(&inv) })
    }

    pub fn polynomial(p: LaurentPoly2) -> Result<Self> {
        Self::new(p, LaurentPoly2::one())
    }

    pub fn numerator(&self) -> &LaurentPoly2 {
        &self.numerator
    }

    pub fn denominator(&self) -> &LaurentPoly2 {
        &self.denominator
    }

    pub fn eval(&self, u: &Rational, v: &Rational) -> Result<Rational> {
        let d = self.denominator.eval(u, v)?;
        if d.is_zero() {
            return Err(Error::Pole);
        }
        Ok(self.numerator.eval(u, v)? / d)
    }

    /// Union of the supports of numerator and denominator.
    pub fn monomials(&self) -> MonomialSet {
        MonomialSet::new(self.numerator.support().into_iter().chain(self.denominator.support()))
    }
}

/// No common factor of positive degree: a factor involving `Y` kills the
/// resultant in `Y`, a factor in `X` alone kills the resultant in `X`.
pub(crate) fn coprime(p: &LaurentPoly2, q: &LaurentPoly2) -> bool {
    let ry = raw_resultant_y(p, q);
    let rx = raw_resultant_x(p, q);
    !ry.is_zero() && !rx.is_zero()
}

/// `(deg_X f, deg_Y f)`: the larger of the numerator and denominator degrees
/// in each variable.
pub fn degrees(f: &RationalFunction2) -> (u64, u64) {
    let (a, b) = f.numerator.degrees();
    let (c, d) = f.denominator.degrees();
    (a.max(c), b.max(d))
}

impl fmt::Display for RationalFunction2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.numerator, self.denominator)
    }
}

/// Either a Laurent polynomial or a quotient of coprime polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Function {
    Laurent(LaurentPoly2),
    Rational(RationalFunction2),
}

impl Function {
    pub fn eval(&self, u: &Rational, v: &Rational) -> Result<Rational> {
        match self {
            Function::Laurent(f) => f.eval(u, v),
            Function::Rational(f) => f.eval(u, v),
        }
    }

    /// The monomials `T_1, ..., T_N` of the function.
    pub fn monomials(&self) -> MonomialSet {
        match self {
            Function::Laurent(f) => MonomialSet::new(f.support()),
            Function::Rational(f) => f.monomials(),
        }
    }

    /// `(p, q)` polynomials with `f = p / q`.
    pub fn as_fraction(&self) -> (LaurentPoly2, LaurentPoly2) {
        match self {
            Function::Laurent(f) => {
                let (mi, mj) = f.min_exponents();
                let (a, b) = ((-mi).max(0), (-mj).max(0));
                (f.shift(a, b), LaurentPoly2::monomial(Rational::one(), a, b))
            }
            Function::Rational(f) => (f.numerator.clone(), f.denominator.clone()),
        }
    }

    pub fn degrees(&self) -> (u64, u64) {
        match self {
            Function::Laurent(f) => f.degrees(),
            Function::Rational(f) => degrees(f),
        }
    }
}

impl fmt::Display for Function {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Function::Laurent(p) => write!(f, "{p}"),
            Function::Rational(r) => write!(f, "{r}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qplaces::{int, rat};

    fn p(terms: &[((i64, i64), i64)]) -> LaurentPoly2 {
        LaurentPoly2::from_terms(terms.iter().map(|&(e, c)| (e, int(c))))
    }

    fn xm1() -> LaurentPoly2 {
        p(&[((1, 0), 1), ((0, 0), -1)])
    }

    fn ym1() -> LaurentPoly2 {
        p(&[((0, 1), 1), ((0, 0), -1)])
    }

    #[test]
    fn eval_and_pole() {
        let f = RationalFunction2::new(xm1(), ym1()).unwrap();
        assert_eq!(f.eval(&int(4), &int(9)).unwrap(), rat(3, 8));
        assert_eq!(f.eval(&int(4), &int(1)), Err(Error::Pole));
    }

    #[test]
    fn monomials_examples() {
        let f = RationalFunction2::new(xm1(), ym1()).unwrap();
        let t = f.monomials();
        assert_eq!(t.monomials, vec![(0, 0), (0, 1), (1, 0)]);
        assert!(t.contains_one);
        let g = RationalFunction2::polynomial(p(&[((2, 1), 1)])).unwrap();
        assert_eq!(g.monomials().monomials, vec![(0, 0), (2, 1)]);
        let h = RationalFunction2::new(p(&[((1, 0), 1), ((0, 1), 1)]), p(&[((1, 0), 1), ((0, 1), -1)])).unwrap();
        let t = h.monomials();
        assert!(!t.contains_one);
        assert_eq!(t.len(), 2);
    }

    #[test]
    fn rejects_common_factors() {
        let s = p(&[((1, 0), 1), ((0, 1), 1)]);
        assert_eq!(RationalFunction2::new(s.clone(), s.scale(&int(2))), Err(Error::SharedFactor));
        // common factor in X alone
        assert_eq!(RationalFunction2::new(xm1(), &xm1() * &ym1()), Err(Error::SharedFactor));
        // common monomial
        assert_eq!(RationalFunction2::new(p(&[((1, 0), 1)]), p(&[((1, 1), 1)])), Err(Error::SharedFactor));
        assert_eq!(RationalFunction2::new(xm1(), LaurentPoly2::zero()), Err(Error::ZeroDenominator));
    }

    #[test]
    fn degree_examples() {
        let f = RationalFunction2::new(xm1(), ym1()).unwrap();
        assert_eq!(degrees(&f), (1, 1));
        let g = RationalFunction2::new(p(&[((2, 1), 1), ((0, 0), 1)]), p(&[((0, 3), 1)])).unwrap();
        assert_eq!(degrees(&g), (2, 3));
        let c = RationalFunction2::new(LaurentPoly2::constant(int(3)), LaurentPoly2::constant(int(5))).unwrap();
        assert_eq!(degrees(&c), (0, 0));
        assert_eq!(c.eval(&int(2), &int(2)).unwrap(), rat(3, 5));
    }

    #[test]
    fn laurent_exponents_are_cleared() {
        // (X^-1 + 1) / Y  ==  (1 + X) / (X Y)
        let f = RationalFunction2::new(p(&[((-1, 0), 1), ((0, 0), 1)]), p(&[((0, 1), 1)])).unwrap();
        assert!(f.numerator().is_polynomial() && f.denominator().is_polynomial());
        assert_eq!(f.eval(&int(2), &int(3)).unwrap(), rat(1, 2));
        let lf = Function::Laurent(p(&[((-1, 2), 3), ((0, 0), 1)]));
        let (n, d) = lf.as_fraction();
        assert_eq!(n.eval(&int(2), &int(3)).unwrap() / d.eval(&int(2), &int(3)).unwrap(), lf.eval(&int(2), &int(3)).unwrap());
    }
}
