//! The gcd-analogue functional `sum_mu log^- max{|a|_mu, |b|_mu}` and the
//! height inequalities built on it.
//!
//! Every report keeps both sides as [`LogSum`]s over exact rationals, so
//! the verdict is decided by [`crate::logcmp`] and never by comparing
//! rounded floats.

use num_bigint::BigUint;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::heights::{
    height_projective, height_rational, logminus_sum, HeightValue, LogMinusSum, PlaceFilter,
};
use crate::laurent::{
    monomial_value, primitive_integer_poly, raw_resultant_x, raw_resultant_y, Function,
    LaurentPoly2, UPoly,
};
use crate::logcmp::{Decision, DecisionPolicy, LogSum};
use crate::qplaces::{abs_num, rpow, PlaceSet, Rational};
use crate::sunits::{dependence, MultiplicativeRelation, SUnit};

/// Which inequality a report evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InequalityKind {
    /// `h(p/q) < h(p:q:1) - eps max{h(u), h(v)}`.
    HeightGap,
    /// `sum_mu log^- max{|p|,|q|} < -eps max{h(u), h(v)}`.
    GcdBound,
    /// `h(f) < (1 - eps) max_i h(T_i(u, v))`.
    MonomialDrop,
    /// `h(f) < (1 - eps) max{h(u)/(2 deg_Y f), h(v)/(2 deg_X f)}`.
    CoordinateDrop,
    /// `sum over all places of log^- max{|u-1|,|v-1|} < -eps max{h(u), h(v)}`.
    ShiftedGcdAll,
    /// The same sum over places outside `S`, against `-(eps/2) max{h(u), h(v)}`.
    ShiftedGcdOutside,
    /// `sum_{mu not in S} log^- max{|r(u)|,|s(v)|} < -eps max{h(u), h(v)}`.
    ResultantGcdOutside,
    /// The same sum over all places.
    ResultantGcdAll,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Satisfied,
    NotSatisfied,
    Undecided,
}

/// `lhs < rhs` for one inequality at one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityReport {
    pub kind: InequalityKind,
    pub epsilon: Rational,
    pub point: (Rational, Rational),
    pub lhs: LogSum,
    pub rhs: LogSum,
    pub verdict: Verdict,
}

impl InequalityReport {
    pub fn new(
        kind: InequalityKind,
        epsilon: &Rational,
        point: (&Rational, &Rational),
        lhs: LogSum,
        rhs: LogSum,
    ) -> Self {
        let mut r = InequalityReport {
            kind,
            epsilon: epsilon.clone(),
            point: (point.0.clone(), point.1.clone()),
            lhs,
            rhs,
            verdict: Verdict::Undecided,
        };
        r.decide(&DecisionPolicy::default());
        r
    }

    pub fn decide(&mut self, policy: &DecisionPolicy) {
        self.verdict = match self.rhs.sub(&self.lhs).sign_with(policy) {
            Decision::Positive => Verdict::Satisfied,
            Decision::Negative | Decision::Zero => Verdict::NotSatisfied,
            Decision::Undecided => Verdict::Undecided,
        };
    }

    pub fn satisfied(&self) -> bool {
        self.verdict == Verdict::Satisfied
    }

    pub fn lhs_f64(&self) -> f64 {
        self.lhs.to_f64()
    }

    pub fn rhs_f64(&self) -> f64 {
        self.rhs.to_f64()
    }
}

fn nonnegative_eps(eps: &Rational) -> Result<()> {
    if eps.is_negative() {
        return Err(Error::InvalidParameter("epsilon must be nonnegative".into()));
    }
    Ok(())
}

/// `max{H(u), H(v)}`.
pub fn max_height(u: &Rational, v: &Rational) -> HeightValue {
    height_rational(u).max(height_rational(v))
}

/// The gcd analogue of `p(u, v), q(u, v)` over a place filter.
pub fn gcd_analogue(
    p: &LaurentPoly2,
    q: &LaurentPoly2,
    u: &Rational,
    v: &Rational,
    filter: PlaceFilter,
) -> Result<LogMinusSum> {
    let a = p.eval(u, v)?;
    let b = q.eval(u, v)?;
    logminus_sum(&[a, b], filter)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GcdBridge {
    #[serde(serialize_with = "crate::cli::ser_display")]
    pub finite_part: BigUint,
    #[serde(serialize_with = "crate::cli::ser_display")]
    pub gcd: BigUint,
    pub equal: bool,
}

/// For nonzero integers the finite `log^-` part is exactly `-ln gcd(a, b)`.
pub fn integer_gcd_bridge(a: i128, b: i128) -> Result<GcdBridge> {
    integer_gcd_bridge_big(&Rational::from_integer(a.into()), &Rational::from_integer(b.into()))
}

pub fn integer_gcd_bridge_big(a: &Rational, b: &Rational) -> Result<GcdBridge> {
    if a.is_zero() || b.is_zero() || !a.is_integer() || !b.is_integer() {
        return Err(Error::InvalidParameter("nonzero integers required".into()));
    }
    let s = logminus_sum(&[a.clone(), b.clone()], PlaceFilter::FiniteOnly)?;
    let gcd = abs_num(a).gcd(&abs_num(b));
    Ok(GcdBridge { equal: s.finite_part == gcd, finite_part: s.finite_part, gcd })
}

/// `h(a:b:1) = h(a:b) - sum_mu log^- max{|a|,|b|}` in the exact form
/// `H(a:b:1) * A = H(a:b) * M`, where `A/M` is the exponential of the
/// `log^-` sum (archimedean factor `A`, finite gcd part `M`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub height_with_one: HeightValue,
    pub height_pair: HeightValue,
    pub logminus: LogMinusSum,
    pub holds: bool,
}

pub fn decomposition_identity(
    p: &LaurentPoly2,
    q: &LaurentPoly2,
    u: &Rational,
    v: &Rational,
) -> Result<DecompositionReport> {
    decomposition_of_values(&p.eval(u, v)?, &q.eval(u, v)?)
}

pub fn decomposition_of_values(a: &Rational, b: &Rational) -> Result<DecompositionReport> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::CommonZero);
    }
    let with_one = height_projective(&[a.clone(), b.clone(), Rational::one()])?;
    let pair = height_projective(&[a.clone(), b.clone()])?;
    let lm = logminus_sum(&[a.clone(), b.clone()], PlaceFilter::All)?;
    let m = Rational::from_integer(lm.finite_part.clone().into());
    let holds = with_one.value() * &lm.archimedean_factor == pair.value() * m;
    Ok(DecompositionReport { height_with_one: with_one, height_pair: pair, logminus: lm, holds })
}

/// `h(p/q) < h(p:q:1) - eps max{h(u), h(v)}` at `(u, v)`.
pub fn check_height_gap(
    p: &LaurentPoly2,
    q: &LaurentPoly2,
    u: &Rational,
    v: &Rational,
    eps: &Rational,
) -> Result<InequalityReport> {
    nonnegative_eps(eps)?;
    let a = p.eval(u, v)?;
    let b = q.eval(u, v)?;
    if b.is_zero() {
        return Err(Error::Pole);
    }
    let lhs = height_rational(&(&a / &b)).log_sum();
    let with_one = height_projective(&[a, b, Rational::one()])?;
    let rhs = with_one.log_sum().sub(&max_height(u, v).log_sum().scale(eps));
    Ok(InequalityReport::new(InequalityKind::HeightGap, eps, (u, v), lhs, rhs))
}

/// `sum_mu log^- max{|p(u,v)|, |q(u,v)|} < -eps max{h(u), h(v)}` over a
/// place filter (`All` gives the form equivalent to the height gap).
pub fn check_gcd_bound(
    p: &LaurentPoly2,
    q: &LaurentPoly2,
    u: &Rational,
    v: &Rational,
    eps: &Rational,
    filter: PlaceFilter,
) -> Result<InequalityReport> {
    nonnegative_eps(eps)?;
    let lm = gcd_analogue(p, q, u, v, filter)?;
    let rhs = max_height(u, v).log_sum().scale(&-eps.clone());
    Ok(InequalityReport::new(InequalityKind::GcdBound, eps, (u, v), lm.log_sum(), rhs))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RatioReport {
    /// `H((u - 1)/(v - 1))`.
    pub height_ratio: HeightValue,
    /// `H(1 : u : v)`.
    pub height_1uv: HeightValue,
    /// `h((u-1)/(v-1)) / h(1:u:v)`; `None` when the denominator height is 0.
    pub ratio: Option<f64>,
    pub relation: Option<MultiplicativeRelation>,
}

impl RatioReport {
    pub fn dependent(&self) -> bool {
        self.relation.is_some()
    }
}

/// Height of `(u-1)/(v-1)` against `h(1:u:v)`, with the dependence status.
pub fn shifted_ratio(u: &Rational, v: &Rational) -> Result<RatioReport> {
    if u.is_one() {
        return Err(Error::ValueIsOne("u"));
    }
    if v.is_one() {
        return Err(Error::ValueIsOne("v"));
    }
    let one = Rational::one();
    let hr = height_rational(&((u - &one) / (v - &one)));
    let h1 = height_projective(&[one, u.clone(), v.clone()])?;
    let ratio = (!h1.value().is_one()).then(|| hr.ln() / h1.ln());
    let relation = if u.is_zero() || v.is_zero() {
        None
    } else {
        dependence(&SUnit::from_rational_any(u)?, &SUnit::from_rational_any(v)?)
    };
    Ok(RatioReport { height_ratio: hr, height_1uv: h1, ratio, relation })
}

/// `ln max(a, b)` for two nonnegative-coefficient log expressions of the
/// form `ln(x) / k`, decided exactly.
fn max_scaled_log(terms: &[(HeightValue, u64)]) -> LogSum {
    // compare x^(1/k) across terms: x_a^(k_b) vs x_b^(k_a)
    let mut best: Option<&(HeightValue, u64)> = None;
    for t in terms {
        best = match best {
            None => Some(t),
            Some(b) => {
                let lhs = rpow(t.0.value(), b.1 as i64);
                let rhs = rpow(b.0.value(), t.1 as i64);
                Some(if lhs > rhs { t } else { b })
            }
        };
    }
    match best {
        None => LogSum::zero(),
        Some((h, k)) => h.log_sum().scale(&Rational::new(1.into(), (*k).into())),
    }
}

/// The two height-drop inequalities for a function whose monomials include
/// the constant 1:
/// `h(f(u,v)) < (1-eps) max_i h(T_i(u,v))` and
/// `h(f(u,v)) < (1-eps) max{h(u)/(2 deg_Y f), h(v)/(2 deg_X f)}`.
/// A variable of degree 0 drops out of the second maximum.
pub fn check_monomial_drop(
    f: &Function,
    u: &Rational,
    v: &Rational,
    eps: &Rational,
) -> Result<(InequalityReport, InequalityReport)> {
    nonnegative_eps(eps)?;
    let t = f.monomials();
    if !t.contains_one {
        return Err(Error::MonomialOneRequired);
    }
    let value = f.eval(u, v)?;
    let lhs = height_rational(&value).log_sum();
    let factor = Rational::one() - eps;
    let max_t = t
        .monomials
        .iter()
        .map(|&e| height_rational(&monomial_value(e, u, v)))
        .max()
        .expect("contains 1");
    let drop = InequalityReport::new(
        InequalityKind::MonomialDrop,
        eps,
        (u, v),
        lhs.clone(),
        max_t.log_sum().scale(&factor),
    );
    let (dx, dy) = f.degrees();
    let mut terms = Vec::new();
    if dy > 0 {
        terms.push((height_rational(u), 2 * dy));
    }
    if dx > 0 {
        terms.push((height_rational(v), 2 * dx));
    }
    let coord = InequalityReport::new(
        InequalityKind::CoordinateDrop,
        eps,
        (u, v),
        lhs,
        max_scaled_log(&terms).scale(&factor),
    );
    Ok((drop, coord))
}

/// Shifted-unit gcd bounds: the sum over all places against
/// `-eps max{h(u), h(v)}`, and the sum outside `S` against half of that.
pub fn check_shifted_gcd(
    u: &Rational,
    v: &Rational,
    eps: &Rational,
    s: &PlaceSet,
) -> Result<(InequalityReport, InequalityReport)> {
    nonnegative_eps(eps)?;
    if u.is_one() {
        return Err(Error::ValueIsOne("u"));
    }
    if v.is_one() {
        return Err(Error::ValueIsOne("v"));
    }
    let one = Rational::one();
    let vals = [u - &one, v - &one];
    let hmax = max_height(u, v).log_sum();
    let all = logminus_sum(&vals, PlaceFilter::All)?;
    let outside = logminus_sum(&vals, PlaceFilter::ComplementOf(s.clone()))?;
    let half = eps / Rational::from_integer(2.into());
    Ok((
        InequalityReport::new(
            InequalityKind::ShiftedGcdAll,
            eps,
            (u, v),
            all.log_sum(),
            hmax.scale(&-eps.clone()),
        ),
        InequalityReport::new(
            InequalityKind::ShiftedGcdOutside,
            eps,
            (u, v),
            outside.log_sum(),
            hmax.scale(&-half),
        ),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ResultantScope {
    OutsideS,
    AllPlaces,
}

/// `sum log^- max{|r(u)|, |s(v)|} < -eps max{h(u), h(v)}` over the places
/// outside `S`, or over all places (which needs `r, s` not both vanishing
/// at 0).
pub fn check_resultant_gcd(
    r: &UPoly,
    s: &UPoly,
    u: &Rational,
    v: &Rational,
    eps: &Rational,
    set: &PlaceSet,
    scope: ResultantScope,
) -> Result<InequalityReport> {
    nonnegative_eps(eps)?;
    if scope == ResultantScope::AllPlaces && r.coeff(0).is_zero() && s.coeff(0).is_zero() {
        return Err(Error::Hypothesis("r and s both vanish at 0".into()));
    }
    let vals = [r.eval(u), s.eval(v)];
    let (filter, kind) = match scope {
        ResultantScope::OutsideS => {
            (PlaceFilter::ComplementOf(set.clone()), InequalityKind::ResultantGcdOutside)
        }
        ResultantScope::AllPlaces => (PlaceFilter::All, InequalityKind::ResultantGcdAll),
    };
    let lm = logminus_sum(&vals, filter)?;
    let rhs = max_height(u, v).log_sum().scale(&-eps.clone());
    Ok(InequalityReport::new(kind, eps, (u, v), lm.log_sum(), rhs))
}

/// Resultants `r = Res_Y(p, q)`, `s = Res_X(p, q)` of the primitive integer
/// forms of `p` and `q`.
pub fn integer_resultants(p: &LaurentPoly2, q: &LaurentPoly2) -> Result<(UPoly, UPoly)> {
    if !p.is_polynomial() || !q.is_polynomial() {
        return Err(Error::NotPolynomial);
    }
    let (pi, qi) = (primitive_integer_poly(p), primitive_integer_poly(q));
    let r = raw_resultant_y(&pi, &qi);
    let s = raw_resultant_x(&pi, &qi);
    if r.is_zero() || s.is_zero() {
        return Err(Error::SharedFactor);
    }
    Ok((r, s))
}

/// Divisibility form of `sum_{mu not in S} log^- max{|p|,|q|} >=
/// sum_{mu not in S} log^- max{|r(u)|,|s(v)|}`: the `S`-free gcd of
/// `p(u,v), q(u,v)` divides that of `r(u), s(v)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResultantChainReport {
    #[serde(serialize_with = "crate::cli::ser_display")]
    pub gcd_pq: BigUint,
    /// Zero when `r(u) = s(v) = 0`.
    #[serde(serialize_with = "crate::cli::ser_display")]
    pub gcd_rs: BigUint,
    pub divides: bool,
}

pub fn resultant_chain(
    p: &LaurentPoly2,
    q: &LaurentPoly2,
    u: &Rational,
    v: &Rational,
    s: &PlaceSet,
) -> Result<ResultantChainReport> {
    SUnit::from_rational(u, s)?;
    SUnit::from_rational(v, s)?;
    let (pi, qi) = (primitive_integer_poly(p), primitive_integer_poly(q));
    let (r, sy) = integer_resultants(p, q)?;
    let a = pi.eval(u, v)?;
    let b = qi.eval(u, v)?;
    if a.is_zero() && b.is_zero() {
        return Err(Error::CommonZero);
    }
    let gcd_pq = s.strip(&abs_num(&a).gcd(&abs_num(&b)));
    let ru = r.eval(u);
    let sv = sy.eval(v);
    let gcd_rs = s.strip(&abs_num(&ru).gcd(&abs_num(&sv)));
    let divides = (&gcd_rs % &gcd_pq).is_zero();
    Ok(ResultantChainReport { gcd_pq, gcd_rs, divides })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::RationalFunction2;
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
    fn gcd_analogue_examples() {
        let s = gcd_analogue(&xm1(), &ym1(), &int(16), &int(81), PlaceFilter::FiniteOnly).unwrap();
        assert_eq!(s.finite_part, BigUint::from(5u32));
        let s = gcd_analogue(&xm1(), &ym1(), &int(2), &int(2), PlaceFilter::FiniteOnly).unwrap();
        assert_eq!(s.finite_part, BigUint::one());
        let set = PlaceSet::new([2, 3]).unwrap();
        let s = gcd_analogue(&p(&[((1, 0), 1)]), &p(&[((0, 1), 1)]), &rat(8, 27), &rat(3, 2), PlaceFilter::ComplementOf(set))
            .unwrap();
        assert_eq!(s.total(), 0.0);
        assert_eq!(
            gcd_analogue(&xm1(), &ym1(), &int(1), &int(1), PlaceFilter::All),
            Err(Error::CommonZero)
        );
    }

    #[test]
    fn bridge_examples() {
        assert_eq!(integer_gcd_bridge(15, 80).unwrap().gcd, BigUint::from(5u32));
        assert!(integer_gcd_bridge(1, 77).unwrap().equal);
        let b = integer_gcd_bridge(12, -18).unwrap();
        assert!(b.equal && b.finite_part == BigUint::from(6u32));
        assert!(integer_gcd_bridge(0, 3).is_err());
    }

    #[test]
    fn decomposition_examples() {
        let d = decomposition_identity(&xm1(), &ym1(), &int(4), &int(9)).unwrap();
        assert_eq!((d.height_pair.value(), d.height_with_one.value()), (&int(8), &int(8)));
        assert!(d.holds);
        let d = decomposition_identity(&xm1(), &ym1(), &int(16), &int(81)).unwrap();
        assert_eq!(d.height_pair.value(), &int(16));
        assert_eq!(d.height_with_one.value(), &int(80));
        assert_eq!(d.logminus.finite_part, BigUint::from(5u32));
        assert!(d.holds);
        assert!(decomposition_of_values(&int(1), &int(1)).unwrap().holds);
        assert!(decomposition_of_values(&rat(1, 6), &rat(-1, 10)).unwrap().holds);
    }

    #[test]
    fn height_gap_examples() {
        let r = check_height_gap(&xm1(), &ym1(), &int(4), &int(9), &rat(1, 10)).unwrap();
        assert!(!r.satisfied());
        let r = check_height_gap(&xm1(), &ym1(), &int(16), &int(81), &rat(1, 100)).unwrap();
        assert!(r.satisfied());
        assert!((r.lhs_f64() - 16f64.ln()).abs() < 1e-12);
        assert!((r.rhs_f64() - (80f64.ln() - 0.01 * 81f64.ln())).abs() < 1e-12);
        // eps = 0: satisfied iff the gcd part is nontrivial
        assert!(check_height_gap(&xm1(), &ym1(), &int(16), &int(81), &int(0)).unwrap().satisfied());
        assert!(!check_height_gap(&xm1(), &ym1(), &int(4), &int(9), &int(0)).unwrap().satisfied());
        assert_eq!(check_height_gap(&xm1(), &ym1(), &int(4), &int(1), &int(0)), Err(Error::Pole));
    }

    #[test]
    fn both_formulations_agree() {
        for (u, v) in [(16, 81), (4, 9), (9, 4), (2, 2), (64, 27), (3, 243)] {
            for eps in [rat(0, 1), rat(1, 100), rat(1, 3), int(2)] {
                let (u, v) = (int(u), int(v));
                let a = check_height_gap(&xm1(), &ym1(), &u, &v, &eps).unwrap();
                let b = check_gcd_bound(&xm1(), &ym1(), &u, &v, &eps, PlaceFilter::All).unwrap();
                assert_eq!(a.verdict, b.verdict);
            }
        }
    }

    #[test]
    fn ratio_examples() {
        let r = shifted_ratio(&int(4), &int(9)).unwrap();
        assert!((r.ratio.unwrap() - 8f64.ln() / 9f64.ln()).abs() < 1e-15);
        assert!(!r.dependent());
        let r = shifted_ratio(&int(2), &int(2)).unwrap();
        assert_eq!(r.ratio, Some(0.0));
        assert!(r.dependent());
        let u = int(1 << 20);
        let r = shifted_ratio(&u, &(&u * &u)).unwrap();
        assert!((r.ratio.unwrap() - 0.5).abs() < 0.01);
        assert!(shifted_ratio(&int(1), &int(3)).is_err());
    }

    #[test]
    fn monomial_drop_examples() {
        let f = Function::Rational(RationalFunction2::new(xm1(), ym1()).unwrap());
        let (a, _) = check_monomial_drop(&f, &int(16), &int(81), &rat(1, 10)).unwrap();
        assert!(a.satisfied());
        let (a, _) = check_monomial_drop(&f, &int(4), &int(9), &rat(1, 10)).unwrap();
        assert!(!a.satisfied());
        let g = Function::Rational(RationalFunction2::new(p(&[((1, 0), 1)]), p(&[((0, 1), 1)])).unwrap());
        assert_eq!(check_monomial_drop(&g, &int(2), &int(3), &rat(1, 10)), Err(Error::MonomialOneRequired));
    }

    #[test]
    fn coordinate_drop_uses_larger_scaled_height() {
        // deg_X = deg_Y = 1: rhs = 0.9 * max(ln 16, ln 81)/2
        let f = Function::Rational(RationalFunction2::new(xm1(), ym1()).unwrap());
        let (_, b) = check_monomial_drop(&f, &int(16), &int(81), &rat(1, 10)).unwrap();
        assert!((b.rhs_f64() - 0.9 * 81f64.ln() / 2.0).abs() < 1e-12);
        assert!(!b.satisfied());
    }

    #[test]
    fn shifted_gcd_examples() {
        let s = PlaceSet::new([2, 3]).unwrap();
        let (all, _) = check_shifted_gcd(&int(16), &int(81), &rat(1, 3), &s).unwrap();
        assert!(all.satisfied());
        let (all, _) = check_shifted_gcd(&int(16), &int(81), &rat(2, 5), &s).unwrap();
        assert!(!all.satisfied());
        for eps in [rat(1, 100), rat(1, 2)] {
            let (all, out) = check_shifted_gcd(&int(2), &int(3), &eps, &s).unwrap();
            assert!(!all.satisfied() && !out.satisfied());
        }
        assert!(check_shifted_gcd(&int(1), &int(3), &rat(1, 2), &s).is_err());
    }

    #[test]
    fn resultant_gcd_examples() {
        let s = PlaceSet::new([2, 3]).unwrap();
        let x1 = UPoly::from_ints(&[-1, 1]);
        let r = check_resultant_gcd(&x1, &x1, &int(16), &int(81), &rat(1, 100), &s, ResultantScope::OutsideS).unwrap();
        assert!((r.lhs_f64() + 5f64.ln()).abs() < 1e-12);
        assert!(r.satisfied());
        let x = UPoly::from_ints(&[0, 1]);
        assert!(check_resultant_gcd(&x, &x, &int(2), &int(3), &rat(1, 2), &s, ResultantScope::AllPlaces).is_err());
        let (two, three) = (UPoly::from_ints(&[2]), UPoly::from_ints(&[3]));
        let r = check_resultant_gcd(&two, &three, &int(1 << 20), &int(3), &rat(1, 2), &s, ResultantScope::AllPlaces).unwrap();
        assert!(!r.satisfied());
    }

    #[test]
    fn chain_on_example() {
        let s = PlaceSet::new([2, 3]).unwrap();
        let r = resultant_chain(&xm1(), &ym1(), &int(16), &int(81), &s).unwrap();
        assert_eq!(r.gcd_pq, BigUint::from(5u32));
        assert!(r.divides);
        assert!(resultant_chain(&xm1(), &ym1(), &int(5), &int(81), &s).is_err());
    }
}
