//! Candidate exceptional subtori and translates, classification of points
//! against them, and the scan driver over pairs of S-units.

use std::collections::BTreeMap;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gcdcore::{
    check_gcd_bound, check_height_gap, check_monomial_drop, check_resultant_gcd,
    check_shifted_gcd, integer_resultants, InequalityReport, ResultantScope, Verdict,
};
use crate::heights::PlaceFilter;
use crate::laurent::{primitive_direction, Exponent, Function, LaurentPoly2, MonomialSet, UPoly};
use crate::logcmp::{DecisionPolicy, LogSum};
use crate::qplaces::{rpow, PlaceSet, Rational};
use crate::sunits::{
    dependence, enumerate, on_subtorus, rational_root, MultiplicativeRelation, SUnit, SignMode,
};

/// Where a candidate relation came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    /// Two support points land on the same exponent along the direction.
    Collision { first: Exponent, second: Exponent },
    /// `max(|p|, |q|) <= 1/eps`.
    Bounded,
    /// A bounded direction moved to the translate through `(theta, eta)`.
    Scaled {
        #[serde(serialize_with = "crate::cli::ser_rational")]
        theta: Rational,
        #[serde(serialize_with = "crate::cli::ser_rational")]
        eta: Rational,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub relation: MultiplicativeRelation,
    pub provenance: Provenance,
}

/// Sorted by relation, no duplicate relations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CandidateSet {
    candidates: Vec<Candidate>,
}

impl CandidateSet {
    /// Keeps the first provenance seen for each relation.
    pub fn from_candidates(items: impl IntoIterator<Item = Candidate>) -> Self {
        let mut map: BTreeMap<MultiplicativeRelation, Provenance> = BTreeMap::new();
        for c in items {
            map.entry(c.relation).or_insert(c.provenance);
        }
        CandidateSet {
            candidates: map
                .into_iter()
                .map(|(relation, provenance)| Candidate { relation, provenance })
                .collect(),
        }
    }

    pub fn candidates(&self) -> &[Candidate] {
        &self.candidates
    }

    pub fn relations(&self) -> impl Iterator<Item = &MultiplicativeRelation> {
        self.candidates.iter().map(|c| &c.relation)
    }

    pub fn directions(&self) -> Vec<(i64, i64)> {
        self.relations().map(|r| (r.p, r.q)).collect()
    }

    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }
}

/// Directions `(p, q)` along which two monomials of `T` collapse onto the
/// same power of `t` under `u = t^q, v = wbar t^-p`: the primitive solutions
/// of `q (i - i') = p (j - j')`, as subgroups `u^p v^q = 1`.
pub fn collision_candidates(t: &MonomialSet) -> CandidateSet {
    let m = &t.monomials;
    let mut out = Vec::new();
    for (n, &a) in m.iter().enumerate() {
        for &b in &m[n + 1..] {
            let (p, q) = primitive_direction((a.0 - b.0, a.1 - b.1));
            out.push(Candidate {
                relation: MultiplicativeRelation::subgroup(p, q).expect("primitive"),
                provenance: Provenance::Collision { first: a, second: b },
            });
        }
    }
    CandidateSet::from_candidates(out)
}

/// Coprime `(p, q)` in canonical sign with `max(|p|, |q|) <= floor(1/eps)`.
pub fn bounded_directions(eps: &Rational) -> Result<Vec<(i64, i64)>> {
    if !eps.is_positive() {
        return Err(Error::InvalidParameter("epsilon must be positive".into()));
    }
    let m = eps.recip().floor().to_integer();
    let m: i64 = m
        .try_into()
        .map_err(|_| Error::InvalidParameter("1/epsilon too large".into()))?;
    let mut out = Vec::new();
    for p in 0..=m {
        for q in -m..=m {
            if (p > 0 || q > 0) && p.gcd(&q) == 1 {
                out.push((p, q));
            }
        }
    }
    Ok(out)
}

/// Subgroups `u^p v^q = 1` with `max(|p|, |q|) <= 1/eps`.
pub fn bounded_candidates(eps: &Rational) -> Result<CandidateSet> {
    Ok(CandidateSet::from_candidates(bounded_directions(eps)?.into_iter().map(|(p, q)| {
        Candidate {
            relation: MultiplicativeRelation::subgroup(p, q).expect("coprime"),
            provenance: Provenance::Bounded,
        }
    })))
}

/// The bounded directions moved through `(theta, eta)`:
/// `u^p v^q = theta^p eta^q`.
pub fn scaled_translates(theta: &Rational, eta: &Rational, eps: &Rational) -> Result<CandidateSet> {
    if theta.is_zero() || eta.is_zero() {
        return Err(Error::InvalidParameter("theta and eta must be nonzero".into()));
    }
    let mut out = Vec::new();
    for (p, q) in bounded_directions(eps)? {
        let w = rpow(theta, p) * rpow(eta, q);
        out.push(Candidate {
            relation: MultiplicativeRelation::new(p, q, w)?,
            provenance: Provenance::Scaled { theta: theta.clone(), eta: eta.clone() },
        });
    }
    Ok(CandidateSet::from_candidates(out))
}

/// A translate on which two colliding terms cancel exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TranslateRefinement {
    pub relation: MultiplicativeRelation,
    #[serde(serialize_with = "crate::cli::ser_rational")]
    pub wbar: Rational,
    /// Exponent `l` of `t` where the cancellation happens.
    pub degree: i64,
    pub first: Exponent,
    pub second: Exponent,
}

/// For a direction `(p, q)`, the rational `wbar` making `c_l = 0` at each
/// degree `l` reached by exactly two terms `a X^i Y^j`, `a' X^i' Y^j'`:
/// `wbar^(j - j') = -a'/a`. The translate is `u^p v^q = wbar^q`.
pub fn refine_translates(f: &LaurentPoly2, p: i64, q: i64) -> Vec<TranslateRefinement> {
    let mut by_degree: BTreeMap<i64, Vec<(Exponent, &Rational)>> = BTreeMap::new();
    for (&(i, j), a) in f.terms() {
        by_degree.entry(q * i - p * j).or_default().push(((i, j), a));
    }
    let mut out = Vec::new();
    for (l, terms) in by_degree {
        let [(e1, a1), (e2, a2)] = terms[..] else { continue };
        let d = e1.1 - e2.1;
        let mut roots = Vec::new();
        if d == 0 {
            // q = 0: the factor wbar^j is shared, cancellation needs a + a' = 0
            if (a1 + a2).is_zero() {
                roots.push(Rational::one());
            }
        } else {
            let target = -(a2 / a1);
            let target = if d > 0 { target } else { target.recip() };
            if let Some(r) = rational_root(&target, d.unsigned_abs() as u32) {
                if d % 2 == 0 && !r.is_zero() {
                    roots.push(-r.clone());
                }
                roots.push(r);
            }
        }
        for wbar in roots {
            if let Ok(relation) = MultiplicativeRelation::new(p, q, rpow(&wbar, q)) {
                out.push(TranslateRefinement { relation, wbar, degree: l, first: e1, second: e2 });
            }
        }
    }
    out.sort_by(|a, b| (a.degree, &a.wbar).cmp(&(b.degree, &b.wbar)));
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "class", content = "relation", rename_all = "snake_case")]
pub enum Classification {
    OnCandidate(MultiplicativeRelation),
    DependentSporadic(MultiplicativeRelation),
    Independent,
}

impl Classification {
    pub fn label(&self) -> &'static str {
        match self {
            Classification::OnCandidate(_) => "on_candidate",
            Classification::DependentSporadic(_) => "dependent_sporadic",
            Classification::Independent => "independent",
        }
    }
}

/// First candidate containing the point (exact test), else the minimal
/// dependence relation, else independent.
pub fn classify_point(u: &SUnit, v: &SUnit, candidates: &CandidateSet) -> Classification {
    if let Some(rel) = candidates.relations().find(|r| on_subtorus(u, v, r)) {
        return Classification::OnCandidate(rel.clone());
    }
    match dependence(u, v) {
        Some(rel) => Classification::DependentSporadic(rel),
        None => Classification::Independent,
    }
}

pub fn classify(points: &[(SUnit, SUnit)], candidates: &CandidateSet) -> Vec<Classification> {
    points.iter().map(|(u, v)| classify_point(u, v, candidates)).collect()
}

/// Which inequality a scan tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanKind {
    /// `h(p/q) < h(p:q:1) - eps max h`, cross-checked against the gcd form.
    GcdPair,
    MonomialDrop,
    CoordinateDrop,
    /// `sum over all places log^- max{|u-1|,|v-1|} < -eps max h`.
    ShiftedGcd,
    /// `sum outside S log^- max{|r(u)|,|s(v)|} < -eps max h`.
    ResultantGcd,
}

impl ScanKind {
    pub const ALL: [ScanKind; 5] = [
        ScanKind::GcdPair,
        ScanKind::MonomialDrop,
        ScanKind::CoordinateDrop,
        ScanKind::ShiftedGcd,
        ScanKind::ResultantGcd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ScanKind::GcdPair => "gcd-pair",
            ScanKind::MonomialDrop => "monomial-drop",
            ScanKind::CoordinateDrop => "coordinate-drop",
            ScanKind::ShiftedGcd => "shifted-gcd",
            ScanKind::ResultantGcd => "resultant-gcd",
        }
    }

    pub fn from_name(s: &str) -> Option<ScanKind> {
        Self::ALL.into_iter().find(|k| k.name() == s)
    }

}

#[derive(Clone, Debug)]
pub struct ScanSpec {
    pub kind: ScanKind,
    /// Required for every kind except `ShiftedGcd`.
    pub function: Option<Function>,
    /// Explicit `(r, s)` for `ResultantGcd`; derived from the function's
    /// resultants otherwise.
    pub resultants: Option<(UPoly, UPoly)>,
    pub s: PlaceSet,
    pub bound: u32,
    pub epsilon: Rational,
    pub signs: SignMode,
    pub policy: DecisionPolicy,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanSolution {
    #[serde(serialize_with = "crate::cli::ser_display")]
    pub u: SUnit,
    #[serde(serialize_with = "crate::cli::ser_display")]
    pub v: SUnit,
    #[serde(serialize_with = "crate::cli::ser_display")]
    pub lhs: LogSum,
    #[serde(serialize_with = "crate::cli::ser_display")]
    pub rhs: LogSum,
    pub class: Classification,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SkipCounts {
    /// Denominator (or `q`) vanishes.
    pub poles: u64,
    /// Numerator (or `p`, `u - 1`, `v - 1`, `r(u)` and `s(v)`) vanishes.
    pub zeros: u64,
    pub undecided: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanOutcome {
    pub points_tested: u64,
    pub candidates: CandidateSet,
    pub solutions: Vec<ScanSolution>,
    pub skipped: SkipCounts,
    #[serde(serialize_with = "ser_points")]
    pub undecided_points: Vec<(SUnit, SUnit)>,
}

fn ser_points<S: serde::Serializer>(
    pts: &[(SUnit, SUnit)],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(pts.len()))?;
    for (u, v) in pts {
        seq.serialize_element(&[u.to_string(), v.to_string()])?;
    }
    seq.end()
}

enum PointResult {
    Solution(LogSum, LogSum),
    Fails,
    Pole,
    Zero,
    Undecided,
}

struct Prepared {
    spec: ScanSpec,
    pq: Option<(LaurentPoly2, LaurentPoly2)>,
    rs: Option<(UPoly, UPoly)>,
}

fn verdict_of(mut r: InequalityReport, policy: &DecisionPolicy) -> PointResult {
    if *policy != DecisionPolicy::default() {
        r.decide(policy);
    }
    match r.verdict {
        Verdict::Satisfied => PointResult::Solution(r.lhs.clone(), r.rhs.clone()),
        Verdict::NotSatisfied => PointResult::Fails,
        Verdict::Undecided => PointResult::Undecided,
    }
}

impl Prepared {
    fn new(spec: &ScanSpec) -> Result<Prepared> {
        let has_input = match spec.kind {
            ScanKind::ShiftedGcd => true,
            ScanKind::ResultantGcd => spec.function.is_some() || spec.resultants.is_some(),
            _ => spec.function.is_some(),
        };
        if !has_input {
            return Err(Error::Config(format!("{} scan needs a function", spec.kind.name())));
        }
        if spec.epsilon.is_negative() {
            return Err(Error::Config("epsilon must be nonnegative".into()));
        }
        if matches!(spec.kind, ScanKind::MonomialDrop | ScanKind::CoordinateDrop)
            && !spec.function.as_ref().expect("checked").monomials().contains_one
        {
            return Err(Error::MonomialOneRequired);
        }
        let pq = spec.function.as_ref().map(|f| f.as_fraction());
        let rs = match (spec.kind, &spec.resultants, &pq) {
            (ScanKind::ResultantGcd, Some(rs), _) => Some(rs.clone()),
            (ScanKind::ResultantGcd, None, Some((p, q))) => Some(integer_resultants(p, q)?),
            _ => None,
        };
        Ok(Prepared { spec: spec.clone(), pq, rs })
    }

    fn candidates(&self) -> Result<CandidateSet> {
        match self.spec.kind {
            ScanKind::ShiftedGcd => {
                if self.spec.epsilon.is_zero() {
                    return Err(Error::Config("shifted-gcd scan needs epsilon > 0".into()));
                }
                bounded_candidates(&self.spec.epsilon)
            }
            _ => Ok(self
                .spec
                .function
                .as_ref()
                .map(|f| collision_candidates(&f.monomials()))
                .unwrap_or_default()),
        }
    }

    fn evaluate(&self, u: &Rational, v: &Rational) -> Result<PointResult> {
        let eps = &self.spec.epsilon;
        let one = Rational::one();
        match self.spec.kind {
            ScanKind::ShiftedGcd => {
                if *u == one || *v == one {
                    return Ok(PointResult::Zero);
                }
                let (all, _) = check_shifted_gcd(u, v, eps, &self.spec.s)?;
                Ok(verdict_of(all, &self.spec.policy))
            }
            ScanKind::ResultantGcd => {
                let (r, s) = self.rs.as_ref().expect("prepared");
                if r.eval(u).is_zero() && s.eval(v).is_zero() {
                    return Ok(PointResult::Zero);
                }
                let rep =
                    check_resultant_gcd(r, s, u, v, eps, &self.spec.s, ResultantScope::OutsideS)?;
                Ok(verdict_of(rep, &self.spec.policy))
            }
            kind => {
                let (p, q) = self.pq.as_ref().expect("prepared");
                let (a, b) = (p.eval(u, v)?, q.eval(u, v)?);
                if b.is_zero() {
                    return Ok(PointResult::Pole);
                }
                if a.is_zero() {
                    return Ok(PointResult::Zero);
                }
                match kind {
                    ScanKind::GcdPair => {
                        let mut gap = check_height_gap(p, q, u, v, eps)?;
                        let mut gcd = check_gcd_bound(p, q, u, v, eps, PlaceFilter::All)?;
                        gap.decide(&self.spec.policy);
                        gcd.decide(&self.spec.policy);
                        if gap.verdict != gcd.verdict {
                            return Err(Error::Invariant(format!(
                                "height-gap and gcd forms disagree at ({u}, {v})"
                            )));
                        }
                        Ok(verdict_of(gap, &DecisionPolicy::default()))
                    }
                    _ => {
                        let f = self.spec.function.as_ref().expect("prepared");
                        let (drop, coord) = check_monomial_drop(f, u, v, eps)?;
                        Ok(verdict_of(if kind == ScanKind::MonomialDrop { drop } else { coord }, &self.spec.policy))
                    }
                }
            }
        }
    }
}

/// All pairs `(u, v)` of S-units with exponents in `[-bound, bound]`, in
/// enumeration order (`u` outer).
pub fn scan_points(s: &PlaceSet, bound: u32, signs: SignMode) -> Vec<(SUnit, SUnit)> {
    let units: Vec<SUnit> = enumerate(s, bound, signs).collect();
    units
        .iter()
        .flat_map(|u| units.iter().map(move |v| (u.clone(), v.clone())))
        .collect()
}

/// Evaluates the selected inequality on every pair of S-units within the
/// bound and classifies the solutions. Output order is the enumeration
/// order regardless of the thread count.
pub fn scan(spec: &ScanSpec) -> Result<ScanOutcome> {
    let prepared = Prepared::new(spec)?;
    let candidates = prepared.candidates()?;
    let points = scan_points(&spec.s, spec.bound, spec.signs);
    let results: Vec<Result<PointResult>> = points
        .par_iter()
        .map(|(u, v)| prepared.evaluate(&u.value(), &v.value()))
        .collect();
    let mut out = ScanOutcome {
        points_tested: points.len() as u64,
        candidates,
        solutions: Vec::new(),
        skipped: SkipCounts::default(),
        undecided_points: Vec::new(),
    };
    for ((u, v), r) in points.into_iter().zip(results) {
        match r? {
            PointResult::Solution(lhs, rhs) => {
                let class = classify_point(&u, &v, &out.candidates);
                if let Classification::OnCandidate(rel) = &class {
                    if !on_subtorus(&u, &v, rel) {
                        return Err(Error::Invariant("candidate membership".into()));
                    }
                }
                out.solutions.push(ScanSolution { u, v, lhs, rhs, class });
            }
            PointResult::Fails => {}
            PointResult::Pole => out.skipped.poles += 1,
            PointResult::Zero => out.skipped.zeros += 1,
            PointResult::Undecided => {
                out.skipped.undecided += 1;
                out.undecided_points.push((u, v));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{collapse_coefficients, RationalFunction2};
    use crate::qplaces::{int, rat};
    use proptest::prelude::*;

    fn su(x: Rational) -> SUnit {
        SUnit::from_rational_any(&x).unwrap()
    }

    fn dirs(c: &CandidateSet) -> Vec<(i64, i64)> {
        c.directions()
    }

    fn xm1_over_ym1() -> Function {
        let p = LaurentPoly2::from_terms([((1, 0), int(1)), ((0, 0), int(-1))]);
        let q = LaurentPoly2::from_terms([((0, 1), int(1)), ((0, 0), int(-1))]);
        Function::Rational(RationalFunction2::new(p, q).unwrap())
    }

    #[test]
    fn collision_examples() {
        let t = MonomialSet::new([(0, 0), (1, 0), (0, 1)]);
        assert_eq!(dirs(&collision_candidates(&t)), vec![(0, 1), (1, -1), (1, 0)]);
        let t = MonomialSet::new([(0, 0), (2, 2)]);
        assert_eq!(dirs(&collision_candidates(&t)), vec![(1, 1)]);
        assert!(collision_candidates(&MonomialSet::new([(3, 1)])).is_empty());
        assert_eq!(
            dirs(&collision_candidates(&xm1_over_ym1().monomials())),
            vec![(0, 1), (1, -1), (1, 0)]
        );
    }

    #[test]
    fn bounded_examples() {
        assert_eq!(
            dirs(&bounded_candidates(&rat(1, 2)).unwrap()),
            vec![(0, 1), (1, -2), (1, -1), (1, 0), (1, 1), (1, 2), (2, -1), (2, 1)]
        );
        assert_eq!(dirs(&bounded_candidates(&int(1)).unwrap()), vec![(0, 1), (1, -1), (1, 0), (1, 1)]);
        assert!(bounded_candidates(&int(2)).unwrap().is_empty());
        assert!(bounded_candidates(&int(0)).is_err());
    }

    #[test]
    fn bounded_count_matches_half_ball() {
        for m in 1..12i64 {
            let eps = rat(1, m);
            let mut count = 0;
            for p in -m..=m {
                for q in -m..=m {
                    if (p, q) != (0, 0) && num_integer::gcd(p, q) == 1 {
                        count += 1;
                    }
                }
            }
            assert_eq!(bounded_candidates(&eps).unwrap().len() * 2, count);
        }
    }

    #[test]
    fn scaled_examples() {
        let base = bounded_candidates(&rat(1, 2)).unwrap();
        let same = scaled_translates(&int(1), &int(1), &rat(1, 2)).unwrap();
        assert_eq!(base.relations().collect::<Vec<_>>(), same.relations().collect::<Vec<_>>());
        let c = scaled_translates(&int(2), &int(3), &int(1)).unwrap();
        let r = c.relations().find(|r| (r.p, r.q) == (1, -1)).unwrap();
        assert_eq!(r.w, rat(2, 3));
        assert!(scaled_translates(&int(2), &int(3), &int(2)).unwrap().is_empty());
    }

    #[test]
    fn classify_examples() {
        let c = bounded_candidates(&rat(1, 2)).unwrap();
        assert_eq!(
            classify_point(&su(int(4)), &su(int(8)), &c),
            Classification::DependentSporadic(MultiplicativeRelation::subgroup(3, -2).unwrap())
        );
        let one = CandidateSet::from_candidates([Candidate {
            relation: MultiplicativeRelation::subgroup(1, -1).unwrap(),
            provenance: Provenance::Bounded,
        }]);
        assert!(matches!(classify_point(&su(int(6)), &su(int(6)), &one), Classification::OnCandidate(_)));
        assert_eq!(classify_point(&su(int(2)), &su(int(3)), &one), Classification::Independent);
    }

    #[test]
    fn refinement_finds_cancelling_translate() {
        // X - Y along (1, -1): c_{-1} = 1 - wbar
        let f = LaurentPoly2::from_terms([((1, 0), int(1)), ((0, 1), int(-1))]);
        let r = refine_translates(&f, 1, -1);
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].wbar, int(1));
        assert!(collapse_coefficients(&f, 1, -1, &r[0].wbar).cancellation());
        // X - 4 Y^2 along (1, -2): 1 - 4 wbar^2 has roots -1/2 and 1/2
        let f = LaurentPoly2::from_terms([((1, 0), int(1)), ((0, 2), int(-4))]);
        let r = refine_translates(&f, 1, -2);
        assert_eq!(r.iter().map(|x| x.wbar.clone()).collect::<Vec<_>>(), vec![rat(-1, 2), rat(1, 2)]);
        for x in &r {
            assert!(collapse_coefficients(&f, 1, -2, &x.wbar).cancellation());
            assert_eq!(x.relation.w, rpow(&x.wbar, -2));
        }
    }

    fn spec(kind: ScanKind, bound: u32, eps: Rational) -> ScanSpec {
        ScanSpec {
            kind,
            function: Some(xm1_over_ym1()),
            resultants: None,
            s: PlaceSet::new([2, 3]).unwrap(),
            bound,
            epsilon: eps,
            signs: SignMode::Positive,
            policy: DecisionPolicy::default(),
        }
    }

    #[test]
    fn shifted_scan_lands_on_bounded_directions() {
        let out = scan(&spec(ScanKind::ShiftedGcd, 4, rat(3, 5))).unwrap();
        assert!(!out.solutions.is_empty());
        for s in &out.solutions {
            if let Classification::OnCandidate(r) = &s.class {
                assert!(r.p.abs() <= 1 && r.q.abs() <= 1);
                assert!(on_subtorus(&s.u, &s.v, r));
            }
        }
    }

    #[test]
    fn gcd_pair_scan_matches_rerun() {
        let sp = spec(ScanKind::GcdPair, 4, rat(1, 10));
        let out = scan(&sp).unwrap();
        let f = xm1_over_ym1();
        let (p, q) = f.as_fraction();
        let mut expect = Vec::new();
        for (u, v) in scan_points(&sp.s, 4, SignMode::Positive) {
            let (uu, vv) = (u.value(), v.value());
            if q.eval(&uu, &vv).unwrap().is_zero() || p.eval(&uu, &vv).unwrap().is_zero() {
                continue;
            }
            if check_height_gap(&p, &q, &uu, &vv, &rat(1, 10)).unwrap().satisfied() {
                expect.push((u, v));
            }
        }
        let got: Vec<_> = out.solutions.iter().map(|s| (s.u.clone(), s.v.clone())).collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn bound_zero_scan() {
        let out = scan(&spec(ScanKind::GcdPair, 0, rat(1, 10))).unwrap();
        assert_eq!(out.points_tested, 1);
        assert_eq!(out.skipped.poles, 1);
        assert!(out.solutions.is_empty());
        let mut sp = spec(ScanKind::ShiftedGcd, 0, rat(1, 10));
        sp.signs = SignMode::Both;
        let out = scan(&sp).unwrap();
        assert_eq!(out.points_tested, 4);
        assert_eq!(out.skipped.zeros, 3);
    }

    #[test]
    fn monomial_scan_requires_one() {
        let p = LaurentPoly2::from_terms([((1, 0), int(1))]);
        let q = LaurentPoly2::from_terms([((0, 1), int(1))]);
        let mut sp = spec(ScanKind::MonomialDrop, 1, rat(1, 10));
        sp.function = Some(Function::Rational(RationalFunction2::new(p, q).unwrap()));
        assert_eq!(scan(&sp).unwrap_err(), Error::MonomialOneRequired);
    }

    #[test]
    fn resultant_scan_runs() {
        let out = scan(&spec(ScanKind::ResultantGcd, 4, rat(1, 10))).unwrap();
        assert_eq!(out.points_tested, 81 * 81);
        // (16, 81) has gcd(15, 80) = 5 outside S
        assert!(out.solutions.iter().any(|s| s.u.value() == int(16) && s.v.value() == int(81)));
    }

    proptest! {
        #[test]
        fn collision_directions_match_brute_force(
            pts in proptest::collection::btree_set((-3i64..=3, -3i64..=3), 1..6)
        ) {
            let t = MonomialSet::new(pts.iter().copied());
            let f = LaurentPoly2::from_terms(pts.iter().enumerate().map(|(n, &e)| (e, int(n as i64 + 1))));
            let cands = dirs(&collision_candidates(&t));
            let mut brute = Vec::new();
            for p in 0..=12i64 {
                for q in -12..=12i64 {
                    if (p > 0 || q > 0) && num_integer::gcd(p, q) == 1
                        && collapse_coefficients(&f, p, q, &int(1)).has_collision()
                    {
                        brute.push((p, q));
                    }
                }
            }
            brute.sort();
            prop_assert_eq!(cands, brute);
        }
    }
}
