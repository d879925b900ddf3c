//! Instrumentation of the auxiliary-point argument for shifted S-units:
//! parameters `(k, h)`, the auxiliary point `P(u, v)`, the linear forms at
//! the places of `S`, and the chain of bounds on their double product.
//!
//! Everything is computed over `Q`, where every absolute value is an exact
//! rational. Bounds involving `H(v)^eps` are decided on [`LogSum`]s.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gcdcore::{InequalityKind, InequalityReport};
use crate::heights::{height_affine_point, height_rational, logminus_sum, HeightValue, PlaceFilter};
use crate::logcmp::{Decision, DecisionPolicy, LogSum};
use crate::qplaces::{abs_at, den, rpow, Place, PlaceSet, Rational};
use crate::sunits::SUnit;

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProofParams {
    #[serde(serialize_with = "crate::cli::ser_rational")]
    pub epsilon: Rational,
    pub k: u32,
    pub h: u32,
    /// `hk + h + k`.
    pub n: u32,
    /// `eps h k / 2 - h - 2k^2`.
    #[serde(serialize_with = "crate::cli::ser_rational")]
    pub epsilon0: Rational,
    /// `epsilon0 / (h + k + 3)`.
    #[serde(serialize_with = "crate::cli::ser_rational")]
    pub delta: Rational,
}

impl ProofParams {
    /// Checks `k > 4/eps`, `h > 2k^2 + 1` and `epsilon0 > 0`.
    pub fn new(epsilon: Rational, k: u32, h: u32) -> Result<ProofParams> {
        if !epsilon.is_positive() {
            return Err(Error::InvalidParameter("epsilon must be positive".into()));
        }
        let (kq, hq) = (q(k as i64), q(h as i64));
        let epsilon0 = &epsilon * &hq * &kq / q(2) - &hq - q(2) * &kq * &kq;
        if kq <= q(4) / &epsilon {
            return Err(Error::InvalidParameter(format!("k = {k} must exceed 4/eps")));
        }
        if h as u64 <= 2 * (k as u64).pow(2) + 1 {
            return Err(Error::InvalidParameter(format!("h = {h} must exceed 2k^2 + 1")));
        }
        if !epsilon0.is_positive() {
            return Err(Error::InvalidParameter("eps h k / 2 - h - 2k^2 must be positive".into()));
        }
        let n = h * k + h + k;
        let delta = &epsilon0 / q(h as i64 + k as i64 + 3);
        Ok(ProofParams { epsilon, k, h, n, epsilon0, delta })
    }
}

/// Smallest `k > 4/eps`, then smallest `h` with `h > 2k^2 + 1` and
/// `eps h k / 2 - h - 2k^2 > 0`.
pub fn choose_params(epsilon: &Rational) -> Result<ProofParams> {
    if !epsilon.is_positive() {
        return Err(Error::InvalidParameter("epsilon must be positive".into()));
    }
    let k = (q(4) / epsilon).floor().to_integer() + BigInt::one();
    let k: u32 = k.try_into().map_err(|_| Error::InvalidParameter("epsilon too small".into()))?;
    let kq = q(k as i64);
    // h (eps k / 2 - 1) > 2k^2 with eps k / 2 - 1 > 1
    let slope = epsilon * &kq / q(2) - Rational::one();
    let from_eps = (q(2) * &kq * &kq / slope).floor().to_integer() + BigInt::one();
    let h = from_eps.max(BigInt::from(2 * (k as u64).pow(2) + 2));
    let h: u32 = h.try_into().map_err(|_| Error::InvalidParameter("epsilon too small".into()))?;
    ProofParams::new(epsilon.clone(), k, h)
}

/// `P(u, v) = (z_1, ..., z_k, y_{0,1}, ..., y_{0,h}, ..., y_{k,1}, ..., y_{k,h})`
/// with `z_j = (u^j - 1)/(v - 1)` and `y_{j,i} = u^j v^-i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxPoint {
    pub u: Rational,
    pub v: Rational,
    pub k: u32,
    pub h: u32,
    pub coordinates: Vec<Rational>,
}

impl AuxPoint {
    pub fn len(&self) -> usize {
        self.coordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coordinates.is_empty()
    }

    pub fn z(&self, j: u32) -> &Rational {
        &self.coordinates[j as usize - 1]
    }

    /// `y_{j,i}` for `0 <= j <= k`, `1 <= i <= h`.
    pub fn y(&self, j: u32, i: u32) -> &Rational {
        &self.coordinates[(self.k + j * self.h + i - 1) as usize]
    }

    /// `|P|_mu = max_i |x_i|_mu`, using `max_{j,i} |u^j v^-i|_mu =
    /// max(1, |u|_mu)^k * |v|_mu^-1` when `|v|_mu >= 1` and
    /// `max(1, |u|_mu)^k * |v|_mu^-h` otherwise.
    pub fn norm_at(&self, place: &Place) -> Rational {
        let au = abs_at(&self.u, place);
        let av = abs_at(&self.v, place);
        let one = Rational::one();
        let ymax = rpow(&au.max(one.clone()), self.k as i64)
            * rpow(&av, if av >= one { -1 } else { -(self.h as i64) });
        (1..=self.k).map(|j| abs_at(self.z(j), place)).fold(ymax, Rational::max)
    }

    /// `max_i |x_i|_mu` by scanning every coordinate.
    pub fn norm_at_direct(&self, place: &Place) -> Rational {
        self.coordinates.iter().map(|x| abs_at(x, place)).max().expect("nonempty")
    }

    /// `prod_{mu not in S} |P|_mu`: only the `z_j` can have denominators
    /// outside `S`, so this is the `S`-free part of their common
    /// denominator.
    pub fn norm_outside(&self, s: &PlaceSet) -> BigUint {
        let l = (1..=self.k).fold(BigUint::one(), |acc, j| acc.lcm(&den(self.z(j))));
        s.strip(&l)
    }
}

/// Builds `P(u, v)` and asserts `z_j = z_1 (u^(j-1) + ... + u + 1)`.
pub fn build_point(u: &Rational, v: &Rational, k: u32, h: u32) -> Result<AuxPoint> {
    if v.is_one() {
        return Err(Error::ZUndefined);
    }
    if u.is_zero() || v.is_zero() {
        return Err(Error::InvalidParameter("u and v must be nonzero".into()));
    }
    let one = Rational::one();
    let vm1 = v - &one;
    let mut coords = Vec::with_capacity((k + (k + 1) * h) as usize);
    let mut uj = one.clone();
    for _ in 1..=k {
        uj *= u;
        coords.push((&uj - &one) / &vm1);
    }
    let vinv = v.recip();
    let mut uj = one.clone();
    for j in 0..=k {
        if j > 0 {
            uj *= u;
        }
        let mut y = &uj * &vinv;
        for _ in 1..=h {
            coords.push(y.clone());
            y *= &vinv;
        }
    }
    let p = AuxPoint { u: u.clone(), v: v.clone(), k, h, coordinates: coords };
    let mut geometric = Rational::zero();
    let mut power = one.clone();
    for j in 1..=k {
        geometric += &power;
        power *= u;
        if *p.z(j) != p.z(1) * &geometric {
            return Err(Error::Invariant(format!("z_{j} != z_1 (u^{} + ... + 1)", j - 1)));
        }
    }
    Ok(p)
}

/// `S^+ = { mu in S : |v|_mu > 1 }` and its complement `S^-` in `S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SPartition {
    #[serde(serialize_with = "ser_places")]
    pub plus: Vec<Place>,
    #[serde(serialize_with = "ser_places")]
    pub minus: Vec<Place>,
}

fn ser_places<S: serde::Serializer>(p: &[Place], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(p.iter().map(|x| x.to_string()))
}

impl SPartition {
    pub fn for_v(v: &Rational, s: &PlaceSet) -> SPartition {
        let (plus, minus) = s.places().into_iter().partition(|mu| abs_at(v, mu) > Rational::one());
        SPartition { plus, minus }
    }

    pub fn is_plus(&self, place: &Place) -> bool {
        self.plus.contains(place)
    }

    pub fn places(&self) -> impl Iterator<Item = &Place> {
        self.plus.iter().chain(self.minus.iter())
    }
}

/// `z_j + y_{0,1} + ... + y_{0,h} - y_{j,1} - ... - y_{j,h}` at `P`.
pub fn shifted_form(p: &AuxPoint, j: u32) -> Rational {
    let mut s = p.z(j).clone();
    for i in 1..=p.h {
        s += p.y(0, i);
        s -= p.y(j, i);
    }
    s
}

/// `(u^j - 1) v^-h / (v - 1)`, the exact value of [`shifted_form`].
pub fn shifted_form_closed(u: &Rational, v: &Rational, j: u32, h: u32) -> Rational {
    let one = Rational::one();
    (rpow(u, j as i64) - &one) * rpow(v, -(h as i64)) / (v - one)
}

/// `|L_{j,mu}(P)|_mu` for `j = 1..N` at one place.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaceForms {
    pub place: Place,
    pub values: Vec<Rational>,
}

/// `|L_{j,mu}(P)|_mu` for `j <= k` at every place of `S`, after checking
/// each shifted form against its closed form.
fn special_form_values(p: &AuxPoint, partition: &SPartition) -> Result<Vec<(Place, Vec<Rational>)>> {
    let mut special = Vec::new();
    if !partition.plus.is_empty() {
        for j in 1..=p.k {
            let direct = shifted_form(p, j);
            if direct != shifted_form_closed(&p.u, &p.v, j, p.h) {
                return Err(Error::Invariant(format!("shifted form {j} closed identity")));
            }
            special.push(direct);
        }
    }
    Ok(partition
        .places()
        .map(|mu| {
            let values = (1..=p.k)
                .map(|j| {
                    let x = if partition.is_plus(mu) { &special[j as usize - 1] } else { p.z(j) };
                    abs_at(x, mu)
                })
                .collect();
            (*mu, values)
        })
        .collect())
}

/// Absolute values of the forms at every place of `S`: the shifted form
/// for `j <= k` at places of `S^+`, the coordinate `x_j` otherwise. The
/// shifted forms are checked against their closed form.
pub fn linear_form_values(p: &AuxPoint, partition: &SPartition) -> Result<Vec<PlaceForms>> {
    Ok(special_form_values(p, partition)?
        .into_iter()
        .map(|(mu, mut values)| {
            let au = abs_at(&p.u, &mu);
            let av = abs_at(&p.v, &mu);
            // |u^j v^-i|_mu from |u|_mu, |v|_mu avoids valuations of large powers
            for j in 0..=p.k {
                let uj = rpow(&au, j as i64);
                for i in 1..=p.h {
                    values.push(&uj * rpow(&av, -(i as i64)));
                }
            }
            PlaceForms { place: mu, values }
        })
        .collect())
}

/// `prod_{j=1}^N prod_{mu in S} |L_{j,mu}(P)|_mu / |P|_mu` in factored form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleProduct {
    pub n: u32,
    /// `prod_{j > k} prod_{mu in S} |x_j|_mu`; `1` since those coordinates are S-units.
    pub coordinate_part: Rational,
    /// `prod_{j <= k} prod_{mu in S} |L_{j,mu}(P)|_mu`.
    pub special_part: Rational,
    /// `prod_{mu in S} |P|_mu`.
    pub norm_s: Rational,
    pub per_place_norms: Vec<(Place, Rational)>,
}

impl DoubleProduct {
    /// `coordinate_part * special_part * norm_s^-N`, exactly.
    pub fn value(&self) -> Rational {
        &self.coordinate_part * &self.special_part * rpow(&self.norm_s, -(self.n as i64))
    }

    /// `ln` of the value, `None` when it is 0.
    pub fn log_sum(&self) -> Option<LogSum> {
        if self.special_part.is_zero() || self.coordinate_part.is_zero() {
            return None;
        }
        Some(
            LogSum::ln(self.coordinate_part.clone())
                .add(&LogSum::ln(self.special_part.clone()))
                .sub(&LogSum::ln(self.norm_s.clone()).scale(&q(self.n as i64))),
        )
    }
}

/// The coordinate part uses `prod_{j,i} |u^j v^-i|_mu =
/// |u|_mu^(h k(k+1)/2) |v|_mu^(-(k+1) h(h+1)/2)`, with the same exponents
/// at every place.
pub fn double_product(p: &AuxPoint, partition: &SPartition) -> Result<DoubleProduct> {
    let (k, h) = (p.k as i64, p.h as i64);
    let (eu, ev) = (h * k * (k + 1) / 2, -(k + 1) * h * (h + 1) / 2);
    let mut special_part = Rational::one();
    let mut per_place_norms = Vec::new();
    let mut norm_s = Rational::one();
    let (mut su, mut sv) = (Rational::one(), Rational::one());
    for (mu, values) in special_form_values(p, partition)? {
        special_part *= values.iter().product::<Rational>();
        su *= abs_at(&p.u, &mu);
        sv *= abs_at(&p.v, &mu);
        let nm = p.norm_at(&mu);
        norm_s *= &nm;
        per_place_norms.push((mu, nm));
    }
    let coordinate_part = rpow(&su, eu) * rpow(&sv, ev);
    Ok(DoubleProduct { n: p.len() as u32, coordinate_part, special_part, norm_s, per_place_norms })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StepStatus {
    Pass,
    Fail,
    Undecided,
    /// A hypothesis of the step is unmet; nothing is asserted.
    Skipped,
}

/// One bound `lhs <= rhs` of the chain, in logarithmic form. `lhs = None`
/// stands for `ln 0`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChainStep {
    pub name: &'static str,
    pub statement: &'static str,
    /// Needs the outside-S shifted gcd hypothesis.
    pub gated: bool,
    #[serde(serialize_with = "ser_opt_log")]
    pub lhs: Option<LogSum>,
    #[serde(serialize_with = "crate::cli::ser_display")]
    pub rhs: LogSum,
    pub lhs_f64: f64,
    pub rhs_f64: f64,
    pub status: StepStatus,
}

fn ser_opt_log<S: serde::Serializer>(
    v: &Option<LogSum>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(l) => s.serialize_str(&l.to_string()),
        None => s.serialize_str("-inf"),
    }
}

fn step(
    name: &'static str,
    statement: &'static str,
    gated: bool,
    lhs: Option<LogSum>,
    rhs: LogSum,
    policy: &DecisionPolicy,
    run: bool,
) -> ChainStep {
    let status = if !run {
        StepStatus::Skipped
    } else {
        match &lhs {
            None => StepStatus::Pass,
            Some(l) => match rhs.sub(l).sign_with(policy) {
                Decision::Positive | Decision::Zero => StepStatus::Pass,
                Decision::Negative => StepStatus::Fail,
                Decision::Undecided => StepStatus::Undecided,
            },
        }
    };
    ChainStep {
        name,
        statement,
        gated,
        lhs_f64: lhs.as_ref().map_or(f64::NEG_INFINITY, |l| l.to_f64()),
        rhs_f64: rhs.to_f64(),
        lhs,
        rhs,
        status,
    }
}

fn exact_step(name: &'static str, statement: &'static str, lhs: &Rational, rhs: &Rational) -> ChainStep {
    let ln_or_none = |r: &Rational| (!r.is_zero()).then(|| LogSum::ln(r.clone()));
    ChainStep {
        name,
        statement,
        gated: false,
        lhs: ln_or_none(lhs),
        rhs: ln_or_none(rhs).unwrap_or_default(),
        lhs_f64: ln_or_none(lhs).map_or(f64::NEG_INFINITY, |l| l.to_f64()),
        rhs_f64: ln_or_none(rhs).map_or(f64::NEG_INFINITY, |l| l.to_f64()),
        status: if lhs <= rhs { StepStatus::Pass } else { StepStatus::Fail },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    /// `sum_{mu not in S} log^- max{|u-1|,|v-1|} < -(eps/2) max{h(u), h(v)}`.
    pub shifted_gcd_outside: bool,
    pub shifted_gcd_undecided: bool,
    pub height_v_at_least_2: bool,
    pub k_at_least_2: bool,
}

impl Hypotheses {
    pub fn met(&self) -> bool {
        self.shifted_gcd_outside && self.height_v_at_least_2 && self.k_at_least_2
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChainLedger {
    pub params: ProofParams,
    #[serde(serialize_with = "crate::cli::ser_rational")]
    pub u: Rational,
    #[serde(serialize_with = "crate::cli::ser_rational")]
    pub v: Rational,
    /// `u` and `v` were exchanged to get `H(v) >= H(u)`.
    pub swapped: bool,
    pub partition: SPartition,
    pub height_point: HeightValue,
    pub hypotheses: Hypotheses,
    pub steps: Vec<ChainStep>,
}

impl ChainLedger {
    pub fn step(&self, name: &str) -> Option<&ChainStep> {
        self.steps.iter().find(|s| s.name == name)
    }

    /// The final bound passed; `None` when it was not asserted.
    pub fn final_bound(&self) -> Option<bool> {
        let s = self.step("final_bound")?;
        match s.status {
            StepStatus::Skipped => None,
            st => Some(st == StepStatus::Pass),
        }
    }

    /// No asserted step failed or stayed undecided.
    pub fn consistent(&self) -> bool {
        self.steps.iter().all(|s| matches!(s.status, StepStatus::Pass | StepStatus::Skipped))
    }
}

impl fmt::Display for ChainLedger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::qplaces::fmt_rational as r;
        let p = &self.params;
        writeln!(
            f,
            "params: eps={} k={} h={} N={} eps0={} delta={}",
            r(&p.epsilon),
            p.k,
            p.h,
            p.n,
            r(&p.epsilon0),
            r(&p.delta)
        )?;
        writeln!(f, "point: u={} v={}{}", r(&self.u), r(&self.v), if self.swapped { " (swapped)" } else { "" })?;
        let h = &self.hypotheses;
        writeln!(
            f,
            "hypotheses: shifted_gcd_outside={} H(v)>=2={} k>=2={}{}",
            h.shifted_gcd_outside,
            h.height_v_at_least_2,
            h.k_at_least_2,
            if h.met() { "" } else { " -> gated steps skipped" }
        )?;
        for s in &self.steps {
            writeln!(
                f,
                "{:<24} {:<9} lhs={:.6e} rhs={:.6e}  {}",
                s.name,
                format!("{:?}", s.status).to_lowercase(),
                s.lhs_f64,
                s.rhs_f64,
                s.statement
            )?;
        }
        Ok(())
    }
}

/// Evaluates the chain of bounds for the double product at `P(u, v)`.
/// Steps that rely on the outside-S shifted gcd inequality, `H(v) >= 2`
/// or `k >= 2` are skipped when those fail.
pub fn verify_chain(u: &Rational, v: &Rational, params: &ProofParams, s: &PlaceSet) -> Result<ChainLedger> {
    verify_chain_with(u, v, params, s, &DecisionPolicy::default())
}

pub fn verify_chain_with(
    u: &Rational,
    v: &Rational,
    params: &ProofParams,
    s: &PlaceSet,
    policy: &DecisionPolicy,
) -> Result<ChainLedger> {
    SUnit::from_rational(u, s)?;
    SUnit::from_rational(v, s)?;
    let swapped = height_rational(v) < height_rational(u);
    let (u, v) = if swapped { (v.clone(), u.clone()) } else { (u.clone(), v.clone()) };
    let (k, h, n) = (params.k, params.h, params.n);
    let (kq, hq, nq) = (q(k as i64), q(h as i64), q(n as i64));
    let eps = &params.epsilon;
    let one = Rational::one();
    let two = q(2);

    let p = build_point(&u, &v, k, h)?;
    let partition = SPartition::for_v(&v, s);
    let dp = double_product(&p, &partition)?;
    let hu = height_rational(&u);
    let hv = height_rational(&v);
    let h1v = height_rational(&(&one - &v));
    let outside = p.norm_outside(s);
    let outside_q = Rational::from_integer(outside.clone().into());
    let height_point = HeightValue::new(&dp.norm_s * &outside_q);

    let vals = [&u - &one, &v - &one];
    let lm = logminus_sum(&vals, PlaceFilter::ComplementOf(s.clone()))?;
    let mut gate = InequalityReport::new(
        InequalityKind::ShiftedGcdOutside,
        eps,
        (&u, &v),
        lm.log_sum(),
        hv.log_sum().scale(&-(eps / &two)),
    );
    gate.decide(policy);
    let hypotheses = Hypotheses {
        shifted_gcd_outside: gate.satisfied(),
        shifted_gcd_undecided: gate.verdict == crate::gcdcore::Verdict::Undecided,
        height_v_at_least_2: *hv.value() >= two,
        k_at_least_2: k >= 2,
    };
    let met = hypotheses.met();

    let mut steps = Vec::new();
    steps.push(exact_step(
        "coordinate_forms",
        "prod_{j>k} prod_{mu in S} |x_j|_mu = 1",
        &dp.coordinate_part,
        &one,
    ));
    if dp.coordinate_part != one {
        steps.last_mut().expect("pushed").status = StepStatus::Fail;
    }

    // per-factor bounds at places of S^- and S^+
    let mut minus_ok = true;
    let mut plus_ok = true;
    let (mut minus_l, mut minus_r, mut plus_l, mut plus_r) = (one.clone(), one.clone(), one.clone(), one.clone());
    for mu in partition.places() {
        let au = abs_at(&u, mu);
        let av = abs_at(&v, mu);
        let a1v = abs_at(&(&one - &v), mu);
        let a2 = abs_at(&two, mu).max(one.clone());
        for j in 1..=k {
            let uj1 = abs_at(&(rpow(&u, j as i64) - &one), mu);
            if partition.is_plus(mu) {
                let l = abs_at(&shifted_form_closed(&u, &v, j, h), mu);
                let r = &a2 * rpow(&au.clone().max(one.clone()), j as i64) * rpow(&av, -(h as i64)) / &a1v;
                plus_ok &= l <= r;
                plus_l *= l;
                plus_r *= r;
            } else {
                let l = abs_at(p.z(j), mu);
                let r = uj1 / &a1v;
                minus_ok &= l <= r;
                minus_l *= l;
                minus_r *= r;
            }
        }
    }
    let mut st = exact_step("unshifted_forms", "|z_j|_mu <= |u^j-1|_mu / |v-1|_mu on S^-", &minus_l, &minus_r);
    st.status = if minus_ok { StepStatus::Pass } else { StepStatus::Fail };
    steps.push(st);
    let mut st = exact_step(
        "shifted_forms",
        "|L_j|_mu <= max(1,|2|) max(1,|u|)^j |v|^-h / |1-v| on S^+",
        &plus_l,
        &plus_r,
    );
    st.status = if plus_ok { StepStatus::Pass } else { StepStatus::Fail };
    steps.push(st);

    let tri = (k * (k + 1) / 2) as i64;
    let special_rhs = rpow(hv.value(), -((h * k) as i64))
        * rpow(&(&two * hu.value()), tri)
        * rpow(h1v.value(), k as i64);
    steps.push(exact_step(
        "special_forms_product",
        "prod_{j<=k} prod_S |L_j| <= H(v)^-hk (2H(u))^(k(k+1)/2) H(1-v)^k",
        &dp.special_part,
        &special_rhs,
    ));

    let free_gcd = Rational::from_integer(lm.finite_part.clone().into());
    let hvm1 = height_rational(&(&v - &one));
    steps.push(exact_step(
        "outside_norm",
        "prod_{mu not in S} |P|_mu <= H(v-1) prod_{mu not in S} max(|u-1|,|v-1|)",
        &outside_q,
        &(hvm1.value() / &free_gcd),
    ));

    let ln = |r: &Rational| LogSum::ln(r.clone());
    let lnd = dp.log_sum();
    let ln_hp = height_point.log_sum();
    let ln_hv = hv.log_sum();
    let unconditional = ln_hp
        .scale(&-nq.clone())
        .add(&ln(&outside_q).scale(&nq))
        .sub(&ln_hv.scale(&(&hq * &kq)))
        .add(&ln(&(&two * hu.value())).scale(&(&kq * &kq)))
        .add(&h1v.log_sum().scale(&kq));
    steps.push(step(
        "unconditional_bound",
        "D <= H(P)^-N (prod_{not S}|P|)^N H(v)^-hk (2H(u))^(k^2) H(1-v)^k",
        false,
        lnd.clone(),
        unconditional,
        policy,
        true,
    ));

    steps.push(step(
        "outside_norm_hypothesis",
        "prod_{mu not in S} |P|_mu <= H(v-1) H(v)^(-eps/2)",
        true,
        Some(ln(&outside_q)),
        hvm1.log_sum().sub(&ln_hv.scale(&(eps / &two))),
        policy,
        met,
    ));

    let half = &one - eps / &two;
    let substituted = ln_hv
        .scale(&-(&hq * &kq))
        .sub(&ln_hp.scale(&nq))
        .add(&ln_hv.scale(&(&half * &nq)))
        .add(&ln(&two).scale(&nq))
        .add(&ln(&(&two * hv.value())).scale(&(&kq * &kq + &kq)));
    steps.push(step(
        "substituted_bound",
        "D <= H(v)^-hk H(P)^-N H(v)^((1-eps/2)N) 2^N (2H(v))^(k^2+k)",
        true,
        lnd.clone(),
        substituted,
        policy,
        met,
    ));

    let exponent = &half * &nq + &kq * &kq + &kq - &hq * &kq;
    let mut st = step(
        "exponent_estimate",
        "H(v)^((1-eps/2)N + k^2 + k - hk) <= H(v)^-eps0",
        false,
        Some(ln_hv.scale(&exponent)),
        ln_hv.scale(&-params.epsilon0.clone()),
        policy,
        hypotheses.k_at_least_2,
    );
    if st.status != StepStatus::Skipped {
        // decided on the exponents so that H(v) = 1 proves nothing
        st.status = if exponent <= -params.epsilon0.clone() { StepStatus::Pass } else { StepStatus::Fail };
    }
    steps.push(st);

    let final_rhs = ln_hp
        .scale(&-nq.clone())
        .sub(&ln_hv.scale(&params.epsilon0))
        .add(&ln(&two).scale(&(&nq + &kq + &kq * &kq)));
    steps.push(step(
        "final_bound",
        "D <= H(P)^-N H(v)^-eps0 2^(N+k+k^2)",
        true,
        lnd,
        final_rhs,
        policy,
        met,
    ));

    Ok(ChainLedger {
        params: params.clone(),
        u,
        v,
        swapped,
        partition,
        height_point,
        hypotheses,
        steps,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeightBoundReport {
    pub preconditions: bool,
    pub height_point: HeightValue,
    /// `H(P) <= H(u)^k H(v)^h H(1-v)`.
    pub first: bool,
    /// `H(u)^k H(v)^h H(1-v) <= 2 H(u)^k H(v)^(h+1)`.
    pub second: bool,
    /// `2 H(u)^k H(v)^(h+1) <= H(v)^(h+k+2)`.
    pub third: bool,
}

impl HeightBoundReport {
    pub fn holds(&self) -> bool {
        self.first && self.second && self.third
    }
}

/// `H(P) <= H(u)^k H(v)^h H(1-v) <= H(u)^k 2 H(v)^(h+1) <= H(v)^(h+k+2)`,
/// compared exactly. With `H(v) < 2` or `H(v) < H(u)` the report is
/// returned with `preconditions = false` and the flags unset.
pub fn hp_bound_check(u: &Rational, v: &Rational, k: u32, h: u32) -> Result<HeightBoundReport> {
    let p = build_point(u, v, k, h)?;
    let hp = height_affine_point(&p.coordinates)?;
    let (hu, hv) = (height_rational(u), height_rational(v));
    let two = q(2);
    if *hv.value() < two || hv < hu {
        return Ok(HeightBoundReport { preconditions: false, height_point: hp, first: false, second: false, third: false });
    }
    let huk = rpow(hu.value(), k as i64);
    let a = &huk * rpow(hv.value(), h as i64) * height_rational(&(Rational::one() - v)).value();
    let b = &two * &huk * rpow(hv.value(), h as i64 + 1);
    let c = rpow(hv.value(), (h + k + 2) as i64);
    Ok(HeightBoundReport { preconditions: true, first: *hp.value() <= a, second: a <= b, third: b <= c, height_point: hp })
}
