//! Substitution of `u = t^q, v = wbar t^-p` into a Laurent polynomial.
//!
//! Each term `a_{i,j} X^i Y^j` lands on `a_{i,j} wbar^j t^(qi - pj)`; terms
//! that share the exponent `l = qi - pj` collide and their coefficients add
//! up to `c_l`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use super::LaurentPoly2;
use crate::error::{Error, Result};
use crate::qplaces::{rpow, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CollapseMap {
    /// `l -> c_l`; zero values are kept when a collision produced them.
    #[serde(serialize_with = "ser_degree_map")]
    pub by_degree: BTreeMap<i64, Rational>,
    /// Exponents `l` reached by at least two support points.
    pub collisions: Vec<i64>,
}

fn ser_degree_map<S: serde::Serializer>(
    m: &BTreeMap<i64, Rational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut map = s.serialize_map(Some(m.len()))?;
    for (k, v) in m {
        map.serialize_entry(&k.to_string(), &crate::qplaces::fmt_rational(v))?;
    }
    map.end()
}

impl CollapseMap {
    /// Some collision summed to zero: monomials cancel along the subtorus.
    pub fn cancellation(&self) -> bool {
        self.collisions.iter().any(|l| self.by_degree[l].is_zero())
    }

    pub fn has_collision(&self) -> bool {
        !self.collisions.is_empty()
    }
}

pub fn collapse_coefficients(f: &LaurentPoly2, p: i64, q: i64, wbar: &Rational) -> CollapseMap {
    assert!(!wbar.is_zero(), "wbar must be nonzero");
    let mut by_degree: BTreeMap<i64, Rational> = BTreeMap::new();
    let mut hits: BTreeMap<i64, usize> = BTreeMap::new();
    for (&(i, j), a) in f.terms() {
        let l = q * i - p * j;
        *by_degree.entry(l).or_insert_with(Rational::zero) += a * rpow(wbar, j);
        *hits.entry(l).or_insert(0) += 1;
    }
    let collisions = hits.into_iter().filter(|&(_, n)| n >= 2).map(|(l, _)| l).collect();
    CollapseMap { by_degree, collisions }
}

/// `sum c_l t^l` for `t != 0`.
pub fn univariate_eval(phi: &CollapseMap, t: &Rational) -> Result<Rational> {
    if t.is_zero() {
        return Err(Error::Pole);
    }
    Ok(phi.by_degree.iter().map(|(&l, c)| c * rpow(t, l)).sum())
}

/// `max { |l| : c_l != 0 }`.
pub fn univariate_degree(phi: &CollapseMap) -> Result<u64> {
    phi.by_degree
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(l, _)| l.unsigned_abs())
        .max()
        .ok_or(Error::UndefinedDegree)
}
