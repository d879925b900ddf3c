//! Resultants of bivariate polynomials through the Sylvester matrix.
//!
//! The determinant is taken over `Q[X]` (or `Q[Y]`) with fraction-free
//! Bareiss elimination, so every division is an exact polynomial division.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use super::{LaurentPoly2, UPoly};
use crate::error::{Error, Result};
use crate::qplaces::Rational;

/// `f` as a polynomial in `Y` with coefficients in `Q[X]`: entry `j` is
/// the coefficient of `Y^j`.
fn coeffs_in_y(f: &LaurentPoly2) -> Vec<UPoly> {
    assert!(f.is_polynomial(), "resultant of a Laurent polynomial");
    let (_, dy) = f.degrees();
    let mut rows = vec![Vec::<Rational>::new(); dy as usize + 1];
    for (&(i, j), c) in f.terms() {
        let row = &mut rows[j as usize];
        if row.len() <= i as usize {
            row.resize(i as usize + 1, Rational::zero());
        }
        row[i as usize] = c.clone();
    }
    let mut out: Vec<UPoly> = rows.into_iter().map(UPoly::new).collect();
    while out.last().is_some_and(|p| p.is_zero()) {
        out.pop();
    }
    out
}

fn swap_xy(f: &LaurentPoly2) -> LaurentPoly2 {
    LaurentPoly2::from_terms(f.terms().iter().map(|(&(i, j), c)| ((j, i), c.clone())))
}

/// Sylvester matrix of `a = sum a_k Y^k` (degree `m`) and `b` (degree `n`):
/// `n` shifted rows of `a` followed by `m` shifted rows of `b`, leading
/// coefficients first.
pub fn sylvester_matrix(a: &[UPoly], b: &[UPoly]) -> Vec<Vec<UPoly>> {
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for r in 0..n {
        let mut row = vec![UPoly::zero(); size];
        for (k, c) in a.iter().rev().enumerate() {
            row[r + k] = c.clone();
        }
        rows.push(row);
    }
    for r in 0..m {
        let mut row = vec![UPoly::zero(); size];
        for (k, c) in b.iter().rev().enumerate() {
            row[r + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Determinant of a square matrix over `Q[x]` by Bareiss elimination.
pub fn bareiss_det(mut m: Vec<Vec<UPoly>>) -> UPoly {
    let n = m.len();
    if n == 0 {
        return UPoly::one();
    }
    let mut negate = false;
    let mut prev = UPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(piv) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return UPoly::zero();
            };
            m.swap(k, piv);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t.div_exact(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

fn resultant_of(a: Vec<UPoly>, b: Vec<UPoly>) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return UPoly::zero();
    }
    bareiss_det(sylvester_matrix(&a, &b))
}

/// `Res_Y(p, q)` in `Q[X]`, possibly zero. A degree-0 argument gives the
/// usual convention `Res(c, q) = c^deg q`.
pub fn raw_resultant_y(p: &LaurentPoly2, q: &LaurentPoly2) -> UPoly {
    resultant_of(coeffs_in_y(p), coeffs_in_y(q))
}

pub fn raw_resultant_x(p: &LaurentPoly2, q: &LaurentPoly2) -> UPoly {
    resultant_of(coeffs_in_y(&swap_xy(p)), coeffs_in_y(&swap_xy(q)))
}

fn checked(p: &LaurentPoly2, q: &LaurentPoly2) -> Result<()> {
    if !p.is_polynomial() || !q.is_polynomial() {
        return Err(Error::NotPolynomial);
    }
    Ok(())
}

/// `r(X) = Res_Y(p, q)`; zero means `p` and `q` share a factor involving `Y`.
pub fn resultant_y(p: &LaurentPoly2, q: &LaurentPoly2) -> Result<UPoly> {
    checked(p, q)?;
    let r = raw_resultant_y(p, q);
    if r.is_zero() {
        return Err(Error::SharedFactor);
    }
    Ok(r)
}

/// `s(Y) = Res_X(p, q)`.
pub fn resultant_x(p: &LaurentPoly2, q: &LaurentPoly2) -> Result<UPoly> {
    checked(p, q)?;
    let s = raw_resultant_x(p, q);
    if s.is_zero() {
        return Err(Error::SharedFactor);
    }
    Ok(s)
}

/// Scales `f` to integer coefficients with content 1.
pub fn primitive_integer_poly(f: &LaurentPoly2) -> LaurentPoly2 {
    if f.is_zero() {
        return f.clone();
    }
    let l = f.terms().values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scaled = f.scale(&Rational::from_integer(l));
    let g = scaled.terms().values().fold(BigInt::zero(), |acc, c| acc.gcd(c.numer()));
    scaled.scale(&Rational::new(BigInt::one(), g))
}
