//! Exact heights, gcd analogues and exceptional subtori for S-unit points of
//! the rational torus `G_m^2(Q)`.
//!
//! Every quantity in this crate lives over the rationals, so heights,
//! absolute values and gcd-type functionals are carried as exact
//! rationals. Logarithms only appear when two such quantities are compared
//! with a real exponent, and those comparisons go through [`logcmp`], which
//! decides them with interval arithmetic backed by an exact fallback.
//!
//! Module map:
//!
//! - [`qplaces`]: rationals, places of `Q`, valuations, factorization.
//! - [`heights`]: Weil and projective heights, `log^-` sums.
//! - [`sunits`]: S-units, multiplicative dependence, subtorus parametrization.
//! - [`laurent`]: bivariate Laurent polynomials, rational functions,
//!   monomial collapse, resultants.
//! - [`gcdcore`]: the gcd-analogue functional and the inequality testers.
//! - [`subtori`]: candidate subtori, classification and scan driver.
//! - [`proofscope`]: instrumentation of the auxiliary-point argument.
//! - [`cli`]: expression parser, configuration and CSV/JSON emitters.

pub mod cli;
pub mod error;
pub mod gcdcore;
pub mod heights;
pub mod laurent;
pub mod logcmp;
pub mod proofscope;
pub mod qplaces;
pub mod subtori;
pub mod sunits;

pub use error::{Error, Result};
pub use qplaces::{Integer, Place, PlaceSet, Rational};
