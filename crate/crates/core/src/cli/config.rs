//! Scan configuration: a JSON file, then command-line overrides, then
//! validation.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::logcmp::DecisionPolicy;
use crate::qplaces::{parse_rational, PlaceSet, Rational};
use crate::subtori::{ScanKind, ScanSpec};
use crate::sunits::SignMode;

use super::parse::parse_function;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ScanConfig {
    /// Finite primes of `S`; the archimedean place is always included.
    pub primes: Vec<u64>,
    pub exponent_bound: u32,
    /// Exact rational, `"a/b"`.
    pub epsilon: String,
    /// `gcd-pair`, `monomial-drop`, `coordinate-drop`, `shifted-gcd` or
    /// `resultant-gcd`.
    pub inequality: String,
    pub function: Option<String>,
    pub signs: SignMode,
    pub output: Option<PathBuf>,
    /// Largest working precision of the interval comparisons.
    pub precision_bits: u32,
    pub seed: u64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            primes: vec![2, 3],
            exponent_bound: 4,
            epsilon: "1/10".into(),
            inequality: "gcd-pair".into(),
            function: None,
            signs: SignMode::Positive,
            output: None,
            precision_bits: 1024,
            seed: 0,
        }
    }
}

/// Values given on the command line; `None` keeps the config file value.
#[derive(Clone, Debug, Default)]
pub struct ConfigOverrides {
    pub primes: Option<Vec<u64>>,
    pub exponent_bound: Option<u32>,
    pub epsilon: Option<String>,
    pub inequality: Option<String>,
    pub function: Option<String>,
    pub signs: Option<SignMode>,
    pub output: Option<PathBuf>,
    pub precision_bits: Option<u32>,
    pub seed: Option<u64>,
}

/// The validated form of a [`ScanConfig`].
#[derive(Clone, Debug)]
pub struct ValidConfig {
    pub config: ScanConfig,
    pub s: PlaceSet,
    pub epsilon: Rational,
    pub kind: ScanKind,
    pub policy: DecisionPolicy,
}

impl ValidConfig {
    pub fn scan_spec(&self) -> Result<ScanSpec> {
        let function = match &self.config.function {
            Some(f) => Some(parse_function(f).map_err(|e| field_error("function", e))?),
            None => None,
        };
        Ok(ScanSpec {
            kind: self.kind,
            function,
            resultants: None,
            s: self.s.clone(),
            bound: self.config.exponent_bound,
            epsilon: self.epsilon.clone(),
            signs: self.config.signs,
            policy: self.policy.clone(),
        })
    }
}

fn field_error(field: &str, e: Error) -> Error {
    match e {
        Error::Config(m) => Error::Config(format!("{field}: {m}")),
        e => Error::Config(format!("{field}: {e}")),
    }
}

impl ScanConfig {
    /// Parses JSON; syntax and type errors carry line and column.
    pub fn from_json(text: &str) -> Result<ScanConfig> {
        serde_json::from_str(text)
            .map_err(|e| Error::Config(format!("line {} column {}: {e}", e.line(), e.column())))
    }

    pub fn load(path: &std::path::Path) -> Result<ScanConfig> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn apply(mut self, o: ConfigOverrides) -> ScanConfig {
        macro_rules! take {
            ($($f:ident),*) => { $( if let Some(v) = o.$f { self.$f = v; } )* };
        }
        take!(primes, exponent_bound, epsilon, inequality, signs, precision_bits, seed);
        if o.function.is_some() {
            self.function = o.function;
        }
        if o.output.is_some() {
            self.output = o.output;
        }
        self
    }

    pub fn validate(&self) -> Result<ValidConfig> {
        let s = PlaceSet::new(self.primes.iter().copied()).map_err(|e| field_error("primes", e))?;
        let epsilon = parse_rational(&self.epsilon).map_err(|e| field_error("epsilon", e))?;
        if epsilon < Rational::from_integer(0.into()) {
            return Err(Error::Config("epsilon: must be nonnegative".into()));
        }
        let kind = ScanKind::from_name(&self.inequality).ok_or_else(|| {
            Error::Config(format!(
                "inequality: unknown selector {:?}, expected one of {}",
                self.inequality,
                ScanKind::ALL.map(|k| k.name()).join(", ")
            ))
        })?;
        if self.exponent_bound > 64 {
            return Err(Error::Config("exponent_bound: at most 64".into()));
        }
        if !(64..=1 << 16).contains(&self.precision_bits) {
            return Err(Error::Config("precision_bits: must lie in 64..=65536".into()));
        }
        if let Some(f) = &self.function {
            parse_function(f).map_err(|e| field_error("function", e))?;
        }
        let policy = DecisionPolicy {
            start_bits: 128.min(self.precision_bits),
            max_bits: self.precision_bits,
            ..DecisionPolicy::default()
        };
        Ok(ValidConfig { config: self.clone(), s, epsilon, kind, policy })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_then_overrides() {
        let c = ScanConfig::from_json(r#"{"primes": [2, 3, 5], "epsilon": "3/5"}"#).unwrap();
        assert_eq!(c.primes, vec![2, 3, 5]);
        assert_eq!(c.exponent_bound, 4);
        let c = c.apply(ConfigOverrides { exponent_bound: Some(6), ..Default::default() });
        assert_eq!(c.exponent_bound, 6);
        assert_eq!(c.epsilon, "3/5");
        c.validate().unwrap();
    }

    #[test]
    fn rejections_name_the_problem() {
        let e = ScanConfig::from_json("{\n  \"primes\": [2,\n  \"x\"]}").unwrap_err();
        assert!(e.to_string().contains("line 3"), "{e}");
        assert!(ScanConfig::from_json(r#"{"bogus": 1}"#).is_err());
        let bad = |c: ScanConfig, field: &str| {
            let e = c.validate().unwrap_err().to_string();
            assert!(e.contains(field), "{e}");
        };
        bad(ScanConfig { primes: vec![4], ..Default::default() }, "primes");
        bad(ScanConfig { epsilon: "1/0".into(), ..Default::default() }, "epsilon");
        bad(ScanConfig { inequality: "thm".into(), ..Default::default() }, "inequality");
        bad(ScanConfig { function: Some("(X+1)/(X+1)".into()), ..Default::default() }, "function");
    }
}
