//! Integer factorization: trial division, deterministic Miller-Rabin on
//! 64-bit integers, and Brent's variant of Pollard rho with a fixed seed.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer as _;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Prime factorization as a map prime -> multiplicity, ascending.
pub type Factorization = BTreeMap<u64, u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorConfig {
    /// Trial division runs over primes strictly below this bound.
    pub trial_limit: u64,
    /// Cofactors left after trial division must not exceed this value.
    pub bailout: u64,
    pub seed: u64,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig {
            trial_limit: 1_000_000,
            bailout: 1_000_000_000_000_000_000,
            seed: 0x5eed_1234,
        }
    }
}

fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| sieve(1_000_000))
}

fn sieve(limit: usize) -> Vec<u64> {
    let mut is_comp = vec![false; limit];
    let mut out = Vec::new();
    for i in 2..limit {
        if !is_comp[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j < limit {
                is_comp[j] = true;
                j += i;
            }
        }
    }
    out
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for every `n < 2^64`.
pub fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Primality for arbitrary integers; exact below `2^64`, and values above
/// that are reported as not prime (no place of this crate uses them).
pub fn is_prime(n: &BigUint) -> bool {
    n.to_u64().map(is_prime_u64).unwrap_or(false)
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Brent's cycle-finding variant of Pollard rho. Returns a nontrivial
/// divisor of the odd composite `n`.
fn brent_rho(n: u64, rng: &mut ChaCha8Rng) -> u64 {
    loop {
        let c = rng.gen_range(1..n);
        let mut y = rng.gen_range(0..n);
        let m = 128u64;
        let mut g = 1u64;
        let mut r = 1u64;
        let mut q = 1u64;
        let mut x = y;
        let mut ys = y;
        let f = |v: u64| (mul_mod(v, v, n) + c) % n;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd_u64(q, n);
                k += m;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd_u64(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
}

fn factor_u64_into(n: u64, rng: &mut ChaCha8Rng, out: &mut Factorization) {
    if n == 1 {
        return;
    }
    if is_prime_u64(n) {
        *out.entry(n).or_insert(0) += 1;
        return;
    }
    if n.is_multiple_of(2) {
        *out.entry(2).or_insert(0) += 1;
        factor_u64_into(n / 2, rng, out);
        return;
    }
    let d = brent_rho(n, rng);
    factor_u64_into(d, rng, out);
    factor_u64_into(n / d, rng, out);
}

/// Factors `n >= 1`; `factor(1)` is empty.
pub fn factor(n: &BigUint) -> Result<Factorization> {
    factor_with(n, &FactorConfig::default())
}

pub fn factor_with(n: &BigUint, cfg: &FactorConfig) -> Result<Factorization> {
    let mut out = Factorization::new();
    if n.is_zero() {
        return Err(Error::InvalidParameter("factor(0)".into()));
    }
    let mut rest = n.clone();
    for &p in small_primes().iter().take_while(|&&p| p < cfg.trial_limit) {
        if rest.is_one() {
            break;
        }
        let pb = BigUint::from(p);
        if &pb * &pb > rest {
            break;
        }
        loop {
            let (quo, rem) = rest.div_rem(&pb);
            if !rem.is_zero() {
                break;
            }
            *out.entry(p).or_insert(0) += 1;
            rest = quo;
        }
    }
    if rest.is_one() {
        return Ok(out);
    }
    let Some(small) = rest.to_u64() else {
        return Err(Error::FactorBailout { cofactor: rest });
    };
    if is_prime_u64(small) {
        *out.entry(small).or_insert(0) += 1;
        return Ok(out);
    }
    if small > cfg.bailout {
        return Err(Error::FactorBailout { cofactor: rest });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    factor_u64_into(small, &mut rng, &mut out);
    Ok(out)
}

/// Multiplies a factorization back out.
pub fn expand(f: &Factorization) -> BigUint {
    f.iter().fold(BigUint::one(), |acc, (&p, &e)| {
        acc * BigUint::from(p).pow(e)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fac(n: u64) -> Vec<(u64, u32)> {
        factor(&BigUint::from(n)).unwrap().into_iter().collect()
    }

    #[test]
    fn small_cases() {
        assert!(fac(1).is_empty());
        assert_eq!(fac(91), vec![(7, 1), (13, 1)]);
        assert_eq!(fac(82944), vec![(2, 10), (3, 4)]);
    }

    #[test]
    fn rho_splits_semiprime_above_trial_range() {
        // both factors exceed the trial-division bound
        let p = 1_000_003u64;
        let q = 1_000_033u64;
        assert_eq!(fac(p * q), vec![(p, 1), (q, 1)]);
        let big = 999_999_937u64 * 999_999_929u64;
        assert_eq!(expand(&factor(&BigUint::from(big)).unwrap()), BigUint::from(big));
    }

    #[test]
    fn miller_rabin_known_values() {
        assert!(is_prime_u64(2));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(3_215_031_751)); // strong pseudoprime to 2,3,5,7
        assert!(is_prime_u64(18_446_744_073_709_551_557));
        assert!(!is_prime_u64(561));
    }

    #[test]
    fn bailout_reports_cofactor() {
        let cfg = FactorConfig { bailout: 1_000_000_000_000, ..FactorConfig::default() };
        let n = BigUint::from(1_000_003u64 * 1_000_033u64);
        match factor_with(&n, &cfg) {
            Err(Error::FactorBailout { cofactor }) => assert_eq!(cofactor, n),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn multiply_back_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n: u64 = rng.gen_range(1..1_000_000_000_000);
            let b = BigUint::from(n);
            let f = factor(&b).unwrap();
            assert_eq!(expand(&f), b);
            assert!(f.keys().all(|&p| is_prime_u64(p)));
        }
    }
}
