//! Exact integer primitives.
//!
//! Modular exponentiation is tiered by the size of the modulus: moduli below
//! 2^32 use plain `u64` products, moduli below 2^64 use `u128` products and
//! anything larger goes through [`BigUint::modpow`]. Factorization is trial
//! division followed by Brent's variant of Pollard rho with a configurable
//! iteration cap, so that hard inputs are reported instead of looping.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

const SMALL_PRIME_LIMIT: u64 = 1 << 12;

fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| primes_up_to(SMALL_PRIME_LIMIT))
}

/// All primes `p <= limit`, ascending.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = usize::try_from(limit).expect("sieve limit exceeds address space");
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut k = i.saturating_mul(i);
        while k <= limit {
            composite[k] = true;
            k += i;
        }
    }
    primes
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exp mod m` for word-sized operands.
pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    assert!(m >= 1, "modulus must be positive");
    if m == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut base = base % m;
    if m <= u32::MAX as u64 {
        while exp > 0 {
            if exp & 1 == 1 {
                result = result * base % m;
            }
            base = base * base % m;
            exp >>= 1;
        }
    } else {
        while exp > 0 {
            if exp & 1 == 1 {
                result = mul_mod(result, base, m);
            }
            base = mul_mod(base, base, m);
            exp >>= 1;
        }
    }
    result
}

/// Least non-negative residue of a signed big integer modulo `m`.
pub fn residue(x: &BigInt, m: u64) -> u64 {
    let r = (x.magnitude() % m).to_u64().expect("residue fits u64");
    if x.sign() == Sign::Minus && r != 0 {
        m - r
    } else {
        r
    }
}

/// Least non-negative residue of a signed big integer modulo a big modulus.
pub fn residue_big(x: &BigInt, m: &BigUint) -> BigUint {
    let r = x.magnitude() % m;
    if x.sign() == Sign::Minus && !r.is_zero() {
        m - r
    } else {
        r
    }
}

/// `base^exp` reduced into `[0, modulus)`, for a base of either sign.
pub fn modpow_signed(base: &BigInt, exp: u64, modulus: &BigUint) -> BigUint {
    assert!(!modulus.is_zero(), "modulus must be positive");
    if let Some(m) = modulus.to_u64() {
        return BigUint::from(pow_mod(residue(base, m), exp, m));
    }
    residue_big(base, modulus).modpow(&BigUint::from(exp), modulus)
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Miller-Rabin over big integers. Exact below 3.3 * 10^24; a strong
/// probable-prime test to 20 prime bases above that.
pub fn is_probable_prime_big(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime(small);
    }
    const BASES: [u64; 20] = [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
    ];
    for &p in &BASES {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    'witness: for &a in &BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Effort limits for factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorConfig {
    /// Rho iterations allowed per attempt.
    pub rho_iterations: u64,
    /// Number of rho attempts (different polynomial constants) per cofactor.
    pub rho_attempts: u32,
}

pub const DEFAULT_RHO_ITERATIONS: u64 = 1 << 20;

static RHO_ITERATIONS: AtomicU64 = AtomicU64::new(DEFAULT_RHO_ITERATIONS);

/// Changes the rho iteration cap used by [`FactorConfig::default`] for the
/// whole process. Meant for front ends such as the CLI `--effort` flag.
pub fn set_default_rho_iterations(iterations: u64) {
    RHO_ITERATIONS.store(iterations.max(1), Ordering::Relaxed);
}

impl Default for FactorConfig {
    fn default() -> Self {
        Self {
            rho_iterations: RHO_ITERATIONS.load(Ordering::Relaxed),
            rho_attempts: 16,
        }
    }
}

/// Canonical prime factorization: primes strictly ascending, exponents >= 1.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PrimeFactorization {
    factors: Vec<(u64, u32)>,
}

impl PrimeFactorization {
    /// Builds a factorization of `n` from `(prime, exponent)` pairs, checking
    /// ordering, primality, exponents and that the product equals `n`.
    pub fn new(n: u64, factors: Vec<(u64, u32)>) -> Result<Self> {
        for w in factors.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(Error::InvalidFactorization(format!(
                    "primes not strictly ascending: {} then {}",
                    w[0].0, w[1].0
                )));
            }
        }
        let mut product = BigUint::one();
        for &(p, k) in &factors {
            if !is_prime(p) {
                return Err(Error::InvalidFactorization(format!("{p} is not prime")));
            }
            if k == 0 {
                return Err(Error::InvalidFactorization(format!("zero exponent on {p}")));
            }
            product *= BigUint::from(p).pow(k);
        }
        if product != BigUint::from(n) {
            return Err(Error::InvalidFactorization(format!(
                "product {product} differs from {n}"
            )));
        }
        Ok(Self { factors })
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.factors.iter().copied()
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn largest_prime(&self) -> Option<u64> {
        self.factors.last().map(|&(p, _)| p)
    }

    /// Exponent of `p` in the factored integer (0 if absent).
    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .binary_search_by_key(&p, |&(q, _)| q)
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn value(&self) -> u64 {
        self.factors.iter().map(|&(p, k)| p.pow(k)).product()
    }

    /// All positive divisors, ascending.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, k) in &self.factors {
            let len = divs.len();
            let mut pk = 1u64;
            for _ in 0..k {
                pk *= p;
                for i in 0..len {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        divs
    }
}

/// Factors `n` with the default effort bound.
pub fn factorize(n: u64) -> Result<PrimeFactorization> {
    factorize_with(n, &FactorConfig::default())
}

pub fn factorize_with(n: u64, config: &FactorConfig) -> Result<PrimeFactorization> {
    if n == 0 {
        return Err(Error::NonPositive(BigInt::zero()));
    }
    let mut primes = Vec::new();
    let mut rest = n;
    for &p in small_primes() {
        if p * p > rest {
            break;
        }
        while rest.is_multiple_of(p) {
            rest /= p;
            primes.push(p);
        }
    }
    if rest > 1 {
        split_u64(rest, config, &mut primes)?;
    }
    primes.sort_unstable();
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, k)) if *q == p => *k += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(PrimeFactorization { factors })
}

fn split_u64(n: u64, config: &FactorConfig, out: &mut Vec<u64>) -> Result<()> {
    if n == 1 {
        return Ok(());
    }
    if is_prime(n) {
        out.push(n);
        return Ok(());
    }
    let d = (1..=config.rho_attempts as u64)
        .find_map(|c| brent_rho_u64(n, c, config.rho_iterations))
        .ok_or_else(|| Error::EffortExceeded(BigUint::from(n)))?;
    split_u64(d, config, out)?;
    split_u64(n / d, config, out)
}

/// Brent's cycle-finding rho on `x^2 + c`; returns a proper divisor or `None`.
fn brent_rho_u64(n: u64, c: u64, max_iterations: u64) -> Option<u64> {
    if n.is_multiple_of(2) {
        return Some(2);
    }
    const BATCH: u64 = 128;
    let f = |x: u64| (mul_mod(x, x, n) + c) % n;
    let mut y = 2u64;
    let mut r = 1u64;
    let mut q = 1u64;
    let mut x;
    let mut ys;
    let mut spent = 0u64;
    loop {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        loop {
            ys = y;
            let steps = BATCH.min(r - k);
            for _ in 0..steps {
                y = f(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            spent += steps;
            let g = q.gcd(&n);
            k += steps;
            if g != 1 {
                if g != n {
                    return Some(g);
                }
                // Batch overshot; replay one step at a time.
                loop {
                    ys = f(ys);
                    let g = x.abs_diff(ys).gcd(&n);
                    if g != 1 {
                        return (g != n).then_some(g);
                    }
                }
            }
            if k >= r {
                break;
            }
        }
        r *= 2;
        if spent > max_iterations {
            return None;
        }
    }
}

/// Factors a big integer into `(prime, exponent)` pairs, ascending.
///
/// Cofactors above 2^64 are split by rho over big integers; primality above
/// 3.3 * 10^24 is probabilistic (see [`is_probable_prime_big`]).
pub fn factorize_big(n: &BigUint, config: &FactorConfig) -> Result<Vec<(BigUint, u32)>> {
    if n.is_zero() {
        return Err(Error::NonPositive(BigInt::zero()));
    }
    if let Some(small) = n.to_u64() {
        return Ok(factorize_with(small, config)?
            .iter()
            .map(|(p, k)| (BigUint::from(p), k))
            .collect());
    }
    let mut primes: Vec<BigUint> = Vec::new();
    let mut rest = n.clone();
    for &p in small_primes() {
        while (&rest % p).is_zero() {
            rest /= p;
            primes.push(BigUint::from(p));
        }
    }
    split_big(rest, config, &mut primes)?;
    primes.sort();
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, k)) if *q == p => *k += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(factors)
}

fn split_big(n: BigUint, config: &FactorConfig, out: &mut Vec<BigUint>) -> Result<()> {
    if n.is_one() {
        return Ok(());
    }
    if let Some(small) = n.to_u64() {
        let mut tmp = Vec::new();
        split_u64(small, config, &mut tmp)?;
        out.extend(tmp.into_iter().map(BigUint::from));
        return Ok(());
    }
    if is_probable_prime_big(&n) {
        out.push(n);
        return Ok(());
    }
    let d = (1..=config.rho_attempts as u64)
        .find_map(|c| brent_rho_big(&n, c, config.rho_iterations))
        .ok_or_else(|| Error::EffortExceeded(n.clone()))?;
    let other = &n / &d;
    split_big(d, config, out)?;
    split_big(other, config, out)
}

fn brent_rho_big(n: &BigUint, c: u64, max_iterations: u64) -> Option<BigUint> {
    const BATCH: u64 = 64;
    let c = BigUint::from(c);
    let f = |x: &BigUint| (x * x + &c) % n;
    let diff = |x: &BigUint, y: &BigUint| if x > y { x - y } else { y - x };
    let mut y = BigUint::from(2u32);
    let mut r = 1u64;
    let mut q = BigUint::one();
    let mut spent = 0u64;
    loop {
        let x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r {
            let mut ys = y.clone();
            let steps = BATCH.min(r - k);
            for _ in 0..steps {
                y = f(&y);
                q = (&q * diff(&x, &y)) % n;
            }
            spent += steps;
            k += steps;
            let g = q.gcd(n);
            if !g.is_one() {
                if &g != n {
                    return Some(g);
                }
                loop {
                    ys = f(&ys);
                    let g = diff(&x, &ys).gcd(n);
                    if !g.is_one() {
                        return (&g != n).then_some(g);
                    }
                }
            }
        }
        r *= 2;
        if spent > max_iterations {
            return None;
        }
    }
}

/// Möbius function.
pub fn mobius(n: u64) -> Result<i8> {
    let f = factorize(n)?;
    if f.iter().any(|(_, k)| k > 1) {
        return Ok(0);
    }
    Ok(if f.factors().len() % 2 == 0 { 1 } else { -1 })
}

/// Largest `e` with `p^e | n`.
pub fn v_int(n: &BigInt, p: u64) -> Result<u32> {
    if n.is_zero() {
        return Err(Error::ZeroValuation);
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Ok(n.trailing_zeros().unwrap_or(0) as u32);
    }
    let mut m = n.magnitude().clone();
    let mut e = 0;
    loop {
        let (q, r) = m.div_rem(&BigUint::from(p));
        if !r.is_zero() {
            return Ok(e);
        }
        m = q;
        e += 1;
    }
}

/// Valuation of a nonzero machine integer; `p` must be prime.
pub fn v_u64(mut n: u64, p: u64) -> u32 {
    debug_assert!(n != 0);
    let mut e = 0;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    e
}
