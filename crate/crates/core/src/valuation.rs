//! Multiplicative orders of `a/b` modulo primes and exact valuations
//! `v_p(a^n - b^n)`, obtained by lifting instead of forming `a^n - b^n`.
//!
//! For an odd prime `p` not dividing `ab`, let `d` be the order of `a/b`
//! modulo `p` and `t = v_p(a^d - b^d)`. Then `p | a^n - b^n` exactly when
//! `d | n`, and in that case `v_p(a^n - b^n) = t + v_p(n)`. For `p = 2` and
//! `a`, `b` odd, `v_2(a^n - b^n)` is `v_2(a - b)` for odd `n` and
//! `v_2(a - b) + v_2(a + b) - 1 + v_2(n)` for even `n`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{self, is_prime, modpow_signed, pow_mod};
use crate::error::{Error, Result};

/// A pair `(a, b)` with `gcd(a, b) = 1` and `a != ±b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoprimePair {
    a: BigInt,
    b: BigInt,
    small: Option<(i128, i128)>,
}

impl CoprimePair {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<Self> {
        let (a, b) = (a.into(), b.into());
        let g = a.gcd(&b);
        if !g.is_one() {
            return Err(Error::NotCoprime(g));
        }
        if a == b || a == -&b {
            return Err(Error::Degenerate { a, b });
        }
        let small = a.to_i128().zip(b.to_i128());
        Ok(Self { a, b, small })
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    /// `(a mod m, b mod m)` as least non-negative residues.
    pub fn residues(&self, m: u64) -> (u64, u64) {
        match self.small {
            Some((a, b)) => (
                a.rem_euclid(m as i128) as u64,
                b.rem_euclid(m as i128) as u64,
            ),
            None => (arith::residue(&self.a, m), arith::residue(&self.b, m)),
        }
    }

    /// Whether `p | a^n - b^n`, for any modulus `p >= 1`.
    pub fn divides_power_diff(&self, n: u64, p: u64) -> bool {
        let (ra, rb) = self.residues(p);
        pow_mod(ra, n, p) == pow_mod(rb, n, p)
    }

    fn v2_diff(&self) -> u32 {
        (&self.a - &self.b).trailing_zeros().unwrap_or(0) as u32
    }

    fn v2_sum(&self) -> u32 {
        (&self.a + &self.b).trailing_zeros().unwrap_or(0) as u32
    }
}

/// Order data of `a/b` at a prime `p` not dividing `ab`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RatioOrder {
    pub p: u64,
    /// Least `d >= 1` with `a^d ≡ b^d (mod p)`.
    pub d: u64,
    /// `p^t` exactly divides `a^d - b^d` (for `p = 2`, `lcm(a - b, a + b)`).
    pub t: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderOutcome {
    /// `p` divides `a` or `b`, so `p` never divides `a^n - b^n`.
    DividesAb,
    Order(RatioOrder),
}

impl OrderOutcome {
    pub fn order(self) -> Option<RatioOrder> {
        match self {
            OrderOutcome::DividesAb => None,
            OrderOutcome::Order(o) => Some(o),
        }
    }
}

/// Per-prime valuation record for a given `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValuationProfile {
    pub p: u64,
    /// `v_p(a^n - b^n)`.
    pub e_p: u32,
    /// `v_p(n)`.
    pub k_p: u32,
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Order of `a/b` modulo `p` and the lifting exponent `t`.
pub fn ratio_order(pair: &CoprimePair, p: u64) -> Result<OrderOutcome> {
    check_prime(p)?;
    let (ra, rb) = pair.residues(p);
    if ra == 0 || rb == 0 {
        return Ok(OrderOutcome::DividesAb);
    }
    if p == 2 {
        let t = pair.v2_diff() + pair.v2_sum() - 1;
        return Ok(OrderOutcome::Order(RatioOrder { p, d: 1, t }));
    }
    let x = arith::mul_mod(ra, pow_mod(rb, p - 2, p), p);
    let mut d = p - 1;
    for q in arith::factorize(p - 1)?.primes() {
        while d.is_multiple_of(q) && pow_mod(x, d / q, p) == 1 {
            d /= q;
        }
    }
    let t = lifting_exponent(pair, d, p);
    Ok(OrderOutcome::Order(RatioOrder { p, d, t }))
}

/// Largest `s` with `a^d ≡ b^d (mod p^s)`, found by raising the modulus.
fn lifting_exponent(pair: &CoprimePair, d: u64, p: u64) -> u32 {
    // |a^d - b^d| < 2 * max(|a|, |b|)^d, so p^s cannot divide it once s
    // exceeds this bound.
    let bits = pair.a.abs().max(pair.b.abs()).bits() as f64;
    let cap = ((d as f64 * bits + 1.0) / (p as f64).log2()).ceil() as u32 + 1;
    let p_big = BigUint::from(p);
    let mut modulus = &p_big * &p_big;
    let mut s = 1;
    while s < cap {
        if modpow_signed(&pair.a, d, &modulus) != modpow_signed(&pair.b, d, &modulus) {
            return s;
        }
        s += 1;
        modulus *= &p_big;
    }
    unreachable!("a^d = b^d with a != ±b")
}

/// Exact `v_p(a^n - b^n)`.
pub fn power_diff_valuation(pair: &CoprimePair, n: u64, p: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::NonPositive(BigInt::zero()));
    }
    check_prime(p)?;
    if p == 2 {
        let v_diff = pair.v2_diff();
        return Ok(if v_diff == 0 {
            0
        } else if n % 2 == 1 {
            v_diff
        } else {
            v_diff + pair.v2_sum() - 1 + n.trailing_zeros()
        });
    }
    if !pair.divides_power_diff(n, p) {
        return Ok(0);
    }
    let order = ratio_order(pair, p)?
        .order()
        .expect("p divides a^n - b^n, so p does not divide ab");
    debug_assert_eq!(n % order.d, 0);
    Ok(order.t + arith::v_u64(n, p))
}

/// `v_2(lcm(a^n - b^n, a^n + b^n))`; zero when `a - b` is odd.
pub fn e2_lcm(pair: &CoprimePair, n: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::NonPositive(BigInt::zero()));
    }
    let v_diff = pair.v2_diff();
    if v_diff == 0 {
        return Ok(0);
    }
    Ok(if n % 2 == 1 {
        v_diff.max(pair.v2_sum())
    } else {
        v_diff + pair.v2_sum() - 1 + n.trailing_zeros()
    })
}

/// Valuation record of `a^n - b^n` and `n` at `p`.
pub fn profile(pair: &CoprimePair, n: u64, p: u64) -> Result<ValuationProfile> {
    Ok(ValuationProfile {
        p,
        e_p: power_diff_valuation(pair, n, p)?,
        k_p: if n.is_multiple_of(p) { arith::v_u64(n, p) } else { 0 },
    })
}
