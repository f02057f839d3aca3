//! Factorization-chain certificates.
//!
//! Writing `n = p_1^k_1 ... p_r^k_r` with ascending primes and
//! `n_i = p_1^k_1 ... p_{i-1}^k_{i-1}` (so `n_1 = 1`), `n` is a member exactly
//! when every step satisfies:
//!
//! * `j = 1`: `p_i | a^{n_i} - b^{n_i}`;
//! * `j >= 2`: `p_i^{(j-1) k_i} | a^{n_i} - b^{n_i}`, where for `p_1 = 2` the
//!   first step uses `lcm(a - b, a + b)` instead of `a - b`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use serde::Serialize;

use super::Instance;
use crate::arith::{self, modpow_signed, residue_big};
use crate::error::{Error, Result};
use crate::valuation::{e2_lcm, power_diff_valuation, CoprimePair};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateStep {
    pub p: u64,
    pub k: u32,
    pub n_i: u64,
    /// The step needs `p^required_exponent` to divide its witness.
    pub required_exponent: u32,
    pub witnessed_valuation: u32,
}

impl CertificateStep {
    pub fn holds(&self) -> bool {
        self.witnessed_valuation >= self.required_exponent
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub n: u64,
    pub j: u32,
    pub chain: Vec<CertificateStep>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CertifyOutcome {
    Member(Certificate),
    /// The first step of the chain that fails.
    NonMember(CertificateStep),
}

fn required_exponent(j: u32, k: u32) -> u32 {
    if j == 1 {
        1
    } else {
        (j - 1) * k
    }
}

fn uses_lcm(j: u32, index: usize, p: u64) -> bool {
    j >= 2 && index == 0 && p == 2
}

pub fn certify(inst: &Instance, n: u64) -> Result<CertifyOutcome> {
    if n == 0 {
        return Err(Error::NonPositive(BigInt::from(0)));
    }
    let pair: CoprimePair = inst.pair()?;
    let mut chain = Vec::new();
    let mut n_i = 1u64;
    for (index, (p, k)) in arith::factorize(n)?.iter().enumerate() {
        let witnessed_valuation = if uses_lcm(inst.j, index, p) {
            e2_lcm(&pair, 1)?
        } else {
            power_diff_valuation(&pair, n_i, p)?
        };
        let step = CertificateStep {
            p,
            k,
            n_i,
            required_exponent: required_exponent(inst.j, k),
            witnessed_valuation,
        };
        if !step.holds() {
            return Ok(CertifyOutcome::NonMember(step));
        }
        chain.push(step);
        n_i *= p.pow(k);
    }
    Ok(CertifyOutcome::Member(Certificate { n, j: inst.j, chain }))
}

impl Certificate {
    /// Re-checks the chain structure and every divisibility by direct modular
    /// arithmetic, without the valuation engine.
    pub fn verify(&self, inst: &Instance) -> bool {
        if inst.j != self.j || !inst.gcd().is_one() {
            return false;
        }
        let mut expected_n_i = 1u64;
        let mut last_p = 0u64;
        for (index, step) in self.chain.iter().enumerate() {
            if step.p <= last_p
                || !arith::is_prime(step.p)
                || step.k == 0
                || step.n_i != expected_n_i
                || step.required_exponent != required_exponent(self.j, step.k)
                || !step.holds()
            {
                return false;
            }
            let modulus: BigUint = BigUint::from(step.p).pow(step.required_exponent);
            let divides = if uses_lcm(self.j, index, step.p) {
                let lcm = (&inst.a - &inst.b).lcm(&(&inst.a + &inst.b));
                residue_big(&lcm, &modulus).is_zero()
            } else {
                modpow_signed(&inst.a, step.n_i, &modulus)
                    == modpow_signed(&inst.b, step.n_i, &modulus)
            };
            if !divides {
                return false;
            }
            let Some(next) = step.p.checked_pow(step.k).and_then(|pk| expected_n_i.checked_mul(pk)) else {
                return false;
            };
            expected_n_i = next;
            last_p = step.p;
        }
        expected_n_i == self.n
    }
}
