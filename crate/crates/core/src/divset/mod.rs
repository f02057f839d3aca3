//! The sets `R^(j)(a, b) = { n >= 1 : n^j | a^n - b^n }` for coprime `a`, `b`.
//!
//! Membership is decided per prime from the valuation engine. Enumeration
//! grows the set from `1` by multiplying members with admissible primes (the
//! extension set of each member), which only needs primes up to `bound / n`
//! and never a factorization of `a^n - b^n`.

mod certificate;
mod tree;

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{self, modpow_signed, primes_up_to};
use crate::error::{Error, Result};
use crate::valuation::{e2_lcm, power_diff_valuation, CoprimePair};

pub use certificate::{certify, Certificate, CertificateStep, CertifyOutcome};
pub use tree::{EnumTree, TreeEdge};

/// The triple `(a, b, j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub a: BigInt,
    pub b: BigInt,
    pub j: u32,
}

impl Instance {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, j: u32) -> Result<Self> {
        if j == 0 {
            return Err(Error::ZeroExponent);
        }
        Ok(Self {
            a: a.into(),
            b: b.into(),
            j,
        })
    }

    pub fn gcd(&self) -> BigInt {
        self.a.gcd(&self.b)
    }

    /// `a = b` or `a = -b`.
    pub fn is_degenerate(&self) -> bool {
        self.a == self.b || self.a == -&self.b
    }

    /// Whether the pair would have to be swapped or negated to satisfy
    /// `a > 0, a > b`.
    pub fn needs_normalization(&self) -> bool {
        !(self.a > BigInt::from(0) && self.a > self.b)
    }

    pub fn pair(&self) -> Result<CoprimePair> {
        CoprimePair::new(self.a.clone(), self.b.clone())
    }

    fn require_coprime(&self) -> Result<()> {
        let g = self.gcd();
        if g.is_one() {
            Ok(())
        } else {
            Err(Error::NotCoprime(g))
        }
    }
}

/// `n^j | a^n - b^n` by modular exponentiation modulo `n^j`. Valid for any
/// pair, coprime or not.
pub fn member_direct(a: &BigInt, b: &BigInt, j: u32, n: u64) -> bool {
    let modulus: BigUint = BigUint::from(n).pow(j);
    modpow_signed(a, n, &modulus) == modpow_signed(b, n, &modulus)
}

/// Membership from the per-prime valuations: `j * v_p(n) <= v_p(a^n - b^n)`
/// for every prime `p | n`.
pub fn member_by_valuation(pair: &CoprimePair, j: u32, n: u64) -> Result<bool> {
    for (p, k) in arith::factorize(n)?.iter() {
        if power_diff_valuation(pair, n, p)? < j * k {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `n^j` divides `a^n - b^n`; requires `gcd(a, b) = 1`.
pub fn member(inst: &Instance, n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::NonPositive(BigInt::from(0)));
    }
    inst.require_coprime()?;
    if inst.is_degenerate() {
        return Ok(member_direct(&inst.a, &inst.b, inst.j, n));
    }
    let by_valuation = member_by_valuation(&inst.pair()?, inst.j, n)?;
    debug_assert_eq!(
        by_valuation,
        member_direct(&inst.a, &inst.b, inst.j, n),
        "membership routes disagree at n = {n}"
    );
    Ok(by_valuation)
}

/// Largest admissible exponent of a prime in an extension set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KMax {
    Bounded(u32),
    Unbounded,
}

impl KMax {
    pub fn allows(self, k: u32) -> bool {
        match self {
            KMax::Bounded(max) => k <= max,
            KMax::Unbounded => true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Extension {
    pub p: u64,
    /// `v_p(a^n - b^n)`, or `v_2(lcm(a^n - b^n, a^n + b^n))` for `p = 2`.
    pub e_p: u32,
    pub k_max: KMax,
}

/// Prime powers `p^k` with `n * p^k` still a member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionSet {
    pub n: u64,
    pub entries: Vec<Extension>,
}

impl ExtensionSet {
    /// All `(p, k)` with `p^k` admissible and `n * p^k <= limit`.
    pub fn prime_powers(&self, limit: u64) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        for e in &self.entries {
            let mut k = 1;
            let mut m = self.n.checked_mul(e.p);
            while let Some(v) = m {
                if v > limit || !e.k_max.allows(k) {
                    break;
                }
                out.push((e.p, k));
                k += 1;
                m = v.checked_mul(e.p);
            }
        }
        out
    }
}

fn extension_at(pair: &CoprimePair, j: u32, n: u64, p: u64) -> Result<Option<Extension>> {
    let e_p = if p == 2 {
        e2_lcm(pair, n)?
    } else {
        if !pair.divides_power_diff(n, p) {
            return Ok(None);
        }
        power_diff_valuation(pair, n, p)?
    };
    if e_p == 0 {
        return Ok(None);
    }
    if j == 1 {
        return Ok(Some(Extension {
            p,
            e_p,
            k_max: KMax::Unbounded,
        }));
    }
    let k_p = if n.is_multiple_of(p) { arith::v_u64(n, p) } else { 0 };
    let k_max = e_p.saturating_sub(j * k_p) / (j - 1);
    Ok((k_max >= 1).then_some(Extension {
        p,
        e_p,
        k_max: KMax::Bounded(k_max),
    }))
}

const PARALLEL_SCAN_THRESHOLD: usize = 4096;

fn scan_extensions(pair: &CoprimePair, j: u32, n: u64, primes: &[u64]) -> Result<Vec<Extension>> {
    let found: Result<Vec<Option<Extension>>> = if primes.len() >= PARALLEL_SCAN_THRESHOLD {
        primes
            .par_iter()
            .map(|&p| extension_at(pair, j, n, p))
            .collect()
    } else {
        primes.iter().map(|&p| extension_at(pair, j, n, p)).collect()
    };
    Ok(found?.into_iter().flatten().collect())
}

/// The extension set of the member `n`, restricted to primes `<= prime_bound`.
pub fn extensions(inst: &Instance, n: u64, prime_bound: u64) -> Result<ExtensionSet> {
    if prime_bound < 2 {
        return Err(Error::InvalidArgument(format!(
            "prime bound must be at least 2, got {prime_bound}"
        )));
    }
    if !member(inst, n)? {
        return Err(Error::NotMember(n));
    }
    let pair = inst.pair()?;
    let primes = primes_up_to(prime_bound);
    Ok(ExtensionSet {
        n,
        entries: scan_extensions(&pair, inst.j, n, &primes)?,
    })
}

/// `n` divided by its largest prime factor; `None` for `n = 1`.
pub fn parent(n: u64) -> Result<Option<u64>> {
    if n == 0 {
        return Err(Error::NonPositive(BigInt::from(0)));
    }
    Ok(arith::factorize(n)?.largest_prime().map(|p| n / p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumOptions {
    pub bound: u64,
    /// Stop after this many members (the smallest ones); the result is then
    /// flagged incomplete.
    pub max_members: Option<usize>,
}

impl EnumOptions {
    pub fn bound(bound: u64) -> Self {
        Self {
            bound,
            max_members: None,
        }
    }
}

/// Members up to a bound, with the element graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub bound: u64,
    /// Ascending.
    pub members: Vec<u64>,
    pub tree: EnumTree,
    /// `true` when `members` is exactly the set of members `<= bound`.
    pub complete: bool,
    pub incomplete_reason: Option<String>,
}

pub fn enumerate(inst: &Instance, bound: u64) -> Result<Enumeration> {
    enumerate_with(inst, &EnumOptions::bound(bound))
}

pub fn enumerate_with(inst: &Instance, opts: &EnumOptions) -> Result<Enumeration> {
    let bound = opts.bound;
    if bound == 0 {
        return Err(Error::InvalidArgument("bound must be at least 1".into()));
    }
    inst.require_coprime()?;
    if inst.a == inst.b {
        return Err(Error::EveryIntegerIsMember);
    }
    if inst.is_degenerate() {
        // a = -b = ±1: a direct scan is the only option.
        let mut members = brute_enumerate(inst, bound);
        let mut reason = None;
        if let Some(max) = opts.max_members {
            if members.len() > max {
                members.truncate(max);
                reason = Some(format!("stopped after {max} members"));
            }
        }
        let (tree, tree_err) = EnumTree::from_members(&members);
        let reason = reason.or(tree_err);
        return Ok(Enumeration {
            bound,
            tree,
            members,
            complete: reason.is_none(),
            incomplete_reason: reason,
        });
    }

    let pair = inst.pair()?;
    let primes = primes_up_to(bound);
    let mut visited: HashSet<u64> = HashSet::from([1]);
    let mut queue = BinaryHeap::from([Reverse(1u64)]);
    let mut members = Vec::new();
    let mut reason = None;
    while let Some(Reverse(n)) = queue.pop() {
        if opts.max_members.is_some_and(|max| members.len() >= max) {
            reason = Some(format!("stopped after {} members", members.len()));
            break;
        }
        members.push(n);
        let limit = bound / n;
        let candidates = &primes[..primes.partition_point(|&p| p <= limit)];
        match scan_extensions(&pair, inst.j, n, candidates) {
            Ok(found) => {
                for ext in found {
                    let child = n * ext.p;
                    if visited.insert(child) {
                        queue.push(Reverse(child));
                    }
                }
            }
            Err(e) => {
                reason.get_or_insert_with(|| format!("extensions of {n}: {e}"));
            }
        }
    }
    let (tree, tree_err) = EnumTree::from_members(&members);
    let reason = reason.or(tree_err);
    Ok(Enumeration {
        bound,
        members,
        tree,
        complete: reason.is_none(),
        incomplete_reason: reason,
    })
}

/// Every `n <= bound` tested directly. Test oracle for [`enumerate`].
pub fn brute_enumerate(inst: &Instance, bound: u64) -> Vec<u64> {
    (1..=bound)
        .into_par_iter()
        .filter(|&n| member_direct(&inst.a, &inst.b, inst.j, n))
        .collect()
}
