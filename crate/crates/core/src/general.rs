//! Arbitrary pairs: `b = 0`, `gcd(a, b) > 1`, and the plus-sets
//! `R^(j)+(a, b) = { n : n^j | a^n + b^n }`.
//!
//! With `g = gcd(a, b)`, `a = g a1`, `b = g b1` and `n = G n1` where every
//! prime of `G` divides `g` and `gcd(n1, g) = 1`, the primes of `n1` see only
//! `(a1^G)^n1 - (b1^G)^n1`. So each member is `G n1` with `n1` a member of
//! the coprime set for `(a1^G, b1^G)`, and only finitely many such products
//! fail at the primes of `G`. Candidates are generated that way and then
//! checked one by one.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arith::{self, factorize_big, modpow_signed, v_int, FactorConfig};
use crate::classify::{Classification, Clause, Verdict};
use crate::divset::{self, member_direct, Instance};
use crate::error::{Error, Result};
use crate::valuation::{power_diff_valuation, CoprimePair};

/// `a^G` with more bits than this is not built; the inner set is scanned
/// with [`member_general`] instead.
const MAX_POWER_BITS: u64 = 1 << 16;

/// Whether every prime factor of `n` divides `a`.
pub fn in_fa(n: u64, a: &BigInt) -> bool {
    let mut n = n;
    while n > 1 {
        let d = n.gcd(&arith::residue(a, n));
        if d == 1 {
            return false;
        }
        while n.is_multiple_of(d) {
            n /= d;
        }
    }
    true
}

/// Least `K >= 1` with `K * j <= m * p^K`, where `p` is the smallest prime of
/// `a` and `m` the smallest exponent in its factorization. Exponent tuples
/// of total weight at least `K` can never break `n^j | a^n`.
pub fn k_constant(a: u64, j: u32) -> Result<u32> {
    let f = arith::factorize(a)?;
    let Some(&(p, _)) = f.factors().first() else {
        return Err(Error::InvalidArgument("a must be at least 2".into()));
    };
    let m = f.iter().map(|(_, e)| e).min().expect("a >= 2") as u128;
    let mut k = 1u32;
    loop {
        let power = (p as u128).checked_pow(k).unwrap_or(u128::MAX);
        if (k as u128) * (j as u128) <= m.saturating_mul(power) {
            return Ok(k);
        }
        k += 1;
    }
}

fn smooth_numbers(primes: &[u64], bound: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for &p in primes.iter().filter(|&&p| p <= bound) {
        let mut next = Vec::new();
        for &n in &out {
            let mut m = n;
            while let Some(x) = m.checked_mul(p).filter(|&x| x <= bound) {
                next.push(x);
                m = x;
            }
        }
        out.extend(next);
    }
    out.sort_unstable();
    out
}

/// The members of `F_a` that are not in `R^(j)(a, 0)`. Empty for `j <= 2`.
pub fn a0_exceptions(a: u64, j: u32) -> Result<Vec<u64>> {
    let f = arith::factorize(a)?;
    if f.is_empty() {
        return Err(Error::InvalidArgument("a must be at least 2".into()));
    }
    if j <= 2 {
        return Ok(Vec::new());
    }
    let k = k_constant(a, j)?;
    let factors = f.factors().to_vec();
    let mut out = Vec::new();
    let mut exps = vec![0u32; factors.len()];
    loop {
        let weight: u32 = exps.iter().sum();
        if weight < k {
            let n = factors
                .iter()
                .zip(&exps)
                .try_fold(1u128, |acc, (&(p, _), &e)| acc.checked_mul((p as u128).checked_pow(e)?));
            // An overflowing n is far too large to fail.
            if let Some(n) = n {
                let fails = factors
                    .iter()
                    .zip(&exps)
                    .any(|(&(_, ai), &ki)| (j as u128) * (ki as u128) > (ai as u128).saturating_mul(n));
                if fails {
                    out.push(u64::try_from(n).expect("exceptions are small"));
                }
            }
        }
        // Odometer over tuples of total weight < k.
        let mut i = 0;
        loop {
            if i == exps.len() {
                out.sort_unstable();
                return Ok(out);
            }
            exps[i] += 1;
            if exps.iter().sum::<u32>() < k {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// `R^(j)(a, 0) ∩ [1, bound]`: the `a`-smooth numbers, minus
/// [`a0_exceptions`] when `j >= 3`.
pub fn enumerate_a0(a: u64, j: u32, bound: u64) -> Result<Vec<u64>> {
    if j == 0 {
        return Err(Error::ZeroExponent);
    }
    let f = arith::factorize(a)?;
    if f.is_empty() {
        return Err(Error::InvalidArgument("a must be at least 2".into()));
    }
    let primes: Vec<u64> = f.primes().collect();
    let exceptions = a0_exceptions(a, j)?;
    Ok(smooth_numbers(&primes, bound)
        .into_iter()
        .filter(|n| exceptions.binary_search(n).is_err())
        .collect())
}

/// `a = g a1`, `b = g b1` with `g = gcd(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdSplit {
    pub g: BigUint,
    pub a1: BigInt,
    pub b1: BigInt,
}

impl GcdSplit {
    pub fn new(a: &BigInt, b: &BigInt) -> Result<Self> {
        let g = a.gcd(b);
        if g.is_zero() {
            return Err(Error::Degenerate {
                a: a.clone(),
                b: b.clone(),
            });
        }
        Ok(Self {
            a1: a / &g,
            b1: b / &g,
            g: g.into_parts().1,
        })
    }

    /// `n = G * n1` with the primes of `G` dividing `g` and `gcd(n1, g) = 1`.
    pub fn split(&self, n: u64) -> (u64, u64) {
        let mut n1 = n;
        loop {
            let d = n1.gcd(&(&self.g % n1).to_u64().unwrap_or(0));
            if d == 1 || n1 == 1 {
                return (n / n1, n1);
            }
            while n1.is_multiple_of(d) {
                n1 /= d;
            }
        }
    }
}

/// Whether `n^j | a^n - b^n` for any pair, from valuations:
/// `v_q(a^n - b^n) = n v_q(g) + v_q(a1^n - b1^n)`.
pub fn member_general(a: &BigInt, b: &BigInt, j: u32, n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::NonPositive(BigInt::zero()));
    }
    if a == b {
        return Ok(true);
    }
    let split = GcdSplit::new(a, b)?;
    let g = BigInt::from(split.g.clone());
    let (a1, b1) = (&split.a1, &split.b1);
    let pair = if a1.is_zero() || b1.is_zero() || *a1 == -b1 {
        None
    } else {
        Some(CoprimePair::new(a1.clone(), b1.clone())?)
    };
    for (q, k) in arith::factorize(n)?.iter() {
        let need = j as u128 * k as u128;
        let from_g = n as u128 * v_int(&g, q)? as u128;
        if from_g >= need {
            continue;
        }
        let reduced = match &pair {
            Some(pair) => power_diff_valuation(pair, n, q)?,
            // a1 = -b1 = ±1: zero for even n, ±2 for odd n.
            None if *a1 == -b1 => {
                if n.is_multiple_of(2) {
                    continue;
                }
                u32::from(q == 2)
            }
            // One of a1, b1 is zero and the other a unit.
            None => 0,
        };
        if from_g + (reduced as u128) < need {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Members up to a bound for an arbitrary pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralEnumeration {
    pub bound: u64,
    /// Ascending.
    pub members: Vec<u64>,
    pub complete: bool,
    pub incomplete_reason: Option<String>,
}

impl GeneralEnumeration {
    fn exact(bound: u64, members: Vec<u64>) -> Self {
        Self {
            bound,
            members,
            complete: true,
            incomplete_reason: None,
        }
    }
}

fn scan(bound: u64, test: impl Fn(u64) -> Result<bool> + Sync) -> Result<Vec<u64>> {
    let hits: Result<Vec<Option<u64>>> = (1..=bound)
        .into_par_iter()
        .map(|n| Ok(test(n)?.then_some(n)))
        .collect();
    Ok(hits?.into_iter().flatten().collect())
}

/// `R^(j)(a, b) ∩ [1, bound]` for any pair with `a != b`.
pub fn enumerate_general(a: &BigInt, b: &BigInt, j: u32, bound: u64) -> Result<GeneralEnumeration> {
    if bound == 0 {
        return Err(Error::InvalidArgument("bound must be at least 1".into()));
    }
    let inst = Instance::new(a.clone(), b.clone(), j)?;
    if a == b {
        return Err(Error::EveryIntegerIsMember);
    }
    let split = GcdSplit::new(a, b)?;
    if split.g.is_one() {
        let e = divset::enumerate(&inst, bound)?;
        return Ok(GeneralEnumeration {
            bound,
            members: e.members,
            complete: e.complete,
            incomplete_reason: e.incomplete_reason,
        });
    }
    if *a == -b {
        // Every even n is a member; odd n need n^j | 2 a^n.
        let members = scan(bound, |n| Ok(member_direct(a, b, j, n)))?;
        return Ok(GeneralEnumeration::exact(bound, members));
    }

    let primes: Vec<u64> = factorize_big(&split.g, &FactorConfig::default())?
        .into_iter()
        .filter_map(|(p, _)| p.to_u64())
        .collect();
    let bits = split.a1.bits().max(split.b1.bits());
    let per_g: Vec<Result<(Vec<u64>, Option<String>)>> = smooth_numbers(&primes, bound)
        .into_par_iter()
        .map(|big_g| {
            let limit = bound / big_g;
            let coprime = |n1: u64| n1.gcd(&(&split.g % n1).to_u64().unwrap_or(0)) == 1;
            let (candidates, reason) = if bits.saturating_mul(big_g) > MAX_POWER_BITS {
                let c: Vec<u64> = (1..=limit).filter(|&n1| coprime(n1)).collect();
                (c, None)
            } else {
                let inner = Instance::new(
                    Pow::pow(&split.a1, big_g),
                    Pow::pow(&split.b1, big_g),
                    j,
                )?;
                let e = divset::enumerate(&inner, limit)?;
                (e.members, e.incomplete_reason)
            };
            let mut found = Vec::new();
            for n1 in candidates.into_iter().filter(|&n1| coprime(n1)) {
                if member_general(a, b, j, big_g * n1)? {
                    found.push(big_g * n1);
                }
            }
            Ok((found, reason))
        })
        .collect();
    let mut members = Vec::new();
    let mut reason = None;
    for r in per_g {
        let (found, why) = r?;
        members.extend(found);
        reason = reason.or(why);
    }
    members.sort_unstable();
    Ok(GeneralEnumeration {
        bound,
        members,
        complete: reason.is_none(),
        incomplete_reason: reason,
    })
}

/// `n^j | a^n + b^n`, tested directly modulo `n^j`.
pub fn plus_member(a: &BigInt, b: &BigInt, j: u32, n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::NonPositive(BigInt::zero()));
    }
    let m: BigUint = BigUint::from(n).pow(j);
    Ok(((modpow_signed(a, n, &m) + modpow_signed(b, n, &m)) % &m).is_zero())
}

/// Members of a plus-set up to a bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlusSet {
    pub bound: u64,
    /// Ascending.
    pub members: Vec<u64>,
    pub complete: bool,
    pub incomplete_reason: Option<String>,
    /// Finiteness verdict, for `j = 1, 2` only.
    pub classification: Option<Classification>,
}

fn is_one_or_power_of_two(x: &BigInt) -> bool {
    x.is_positive() && (x.magnitude() & (x.magnitude() - 1u32)).is_zero()
}

/// Finiteness of `R^(j)+(a, b)` for `j = 1, 2`; `None` for `j >= 3`.
pub fn classify_plus(a: &BigInt, b: &BigInt, j: u32) -> Result<Option<Classification>> {
    if j == 0 {
        return Err(Error::ZeroExponent);
    }
    if j >= 3 {
        return Ok(None);
    }
    let g = a.gcd(b);
    if g.is_zero() {
        return Err(Error::Degenerate {
            a: a.clone(),
            b: b.clone(),
        });
    }
    let done = |verdict, clause| {
        Ok(Some(Classification {
            verdict,
            clause,
            prime_support: None,
        }))
    };
    if !g.is_one() {
        return done(Verdict::Infinite, Clause::ContainsGSmooth);
    }
    let (a, b) = plus_normalize(a, b);
    let one = BigInt::one();
    let sum = &a + &b;
    match j {
        1 if a.is_one() && b.is_one() => done(Verdict::FiniteExplicit(vec![1, 2]), Clause::PlusOneOne),
        // Even members need a, b both odd, so a + b = 1 leaves only n = 1.
        1 if sum.is_one() => done(Verdict::SingletonOne, Clause::PlusSumIsOne),
        2 if a == BigInt::from(2) && b == one => {
            done(Verdict::FiniteExplicit(vec![1, 3]), Clause::PlusTwoOne)
        }
        2 if is_one_or_power_of_two(&sum) => done(Verdict::SingletonOne, Clause::PlusPowerOfTwo),
        _ => done(Verdict::Infinite, Clause::PlusInfinite),
    }
}

/// `a > 0`, `a >= |b|`, by swapping and/or negating both; neither changes
/// which `n^j` divide `a^n + b^n`.
fn plus_normalize(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    let (a, b) = if a.abs() >= b.abs() { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
    if a.is_negative() {
        (-a, -b)
    } else {
        (a, b)
    }
}

fn odd_members(a: BigInt, b: BigInt, j: u32, bound: u64) -> Result<(Vec<u64>, Option<String>)> {
    let e = divset::enumerate(&Instance::new(a, b, j)?, bound)?;
    let odd = e.members.into_iter().filter(|n| n % 2 == 1).collect();
    Ok((odd, e.incomplete_reason))
}

/// `R^(j)+(a, b) ∩ [1, bound]`. Every returned member is checked directly.
pub fn plus_set(a: &BigInt, b: &BigInt, j: u32, bound: u64) -> Result<PlusSet> {
    if bound == 0 {
        return Err(Error::InvalidArgument("bound must be at least 1".into()));
    }
    let classification = classify_plus(a, b, j)?;
    let (candidates, reason) = if a.abs() == b.abs() {
        ((1..=bound).collect(), None)
    } else if a.gcd(b).is_one() {
        // Odd members come from R(a, -b); for j = 1 also 2 n1 with n1 odd
        // in R(a^2, -b^2). Even n are impossible otherwise.
        let (mut c, mut why) = odd_members(a.clone(), -b, j, bound)?;
        if j == 1 {
            let (c2, why2) = odd_members(a * a, -(b * b), 1, bound / 2)?;
            c.extend(c2.into_iter().map(|n| 2 * n));
            why = why.or(why2);
        }
        (c, why)
    } else {
        // n^j | a^n + b^n forces n^j | (a^2)^n - (b^2)^n.
        let e = enumerate_general(&(a * a), &(b * b), j, bound)?;
        (e.members, e.incomplete_reason)
    };
    let mut members = candidates
        .into_par_iter()
        .map(|n| Ok(plus_member(a, b, j, n)?.then_some(n)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect::<Vec<_>>();
    members.sort_unstable();
    Ok(PlusSet {
        bound,
        members,
        complete: reason.is_none(),
        incomplete_reason: reason,
        classification,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn direct_scan(a: i64, b: i64, j: u32, bound: u64) -> Vec<u64> {
        (1..=bound).filter(|&n| member_direct(&big(a), &big(b), j, n)).collect()
    }

    fn plus_scan(a: i64, b: i64, j: u32, bound: u64) -> Vec<u64> {
        let (a, b) = (big(a), big(b));
        (1..=bound).filter(|&n| {
            let v: BigInt = Pow::pow(&a, n) + Pow::pow(&b, n);
            (v % BigInt::from(n).pow(j)).is_zero()
        })
        .collect()
    }

    #[test]
    fn in_fa_examples() {
        assert!(in_fa(12, &big(6)));
        assert!(in_fa(1, &big(10)));
        assert!(!in_fa(14, &big(10)));
        assert!(in_fa(1024, &big(-2)));
        assert!(!in_fa(3, &big(1)));
    }

    #[test]
    fn k_constant_examples() {
        assert_eq!(k_constant(2, 4).unwrap(), 4);
        assert_eq!(k_constant(2, 3).unwrap(), 4);
        assert_eq!(k_constant(9, 3).unwrap(), 1);
        assert!(k_constant(1, 3).is_err());
    }

    #[test]
    fn a0_examples() {
        assert_eq!(a0_exceptions(2, 4).unwrap(), vec![2, 4, 8]);
        assert_eq!(enumerate_a0(2, 4, 100).unwrap(), vec![1, 16, 32, 64]);
        assert_eq!(enumerate_a0(10, 2, 30).unwrap(), vec![1, 2, 4, 5, 8, 10, 16, 20, 25]);
        assert_eq!(enumerate_a0(6, 1, 12).unwrap(), vec![1, 2, 3, 4, 6, 8, 9, 12]);
    }

    #[test]
    fn a0_matches_direct_scan() {
        for a in 2..=30i64 {
            for j in 1..=6 {
                assert_eq!(
                    enumerate_a0(a as u64, j, 600).unwrap(),
                    direct_scan(a, 0, j, 600),
                    "a = {a}, j = {j}"
                );
            }
        }
    }

    #[test]
    fn a0_first_and_second_powers_agree() {
        for a in 2..=30 {
            assert_eq!(enumerate_a0(a, 1, 10_000).unwrap(), enumerate_a0(a, 2, 10_000).unwrap());
        }
    }

    #[test]
    fn split_examples() {
        let s = GcdSplit::new(&big(56), &big(2)).unwrap();
        assert_eq!((s.g.clone(), s.a1.clone(), s.b1.clone()), (BigUint::from(2u32), big(28), big(1)));
        assert_eq!(s.split(96), (32, 3));
        assert_eq!(s.split(15), (1, 15));
        assert!(GcdSplit::new(&big(0), &big(0)).is_err());
    }

    #[test]
    fn member_general_examples() {
        assert!(member_general(&big(56), &big(2), 4, 16).unwrap());
        assert!(!member_general(&big(56), &big(2), 4, 2).unwrap());
        assert!(member_general(&big(28), &big(1), 4, 3).unwrap());
        assert!(member_general(&big(5), &big(5), 9, 7).unwrap());
        assert!(member_general(&big(0), &big(7), 3, 49).unwrap());
        assert!(member_general(&big(1), &big(0), 1, 1).unwrap());
        assert!(matches!(member_general(&big(3), &big(1), 1, 0), Err(Error::NonPositive(_))));
    }

    #[test]
    fn member_general_matches_direct() {
        for a in -8..=8i64 {
            for b in -8..=8i64 {
                if a == 0 && b == 0 {
                    continue;
                }
                for j in 1..=3 {
                    for n in 1..=500 {
                        assert_eq!(
                            member_general(&big(a), &big(b), j, n).unwrap(),
                            member_direct(&big(a), &big(b), j, n),
                            "({a},{b}) j = {j} n = {n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn enumerate_general_examples() {
        let e = enumerate_general(&big(56), &big(2), 4, 100).unwrap();
        assert_eq!(e.members, vec![1, 3, 6, 12, 16, 24, 32, 48, 64, 96]);
        assert!(e.complete);
        let e = enumerate_general(&big(56), &big(2), 4, 1024).unwrap();
        assert_eq!(
            e.members,
            vec![1, 3, 6, 12, 16, 24, 32, 48, 64, 96, 128, 192, 256, 384, 512, 768, 1024]
        );
        assert_eq!(enumerate_general(&big(28), &big(1), 4, 10_000).unwrap().members, vec![1, 3]);
        assert_eq!(
            enumerate_general(&big(3), &big(1), 2, 300).unwrap().members,
            vec![1, 2, 4, 20, 220]
        );
        assert_eq!(
            enumerate_general(&big(4), &big(2), 1, 20).unwrap().members,
            direct_scan(4, 2, 1, 20)
        );
        assert!(matches!(
            enumerate_general(&big(6), &big(6), 1, 20),
            Err(Error::EveryIntegerIsMember)
        ));
    }

    #[test]
    fn enumerate_general_matches_direct() {
        for a in -9..=9i64 {
            for b in -9..=9i64 {
                if a == b {
                    continue;
                }
                for j in 1..=3 {
                    assert_eq!(
                        enumerate_general(&big(a), &big(b), j, 400).unwrap().members,
                        direct_scan(a, b, j, 400),
                        "({a},{b}) j = {j}"
                    );
                }
            }
        }
    }

    #[test]
    fn large_powers_fall_back_to_scanning() {
        // g = 2 so G runs up to 2^14; a1^G is never built for the big G.
        let (a, b) = (big(2 * 1_000_003), big(2 * 999_983));
        let e = enumerate_general(&a, &b, 2, 20_000).unwrap();
        for &n in &e.members {
            assert!(member_direct(&a, &b, 2, n));
        }
        assert!(e.members.contains(&16384));
        let small: Vec<u64> = e.members.iter().copied().filter(|&n| n <= 3000).collect();
        assert_eq!(small, (1..=3000).filter(|&n| member_direct(&a, &b, 2, n)).collect::<Vec<_>>());
    }

    #[test]
    fn g_smooth_part_is_contained() {
        for (a, b) in [(4, 2), (6, -3), (12, 18), (10, 0), (-20, 8)] {
            let g = big(a).gcd(&big(b));
            for j in 1..=4 {
                let all = enumerate_general(&big(a), &big(b), j, 2000).unwrap().members;
                for n in enumerate_general(&g, &big(0), j, 2000).unwrap().members {
                    assert!(all.binary_search(&n).is_ok(), "({a},{b}) j = {j} n = {n}");
                }
            }
        }
    }

    #[test]
    fn plus_examples() {
        let set = |a: i64, b: i64, j, bound| plus_set(&big(a), &big(b), j, bound).unwrap().members;
        assert_eq!(set(3, 2, 2, 100), vec![1, 5, 55]);
        assert_eq!(set(4, 3, 2, 3000), vec![1, 7, 2653]);
        assert_eq!(set(2, 1, 2, 100), vec![1, 3]);
        assert_eq!(set(1, 1, 1, 100), vec![1, 2]);
        assert_eq!(set(5, 1, 2, 30_000), vec![1, 3, 21, 609, 903, 2667, 9429, 26187]);
    }

    #[test]
    fn plus_classification() {
        let verdict = |a: i64, b: i64, j| classify_plus(&big(a), &big(b), j).unwrap().map(|c| c.verdict);
        assert_eq!(verdict(1, 1, 1), Some(Verdict::FiniteExplicit(vec![1, 2])));
        assert_eq!(verdict(1, 1, 2), Some(Verdict::SingletonOne));
        assert_eq!(verdict(2, 1, 2), Some(Verdict::FiniteExplicit(vec![1, 3])));
        assert_eq!(verdict(-1, -2, 2), Some(Verdict::FiniteExplicit(vec![1, 3])));
        assert_eq!(verdict(3, 1, 2), Some(Verdict::SingletonOne));
        assert_eq!(verdict(5, 3, 2), Some(Verdict::SingletonOne));
        // a + b = 4 but a^2 + b^2 = 10: 2 | 3^2 + 1.
        assert_eq!(verdict(3, 1, 1), Some(Verdict::Infinite));
        assert_eq!(verdict(1, 0, 1), Some(Verdict::SingletonOne));
        // a + b = 1 with a even: odd n reduce to R(12, 11) = {1}, even n
        // leave 12^n + 11^n odd.
        assert_eq!(verdict(-12, 11, 1), Some(Verdict::SingletonOne));
        assert_eq!(verdict(3, -2, 1), Some(Verdict::SingletonOne));
        assert_eq!(verdict(3, 2, 2), Some(Verdict::Infinite));
        assert_eq!(verdict(6, 4, 2), Some(Verdict::Infinite));
        assert_eq!(verdict(3, 2, 3), None);
    }

    #[test]
    fn plus_finite_verdicts_match_scan() {
        for a in -12..=12i64 {
            for b in -12..=12i64 {
                if big(a).gcd(&big(b)) != BigInt::one() {
                    continue;
                }
                for j in 1..=2 {
                    let scan = plus_scan(a, b, j, 3000);
                    match classify_plus(&big(a), &big(b), j).unwrap().unwrap().verdict {
                        Verdict::SingletonOne => assert_eq!(scan, vec![1], "({a},{b}) j = {j}"),
                        Verdict::FiniteExplicit(v) => assert_eq!(scan, v, "({a},{b}) j = {j}"),
                        _ => assert!(scan.len() > 1, "({a},{b}) j = {j}"),
                    }
                }
            }
        }
    }

    #[test]
    fn plus_set_matches_scan() {
        for a in -9..=9i64 {
            for b in -9..=9i64 {
                if a == 0 && b == 0 {
                    continue;
                }
                for j in 1..=3 {
                    let got = plus_set(&big(a), &big(b), j, 300).unwrap();
                    assert_eq!(got.members, plus_scan(a, b, j, 300), "({a},{b}) j = {j}");
                    if j >= 2 && a.gcd(&b) == 1 {
                        assert!(got.members.iter().all(|n| n % 2 == 1));
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn member_general_oracle(a in -400i64..400, b in -400i64..400, j in 1u32..4, n in 1u64..2000) {
            prop_assume!(a != 0 || b != 0);
            prop_assert_eq!(
                member_general(&big(a), &big(b), j, n).unwrap(),
                member_direct(&big(a), &big(b), j, n)
            );
        }

        #[test]
        fn plus_members_verify(a in -50i64..50, b in -50i64..50, j in 1u32..4) {
            prop_assume!(a != 0 || b != 0);
            let s = plus_set(&big(a), &big(b), j, 500).unwrap();
            for n in s.members {
                prop_assert!(plus_member(&big(a), &big(b), j, n).unwrap());
            }
        }
    }
}
