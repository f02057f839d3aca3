//! Finiteness of `R^(1)` and `R^(2)`, and primitive prime divisors of
//! `a^n - b^n`.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Pow, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{self, factorize_big, is_prime, mobius, modpow_signed, FactorConfig};
use crate::divset::{enumerate, Instance};
use crate::error::{Error, Result};

/// Bound used for the bounded enumeration attached to `j >= 3` verdicts.
pub const DEFAULT_CONJECTURE_BOUND: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Verdict {
    SingletonOne,
    FiniteExplicit(Vec<u64>),
    Infinite,
    /// Believed finite but unproven; only the members up to `bound` are known.
    ConjecturallyFinite {
        members: Vec<u64>,
        bound: u64,
        complete: bool,
    },
}

/// Which clause of the finiteness results decided the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Clause {
    /// `j = 1`, `a - b = ±1`: no prime can start a factorization chain.
    DifferenceIsUnit,
    /// `j = 1`: every power of a prime dividing `a - b` is a member.
    DifferenceHasPrime,
    /// `j = 2`, `a` and `b` consecutive.
    ConsecutiveIntegers,
    /// `j = 2`, `ab = -2`.
    ProductMinusTwo,
    /// `j = 2` otherwise: a member `>= 4` exists and primitive prime
    /// divisors extend it forever.
    PrimitiveDivisorChain,
    /// `gcd(a, b) = g > 1`: the set contains `R^(j)(g, 0)`, which is all of
    /// the `g`-smooth numbers up to finitely many exceptions.
    ContainsGSmooth,
    /// `j >= 3`, `gcd(a, b) = 1`: no verdict is known.
    HigherPowerConjecture,
    /// Plus-set `j = 2`: `a + b` is 1 or a power of 2.
    PlusPowerOfTwo,
    /// Plus-set `j = 1`: `a + b = 1`.
    PlusSumIsOne,
    /// Plus-set `j = 1`, `a = b = 1`.
    PlusOneOne,
    /// Plus-set `j = 2`, `{a, b} = {2, 1}`.
    PlusTwoOne,
    /// Plus-set otherwise infinite.
    PlusInfinite,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Clause::DifferenceIsUnit => "a - b = ±1",
            Clause::DifferenceHasPrime => "a - b has a prime factor p, so all p^k are members",
            Clause::ConsecutiveIntegers => "a and b are consecutive integers",
            Clause::ProductMinusTwo => "ab = -2",
            Clause::PrimitiveDivisorChain => "a member n >= 4 extends by primitive prime divisors",
            Clause::ContainsGSmooth => "gcd(a, b) > 1 and the set contains R(g, 0)",
            Clause::HigherPowerConjecture => "j >= 3 with gcd(a, b) = 1; finiteness is conjectural",
            Clause::PlusPowerOfTwo => "a + b is 1 or a power of 2",
            Clause::PlusSumIsOne => "a + b = 1",
            Clause::PlusOneOne => "a = b = 1",
            Clause::PlusTwoOne => "a = 2, b = 1",
            Clause::PlusInfinite => "none of the finite plus-set cases applies",
        };
        f.write_str(s)
    }
}

/// Set of primes dividing some member of `R^(2)(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimeSupport {
    Finite(Vec<BigUint>),
    Infinite,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    pub clause: Clause,
    /// Only reported for `j = 2`, and only when it is determined by the
    /// reduced pair: `gcd(a, b) = 1`, or one of `a`, `b` is zero.
    pub prime_support: Option<PrimeSupport>,
}

fn set_string(v: &[u64]) -> String {
    let items: Vec<String> = v.iter().map(u64::to_string).collect();
    format!("{{{}}}", items.join(","))
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.verdict {
            Verdict::SingletonOne => write!(f, "SingletonOne {{1}}")?,
            Verdict::FiniteExplicit(v) => write!(f, "FiniteExplicit {}", set_string(v))?,
            Verdict::Infinite => write!(f, "Infinite")?,
            Verdict::ConjecturallyFinite {
                members,
                bound,
                complete,
            } => write!(
                f,
                "ConjecturallyFinite {} up to {bound}{}",
                set_string(members),
                if *complete { "" } else { " (incomplete)" }
            )?,
        }
        write!(f, " (because {})", self.clause)
    }
}

/// `(a, b)` rearranged so that `a > 0` and `a > b`, by swapping and/or
/// negating both. The primes dividing `a^n - b^n` do not change.
pub fn normalize(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    let (mut a, mut b) = if a >= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    if (&a + &b).sign() == Sign::Minus {
        (a, b) = (-b, -a);
    }
    (a, b)
}

fn prime_divisors(n: &BigInt) -> Result<Vec<BigUint>> {
    Ok(factorize_big(n.magnitude(), &FactorConfig::default())?
        .into_iter()
        .map(|(p, _)| p)
        .collect())
}

pub fn classify(inst: &Instance) -> Result<Classification> {
    classify_with_bound(inst, DEFAULT_CONJECTURE_BOUND)
}

/// As [`classify`], with the bound for the `j >= 3` enumeration.
pub fn classify_with_bound(inst: &Instance, bound: u64) -> Result<Classification> {
    if inst.is_degenerate() {
        return Err(Error::Degenerate {
            a: inst.a.clone(),
            b: inst.b.clone(),
        });
    }
    let g = inst.gcd();
    let (a1, b1) = (&inst.a / &g, &inst.b / &g);
    let (a1, b1) = normalize(&a1, &b1);
    let diff_is_unit = (&a1 - &b1).is_one();
    let product_is_minus_two = &a1 * &b1 == BigInt::from(-2);

    // For g > 1 the reduced pairs (a1^G, b1^G) with G > 1 also contribute
    // primes (6 is in R^(2)(4, 2) although (2, 1) is consecutive), so a
    // finite support is only certain when g = 1 or b1 = 0 or a1 = 0.
    let support_known = g.is_one() || (&a1 * &b1).is_zero();
    let prime_support = (inst.j == 2 && support_known).then(|| -> Result<PrimeSupport> {
        Ok(if diff_is_unit {
            PrimeSupport::Finite(prime_divisors(&g)?)
        } else if product_is_minus_two {
            PrimeSupport::Finite(prime_divisors(&(&g * 3))?)
        } else {
            PrimeSupport::Infinite
        })
    });
    let prime_support = prime_support.transpose()?;

    let (verdict, clause) = if !g.is_one() {
        (Verdict::Infinite, Clause::ContainsGSmooth)
    } else {
        match inst.j {
            1 if diff_is_unit => (Verdict::SingletonOne, Clause::DifferenceIsUnit),
            1 => (Verdict::Infinite, Clause::DifferenceHasPrime),
            2 if diff_is_unit => (Verdict::SingletonOne, Clause::ConsecutiveIntegers),
            2 if product_is_minus_two => {
                (Verdict::FiniteExplicit(vec![1, 3]), Clause::ProductMinusTwo)
            }
            2 => (Verdict::Infinite, Clause::PrimitiveDivisorChain),
            _ => {
                let e = enumerate(inst, bound)?;
                (
                    Verdict::ConjecturallyFinite {
                        members: e.members,
                        bound,
                        complete: e.complete,
                    },
                    Clause::HigherPowerConjecture,
                )
            }
        }
    };
    Ok(Classification {
        verdict,
        clause,
        prime_support,
    })
}

/// The homogeneous cyclotomic value `Φ_n(a, b) = ∏_{d | n} (a^d - b^d)^{μ(n/d)}`.
pub fn cyclotomic_value(n: u64, a: &BigInt, b: &BigInt) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::NonPositive(BigInt::zero()));
    }
    let mut numerator = BigInt::one();
    let mut denominator = BigInt::one();
    for d in arith::factorize(n)?.divisors() {
        let mu = mobius(n / d)?;
        if mu == 0 {
            continue;
        }
        let term: BigInt = Pow::pow(a, d) - Pow::pow(b, d);
        if term.is_zero() {
            return Err(Error::Degenerate {
                a: a.clone(),
                b: b.clone(),
            });
        }
        if mu == 1 {
            numerator *= term;
        } else {
            denominator *= term;
        }
    }
    let (q, r) = numerator.div_rem(&denominator);
    assert!(r.is_zero(), "cyclotomic quotient is exact");
    Ok(q)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimitiveDivisor {
    /// `a^n - b^n` has no primitive prime divisor.
    None,
    /// The least primitive prime divisor.
    Prime(BigUint),
    /// Primitive divisors exist (they are exactly the primes of `cofactor`),
    /// but the least one was not isolated within the factorization effort.
    Unknown { cofactor: BigUint },
}

const PRIMITIVE_TRIAL_LIMIT: u64 = 1 << 20;

/// Least primitive prime divisor of `a^n - b^n`.
pub fn primitive_divisor(a: &BigInt, b: &BigInt, n: u64) -> Result<PrimitiveDivisor> {
    primitive_divisor_with(a, b, n, &FactorConfig::default())
}

pub fn primitive_divisor_with(
    a: &BigInt,
    b: &BigInt,
    n: u64,
    config: &FactorConfig,
) -> Result<PrimitiveDivisor> {
    let g = a.gcd(b);
    if !g.is_one() {
        return Err(Error::NotCoprime(g));
    }
    if a == b || *a == -b {
        return Err(Error::Degenerate {
            a: a.clone(),
            b: b.clone(),
        });
    }
    let (a, b) = normalize(a, b);
    let phi = cyclotomic_value(n, &a, &b)?;
    // A primitive prime has order exactly n, so it is 1 mod n and never
    // divides n. Everything left after removing the primes of n is primitive.
    let mut rest = phi.magnitude().clone();
    for q in arith::factorize(n)?.primes() {
        while (&rest % q).is_zero() {
            rest /= q;
        }
    }
    if rest.is_one() {
        return Ok(PrimitiveDivisor::None);
    }

    let sqrt = rest.sqrt();
    let limit = sqrt.to_u64().map_or(PRIMITIVE_TRIAL_LIMIT, |s| s.min(PRIMITIVE_TRIAL_LIMIT));
    let mut candidate = 1 + n;
    let mut least = None;
    while candidate <= limit {
        if is_prime(candidate) && (&rest % candidate).is_zero() {
            least = Some(BigUint::from(candidate));
            break;
        }
        candidate += n;
    }
    let least = match least {
        Some(p) => p,
        None if sqrt <= BigUint::from(limit) => rest.clone(),
        None => match factorize_big(&rest, config) {
            Ok(f) => f.into_iter().map(|(p, _)| p).min().expect("rest > 1"),
            Err(Error::EffortExceeded(_)) => {
                return Ok(PrimitiveDivisor::Unknown { cofactor: rest })
            }
            Err(e) => return Err(e),
        },
    };
    assert!(
        is_primitive(&a, &b, n, &least)?,
        "{least} should be a primitive divisor of a^{n} - b^{n}"
    );
    Ok(PrimitiveDivisor::Prime(least))
}

/// `p | a^n - b^n` and `p ∤ a^k - b^k` for every proper divisor `k` of `n`.
pub fn is_primitive(a: &BigInt, b: &BigInt, n: u64, p: &BigUint) -> Result<bool> {
    let divides = |k: u64| modpow_signed(a, k, p) == modpow_signed(b, k, p);
    if !divides(n) {
        return Ok(false);
    }
    Ok(arith::factorize(n)?
        .divisors()
        .into_iter()
        .filter(|&k| k < n)
        .all(|k| !divides(k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divset::brute_enumerate;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn classify_ab(a: i64, b: i64, j: u32) -> Classification {
        classify(&Instance::new(a, b, j).unwrap()).unwrap()
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_ab(2, 1, 2).verdict, Verdict::SingletonOne);
        assert_eq!(classify_ab(2, -1, 2).verdict, Verdict::FiniteExplicit(vec![1, 3]));
        assert_eq!(classify_ab(3, 1, 2).verdict, Verdict::Infinite);
        assert_eq!(classify_ab(2, 1, 1).verdict, Verdict::SingletonOne);
        assert_eq!(classify_ab(5, 1, 1).verdict, Verdict::Infinite);
        assert_eq!(classify_ab(6, 4, 1).clause, Clause::ContainsGSmooth);
        assert!(matches!(
            classify(&Instance::new(3, -3, 2).unwrap()),
            Err(Error::Degenerate { .. })
        ));
    }

    #[test]
    fn classify_display() {
        assert_eq!(
            classify_ab(2, -1, 2).to_string(),
            "FiniteExplicit {1,3} (because ab = -2)"
        );
    }

    #[test]
    fn higher_j_is_conjectural_and_bounded() {
        let c = classify_with_bound(&Instance::new(19, 1, 3).unwrap(), 2000).unwrap();
        assert_eq!(
            c.verdict,
            Verdict::ConjecturallyFinite {
                members: vec![1, 2, 3, 6, 42, 1806],
                bound: 2000,
                complete: true
            }
        );
        assert_eq!(classify_ab(6, 2, 3).verdict, Verdict::Infinite);
    }

    #[test]
    fn prime_support() {
        assert_eq!(classify_ab(2, 1, 2).prime_support, Some(PrimeSupport::Finite(vec![])));
        assert_eq!(
            classify_ab(2, -1, 2).prime_support,
            Some(PrimeSupport::Finite(vec![BigUint::from(3u32)]))
        );
        assert_eq!(
            classify_ab(12, 0, 2).prime_support,
            Some(PrimeSupport::Finite(vec![BigUint::from(2u32), BigUint::from(3u32)]))
        );
        assert_eq!(classify_ab(3, 1, 2).prime_support, Some(PrimeSupport::Infinite));
        assert_eq!(classify_ab(3, 1, 1).prime_support, None);
        assert_eq!(classify_ab(4, 2, 2).prime_support, None);
    }

    fn support_by_scan(a: i64, b: i64, bound: u64) -> Vec<BigUint> {
        let mut seen: Vec<BigUint> = Vec::new();
        for n in brute_enumerate(&Instance::new(a, b, 2).unwrap(), bound) {
            for p in arith::factorize(n).unwrap().primes() {
                let p = BigUint::from(p);
                if !seen.contains(&p) {
                    seen.push(p);
                }
            }
        }
        seen.sort();
        seen
    }

    #[test]
    fn prime_support_matches_scan() {
        for (a, b) in [(2, 1), (-3, -2), (2, -1), (-1, 2), (12, 0), (0, -10), (-1, 0)] {
            let c = classify_ab(a, b, 2);
            let Some(PrimeSupport::Finite(primes)) = c.prime_support else { panic!() };
            assert_eq!(support_by_scan(a, b, 5000), primes, "({a},{b})");
        }
    }

    #[test]
    fn gcd_pairs_pick_up_primes_beyond_g() {
        // (4, 2) reduces to the consecutive pair (2, 1), yet 6 = 2 * 3 is a
        // member because 2^2 - 1 = 3; likewise (10, -5) reaches 11 via 2^5 + 1.
        assert!(support_by_scan(4, 2, 100).contains(&BigUint::from(3u32)));
        assert!(support_by_scan(10, -5, 2000).contains(&BigUint::from(11u32)));
    }

    #[test]
    fn finite_verdicts_match_brute_force() {
        for a in -12i64..=12 {
            for b in -12i64..=12 {
                let inst1 = Instance::new(a, b, 1).unwrap();
                if inst1.is_degenerate() || !inst1.gcd().is_one() {
                    continue;
                }
                for j in 1..=2 {
                    let inst = Instance::new(a, b, j).unwrap();
                    let expected = match classify(&inst).unwrap().verdict {
                        Verdict::SingletonOne => vec![1],
                        Verdict::FiniteExplicit(v) => v,
                        _ => continue,
                    };
                    assert_eq!(brute_enumerate(&inst, 10_000), expected, "({a},{b},{j})");
                }
            }
        }
    }

    #[test]
    fn infinite_j2_verdicts_have_a_member_at_least_four() {
        for a in -12i64..=12 {
            for b in -12i64..=12 {
                let inst = Instance::new(a, b, 2).unwrap();
                if inst.is_degenerate() || !inst.gcd().is_one() {
                    continue;
                }
                if classify(&inst).unwrap().verdict == Verdict::Infinite {
                    let members = enumerate(&inst, 10_000).unwrap().members;
                    assert!(members.iter().any(|&n| n >= 4), "({a},{b})");
                }
            }
        }
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic_value(1, &big(7), &big(-3)).unwrap(), big(10));
        assert_eq!(cyclotomic_value(6, &big(2), &big(1)).unwrap(), big(3));
        assert_eq!(cyclotomic_value(2, &big(2), &big(1)).unwrap(), big(3));
        assert_eq!(cyclotomic_value(5, &big(3), &big(1)).unwrap(), big(121));
        assert!(cyclotomic_value(2, &big(2), &big(-2)).is_err());
    }

    #[test]
    fn cyclotomic_product_over_divisors_recovers_power_difference() {
        for (a, b) in [(3, 1), (5, -2), (7, 4), (-6, 5)] {
            for n in 1..=36u64 {
                let product: BigInt = arith::factorize(n)
                    .unwrap()
                    .divisors()
                    .into_iter()
                    .map(|d| cyclotomic_value(d, &big(a), &big(b)).unwrap())
                    .product();
                assert_eq!(product, big(a).pow(n as u32) - big(b).pow(n as u32));
            }
        }
    }

    #[test]
    fn primitive_divisor_examples() {
        assert_eq!(primitive_divisor(&big(2), &big(1), 6).unwrap(), PrimitiveDivisor::None);
        assert_eq!(primitive_divisor(&big(2), &big(-1), 3).unwrap(), PrimitiveDivisor::None);
        assert_eq!(
            primitive_divisor(&big(3), &big(1), 5).unwrap(),
            PrimitiveDivisor::Prime(BigUint::from(11u32))
        );
        assert_eq!(primitive_divisor(&big(3), &big(2), 1).unwrap(), PrimitiveDivisor::None);
        assert_eq!(
            primitive_divisor(&big(3), &big(1), 2).unwrap(),
            PrimitiveDivisor::None
        );
        // Normalization: (1, 3) and (-1, -3) describe the same primes as (3, 1).
        assert_eq!(
            primitive_divisor(&big(-1), &big(-3), 5).unwrap(),
            PrimitiveDivisor::Prime(BigUint::from(11u32))
        );
    }

    #[test]
    fn primitive_divisor_is_least_by_brute_force() {
        for (a, b) in [(3, 1), (5, 2), (7, -3), (10, 1)] {
            for n in 1..=24u32 {
                let diff = big(a).pow(n) - big(b).pow(n);
                let earlier: Vec<BigInt> =
                    (1..n).map(|k| big(a).pow(k) - big(b).pow(k)).collect();
                let least = (2u64..200_000).find(|&p| {
                    is_prime(p)
                        && (&diff % p).is_zero()
                        && earlier.iter().all(|e| !(e % p).is_zero())
                });
                match primitive_divisor(&big(a), &big(b), n as u64).unwrap() {
                    PrimitiveDivisor::Prime(p) => {
                        if let Some(l) = least {
                            assert_eq!(p, BigUint::from(l), "({a},{b}) n={n}");
                        } else {
                            assert!(p > BigUint::from(200_000u32));
                        }
                    }
                    PrimitiveDivisor::None => assert!(least.is_none(), "({a},{b}) n={n}"),
                    PrimitiveDivisor::Unknown { .. } => panic!("small case unresolved"),
                }
            }
        }
    }

    #[test]
    fn unknown_outcome_when_effort_runs_out() {
        let config = FactorConfig {
            rho_iterations: 1,
            rho_attempts: 1,
        };
        // 2^101 - 1 = 7432339208719 * 341117531003194129: both primes are
        // past the trial-division limit, so rho is needed to split it.
        let out = primitive_divisor_with(&big(2), &big(1), 101, &config).unwrap();
        let cofactor = BigUint::from(7432339208719u64) * BigUint::from(341117531003194129u64);
        assert_eq!(out, PrimitiveDivisor::Unknown { cofactor });
        assert_eq!(
            primitive_divisor(&big(2), &big(1), 101).unwrap(),
            PrimitiveDivisor::Prime(BigUint::from(7432339208719u64))
        );
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize(&big(1), &big(3)), (big(3), big(1)));
        assert_eq!(normalize(&big(-5), &big(-1)), (big(5), big(1)));
        assert_eq!(normalize(&big(-5), &big(2)), (big(5), big(-2)));
        assert_eq!(normalize(&big(2), &big(-1)), (big(2), big(-1)));
    }
}
