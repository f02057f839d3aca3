// Primality, factorization and the Möbius function.

use powerdiv::arith::{factorize, factorize_with, is_prime, mobius, modpow_signed, v_int, FactorConfig};
use powerdiv::Error;

pub fn run_example() -> powerdiv::Result<()> {
    for n in [1181u64, 1806, 18446744073709551557] {
        println!("is_prime({n}) = {}", is_prime(n));
    }

    let f = factorize(27000)?;
    println!("27000 = {:?}", f.factors());
    println!("1806 has {} divisors", factorize(1806)?.divisors().len());

    // A product of two 31-bit primes needs rho; with a tiny budget it is
    // reported instead of retried forever.
    let n = 2147483647u64 * 2147483629;
    println!("{n} = {:?}", factorize(n)?.factors());
    let starved = FactorConfig { rho_iterations: 4, rho_attempts: 1 };
    match factorize_with(n, &starved) {
        Err(Error::EffortExceeded(rest)) => println!("starved budget leaves cofactor {rest}"),
        other => println!("unexpected: {other:?}"),
    }

    for n in [1, 4, 6, 30] {
        println!("mu({n}) = {}", mobius(n)?);
    }
    println!("v_5(27000) = {}", v_int(&27000.into(), 5)?);
    println!("(-1)^3 mod 5 = {}", modpow_signed(&(-1).into(), 3, &5u32.into()));
    Ok(())
}

#[allow(dead_code)]
fn main() -> powerdiv::Result<()> {
    run_example()
}
