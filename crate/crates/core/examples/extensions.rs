// Extension sets: the prime powers that keep a member in the set.

use powerdiv::divset::{extensions, Instance};

pub fn run_example() -> powerdiv::Result<()> {
    let inst = Instance::new(3, 1, 2)?;
    let set = extensions(&inst, 20, 10_000)?;
    for e in &set.entries {
        println!("n = 20: p = {}, e_p = {}, k_max = {:?}", e.p, e.e_p, e.k_max);
    }
    println!("prime powers: {:?}", set.prime_powers(u64::MAX));

    let below = extensions(&inst, 220, 1_000_000 / 220)?;
    let primes: Vec<u64> = below.entries.iter().map(|e| e.p).collect();
    println!("n = 220, p < 10^6/220: {primes:?}");

    let j1 = extensions(&Instance::new(3, 1, 1)?, 2, 100)?;
    println!("R^(1)(3, 1), n = 2: {:?}", j1.entries);
    Ok(())
}

#[allow(dead_code)]
fn main() -> powerdiv::Result<()> {
    run_example()
}
