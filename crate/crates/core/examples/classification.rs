// Finiteness verdicts for `j = 1, 2` and bounded answers for `j >= 3`.

use powerdiv::classify::{classify, classify_with_bound};
use powerdiv::divset::Instance;

pub fn run_example() -> powerdiv::Result<()> {
    for (a, b, j) in [(2, 1, 1), (7, 3, 1), (2, 1, 2), (2, -1, 2), (-1, 2, 2), (3, 1, 2), (6, 4, 2)] {
        println!("({a}, {b}, j = {j}): {}", classify(&Instance::new(a, b, j)?)?);
    }
    let c = classify_with_bound(&Instance::new(19, 1, 3)?, 2000)?;
    println!("(19, 1, j = 3): {c}");
    println!("(2, -1, j = 2) prime support: {:?}", classify(&Instance::new(2, -1, 2)?)?.prime_support);
    Ok(())
}

#[allow(dead_code)]
fn main() -> powerdiv::Result<()> {
    run_example()
}
