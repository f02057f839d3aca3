// Powers of `n` dividing `a^n + b^n`.

use num_bigint::BigInt;
use powerdiv::general::plus_set;

pub fn run_example() -> powerdiv::Result<()> {
    for (a, b, j, bound) in [(5, 1, 2, 30_000), (3, 2, 2, 10_000), (4, 3, 2, 3000), (2, 1, 2, 1000), (1, 1, 1, 1000), (3, 1, 1, 200)] {
        let s = plus_set(&BigInt::from(a), &BigInt::from(b), j, bound)?;
        print!("n^{j} | {a}^n + {b}^n, n <= {bound}: {:?}", s.members);
        match s.classification {
            Some(c) => println!("  [{c}]"),
            None => println!(),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> powerdiv::Result<()> {
    run_example()
}
