// Pairs with a common factor and the sets `R^(j)(a, 0)`.

use num_bigint::BigInt;
use powerdiv::general::{a0_exceptions, enumerate_a0, enumerate_general, k_constant, member_general, GcdSplit};

pub fn run_example() -> powerdiv::Result<()> {
    let (a, b) = (BigInt::from(56), BigInt::from(2));
    let split = GcdSplit::new(&a, &b)?;
    println!("56 = {} * {}, 2 = {} * {}; 96 splits as {:?}", split.g, split.a1, split.g, split.b1, split.split(96));
    println!("16 in R^(4)(56, 2): {}", member_general(&a, &b, 4, 16)?);
    println!("2 in R^(4)(56, 2): {}", member_general(&a, &b, 4, 2)?);
    println!("R^(4)(56, 2) to 1024: {:?}", enumerate_general(&a, &b, 4, 1024)?.members);
    println!("R^(4)(28, 1) to 10^4: {:?}", enumerate_general(&28.into(), &1.into(), 4, 10_000)?.members);

    println!("K(2, 4) = {}, exceptions {:?}", k_constant(2, 4)?, a0_exceptions(2, 4)?);
    println!("R^(4)(2, 0) to 100: {:?}", enumerate_a0(2, 4, 100)?);
    println!("R^(2)(10, 0) to 30: {:?}", enumerate_a0(10, 2, 30)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> powerdiv::Result<()> {
    run_example()
}
