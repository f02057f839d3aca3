// Primitive prime divisors via cyclotomic values.

use num_bigint::BigInt;
use powerdiv::classify::{cyclotomic_value, primitive_divisor, PrimitiveDivisor};

pub fn run_example() -> powerdiv::Result<()> {
    let (two, one) = (BigInt::from(2), BigInt::from(1));
    println!("Phi_6(2, 1) = {}", cyclotomic_value(6, &two, &one)?);
    for n in 1..=12 {
        let p = match primitive_divisor(&two, &one, n)? {
            PrimitiveDivisor::None => "none".to_string(),
            PrimitiveDivisor::Prime(p) => p.to_string(),
            PrimitiveDivisor::Unknown { cofactor } => format!("unknown, cofactor {cofactor}"),
        };
        println!("2^{n} - 1: least primitive prime divisor {p}");
    }
    let p = primitive_divisor(&BigInt::from(3), &one, 5)?;
    println!("3^5 - 1: {p:?}");
    let p = primitive_divisor(&BigInt::from(2), &BigInt::from(-1), 3)?;
    println!("2^3 + 1: {p:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> powerdiv::Result<()> {
    run_example()
}
