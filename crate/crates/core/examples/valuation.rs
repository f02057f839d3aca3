// Orders and exact valuations of `a^n - b^n` without forming it.

use powerdiv::valuation::{e2_lcm, power_diff_valuation, ratio_order, CoprimePair};

pub fn run_example() -> powerdiv::Result<()> {
    let pair = CoprimePair::new(3, 1)?;
    for p in [2, 5, 11] {
        let o = ratio_order(&pair, p)?.order().expect("p does not divide ab");
        println!("p = {p}: order d = {}, t = {}", o.d, o.t);
    }

    // 3^20 - 1 = 2^4 5^2 11^2 61 1181
    for p in [2, 5, 7, 11, 61, 1181] {
        println!("v_{p}(3^20 - 1) = {}", power_diff_valuation(&pair, 20, p)?);
    }
    println!("v_2(lcm(3^20 - 1, 3^20 + 1)) = {}", e2_lcm(&pair, 20)?);

    // Exponents far past anything that could be written down.
    let n = 1_000_000_000_000u64;
    println!("v_11(3^{n} - 1) = {}", power_diff_valuation(&pair, n, 11)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> powerdiv::Result<()> {
    run_example()
}
