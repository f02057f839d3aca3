// Membership tests and factorization-chain certificates.

use powerdiv::divset::{certify, member, member_direct, CertifyOutcome, Instance};

pub fn run_example() -> powerdiv::Result<()> {
    let inst = Instance::new(3, 1, 2)?;
    for n in [1, 5, 20, 220, 1210220] {
        println!("{n}^2 | 3^{n} - 1: {}", member(&inst, n)?);
    }
    assert_eq!(member(&inst, 20)?, member_direct(&inst.a, &inst.b, inst.j, 20));

    let inst = Instance::new(5, -1, 2)?;
    match certify(&inst, 42)? {
        CertifyOutcome::Member(cert) => {
            println!("42 is a member of R^(2)(5, -1); verified: {}", cert.verify(&inst));
            for s in &cert.chain {
                println!(
                    "  p = {}, k = {}, n_i = {}: need p^{}, have p^{}",
                    s.p, s.k, s.n_i, s.required_exponent, s.witnessed_valuation
                );
            }
        }
        CertifyOutcome::NonMember(step) => println!("not a member, fails at {step:?}"),
    }
    if let CertifyOutcome::NonMember(step) = certify(&inst, 8)? {
        println!("8 fails at p = {}, n_i = {}", step.p, step.n_i);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> powerdiv::Result<()> {
    run_example()
}
