// Bounded enumeration of `R^(2)(3, 1)`, printed as a b-file.

use powerdiv::divset::{enumerate, Instance};

pub fn run_example() -> powerdiv::Result<()> {
    run(100_000)
}

fn run(bound: u64) -> powerdiv::Result<()> {
    let e = enumerate(&Instance::new(3, 1, 2)?, bound)?;
    for (i, n) in e.members.iter().enumerate() {
        println!("{} {n}", i + 1);
    }
    eprintln!("{} members <= {bound}, complete: {}", e.members.len(), e.complete);
    Ok(())
}

#[allow(dead_code)]
fn main() -> powerdiv::Result<()> {
    match std::env::args().nth(1) {
        Some(arg) => run(arg.parse().expect("bound must be a positive integer")),
        None => run_example(),
    }
}
