// The element graph of `R^(2)(3, 1)` as Graphviz DOT.
//
// `cargo run --example element_tree -- 1000000 | dot -Tsvg > tree.svg`

use powerdiv::divset::{enumerate, parent, Instance};

pub fn run_example() -> powerdiv::Result<()> {
    run(10_000)
}

fn run(bound: u64) -> powerdiv::Result<()> {
    let e = enumerate(&Instance::new(3, 1, 2)?, bound)?;
    for &n in e.members.iter().skip(1) {
        assert_eq!(e.tree.spanning_parent(n), parent(n)?);
    }
    print!("{}", e.tree.to_dot(&format!("R^(2)(3, 1) below {bound}")));
    Ok(())
}

#[allow(dead_code)]
fn main() -> powerdiv::Result<()> {
    match std::env::args().nth(1) {
        Some(arg) => run(arg.parse().expect("bound must be a positive integer")),
        None => run_example(),
    }
}
