use std::collections::HashSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::arith;

/// Edge `from -> to = from * p` between two members.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TreeEdge {
    pub from: u64,
    pub p: u64,
    pub to: u64,
    /// `p` is the largest prime factor of `to`.
    pub spanning: bool,
}

/// Element graph of an enumeration: members joined by single-prime edges,
/// with the largest-prime-factor edges forming a spanning tree rooted at 1.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct EnumTree {
    pub nodes: Vec<u64>,
    pub edges: Vec<TreeEdge>,
}

impl EnumTree {
    /// Builds the graph from an ascending member list. The second value
    /// reports a factorization failure, in which case edges are missing.
    pub fn from_members(members: &[u64]) -> (Self, Option<String>) {
        let set: HashSet<u64> = members.iter().copied().collect();
        let mut edges = Vec::new();
        let mut failure = None;
        for &to in members.iter().filter(|&&n| n > 1) {
            let f = match arith::factorize(to) {
                Ok(f) => f,
                Err(e) => {
                    failure.get_or_insert_with(|| format!("factoring {to}: {e}"));
                    continue;
                }
            };
            let largest = f.largest_prime();
            for p in f.primes() {
                if set.contains(&(to / p)) {
                    edges.push(TreeEdge {
                        from: to / p,
                        p,
                        to,
                        spanning: Some(p) == largest,
                    });
                }
            }
        }
        edges.sort_by_key(|e| (e.from, e.to));
        let tree = Self {
            nodes: members.to_vec(),
            edges,
        };
        (tree, failure)
    }

    pub fn spanning_parent(&self, n: u64) -> Option<u64> {
        self.edges
            .iter()
            .find(|e| e.spanning && e.to == n)
            .map(|e| e.from)
    }

    /// Graphviz rendering: spanning edges solid, the rest dashed, each edge
    /// labelled with its prime.
    pub fn to_dot(&self, title: &str) -> String {
        let mut out = String::new();
        writeln!(out, "digraph R {{").unwrap();
        writeln!(out, "  label=\"{}\";", title.replace('"', "\\\"")).unwrap();
        writeln!(out, "  node [shape=plaintext];").unwrap();
        for n in &self.nodes {
            writeln!(out, "  \"{n}\";").unwrap();
        }
        for e in &self.edges {
            let style = if e.spanning { "solid" } else { "dashed" };
            writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}\", style={style}];",
                e.from, e.to, e.p
            )
            .unwrap();
        }
        writeln!(out, "}}").unwrap();
        out
    }
}
