//! Divisibility of `a^n - b^n` by powers of `n`.
//!
//! For integers `a`, `b` and `j >= 1` this crate works with
//! `R^(j)(a, b) = { n >= 1 : n^j | a^n - b^n }` and the companion sets for
//! `a^n + b^n`, without ever forming the (huge) integers `a^n ± b^n`:
//!
//! - [`arith`]: modular exponentiation, primality, factorization.
//! - [`valuation`]: multiplicative orders and exact `v_p(a^n - b^n)`.
//! - [`divset`]: membership, extension sets, certificates and bounded
//!   enumeration with the element tree, for coprime `a`, `b`.
//! - [`classify`]: finiteness verdicts for `j = 1, 2` and primitive prime
//!   divisors.
//! - [`general`]: any `gcd(a, b)`, `b = 0`, and the `a^n + b^n` sets.
//! - [`cli`]: the `powerdiv` command line.
//!
//! ```
//! use powerdiv::divset::{enumerate, Instance};
//!
//! let r = enumerate(&Instance::new(3, 1, 2).unwrap(), 2500).unwrap();
//! assert_eq!(r.members, vec![1, 2, 4, 20, 220, 1220, 2420]);
//! ```

pub mod arith;
pub mod classify;
pub mod cli;
pub mod divset;
pub mod error;
pub mod general;
pub mod valuation;

pub use error::{Error, Result};
