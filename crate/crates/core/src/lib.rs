//! Exact toolkit for approximating a real number by a sum of `n` fractions
//! whose denominators are primes from `[N/2, N]`.
//!
//! * [`arith`]: rationals, continued fractions, CRT partial fractions and
//!   exact bounds on rational powers.
//! * [`primes`]: the prime window.
//! * [`partition`]: set partitions and Möbius inversion to distinct tuples.
//! * [`expsum`]: exponential sums over products of window primes, the
//!   reciprocal-distance and point-set audits.
//! * [`search`]: constructive searches with exact certificates.
//! * [`oracle`]: brute-force optimum over a denominator class.
//! * [`experiment`]: seeded grids and CSV/JSON reports behind the CLI.
//!
//! ```
//! use primefrac::oracle::{best_multi_approx, DenomClass};
//! use primefrac::Rational;
//!
//! let alpha: Rational = "355/113".parse().unwrap();
//! let best = best_multi_approx(&alpha, &DenomClass::all_up_to(10, 1), 1_000_000).unwrap();
//! assert_eq!(best.denominators, vec![7]);
//! assert_eq!(best.error.to_string(), "1/791");
//! ```

pub mod arith;
pub mod error;
pub mod experiment;
pub mod expsum;
pub mod oracle;
pub mod partition;
pub mod primes;
pub mod search;

pub use arith::Rational;
pub use error::{Error, Result};
