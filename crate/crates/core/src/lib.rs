//! Type `A_{n-1}` crystals on Gelfand-Tsetlin patterns and on semistandard
//! Young tableaux.
//!
//! Patterns carry crystal data given in closed form by max-plus expressions
//! in their entries ([`gtpattern`]); tableaux carry the classical bracketing
//! rule ([`ssyt`]). [`bijection`] maps one onto the other and [`crystal`]
//! checks, by exhaustive enumeration, that both are crystals and that the
//! bijection is an isomorphism.
//!
//! ```
//! use gtcrystal::gtpattern::{lower_gtp, phi_gtp, validate_pattern};
//!
//! let p = validate_pattern(3, vec![vec![3, 1, 0], vec![3, 1], vec![2]]).unwrap();
//! assert_eq!(phi_gtp(&p, 2).unwrap(), 2);
//! let q = lower_gtp(&p, 2).unwrap().unwrap();
//! assert_eq!(q.rows_top_down(), vec![vec![3, 1, 0], vec![2, 1], vec![2]]);
//! ```
//!
//! # Indexing
//!
//! Every public index is 1-based: crystal labels `i` run over `1..=n-1`,
//! pattern entries are `entry(i, j)` with `1 <= j <= i <= n` (row `n` on
//! top), tableau cells are `(row, col)` and bracketing positions count from
//! the start of the word. JSON lists pattern rows top-down. Internally,
//! pattern rows are stored bottom-up at offset `i - 1`; nothing outside
//! [`gtpattern`] sees that layout.
//!
//! # Weights
//!
//! Weights are letter multiplicities in `gl_n` coordinates. Two weights that
//! differ by a constant vector are the same element of the `A_{n-1}` weight
//! lattice; [`Weight::coroot_pairing`] and [`Weight::congruent`] see only
//! that class.

pub mod bijection;
pub mod cli;
pub mod crystal;
pub mod error;
pub mod gtpattern;
pub mod partition;
pub mod ssyt;
pub mod suite;
pub mod weight;

pub use error::{Error, Result};
pub use gtpattern::GtPattern;
pub use partition::Partition;
pub use ssyt::Tableau;
pub use weight::Weight;
