//! Exact computation in the planar upper triangular rook monoid `B_n`.
//!
//! `B_n` is the monoid of injective partial maps of `{1..n}` that are order
//! preserving (`a < b` implies `f(a) < f(b)`) and order decreasing
//! (`f(a) <= a`), or equivalently the upper triangular generalized reduced
//! echelon rook matrices. The crate covers:
//!
//! - [`rook`]: partial maps, rook matrices, membership predicates, text forms;
//! - [`enumeration`]: Catalan orders, exhaustive enumeration, the recursive
//!   order table and the ballot-sequence bijection;
//! - [`poset`]: the module `V` spanned by `v_S` for `S ⊆ {1..n}`, with spans,
//!   reduced generators, dimension formulas and branching decompositions;
//! - [`presentation`]: generator words, standard words and the normal-form
//!   rewriting that folds words through multiplication tables;
//! - [`verify`]: end-to-end sweeps that cross-check every formula against an
//!   independent computation.
//!
//! All arithmetic on orders and dimensions is arbitrary precision.

pub mod arith;
pub mod enumeration;
pub mod error;
pub mod poset;
pub mod presentation;
pub mod rook;
pub mod subset;
pub mod verify;

pub use error::{Error, Result};
pub use rook::{compose, PartialMap, PrintStyle, RookMatrix};
pub use subset::Subset;

/// Largest supported `n`; subsets of `{1..n}` fit one `u64`.
pub const MAX_N: usize = 62;
