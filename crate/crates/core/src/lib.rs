//! Arithmetic on groves of planar binary trees.
//!
//! Trees of degree `n` (number of internal vertices) form the Catalan-sized set
//! `Y_n`; a grove is a nonempty subset of some `Y_n`. Groves carry an associative,
//! non-commutative addition and multiplication that restrict to ordinary
//! arithmetic on the total groves `@n`. On top of the arithmetic this crate has
//! primality and factorization of trees and groves, exact counting tables, and
//! the harness used to check the algebraic claims exhaustively at small degree.

pub mod arithmetic;
pub mod cli;
pub mod count;
mod error;
pub mod experiment;
pub mod factor;
pub mod grove;
mod limits;
pub mod text;
pub mod tree;
pub mod verify;
pub mod word;

pub use arithmetic::{add, add_with, left_sum, multiply, multiply_with, right_sum};
pub use count::{catalan, grove_space_len, grove_space_size};
pub use error::Error;
pub use grove::{total_grove, Grove, Inheritance, SumTerm};
pub use limits::Limits;
pub use tree::{enumerate_trees, primitive, Side, Tree, TreeRank};
pub use word::{evaluate_word, universal_expression, Word};

/// Exact big-integer counts (Catalan numbers, grove-space sizes).
pub type BigCount = num_bigint::BigUint;

/// Signed big-integer value, used where a printed formula may go negative.
pub type BigSigned = num_bigint::BigInt;

/// Position of a tree inside the canonical enumeration of its degree.
pub type TreeIndex = u64;

pub type Result<T, E = Error> = std::result::Result<T, E>;
