//! Shared error type for every fallible operation in the crate.

use thiserror::Error;

/// Errors produced by operations on permutations, braids, parenthesized
/// words, groupoid elements, and finite groups.
///
/// All indices reported here are 1-based, matching the convention used
/// throughout the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two values that must agree in size (strand count, permutation size,
    /// grade count, ...) do not.
    #[error("size mismatch in {context}: expected {expected}, found {found}")]
    SizeMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    /// A 1-based index fell outside its valid range.
    #[error("index {index} out of range 1..={bound} in {context}")]
    IndexOutOfRange {
        context: &'static str,
        index: usize,
        bound: usize,
    },

    /// A would-be permutation's image sequence is not a bijection of 1..=n.
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    /// A braid letter is incompatible with the declared strand count.
    #[error("invalid braid word: {0}")]
    InvalidBraid(String),

    /// A parenthesized word's leaf labels violate the once-each rule.
    #[error("invalid parenthesized word: {0}")]
    InvalidWord(String),

    /// A multiplication table fails one of the group axioms.
    #[error("invalid group: {0}")]
    InvalidGroup(String),

    /// A morphism composition was attempted on objects that do not match.
    #[error("not composable: {0}")]
    NotComposable(String),

    /// A law name that is not present in the registry.
    #[error("unknown law: {0}")]
    UnknownLaw(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
