//! Palindromic defect and the complexity gap `T(n)` for finite and infinite words.
//!
//! For an infinite word `u` whose language is closed under reversal, the
//! quantity
//!
//! ```text
//! T(n) = C(n+1) - C(n) + 2 - P(n+1) - P(n)
//! ```
//!
//! relates the factor complexity `C`, the palindromic complexity `P` and the
//! palindromic defect `D` through `2·D(u) = Σ T(n)`. This crate computes all of
//! these quantities on finite words (where the identity holds exactly) and on
//! finite prefixes of infinite words (where every statement is reported as
//! evidence over a certified "trusted range" of lengths).
//!
//! The crate is organised by capability:
//!
//! - [`words`]: alphabets, words, word sources (literal, periodic, morphic,
//!   random) and the line-oriented word-spec file format.
//! - [`factors`]: per-length factor index, special factors, complete return
//!   words, `n`-simple paths and occurrence alternation.
//! - [`palindromes`]: palindromic tree, palindromic complexity, longest
//!   palindromic suffixes and the defect.
//! - [`identity`]: the `T(n)` profile, the finite identity, the counting
//!   checks, the return-word characterisation and the stabilisation harness.
//! - [`gn`]: the graph of special-factor reversal classes and its tree check.
//! - [`cli`]: run configuration and report assembly used by the
//!   `palindefect` binary.
//!
//! See the `examples/` directory of this crate for one runnable program per
//! capability.

pub mod cli;
pub mod factors;
pub mod gn;
pub mod identity;
pub mod palindromes;
pub mod words;

mod automaton;
mod refine;

pub use factors::{FactorIndex, SpecialFactorReport};
pub use gn::{GnCheckReport, GnGraph};
pub use identity::{ComplexityProfile, IdentityReport, PrefixAnalysis, StabilizationReport, Status};
pub use palindromes::{DefectProfile, Eertree};
pub use words::{Alphabet, Morphism, Word, WordSource};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet must have between 1 and {max} letters, got {got}", max = words::MAX_ALPHABET)]
    AlphabetSize { got: usize },
    #[error("duplicate letter {0:?} in alphabet")]
    DuplicateLetter(char),
    #[error("letter {0:?} is not in the alphabet")]
    UnknownLetter(char),
    #[error("symbol index {index} out of range for alphabet of size {size}")]
    SymbolOutOfRange { index: u8, size: usize },
    #[error("morphism has no image for letter {0:?}")]
    MissingImage(char),
    #[error("morphism image of {0:?} is empty")]
    EmptyImage(char),
    #[error("morphism is not prolongable on {0:?}")]
    NotProlongable(char),
    #[error("periodic block is empty")]
    EmptyBlock,
    #[error("literal word has length {len}, shorter than the requested {requested}")]
    LiteralTooShort { len: usize, requested: usize },
    #[error("length {requested} exceeds word length {len}")]
    LengthOutOfRange { requested: usize, len: usize },
    #[error("profile length mismatch: C has {c} entries, P has {p}")]
    ProfileLengthMismatch { c: usize, p: usize },
    #[error("profiles need at least two entries")]
    ProfileTooShort,
    #[error("prefix schedule must be strictly increasing with at least two entries")]
    BadSchedule,
    #[error("line {line}: {message}")]
    WordFile { line: usize, message: String },
    #[error("{0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
