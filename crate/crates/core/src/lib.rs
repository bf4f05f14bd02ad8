//! Decide whether a text can be tiled (with overlaps) by strings from a
//! dictionary, and produce one such tiling.
//!
//! Two engines answer the question. [`classical::solve_classical`] runs the
//! fingerprinting pipeline: a random prime, rolling prefix hashes, a suffix
//! array of the text, one binary-searched suffix range per dictionary string,
//! a lazy max segment tree to keep the longest match per position, and a
//! greedy left-to-right cover construction. [`quantum::solve_quantum`] runs
//! the same pipeline with string comparison replaced by a quantum
//! first-mismatch search, simulated as a counted query model (and, at tiny
//! sizes, as a genuine statevector Grover search).
//!
//! Every engine fills a [`ledger::QueryLedger`] with the primitive operations
//! it performed; the ledger is the currency in which the complexity claims of
//! both engines are checked. [`oracle`] holds deliberately slow brute-force
//! references, and [`harness`] generates instance families (including the
//! adversarial needle families) and runs benchmark sweeps.

pub mod classical;
pub mod harness;
pub mod hashing;
pub mod instance;
pub mod ledger;
pub mod oracle;
pub mod quantum;
pub mod segtree;
pub mod suffix;

mod search;

pub use instance::{validate_cover, Alphabet, Cover, Instance, LongestMatchTable};
pub use ledger::QueryLedger;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("text must contain at least one symbol")]
    EmptyText,
    #[error("dictionary must contain at least one string")]
    EmptyDictionary,
    #[error("dictionary string {index} is empty")]
    EmptyDictionaryString { index: usize },
    #[error("symbol {byte:#04x} at offset {offset} is not in the alphabet")]
    SymbolOutsideAlphabet { byte: u8, offset: usize },
    #[error("epsilon out of range: {0}")]
    InvalidEpsilon(f64),
    #[error(
        "faithful prime pool needs {requested} primes (sieve bound {bound}), above the cap; \
         use fast prime mode"
    )]
    FaithfulPoolTooLarge { requested: u64, bound: u64 },
    #[error("base {base} is not invertible modulo {prime}")]
    BaseNotInvertible { base: u64, prime: u64 },
    #[error("power tables cover length {covered}, string needs {needed}")]
    PowerTableTooShort { covered: usize, needed: usize },
    #[error("substring bounds [{lo}, {hi}] invalid for string of length {len}")]
    SubstringBounds { lo: usize, hi: usize, len: usize },
    #[error("segment tree range [{lo}, {hi}] invalid for size {size}")]
    SegtreeBounds { lo: usize, hi: usize, size: usize },
    #[error("segment tree must have at least one leaf")]
    SegtreeEmpty,
    #[error("statevector comparison limited to length 16, got {0}")]
    StatevectorTooLong(usize),
    #[error("gamma must be at least 2, got {0}")]
    InvalidGamma(u64),
    #[error("unsatisfiable generator request: {0}")]
    UnsatisfiableGenerator(String),
}
