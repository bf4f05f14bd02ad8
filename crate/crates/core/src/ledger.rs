//! Operation counters shared by every engine. The ledger is the currency of
//! the complexity checks: the scaling and crossover tests read these numbers,
//! not wall time.

use serde::{Deserialize, Serialize};

/// Counters filled during a solve. All counters are monotonically
/// non-decreasing within one solve.
///
/// Accounting contract:
/// - `character_queries`: raw symbol reads charged to the engine. The
///   classical engine charges one per symbol during hash registration and two
///   per comparison that ends in a direct symbol probe; the quantum engine
///   charges the modeled Grover oracle probes (or, in statevector mode, the
///   actual oracle applications). The naive engine charges its scan reads.
/// - `hash_evals`: prefix/substring hash evaluations, plus power-table
///   construction work. Zero for the quantum engine.
/// - `compare_calls`: string comparison invocations (hash compare or quantum
///   prefix compare).
/// - `elapsed_ns`: wall time of the solve; excluded from determinism
///   comparisons.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryLedger {
    #[serde(rename = "characterQueries")]
    pub character_queries: u64,
    #[serde(rename = "hashEvals")]
    pub hash_evals: u64,
    #[serde(rename = "compareCalls")]
    pub compare_calls: u64,
    pub elapsed_ns: u64,
}

impl QueryLedger {
    pub fn new() -> Self {
        QueryLedger::default()
    }

    /// Sum of all counted operations (wall time excluded).
    pub fn total(&self) -> u64 {
        self.character_queries + self.hash_evals + self.compare_calls
    }

    /// Counters only, for determinism comparisons.
    pub fn counters(&self) -> (u64, u64, u64) {
        (self.character_queries, self.hash_evals, self.compare_calls)
    }
}
