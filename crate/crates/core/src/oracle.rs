//! Brute-force reference implementations. Deliberately simple and slow;
//! everything here is the ground truth the engines are tested against.

use crate::classical::SolveResult;
use crate::instance::{build_cover, Instance, LongestMatchTable};
use crate::ledger::QueryLedger;
use std::time::Instant;

/// For each text position, every dictionary index that matches there,
/// verified by direct character comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchTable {
    /// `matches[i]` lists 1-based dictionary indices matching at position i+1.
    pub matches: Vec<Vec<usize>>,
}

/// Exhaustive match table, O(n * L).
pub fn naive_match_table(inst: &Instance) -> MatchTable {
    let n = inst.text_len();
    let m = inst.dict_len();
    let mut matches = vec![Vec::new(); n];
    for (pos, row) in matches.iter_mut().enumerate() {
        for j in 1..=m {
            if inst.matches_at(pos + 1, j) {
                row.push(j);
            }
        }
    }
    MatchTable { matches }
}

/// Exact longest-match table by definition: scan every (position, string)
/// pair. Length ties go to the smaller dictionary index, matching the
/// segment-tree tie rule.
pub fn naive_longest_match_table(inst: &Instance) -> LongestMatchTable {
    let n = inst.text_len();
    let m = inst.dict_len();
    let mut entries = vec![-1i32; n];
    for pos in 1..=n {
        let mut best_len = 0usize;
        for j in 1..=m {
            let len = inst.dict_string(j).len();
            if len > best_len && inst.matches_at(pos, j) {
                best_len = len;
                entries[pos - 1] = j as i32;
            }
        }
    }
    LongestMatchTable::new(entries)
}

/// Decides feasibility by reachability over "rightmost covered end" states.
///
/// Start from every match at position 1; from covered end e, any match
/// starting at q <= e + 1 extends coverage to max(e, q + len - 1); the
/// instance is feasible iff end n is reached. The chain conditions force
/// coverage to stay one contiguous interval starting at position 1, so the
/// scalar end state is enough.
pub fn naive_feasible(inst: &Instance) -> bool {
    let n = inst.text_len();
    let table = naive_match_table(inst);
    // reach[i] = furthest end of any match starting at 1-based position i+1
    let reach: Vec<usize> = table
        .matches
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .map(|&j| i + inst.dict_string(j).len()) // (i+1) + len - 1
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut end = reach[0];
    if end == 0 {
        return false;
    }
    let mut scanned = 1usize; // positions 1..=scanned already folded into end
    while end < n {
        let limit = (end + 1).min(n);
        let mut grown = end;
        while scanned < limit {
            scanned += 1;
            grown = grown.max(reach[scanned - 1]);
        }
        if grown == end {
            return false;
        }
        end = grown;
    }
    true
}

/// The brute-force engine behind `--engine naive`: exact longest-match table
/// by scanning, then the shared greedy cover. The ledger charges one
/// character query per symbol comparison the scan performs.
pub fn solve_naive(inst: &Instance) -> SolveResult {
    let started = Instant::now();
    let mut ledger = QueryLedger::new();
    let n = inst.text_len();
    let text = inst.text();
    let mut entries = vec![-1i32; n];
    for pos in 1..=n {
        let mut best_len = 0usize;
        for j in 1..=inst.dict_len() {
            let s = inst.dict_string(j);
            if s.len() <= best_len || pos + s.len() - 1 > n {
                continue;
            }
            let mut matched = true;
            for (off, &sym) in s.iter().enumerate() {
                ledger.character_queries += 2;
                if text[pos - 1 + off] != sym {
                    matched = false;
                    break;
                }
            }
            if matched {
                best_len = s.len();
                entries[pos - 1] = j as i32;
            }
        }
    }
    let cover = build_cover(&LongestMatchTable::new(entries), inst);
    ledger.elapsed_ns = started.elapsed().as_nanos() as u64;
    SolveResult { cover, ledger }
}
