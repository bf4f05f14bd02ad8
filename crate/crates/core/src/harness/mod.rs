//! Instance generators (including the adversarial needle families), the
//! benchmark runner, and statistics collection.

pub mod exec;

use crate::classical::{solve_classical, ClassicalConfig, SolveResult};
use crate::hashing::ceil_log2;
use crate::instance::{validate_cover, Alphabet, Cover, Instance};
use crate::oracle::solve_naive;
use crate::quantum::{solve_quantum, QuantumConfig};
use crate::Error;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use serde::Serialize;

/// Instance families exposed by the generator front end.
///
/// `LbL` and `LbN` are the worst-case needle families: feasibility hinges on
/// a single flipped symbol hidden in the dictionary mass (`LbL`) or in the
/// text (`LbN`). Their external names are `lb-L` and `lb-n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Random,
    Planted,
    LbL,
    LbN,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Random => "random",
            Family::Planted => "planted",
            Family::LbL => "lb-L",
            Family::LbN => "lb-n",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "random" => Some(Family::Random),
            "planted" => Some(Family::Planted),
            "lb-L" => Some(Family::LbL),
            "lb-n" => Some(Family::LbN),
            _ => None,
        }
    }
}

/// Generator request.
#[derive(Debug, Clone)]
pub struct GenSpec {
    pub family: Family,
    pub n: usize,
    pub m: usize,
    pub len_min: usize,
    pub len_max: usize,
    pub alphabet: Alphabet,
    pub seed: u64,
    /// Needle families only: plant the needle (`lb-L`: a coverable 1 in one
    /// dictionary string; `lb-n`: an uncoverable 0 in the text).
    pub planted: bool,
}

pub fn generate(spec: &GenSpec) -> Result<Instance, Error> {
    match spec.family {
        Family::Random => gen_random(
            spec.n,
            spec.m,
            spec.len_min,
            spec.len_max,
            &spec.alphabet,
            spec.seed,
        ),
        Family::Planted => gen_planted(
            spec.n,
            spec.m,
            spec.len_min,
            spec.len_max,
            &spec.alphabet,
            spec.seed,
        ),
        Family::LbL => gen_lb_dictionary_needle(spec.n, spec.m, spec.planted, spec.seed),
        Family::LbN => gen_lb_text_needle(spec.n, spec.planted, spec.seed),
    }
}

fn random_symbols(len: usize, k: usize, rng: &mut ChaCha12Rng) -> Vec<u8> {
    (0..len).map(|_| rng.gen_range(0..k) as u8).collect()
}

/// Fully random text and dictionary; feasibility is whatever it is.
pub fn gen_random(
    n: usize,
    m: usize,
    len_min: usize,
    len_max: usize,
    alphabet: &Alphabet,
    seed: u64,
) -> Result<Instance, Error> {
    check_lengths(n, m, len_min, len_max)?;
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let k = alphabet.size();
    let text = random_symbols(n, k, &mut rng);
    let dict = (0..m)
        .map(|_| random_symbols(rng.gen_range(len_min..=len_max), k, &mut rng))
        .collect();
    Instance::new(text, dict, alphabet.clone())
}

fn check_lengths(n: usize, m: usize, len_min: usize, len_max: usize) -> Result<(), Error> {
    if n < 1 || m < 1 {
        return Err(Error::UnsatisfiableGenerator(format!(
            "need n >= 1 and m >= 1, got n={n}, m={m}"
        )));
    }
    if len_min < 1 || len_max < len_min {
        return Err(Error::UnsatisfiableGenerator(format!(
            "bad length range [{len_min}, {len_max}]"
        )));
    }
    Ok(())
}

/// Guaranteed-feasible instance: a chain of pieces is cut from a random text
/// so that it tiles it end to end, and the dictionary is padded with random
/// decoys. The final chain piece may be clamped shorter than `len_min` so the
/// chain ends exactly at the text end.
pub fn gen_planted(
    n: usize,
    m: usize,
    len_min: usize,
    len_max: usize,
    alphabet: &Alphabet,
    seed: u64,
) -> Result<Instance, Error> {
    check_lengths(n, m, len_min, len_max)?;
    if (m as u128) * (len_max as u128) < n as u128 {
        return Err(Error::UnsatisfiableGenerator(format!(
            "{m} pieces of length <= {len_max} cannot tile {n} positions"
        )));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let k = alphabet.size();
    let text = random_symbols(n, k, &mut rng);

    let mut pieces: Vec<(usize, usize)> = Vec::new();
    let mut covered = 0usize;
    while covered < n {
        let rem = m - pieces.len();
        // invariant: rem * len_max >= n - covered, so a chain always finishes
        let start = if covered == 0 {
            1
        } else {
            let slack = (covered + rem * len_max).saturating_sub(n);
            let overlap_cap = slack.min(len_min - 1).min(3).min(covered);
            covered + 1 - rng.gen_range(0..=overlap_cap)
        };
        let hi = len_max.min(n - start + 1);
        let needed = (n - start + 1).saturating_sub((rem - 1) * len_max);
        assert!(needed <= hi, "planted chain budget violated");
        let lo = len_min.max(needed).min(hi);
        let len = rng.gen_range(lo..=hi);
        pieces.push((start, len));
        covered = covered.max(start + len - 1);
    }

    let z = pieces.len();
    let mut strings: Vec<Vec<u8>> = pieces
        .iter()
        .map(|&(start, len)| text[start - 1..start - 1 + len].to_vec())
        .collect();
    for _ in z..m {
        strings.push(random_symbols(
            rng.gen_range(len_min..=len_max),
            k,
            &mut rng,
        ));
    }

    let mut order: Vec<usize> = (0..m).collect();
    order.shuffle(&mut rng);
    let dict: Vec<Vec<u8>> = order.iter().map(|&o| strings[o].clone()).collect();
    let mut new_index = vec![0usize; m];
    for (new, &old) in order.iter().enumerate() {
        new_index[old] = new;
    }

    let inst = Instance::new(text, dict, alphabet.clone())?;
    let witness = Cover {
        positions: pieces.iter().map(|&(s, _)| s).collect(),
        indices: (0..z).map(|j| new_index[j] + 1).collect(),
    };
    assert!(
        validate_cover(&inst, &witness),
        "planted chain must be a valid cover"
    );
    Ok(inst)
}

/// Needle-in-dictionary family (`lb-L`): the text is all zeros except a
/// single 1 at floor(n/2); the dictionary is all-zero strings of length at
/// most n/2. Planted mode hides the 1 inside one dictionary string, placed so
/// it can land on the text's 1 with length-1 zero fillers tiling the rest;
/// the instance is feasible exactly when planted.
pub fn gen_lb_dictionary_needle(
    n: usize,
    m: usize,
    planted: bool,
    seed: u64,
) -> Result<Instance, Error> {
    if n < 2 {
        return Err(Error::UnsatisfiableGenerator(
            "needle-in-dictionary family needs n >= 2".into(),
        ));
    }
    if m < 1 || (planted && m < 2) {
        return Err(Error::UnsatisfiableGenerator(
            "planted needle needs the needle string plus a zero filler".into(),
        ));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mid = n / 2;
    let mut text = vec![0u8; n];
    text[mid - 1] = 1;

    let half = (n / 2).max(1);
    let filler_lo = (n / 4).max(1).min(half);
    let mut strings: Vec<Vec<u8>> = Vec::with_capacity(m);
    if planted {
        let len = rng.gen_range(1..=half);
        let j0 = if len >= 2 {
            rng.gen_range(1..=len - 1)
        } else {
            1
        };
        let mut needle = vec![0u8; len];
        needle[j0 - 1] = 1;
        strings.push(needle);
        strings.push(vec![0u8]); // the filler that tiles everything else
        for _ in 2..m {
            strings.push(vec![0u8; rng.gen_range(filler_lo..=half)]);
        }
    } else {
        for _ in 0..m {
            strings.push(vec![0u8; rng.gen_range(filler_lo..=half)]);
        }
    }
    strings.shuffle(&mut rng);
    Instance::new(text, strings, Alphabet::binary())
}

/// Needle-in-text family (`lb-n`): the dictionary is the single string "1"
/// and the text is all ones; planting a single 0 at a random position makes
/// it infeasible.
pub fn gen_lb_text_needle(n: usize, plant_zero: bool, seed: u64) -> Result<Instance, Error> {
    if n < 1 {
        return Err(Error::UnsatisfiableGenerator("need n >= 1".into()));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut text = vec![1u8; n];
    if plant_zero {
        let g = rng.gen_range(1..=n);
        text[g - 1] = 0;
    }
    Instance::new(text, vec![vec![1u8]], Alphabet::binary())
}

/// Near-linear-work family: equal-length pieces of length ceil(log2 n)^2 cut
/// from the text so that they tile it, giving L close to n with
/// m close to n / ceil(log2 n)^2. Always feasible.
pub fn gen_scaling(n: usize, seed: u64) -> Result<Instance, Error> {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let lg = ceil_log2(n) as usize;
    let len = (lg * lg).clamp(1, n);
    let z = n.div_ceil(len);
    let text = random_symbols(n, 2, &mut rng);
    let mut dict = Vec::with_capacity(z);
    for i in 0..z {
        let start = if i + 1 == z { n - len + 1 } else { i * len + 1 };
        dict.push(text[start - 1..start - 1 + len].to_vec());
    }
    Instance::new(text, dict, Alphabet::binary())
}

/// Equal-length family for query-count sweeps: `m` strings of length `len`,
/// every one cut from the text at a random position (so every one occurs).
pub fn gen_fixed_shape(n: usize, m: usize, len: usize, seed: u64) -> Result<Instance, Error> {
    if len > n {
        return Err(Error::UnsatisfiableGenerator(format!(
            "fixed-shape length {len} exceeds text length {n}"
        )));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let text = random_symbols(n, 2, &mut rng);
    let dict = (0..m)
        .map(|_| {
            let start = rng.gen_range(1..=n - len + 1);
            text[start - 1..start - 1 + len].to_vec()
        })
        .collect();
    Instance::new(text, dict, Alphabet::binary())
}

/// Long-strings family: every dictionary string is long (at least
/// (log2 n * (log2 m + log2 log2 n))^2 symbols). Three length-n/2 pieces cut
/// from the text tile it, and one random decoy of length 12n carries most of
/// the dictionary mass without ever matching. Feasible by construction.
pub fn gen_long_strings(n: usize, seed: u64) -> Result<Instance, Error> {
    let m = 4usize;
    let lg_n = (n as f64).log2();
    let threshold = (lg_n * ((m as f64).log2() + lg_n.log2())).powi(2);
    let piece_len = n / 2;
    if n < 8 || (piece_len as f64) < threshold {
        return Err(Error::UnsatisfiableGenerator(format!(
            "n={n} too small for the long-strings family (threshold {threshold:.0})"
        )));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let text = random_symbols(n, 2, &mut rng);
    let starts = [1, n / 4 + 1, n / 2 + 1];
    let mut dict: Vec<Vec<u8>> = starts
        .iter()
        .map(|&s| text[s - 1..s - 1 + piece_len].to_vec())
        .collect();
    dict.push(random_symbols(12 * n, 2, &mut rng));
    let inst = Instance::new(text, dict, Alphabet::binary())?;
    let witness = Cover {
        positions: starts.to_vec(),
        indices: vec![1, 2, 3],
    };
    assert!(
        validate_cover(&inst, &witness),
        "long-strings chain must tile the text"
    );
    Ok(inst)
}

// ---------------------------------------------------------------------------
// benchmark runner
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EngineKind {
    Classical,
    QuantumSim,
    Naive,
}

impl EngineKind {
    pub fn name(&self) -> &'static str {
        match self {
            EngineKind::Classical => "classical",
            EngineKind::QuantumSim => "quantum-sim",
            EngineKind::Naive => "naive",
        }
    }

    pub fn parse(s: &str) -> Option<EngineKind> {
        match s {
            "classical" => Some(EngineKind::Classical),
            "quantum-sim" => Some(EngineKind::QuantumSim),
            "naive" => Some(EngineKind::Naive),
            _ => None,
        }
    }
}

/// Runs one engine with default settings and the given seed.
pub fn run_engine(kind: EngineKind, inst: &Instance, seed: u64) -> Result<SolveResult, Error> {
    match kind {
        EngineKind::Classical => solve_classical(
            inst,
            &ClassicalConfig {
                seed,
                ..ClassicalConfig::default()
            },
        ),
        EngineKind::QuantumSim => solve_quantum(
            inst,
            &QuantumConfig {
                seed,
                ..QuantumConfig::default()
            },
        ),
        EngineKind::Naive => Ok(solve_naive(inst)),
    }
}

#[derive(Debug, Clone)]
pub struct BenchPlan {
    pub engines: Vec<EngineKind>,
    pub sizes: Vec<usize>,
    pub repeats: usize,
    pub seed: u64,
}

/// One benchmark run, in the external table layout.
#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub engine: String,
    pub family: String,
    pub n: usize,
    pub m: usize,
    #[serde(rename = "L")]
    pub total_len: usize,
    pub seed: u64,
    pub feasible: bool,
    #[serde(rename = "characterQueries")]
    pub character_queries: u64,
    #[serde(rename = "hashEvals")]
    pub hash_evals: u64,
    #[serde(rename = "compareCalls")]
    pub compare_calls: u64,
    pub elapsed_ns: u64,
}

/// Runs every (engine, size, repeat) cell on the near-linear family. Cells
/// are independent and run data-parallel when the `parallel` feature is on;
/// every engine sees the same instance for a given (size, repeat).
pub fn bench_run(plan: &BenchPlan) -> Result<Vec<BenchRow>, Error> {
    let mut cells = Vec::new();
    for &engine in &plan.engines {
        for &n in &plan.sizes {
            for rep in 0..plan.repeats {
                cells.push((engine, n, rep));
            }
        }
    }
    let rows = exec::map_batch(&cells, |&(engine, n, rep)| -> Result<BenchRow, Error> {
        let gen_seed = exec::cell_seed(plan.seed, ((rep as u64) << 40) ^ n as u64);
        let inst = gen_scaling(n, gen_seed)?;
        let solve_seed = exec::cell_seed(gen_seed, engine as u64 + 1);
        let res = run_engine(engine, &inst, solve_seed)?;
        Ok(BenchRow {
            engine: engine.name().into(),
            family: "scaling".into(),
            n,
            m: inst.dict_len(),
            total_len: inst.total_dict_len(),
            seed: solve_seed,
            feasible: res.feasible(),
            character_queries: res.ledger.character_queries,
            hash_evals: res.ledger.hash_evals,
            compare_calls: res.ledger.compare_calls,
            elapsed_ns: res.ledger.elapsed_ns,
        })
    });
    rows.into_iter().collect()
}

/// Median and interquartile range of ledger totals per (engine, n) cell.
#[derive(Debug, Clone, Serialize)]
pub struct CellSummary {
    pub engine: String,
    pub n: usize,
    pub runs: usize,
    pub median_total: u64,
    pub iqr_total: u64,
    pub median_elapsed_ns: u64,
}

pub fn summarize(rows: &[BenchRow]) -> Vec<CellSummary> {
    let mut keys: Vec<(String, usize)> = Vec::new();
    for row in rows {
        let key = (row.engine.clone(), row.n);
        if !keys.contains(&key) {
            keys.push(key);
        }
    }
    keys.into_iter()
        .map(|(engine, n)| {
            let mut totals: Vec<u64> = Vec::new();
            let mut elapsed: Vec<u64> = Vec::new();
            for row in rows.iter().filter(|r| r.engine == engine && r.n == n) {
                totals.push(row.character_queries + row.hash_evals + row.compare_calls);
                elapsed.push(row.elapsed_ns);
            }
            totals.sort_unstable();
            elapsed.sort_unstable();
            CellSummary {
                engine,
                n,
                runs: totals.len(),
                median_total: median(&totals),
                iqr_total: quartile(&totals, 3).saturating_sub(quartile(&totals, 1)),
                median_elapsed_ns: median(&elapsed),
            }
        })
        .collect()
}

fn median(sorted: &[u64]) -> u64 {
    if sorted.is_empty() {
        return 0;
    }
    let mid = sorted.len() / 2;
    if sorted.len() % 2 == 1 {
        sorted[mid]
    } else {
        (sorted[mid - 1] + sorted[mid]) / 2
    }
}

fn quartile(sorted: &[u64], q: usize) -> u64 {
    if sorted.is_empty() {
        return 0;
    }
    sorted[(q * (sorted.len() - 1)) / 4]
}

pub fn rows_to_json(rows: &[BenchRow]) -> serde_json::Result<String> {
    serde_json::to_string_pretty(rows)
}

pub fn rows_to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from(
        "engine,family,n,m,L,seed,feasible,characterQueries,hashEvals,compareCalls,elapsed_ns\n",
    );
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{}\n",
            r.engine,
            r.family,
            r.n,
            r.m,
            r.total_len,
            r.seed,
            r.feasible,
            r.character_queries,
            r.hash_evals,
            r.compare_calls,
            r.elapsed_ns
        ));
    }
    out
}
