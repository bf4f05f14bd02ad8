//! Command-line front end: solve / verify / gen / bench.
//!
//! Exit codes: 0 on success (a well-formed "infeasible" answer and a clean
//! "invalid" verify verdict are successes), 1 on usage errors, 2 on I/O or
//! format errors.

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use textcover::classical::{solve_classical, ClassicalConfig, SolveResult};
use textcover::harness::{self, BenchPlan, EngineKind, Family, GenSpec};
use textcover::hashing::PrimeMode;
use textcover::instance::{check_cover, Alphabet, Cover, Instance};
use textcover::oracle::solve_naive;
use textcover::quantum::{default_gamma, solve_quantum, QuantumConfig, QueryMode};
use textcover::QueryLedger;

#[derive(Parser)]
#[command(
    name = "textcover",
    about = "Decide whether a text can be tiled by dictionary strings, and produce the tiling",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Classical,
    #[value(name = "quantum-sim")]
    QuantumSim,
    Naive,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlphabetArg {
    Binary,
    Dna,
    Ascii,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Random,
    Planted,
    #[value(name = "lb-L")]
    LbL,
    #[value(name = "lb-n")]
    LbN,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve an instance and print a run report as JSON.
    Solve {
        #[arg(long)]
        text: PathBuf,
        #[arg(long)]
        dict: PathBuf,
        #[arg(long)]
        engine: EngineArg,
        /// Error probability for the classical engine.
        #[arg(long, default_value_t = 0.01)]
        epsilon: f64,
        /// Error parameter for the quantum simulation (default m*log2 n).
        #[arg(long)]
        gamma: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Skip the character-exact re-check of a returned cover.
        #[arg(long)]
        no_verify: bool,
        /// Also write the ledger snapshot to this file.
        #[arg(long)]
        stats: Option<PathBuf>,
        /// Force an alphabet instead of inferring it from the input bytes.
        #[arg(long)]
        alphabet: Option<AlphabetArg>,
        /// Sample the classical prime from the first-r-primes pool instead of
        /// one random 61-bit prime.
        #[arg(long)]
        faithful_prime: bool,
    },
    /// Check a cover file against an instance.
    Verify {
        #[arg(long)]
        text: PathBuf,
        #[arg(long)]
        dict: PathBuf,
        #[arg(long)]
        cover: PathBuf,
        #[arg(long)]
        alphabet: Option<AlphabetArg>,
    },
    /// Generate an instance (text.txt and dict.txt) into a directory.
    Gen {
        #[arg(long)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long)]
        len_min: Option<usize>,
        #[arg(long)]
        len_max: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Needle families: plant the needle (lb-L: makes the instance
        /// feasible; lb-n: makes it infeasible).
        #[arg(long, default_value_t = false)]
        planted: bool,
    },
    /// Sweep engines over instance sizes and write the stats table.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        engines: Vec<EngineArg>,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long)]
        repeats: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; a .csv suffix selects CSV, anything else JSON.
        #[arg(long)]
        out: PathBuf,
    },
}

/// A solve outcome in the external report layout.
#[derive(Debug, Serialize, Deserialize)]
pub struct RunReport {
    pub feasible: bool,
    pub pieces: Vec<Piece>,
    pub stats: QueryLedger,
    pub engine: String,
    pub seed: u64,
    pub epsilon: Option<f64>,
    pub gamma: Option<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Piece {
    pub pos: usize,
    pub dict_index: usize,
}

/// Cover file layout accepted by `verify`: any JSON object carrying a
/// `pieces` array (a full run report works as-is).
#[derive(Debug, Deserialize)]
struct CoverFile {
    pieces: Vec<Piece>,
}

/// Data/format error carrying a diagnostic; maps to exit code 2.
#[derive(Debug)]
pub enum CliError {
    Data(String),
}

impl CliError {
    fn data(msg: impl Into<String>) -> Self {
        CliError::Data(msg.into())
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Data(msg) => write!(f, "{msg}"),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Entry point used by `main` and by tests; writes reports to `stdout` and
/// returns the process exit code.
pub fn run_with<I, T, W>(args: I, stdout: &mut W) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own message (including --help/--version, which
            // are not errors)
            let _ = write!(stdout, "{e}");
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match dispatch(cli.cmd, stdout) {
        Ok(()) => 0,
        Err(CliError::Data(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    run_with(args, &mut lock)
}

fn dispatch<W: Write>(cmd: Cmd, stdout: &mut W) -> CliResult<()> {
    match cmd {
        Cmd::Solve {
            text,
            dict,
            engine,
            epsilon,
            gamma,
            seed,
            no_verify,
            stats,
            alphabet,
            faithful_prime,
        } => {
            let inst = decode_instance(&text, &dict, alphabet.map(AlphabetChoice::from))?;
            let report = run_solve(
                &inst,
                engine,
                epsilon,
                gamma,
                seed,
                !no_verify,
                faithful_prime,
            )?;
            if let Some(path) = stats {
                write_file(&path, &to_json(&report.stats)?)?;
            }
            writeln!(stdout, "{}", to_json(&report)?).map_err(io_err)?;
            Ok(())
        }
        Cmd::Verify {
            text,
            dict,
            cover,
            alphabet,
        } => {
            let inst = decode_instance(&text, &dict, alphabet.map(AlphabetChoice::from))?;
            let raw = read_file(&cover)?;
            let parsed: CoverFile = serde_json::from_str(&raw).map_err(|e| {
                CliError::data(format!("malformed cover file {}: {e}", cover.display()))
            })?;
            let cover = Cover {
                positions: parsed.pieces.iter().map(|p| p.pos).collect(),
                indices: parsed.pieces.iter().map(|p| p.dict_index).collect(),
            };
            match check_cover(&inst, &cover) {
                Ok(()) => writeln!(stdout, "valid").map_err(io_err)?,
                Err(violation) => writeln!(stdout, "invalid: {violation}").map_err(io_err)?,
            }
            Ok(())
        }
        Cmd::Gen {
            family,
            n,
            m,
            len_min,
            len_max,
            seed,
            out,
            planted,
        } => {
            let family = match family {
                FamilyArg::Random => Family::Random,
                FamilyArg::Planted => Family::Planted,
                FamilyArg::LbL => Family::LbL,
                FamilyArg::LbN => Family::LbN,
            };
            let len_min = len_min.unwrap_or(1);
            let len_max = len_max.unwrap_or_else(|| match family {
                Family::Planted => n.div_ceil(m.max(1)).max(len_min),
                _ => (n / 2).max(len_min),
            });
            let spec = GenSpec {
                family,
                n,
                m,
                len_min,
                len_max,
                alphabet: Alphabet::binary(),
                seed,
                planted,
            };
            let inst = harness::generate(&spec).map_err(|e| CliError::data(e.to_string()))?;
            std::fs::create_dir_all(&out)
                .map_err(|e| CliError::data(format!("cannot create {}: {e}", out.display())))?;
            let text_path = out.join("text.txt");
            let dict_path = out.join("dict.txt");
            let alphabet = inst.alphabet();
            let mut text_bytes = alphabet.decode(inst.text());
            text_bytes.push(b'\n');
            write_bytes(&text_path, &text_bytes)?;
            let mut dict_bytes = Vec::new();
            for j in 1..=inst.dict_len() {
                dict_bytes.extend_from_slice(&alphabet.decode(inst.dict_string(j)));
                dict_bytes.push(b'\n');
            }
            write_bytes(&dict_path, &dict_bytes)?;
            writeln!(
                stdout,
                "wrote {} and {}",
                text_path.display(),
                dict_path.display()
            )
            .map_err(io_err)?;
            Ok(())
        }
        Cmd::Bench {
            engines,
            sizes,
            repeats,
            seed,
            out,
        } => {
            let engines = engines
                .iter()
                .map(|e| match e {
                    EngineArg::Classical => EngineKind::Classical,
                    EngineArg::QuantumSim => EngineKind::QuantumSim,
                    EngineArg::Naive => EngineKind::Naive,
                })
                .collect();
            let plan = BenchPlan {
                engines,
                sizes,
                repeats,
                seed,
            };
            let rows = harness::bench_run(&plan).map_err(|e| CliError::data(e.to_string()))?;
            let payload = if out.extension().is_some_and(|e| e == "csv") {
                harness::rows_to_csv(&rows)
            } else {
                harness::rows_to_json(&rows)
                    .map_err(|e| CliError::data(format!("cannot encode table: {e}")))?
            };
            write_file(&out, &payload)?;
            for cell in harness::summarize(&rows) {
                writeln!(
                    stdout,
                    "{} n={}: median total {} ops (IQR {}), median {} ns over {} runs",
                    cell.engine,
                    cell.n,
                    cell.median_total,
                    cell.iqr_total,
                    cell.median_elapsed_ns,
                    cell.runs
                )
                .map_err(io_err)?;
            }
            Ok(())
        }
    }
}

fn run_solve(
    inst: &Instance,
    engine: EngineArg,
    epsilon: f64,
    gamma: Option<u64>,
    seed: u64,
    verify_final: bool,
    faithful_prime: bool,
) -> CliResult<RunReport> {
    let (result, engine_name, eps_echo, gamma_echo): (SolveResult, &str, Option<f64>, Option<u64>) =
        match engine {
            EngineArg::Classical => {
                let cfg = ClassicalConfig {
                    epsilon,
                    prime_mode: if faithful_prime {
                        PrimeMode::Faithful
                    } else {
                        PrimeMode::Fast
                    },
                    seed,
                    verify_final,
                };
                let res = solve_classical(inst, &cfg).map_err(|e| CliError::data(e.to_string()))?;
                (res, "classical", Some(epsilon), None)
            }
            EngineArg::QuantumSim => {
                let resolved =
                    gamma.unwrap_or_else(|| default_gamma(inst.dict_len(), inst.text_len()));
                let cfg = QuantumConfig {
                    gamma: Some(resolved),
                    c_q: 3.0,
                    mode: QueryMode::Model,
                    seed,
                    error_injection: false,
                    verify_final,
                };
                let res = solve_quantum(inst, &cfg).map_err(|e| CliError::data(e.to_string()))?;
                (res, "quantum-sim", None, Some(resolved))
            }
            EngineArg::Naive => (solve_naive(inst), "naive", None, None),
        };
    let pieces = result
        .cover
        .as_ref()
        .map(|c| {
            c.positions
                .iter()
                .zip(&c.indices)
                .map(|(&pos, &dict_index)| Piece { pos, dict_index })
                .collect()
        })
        .unwrap_or_default();
    Ok(RunReport {
        feasible: result.feasible(),
        pieces,
        stats: result.ledger,
        engine: engine_name.into(),
        seed,
        epsilon: eps_echo,
        gamma: gamma_echo,
    })
}

/// Reads the instance: the text is the first line of `text_path`, the
/// dictionary is one string per line of `dict_path` in order (1-based). The
/// alphabet is inferred from the bytes unless forced.
pub fn decode_instance(
    text_path: &Path,
    dict_path: &Path,
    alphabet: Option<AlphabetChoice>,
) -> CliResult<Instance> {
    let text_raw = read_file(text_path)?;
    let text_line = text_raw
        .split('\n')
        .next()
        .unwrap_or("")
        .trim_end_matches('\r');
    if text_line.is_empty() {
        return Err(CliError::data(format!(
            "{}: empty text",
            text_path.display()
        )));
    }

    let dict_raw = read_file(dict_path)?;
    let mut lines: Vec<&str> = dict_raw.split('\n').collect();
    if lines.last() == Some(&"") {
        lines.pop();
    }
    if lines.is_empty() {
        return Err(CliError::data(format!(
            "{}: empty dictionary",
            dict_path.display()
        )));
    }

    let alphabet = match alphabet {
        Some(AlphabetChoice::Binary) => Alphabet::binary(),
        Some(AlphabetChoice::Dna) => Alphabet::dna(),
        Some(AlphabetChoice::Ascii) => Alphabet::ascii(),
        None => Alphabet::infer(
            std::iter::once(text_line.as_bytes()).chain(lines.iter().map(|l| l.as_bytes())),
        ),
    };

    let text = alphabet
        .encode(text_line.as_bytes())
        .map_err(|e| CliError::data(format!("{} line 1: {e}", text_path.display())))?;
    let mut dict = Vec::with_capacity(lines.len());
    for (idx, line) in lines.iter().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.is_empty() {
            return Err(CliError::data(format!(
                "{} line {}: empty dictionary string",
                dict_path.display(),
                idx + 1
            )));
        }
        let encoded = alphabet.encode(line.as_bytes()).map_err(|e| {
            CliError::data(format!("{} line {}: {e}", dict_path.display(), idx + 1))
        })?;
        dict.push(encoded);
    }
    Instance::new(text, dict, alphabet).map_err(|e| CliError::data(e.to_string()))
}

/// Public alphabet selector mirroring the `--alphabet` flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphabetChoice {
    Binary,
    Dna,
    Ascii,
}

impl From<AlphabetArg> for AlphabetChoice {
    fn from(a: AlphabetArg) -> Self {
        match a {
            AlphabetArg::Binary => AlphabetChoice::Binary,
            AlphabetArg::Dna => AlphabetChoice::Dna,
            AlphabetArg::Ascii => AlphabetChoice::Ascii,
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> CliResult<String> {
    serde_json::to_string_pretty(value).map_err(|e| CliError::data(format!("encoding failed: {e}")))
}

fn read_file(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::data(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, payload: &str) -> CliResult<()> {
    std::fs::write(path, payload)
        .map_err(|e| CliError::data(format!("cannot write {}: {e}", path.display())))
}

fn write_bytes(path: &Path, payload: &[u8]) -> CliResult<()> {
    std::fs::write(path, payload)
        .map_err(|e| CliError::data(format!("cannot write {}: {e}", path.display())))
}

fn io_err(e: std::io::Error) -> CliError {
    CliError::data(format!("cannot write output: {e}"))
}
