//! `dindex`: distinguishing-index computations over graph6 input.
//!
//! Exit codes: 0 when every row passed (or was filtered out), 1 when any
//! row failed, was unknown or could not be read, 2 on usage errors.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use dindex::config::{Mode, RunConfig};
use dindex::graph6::write_graph6;
use dindex::pool::map_ordered;
use dindex::rows::{aut_row, bound_row, construct_row, exact_row, AutRow, Summary};
use dindex_core::aut::Engine;
use dindex_core::families::{self, BipartiteValue};
use serde_json::json;

#[derive(Parser)]
#[command(name = "dindex", version, about = "Distinguishing index of graphs given as graph6 lines")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact index of each graph, one JSON line per graph.
    Exact {
        #[command(flatten)]
        io: Input,
        /// Largest label count to try (default: the number of edges).
        #[arg(long)]
        d_max: Option<usize>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Constructed labeling within the mode's bound, one certificate per graph.
    Construct {
        #[command(flatten)]
        io: Input,
        #[arg(long, default_value_t = Mode::Thm23)]
        mode: Mode,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Checks every graph against the mode's bound and prints a report.
    VerifyCorpus {
        #[command(flatten)]
        io: Input,
        #[arg(long, default_value_t = Mode::Thm23)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Closed-form index of a named family.
    Formula {
        #[arg(value_enum)]
        family: FormulaFamily,
        params: Vec<usize>,
    },
    /// Automorphism group order and generators of each graph.
    Aut {
        #[command(flatten)]
        io: Input,
        #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
        engine: EngineArg,
        /// Largest order enumerated exhaustively under `auto`.
        #[arg(long, default_value_t = RunConfig::default().brute_force_cap)]
        brute_force_cap: usize,
    },
    /// Prints a family member as graph6.
    Gen {
        #[arg(value_enum)]
        family: GenFamily,
        params: Vec<usize>,
        /// Seed for `random-regular`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct Input {
    /// graph6 file, one graph per line; stdin when absent or `-`.
    input: Option<PathBuf>,
}

impl Input {
    fn open(&self) -> anyhow::Result<Box<dyn BufRead>> {
        match &self.input {
            Some(p) if p.as_os_str() != "-" => {
                let f = File::open(p).with_context(|| format!("cannot open {}", p.display()))?;
                Ok(Box::new(BufReader::new(f)))
            }
            _ => Ok(Box::new(io::stdin().lock())),
        }
    }
}

#[derive(Args)]
struct RunArgs {
    /// Search nodes per exact solve.
    #[arg(long, default_value_t = RunConfig::default().budget_nodes)]
    budget_nodes: u64,
    /// Milliseconds per exact solve.
    #[arg(long, default_value_t = RunConfig::default().budget_ms)]
    budget_ms: u64,
    /// Base seed of the constructors' randomized retries.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads (default: available cores).
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long, default_value_t = RunConfig::default().repair_attempts)]
    repair_attempts: usize,
    /// Largest order whose automorphisms are enumerated exhaustively.
    #[arg(long, default_value_t = RunConfig::default().brute_force_cap)]
    brute_force_cap: usize,
}

impl RunArgs {
    fn config(&self, mode: Mode) -> RunConfig {
        let default = RunConfig::default();
        RunConfig {
            brute_force_cap: self.brute_force_cap,
            budget_nodes: self.budget_nodes,
            budget_ms: self.budget_ms,
            repair_attempts: self.repair_attempts,
            seed: self.seed,
            workers: self.workers.unwrap_or(default.workers),
            mode,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Jsonl,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Auto,
    Exhaustive,
    Refinement,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormulaFamily {
    Path,
    Cycle,
    Friendship,
    CompleteBipartite,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFamily {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Friendship,
    Petersen,
    /// `n` followed by the jumps.
    Circulant,
    /// `n k`, drawn with `--seed`.
    RandomRegular,
}

/// Bad arguments found after parsing.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct Usage(String);

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn params<const N: usize>(name: &str, params: &[usize]) -> anyhow::Result<[usize; N]> {
    params
        .try_into()
        .map_err(|_| usage(format!("{name} takes {N} parameter(s), got {}", params.len())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("dindex: {e:#}");
            ExitCode::from(if e.is::<Usage>() { 2 } else { 1 })
        }
    }
}

fn checked(run: &RunArgs, mode: Mode) -> anyhow::Result<RunConfig> {
    let cfg = run.config(mode);
    cfg.validate().map_err(|e| usage(e.to_string()))?;
    Ok(cfg)
}

fn json_line(out: &mut impl Write, value: &impl serde::Serialize) -> anyhow::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

/// Runs one subcommand; `Ok(false)` when some row did not pass.
fn run(command: Command) -> anyhow::Result<bool> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut all = true;
    match command {
        Command::Exact { io, d_max, run } => {
            let cfg = checked(&run, Mode::default())?;
            if d_max == Some(0) {
                return Err(usage("--d-max must be positive"));
            }
            map_ordered(io.open()?, cfg.workers, |l| exact_row(l, &cfg, d_max), |row| {
                all &= row.passed();
                json_line(&mut out, &row)
            })?;
        }
        Command::Construct { io, mode, run } => {
            let cfg = checked(&run, mode)?;
            map_ordered(io.open()?, cfg.workers, |l| construct_row(l, mode, &cfg), |row| {
                all &= row.passed();
                json_line(&mut out, &row)
            })?;
        }
        Command::VerifyCorpus { io, mode, format, run } => {
            let cfg = checked(&run, mode)?;
            let mut summary = Summary::new(mode);
            match format {
                Format::Jsonl => {
                    map_ordered(io.open()?, cfg.workers, |l| bound_row(l, &cfg), |row| {
                        summary.add(&row);
                        json_line(&mut out, &row)
                    })?;
                    json_line(&mut out, &json!({ "summary": summary }))?;
                }
                Format::Csv => {
                    let mut csv = csv::Writer::from_writer(&mut out);
                    map_ordered(io.open()?, cfg.workers, |l| bound_row(l, &cfg), |row| {
                        summary.add(&row);
                        csv.serialize(&row)?;
                        Ok(())
                    })?;
                    csv.flush()?;
                    drop(csv);
                    eprintln!("{}", json!({ "summary": summary }));
                }
            }
            all = summary.all_passed();
        }
        Command::Formula { family, params: p } => {
            let value = formula(family, &p)?;
            json_line(&mut out, &value)?;
        }
        Command::Aut { io, engine, brute_force_cap } => {
            let engine = match engine {
                EngineArg::Auto => Engine::Auto { brute_force_cap },
                EngineArg::Exhaustive => Engine::Exhaustive,
                EngineArg::Refinement => Engine::Refinement,
            };
            map_ordered(io.open()?, RunConfig::default().workers, |l| aut_row(l, engine), |row| {
                all &= matches!(row, AutRow::Ok { .. });
                json_line(&mut out, &row)
            })?;
        }
        Command::Gen { family, params: p, seed } => {
            let g = generate(family, &p, seed)?;
            writeln!(out, "{}", write_graph6(&g))?;
        }
    }
    out.flush()?;
    Ok(all)
}

fn formula(family: FormulaFamily, p: &[usize]) -> anyhow::Result<serde_json::Value> {
    let bad = |e: families::FormulaError| usage(e.to_string());
    Ok(match family {
        FormulaFamily::Path => {
            let [n] = params("path", p)?;
            json!({ "family": "path", "n": n, "value": families::formula_path(n).map_err(bad)? })
        }
        FormulaFamily::Cycle => {
            let [n] = params("cycle", p)?;
            json!({ "family": "cycle", "n": n, "value": families::formula_cycle(n).map_err(bad)? })
        }
        FormulaFamily::Friendship => {
            let [n] = params("friendship", p)?;
            json!({ "family": "friendship", "n": n, "value": families::formula_friendship(n as u64).map_err(bad)? })
        }
        FormulaFamily::CompleteBipartite => {
            let [a, b] = params("complete-bipartite", p)?;
            let r = families::formula_complete_bipartite(a, b).map_err(bad)?;
            let (lower, upper) = match r.value {
                BipartiteValue::Exact(v) => (v, v),
                BipartiteValue::Between(lo, hi) => (lo, hi),
            };
            let mut v = json!({
                "family": "complete-bipartite",
                "p": r.p,
                "q": r.q,
                "r": r.r,
                "case": format!("{:?}", r.case).to_lowercase(),
                "resolution": format!("{:?}", r.resolution).to_lowercase(),
                "lower": lower,
                "upper": upper,
            });
            if lower == upper {
                v["value"] = lower.into();
            }
            v
        }
    })
}

fn generate(family: GenFamily, p: &[usize], seed: u64) -> anyhow::Result<dindex_core::Graph> {
    let bad = |e: families::FamilyError| usage(e.to_string());
    match family {
        GenFamily::Path => families::path(params::<1>("path", p)?[0]).map_err(bad),
        GenFamily::Cycle => families::cycle(params::<1>("cycle", p)?[0]).map_err(bad),
        GenFamily::Complete => families::complete(params::<1>("complete", p)?[0]).map_err(bad),
        GenFamily::CompleteBipartite => {
            let [a, b] = params("complete-bipartite", p)?;
            families::complete_bipartite(a, b).map_err(bad)
        }
        GenFamily::Friendship => families::friendship(params::<1>("friendship", p)?[0]).map_err(bad),
        GenFamily::Petersen => {
            params::<0>("petersen", p)?;
            Ok(families::petersen())
        }
        GenFamily::Circulant => match p {
            [n, jumps @ ..] => families::circulant(*n, jumps).map_err(bad),
            [] => Err(usage("circulant takes n followed by jumps")),
        },
        GenFamily::RandomRegular => {
            let [n, k] = params("random-regular", p)?;
            families::random_regular(n, k, seed).map_err(bad)
        }
    }
}
