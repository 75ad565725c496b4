use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use toric_core::cluster::{dendrogram, ChiSquared};
use toric_core::oracle::{
    check_linear_criterion, enumerate_kernel_binomials, DEFAULT_BOUND, DEFAULT_MAX_K,
};
use toric_core::{
    analyze_merge, integer_kernel, merge_columns, normal_form, toric_ideal, Error,
    IdealPresentation, ModelMatrix, MonomialMap, OracleConfig, TermOrder,
};

use crate::formats;

#[derive(Parser, Debug)]
#[command(
    name = "toric",
    version,
    about = "Toric ideals of log-linear models and the effect of merging parameters"
)]
pub struct Cli {
    /// Worker threads for parallel checks (output does not depend on it).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the toric ideal of a model matrix.
    Ideal {
        matrix: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Report what merging two columns adds to the ideal.
    Merge {
        matrix: PathBuf,
        /// 1-based column indices; column 1 is the constant column.
        #[arg(long, num_args = 2, value_names = ["A", "B"], required = true)]
        cols: Vec<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Agglomerate the rows and columns of a contingency table.
    Cluster {
        table: PathBuf,
        /// Stop after this many merges.
        #[arg(long, conflicts_with = "full")]
        steps: Option<usize>,
        /// Run until one row cluster and one column cluster remain (default).
        #[arg(long)]
        full: bool,
        /// Write the trace JSON to this file.
        #[arg(long)]
        trace_out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Check an ideal against brute-force kernel enumeration.
    Verify {
        matrix: PathBuf,
        /// Check the merge of these 1-based columns instead.
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        merge: Option<Vec<usize>>,
        /// Use this ideal (JSON) instead of computing it.
        #[arg(long, conflicts_with = "merge")]
        ideal: Option<PathBuf>,
        /// Largest absolute exponent entry enumerated.
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Print a basis of the integer kernel lattice.
    Kernel {
        matrix: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// Term order: lex, degrevlex or degrevlex-last:<v>.
    #[arg(long, default_value = "degrevlex")]
    order: String,
    /// JSON output.
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Plain text output.
    #[arg(long)]
    text: bool,
}

/// Exit status 1: a guard or computation failure, or a failed check.
/// Exit status 2: bad input.
#[derive(Debug)]
pub enum Failure {
    Input(anyhow::Error),
    Compute(anyhow::Error),
    Check(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Compute(_) | Failure::Check(_) => 1,
        }
    }
}

fn core(e: Error) -> Failure {
    match e {
        Error::GuardExceeded { .. } | Error::Overflow | Error::Invariant(_) => {
            Failure::Compute(e.into())
        }
        _ => Failure::Input(e.into()),
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

fn read(path: &Path) -> Outcome<String> {
    fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))
        .map_err(Failure::Input)
}

fn load_matrix(path: &Path) -> Outcome<ModelMatrix> {
    formats::parse_matrix(&read(path)?)
        .with_context(|| format!("in {}", path.display()))
        .map_err(Failure::Input)
}

fn order(name: &str, dim: usize) -> Outcome<TermOrder> {
    TermOrder::parse(name, dim)
        .ok_or_else(|| Failure::Input(anyhow!("unknown term order `{name}`")))
}

fn columns(cols: &[usize]) -> Outcome<(usize, usize)> {
    match cols {
        [a, b] if *a >= 1 && *b >= 1 => Ok((a - 1, b - 1)),
        _ => Err(Failure::Input(anyhow!("column indices are 1-based"))),
    }
}

fn max_k() -> Outcome<usize> {
    match std::env::var("TORIC_MAX_K") {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::Input(anyhow!(
                "TORIC_MAX_K must be a non-negative integer, got `{v}`"
            ))
        }),
        Err(_) => Ok(DEFAULT_MAX_K),
    }
}

fn emit(out: &mut dyn Write, s: &str) -> Outcome<()> {
    out.write_all(s.as_bytes())
        .context("cannot write output")
        .map_err(Failure::Compute)
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Completeness of `ideal` against the bounded kernel of `m`, with the
/// normal forms spread over the thread pool.
fn complete(
    ideal: &IdealPresentation,
    m: &ModelMatrix,
    config: &OracleConfig,
) -> Outcome<(bool, usize)> {
    let psi = MonomialMap::new(m);
    if ideal.ambient_dim() != m.nrows() {
        return Err(Failure::Input(anyhow!(
            "ideal has {} variables but the matrix has {} rows",
            ideal.ambient_dim(),
            m.nrows()
        )));
    }
    if !ideal.groebner().iter().all(|g| psi.annihilates(g)) {
        return Ok((false, 0));
    }
    let kernel = enumerate_kernel_binomials(m, config).map_err(core)?;
    let reduced: Vec<bool> = kernel
        .par_iter()
        .map(|b| normal_form(b, ideal.groebner(), ideal.order()).map(|r| r.is_zero()))
        .collect::<toric_core::Result<_>>()
        .map_err(core)?;
    Ok((reduced.iter().all(|&z| z), kernel.len()))
}

fn run(cli: Cli, out: &mut dyn Write) -> Outcome<()> {
    match cli.command {
        Command::Ideal { matrix, common } => {
            let m = load_matrix(&matrix)?;
            let o = order(&common.order, m.nrows())?;
            let ideal = toric_ideal(&m, &o).map_err(core)?;
            if common.json {
                emit(out, &pretty(&formats::ideal_json(&ideal, m.row_labels())))
            } else {
                emit(out, &formats::ideal_text(&ideal, m.row_labels()))
            }
        }
        Command::Merge {
            matrix,
            cols,
            common,
        } => {
            let m = load_matrix(&matrix)?;
            let (a, b) = columns(&cols)?;
            let o = order(&common.order, m.nrows())?;
            let report = analyze_merge(&m, a, b, &o).map_err(core)?;
            if common.text {
                emit(out, &formats::report_text(&report))
            } else {
                emit(out, &pretty(&formats::report_json(&report)))
            }
        }
        Command::Cluster {
            table,
            steps,
            full: _,
            trace_out,
            common,
        } => {
            let t = formats::parse_table(&read(&table)?)
                .with_context(|| format!("in {}", table.display()))
                .map_err(Failure::Input)?;
            let o = order(&common.order, t.nrows() * t.ncols())?;
            let trace = dendrogram(&t, &o, &ChiSquared, steps).map_err(core)?;
            let json = pretty(&formats::trace_json(&trace, &t));
            if let Some(path) = trace_out {
                fs::write(&path, &json)
                    .with_context(|| format!("cannot write {}", path.display()))
                    .map_err(Failure::Input)?;
            }
            if common.json {
                emit(out, &json)
            } else {
                emit(out, &formats::trace_summary(&trace, &t))
            }
        }
        Command::Verify {
            matrix,
            merge,
            ideal,
            bound,
            common,
        } => {
            let m = load_matrix(&matrix)?;
            let config = OracleConfig {
                bound,
                max_k: max_k()?,
            };
            let mut lines: Vec<(String, bool)> = Vec::new();
            match (merge, ideal) {
                (Some(cols), _) => {
                    let (a, b) = columns(&cols)?;
                    let merged = merge_columns(&m, a, b).map_err(core)?;
                    let o = order(&common.order, m.nrows())?;
                    let (base, tilde) =
                        rayon::join(|| toric_ideal(&m, &o), || toric_ideal(&merged, &o));
                    let (base, tilde) = (base.map_err(core)?, tilde.map_err(core)?);
                    let contained = tilde.contains_all(base.groebner()).map_err(core)?;
                    lines.push(("base ideal contained in merged ideal".into(), contained));
                    let (ok, n) = complete(&tilde, &merged, &config)?;
                    lines.push((
                        format!("merged ideal complete at bound {bound} ({n} kernel vectors)"),
                        ok,
                    ));
                    let linear = check_linear_criterion(&m, a, b).map_err(core)?;
                    lines.push(("linear criterion matches direct scan".into(), linear));
                }
                (None, Some(path)) => {
                    let (ideal, _) = formats::parse_ideal(&read(&path)?, Some(m.row_labels()))
                        .with_context(|| format!("in {}", path.display()))
                        .map_err(Failure::Input)?;
                    let (ok, n) = complete(&ideal, &m, &config)?;
                    lines.push((
                        format!("ideal complete at bound {bound} ({n} kernel vectors)"),
                        ok,
                    ));
                }
                (None, None) => {
                    let o = order(&common.order, m.nrows())?;
                    let ideal = toric_ideal(&m, &o).map_err(core)?;
                    let (ok, n) = complete(&ideal, &m, &config)?;
                    lines.push((
                        format!("ideal complete at bound {bound} ({n} kernel vectors)"),
                        ok,
                    ));
                }
            }
            let pass = lines.iter().all(|(_, ok)| *ok);
            if common.json {
                let checks: Vec<_> = lines
                    .iter()
                    .map(|(name, ok)| serde_json::json!({"check": name, "pass": ok}))
                    .collect();
                emit(
                    out,
                    &pretty(&serde_json::json!({"pass": pass, "checks": checks})),
                )?;
            } else {
                for (name, ok) in &lines {
                    emit(
                        out,
                        &format!("{} {name}\n", if *ok { "PASS" } else { "FAIL" }),
                    )?;
                }
            }
            if pass {
                Ok(())
            } else {
                Err(Failure::Check("verification failed".into()))
            }
        }
        Command::Kernel { matrix, common } => {
            let m = load_matrix(&matrix)?;
            let lattice = integer_kernel(&m);
            if common.json {
                emit(out, &pretty(&formats::kernel_json(&lattice, &m)))
            } else {
                let mut s = format!(
                    "rank {} (matrix rank {}, degrees of freedom {})\n",
                    lattice.rank(),
                    toric_core::rank(&m),
                    toric_core::degrees_of_freedom(&m)
                );
                for v in lattice.vectors() {
                    let row: Vec<String> = v.iter().map(ToString::to_string).collect();
                    s.push_str(&row.join(" "));
                    s.push('\n');
                }
                emit(out, &s)
            }
        }
    }
}

pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(cli, &mut lock) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let code = f.code();
            match f {
                Failure::Input(e) | Failure::Compute(e) => eprintln!("error: {e:#}"),
                Failure::Check(msg) => eprintln!("{msg}"),
            }
            ExitCode::from(code)
        }
    }
}
