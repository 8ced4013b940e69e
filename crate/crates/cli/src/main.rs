use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use asnorm_cli::{render, run, FSpec, Format, Mode, PencilGrid, RegimeKind, RunConfig};
use clap::Parser;

/// Certify projective normality of Artin-Schreier curves y^q + y = f(x).
#[derive(Debug, Parser)]
#[command(name = "asnorm", version)]
struct Cli {
    /// single | sweep | pencil | quadrics
    #[arg(long, default_value = "single")]
    mode: Mode,
    /// Characteristic.
    #[arg(long)]
    p: Option<u64>,
    /// Extension degree, q = p^k.
    #[arg(long, default_value_t = 1)]
    k: u32,
    /// Degree of f.
    #[arg(long)]
    m: Option<u32>,
    /// CASE2 twist (single modes) or largest twist (sweep).
    #[arg(long)]
    t: Option<u32>,
    /// CASE1 | CASE2
    #[arg(long)]
    regime: Option<RegimeKind>,
    /// x^m, random, or comma-separated base-p encodings of the coefficients, low-to-high.
    #[arg(long, default_value = "x^m")]
    f: FSpec,
    #[arg(long)]
    seed: Option<u64>,
    /// Extra values of s checked beyond m - 1.
    #[arg(long, default_value_t = 2)]
    s_extra: u64,
    #[arg(long, default_value_t = 16)]
    max_q: u64,
    /// Random f per curve in a sweep.
    #[arg(long, default_value_t = 2)]
    n_random: u32,
    /// json | csv
    #[arg(long, default_value = "json")]
    format: Format,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Include the witness table.
    #[arg(long)]
    witnesses: bool,
    /// a_max,b_max,delta[,delta...]
    #[arg(long)]
    pencil_grid: Option<PencilGrid>,
    /// Record wall-clock time (output is then not reproducible).
    #[arg(long)]
    timing: bool,
}

impl From<Cli> for RunConfig {
    fn from(c: Cli) -> Self {
        RunConfig {
            mode: c.mode,
            p: c.p,
            k: c.k,
            m: c.m,
            t: c.t,
            regime: c.regime,
            f: c.f,
            seed: c.seed,
            s_extra: c.s_extra,
            max_q: c.max_q,
            n_random: c.n_random,
            format: c.format,
            out: c.out,
            witnesses: c.witnesses,
            pencil_grid: c.pencil_grid.unwrap_or_default(),
            timing: c.timing,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let cfg = RunConfig::from(cli);
    let outcome = match run(&cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("asnorm: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let bytes = match render(&outcome, cfg.format) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("asnorm: {e}");
            return ExitCode::from(1);
        }
    };
    let written = match &cfg.out {
        Some(path) => std::fs::write(path, &bytes),
        None => std::io::stdout().write_all(&bytes),
    };
    if let Err(e) = written {
        eprintln!("asnorm: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(outcome.exit_code as u8)
}
