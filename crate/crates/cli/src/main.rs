//! `hookschur`: t-cores and quotients, skew (hook) Schur polynomials and
//! verification sweeps from the command line.
//!
//! Exit status: 0 on success, 1 when a check fails, 2 on a usage error.

mod output;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hookschur::partitions::{parse_shape_pair, QuotientDecomposition};
use hookschur::schur::{skew_hook_schur, Alphabet, Method};
use hookschur::verify::{
    run_sweep, verify_csp_skew, verify_csp_super, verify_factorization_super, Selector, SweepConfig,
};
use hookschur::{Partition, SkewShape};
use serde_json::{json, Value};

use output::{open, write_csv, write_document, Format};

#[derive(Parser, Debug)]
#[command(
    name = "hookschur",
    version,
    about = "Skew hook Schur polynomials, t-quotients and their root-of-unity identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; sweeps write JSON Lines for `json`.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Beta-set, t-core, t-quotient and σ sign of a partition.
    CoreQuotient {
        shape: String,
        #[arg(long)]
        t: usize,
        /// Declared length; defaults to the least multiple of t that fits.
        #[arg(long)]
        ell: Option<usize>,
    },
    /// hs_{λ/μ}(x_1..x_n / y_1..y_m), by one method or both.
    Schur {
        shape: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, value_enum, default_value = "both")]
        method: MethodArg,
    },
    /// The twisted polynomial against its predicted zero or quotient product.
    Factorize {
        shape: String,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        m: usize,
    },
    /// Orbit counts from the principal specialization at roots of unity.
    Csp {
        shape: String,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        m: usize,
    },
    /// Sweep every pair μ ⊆ λ within the bounds.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    JacobiTrudi,
    Tableaux,
    Both,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// h-special, factorize, factorize-schur, ribbon-count, divisibility,
    /// divisibility-signed, csp, csp-super or converse.
    #[arg(value_parser = parse_selector)]
    selector: Selector,
    #[arg(long, value_delimiter = ',', default_values_t = [2, 3])]
    t: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_values_t = [1, 2])]
    n: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_values_t = [0])]
    m: Vec<usize>,
    /// Single divisor of t for ribbon-count.
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, default_value_t = 8)]
    max_size: usize,
    #[arg(long)]
    max_length: Option<usize>,
    /// Worker threads; the report does not depend on it.
    #[arg(long)]
    jobs: Option<usize>,
    /// Add wall-clock time to the summary.
    #[arg(long)]
    timing: bool,
}

fn parse_selector(s: &str) -> Result<Selector, String> {
    s.parse().map_err(|e: hookschur::Error| e.to_string())
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<hookschur::Error> for Failure {
    fn from(e: hookschur::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Whether every check in the report held.
type Outcome = Result<bool, Failure>;

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    if s.contains('/') {
        return Err(Failure::Usage(format!("expected a partition, got the skew shape {s:?}")));
    }
    Ok(s.parse()?)
}

fn parse_skew(s: &str) -> Result<SkewShape, Failure> {
    let (lam, mu) = parse_shape_pair(s)?;
    Ok(SkewShape::new(lam, mu)?)
}

fn core_quotient(cli: &Cli, shape: &str, t: usize, ell: Option<usize>) -> Outcome {
    if t < 2 {
        return Err(Failure::Usage(format!("--t must be at least 2, got {t}")));
    }
    let lam = parse_partition(shape)?;
    let ell = ell.unwrap_or_else(|| {
        let ell = t * lam.length().div_ceil(t);
        eprintln!("warning: --ell not given, using {ell}");
        ell
    });
    let q = QuotientDecomposition::new(&lam, t, ell)?;
    let doc = json!({
        "input": {"command": "core-quotient", "shape": lam.to_string(), "t": t, "ell": ell},
        "beta": q.beta.entries(),
        "residueCounts": q.residue_counts,
        "core": q.core.to_string(),
        "quotient": q.quotient.iter().map(Partition::to_string).collect::<Vec<_>>(),
        "sigmaSign": q.sigma_sign,
    });
    write_document(&mut *open(cli.out.as_deref())?, cli.format, &doc)?;
    Ok(true)
}

fn schur(cli: &Cli, shape: &str, n: usize, m: usize, method: MethodArg) -> Outcome {
    let shape = parse_skew(shape)?;
    let alphabet = Alphabet::symbolic(n, m);
    let methods: &[Method] = match method {
        MethodArg::JacobiTrudi => &[Method::JacobiTrudi],
        MethodArg::Tableaux => &[Method::Tableaux],
        MethodArg::Both => &[Method::JacobiTrudi, Method::Tableaux],
    };
    let results: Vec<_> = methods.iter().map(|&meth| skew_hook_schur(&shape, &alphabet, meth)).collect();
    let agree = results.windows(2).all(|w| w[0] == w[1]);
    let doc = json!({
        "input": {"command": "schur", "shape": shape.to_string(), "n": n, "m": m,
                  "method": method.to_possible_value().expect("no skipped variants").get_name()},
        "polynomial": results[0].to_string(),
        "terms": results[0].to_json(),
        "agree": agree,
    });
    write_document(&mut *open(cli.out.as_deref())?, cli.format, &doc)?;
    if !agree {
        eprintln!("determinant: {}\ntableaux:    {}", results[0], results[1]);
    }
    Ok(agree)
}

fn factorize(cli: &Cli, shape: &str, t: usize, n: usize, m: usize) -> Outcome {
    let (lam, mu) = parse_shape_pair(shape)?;
    let v = verify_factorization_super(&lam, &mu, t, n, m)?;
    let mut doc = v.to_json();
    doc["input"] = json!({"command": "factorize", "shape": shape, "t": t, "n": n, "m": m});
    write_document(&mut *open(cli.out.as_deref())?, cli.format, &doc)?;
    Ok(v.matches)
}

fn csp(cli: &Cli, shape: &str, t: usize, n: usize, m: usize) -> Outcome {
    let (lam, mu) = parse_shape_pair(shape)?;
    let r = if m == 0 { verify_csp_skew(&lam, &mu, t, n)? } else { verify_csp_super(&lam, &mu, t, n, m)? };
    let mut doc = r.to_json();
    doc["input"] = json!({"command": "csp", "shape": shape, "t": t, "n": n, "m": m});
    write_document(&mut *open(cli.out.as_deref())?, cli.format, &doc)?;
    let asserted = r.sign_condition == Some(true);
    Ok(r.routes_agree == Some(true) && (!asserted || r.csp_exists()))
}

fn verify(cli: &Cli, args: &VerifyArgs) -> Outcome {
    let config = SweepConfig {
        selector: args.selector,
        t: args.t.clone(),
        n: args.n.clone(),
        m: args.m.clone(),
        d: args.d,
        max_size: args.max_size,
        max_length: args.max_length,
    };
    let start = Instant::now();
    let report = match args.jobs {
        Some(0) => return Err(Failure::Usage("--jobs must be positive".into())),
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Failure::Usage(e.to_string()))?
            .install(|| run_sweep(&config))?,
        None => run_sweep(&config)?,
    };
    let mut summary = report.summary_json();
    if args.timing {
        summary["elapsedMs"] = json!(start.elapsed().as_millis() as u64);
    }
    let rows: Vec<Value> = report
        .records
        .iter()
        .map(|r| {
            let mut row = r.record.clone();
            row["asserted"] = json!(r.asserted);
            row["passed"] = json!(r.passed);
            row
        })
        .collect();
    let mut w = open(cli.out.as_deref())?;
    match cli.format {
        Format::Json => {
            for row in &rows {
                writeln!(w, "{row}")?;
            }
            writeln!(w, "{}", json!({ "summary": summary }))?;
        }
        Format::Csv => write_csv(&mut *w, &rows)?,
        Format::Text => {
            for row in &rows {
                let verdict = match (row["asserted"].as_bool(), row["passed"].as_bool()) {
                    (Some(false), _) => "info",
                    (_, Some(true)) => "pass",
                    _ => "FAIL",
                };
                let input = ["lambda", "mu", "t", "d", "n", "m", "k"]
                    .iter()
                    .filter_map(|k| {
                        row.get(*k)
                            .filter(|v| !v.is_null())
                            .map(|v| format!("{k}={}", v.as_str().map_or(v.to_string(), str::to_string)))
                    })
                    .collect::<Vec<_>>()
                    .join(" ");
                writeln!(w, "{verdict} {input}")?;
            }
            writeln!(
                w,
                "{} instances, {} asserted, {} passed, {} failed",
                report.total, report.asserted, report.passed, report.failed
            )?;
        }
    }
    w.flush()?;
    eprintln!("{}: {} instances, {} passed, {} failed", args.selector, report.total, report.passed, report.failed);
    if let Some(first) = &report.first_failure {
        eprintln!("first counterexample: {first}");
    }
    Ok(report.all_passed())
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::CoreQuotient { shape, t, ell } => core_quotient(cli, shape, *t, *ell),
        Command::Schur { shape, n, m, method } => schur(cli, shape, *n, *m, *method),
        Command::Factorize { shape, t, n, m } => factorize(cli, shape, *t, *n, *m),
        Command::Csp { shape, t, n, m } => csp(cli, shape, *t, *n, *m),
        Command::Verify(args) => verify(cli, args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
