use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use abelian_langlands::complex::parse_complex;
use abelian_langlands::suites::{exit_code, run_suite, SuiteParams, SUITES};
use abelian_langlands::torus_geometry::RiemannMatrix;
use abelian_langlands::{Error, Result};

/// Run a verification suite and print its JSON report.
#[derive(Parser, Debug)]
#[command(name = "verify", version)]
struct Args {
    /// elliptic, jacobian, connections, torus, finite-hecke, fiber, biject or all
    suite: String,
    /// Modular parameter, e.g. 0.3+1.2i
    #[arg(long)]
    tau: Option<String>,
    /// JSON file with a genus-2 period matrix
    #[arg(long)]
    omega: Option<PathBuf>,
    /// Cohomology class as comma-separated a-entries then b-entries
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<String>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    grid: Option<usize>,
    #[arg(long)]
    max_mode: Option<i64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    json: Option<PathBuf>,
}

fn params(args: &Args) -> Result<SuiteParams> {
    if !SUITES.contains(&args.suite.as_str()) {
        return Err(Error::UnknownSuite(args.suite.clone()));
    }
    let omega = match &args.omega {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::BadFlag(format!("--omega: {e}")))?;
            Some(RiemannMatrix::from_json(&text)?)
        }
        None => None,
    };
    let gamma = match &args.gamma {
        Some(text) => Some(
            text.split(',')
                .map(|x| x.trim().parse::<i64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::BadFlag(format!("--gamma: {e}")))?,
        ),
        None => None,
    };
    Ok(SuiteParams {
        tau: args.tau.as_deref().map(parse_complex).transpose()?,
        omega,
        gamma,
        q: args.q,
        grid: args.grid,
        max_mode: args.max_mode,
        seed: args.seed,
        samples: args.samples,
        csv: args.csv.clone(),
    })
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = params(&args).and_then(|p| run_suite(&args.suite, &p));
    match &result {
        Ok(report) => {
            let json = report.to_json();
            let _ = writeln!(std::io::stdout().lock(), "{json}");
            if let Some(path) = &args.json {
                if let Err(e) = std::fs::write(path, format!("{json}\n")) {
                    eprintln!("error: --json {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
        }
        Err(e) => eprintln!("error: {e}"),
    }
    ExitCode::from(exit_code(&result) as u8)
}
