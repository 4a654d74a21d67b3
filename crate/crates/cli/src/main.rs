//! `qgollnitz`: run exact parameter sweeps over the identity checks.
//!
//! Exit status is 0 when every tuple passes, 1 on any mismatch and 2 on a
//! usage error.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use qgollnitz_core::sweep::{
    golden_corpus, golden_diff, parse_range, render_report, run_sweep, Format, Identity, Param,
    SweepSpec,
};
use qgollnitz_core::Error;

#[derive(Parser, Debug)]
#[command(
    name = "qgollnitz",
    version,
    about = "Exact sweeps over the bounded Göllnitz key identity and its relatives",
    after_help = "Targets: every identity name (run `qgollnitz list`), or `golden` to print or check \
                  the stored g/p renderings.\nRanges are inclusive: `--i 0..3`, `--L -3..10`, `--n 7`."
)]
struct Cli {
    /// Identity to sweep, `list`, or `golden`.
    target: String,

    #[arg(long = "i", allow_hyphen_values = true)]
    i: Option<String>,
    #[arg(long = "j", allow_hyphen_values = true)]
    j: Option<String>,
    #[arg(long = "k", allow_hyphen_values = true)]
    k: Option<String>,
    #[arg(long = "L", allow_hyphen_values = true)]
    big_l: Option<String>,
    #[arg(long = "M", allow_hyphen_values = true)]
    big_m: Option<String>,
    /// Fourth total of the four-parameter identity.
    #[arg(long = "l", allow_hyphen_values = true)]
    ell: Option<String>,
    #[arg(long = "n", allow_hyphen_values = true)]
    n: Option<String>,
    #[arg(long = "s", allow_hyphen_values = true)]
    s: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    top: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    bottom: Option<String>,

    /// Truncation order for series identities.
    #[arg(long)]
    order: Option<usize>,

    #[arg(long, default_value = "text")]
    format: String,

    /// Worker threads; defaults to the available parallelism.
    #[arg(long, env = "QGOLLNITZ_JOBS")]
    jobs: Option<usize>,

    /// Report `elapsed_ms` as 0 so repeated runs are byte-identical.
    #[arg(long)]
    no_timing: bool,

    /// With `golden`: compare against this file instead of printing.
    #[arg(long)]
    check: Option<PathBuf>,
}

/// Writes to stdout, treating a closed pipe as success.
fn emit(text: &str) {
    let mut out = io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

enum Outcome {
    Pass,
    Mismatch,
}

fn build_spec(cli: &Cli, identity: Identity) -> Result<SweepSpec, Error> {
    let mut spec = SweepSpec::new(identity);
    let given = [
        (Param::I, &cli.i),
        (Param::J, &cli.j),
        (Param::K, &cli.k),
        (Param::L, &cli.big_l),
        (Param::M, &cli.big_m),
        (Param::Ell, &cli.ell),
        (Param::N, &cli.n),
        (Param::S, &cli.s),
        (Param::Top, &cli.top),
        (Param::Bottom, &cli.bottom),
    ];
    for (p, raw) in given {
        if let Some(raw) = raw {
            let (lo, hi) = parse_range(raw).map_err(|e| match e {
                Error::Usage(m) => Error::Usage(format!("--{}: {m}", p.name())),
                other => other,
            })?;
            spec = spec.with_range(p, lo, hi)?;
        }
    }
    if let Some(order) = cli.order {
        spec = spec.with_order(order)?;
    }
    if cli.no_timing {
        spec = spec.without_timing();
    }
    Ok(spec)
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    match cli.target.as_str() {
        "list" => {
            let mut text = String::new();
            for id in Identity::ALL {
                let params: Vec<_> = id
                    .default_ranges()
                    .iter()
                    .map(|(p, lo, hi)| format!("{}={lo}..{hi}", p.name()))
                    .collect();
                let order = id
                    .default_order()
                    .map(|o| format!(" order={o}"))
                    .unwrap_or_default();
                text.push_str(&format!("{:<20}{}{}\n", id.name(), params.join(" "), order));
            }
            emit(&text);
            Ok(Outcome::Pass)
        }
        "golden" => match &cli.check {
            None => {
                emit(&golden_corpus());
                Ok(Outcome::Pass)
            }
            Some(path) => {
                let stored = fs::read_to_string(path)
                    .map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
                let diff = golden_diff(&stored);
                emit(&diff.iter().map(|l| format!("{l}\n")).collect::<String>());
                Ok(if diff.is_empty() {
                    Outcome::Pass
                } else {
                    Outcome::Mismatch
                })
            }
        },
        name => {
            let identity: Identity = name.parse()?;
            let format: Format = cli.format.parse()?;
            let spec = build_spec(cli, identity)?;
            let jobs = cli
                .jobs
                .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            if jobs == 0 {
                return Err(Error::Usage("--jobs must be at least 1".into()));
            }
            let report = run_sweep(&spec, jobs)?;
            let mut out = render_report(&report, format);
            if !out.ends_with('\n') {
                out.push('\n');
            }
            emit(&out);
            Ok(if report.passed() {
                Outcome::Pass
            } else {
                Outcome::Mismatch
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("qgollnitz: {e}");
            ExitCode::from(2)
        }
    }
}
