mod cache;
mod commands;
mod expr;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use cache::{Cache, Key};
use commands::CliError;

#[derive(Parser)]
#[command(name = "parthom", version, about = "Exact homology representations of partition lattices")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format. Defaults to tsv for tables and json elsewhere.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Directory for cached results. Caching is off when unset.
    #[arg(long, global = true, env = "PARTHOM_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    /// Worker threads for parallel commands.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a symmetric function expression or a named family.
    Sf(SfArgs),
    /// Frobenius characteristic of the chain module of a rank selection.
    Alpha(ModuleArgs),
    /// Frobenius characteristic of the homology of a rank selection.
    Beta(ModuleArgs),
    /// Integral homology, Möbius number and character of a subposet.
    Homology(HomologyArgs),
    /// Tables of multiplicities and integer sequences.
    Table(TableArgs),
    /// Run a consistency suite; exits 1 when an assertion fails.
    Check(CheckArgs),
    /// Euler zigzag numbers E_n.
    Euler(SeqArgs),
    /// Simsun numbers a_i(n).
    Simsun(SeqArgs),
    /// Even-block coefficients b_i(n).
    Bi(SeqArgs),
    /// Stability and subposet reports; exits 1 when an assertion fails.
    Report(ReportArgs),
}

#[derive(Args)]
pub struct SfArgs {
    /// Expression such as "3*s(2,1) - h(2)h(1) + 1/2 p(2)^2".
    #[arg(long, conflicts_with = "family")]
    pub expr: Option<String>,
    /// Named family: lie, whitehouse, r-even, hook.
    #[arg(long, required_unless_present = "expr")]
    pub family: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Basis of the printed expansion.
    #[arg(long, default_value = "s")]
    pub basis: String,
}

#[derive(Args)]
pub struct ModuleArgs {
    #[arg(long)]
    pub n: usize,
    /// Rank set such as "1-3,5"; empty or "-" for the empty set.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub ranks: String,
    /// chains or recurrence for alpha; inclusion-exclusion or recurrence for beta.
    #[arg(long)]
    pub method: Option<String>,
    /// Multiplicities to report: trivial, prime, refl (comma separated).
    #[arg(long)]
    pub mult: Option<String>,
    #[arg(long, default_value = "s")]
    pub basis: String,
}

#[derive(Args)]
pub struct HomologyArgs {
    #[arg(long)]
    pub n: usize,
    /// full, ranks:1,3, qnk:k=3, pnk:k=3, le:k=2, ne:k=3, even, even-top:k=2.
    #[arg(long, default_value = "full")]
    pub poset: String,
}

#[derive(Args)]
pub struct TableArgs {
    /// bS, simsun, bi or euler.
    #[arg(long, default_value = "bS")]
    pub family: String,
    #[arg(long, conflicts_with = "max_n")]
    pub n: Option<usize>,
    #[arg(long)]
    pub max_n: Option<usize>,
}

#[derive(Args)]
pub struct CheckArgs {
    #[arg(long)]
    pub suite: String,
    #[arg(long, default_value_t = 7)]
    pub max_n: usize,
}

#[derive(Args)]
pub struct SeqArgs {
    #[arg(long)]
    pub n: usize,
    /// Index i; the whole row when omitted.
    #[arg(long)]
    pub k: Option<usize>,
}

#[derive(Args)]
pub struct ReportArgs {
    /// stability, qnk, pnk, le or ne.
    #[arg(long)]
    pub family: String,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub ranks: String,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub max_n: Option<usize>,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Sf(_) => "sf",
            Command::Alpha(_) => "alpha",
            Command::Beta(_) => "beta",
            Command::Homology(_) => "homology",
            Command::Table(_) => "table",
            Command::Check(_) => "check",
            Command::Euler(_) => "euler",
            Command::Simsun(_) => "simsun",
            Command::Bi(_) => "bi",
            Command::Report(_) => "report",
        }
    }

    /// Validated, canonical parameters. These form the cache key.
    fn params(&self) -> Result<Value, CliError> {
        match self {
            Command::Sf(a) => commands::sf_params(a),
            Command::Alpha(a) => commands::module_params(a, false),
            Command::Beta(a) => commands::module_params(a, true),
            Command::Homology(a) => commands::homology_params(a),
            Command::Table(a) => commands::table_params(a),
            Command::Check(a) => commands::check_params(a),
            Command::Euler(a) | Command::Simsun(a) | Command::Bi(a) => commands::seq_params(self.name(), a),
            Command::Report(a) => commands::report_params(a),
        }
    }

    fn default_format(&self, params: &Value) -> Format {
        match self {
            Command::Table(_) => Format::Tsv,
            Command::Alpha(_) | Command::Beta(_) if params.get("mult").is_some_and(|m| !m.is_null()) => Format::Tsv,
            _ => Format::Json,
        }
    }
}

fn run(cli: &Cli) -> Result<(Value, Format), CliError> {
    let params = cli.command.params()?;
    let name = cli.command.name();
    let cache = match &cli.cache_dir {
        Some(dir) => match Cache::open(dir) {
            Ok(c) => Some(c),
            Err(e) => {
                eprintln!("warning: cache directory {} unusable: {e}", dir.display());
                None
            }
        },
        None => None,
    };
    let key = Key::new(name, &params);
    let cached = cache.as_ref().and_then(|c| c.load(&key));
    let value = match cached {
        Some(v) => v,
        None => {
            let v = commands::compute(name, &params)?;
            if let Some(c) = &cache {
                if let Err(e) = c.store(&key, &v) {
                    eprintln!("warning: cannot write cache entry: {e}");
                }
            }
            v
        }
    };
    Ok((value, cli.format.unwrap_or_else(|| cli.command.default_format(&params))))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("warning: {e}");
        }
    }
    let (value, format) = match run(&cli) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let text = render::render(cli.command.name(), &value, format);
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(1);
    }
    match commands::failure_witness(&value) {
        Some(w) => {
            eprintln!("{}", serde_json::to_string_pretty(&w).expect("json"));
            ExitCode::from(1)
        }
        None => ExitCode::SUCCESS,
    }
}
