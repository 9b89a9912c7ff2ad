use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use rrlab::algebra::OrderKind;
use rrlab::corpus::{self, Overrides, DEFAULT_SEED, SCHEMA_VERSION};
use rrlab::lang::{groebner_listing, parse_program, Session};
use rrlab::ratliff_rush::ClosureConfig;
use rrlab::AlgebraError;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(name = "rrlab", version, about = "Ratliff-Rush closures, reductions and Groebner bases")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the commands of an input file.
    Compute {
        file: PathBuf,
        #[command(flatten)]
        bounds: Bounds,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Print reduced Groebner bases of the ideals of an input file.
    Gb {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Order::Grevlex)]
        order: Order,
        /// Variables from most to least significant, comma separated.
        #[arg(long, value_delimiter = ',')]
        vars: Option<Vec<String>>,
    },
    /// Worked-example corpus.
    Corpus {
        #[command(subcommand)]
        cmd: CorpusCmd,
    },
}

#[derive(Subcommand)]
enum CorpusCmd {
    /// Run the cases matching a glob over case ids.
    Run {
        /// Case id glob, same as --filter.
        pattern: Option<String>,
        #[arg(long)]
        filter: Option<String>,
        #[command(flatten)]
        bounds: Bounds,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Zero all timings so the report is byte-stable.
        #[arg(long)]
        deterministic: bool,
        #[command(flatten)]
        output: Output,
    },
    /// List case ids and titles.
    List {
        #[arg(long)]
        filter: Option<String>,
    },
}

#[derive(Args)]
struct Bounds {
    #[arg(long)]
    kmax: Option<u32>,
    #[arg(long)]
    window: Option<u32>,
    #[arg(long)]
    nmax: Option<u32>,
}

impl Bounds {
    fn overrides(&self) -> Overrides {
        Overrides { k_max: self.kmax, window: self.window, n_max: self.nmax }
    }
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output to a file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Lex,
    Grlex,
    Grevlex,
}

impl From<Order> for OrderKind {
    fn from(o: Order) -> Self {
        match o {
            Order::Lex => OrderKind::Lex,
            Order::Grlex => OrderKind::GradedLex,
            Order::Grevlex => OrderKind::GradedRevLex,
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err((code, msg)) => {
            eprintln!("rrlab: {msg}");
            ExitCode::from(code)
        }
    }
}

type Outcome = Result<u8, (u8, String)>;

fn usage(msg: impl ToString) -> (u8, String) {
    (EXIT_USAGE, msg.to_string())
}

fn error_code(e: &AlgebraError) -> u8 {
    match e {
        AlgebraError::ResourceLimit(_) => EXIT_RESOURCE,
        _ => EXIT_USAGE,
    }
}

fn read(file: &Path) -> Result<String, (u8, String)> {
    fs::read_to_string(file).map_err(|e| usage(format!("{}: {e}", file.display())))
}

fn emit(output: &Output, text: &str) -> Result<(), (u8, String)> {
    match &output.out {
        Some(p) => fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => {
            let mut so = std::io::stdout().lock();
            so.write_all(text.as_bytes()).map_err(|e| usage(e))
        }
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.cmd {
        Cmd::Compute { file, bounds, seed, output } => compute(&file, &bounds, seed, &output),
        Cmd::Gb { file, order, vars } => {
            let src = read(&file)?;
            let program = parse_program(&src).map_err(|e| usage(format!("{}:{e}", file.display())))?;
            let text = groebner_listing(&program, order.into(), vars.as_deref()).map_err(|e| (error_code(&e), e.to_string()))?;
            print!("{text}");
            Ok(0)
        }
        Cmd::Corpus { cmd: CorpusCmd::List { filter } } => {
            for c in corpus::select(filter.as_deref()).map_err(usage)? {
                println!("{}\t{}", c.id, c.title);
            }
            Ok(0)
        }
        Cmd::Corpus { cmd: CorpusCmd::Run { pattern, filter, bounds, seed, deterministic, output } } => {
            if pattern.is_some() && filter.is_some() {
                return Err(usage("give the case glob either positionally or with --filter"));
            }
            let filter = pattern.or(filter);
            for c in corpus::select(filter.as_deref()).map_err(usage)? {
                bounds.overrides().apply(c.config).validate().map_err(|e| usage(format!("{}: {e}", c.id)))?;
            }
            let mut report = corpus::run_corpus(filter.as_deref(), bounds.overrides(), seed).map_err(usage)?;
            if deterministic {
                report.strip_timings();
            }
            let text = match output.format {
                Format::Json => report.to_json() + "\n",
                Format::Text => report.to_text(),
            };
            emit(&output, &text)?;
            Ok(report.exit_code() as u8)
        }
    }
}

fn compute(file: &Path, bounds: &Bounds, seed: u64, output: &Output) -> Outcome {
    let src = read(file)?;
    let program = parse_program(&src).map_err(|e| usage(format!("{}:{e}", file.display())))?;
    let cfg = bounds.overrides().apply(ClosureConfig::default());
    cfg.validate().map_err(usage)?;
    let session = Session::new(&program, cfg).map_err(|e| (error_code(&e.source), e.to_string()))?;
    let mut results = Vec::new();
    let mut failure = None;
    for c in program.commands() {
        match session.run_command(c) {
            Ok(o) => results.push(o),
            Err(e) => {
                failure = Some((error_code(&e.source), e.to_string()));
                break;
            }
        }
    }
    let text = match output.format {
        Format::Json => {
            let v = json!({
                "schema": SCHEMA_VERSION,
                "tool": concat!("rrlab ", env!("CARGO_PKG_VERSION")),
                "seed": seed,
                "config": cfg,
                "results": results,
                "error": failure.as_ref().map(|f| &f.1),
            });
            serde_json::to_string_pretty(&v).expect("output serializes") + "\n"
        }
        Format::Text => results.iter().map(|o| format!("{}: {}\n", o.command, o.text)).collect(),
    };
    emit(output, &text)?;
    if let Some(f) = failure {
        return Err(f);
    }
    Ok(if results.iter().any(|o| o.passed == Some(false)) { EXIT_FAIL } else { 0 })
}
