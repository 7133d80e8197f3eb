use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use crate::commands::{self, AtlasArgs, Format, RealizeInput, EXIT_PARSE};

#[derive(Parser, Debug)]
#[command(name = "moduli", version, about = "Sign patterns of hyperbolic polynomials and orderings of root moduli")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a witness (roots, coefficients, pattern, ordering) as JSON.
    #[command(group(ArgGroup::new("input").required(true).args(["pattern", "shape", "roots"])))]
    Realize {
        /// Sign pattern such as "++--+".
        #[arg(long, allow_hyphen_values = true)]
        pattern: Option<String>,
        /// Block shape "m,n,q", "m,n" or "len".
        #[arg(long)]
        shape: Option<String>,
        /// Comma-separated roots, decimals or fractions.
        #[arg(long, allow_hyphen_values = true)]
        roots: Option<String>,
    },
    /// Decide one (shape, word) cell.
    Classify {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        ordering: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Build the atlas for one degree.
    Atlas {
        #[arg(long)]
        degree: usize,
        #[arg(long, value_delimiter = ',', default_value = "0,1,2")]
        changes: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        #[arg(long, default_value_t = 8)]
        degree_cap: usize,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Check the built-in corpus, or a JSON fixture of entries.
    VerifyCorpus {
        #[arg(long)]
        fixture: Option<PathBuf>,
    },
    /// Per-shape counts, n* sets and observed n* maxima.
    Stats {
        #[arg(long)]
        degree: usize,
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        changes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long)]
        workers: Option<usize>,
    },
}

/// Run with explicit arguments and streams; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_PARSE;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    let result = match &cli.command {
        Command::Realize { pattern, shape, roots } => {
            let input = match (pattern, shape, roots) {
                (Some(p), _, _) => RealizeInput::Pattern(p),
                (_, Some(s), _) => RealizeInput::Shape(s),
                (_, _, Some(r)) => RealizeInput::Roots(r),
                _ => unreachable!("clap enforces one input"),
            };
            commands::realize(input, out)
        }
        Command::Classify { shape, ordering, seed, budget } => commands::classify(shape, ordering, *seed, *budget, out),
        Command::Atlas { degree, changes, out: path, seed, budget, format, degree_cap, workers } => commands::atlas(
            &AtlasArgs {
                degree: *degree,
                changes,
                out: path.as_deref(),
                seed: *seed,
                budget: *budget,
                format: match format {
                    FormatArg::Json => Format::Json,
                    FormatArg::Csv => Format::Csv,
                },
                degree_cap: *degree_cap,
                workers: *workers,
            },
            out,
        ),
        Command::VerifyCorpus { fixture } => commands::verify_corpus(fixture.as_deref(), out),
        Command::Stats { degree, changes, seed, budget, workers } => {
            commands::stats(*degree, changes, *seed, *budget, *workers, out)
        }
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}
