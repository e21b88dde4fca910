mod commands;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use deodhar_core::Error;

const GLYPHS: &str = "Heap glyphs, one two-character cell per lattice point:
  o  entry (no mask given)
  *  mask value 1
  D  mask value 0 at a defect (zero-defect)
  0  mask value 0 away from a defect (plain zero)
  ~  after a glyph: the entry is s~1 (type D)
  two glyphs in one cell: s1 and s~1 share the point (s1 first)
The last line numbers the columns, modulo 10.";

#[derive(Parser)]
#[command(name = "deodhar", version, about = "Masks, defects and Deodhar elements of finite Weyl groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format. csv is accepted by classify and enumerate.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for enumeration and search (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Group and element. The rank is inferred from the element when omitted.
#[derive(Args, Clone)]
pub struct ElementArgs {
    /// Family: A, B, D, E, F or G.
    #[arg(long = "type", default_value = "A")]
    pub family: String,
    #[arg(long)]
    pub rank: Option<usize>,
    /// Signed 1-line notation, e.g. "[-1,6,7,8,-5,2,3,4]" (types A, B, D).
    #[arg(long, conflicts_with = "word", allow_hyphen_values = true)]
    pub one_line: Option<String>,
    /// Reduced word, e.g. "s~1 s2 s3". The empty string is the identity.
    #[arg(long)]
    pub word: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether an element is Deodhar, with a witness when it is not.
    Classify {
        #[command(flatten)]
        element: ElementArgs,
        /// Comma-separated methods: patterns, masks, hecke, or all.
        #[arg(long, default_value = "patterns")]
        method: String,
    },
    /// Kazhdan-Lusztig polynomial P_{x,w} of a Deodhar element w.
    Kl {
        #[command(flatten)]
        element: ElementArgs,
        /// x in 1-line notation (default: identity).
        #[arg(long, conflicts_with = "x_word", allow_hyphen_values = true)]
        x_one_line: Option<String>,
        /// x as a reduced word.
        #[arg(long)]
        x_word: Option<String>,
        /// Print every nonzero P_{x,w}.
        #[arg(long, conflicts_with_all = ["x_one_line", "x_word"])]
        all: bool,
    },
    /// Count Deodhar elements by length.
    Enumerate {
        #[arg(long = "type")]
        family: String,
        #[arg(long)]
        rank: usize,
        /// patterns, hecke or masks.
        #[arg(long, default_value = "patterns")]
        method: String,
        /// Compare with the published counts; exit 1 on mismatch.
        #[arg(long)]
        check: bool,
    },
    /// Search for minimal non-Deodhar elements.
    MinimalPatterns {
        #[arg(long = "type")]
        family: String,
        #[arg(long)]
        rank: usize,
        /// sba or convex.
        #[arg(long, default_value = "sba")]
        stratum: String,
        /// Stop after this length; the report is then marked incomplete.
        #[arg(long)]
        max_length: Option<usize>,
    },
    /// Draw the heap of an element or word.
    #[command(after_help = GLYPHS)]
    RenderHeap {
        #[command(flatten)]
        element: ElementArgs,
        /// Mask as a 0/1 string aligned with the word.
        #[arg(long)]
        mask: Option<String>,
        /// Keep the levels from stacking the word; skip coalescing.
        #[arg(long)]
        gravity: bool,
    },
    /// Print the pattern library.
    DumpPatterns,
    /// Quick consistency checks; exit 1 on failure.
    SelfCheck,
}

/// Exit codes: 0 ok, 1 check failure, 2 usage, 3 cap.
pub enum Failure {
    Check(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let fmt = cli.format;
    let result = match cli.command {
        Command::Classify { element, method } => commands::classify(&element, &method, fmt),
        Command::Kl { element, x_one_line, x_word, all } => commands::kl(&element, x_one_line, x_word, all, fmt),
        Command::Enumerate { family, rank, method, check } => commands::enumerate(&family, rank, &method, check, fmt),
        Command::MinimalPatterns { family, rank, stratum, max_length } => {
            commands::minimal_patterns(&family, rank, &stratum, max_length, fmt)
        }
        Command::RenderHeap { element, mask, gravity } => commands::render_heap(&element, mask.as_deref(), gravity, fmt),
        Command::DumpPatterns => commands::dump_patterns(fmt),
        Command::SelfCheck => commands::self_check(cli.seed, fmt),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Cap { .. } => 3,
                _ => 2,
            })
        }
    }
}
