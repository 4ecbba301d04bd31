//! Batch front end for the `fuzzbis` library.
//!
//! Every command writes a human-readable summary (or JSON/CSV with
//! `--format`) to stdout and, with `--output`, a JSON report to a file.
//! Exit codes: 0 when the property holds or the computation succeeded, 1
//! when the property is violated, 2 for usage and input errors, 3 when a
//! solver does not converge within its iteration budget.

mod commands;
mod suite;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use fuzzbis::lattice::{Lattice, LatticeValue};

pub use suite::{Job, Manifest};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NO_CONVERGENCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "fuzzbis", version, about = "Fuzzy PDL evaluation, bisimulation and Hennessy-Milner checks")]
pub struct Cli {
    /// Lattice for every input, overriding the files' own "lattice" field:
    /// godel, lukasiewicz, product, chain:<n>, or a JSON table file.
    #[arg(long, global = true)]
    pub lattice: Option<String>,

    /// Lattice for inputs that do not name one.
    #[arg(long, global = true, env = "FUZZBIS_LATTICE")]
    pub default_lattice: Option<String>,

    /// Print values as decimals with this many digits instead of exact rationals.
    #[arg(long, global = true, value_name = "DIGITS")]
    pub decimal: Option<usize>,

    /// Also write the JSON report to this file.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    /// Format of what goes to stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a formula or program on a model.
    Eval(EvalArgs),
    /// Check whether a relation is a fuzzy bisimulation between two models.
    BisimCheck(BisimCheckArgs),
    /// Compute the greatest fuzzy bisimulation between two models.
    BisimGreatest(PairArgs),
    /// Compare the greatest bisimulation with the logical distance.
    Hm(HmArgs),
    /// Check that a bisimulation bounds the agreement on a formula.
    Invariance(InvarianceArgs),
    /// Check the back-and-forth conditions for a program's relation.
    Zigzag(ZigzagArgs),
    /// Check or compute a forward bisimulation between two automata.
    AutomataBisim(AutomataArgs),
    /// Check the correspondence between automata and Kripke bisimulations.
    AutomataCorresp(AutomataArgs),
    /// Check the residuated-lattice laws on a lattice.
    LatticeLaws(LawArgs),
    /// Run the jobs of a manifest and aggregate their results.
    Suite(SuiteArgs),
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long)]
    pub model: PathBuf,
    #[arg(long, required_unless_present = "program", conflicts_with = "program")]
    pub formula: Option<String>,
    #[arg(long)]
    pub program: Option<String>,
    /// Only report this state (the row of this state for programs).
    #[arg(long)]
    pub at: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct SolverArgs {
    /// Stop approximate iteration once a step changes no entry by more than this.
    #[arg(long, default_value = "1/1000000000")]
    pub tolerance: String,
    #[arg(long, default_value_t = 10_000)]
    pub max_iterations: usize,
    /// Force exact or approximate iteration; by default exact where it terminates.
    #[arg(long, value_enum)]
    pub mode: Option<Mode>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Approximate,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[arg(long)]
    pub left: PathBuf,
    #[arg(long)]
    pub right: PathBuf,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Debug, Args)]
pub struct BisimCheckArgs {
    #[arg(long)]
    pub left: PathBuf,
    #[arg(long)]
    pub right: PathBuf,
    /// Relation document, or a report containing one under "relation".
    #[arg(long)]
    pub relation: PathBuf,
}

#[derive(Debug, Args)]
pub struct HmArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    /// Maximal formula depth.
    #[arg(long, default_value_t = 3)]
    pub depth: usize,
    /// Rounds of closing the model values under the lattice operations to
    /// form the constant pool (finite lattices use the whole carrier).
    #[arg(long, default_value_t = 2)]
    pub pool_rounds: usize,
    /// Stop after this many semantically distinct formulas.
    #[arg(long, default_value_t = 500_000)]
    pub max_formulas: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GatingArg {
    Enforce,
    Laws,
    Override,
}

#[derive(Debug, Args)]
pub struct InvarianceArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    /// Bisimulation to use; the greatest one by default.
    #[arg(long)]
    pub relation: Option<PathBuf>,
    #[arg(long)]
    pub formula: String,
    /// Excluded constructors, e.g. "{->,?}" or "union".
    #[arg(long, default_value = "")]
    pub fragment: String,
    #[arg(long, value_enum, default_value_t = GatingArg::Enforce)]
    pub gating: GatingArg,
}

#[derive(Debug, Args)]
pub struct ZigzagArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    #[arg(long)]
    pub relation: Option<PathBuf>,
    #[arg(long)]
    pub program: String,
    #[arg(long, default_value = "")]
    pub fragment: String,
    #[arg(long, value_enum, default_value_t = GatingArg::Enforce)]
    pub gating: GatingArg,
}

#[derive(Debug, Args)]
pub struct AutomataArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    /// Relation to check; the greatest forward bisimulation by default.
    #[arg(long)]
    pub relation: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LawArgs {
    /// Random samples for infinite carriers; finite ones are checked exhaustively.
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct SuiteArgs {
    #[arg(long)]
    pub manifest: PathBuf,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Input { path: String, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Refused(String),
    #[error("{0}")]
    NoConvergence(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::NoConvergence(_) => EXIT_NO_CONVERGENCE,
            _ => EXIT_USAGE,
        }
    }

    pub(crate) fn input(path: &Path, e: impl std::fmt::Display) -> Self {
        CliError::Input { path: path.display().to_string(), message: e.to_string() }
    }
}

/// Settings shared by all commands.
#[derive(Debug, Clone)]
pub(crate) struct Context {
    pub explicit: Option<Lattice>,
    pub fallback: Option<Lattice>,
    pub decimal: Option<usize>,
}

impl Context {
    pub fn value(&self, l: &Lattice, v: &LatticeValue) -> String {
        match self.decimal {
            Some(d) => l.format_decimal(v, d),
            None => l.format_value(v),
        }
    }
}

/// What a command produced.
pub(crate) struct Outcome {
    pub exit: i32,
    pub text: String,
    pub report: serde_json::Value,
    pub csv: Option<String>,
}

fn resolve_lattice(spec: &str) -> Result<Lattice, CliError> {
    match spec.parse::<Lattice>() {
        Ok(l) => Ok(l),
        Err(named) => {
            let path = Path::new(spec);
            if !path.exists() {
                return Err(CliError::Usage(format!("--lattice: {named}")));
            }
            let text = std::fs::read_to_string(path).map_err(|e| CliError::input(path, e))?;
            Lattice::from_json(&text).map_err(|e| CliError::input(path, e))
        }
    }
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let ctx = Context {
        explicit: cli.lattice.as_deref().map(resolve_lattice).transpose()?,
        fallback: cli.default_lattice.as_deref().map(resolve_lattice).transpose()?,
        decimal: cli.decimal,
    };
    match &cli.command {
        Command::Eval(a) => commands::eval(&ctx, a),
        Command::BisimCheck(a) => commands::bisim_check(&ctx, a),
        Command::BisimGreatest(a) => commands::bisim_greatest(&ctx, a),
        Command::Hm(a) => commands::hm(&ctx, a),
        Command::Invariance(a) => commands::invariance(&ctx, a),
        Command::Zigzag(a) => commands::zigzag(&ctx, a),
        Command::AutomataBisim(a) => commands::automata_bisim(&ctx, a),
        Command::AutomataCorresp(a) => commands::automata_corresp(&ctx, a),
        Command::LatticeLaws(a) => commands::lattice_laws(&ctx, a),
        Command::Suite(a) => suite::run(cli, a),
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing stdout to `out` and diagnostics to `err`. Returns the exit code.
pub fn run_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    run(&cli, out, err)
}

/// Runs a parsed command line.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let outcome = match execute(cli) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return e.exit_code();
        }
    };
    if let Some(path) = &cli.output {
        let text = serde_json::to_string_pretty(&outcome.report).expect("reports serialize") + "\n";
        if let Err(e) = std::fs::write(path, text) {
            let _ = writeln!(err, "error: {}: {e}", path.display());
            return EXIT_USAGE;
        }
    }
    let printed = match cli.format {
        Format::Text => outcome.text,
        Format::Json => serde_json::to_string_pretty(&outcome.report).expect("reports serialize") + "\n",
        Format::Csv => match outcome.csv {
            Some(csv) => csv,
            None => {
                let _ = writeln!(err, "error: this command has no CSV form; use --format text or json");
                return EXIT_USAGE;
            }
        },
    };
    if out.write_all(printed.as_bytes()).is_err() {
        return EXIT_USAGE;
    }
    outcome.exit
}
