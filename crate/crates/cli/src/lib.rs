//! Command line front end for `stcore`: listings, statistics, verification
//! sweeps, bijection queries and text renderings.
//!
//! [`run_with`] is the whole program minus process setup, so tests can
//! drive it with in-memory streams.

pub mod output;
pub mod parallel;
pub mod render;
pub mod verify;

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use stcore::anderson::{ideal_to_partition, partition_of_elements, partition_to_ideal_in};
use stcore::ideal_enum::check_cap;
use stcore::report::Report;
use stcore::{GapPoset, OrderIdeal, Partition, DEFAULT_CAP};

use output::Format;
use parallel::Executor;

#[derive(Debug, Parser)]
#[command(name = "stcore", version, about = "Simultaneous (s,t)-core partitions in exact arithmetic")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Ascii)]
    pub format: Format,

    /// Worker threads; defaults to the number of available cores.
    #[arg(long, global = true, env = "STCORE_THREADS")]
    pub threads: Option<usize>,

    /// Refuse to enumerate posets with more order ideals than this.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Every (s,t)-core with its order ideal and size.
    List(Pair),
    /// Count, total, largest and average size of the (s,t)-cores.
    Stats(Pair),
    /// Exact cross-checks between brute force, recursions and closed forms.
    Verify {
        #[command(subcommand)]
        target: Target,
    },
    /// Map an order ideal to its core, or a core to its order ideal.
    Bijection(BijectionArgs),
    /// Draw a Young diagram with hook lengths or a Hasse diagram.
    Render {
        #[command(subcommand)]
        what: RenderTarget,
    },
}

#[derive(Debug, Args)]
pub struct Pair {
    pub s: u64,
    pub t: u64,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Side {
    /// Comma-separated ideal elements, e.g. 7,4,2,1; `-` for the empty ideal.
    #[arg(long)]
    pub ideal: Option<String>,
    /// Comma-separated parts, e.g. 4,2,1,1; `-` for the empty partition.
    #[arg(long)]
    pub partition: Option<String>,
}

#[derive(Debug, Args)]
pub struct BijectionArgs {
    #[command(flatten)]
    pub pair: Pair,
    #[command(flatten)]
    pub side: Side,
}

#[derive(Debug, Subcommand)]
pub enum Target {
    /// Total, count and largest size of the cores, over all coprime pairs
    /// with s+t <= max-sum or for one pair.
    Armstrong {
        #[arg(long, default_value_t = 12, conflicts_with = "pair")]
        max_sum: u64,
        #[arg(long, num_args = 2, value_names = ["S", "T"])]
        pair: Option<Vec<u64>>,
    },
    /// Total (s,s+1)-core size: brute force, recursion, closed form and
    /// fiber decomposition; the average size formula.
    Catalan {
        #[arg(long, default_value_t = 12)]
        max_s: u64,
        #[arg(long, default_value_t = 100)]
        average_max: u64,
    },
    /// The two summation identities, the recursions, and the closed forms
    /// against brute force.
    Identities {
        #[arg(long, default_value_t = 300)]
        max_s: u64,
        #[arg(long, default_value_t = 12)]
        brute_max: u64,
    },
    /// Total size of the (3,3n+1)-cores that are not (3,3n-2)-cores.
    Delta {
        #[arg(long, default_value_t = 5)]
        max_n: u64,
    },
    /// The (4,2n+1) totals, their recurrence, and brute force.
    S4 {
        #[arg(long, default_value_t = 200)]
        max_n: u64,
        #[arg(long, default_value_t = 4)]
        brute_max: u64,
    },
    /// Every (s,t)-core is an (s,s+t)-core.
    LemmaSt {
        #[arg(long, default_value_t = 12)]
        max_sum: u64,
    },
}

impl Target {
    fn name(&self) -> &'static str {
        match self {
            Target::Armstrong { .. } => "armstrong",
            Target::Catalan { .. } => "catalan",
            Target::Identities { .. } => "identities",
            Target::Delta { .. } => "delta",
            Target::S4 { .. } => "s4",
            Target::LemmaSt { .. } => "lemma-st",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum RenderTarget {
    /// Hook lengths of every cell.
    Young {
        /// Comma-separated parts; `-` for the empty partition.
        partition: String,
    },
    /// The poset of gaps of <s,t>, largest element on top.
    Hasse(Pair),
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] stcore::Error),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        use stcore::Error as E;
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Core(
                E::NotCoprime { .. }
                | E::ZeroGenerator { .. }
                | E::NotAGap { .. }
                | E::NotAnIdeal { .. }
                | E::InvalidPartition(_)
                | E::NotACore { .. },
            ) => EXIT_USAGE,
            CliError::Core(_) | CliError::Io(_) => EXIT_FAILURE,
        }
    }
}

/// Parses `args` (including the program name), runs the command, and
/// returns the process exit code.
pub fn run_with<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match run(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn executor(cli: &Cli) -> Result<Executor, CliError> {
    let threads = cli
        .threads
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    Executor::new(threads).map_err(|e| CliError::Usage(format!("cannot start {threads} threads: {e}")))
}

fn run(cli: &Cli, out: &mut impl Write, err: &mut impl Write) -> Result<i32, CliError> {
    let format = cli.format;
    match &cli.command {
        Command::List(Pair { s, t }) => {
            let poset = GapPoset::new(*s, *t)?;
            check_cap(*s, *t, cli.cap)?;
            let ex = executor(cli)?;
            let ideals = ex.ideals(&poset);
            let cores = ideals
                .iter()
                .map(|v| output::CoreRecord::new(v, &partition_of_elements(v)))
                .collect();
            let stats = (&ex.tally(&poset).stats()).into();
            let listing = output::Listing { s: s.to_string(), t: t.to_string(), cores, stats };
            out.write_all(output::listing(format, &listing).as_bytes())?;
        }
        Command::Stats(Pair { s, t }) => {
            let poset = GapPoset::new(*s, *t)?;
            check_cap(*s, *t, cli.cap)?;
            let stats = executor(cli)?.tally(&poset).stats();
            out.write_all(output::stats(format, &(&stats).into()).as_bytes())?;
        }
        Command::Verify { target } => {
            let report = verify_target(cli, target)?;
            let record = output::VerifyRecord::new(target.name(), &report);
            out.write_all(output::verify(format, &record).as_bytes())?;
            return Ok(verdict(&report, err)?);
        }
        Command::Bijection(BijectionArgs { pair: Pair { s, t }, side }) => {
            let poset = GapPoset::new(*s, *t)?;
            let (ideal, partition) = match (&side.ideal, &side.partition) {
                (Some(list), _) => {
                    let ideal = OrderIdeal::new(&poset, parse_list(list)?)?;
                    let p = ideal_to_partition(&ideal);
                    (ideal, p)
                }
                (None, Some(text)) => {
                    let p: Partition = text.parse()?;
                    (partition_to_ideal_in(&poset, &p)?, p)
                }
                (None, None) => unreachable!("clap requires one side"),
            };
            out.write_all(output::bijection(format, &output::BijectionRecord::new(&ideal, &partition)).as_bytes())?;
        }
        Command::Render { what: RenderTarget::Young { partition } } => {
            let p: Partition = partition.parse()?;
            out.write_all(output::young(format, &p).as_bytes())?;
        }
        Command::Render { what: RenderTarget::Hasse(Pair { s, t }) } => {
            let poset = GapPoset::new(*s, *t)?;
            out.write_all(output::hasse(format, &poset).as_bytes())?;
        }
    }
    Ok(EXIT_OK)
}

/// Exit code for a finished report; on failure the first counterexample
/// goes to `err` with both sides in full.
pub fn verdict(report: &Report, err: &mut impl Write) -> std::io::Result<i32> {
    match report.first_failure() {
        None => Ok(EXIT_OK),
        Some(c) => {
            writeln!(err, "counterexample: {} at {}", c.claim, c.index)?;
            writeln!(err, "  lhs = {}", c.lhs)?;
            writeln!(err, "  rhs = {}", c.rhs)?;
            Ok(EXIT_FAILURE)
        }
    }
}

fn verify_target(cli: &Cli, target: &Target) -> Result<Report, CliError> {
    let cap = cli.cap;
    let ex = executor(cli)?;
    let report = match target {
        Target::Armstrong { pair: Some(pair), .. } => {
            GapPoset::new(pair[0], pair[1])?;
            verify::armstrong_pair(&ex, pair[0], pair[1], cap)?
        }
        Target::Armstrong { max_sum, pair: None } => verify::armstrong(&ex, *max_sum, cap)?,
        Target::Catalan { max_s, average_max } => verify::catalan(&ex, *max_s, *average_max, cap)?,
        Target::Identities { max_s, brute_max } => verify::identities(&ex, *max_s, *brute_max, cap)?,
        Target::Delta { max_n } => verify::delta(*max_n, cap)?,
        Target::S4 { max_n, brute_max } => verify::s4(&ex, *max_n, *brute_max, cap)?,
        Target::LemmaSt { max_sum } => verify::lemma_st(*max_sum, cap)?,
    };
    Ok(report)
}

/// Parses `7,4,2,1` in any order; `-` or an empty string is the empty list.
fn parse_list(text: &str) -> Result<Vec<u64>, CliError> {
    let text = text.trim();
    if text.is_empty() || text == "-" {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|w| w.trim().parse::<u64>().map_err(|_| CliError::Usage(format!("not a positive integer: {w:?}"))))
        .collect()
}
