//! `sz`: count, list and cross-check Schreier / Zeckendorf subset families.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 argument error,
//! 3 enumeration ceiling exceeded, 4 bijection precondition violated.

use std::fmt;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use sz_core::bijection::verify_bijection_with;
use sz_core::counts::{self, verify_family_with};
use sz_core::{
    Count, Error, FiniteSet, MaxParity, Oracle, PredicateSpec, SchreierKind, SequenceFamily,
};

#[derive(Debug, Parser)]
#[command(name = "sz", version, about = "Exact counts of Schreier and Zeckendorf subsets of {1..n}")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print one sequence value.
    Count(CountArgs),
    /// Print a range of sequence values.
    Table(TableArgs),
    /// List the subsets of {1..n} that pass a filter.
    List(ListArgs),
    /// Compare enumeration against closed forms and recurrences.
    Verify(VerifyArgs),
    /// Apply the weak-Schreier to Zeckendorf bijection (or its inverse).
    Bijection(BijectionArgs),
}

#[derive(Debug, Args)]
struct FamilyArgs {
    /// One of M, A, A_binomial, B, C, D, E, Lw, Ls, H, I, J, P, Q.
    family: String,
    /// Gap parameter for H, I and J.
    #[arg(long = "k")]
    k: Option<u64>,
    /// Accept k = 1 for H, I and J.
    #[arg(long)]
    allow_k1: bool,
}

impl FamilyArgs {
    fn resolve(&self) -> Result<SequenceFamily, Failure> {
        Ok(SequenceFamily::from_tag(&self.family, self.k, self.allow_k1)?)
    }
}

#[derive(Debug, Args)]
struct CountArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long = "n")]
    n: u64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutputFormat {
    Plain,
    Bfile,
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long)]
    from: u64,
    #[arg(long)]
    to: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SchreierArg {
    Any,
    Weak,
    Strong,
    Maximal,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ParityArg {
    Any,
    Even,
    Odd,
}

#[derive(Debug, Args)]
struct ListArgs {
    #[arg(long = "n")]
    n: u64,
    #[arg(long, value_enum, default_value_t = SchreierArg::Any)]
    schreier: SchreierArg,
    /// Require every two elements to differ by at least this much.
    #[arg(long)]
    zeck_k: Option<u64>,
    /// Require every consecutive difference to be odd.
    #[arg(long)]
    odd_gaps: bool,
    /// Only sets containing n.
    #[arg(long, conflicts_with = "max_n")]
    contains_n: bool,
    /// Only sets whose maximum is n.
    #[arg(long)]
    max_n: bool,
    /// Parity of the maximum; the empty set passes either way.
    #[arg(long, value_enum, default_value_t = ParityArg::Any)]
    parity: ParityArg,
    #[arg(long)]
    include_empty: bool,
}

/// Inclusive range of gap parameters, written `a..b`, `a..=b` or `a`.
#[derive(Debug, Clone)]
struct KRange(RangeInclusive<u64>);

impl FromStr for KRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<u64>().map_err(|_| format!("bad k in `{s}`"));
        let (lo, hi) = match s.split_once("..") {
            Some((lo, hi)) => (parse(lo)?, parse(hi.trim_start_matches('='))?),
            None => {
                let k = parse(s)?;
                (k, k)
            }
        };
        if lo > hi {
            return Err(format!("empty k range `{s}`"));
        }
        Ok(Self(lo..=hi))
    }
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// A family tag, `bijection`, or `all`.
    target: String,
    #[arg(long)]
    max_n: u64,
    /// Gap parameters for H, I and J (inclusive).
    #[arg(long, default_value = "2..5")]
    k_range: KRange,
    /// Single gap parameter; overrides --k-range.
    #[arg(long = "k")]
    k: Option<u64>,
    #[arg(long)]
    allow_k1: bool,
}

#[derive(Debug, Args)]
struct BijectionArgs {
    #[arg(long = "n")]
    n: u64,
    /// Set in text form, e.g. "{2,3}".
    #[arg(long)]
    set: String,
    /// Apply the inverse map instead.
    #[arg(long)]
    invert: bool,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Mismatch(String),
    Ceiling(String),
    Precondition(String),
    Io(io::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Self::Mismatch(_) => 1,
            Self::Usage(_) | Self::Io(_) => 2,
            Self::Ceiling(_) => 3,
            Self::Precondition(_) => 4,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Usage(m) | Self::Mismatch(m) | Self::Ceiling(m) | Self::Precondition(m) => {
                f.write_str(m)
            }
            Self::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CeilingExceeded { .. } => Self::Ceiling(e.to_string()),
            Error::Precondition(_) => Self::Precondition(e.to_string()),
            other => Self::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self::Io(e)
    }
}

type CmdResult = Result<(), Failure>;

fn oracle() -> Result<Oracle, Failure> {
    Ok(Oracle::from_env()?)
}

fn cmd_count(args: &CountArgs, out: &mut impl Write) -> CmdResult {
    let family = args.family.resolve()?;
    writeln!(out, "{}", counts::count(family, args.n)?)?;
    Ok(())
}

#[derive(Serialize)]
struct JsonRow {
    n: u64,
    value: String,
}

fn cmd_table(args: &TableArgs, out: &mut impl Write) -> CmdResult {
    let family = args.family.resolve()?;
    if args.from > args.to {
        return Err(Failure::Usage(format!("empty range: --from {} > --to {}", args.from, args.to)));
    }
    let rows = (args.from..=args.to)
        .map(|n| Ok((n, counts::count(family, n)?)))
        .collect::<Result<Vec<(u64, Count)>, Error>>()?;
    match args.format {
        OutputFormat::Plain => {
            for (_, v) in &rows {
                writeln!(out, "{v}")?;
            }
        }
        OutputFormat::Bfile => {
            for (n, v) in &rows {
                writeln!(out, "{n} {v}")?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "n,value")?;
            for (n, v) in &rows {
                writeln!(out, "{n},{v}")?;
            }
        }
        OutputFormat::Json => {
            let json: Vec<JsonRow> = rows
                .iter()
                .map(|(n, v)| JsonRow { n: *n, value: v.to_string() })
                .collect();
            let text = serde_json::to_string(&json).map_err(|e| Failure::Io(e.into()))?;
            writeln!(out, "{text}")?;
        }
    }
    Ok(())
}

fn cmd_list(args: &ListArgs, out: &mut impl Write) -> CmdResult {
    let mut spec = PredicateSpec::new().schreier(match args.schreier {
        SchreierArg::Any => SchreierKind::Any,
        SchreierArg::Weak => SchreierKind::Weak,
        SchreierArg::Strong => SchreierKind::Strong,
        SchreierArg::Maximal => SchreierKind::Maximal,
    });
    spec = spec.parity(match args.parity {
        ParityArg::Any => MaxParity::Any,
        ParityArg::Even => MaxParity::Even,
        ParityArg::Odd => MaxParity::Odd,
    });
    if let Some(k) = args.zeck_k {
        spec = spec.zeckendorf(k);
    }
    if args.odd_gaps {
        spec = spec.odd_gaps();
    }
    if args.contains_n {
        spec = spec.contains_n();
    }
    if args.max_n {
        spec = spec.max_equals_n();
    }
    if args.include_empty {
        spec = spec.with_empty();
    }
    let mut count = 0u64;
    for s in oracle()?.enumerate_matching(args.n, &spec)? {
        writeln!(out, "{s}")?;
        count += 1;
    }
    writeln!(out, "# count: {count}")?;
    Ok(())
}

enum Target {
    Family(SequenceFamily),
    Bijection,
}

fn verify_targets(args: &VerifyArgs) -> Result<Vec<Target>, Failure> {
    let ks: Vec<u64> = match args.k {
        Some(k) => vec![k],
        None => args.k_range.0.clone().collect(),
    };
    let gapped = |tag: &str| -> Result<Vec<Target>, Failure> {
        ks.iter()
            .map(|&k| Ok(Target::Family(SequenceFamily::from_tag(tag, Some(k), args.allow_k1)?)))
            .collect()
    };
    match args.target.to_ascii_lowercase().as_str() {
        "bijection" => Ok(vec![Target::Bijection]),
        "all" => {
            let mut targets: Vec<Target> = SequenceFamily::UNPARAMETERIZED
                .into_iter()
                .map(Target::Family)
                .collect();
            for tag in ["H", "I", "J"] {
                targets.extend(gapped(tag)?);
            }
            targets.push(Target::Bijection);
            Ok(targets)
        }
        tag @ ("h" | "i" | "j") => gapped(tag),
        tag => Ok(vec![Target::Family(SequenceFamily::from_tag(tag, None, false)?)]),
    }
}

fn cmd_verify(args: &VerifyArgs, out: &mut impl Write) -> CmdResult {
    let oracle = oracle()?;
    if args.max_n == 0 {
        return Err(Failure::Usage("--max-n must be at least 1".into()));
    }
    if args.max_n > u64::from(oracle.ceiling()) {
        return Err(Error::CeilingExceeded { n: args.max_n, ceiling: oracle.ceiling() }.into());
    }
    let targets = verify_targets(args)?;
    let mut rows = 0usize;
    let mut first_failure: Option<String> = None;

    for target in targets {
        match target {
            Target::Family(family) => {
                let report = verify_family_with(&oracle, family, args.max_n)?;
                for row in &report.rows {
                    let rec = row.recurrence.as_ref().map_or("-".to_string(), |r| r.to_string());
                    let line = format!(
                        "{:<12} n={:<3} oracle={} formula={} recurrence={} {}",
                        family.to_string(),
                        row.n,
                        row.oracle,
                        row.formula,
                        rec,
                        if row.all_equal { "PASS" } else { "FAIL" }
                    );
                    writeln!(out, "{line}")?;
                    if !row.all_equal && first_failure.is_none() {
                        first_failure = Some(line);
                    }
                    rows += 1;
                }
            }
            Target::Bijection => {
                for n in 1..=args.max_n {
                    let r = verify_bijection_with(&oracle, n)?;
                    let line = format!(
                        "{:<12} n={:<3} domain={} image={} codomain={} in_y={} round_trip={} {}",
                        "bijection",
                        n,
                        r.domain_size,
                        r.image_size,
                        r.codomain_size,
                        r.all_images_in_y,
                        r.round_trip_ok,
                        if r.is_bijection { "PASS" } else { "FAIL" }
                    );
                    writeln!(out, "{line}")?;
                    if !r.is_bijection && first_failure.is_none() {
                        first_failure = Some(line);
                    }
                    rows += 1;
                }
            }
        }
    }

    match first_failure {
        Some(line) => Err(Failure::Mismatch(format!("verification failed: {line}"))),
        None => {
            writeln!(out, "# {rows} rows, all PASS")?;
            Ok(())
        }
    }
}

fn cmd_bijection(args: &BijectionArgs, out: &mut impl Write) -> CmdResult {
    let set: FiniteSet = args.set.parse()?;
    let image = if args.invert {
        sz_core::inverse(&set, args.n)?
    } else {
        sz_core::forward(&set, args.n)?
    };
    writeln!(out, "{image}")?;
    Ok(())
}

fn run(cli: &Cli) -> CmdResult {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = match &cli.command {
        Command::Count(a) => cmd_count(a, &mut out),
        Command::Table(a) => cmd_table(a, &mut out),
        Command::List(a) => cmd_list(a, &mut out),
        Command::Verify(a) => cmd_verify(a, &mut out),
        Command::Bijection(a) => cmd_bijection(a, &mut out),
    };
    out.flush()?;
    result
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
