use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};

use empress::analysis::{
    check_complementary, check_equivalence, check_relation, first_magnitudes, first_occurrences, good_triple_failure,
    queen_bee_residuals, queen_dee_from_word, transfer_holds, write_residual_csv, Equivalence, Relation,
    SumIdentityTarget,
};
use empress::closed_forms::two_queen_dee_pairs;
use empress::morphic::{catalog_spec, erase_letters, table_from, Coding, Morphism, Word};
use empress::solver::SolverLimits;
use empress::sources::{Formula, MorphicSource, SourceRegistry, TableSource};
use empress::{Error, PPositionTable, SearchMode, Solver};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(name = "empress", version, about = "P-positions of Wythoff-type queen games")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Retrograde search for the first P-positions of a rule
    Solve(SolveArgs),
    /// Table from a closed-form generator
    Formula(FormulaArgs),
    /// Fixed-point words of substitutions and the tables they code
    Morphic(MorphicArgs),
    /// Cross-checks between tables; exit 1 on failure
    Verify(VerifyArgs),
    /// Queen Bee residual scan, as `n,r` CSV
    Scan(ScanArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Tsv,
    Json,
}

#[derive(Args)]
struct Output {
    /// Number of pairs
    #[arg(long, default_value_t = 15)]
    count: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args)]
struct SolveArgs {
    /// Rule, `name[:p1,p2]`
    #[arg(long)]
    queen: String,
    /// Use the line index instead of enumerating every move
    #[arg(long)]
    fast: bool,
    /// Deepest Manhattan level to search before giving up
    #[arg(long)]
    max_level: Option<u64>,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct FormulaArgs {
    /// Generator, `name[:p1,p2]`
    #[arg(long)]
    name: String,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct MorphicArgs {
    /// Catalog morphism, `name[:p1,p2]`
    #[arg(long, conflicts_with = "rules", required_unless_present = "rules")]
    name: Option<String>,
    /// Literal morphism such as `a:ab,b:aaa`
    #[arg(long)]
    rules: Option<String>,
    /// Letter the fixed point starts with
    #[arg(long, default_value_t = 'a')]
    seed: char,
    /// Letters to delete, comma separated
    #[arg(long, value_delimiter = ',')]
    erase: Vec<char>,
    /// Coding applied after erasing, such as `a:a,b:,c:b`
    #[arg(long)]
    code: Option<String>,
    /// Print this many letters of the word
    #[arg(long, conflicts_with = "table", required_unless_present = "table")]
    prefix: Option<usize>,
    /// Read pairs off the positions of two letters, `a,c`
    #[arg(long, value_delimiter = ',', num_args = 1)]
    table: Vec<char>,
    #[command(flatten)]
    out: Output,
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Equiv,
    /// `a_{b_n} - a_n - b_n` in {0, -1}
    #[value(name = "eq1", alias = "sum-identity")]
    SumIdentity,
    /// Queen Dee and 2-Queen Dee tables as half-differences and half-sums
    #[value(name = "lemma3", alias = "transfer")]
    Transfer,
    GoodTriples,
    Relation,
    Complementary,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    check: Check,
    /// Table source, `solve:<rule>`, `formula:<name>` or `morphic:<name>`
    #[arg(long)]
    left: Option<String>,
    /// Second table source for `equiv`
    #[arg(long)]
    right: Option<String>,
    /// Game for `eq1`: queen-dee, 2-queen-dee, queen-bee, two-one
    #[arg(long)]
    target: Option<String>,
    /// Relation for `relation`: b=2a, b=a+kn, b=2a+n, b=a+kn-j
    #[arg(long)]
    relation: Option<String>,
    #[arg(long, default_value_t = 15)]
    count: usize,
}

#[derive(Args)]
struct ScanArgs {
    /// Only `queen-bee` is supported
    #[arg(long, default_value = "queen-bee")]
    target: String,
    #[arg(long)]
    max_n: u64,
    /// Write the CSV here; the summary then goes to standard output
    #[arg(long)]
    emit: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Resource(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Capacity { .. } => Failure::Resource(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Resource(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn after_help() -> String {
    let registry = SourceRegistry::new();
    format!(
        "Rules (solve --queen, name[:p1,p2]):\n{}\nFormulas (formula --name):\n{}\n\
         Morphisms (morphic --name):\n  tribonacci, fourbonacci, fibonacci, period-doubling, two-one,\n  \
         holladay:k, fraenkel:k,j, restricted:k,j\n\n\
         Morphic tables (verify morphic:<name>):\n{}\n\
         Table sources for verify: solve:<rule>, solve-exhaustive:<rule>, formula:<name>, morphic:<name>\n\
         Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 resource limit",
        registry.rules().help(),
        Formula::HELP,
        MorphicSource::HELP
    )
}

fn main() -> ExitCode {
    let matches = Cli::command().after_help(after_help()).get_matches();
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(EXIT_FAIL),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_RESOURCE)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Outcome {
    match command {
        Command::Solve(args) => {
            positive(args.out.count)?;
            let variant = SourceRegistry::new().rules().parse(&args.queen)?;
            let mut solver = Solver::new(variant)?;
            if let Some(max_level) = args.max_level {
                solver = solver.with_limits(SolverLimits { max_level, ..SolverLimits::default() });
            }
            let table = solver.p_positions(args.out.count, SearchMode::from_fast(args.fast))?;
            emit_table(out, &table, args.out.format)
        }
        Command::Formula(args) => {
            positive(args.out.count)?;
            emit_table(out, &Formula::parse(&args.name)?.table(args.out.count)?, args.out.format)
        }
        Command::Morphic(args) => morphic(args, out),
        Command::Verify(args) => verify(args, out),
        Command::Scan(args) => scan(args, out),
    }
}

fn positive(count: usize) -> Outcome {
    if count == 0 {
        return Err(Failure::Usage("count must be at least 1".into()));
    }
    Ok(())
}

fn emit_table(out: &mut impl Write, table: &PPositionTable, format: Format) -> Outcome {
    match format {
        Format::Csv | Format::Tsv => {
            let sep = if matches!(format, Format::Csv) { ',' } else { '\t' };
            writeln!(out, "n{sep}a{sep}b")?;
            for (n, a, b) in table.iter() {
                writeln!(out, "{n}{sep}{a}{sep}{b}")?;
            }
        }
        Format::Json => {
            let rows: Vec<[u64; 3]> = table.iter().map(|(n, a, b)| [n as u64, a, b]).collect();
            let text = serde_json::to_string(&rows).map_err(|e| Failure::Resource(e.to_string()))?;
            writeln!(out, "{text}")?;
        }
    }
    Ok(())
}

fn morphic(args: MorphicArgs, out: &mut impl Write) -> Outcome {
    let morphism = match (&args.name, &args.rules) {
        (Some(name), _) => catalog_spec(name)?,
        (None, Some(rules)) => Morphism::parse(rules)?,
        (None, None) => return Err(Failure::Usage("give --name or --rules".into())),
    };
    let coding = args.code.as_deref().map(Coding::parse).transpose()?;
    let make = |len: usize| -> empress::Result<Word> {
        let w = erase_letters(&morphism.fixed_point(args.seed, len)?, &args.erase);
        match &coding {
            Some(c) => c.apply(&w),
            None => Ok(w),
        }
    };
    if let Some(len) = args.prefix {
        let mut budget = len.max(1);
        let word = loop {
            let w = make(budget)?;
            if w.len() >= len || budget >= len.saturating_mul(64).max(1 << 10) {
                break w;
            }
            budget *= 2;
        };
        if word.len() < len {
            return Err(Failure::Usage(format!("the coded word has fewer than {len} letters")));
        }
        writeln!(out, "{}", word.prefix(len))?;
        return Ok(());
    }
    let &[la, lb] = args.table.as_slice() else {
        return Err(Failure::Usage("--table takes two letters, such as a,c".into()));
    };
    positive(args.out.count)?;
    emit_table(out, &table_from(make, la, lb, args.out.count)?, args.out.format)
}

fn required<'a>(value: &'a Option<String>, flag: &str) -> std::result::Result<&'a str, Failure> {
    value.as_deref().ok_or_else(|| Failure::Usage(format!("this check needs --{flag}")))
}

fn verdict(out: &mut impl Write, ok: bool, line: String) -> Outcome {
    writeln!(out, "{} {line}", if ok { "PASS" } else { "FAIL" })?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn verify(args: VerifyArgs, out: &mut impl Write) -> Outcome {
    positive(args.count)?;
    let registry = SourceRegistry::new();
    let count = args.count;
    let load = |spec: &str| -> std::result::Result<(String, PPositionTable), Failure> {
        let source = registry.parse(spec)?;
        Ok((source.describe(), source.table(count)?))
    };
    match args.check {
        Check::Equiv => {
            let (ln, left) = load(required(&args.left, "left")?)?;
            let (rn, right) = load(required(&args.right, "right")?)?;
            match check_equivalence(&left, &right, count)? {
                Equivalence::Equal => verdict(out, true, format!("equiv {ln} = {rn} for n <= {count}")),
                Equivalence::MismatchAt(n) => {
                    let (l, r) = (left.get(n).unwrap_or_default(), right.get(n).unwrap_or_default());
                    verdict(out, false, format!("equiv first mismatch at n={n}: {ln} {l:?} vs {rn} {r:?}"))
                }
            }
        }
        Check::SumIdentity => {
            let target = SumIdentityTarget::parse(required(&args.target, "target")?)?;
            let report = target.check(count)?;
            let detail = format!("max |r| = {}", report.max_abs());
            match report.violations.first() {
                None => verdict(out, true, format!("sum identity residuals in {{0,-1}} for n <= {count}, {detail}")),
                Some(v) => verdict(
                    out,
                    false,
                    format!(
                        "sum identity {} violations for n <= {count}, first {v}, {detail}",
                        report.violations.len()
                    ),
                ),
            }
        }
        Check::Transfer => {
            let ok = transfer_holds(&queen_dee_from_word(count)?, &two_queen_dee_pairs(count), count)?;
            verdict(out, ok, format!("transfer identities for n <= {count}"))
        }
        Check::GoodTriples => {
            let (name, table) = load(args.left.as_deref().unwrap_or("formula:2-queen-dee"))?;
            match good_triple_failure(&table, count)? {
                None => verdict(out, true, format!("good-triples {name} for n <= {count}")),
                Some((_, why)) => verdict(out, false, format!("good-triples {name}: {why}")),
            }
        }
        Check::Relation => {
            let relation = Relation::parse(required(&args.relation, "relation")?)?;
            let (name, table) = load(required(&args.left, "left")?)?;
            let ok = check_relation(&table, relation, count);
            let text = args.relation.as_deref().unwrap_or_default();
            verdict(out, ok, format!("relation {text} on {name} for n <= {count}"))
        }
        Check::Complementary => {
            let (name, table) = load(required(&args.left, "left")?)?;
            verdict(out, check_complementary(&table, count), format!("complementary {name} for n <= {count}"))
        }
    }
}

fn scan(args: ScanArgs, out: &mut impl Write) -> Outcome {
    if args.target != "queen-bee" {
        return Err(Failure::Usage(format!("unknown scan target `{}`", args.target)));
    }
    if args.max_n == 0 {
        return Err(Failure::Usage("max-n must be at least 1".into()));
    }
    let residuals = queen_bee_residuals(args.max_n);
    let mut summary: Vec<String> =
        first_occurrences(&residuals).iter().map(|(r, n)| format!("first r={r} at n={n}")).collect();
    summary.extend(first_magnitudes(&residuals).iter().map(|(m, n)| format!("first |r|={m} at n={n}")));
    match &args.emit {
        Some(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            write_residual_csv(&mut file, &residuals)?;
            file.flush()?;
            for line in summary {
                writeln!(out, "{line}")?;
            }
        }
        None => {
            write_residual_csv(out, &residuals)?;
            for line in summary {
                eprintln!("{line}");
            }
        }
    }
    Ok(())
}
