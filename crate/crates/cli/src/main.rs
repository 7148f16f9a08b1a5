//! Command-line front end: compute counts, dump series coefficients,
//! verify identities and relations, scan the conjecture registry, and
//! evaluate the closed-form counts.
//!
//! Exit codes are a stable contract for CI: 0 means everything checked out,
//! 1 is an operational error (bad arguments, unknown ids, I/O), and 2 means
//! a mathematical counterexample or backend disagreement was found.

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use theta_lab::closedform;
use theta_lab::conjectures::{self, ScanOptions, ScanOutcome};
use theta_lab::form::FormTuple;
use theta_lab::oracle;
use theta_lab::relations::{
    self, parse_relation, Backend, CountKind, RegistryEntry, RelationSpec,
};
use theta_lab::report::{rational_string, CheckReport, FailureKind};
use theta_lab::theta;

const EXIT_PASS: u8 = 0;
const EXIT_ERROR: u8 = 1;
const EXIT_COUNTEREXAMPLE: u8 = 2;

/// Environment variable consulted when `--precision` is not given.
const PRECISION_ENV: &str = "THETA_LAB_PRECISION";

#[derive(Parser)]
#[command(
    name = "theta-lab",
    about = "Representation counts and relation verification for quaternary forms",
    version
)]
struct Cli {
    /// Worker threads for parallel checks (default: available parallelism;
    /// 1 forces deterministic sequential order).
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Series,
    Enumerate,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Backend {
        match b {
            BackendArg::Series => Backend::Series,
            BackendArg::Enumerate => Backend::Enumerate,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute one count N/t/t'(a,b,c,d;n).
    Count(CountArgs),
    /// Dump series coefficients: phi/psi with a power, or N/t/t' for a form.
    Series(SeriesArgs),
    /// Verify a built-in identity or relation id, or an ad hoc relation
    /// expression such as "t(1,1,1,1;n) == 16*t'(1,1,1,1;n)".
    Verify(VerifyArgs),
    /// Scan conjectures for counterexamples and emit a report.
    ScanConjectures(ScanArgs),
    /// Evaluate a closed-form count at n.
    Formula(FormulaArgs),
    /// List the registries: identities, relations, conjectures, formulas.
    List,
}

#[derive(Args)]
struct CountArgs {
    /// Count kind: N, t, or t'.
    kind: String,
    a: u64,
    b: u64,
    c: u64,
    d: u64,
    n: u64,
    /// Backend to use.
    #[arg(long, value_enum, default_value_t = BackendArg::Enumerate)]
    backend: BackendArg,
    /// Compute with both backends and report agreement (exit 2 on
    /// disagreement).
    #[arg(long)]
    both: bool,
}

#[derive(Args)]
struct SeriesArgs {
    /// What to expand: phi, psi, N, t, or t'.
    what: String,
    /// `k` for phi/psi, or the four form entries for N/t/t'.
    args: Vec<u64>,
    /// Truncation precision (number of coefficients).
    #[arg(long)]
    precision: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity id (1.8..1.12, L2.2..L2.4), relation id (thm2.11, eq1.4,
    /// remark2.1-1112, ...), conjecture id (2.1..2.23), or a relation
    /// expression.
    target: String,
    /// Largest n to test for relation checks.
    #[arg(long = "max-n", default_value_t = 100)]
    max_n: u64,
    /// Series precision: identity checks default to 1024, relation checks
    /// are auto-sized. Overridable here or via THETA_LAB_PRECISION.
    #[arg(long)]
    precision: Option<usize>,
    #[arg(long, value_enum, default_value_t = BackendArg::Enumerate)]
    backend: BackendArg,
}

#[derive(Args)]
struct ScanArgs {
    /// Comma-separated conjecture ids (default: all 23).
    #[arg(long, value_delimiter = ',')]
    ids: Option<Vec<String>>,
    #[arg(long = "max-n", default_value_t = 200)]
    max_n: u64,
    #[arg(long, value_enum, default_value_t = BackendArg::Series)]
    backend: BackendArg,
    /// Include per-conjecture wall-clock times (makes output non-reproducible).
    #[arg(long)]
    timing: bool,
    #[arg(long)]
    precision: Option<usize>,
}

#[derive(Args)]
struct FormulaArgs {
    /// One of: t1111, t1122, t1188, t1148, t1336, t11624.
    name: String,
    n: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(workers) = cli.workers {
        if rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .is_err()
        {
            eprintln!("error: worker pool already initialized");
            return ExitCode::from(EXIT_ERROR);
        }
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<u8> {
    match &cli.command {
        Command::Count(args) => cmd_count(cli, args),
        Command::Series(args) => cmd_series(cli, args),
        Command::Verify(args) => cmd_verify(cli, args),
        Command::ScanConjectures(args) => cmd_scan(cli, args),
        Command::Formula(args) => cmd_formula(cli, args),
        Command::List => cmd_list(cli),
    }
}

fn emit(cli: &Cli, content: &str) -> anyhow::Result<()> {
    match &cli.out {
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            match writeln!(stdout, "{content}") {
                Ok(()) => Ok(()),
                // downstream pipe closed early (e.g. `| head`): not an error
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {
                    std::process::exit(i32::from(EXIT_PASS))
                }
                Err(e) => Err(e.into()),
            }
        }
        Some(path) => std::fs::write(path, format!("{content}\n"))
            .with_context(|| format!("writing {}", path.display())),
    }
}

fn precision_setting(flag: Option<usize>) -> anyhow::Result<Option<usize>> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var(PRECISION_ENV) {
        Ok(v) => {
            let p: usize = v
                .parse()
                .map_err(|_| anyhow!("{PRECISION_ENV} must be a positive integer, got `{v}`"))?;
            Ok(Some(p))
        }
        Err(_) => Ok(None),
    }
}

fn parse_kind(s: &str) -> anyhow::Result<CountKind> {
    match s {
        "N" => Ok(CountKind::N),
        "t" => Ok(CountKind::T),
        "t'" | "tprime" => Ok(CountKind::TPrime),
        other => bail!("unknown count kind `{other}` (expected N, t, or t')"),
    }
}

fn count_with(kind: CountKind, form: FormTuple, n: u64, backend: Backend) -> anyhow::Result<u64> {
    match backend {
        Backend::Enumerate => Ok(match kind {
            CountKind::N => oracle::count_n(form, n),
            CountKind::T => oracle::count_t(form, n),
            CountKind::TPrime => oracle::count_t_prime(form, n),
        }),
        Backend::Series => {
            let precision = n as usize + 1;
            let series = match kind {
                CountKind::N => theta::n_series(form, precision)?,
                CountKind::T => theta::t_series(form, precision)?,
                CountKind::TPrime => theta::t_prime_series(form, precision)?,
            };
            Ok(series.coeff(n as usize)? as u64)
        }
    }
}

fn cmd_count(cli: &Cli, args: &CountArgs) -> anyhow::Result<u8> {
    let kind = parse_kind(&args.kind)?;
    let form = FormTuple::new(args.a, args.b, args.c, args.d)?;
    if args.both {
        let by_enum = count_with(kind, form, args.n, Backend::Enumerate)?;
        let by_series = count_with(kind, form, args.n, Backend::Series)?;
        let agree = by_enum == by_series;
        let content = match cli.format {
            Format::Json => json!({
                "kind": kind.symbol(),
                "form": form.to_string(),
                "n": args.n,
                "enumerate": by_enum,
                "series": by_series,
                "agree": agree,
            })
            .to_string(),
            _ => format!(
                "enumerate={by_enum} series={by_series} {}",
                if agree { "agree" } else { "DISAGREE" }
            ),
        };
        emit(cli, &content)?;
        return Ok(if agree { EXIT_PASS } else { EXIT_COUNTEREXAMPLE });
    }
    let value = count_with(kind, form, args.n, args.backend.into())?;
    let content = match cli.format {
        Format::Json => json!({
            "kind": kind.symbol(),
            "form": form.to_string(),
            "n": args.n,
            "value": value,
        })
        .to_string(),
        _ => value.to_string(),
    };
    emit(cli, &content)?;
    Ok(EXIT_PASS)
}

fn cmd_series(cli: &Cli, args: &SeriesArgs) -> anyhow::Result<u8> {
    let precision = precision_setting(args.precision)?.unwrap_or(32);
    let series = match (args.what.as_str(), args.args.as_slice()) {
        ("phi", [k]) => theta::phi_series(*k as usize, precision),
        ("psi", [k]) => theta::psi_series(*k as usize, precision),
        ("N", [a, b, c, d]) => theta::n_series(FormTuple::new(*a, *b, *c, *d)?, precision)?,
        ("t", [a, b, c, d]) => theta::t_series(FormTuple::new(*a, *b, *c, *d)?, precision)?,
        ("t'" | "tprime", [a, b, c, d]) => {
            theta::t_prime_series(FormTuple::new(*a, *b, *c, *d)?, precision)?
        }
        ("phi" | "psi", _) => bail!("phi/psi take one argument: the power of q"),
        ("N" | "t" | "t'" | "tprime", _) => bail!("N/t/t' take four form entries"),
        (other, _) => bail!("unknown series `{other}` (expected phi, psi, N, t, t')"),
    };
    let content = match cli.format {
        Format::Json => Value::from(series.coeffs().to_vec()).to_string(),
        Format::Csv => {
            let mut s = String::from("n,coefficient\n");
            for (n, c) in series.coeffs().iter().enumerate() {
                writeln!(s, "{n},{c}").unwrap();
            }
            s.trim_end().to_string()
        }
        Format::Plain => series
            .coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" "),
    };
    emit(cli, &content)?;
    Ok(EXIT_PASS)
}

fn report_to_json(report: &CheckReport) -> Value {
    json!({
        "id": report.id,
        "bound": report.bound,
        "tested_count": report.tested_count,
        "status": if report.passed() { "pass" } else { "fail" },
        "failures": report
            .failures
            .iter()
            .map(|w| {
                json!({
                    "n": w.n,
                    "lhs": rational_string(w.lhs),
                    "rhs": rational_string(w.rhs),
                    "kind": match w.kind {
                        FailureKind::Mismatch => "mismatch",
                        FailureKind::NonIntegral => "non-integral",
                    },
                })
            })
            .collect::<Vec<_>>(),
    })
}

fn reports_output(cli: &Cli, reports: &[CheckReport]) -> anyhow::Result<u8> {
    let content = match cli.format {
        Format::Json => Value::from(reports.iter().map(report_to_json).collect::<Vec<_>>())
            .to_string(),
        Format::Csv => {
            let mut s = String::from("id,n,lhs,rhs,status\n");
            for r in reports {
                if r.passed() {
                    writeln!(s, "{},,,,pass", r.id).unwrap();
                } else {
                    for w in &r.failures {
                        writeln!(
                            s,
                            "{},{},{},{},fail",
                            r.id,
                            w.n,
                            rational_string(w.lhs),
                            rational_string(w.rhs)
                        )
                        .unwrap();
                    }
                }
            }
            s.trim_end().to_string()
        }
        Format::Plain => reports
            .iter()
            .map(|r| r.summary_line())
            .collect::<Vec<_>>()
            .join("\n"),
    };
    emit(cli, &content)?;
    let all_pass = reports.iter().all(|r| r.passed());
    Ok(if all_pass { EXIT_PASS } else { EXIT_COUNTEREXAMPLE })
}

fn cmd_verify(cli: &Cli, args: &VerifyArgs) -> anyhow::Result<u8> {
    let backend: Backend = args.backend.into();
    let precision = precision_setting(args.precision)?;

    // ad hoc relation expression
    if args.target.contains("==") {
        let spec = parse_relation(&args.target)?;
        let report =
            relations::check_with_precision(&spec, args.max_n, backend, precision)?;
        return reports_output(cli, &[report]);
    }

    // theta identity id
    if theta::identity_registry()
        .iter()
        .any(|i| i.id == args.target)
    {
        let p = precision.unwrap_or(theta::DEFAULT_IDENTITY_PRECISION);
        let report = theta::verify_theta_identity(&args.target, p)?;
        return reports_output(cli, &[report]);
    }

    // conjecture id: scan it, reporting rather than asserting
    if conjectures::find_conjecture(&args.target).is_ok() {
        let ids = vec![args.target.clone()];
        let mut options = ScanOptions::new(args.max_n, backend);
        options.precision_override = precision;
        let outcomes = conjectures::scan(Some(&ids), options)?;
        return scan_output(cli, &outcomes);
    }

    // registry relation or family (plus the informational probe id)
    let specs: Vec<RelationSpec> = if args.target == "thm2.1b-variant" {
        relations::thm_2_1b_variant().grid_specs()
    } else {
        match relations::find_entry(&args.target)? {
            RegistryEntry::Spec(spec) => vec![spec],
            RegistryEntry::Family(family) => family.grid_specs(),
        }
    };
    let reports = relations::check_all(&specs, args.max_n, backend)?;
    reports_output(cli, &reports)
}

fn scan_output(cli: &Cli, outcomes: &[ScanOutcome]) -> anyhow::Result<u8> {
    let content = match cli.format {
        Format::Json => Value::from(outcomes.iter().map(|o| o.to_json()).collect::<Vec<_>>())
            .to_string(),
        Format::Csv => {
            let mut s = String::from("id,n,lhs,rhs,status\n");
            for o in outcomes {
                match &o.counterexample {
                    None => writeln!(s, "{},,,,pass", o.id).unwrap(),
                    Some(w) => writeln!(
                        s,
                        "{},{},{},{},counterexample",
                        o.id,
                        w.n,
                        rational_string(w.lhs),
                        rational_string(w.rhs)
                    )
                    .unwrap(),
                }
            }
            s.trim_end().to_string()
        }
        Format::Plain => outcomes
            .iter()
            .map(|o| match &o.counterexample {
                None => format!(
                    "{}: pass ({} values tested, n <= {})",
                    o.id, o.tested_count, o.n_max
                ),
                Some(w) => format!(
                    "{}: COUNTEREXAMPLE at n = {} (lhs = {}, rhs = {})",
                    o.id,
                    w.n,
                    rational_string(w.lhs),
                    rational_string(w.rhs)
                ),
            })
            .collect::<Vec<_>>()
            .join("\n"),
    };
    emit(cli, &content)?;
    let all_pass = outcomes.iter().all(|o| o.passed());
    Ok(if all_pass { EXIT_PASS } else { EXIT_COUNTEREXAMPLE })
}

fn cmd_scan(cli: &Cli, args: &ScanArgs) -> anyhow::Result<u8> {
    let mut options = ScanOptions::new(args.max_n, args.backend.into());
    options.timing = args.timing;
    options.precision_override = precision_setting(args.precision)?;
    let outcomes = conjectures::scan(args.ids.as_deref(), options)?;
    scan_output(cli, &outcomes)
}

fn cmd_formula(cli: &Cli, args: &FormulaArgs) -> anyhow::Result<u8> {
    let n = args.n;
    let value = match args.name.as_str() {
        "t1111" | "t4" => closedform::t_prime_1111(n),
        "t1122" => closedform::t_prime_1122(n),
        "t1188" => closedform::t_1188(n),
        "t1148" => closedform::t_1148(n),
        "t1336" => closedform::t_1336(n)?,
        "t11624" => closedform::t_11624(n)?,
        other => bail!(
            "unknown formula `{other}` (expected t1111, t1122, t1188, t1148, t1336, t11624)"
        ),
    };
    let content = match cli.format {
        Format::Json => json!({ "formula": args.name, "n": n, "value": value }).to_string(),
        _ => value.to_string(),
    };
    emit(cli, &content)?;
    Ok(EXIT_PASS)
}

fn cmd_list(cli: &Cli) -> anyhow::Result<u8> {
    let identities: Vec<(String, String)> = theta::identity_registry()
        .iter()
        .map(|i| (i.id.to_string(), i.display.split_whitespace().collect::<Vec<_>>().join(" ")))
        .collect();
    let mut families = Vec::new();
    let mut specs = Vec::new();
    for entry in relations::builtin_registry() {
        match entry {
            RegistryEntry::Family(f) => families.push((f.id.to_string(), f.signature.to_string())),
            RegistryEntry::Spec(s) => specs.push((s.id.clone(), s.render())),
        }
    }
    let conj: Vec<(String, String)> = conjectures::conjecture_registry()
        .iter()
        .map(|c| (c.id.to_string(), c.spec.render()))
        .collect();
    let formulas = [
        ("t1111", "t'(1,1,1,1;n) = sigma(2n+1)"),
        ("t1122", "t'(1,1,2,2;n) = (1/4) sum_{d | 4n+3} (d - (-1)^((d-1)/2))"),
        ("t1188", "t(1,1,8,8;n) = sigma(4n+9) - (2-(-1)^n) sum x over 4n+9 = x^2+4y^2, x=1 mod 4"),
        ("t1148", "t(1,1,4,8;n) = 2(-1)^n sum_{d | 4n+7} d(2/d) - (1-(-1)^n) sum x over 4n+7 = x^2+2y^2, x=1 mod 4"),
        ("t1336", "t(1,3,3,6;n) from 8n+13 = 3^beta n1: (2/3)(3^beta + (n1/3)) prod_p (p^(r+1)-(6/p)^(r+1))/(p-(6/p))"),
        ("t11624", "t(1,1,6,24;4m) = 2^(alpha+4) sigma(m1) where m+1 = 2^alpha 3^beta m1, gcd(m1,6)=1"),
    ];
    let content = match cli.format {
        Format::Json => {
            let pairs = |v: &[(String, String)]| {
                Value::from(
                    v.iter()
                        .map(|(id, text)| json!({ "id": id, "statement": text }))
                        .collect::<Vec<_>>(),
                )
            };
            json!({
                "identities": pairs(&identities),
                "relation_families": pairs(&families),
                "relations": pairs(&specs),
                "conjectures": pairs(&conj),
                "formulas": Value::from(
                    formulas
                        .iter()
                        .map(|(id, text)| json!({ "id": id, "statement": text }))
                        .collect::<Vec<_>>(),
                ),
            })
            .to_string()
        }
        _ => {
            let mut s = String::new();
            s.push_str("identities:\n");
            for (id, text) in &identities {
                writeln!(s, "  {id}: {text}").unwrap();
            }
            s.push_str("relation families:\n");
            for (id, text) in &families {
                writeln!(s, "  {id}: {text}").unwrap();
            }
            s.push_str("relations:\n");
            for (id, text) in &specs {
                writeln!(s, "  {id}: {text}").unwrap();
            }
            s.push_str("conjectures:\n");
            for (id, text) in &conj {
                writeln!(s, "  {id}: {text}").unwrap();
            }
            s.push_str("formulas:\n");
            for (id, text) in formulas {
                writeln!(s, "  {id}: {text}").unwrap();
            }
            s.trim_end().to_string()
        }
    };
    emit(cli, &content)?;
    Ok(EXIT_PASS)
}
