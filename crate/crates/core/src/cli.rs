//! Command-line front end. [`run`] is the whole program minus process I/O, so
//! tests drive it directly.
//!
//! Exit codes: 0 success, 1 a cross-check disagreed (the document is still
//! printed), 2 usage or validation error.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::builders::pascal_table;
use crate::catalan::{catalan_det, catalan_mingantu};
use crate::combinat::{catalan_closed, parse_exact, ExactInt};
use crate::error::{Error, Result};
use crate::hessmat::{det_bareiss, det_hessenberg_recurrence, DenseIntMatrix, HessenbergMatrix};
use crate::lattice::{
    count_dyck, count_paths_det, count_paths_dp, enumerate_paths, BoundaryPair,
    DEFAULT_ENUMERATION_CAP,
};
use crate::report::{run_sweep, IdentityId, SweepParams, VerificationReport};
use crate::series::{binomial_power, reciprocal, reciprocal_via_minors, TruncatedSeries};

pub const THREADS_ENV: &str = "CATDET_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "catdet",
    version,
    about = "Exact determinant identities on deformed Pascal triangles"
)]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Catalan number C_n
    Catalan {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = CatalanMethod::All)]
        method: CatalanMethod,
    },
    /// Determinant of a matrix file
    Hessdet {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Engine::Both)]
        engine: Engine,
    },
    /// Lattice paths between two height boundaries
    #[command(subcommand)]
    Paths(PathsCommand),
    /// Truncated power series
    #[command(subcommand)]
    Series(SeriesCommand),
    /// Square Pascal table with one highlighted column
    Table {
        #[arg(long)]
        rows: usize,
        #[arg(long, default_value_t = 0)]
        highlight: usize,
    },
    /// Sweep an identity over a parameter range
    Verify {
        #[arg(long, value_parser = parse_identity)]
        identity: IdentityId,
        #[arg(long)]
        n_max: Option<u64>,
        #[arg(long)]
        k_max: Option<u64>,
        #[arg(long)]
        m_max: Option<u64>,
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        dyck_max: Option<u64>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CatalanMethod {
    Det,
    Mingantu,
    Closed,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Engine {
    Recurrence,
    Bareiss,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PathMethod {
    Det,
    Dp,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RecipMethod {
    Direct,
    Minors,
    Both,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    /// Upper heights, comma-separated
    #[arg(
        long,
        allow_hyphen_values = true,
        requires = "b",
        conflicts_with = "input"
    )]
    a: Option<String>,
    /// Lower heights, comma-separated
    #[arg(long, allow_hyphen_values = true, requires = "a")]
    b: Option<String>,
    /// Boundary file {"a": [...], "b": [...]}
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum PathsCommand {
    /// Count admissible paths
    Count {
        #[command(flatten)]
        bounds: BoundsArgs,
        #[arg(long, value_enum, default_value_t = PathMethod::Both)]
        method: PathMethod,
    },
    /// Count Dyck paths with n east steps
    Dyck {
        #[arg(long)]
        n: usize,
    },
    /// List admissible height sequences
    Enumerate {
        #[command(flatten)]
        bounds: BoundsArgs,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
    },
}

#[derive(Subcommand, Debug)]
enum SeriesCommand {
    /// Reciprocal of (1+z)^n or of an explicit series
    Recip {
        #[arg(long, required_unless_present_any = ["coeffs", "input"], conflicts_with_all = ["coeffs", "input"])]
        n: Option<u64>,
        /// Coefficients c_0,c_1,... (c_0 must be 1)
        #[arg(long, allow_hyphen_values = true, conflicts_with = "input")]
        coeffs: Option<String>,
        /// Series file {"coeffs": [...], "order": m}
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        order: usize,
        /// Only meaningful with --n
        #[arg(long, value_enum, default_value_t = RecipMethod::Both)]
        method: RecipMethod,
    },
}

fn parse_identity(s: &str) -> std::result::Result<IdentityId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliOutput {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Output document: ordered fields, rendered per `--format`.
enum Doc {
    Record(Map<String, Value>),
    Raw {
        json: String,
        csv: String,
        text: String,
    },
}

struct Outcome {
    doc: Doc,
    ok: bool,
}

impl Outcome {
    fn pass(doc: Doc) -> Self {
        Outcome { doc, ok: true }
    }
}

/// Parses `argv` (including the program name) and executes the command.
pub fn run<I, T>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                CliOutput {
                    exit_code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                CliOutput {
                    exit_code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    match with_thread_cap(|| execute(&cli.command)) {
        Ok(outcome) => CliOutput {
            exit_code: if outcome.ok { 0 } else { 1 },
            stdout: render(&outcome.doc, cli.format),
            stderr: String::new(),
        },
        Err(e) => CliOutput {
            exit_code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn with_thread_cap<R: Send>(f: impl FnOnce() -> R + Send) -> R {
    let cap = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&t| t > 0);
    match cap.and_then(|t| rayon::ThreadPoolBuilder::new().num_threads(t).build().ok()) {
        Some(pool) => pool.install(f),
        None => f(),
    }
}

fn render(doc: &Doc, format: Format) -> String {
    match doc {
        Doc::Raw { json, csv, text } => match format {
            Format::Json => format!("{json}\n"),
            Format::Csv => csv.clone(),
            Format::Text => text.clone(),
        },
        Doc::Record(map) => match format {
            Format::Json => format!("{}\n", Value::Object(map.clone())),
            Format::Csv => {
                let header: Vec<&str> = map.keys().map(String::as_str).collect();
                let row: Vec<String> = map.values().map(|v| csv_field(&flat(v))).collect();
                format!("{}\n{}\n", header.join(","), row.join(","))
            }
            Format::Text => map
                .iter()
                .map(|(k, v)| format!("{k}: {}\n", flat(v)))
                .collect(),
        },
    }
}

fn flat(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(flat).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn record(fields: Vec<(&str, Value)>) -> Doc {
    Doc::Record(
        fields
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect(),
    )
}

fn dec(v: &ExactInt) -> Value {
    Value::String(v.to_string())
}

fn execute(command: &Command) -> Result<Outcome> {
    match command {
        Command::Catalan { n, method } => catalan(*n, *method),
        Command::Hessdet { input, engine } => hessdet(input, *engine),
        Command::Paths(PathsCommand::Count { bounds, method }) => {
            paths_count(&bounds.load()?, *method)
        }
        Command::Paths(PathsCommand::Dyck { n }) => {
            let value = count_dyck(*n)?;
            Ok(Outcome::pass(record(vec![
                ("n", json!(n.to_string())),
                ("value", dec(&value)),
            ])))
        }
        Command::Paths(PathsCommand::Enumerate { bounds, cap }) => {
            paths_enumerate(&bounds.load()?, *cap)
        }
        Command::Series(SeriesCommand::Recip {
            n,
            coeffs,
            input,
            order,
            method,
        }) => series_recip(*n, coeffs.as_deref(), input.as_ref(), *order, *method),
        Command::Table { rows, highlight } => {
            let t = pascal_table(*rows, *highlight)?;
            Ok(Outcome::pass(Doc::Raw {
                json: t.to_json(),
                csv: t.to_csv(),
                text: t.to_text(),
            }))
        }
        Command::Verify {
            identity,
            n_max,
            k_max,
            m_max,
            trials,
            seed,
            dyck_max,
        } => {
            let params = SweepParams {
                n_max: *n_max,
                k_max: *k_max,
                m_max: *m_max,
                trials: *trials,
                seed: *seed,
                dyck_max: *dyck_max,
            };
            let report = run_sweep(*identity, &params)?;
            Ok(report_outcome(&report))
        }
    }
}

fn catalan(n: usize, method: CatalanMethod) -> Result<Outcome> {
    let mut fields = vec![("n", json!(n.to_string()))];
    let single = |m: &str, v: ExactInt| {
        Outcome::pass(record(vec![
            ("n", json!(n.to_string())),
            ("method", json!(m)),
            ("value", dec(&v)),
        ]))
    };
    match method {
        CatalanMethod::Det => Ok(single("det", catalan_det(n))),
        CatalanMethod::Mingantu => Ok(single("mingantu", catalan_mingantu(n)?)),
        CatalanMethod::Closed => Ok(single("closed", catalan_closed(n as u64))),
        CatalanMethod::All => {
            let det = catalan_det(n);
            let closed = catalan_closed(n as u64);
            let ming = if n == 0 {
                None
            } else {
                Some(catalan_mingantu(n)?)
            };
            let ok = det == closed && ming.as_ref().is_none_or(|m| m == &closed);
            fields.push(("method", json!("all")));
            fields.push(("det", dec(&det)));
            fields.push(("mingantu", ming.as_ref().map_or(Value::Null, dec)));
            fields.push(("closed", dec(&closed)));
            fields.push(("agree", json!(ok)));
            Ok(Outcome {
                doc: record(fields),
                ok,
            })
        }
    }
}

fn hessdet(input: &PathBuf, engine: Engine) -> Result<Outcome> {
    let matrix = DenseIntMatrix::from_json(&fs::read_to_string(input)?)?;
    if !matrix.is_square() {
        return Err(Error::Validation(format!(
            "matrix is {}x{}, determinant needs a square matrix",
            matrix.rows(),
            matrix.cols()
        )));
    }
    let dim = json!(matrix.rows().to_string());
    let recurrence = match engine {
        Engine::Bareiss => None,
        _ => Some(det_hessenberg_recurrence(&HessenbergMatrix::detect(
            matrix.clone(),
        )?)),
    };
    let bareiss = match engine {
        Engine::Recurrence => None,
        _ => Some(det_bareiss(&matrix)?),
    };
    let mut fields = vec![("n", dim)];
    if let Some(r) = &recurrence {
        fields.push(("recurrence", dec(r)));
    }
    if let Some(b) = &bareiss {
        fields.push(("bareiss", dec(b)));
    }
    let ok = match (&recurrence, &bareiss) {
        (Some(r), Some(b)) => {
            fields.push(("agree", json!(r == b)));
            r == b
        }
        _ => true,
    };
    Ok(Outcome {
        doc: record(fields),
        ok,
    })
}

impl BoundsArgs {
    fn load(&self) -> Result<BoundaryPair> {
        match (&self.a, &self.b, &self.input) {
            (Some(a), Some(b), None) => BoundaryPair::new(parse_list(a)?, parse_list(b)?),
            (None, None, Some(path)) => BoundaryPair::from_json(&fs::read_to_string(path)?),
            _ => Err(Error::Parse("give either --a and --b, or --input".into())),
        }
    }
}

fn parse_list(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("bad integer {t:?} in list: {e}")))
        })
        .collect()
}

fn paths_count(bounds: &BoundaryPair, method: PathMethod) -> Result<Outcome> {
    let det = (method != PathMethod::Dp).then(|| count_paths_det(bounds));
    let dp = (method != PathMethod::Det).then(|| count_paths_dp(bounds));
    let mut fields = Vec::new();
    if let Some(d) = &det {
        fields.push(("det", dec(d)));
    }
    if let Some(d) = &dp {
        fields.push(("dp", dec(d)));
    }
    let ok = match (&det, &dp) {
        (Some(x), Some(y)) => {
            fields.push(("agree", json!(x == y)));
            x == y
        }
        _ => true,
    };
    Ok(Outcome {
        doc: record(fields),
        ok,
    })
}

fn paths_enumerate(bounds: &BoundaryPair, cap: usize) -> Result<Outcome> {
    let paths = enumerate_paths(bounds, cap)?;
    let heights: Vec<Value> = paths
        .iter()
        .map(|p| Value::Array(p.iter().map(|h| json!(h.to_string())).collect()))
        .collect();
    let json = json!({"count": paths.len().to_string(), "paths": heights}).to_string();
    let mut csv = String::from("index,heights,steps\n");
    let mut text = String::new();
    for (i, p) in paths.iter().enumerate() {
        let hs: Vec<String> = p.iter().map(ToString::to_string).collect();
        let steps = bounds.step_string(p);
        csv.push_str(&format!("{i},{},{steps}\n", hs.join(" ")));
        text.push_str(&format!("({}) {steps}\n", hs.join(", ")));
    }
    Ok(Outcome::pass(Doc::Raw { json, csv, text }))
}

fn series_recip(
    n: Option<u64>,
    coeffs: Option<&str>,
    input: Option<&PathBuf>,
    order: usize,
    method: RecipMethod,
) -> Result<Outcome> {
    let (result, ok) = match n {
        Some(n) => {
            let direct = (method != RecipMethod::Minors)
                .then(|| reciprocal(&binomial_power(n, order), order))
                .transpose()?;
            let minors = (method != RecipMethod::Direct)
                .then(|| reciprocal_via_minors(n, order))
                .transpose()?;
            match (direct, minors) {
                (Some(d), Some(m)) => {
                    let ok = d == m;
                    (d, ok)
                }
                (Some(s), None) | (None, Some(s)) => (s, true),
                (None, None) => unreachable!("at least one route is selected"),
            }
        }
        None => {
            let f = match (coeffs, input) {
                (Some(c), _) => TruncatedSeries::new(
                    c.split(',').map(parse_exact).collect::<Result<Vec<_>>>()?,
                )?,
                (None, Some(path)) => TruncatedSeries::from_json(&fs::read_to_string(path)?)?,
                (None, None) => return Err(Error::Parse("give --n, --coeffs or --input".into())),
            };
            (reciprocal(&f, order)?, true)
        }
    };
    let mut csv = String::from("k,coeff\n");
    let mut text = String::new();
    for (k, c) in result.coeffs().iter().enumerate() {
        csv.push_str(&format!("{k},{c}\n"));
        text.push_str(&format!("z^{k}: {c}\n"));
    }
    Ok(Outcome {
        doc: Doc::Raw {
            json: result.to_json(),
            csv,
            text,
        },
        ok,
    })
}

fn report_outcome(report: &VerificationReport) -> Outcome {
    let json = serde_json::to_string(report).expect("report serializes");
    let status = if report.passed() { "pass" } else { "fail" };
    let csv = format!(
        "identity,checked,failures,status\n{},{},{},{status}\n",
        report.identity,
        report.checked,
        report.failures.len()
    );
    let mut text = format!(
        "{}: {status} ({} checked, {} failed)\n",
        report.identity,
        report.checked,
        report.failures.len()
    );
    for (k, v) in &report.swept_ranges {
        text.push_str(&format!("  {k} = {v}\n"));
    }
    for f in &report.failures {
        let params: Vec<String> = f.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        text.push_str(&format!(
            "  FAIL {}: expected {}, got {}\n",
            params.join(" "),
            f.expected,
            f.actual
        ));
    }
    Outcome {
        doc: Doc::Raw { json, csv, text },
        ok: report.passed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> CliOutput {
        run(std::iter::once("catdet").chain(args.iter().copied()))
    }

    #[test]
    fn list_parsing() {
        assert_eq!(parse_list("1, 2,-3").unwrap(), vec![1, 2, -3]);
        assert!(parse_list("1,,2").is_err());
    }

    #[test]
    fn unknown_subcommand_is_usage_error() {
        let out = run_args(&["frobnicate"]);
        assert_eq!(out.exit_code, 2);
        assert!(out.stdout.is_empty());
        assert!(out.stderr.contains("Usage"), "{}", out.stderr);
    }

    #[test]
    fn help_goes_to_stdout() {
        let out = run_args(&["--help"]);
        assert_eq!(out.exit_code, 0);
        assert!(out.stdout.contains("catalan"));
    }

    #[test]
    fn record_renders_in_all_formats() {
        let doc = record(vec![
            ("a", json!("1")),
            ("b", json!(true)),
            ("c", json!(["x", "y"])),
        ]);
        assert_eq!(
            render(&doc, Format::Json),
            "{\"a\":\"1\",\"b\":true,\"c\":[\"x\",\"y\"]}\n"
        );
        assert_eq!(render(&doc, Format::Csv), "a,b,c\n1,true,x y\n");
        assert_eq!(render(&doc, Format::Text), "a: 1\nb: true\nc: x y\n");
    }
}
