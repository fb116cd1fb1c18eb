//! `cylhecke`: Hecke character tables, Gromov–Witten tables and verification suites.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use cylhecke::hecke::character_table;
use cylhecke::qcoh::gw_table;
use cylhecke::verify::{run_suite, Suite, SuiteParams};
use cylhecke::{Error, Partition};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "cylhecke", version, about = "Hecke characters, cylindric rim hooks and quantum cohomology of Grassmannians")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Character table χ_t^λ(α) of the Hecke algebra H_m(t), 1 ≤ m ≤ 10.
    CharTable {
        m: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Nonzero Gromov–Witten invariants C^{λ,d}_{μν} of Gr_k(ℂⁿ), 2 ≤ n ≤ 8.
    GwTable {
        /// `K,N`.
        #[arg(long, value_parser = parse_kn)]
        kn: (usize, usize),
        /// Largest degree d; defaults to the largest degree that can occur.
        #[arg(long)]
        d: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Runs a verification suite: abcd, rtt, cyl3way, theorem-main, bethe, char-schur or fock.
    Verify {
        suite: String,
        #[command(flatten)]
        params: ParamArgs,
        /// Print per-check wall times to standard error.
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the document here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Args)]
struct ParamArgs {
    /// `K,N`.
    #[arg(long, value_parser = parse_kn)]
    kn: Option<(usize, usize)>,
    /// Number of lattice columns, or of variables for char-schur.
    #[arg(long)]
    n: Option<usize>,
    /// Target partition, e.g. `2,1`.
    #[arg(long, value_parser = parse_partition)]
    lambda: Option<Partition>,
    /// Inner partition of a skew shape.
    #[arg(long, value_parser = parse_partition)]
    mu: Option<Partition>,
    /// Degree, or winding number of a cylindric shape.
    #[arg(long)]
    d: Option<usize>,
    /// Comma-separated content.
    #[arg(long, value_delimiter = ',')]
    content: Option<Vec<usize>>,
    /// Largest content weight to enumerate.
    #[arg(long)]
    max_weight: Option<usize>,
    /// Number of sample points.
    #[arg(long)]
    points: Option<usize>,
    /// Positive real value of the quantum parameter.
    #[arg(long)]
    q: Option<f64>,
    /// Numerical tolerance.
    #[arg(long)]
    tol: Option<f64>,
}

fn parse_kn(s: &str) -> Result<(usize, usize), String> {
    let (k, n) = s.split_once(',').ok_or_else(|| format!("expected K,N, got {s:?}"))?;
    let k = k.trim().parse().map_err(|_| format!("bad K in {s:?}"))?;
    let n = n.trim().parse().map_err(|_| format!("bad N in {s:?}"))?;
    Ok((k, n))
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failure that maps to an exit code.
enum Failure {
    Usage(String),
    Runtime(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Runtime(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::OutOfRange(_) | Error::InvalidPartition(_) | Error::InvalidShape(_) | Error::WeightMismatch(_) => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.into()),
        }
    }
}

/// One row of an output table.
trait Record: Serialize {
    const HEADER: &'static [&'static str];

    fn cells(&self) -> Vec<String>;

    fn latex_cells(&self) -> Vec<String> {
        self.cells().iter().map(|c| latex_escape(c)).collect()
    }
}

#[derive(Serialize)]
struct CharRow {
    lambda: String,
    alpha: String,
    value: String,
}

impl Record for CharRow {
    const HEADER: &'static [&'static str] = &["lambda", "alpha", "value"];

    fn cells(&self) -> Vec<String> {
        vec![self.lambda.clone(), self.alpha.clone(), self.value.clone()]
    }

    fn latex_cells(&self) -> Vec<String> {
        vec![self.lambda.clone(), self.alpha.clone(), format!("${}$", self.value)]
    }
}

#[derive(Serialize)]
struct GwRow {
    mu: String,
    nu: String,
    d: usize,
    lambda: String,
    value: i64,
}

impl Record for GwRow {
    const HEADER: &'static [&'static str] = &["mu", "nu", "d", "lambda", "value"];

    fn cells(&self) -> Vec<String> {
        vec![self.mu.clone(), self.nu.clone(), self.d.to_string(), self.lambda.clone(), self.value.to_string()]
    }
}

#[derive(Serialize)]
struct CheckRow {
    suite: String,
    name: String,
    passed: bool,
    detail: String,
}

impl Record for CheckRow {
    const HEADER: &'static [&'static str] = &["suite", "name", "passed", "detail"];

    fn cells(&self) -> Vec<String> {
        vec![self.suite.clone(), self.name.clone(), self.passed.to_string(), self.detail.clone()]
    }
}

/// Metadata, parameters, the result table and any counterexamples.
#[derive(Serialize)]
struct Document<T> {
    command: String,
    parameters: BTreeMap<String, String>,
    status: String,
    entries: Vec<T>,
    counterexamples: Vec<String>,
}

fn latex_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '\\' => out.push_str("\\textbackslash{}"),
            '&' | '%' | '$' | '#' | '_' | '{' | '}' => {
                out.push('\\');
                out.push(c);
            }
            '~' => out.push_str("\\textasciitilde{}"),
            '^' => out.push_str("\\textasciicircum{}"),
            _ => out.push(c),
        }
    }
    out
}

fn render<T: Record>(doc: &Document<T>, format: Format) -> anyhow::Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(doc)? + "\n"),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(T::HEADER)?;
            for row in &doc.entries {
                w.write_record(row.cells())?;
            }
            Ok(String::from_utf8(w.into_inner()?)?)
        }
        Format::Latex => {
            let mut s = format!("% {} ({})\n", doc.command, doc.status);
            for (k, v) in &doc.parameters {
                s += &format!("% {k} = {v}\n");
            }
            s += &format!("\\begin{{tabular}}{{{}}}\n", "l".repeat(T::HEADER.len()));
            s += &T::HEADER.join(" & ");
            s += " \\\\\n\\hline\n";
            for row in &doc.entries {
                s += &row.latex_cells().join(" & ");
                s += " \\\\\n";
            }
            s += "\\end{tabular}\n";
            Ok(s)
        }
    }
}

fn emit<T: Record>(doc: &Document<T>, output: &OutputArgs) -> anyhow::Result<()> {
    let text = render(doc, output.format)?;
    match &output.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn char_table_cmd(m: usize, output: &OutputArgs) -> Result<bool, Failure> {
    if !(1..=10).contains(&m) {
        return Err(Failure::Usage(format!("m = {m} is outside 1..=10")));
    }
    let table = character_table(m);
    let mut entries = Vec::new();
    for (lambda, row) in table.rows.iter().zip(&table.values) {
        for (alpha, value) in table.cols.iter().zip(row) {
            entries.push(CharRow { lambda: lambda.to_string(), alpha: alpha.to_string(), value: value.to_string() });
        }
    }
    let doc = Document {
        command: "char-table".into(),
        parameters: BTreeMap::from([("m".into(), m.to_string())]),
        status: "ok".into(),
        entries,
        counterexamples: Vec::new(),
    };
    emit(&doc, output)?;
    Ok(true)
}

fn gw_table_cmd(k: usize, n: usize, d: Option<usize>, output: &OutputArgs) -> Result<bool, Failure> {
    if !(2..=8).contains(&n) || k > n {
        return Err(Failure::Usage(format!("Gr({k},{n}) needs 2 ≤ n ≤ 8 and 0 ≤ k ≤ n")));
    }
    let dmax = d.unwrap_or(2 * k * (n - k) / n);
    let entries = gw_table(k, n, dmax)?
        .into_iter()
        .map(|e| GwRow { mu: e.mu.to_string(), nu: e.nu.to_string(), d: e.d, lambda: e.lambda.to_string(), value: e.value })
        .collect();
    let doc = Document {
        command: "gw-table".into(),
        parameters: BTreeMap::from([("k".into(), k.to_string()), ("n".into(), n.to_string()), ("dmax".into(), dmax.to_string())]),
        status: "ok".into(),
        entries,
        counterexamples: Vec::new(),
    };
    emit(&doc, output)?;
    Ok(true)
}

fn verify_cmd(suite: &str, a: &ParamArgs, timings: bool, output: &OutputArgs) -> Result<bool, Failure> {
    let suite: Suite = suite.parse()?;
    let params = SuiteParams {
        kn: a.kn,
        n: a.n,
        lambda: a.lambda.clone(),
        mu: a.mu.clone(),
        d: a.d,
        content: a.content.clone(),
        max_weight: a.max_weight,
        points: a.points,
        q: a.q,
        tol: a.tol,
    };
    if let Some((k, n)) = params.kn {
        if k > n || n == 0 {
            return Err(Failure::Usage(format!("--kn {k},{n} needs 0 ≤ k ≤ n and n ≥ 1")));
        }
    }
    if params.q.is_some_and(|q| q <= 0.0) || params.tol.is_some_and(|t| t <= 0.0) {
        return Err(Failure::Usage("--q and --tol must be positive".into()));
    }
    let report = run_suite(suite, &params)?;
    let mut parameters = BTreeMap::from([("suite".to_string(), suite.to_string())]);
    let mut set = |key: &str, v: Option<String>| {
        if let Some(v) = v {
            parameters.insert(key.to_string(), v);
        }
    };
    set("kn", params.kn.map(|(k, n)| format!("{k},{n}")));
    set("n", params.n.map(|v| v.to_string()));
    set("lambda", params.lambda.as_ref().map(Partition::to_string));
    set("mu", params.mu.as_ref().map(Partition::to_string));
    set("d", params.d.map(|v| v.to_string()));
    set("content", params.content.as_ref().map(|c| c.iter().map(usize::to_string).collect::<Vec<_>>().join(",")));
    set("max_weight", params.max_weight.map(|v| v.to_string()));
    set("points", params.points.map(|v| v.to_string()));
    set("q", params.q.map(|v| v.to_string()));
    set("tol", params.tol.map(|v| v.to_string()));
    if timings {
        for c in &report.checks {
            eprintln!("{} ms  {}", c.millis, c.name);
        }
    }
    let passed = report.passed();
    let doc = Document {
        command: "verify".into(),
        parameters,
        status: if passed { "pass" } else { "fail" }.into(),
        counterexamples: report.failures().map(|c| format!("{}: {}", c.name, c.detail)).collect(),
        entries: report
            .checks
            .iter()
            .map(|c| CheckRow { suite: report.suite.clone(), name: c.name.clone(), passed: c.passed, detail: c.detail.clone() })
            .collect(),
    };
    emit(&doc, output)?;
    Ok(passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::CharTable { m, output } => char_table_cmd(*m, output),
        Command::GwTable { kn: (k, n), d, output } => gw_table_cmd(*k, *n, *d, output),
        Command::Verify { suite, params, timings, output } => verify_cmd(suite, params, *timings, output),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
