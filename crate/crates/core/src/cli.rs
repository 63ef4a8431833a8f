//! Command-line front end: argument parsing, JSON output and plot CSV.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::charsum::{double_sum, Algorithm, SumJob};
use crate::error::{Error, Result};
use crate::gauss::{
    gauss_g, gauss_g_oracle, gauss_quadratic_closed, gauss_quadratic_direct, residue_table_entry,
    tau_k_direct, DIRECT_Q_CAP, ORACLE_CAP,
};
use crate::transition::{
    c_expr1, c_expr2, c_prime, c_value, classify_c_prime, classify_f, f_local_expansion, riemann_f,
    EvalConfig, Rational,
};
use crate::verify::{run_named, Report, REPORT_NAMES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;
pub const EXIT_NON_CONVERGENCE: i32 = 3;

const MAX_PLOT_POINTS: f64 = 1e6;

#[derive(Debug, Parser)]
#[command(
    name = "realchar",
    version,
    about = "Real character sums, Gauss sums and the transition function C"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Tolerance {
    /// Target absolute error.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
}

impl Tolerance {
    fn config(&self) -> Result<EvalConfig> {
        let cfg = EvalConfig::with_tolerance(self.tol);
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Expression {
    #[value(name = "1")]
    #[serde(rename = "1")]
    First,
    #[value(name = "2")]
    #[serde(rename = "2")]
    Second,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Target {
    F,
    Cprime,
}

/// Quantities that can be tabulated against alpha.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Quantity {
    C,
    Cprime,
    F,
}

impl Quantity {
    fn label(self) -> &'static str {
        match self {
            Quantity::C => "c",
            Quantity::Cprime => "cprime",
            Quantity::F => "f",
        }
    }

    fn eval(self, alpha: f64, cfg: &EvalConfig) -> Result<f64> {
        match self {
            Quantity::C => c_value(alpha, cfg),
            Quantity::Cprime => c_prime(alpha, cfg),
            Quantity::F => riemann_f(alpha, cfg),
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact double sum of the Jacobi symbol over odd m <= X, odd n <= Y.
    Sum {
        #[arg(long)]
        x: u64,
        #[arg(long)]
        y: u64,
        #[arg(long, default_value_t = 1)]
        ell: u64,
        #[arg(long, default_value = "auto")]
        algo: Algorithm,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// The transition function C(alpha).
    Cfunc {
        #[arg(long)]
        alpha: f64,
        #[arg(long, value_enum)]
        expr: Option<Expression>,
        #[command(flatten)]
        tol: Tolerance,
    },
    /// The derivative C'(alpha).
    Cprime {
        #[arg(long)]
        alpha: f64,
        #[command(flatten)]
        tol: Tolerance,
    },
    /// Riemann's function f(x).
    Riemann {
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        #[command(flatten)]
        tol: Tolerance,
    },
    /// G_k(n), exactly and from the brute-force tau sum.
    Gauss {
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long)]
        n: u64,
    },
    /// The quadratic Gauss sum G(p/q) and its closed form.
    Gqr {
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long)]
        q: u64,
    },
    /// Differentiability of f at p/q, or of C' at alpha = p/q.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value = "f")]
        what: Target,
        #[command(flatten)]
        tol: Tolerance,
    },
    /// Tabulate C, C' or f on a grid of alpha and write CSV.
    Plot {
        #[arg(long, value_enum, value_delimiter = ',', default_value = "c,cprime")]
        what: Vec<Quantity>,
        #[arg(long, default_value_t = 0.02, allow_hyphen_values = true)]
        from: f64,
        #[arg(long, default_value_t = 5.0, allow_hyphen_values = true)]
        to: f64,
        #[arg(long, default_value_t = 0.02)]
        step: f64,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        tol: Tolerance,
    },
    /// Run a verification report.
    Verify {
        /// Report name.
        name: Option<String>,
        /// Report name, as a flag.
        #[arg(long, conflicts_with = "name")]
        what: Option<String>,
        #[arg(long)]
        slow: bool,
        #[command(flatten)]
        tol: Tolerance,
    },
}

/// Grid and output of a plot run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlotSpec {
    pub quantities: Vec<Quantity>,
    pub range_start: f64,
    pub range_end: f64,
    pub step: f64,
    pub output_path: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ColumnRange {
    pub min: f64,
    pub max: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlotSummary {
    pub rows: usize,
    /// First grid point after clamping.
    pub range_start: f64,
    pub columns: Vec<(String, ColumnRange)>,
}

impl PlotSpec {
    fn grid(&self) -> Result<Vec<f64>> {
        let (start, end, step) = (self.range_start, self.range_end, self.step);
        if self.quantities.is_empty() {
            return Err(Error::InvalidInput("no quantities requested".into()));
        }
        if !(start.is_finite() && end.is_finite() && step.is_finite())
            || start >= end
            || step <= 0.0
        {
            return Err(Error::InvalidInput(format!(
                "bad grid: from {start} to {end} step {step}"
            )));
        }
        if step > end - start {
            return Err(Error::InvalidInput(format!(
                "step {step} exceeds the range [{start}, {end}]"
            )));
        }
        let span = (end - start) / step;
        if span > MAX_PLOT_POINTS {
            return Err(Error::InvalidInput(format!(
                "{span:.0} points exceed the limit of 10^6"
            )));
        }
        let needs_positive = self.quantities.contains(&Quantity::Cprime);
        let needs_nonneg = self.quantities.contains(&Quantity::C);
        let mut first = 0u64;
        if needs_positive {
            while start + first as f64 * step < step * (1.0 - 1e-9) {
                first += 1;
            }
        } else if needs_nonneg {
            while start + (first as f64) * step < -1e-9 * step {
                first += 1;
            }
        }
        let last = (span + 1e-9).floor() as u64;
        if first > last {
            return Err(Error::InvalidInput("no admissible grid points".into()));
        }
        // clamp rounding noise at zero so C(0) is not asked for at -1e-18
        Ok((first..=last)
            .map(|i| {
                let a = start + i as f64 * step;
                if a.abs() < 1e-12 * step {
                    0.0
                } else {
                    a
                }
            })
            .collect())
    }
}

/// Formats `v` with 12 significant digits, dropping trailing zeros.
pub fn format_significant(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{v:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp) as usize;
        let fixed = format!("{v:.decimals$}");
        if fixed.contains('.') {
            fixed
                .trim_end_matches('0')
                .trim_end_matches('.')
                .to_string()
        } else {
            fixed
        }
    } else {
        let mantissa = if mantissa.contains('.') {
            mantissa.trim_end_matches('0').trim_end_matches('.')
        } else {
            mantissa
        };
        format!("{mantissa}e{exp}")
    }
}

/// Evaluates the requested quantities on the grid and writes the CSV.
pub fn emit_plot(spec: &PlotSpec, cfg: &EvalConfig) -> Result<PlotSummary> {
    cfg.validate()?;
    let grid = spec.grid()?;
    let mut columns: Vec<Vec<f64>> = vec![Vec::with_capacity(grid.len()); spec.quantities.len()];
    for &alpha in &grid {
        for (q, col) in spec.quantities.iter().zip(columns.iter_mut()) {
            col.push(q.eval(alpha, cfg)?);
        }
    }
    let mut out = BufWriter::new(File::create(&spec.output_path)?);
    let header: Vec<&str> = std::iter::once("alpha")
        .chain(spec.quantities.iter().map(|q| q.label()))
        .collect();
    writeln!(out, "{}", header.join(","))?;
    for (i, &alpha) in grid.iter().enumerate() {
        let mut line = format_significant(alpha);
        for col in &columns {
            line.push(',');
            line.push_str(&format_significant(col[i]));
        }
        writeln!(out, "{line}")?;
    }
    out.flush()?;
    let summary_columns = std::iter::once(("alpha".to_string(), &grid))
        .chain(
            spec.quantities
                .iter()
                .map(|q| q.label().to_string())
                .zip(columns.iter()),
        )
        .map(|(name, values)| {
            let min = values.iter().copied().fold(f64::INFINITY, f64::min);
            let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            (name, ColumnRange { min, max })
        })
        .collect();
    Ok(PlotSummary {
        rows: grid.len(),
        range_start: grid[0],
        columns: summary_columns,
    })
}

/// Exit code for an error raised by a library call.
pub fn exit_code_for_error(err: &Error) -> i32 {
    match err {
        Error::InvalidInput(_) | Error::Io(_) => EXIT_USAGE,
        Error::NonConvergence(_) => EXIT_NON_CONVERGENCE,
        Error::Inconsistent(_) => EXIT_VERIFY_FAILED,
    }
}

/// Exit code for a finished verification report.
pub fn exit_code_for_report(report: &Report) -> i32 {
    if report.pass {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    }
}

fn error_document(code: i32, message: &str) -> String {
    json!({ "error": { "code": code, "message": message } }).to_string()
}

fn config_echo(cfg: &EvalConfig) -> Value {
    json!({ "tol": cfg.tolerance, "k_max_cap": cfg.k_max_cap, "quad_max_depth": cfg.quad_max_depth })
}

fn merge(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(a), Value::Object(b)) = (&mut base, extra) {
        a.extend(b);
    }
    base
}

fn complex_json(z: num_complex::Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

fn default_threads() -> usize {
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

/// Result of one command: the JSON document and its exit code.
fn dispatch(command: Command) -> Result<(Value, i32)> {
    let doc = match command {
        Command::Sum {
            x,
            y,
            ell,
            algo,
            threads,
        } => {
            let threads = threads.unwrap_or_else(default_threads);
            let job = SumJob::new(x, y).ell(ell).algorithm(algo).threads(threads);
            let r = double_sum(&job)?;
            json!({
                "x": x, "y": y, "ell": ell, "algo": algo, "threads": threads,
                "value": r.value, "pairs_evaluated": r.pairs_evaluated,
                "algorithm_used": r.algorithm_used, "elapsed_seconds": r.elapsed_seconds,
            })
        }
        Command::Cfunc { alpha, expr, tol } => {
            let cfg = tol.config()?;
            let echo = merge(
                json!({ "alpha": alpha, "expr": expr.map_or(json!("auto"), |e| json!(e)) }),
                config_echo(&cfg),
            );
            let values = match expr {
                None => json!({ "value": c_value(alpha, &cfg)? }),
                Some(Expression::First) => json!({ "value": c_expr1(alpha, &cfg)? }),
                Some(Expression::Second) => json!({ "value": c_expr2(alpha, &cfg)? }),
                Some(Expression::Both) => {
                    let a = c_expr1(alpha, &cfg)?;
                    let b = c_expr2(alpha, &cfg)?;
                    json!({ "value_expr1": a, "value_expr2": b, "difference": a - b })
                }
            };
            merge(echo, values)
        }
        Command::Cprime { alpha, tol } => {
            let cfg = tol.config()?;
            merge(
                json!({ "alpha": alpha, "value": c_prime(alpha, &cfg)? }),
                config_echo(&cfg),
            )
        }
        Command::Riemann { x, tol } => {
            let cfg = tol.config()?;
            merge(
                json!({ "x": x, "value": riemann_f(x, &cfg)? }),
                config_echo(&cfg),
            )
        }
        Command::Gauss { k, n } => {
            let exact = gauss_g(k, n)?;
            let mut doc = json!({
                "k": k, "n": n,
                "exact": { "r": exact.r(), "d": exact.d(), "text": exact.to_string() },
                "value": exact.to_f64(),
            });
            if n <= ORACLE_CAP {
                doc = merge(
                    doc,
                    json!({ "tau": complex_json(tau_k_direct(k, n)?), "oracle": gauss_g_oracle(k, n)? }),
                );
            }
            doc
        }
        Command::Gqr { p, q } => {
            let closed = gauss_quadratic_closed(p, q)?;
            let literal = residue_table_entry(p, q)?;
            let mut doc = json!({
                "p": p, "q": q,
                "closed": closed,
                "closed_value": complex_json(closed.value(q)),
                "residue_table": literal,
            });
            if q <= DIRECT_Q_CAP {
                doc = merge(
                    doc,
                    json!({ "direct": complex_json(gauss_quadratic_direct(p, q)?) }),
                );
            }
            doc
        }
        Command::Classify { p, q, what, tol } => {
            let cfg = tol.config()?;
            let center = Rational::new(p, q)?;
            let echo = merge(json!({ "p": p, "q": q, "what": what }), config_echo(&cfg));
            match what {
                Target::F => merge(
                    echo,
                    json!({ "verdict": classify_f(center)?, "expansion": f_local_expansion(center, &cfg)? }),
                ),
                Target::Cprime => merge(echo, json!({ "verdict": classify_c_prime(center)? })),
            }
        }
        Command::Plot {
            what,
            from,
            to,
            step,
            out,
            tol,
        } => {
            let cfg = tol.config()?;
            let spec = PlotSpec {
                quantities: what,
                range_start: from,
                range_end: to,
                step,
                output_path: out,
            };
            let summary = emit_plot(&spec, &cfg)?;
            merge(
                json!({
                    "what": spec.quantities, "from": from, "to": to, "step": step,
                    "out": spec.output_path, "summary": summary,
                }),
                config_echo(&cfg),
            )
        }
        Command::Verify {
            name,
            what,
            slow,
            tol,
        } => {
            let cfg = tol.config()?;
            let Some(name) = name.or(what) else {
                return Err(Error::InvalidInput(format!(
                    "missing report name, expected one of {}",
                    REPORT_NAMES.join(", ")
                )));
            };
            let report = run_named(&name, slow, &cfg)?;
            let code = exit_code_for_report(&report);
            let doc = merge(json!({ "slow": slow, "report": report }), config_echo(&cfg));
            return Ok((doc, code));
        }
    };
    Ok((doc, EXIT_OK))
}

/// Parses `argv` (program name first), runs the command and writes the
/// result to `out` or the error document to `err`. Returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let message = e.to_string();
            let _ = writeln!(err, "{}", error_document(EXIT_USAGE, message.trim()));
            return EXIT_USAGE;
        }
    };
    match dispatch(cli.command) {
        Ok((doc, code)) => {
            let _ = writeln!(out, "{doc}");
            code
        }
        Err(e) => {
            let code = exit_code_for_error(&e);
            let _ = writeln!(err, "{}", error_document(code, &e.to_string()));
            code
        }
    }
}

/// Entry point for the binary.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}
