//! Command-line front end. The `nevanlinna` binary only calls [`main`].
//!
//! Exit codes: 0 when every verdict is verified (or the command has no verdict),
//! 1 when a verdict is refuted or inconclusive, 2 on usage or evaluation errors.

use std::fs;
use std::io::{self, Write};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

use crate::asymptotics::{expansion_terms, remainder_rnm};
use crate::cases::{
    default_t_grid, g_lambda_suite, gamma_ratio_integral, gamma_ratio_representation, h_cm_threshold_check,
    h_stieltjes_check, unit_ball_sequence, xi, HFamily,
};
use crate::classes::{check_bernstein_order, check_cm, check_lcm, check_stieltjes_order, thorin_check, DEFAULT_CM_TOL};
use crate::error::{Error, Result};
use crate::func::builtin;
use crate::halfplane::{
    g_ratio, g_ratio_stieltjes, log_gamma_ratio, log_gamma_ratio_stieltjes, verify_log_gamma_ratio_representation,
    verify_pick, HalfPlaneGrid,
};
use crate::invgamma::{branch_inverse_g_k, extremal_points, invert_log_gamma};
use crate::numerics::Grid;
use crate::report::{ClassLabel, ClassReport, Verdict};
use crate::selftest::run_selftest;
use crate::special::{ln_gamma, log_multiple_gamma};

#[derive(Debug, Parser)]
#[command(name = "nevanlinna", version, about = "Numerical checks for Pick, Stieltjes and completely monotonic functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub output: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate a registry function on a grid.
    Eval {
        #[arg(long = "fn")]
        function: String,
        #[arg(long, env = "NEVANLINNA_GRID", default_value = "0.1:10:20:log")]
        grid: Grid,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Scan a registry function for class membership.
    Classify {
        #[arg(long = "fn")]
        function: String,
        /// cm, cm:ALPHA, lcm, stieltjes:LAMBDA, bernstein:LAMBDA, thorin:LAMBDA:ALPHA or pick
        #[arg(long)]
        class: String,
        #[arg(long, env = "NEVANLINNA_GRID", default_value = "0.1:20:15:log")]
        grid: Grid,
        #[arg(long, env = "NEVANLINNA_ORDERS", default_value_t = 8)]
        orders: usize,
        #[arg(long, env = "NEVANLINNA_TOL", default_value_t = DEFAULT_CM_TOL)]
        tol: f64,
        /// Highest Widder operator index for stieltjes/thorin.
        #[arg(long, default_value_t = 3)]
        k_max: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compare a Stieltjes representation with direct evaluation:
    /// log_gamma_ratio, g_ratio or gamma_ratio:A:B.
    Represent {
        target: String,
        #[arg(long, env = "NEVANLINNA_GRID", default_value = "0.5:100:12:log")]
        grid: Grid,
        #[arg(long, env = "NEVANLINNA_TOL", default_value_t = 1e-6)]
        tol: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// log Γ_N(w) from the asymptotic expansion; error_estimate is the remainder integral.
    Expand {
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long, env = "NEVANLINNA_GRID", default_value = "0.5:50:12:log")]
        grid: Grid,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Inverse branches of Γ and log Γ, or the table of real extremal points.
    InvertGamma {
        /// Branch index for g_k, used with --z.
        #[arg(long, requires = "z")]
        k: Option<usize>,
        /// Point of the upper half-plane, written RE,IM.
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z: Option<Complex64>,
        /// Invert log Γ at RE,IM.
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, conflicts_with = "z")]
        target: Option<Complex64>,
        /// Tabulate x_0..x_K with ψ(x_k) = 0.
        #[arg(long, conflicts_with_all = ["z", "target"])]
        extremal: Option<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Worked examples.
    CaseStudy {
        #[command(subcommand)]
        study: Study,
    },
    /// Run the acceptance criteria.
    Selftest {
        /// Comma-separated criterion ids, names or tags.
        #[arg(long)]
        only: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum Study {
    /// Ω_n^{1/(n log n)} for the volume Ω_n of the unit ball in R^n.
    UnitBall {
        #[arg(long, default_value_t = 60)]
        n_max: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// F_a(t) for the h_a family, its threshold and the CM and S_1 scans.
    HFamily {
        #[arg(long, default_value_t = 2.0)]
        a: f64,
        /// Also run the order-160 CM scan of h_a' (slow).
        #[arg(long)]
        cm: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// ξ(t) for g_λ and the associated class scans.
    GLambda {
        #[arg(long, default_value_t = 2.0)]
        lambda: f64,
        #[arg(long, env = "NEVANLINNA_GRID", default_value = "0.1:20:15:log")]
        grid: Grid,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Integral identity for log Γ(x)Γ(x+a+b)/(Γ(x+a)Γ(x+b)).
    GammaRatio {
        #[arg(long, default_value_t = 1.0)]
        a: f64,
        #[arg(long, default_value_t = 1.0)]
        b: f64,
        #[arg(long, env = "NEVANLINNA_GRID", default_value = "0.5:20:10:log")]
        grid: Grid,
        #[command(flatten)]
        out: OutputArgs,
    },
}

fn parse_complex(s: &str) -> std::result::Result<Complex64, String> {
    let (re, im) = s.split_once(',').ok_or_else(|| format!("expected RE,IM, got '{s}'"))?;
    let p = |v: &str| v.trim().parse::<f64>().map_err(|e| format!("{v}: {e}"));
    Ok(Complex64::new(p(re)?, p(im)?))
}

/// One output row: `x,value[,error_estimate]`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Row {
    pub x: f64,
    pub value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error_estimate: Option<f64>,
}

impl Row {
    fn new(x: f64, value: f64) -> Self {
        Self { x, value, error_estimate: None }
    }

    fn with_error(x: f64, value: f64, err: f64) -> Self {
        Self { x, value, error_estimate: Some(err) }
    }
}

/// What a command produced, before formatting.
#[derive(Debug, Default)]
pub struct Artifact {
    pub rows: Vec<Row>,
    pub reports: Vec<ClassReport>,
    /// Extra JSON fields; also printed as `#` lines in CSV.
    pub extra: serde_json::Map<String, Value>,
    pub default_format: Option<Format>,
}

impl Artifact {
    fn extra(mut self, key: &str, value: impl Serialize) -> Self {
        self.extra.insert(key.to_string(), serde_json::to_value(value).unwrap_or(Value::Null));
        self
    }

    pub fn exit_code(&self) -> i32 {
        if self.reports.iter().all(|r| r.verdict == Verdict::Verified) {
            0
        } else {
            1
        }
    }

    pub fn to_csv(&self) -> Result<String> {
        let with_err = self.rows.iter().any(|r| r.error_estimate.is_some());
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        let header: &[&str] = if with_err { &["x", "value", "error_estimate"] } else { &["x", "value"] };
        let io_err = |e: csv::Error| Error::Parse(format!("csv: {e}"));
        w.write_record(header).map_err(io_err)?;
        for r in &self.rows {
            let mut rec = vec![fmt_f64(r.x), fmt_f64(r.value)];
            if with_err {
                rec.push(r.error_estimate.map(fmt_f64).unwrap_or_default());
            }
            w.write_record(&rec).map_err(io_err)?;
        }
        let mut out = String::from_utf8(w.into_inner().map_err(|e| Error::Parse(format!("csv: {e}")))?)
            .map_err(|e| Error::Parse(e.to_string()))?;
        for r in &self.reports {
            out.push_str(&format!("# {r}\n"));
        }
        for (k, v) in &self.extra {
            out.push_str(&format!("# {k} = {v}\n"));
        }
        Ok(out)
    }

    pub fn to_json(&self, command: &str, seconds: f64) -> Value {
        let mut obj = self.extra.clone();
        obj.insert("command".into(), json!(command));
        if !self.rows.is_empty() {
            obj.insert("rows".into(), json!(self.rows));
        }
        if !self.reports.is_empty() {
            obj.insert("reports".into(), json!(self.reports));
        }
        obj.insert("wall_time_seconds".into(), json!(seconds));
        Value::Object(obj)
    }
}

fn fmt_f64(v: f64) -> String {
    if v == 0.0 || (1e-4..1e15).contains(&v.abs()) || !v.is_finite() {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

fn eval_cmd(function: &str, grid: &Grid) -> Result<Artifact> {
    let f = builtin(function)?;
    let rows = grid.points().into_iter().map(|x| f.eval(x).map(|v| Row::new(x, v))).collect::<Result<_>>()?;
    Ok(Artifact { rows, default_format: Some(Format::Csv), ..Default::default() }.extra("function", function))
}

fn class_params(spec: &str) -> Result<(&str, Vec<f64>)> {
    let mut parts = spec.split(':');
    let name = parts.next().unwrap_or_default();
    let params = parts.map(|p| p.parse::<f64>().map_err(|e| Error::Parse(format!("class parameter {p}: {e}")))).collect::<Result<_>>()?;
    Ok((name, params))
}

pub fn classify(function: &str, class: &str, grid: &Grid, orders: usize, tol: f64, k_max: usize) -> Result<ClassReport> {
    let f = builtin(function)?;
    let (name, p) = class_params(class)?;
    let arity = |n: usize| {
        if p.len() == n {
            Ok(())
        } else {
            Err(Error::Parse(format!("class '{name}' takes {n} parameter(s), got {}", p.len())))
        }
    };
    match name {
        "cm" if p.is_empty() => check_cm(&f, 0.0, grid, orders, tol),
        "cm" => arity(1).and_then(|_| check_cm(&f, p[0], grid, orders, tol)),
        "lcm" => arity(0).and_then(|_| check_lcm(&f, grid, orders, tol)),
        "stieltjes" => arity(1).and_then(|_| check_stieltjes_order(&f, p[0], k_max, grid, orders, tol)),
        "bernstein" => arity(1).and_then(|_| check_bernstein_order(&f, p[0], grid, orders, tol)),
        "thorin" => arity(2).and_then(|_| thorin_check(&f, p[0], p[1], grid, k_max, orders, tol)),
        "pick" => {
            arity(0)?;
            if !f.has_complex() {
                return Err(Error::Domain(format!("{function} has no complex extension")));
            }
            let g = |z: Complex64| f.complex(z).unwrap_or_else(|| Err(Error::Domain("no complex extension".into())));
            verify_pick(function, &g, &HalfPlaneGrid::default(), tol)
        }
        _ => Err(Error::Parse(format!("unknown class '{class}'"))),
    }
}

type RealFn<T> = Box<dyn Fn(f64) -> Result<T>>;

fn represent_cmd(target: &str, grid: &Grid, tol: f64) -> Result<Artifact> {
    let xs = grid.points();
    let (direct, rep): (RealFn<f64>, RealFn<(f64, f64)>) = match target {
        "log_gamma_ratio" => (
            Box::new(|x| Ok(log_gamma_ratio(Complex64::new(x, 0.0))?.re)),
            Box::new(|x| log_gamma_ratio_stieltjes(x).map(|e| (e.value, e.error))),
        ),
        "g_ratio" => (
            Box::new(|x| Ok(g_ratio(Complex64::new(x, 0.0))?.re)),
            Box::new(|x| g_ratio_stieltjes(x).map(|e| (e.value, e.error))),
        ),
        t if t.starts_with("gamma_ratio:") => {
            let (_, p) = class_params(t)?;
            if p.len() != 2 {
                return Err(Error::Parse(format!("expected gamma_ratio:A:B, got '{t}'")));
            }
            let (a, b) = (p[0], p[1]);
            (
                Box::new(move |x| Ok(ln_gamma(x) + ln_gamma(x + a + b) - ln_gamma(x + a) - ln_gamma(x + b))),
                Box::new(move |x| gamma_ratio_integral(a, b, x).map(|v| (v, 0.0))),
            )
        }
        _ => return Err(Error::Parse(format!("unknown representation target '{target}'"))),
    };
    let mut rows = Vec::with_capacity(xs.len());
    let mut report = ClassReport::new(target, ClassLabel::Other("representation".into()), grid.to_string(), 0, tol);
    for &x in &xs {
        let d = direct(x)?;
        let (v, _) = rep(x)?;
        let diff = (v - d).abs();
        if diff > tol * d.abs().max(1.0) && report.witness.is_none() {
            report = report.refute(crate::report::Witness::real(x, 0, v - d));
        }
        rows.push(Row::with_error(x, v, diff));
    }
    let mut reports = vec![report];
    match target {
        "log_gamma_ratio" => reports.push(verify_log_gamma_ratio_representation(&xs, tol)?),
        t if t.starts_with("gamma_ratio:") => {
            let (_, p) = class_params(t)?;
            reports.push(gamma_ratio_representation(p[0], p[1], &xs, &Grid::log(0.1, 20.0, 15), DEFAULT_CM_TOL)?);
        }
        _ => {}
    }
    Ok(Artifact { rows, reports, default_format: Some(Format::Csv), ..Default::default() }.extra("target", target))
}

fn expand_cmd(n: usize, m: usize, grid: &Grid) -> Result<Artifact> {
    let rows = grid
        .points()
        .into_iter()
        .map(|w| Ok(Row::with_error(w, log_multiple_gamma(n, w, m)?, remainder_rnm(n, m, w)?.abs())))
        .collect::<Result<Vec<_>>>()?;
    let terms = grid.points().into_iter().map(|w| expansion_terms(n, m, w)).collect::<Result<Vec<_>>>()?;
    Ok(Artifact { rows, default_format: Some(Format::Csv), ..Default::default() }
        .extra("n", n)
        .extra("m", m)
        .extra("expansion_terms", terms))
}

fn complex_json(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

fn invert_cmd(k: Option<usize>, z: Option<Complex64>, target: Option<Complex64>, extremal: Option<usize>) -> Result<Artifact> {
    let base = Artifact { default_format: Some(Format::Json), ..Default::default() };
    if let Some(k_max) = extremal {
        let table = extremal_points(k_max)?;
        let rows = table.entries.iter().map(|e| Row::with_error(e.x, e.log_abs_gamma, e.residual)).collect();
        return Ok(Artifact { rows, ..base }.extra("extremal_points", &table.entries));
    }
    if let Some(t) = target {
        let w = invert_log_gamma(t, None)?;
        let back = crate::special::log_gamma_principal(w)?;
        return Ok(base.extra("target", complex_json(t)).extra("w", complex_json(w)).extra("residual", (back - t).norm()));
    }
    match (k, z) {
        (Some(k), Some(z)) => {
            let w = branch_inverse_g_k(k, z)?;
            let back = crate::special::log_gamma_principal(w)?.exp();
            let sign = if k % 2 == 0 { -1.0 } else { 1.0 };
            Ok(base
                .extra("k", k)
                .extra("z", complex_json(z))
                .extra("g_k", complex_json(w))
                .extra("residual", (back - sign * z).norm() / z.norm()))
        }
        _ => Err(Error::Parse("give --k with --z, or --target, or --extremal".into())),
    }
}

fn unit_ball_cmd(n_max: usize) -> Result<Artifact> {
    let t = unit_ball_sequence(n_max)?;
    let rows = t.rows.iter().filter_map(|r| r.root.map(|v| Row::new(r.n as f64, v))).collect();
    let mut report = ClassReport::new("unit_ball_root", ClassLabel::Other("decreasing, log-convex".into()), format!("2..{n_max}"), 0, 0.0);
    if !(t.decreasing && t.log_convex) {
        report.verdict = Verdict::Refuted;
    }
    Ok(Artifact { rows, reports: vec![report], default_format: Some(Format::Csv), ..Default::default() }
        .extra("decreasing", t.decreasing)
        .extra("log_convex", t.log_convex)
        .extra("approaches_exp_minus_half", t.approaches_limit)
        .extra("approaches_sqrt_e", t.approaches_sqrt_e))
}

fn h_family_cmd(a: f64, cm: bool) -> Result<Artifact> {
    let table = HFamily::default().tabulate(&default_t_grid())?;
    let rows = (0..table.t.len()).map(|i| Row::new(table.t[i], table.p[i] - a * table.q[i])).collect();
    let mut reports = vec![table.scan(a, 1e-6), h_stieltjes_check(a, &Grid::log(0.1, 20.0, 15))?];
    if cm {
        reports.extend(h_cm_threshold_check(&[a])?);
    }
    let b_star = table.bisect(2.0, 2.3, 1e-9)?;
    Ok(Artifact { rows, reports, default_format: Some(Format::Csv), ..Default::default() }
        .extra("a", a)
        .extra("b_star", b_star))
}

fn g_lambda_cmd(lambda: f64, grid: &Grid) -> Result<Artifact> {
    let rows = Grid::log(1e-2, 25.0, 60).points().into_iter().map(|t| Row::new(t, xi(lambda, t))).collect();
    let r = g_lambda_suite(lambda, grid, 6, DEFAULT_CM_TOL)?;
    let reports = [&r.bernstein, &r.log_stieltjes_2].into_iter().flatten().cloned().collect();
    Ok(Artifact { rows, reports, default_format: Some(Format::Csv), ..Default::default() }.extra("g_lambda", &r))
}

fn gamma_ratio_cmd(a: f64, b: f64, grid: &Grid) -> Result<Artifact> {
    let xs = grid.points();
    let rows = xs
        .iter()
        .map(|&x| {
            let direct = ln_gamma(x) + ln_gamma(x + a + b) - ln_gamma(x + a) - ln_gamma(x + b);
            let v = gamma_ratio_integral(a, b, x)?;
            Ok(Row::with_error(x, v, (v - direct).abs()))
        })
        .collect::<Result<_>>()?;
    let report = gamma_ratio_representation(a, b, &xs, &Grid::log(0.1, 20.0, 15), DEFAULT_CM_TOL)?;
    Ok(Artifact { rows, reports: vec![report], default_format: Some(Format::Csv), ..Default::default() }
        .extra("a", a)
        .extra("b", b))
}

fn emit(artifact: &Artifact, out: &OutputArgs, command: &str, seconds: f64) -> Result<()> {
    let format = out.format.or(artifact.default_format).unwrap_or(Format::Json);
    let text = match format {
        Format::Csv => artifact.to_csv()?,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&artifact.to_json(command, seconds)).map_err(|e| Error::Parse(e.to_string()))?;
            s.push('\n');
            s
        }
    };
    match &out.output {
        Some(path) => fs::write(path, text).map_err(|e| Error::Parse(format!("{path}: {e}"))),
        None => io::stdout().write_all(text.as_bytes()).map_err(|e| Error::Parse(e.to_string())),
    }
}

fn selftest_cmd(only: Option<&str>, as_json: bool) -> i32 {
    let outcomes = run_selftest(only);
    if as_json {
        println!("{}", serde_json::to_string_pretty(&outcomes).unwrap_or_default());
    } else {
        for o in &outcomes {
            println!("{o}");
        }
        let passed = outcomes.iter().filter(|o| o.passed).count();
        println!("{passed}/{} criteria passed", outcomes.len());
    }
    if outcomes.iter().all(|o| o.passed) {
        0
    } else {
        1
    }
}

/// Runs a parsed command and returns the exit code.
pub fn run(cli: Cli) -> i32 {
    let start = Instant::now();
    let (name, result, out) = match &cli.command {
        Command::Eval { function, grid, out } => ("eval", eval_cmd(function, grid), out),
        Command::Classify { function, class, grid, orders, tol, k_max, out } => {
            let r = classify(function, class, grid, *orders, *tol, *k_max);
            let a = r.map(|r| Artifact { reports: vec![r], default_format: Some(Format::Json), ..Default::default() });
            ("classify", a, out)
        }
        Command::Represent { target, grid, tol, out } => ("represent", represent_cmd(target, grid, *tol), out),
        Command::Expand { n, m, grid, out } => ("expand", expand_cmd(*n, *m, grid), out),
        Command::InvertGamma { k, z, target, extremal, out } => ("invert-gamma", invert_cmd(*k, *z, *target, *extremal), out),
        Command::CaseStudy { study } => match study {
            Study::UnitBall { n_max, out } => ("case-study unit-ball", unit_ball_cmd(*n_max), out),
            Study::HFamily { a, cm, out } => ("case-study h-family", h_family_cmd(*a, *cm), out),
            Study::GLambda { lambda, grid, out } => ("case-study g-lambda", g_lambda_cmd(*lambda, grid), out),
            Study::GammaRatio { a, b, grid, out } => ("case-study gamma-ratio", gamma_ratio_cmd(*a, *b, grid), out),
        },
        Command::Selftest { only, json } => return selftest_cmd(only.as_deref(), *json),
    };
    let artifact = match result {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    if let Err(e) = emit(&artifact, out, name, start.elapsed().as_secs_f64()) {
        eprintln!("error: {e}");
        return 2;
    }
    artifact.exit_code()
}

/// Entry point for the binary: parses `std::env::args`, usage errors exit with 2.
pub fn main() -> i32 {
    match Cli::try_parse() {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("nevanlinna").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn eval_csv_has_header_and_rows() {
        let a = eval_cmd("log_gamma_ratio", &"0.5:10:20:log".parse().unwrap()).unwrap();
        let csv = a.to_csv().unwrap();
        let lines: Vec<&str> = csv.lines().filter(|l| !l.starts_with('#')).collect();
        assert_eq!(lines[0], "x,value");
        assert_eq!(lines.len(), 21);
        assert!(!csv.contains('\r'));
    }

    #[test]
    fn classify_exit_codes() {
        let g: Grid = "0.1:20:15:log".parse().unwrap();
        let r = classify("exp_neg", "cm", &g, 8, DEFAULT_CM_TOL, 3).unwrap();
        assert!(r.is_verified());
        let r = classify("identity", "cm", &g, 8, DEFAULT_CM_TOL, 3).unwrap();
        let a = Artifact { reports: vec![r], ..Default::default() };
        assert_eq!(a.exit_code(), 1);
        assert!(classify("exp_neg", "stieltjes", &g, 8, DEFAULT_CM_TOL, 3).is_err());
        assert!(classify("exp_neg", "nonsense", &g, 8, DEFAULT_CM_TOL, 3).is_err());
        assert!(classify("log_gamma_ratio", "pick", &g, 8, 1e-9, 3).unwrap().is_verified());
    }

    #[test]
    fn json_carries_wall_time_and_verdict() {
        let g: Grid = "0.1:20:15:log".parse().unwrap();
        let r = classify("exp_neg", "cm", &g, 8, DEFAULT_CM_TOL, 3).unwrap();
        let v = Artifact { reports: vec![r], ..Default::default() }.to_json("classify", 0.5);
        assert_eq!(v["reports"][0]["verdict"], "verified-at-samples");
        assert_eq!(v["reports"][0]["function"], "exp_neg");
        assert!(v["reports"][0]["witness"].is_null());
        assert_eq!(v["wall_time_seconds"], 0.5);
    }

    #[test]
    fn argument_parsing() {
        let c = parse(&["invert-gamma", "--k", "1", "--z", "-2.5,0.5"]);
        assert!(matches!(c.command, Command::InvertGamma { k: Some(1), z: Some(z), .. } if z.re == -2.5));
        assert!(Cli::try_parse_from(["nevanlinna", "eval", "--fn", "inv", "--grid", "1:2:x:log"]).is_err());
        assert_eq!(run(parse(&["eval", "--fn", "no_such_fn", "--format", "json"])), 2);
    }

    #[test]
    fn unit_ball_and_inversion_artifacts() {
        let a = unit_ball_cmd(60).unwrap();
        assert_eq!(a.exit_code(), 0);
        assert_eq!(a.rows.len(), 59);
        let a = invert_cmd(Some(0), Some(Complex64::new(1.0, 1.0)), None, None).unwrap();
        assert!(a.extra["residual"].as_f64().unwrap() < 1e-10);
        let a = invert_cmd(None, None, None, Some(3)).unwrap();
        assert_eq!(a.rows.len(), 4);
    }
}
