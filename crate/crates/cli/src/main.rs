//! `szego`: evaluate kernels, export them, and run the verification suites.
//!
//! Machine output (JSON or CSV) goes to standard output or `-o`; summaries
//! and diagnostics go to standard error. Exit status is 0 on success, 1 if
//! a check fails and 2 on usage, parse, evaluation or I/O errors.

mod config;

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use szego::geometry::{homogeneous_dim, GroupElement, GroupKind, SiegelPoint};
use szego::kernel::{cauchy_kernel, group_kernel, szego_density, szego_eval, KernelOrder};
use szego::verify::{run_suite, Suite, SuiteConfig};
use szego::{Algebra, Hypercomplex};

use config::{parse_budget, parse_components, Format, RunConfig};

#[derive(Parser, Debug)]
#[command(name = "szego", version, about = "Quaternionic Cauchy-Szego kernels and their verification suites")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Args, Debug, Default)]
struct Flags {
    /// Quaternionic dimension n.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Algebra dimension m (2 or 4; 8 only for `eval E`).
    #[arg(long, global = true)]
    m: Option<usize>,
    /// Kernel argument as comma-separated components.
    #[arg(long, global = true, allow_hyphen_values = true)]
    nu: Option<String>,
    /// Point q: the components of q_1..q_{n+1} in order.
    #[arg(long, global = true, allow_hyphen_values = true)]
    q: Option<String>,
    /// Point omega for `eval S`; group element [omega', t] for `eval K`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    omega: Option<String>,
    /// Vertical offset of `eval K`.
    #[arg(long, global = true)]
    eps: Option<f64>,
    /// Relative tolerance.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Integrand evaluation budget (exponent notation allowed).
    #[arg(long, global = true, value_parser = parse_budget)]
    budget: Option<u64>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Plain key=value file; command-line flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output file (standard output if absent).
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true)]
    format: Option<Format>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a kernel at a point.
    Eval { kind: EvalKind },
    /// Run a verification suite and print one JSON report per check.
    Verify { suite: String },
    /// Export a kernel as JSON or a table of values as CSV.
    Export {
        what: ExportKind,
        /// Table for `export table`: K-decay or s-ray.
        #[arg(long = "what")]
        table: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EvalKind {
    /// Density s(nu).
    #[value(name = "s")]
    Density,
    /// Kernel S(q, omega).
    #[value(name = "S")]
    Kernel,
    /// Cauchy kernel E(nu).
    #[value(name = "E")]
    Cauchy,
    /// Projection kernel K_eps(h).
    #[value(name = "K")]
    Projection,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ExportKind {
    Kernel,
    Table,
}

/// Failure categories mapped to exit codes.
enum Failure {
    Usage(String),
    Checks,
}

macro_rules! usage_from {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::Usage(e.to_string())
            }
        }
    )*};
}

usage_from!(szego::Error, config::ConfigError, std::io::Error, serde_json::Error);

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let f = cli.flags;
    let flags = RunConfig {
        n: f.n,
        m: f.m,
        nu: f.nu,
        q: f.q,
        omega: f.omega,
        eps: f.eps,
        tol: f.tol,
        budget: f.budget,
        seed: f.seed,
        output: f.output,
        format: f.format,
    };
    let cfg = match &f.config {
        Some(path) => flags.over(RunConfig::from_file(path)?),
        None => flags,
    };
    cfg.validate()?;
    match cli.command {
        Command::Eval { kind } => cmd_eval(kind, &cfg),
        Command::Verify { suite } => cmd_verify(&suite, &cfg),
        Command::Export { what, table } => cmd_export(what, table.as_deref(), &cfg),
    }
}

fn emit(cfg: &RunConfig, text: &str) -> Outcome {
    match &cfg.output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn components(name: &str, value: Option<&str>, expected: usize) -> Result<Vec<f64>, Failure> {
    let value = value.ok_or_else(|| Failure::Usage(format!("--{name} is required")))?;
    let c = parse_components(value).map_err(|e| Failure::Usage(format!("--{name}: {e}")))?;
    if c.len() != expected {
        return Err(Failure::Usage(format!("--{name}: expected {expected} components, got {}", c.len())));
    }
    Ok(c)
}

fn siegel_point(name: &str, value: Option<&str>, n: usize, m: usize) -> Result<SiegelPoint<f64>, Failure> {
    let c = components(name, value, m * (n + 1))?;
    let mut coords = c.chunks(m).map(|ch| Hypercomplex::new(ch.to_vec())).collect::<szego::Result<Vec<_>>>()?;
    let vertical = coords.pop().expect("n + 1 >= 1 coordinates");
    Ok(SiegelPoint::new(coords, vertical)?)
}

fn print_value(cfg: &RunConfig, meta: Value, value: &Hypercomplex<f64>) -> Outcome {
    let text = match cfg.format.unwrap_or_default() {
        Format::Json => {
            let mut v = meta;
            v["value"] = json!(value.coeffs());
            format!("{v}\n")
        }
        Format::Csv => {
            let header: Vec<String> = (0..value.dim()).map(|i| format!("c{i}")).collect();
            let row: Vec<String> = value.coeffs().iter().map(|x| format!("{x:e}")).collect();
            format!("{}\n{}\n", header.join(","), row.join(","))
        }
    };
    emit(cfg, &text)
}

fn cmd_eval(kind: EvalKind, cfg: &RunConfig) -> Outcome {
    let n = cfg.n.unwrap_or(1);
    match kind {
        EvalKind::Density => {
            let order = KernelOrder::new(n, cfg.m.unwrap_or(4))?;
            let nu = Hypercomplex::new(components("nu", cfg.nu.as_deref(), order.m())?)?;
            let value = szego_density(order).eval(&nu)?;
            print_value(cfg, json!({"kind": "s", "n": n, "m": order.m(), "nu": nu.coeffs()}), &value)
        }
        EvalKind::Kernel => {
            let order = KernelOrder::new(n, cfg.m.unwrap_or(4))?;
            let q = siegel_point("q", cfg.q.as_deref(), n, order.m())?;
            let omega = siegel_point("omega", cfg.omega.as_deref(), n, order.m())?;
            let value = szego_eval(order, &q, &omega)?;
            let meta = json!({"kind": "S", "n": n, "m": order.m(), "q": q.to_json(), "omega": omega.to_json()});
            print_value(cfg, meta, &value)
        }
        EvalKind::Cauchy => {
            let m = cfg.m.unwrap_or(4);
            let nu = Hypercomplex::new(components("nu", cfg.nu.as_deref(), m)?)?;
            let value = cauchy_kernel(m)?.eval(&nu)?;
            print_value(cfg, json!({"kind": "E", "m": m, "nu": nu.coeffs()}), &value)
        }
        EvalKind::Projection => {
            if cfg.m.is_some_and(|m| m != 4) {
                return Err(Failure::Usage("K is defined for m = 4 only".into()));
            }
            let order = KernelOrder::quaternionic(n)?;
            let c = components("omega", cfg.omega.as_deref(), 4 * n + 3)?;
            let omega = c[..4 * n].chunks(4).map(|ch| Hypercomplex::new(ch.to_vec())).collect::<szego::Result<_>>()?;
            let h = GroupElement::new(GroupKind::Quaternionic, omega, c[4 * n..].to_vec())?;
            let eps = cfg.eps.unwrap_or(0.0);
            let value = group_kernel(order, &h, eps)?;
            print_value(cfg, json!({"kind": "K", "n": n, "m": 4, "h": h.to_json(), "eps": eps}), &value)
        }
    }
}

fn cmd_verify(suite: &str, cfg: &RunConfig) -> Outcome {
    let suite: Suite = suite.parse()?;
    let sc = SuiteConfig { n: cfg.n, tol: cfg.tol, budget: cfg.budget, seed: cfg.seed.unwrap_or(0), ..SuiteConfig::default() };
    let reports = run_suite(suite, &sc);
    let mut text = String::new();
    match cfg.format.unwrap_or_default() {
        Format::Json => {
            for r in &reports {
                text.push_str(&r.to_jsonl());
                text.push('\n');
            }
        }
        Format::Csv => {
            text.push_str("name,pass,abs_deviation,rel_deviation,tolerance,n_evals\n");
            for r in &reports {
                let _ = writeln!(
                    text,
                    "{},{},{:e},{:e},{:e},{}",
                    r.name, r.pass, r.abs_deviation, r.rel_deviation, r.tolerance, r.n_evals
                );
            }
        }
    }
    emit(cfg, &text)?;
    let failed: Vec<_> = reports.iter().filter(|r| !r.pass).collect();
    for r in &failed {
        eprintln!("FAIL {} (rel deviation {:e}, tolerance {:e})", r.name, r.rel_deviation, r.tolerance);
    }
    eprintln!("{suite}: {} passed, {} failed", reports.len() - failed.len(), failed.len());
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn cmd_export(what: ExportKind, table: Option<&str>, cfg: &RunConfig) -> Outcome {
    let n = cfg.n.unwrap_or(1);
    match what {
        ExportKind::Kernel => {
            let s = szego_density(KernelOrder::new(n, cfg.m.unwrap_or(4))?);
            let text = serde_json::to_string_pretty(&s.to_json())?;
            emit(cfg, &format!("{text}\n"))
        }
        ExportKind::Table => match table.unwrap_or("K-decay") {
            "K-decay" => emit(cfg, &k_decay_table(n, cfg.format.unwrap_or(Format::Csv))?),
            "s-ray" => emit(cfg, &s_ray_table(n, cfg)?),
            other => Err(Failure::Usage(format!("unknown table `{other}` (expected K-decay or s-ray)"))),
        },
    }
}

/// `|K|` along the dilation orbit of a fixed element, with `|K| rho^d`.
fn k_decay_table(n: usize, format: Format) -> Result<String, Failure> {
    let order = KernelOrder::quaternionic(n)?;
    let w = Hypercomplex::quaternion([0.6, 0.3, -0.2, 0.1]);
    let h0 = GroupElement::new(GroupKind::Quaternionic, vec![w; n], vec![0.5, -0.3, 0.2])?;
    let r0 = h0.rho_length();
    let d = homogeneous_dim(n) as i32;
    let rows: Vec<(f64, f64, f64)> = (0..=30)
        .map(|i| {
            let rho = 10f64.powf(-1.0 + 3.0 * i as f64 / 30.0);
            let k = group_kernel(order, &h0.dilate(&(rho / r0))?, 0.0)?.norm();
            Ok((rho, k, k * rho.powi(d)))
        })
        .collect::<szego::Result<_>>()?;
    Ok(match format {
        Format::Csv => {
            let mut s = String::from("rho,absK,absK_times_rho_d\n");
            for (r, k, kr) in rows {
                let _ = writeln!(s, "{r:e},{k:e},{kr:e}");
            }
            s
        }
        Format::Json => {
            let v: Vec<Value> = rows.iter().map(|(r, k, kr)| json!({"rho": r, "absK": k, "absK_times_rho_d": kr})).collect();
            format!("{}\n", Value::Array(v))
        }
    })
}

/// `s(t nu)` for `t` on a log grid; `nu` defaults to 1.
fn s_ray_table(n: usize, cfg: &RunConfig) -> Result<String, Failure> {
    let order = KernelOrder::new(n, cfg.m.unwrap_or(4))?;
    let m = order.m();
    let nu = match cfg.nu.as_deref() {
        Some(v) => Hypercomplex::new(components("nu", Some(v), m)?)?,
        None => Hypercomplex::real(Algebra::from_dim(m)?, 1.0),
    };
    let s = szego_density(order);
    let mut out = format!("t,{}\n", (0..m).map(|i| format!("s{i}")).collect::<Vec<_>>().join(","));
    for i in 0..=30 {
        let t = 10f64.powf(-1.0 + 2.0 * i as f64 / 30.0);
        let v = s.eval(&nu.scale(&t))?;
        let cols: Vec<String> = v.coeffs().iter().map(|x| format!("{x:e}")).collect();
        let _ = writeln!(out, "{t:e},{}", cols.join(","));
    }
    Ok(out)
}
