//! Command-line front end: compute polynomials and Pieri tables, and verify identities.

pub mod suite;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use macdonald_coeff::json::scalar_to_json;
use macdonald_core::btwo::{b2_compute_p, b2_compute_q, B2Weight};
use macdonald_core::identities::{Guard, Mode};
use macdonald_core::macdonald::{onerow_q_series, BasisExpansion};
use macdonald_core::pieri::{
    expand_tworow_inverse, expand_tworow_product, pieri_minuscule, pieri_quasiminuscule, shifted, PieriExpansion,
    Perturbation, Sign,
};
use macdonald_core::weyl::Partition;
use macdonald_core::MacError;
use serde_json::{json, Value};

use suite::{parse_list, parse_partition, run_identity, Config, VerificationReport, VerifyParams, IDENTITIES};

pub const THREADS_ENV: &str = "MACDONALD_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Probabilistic,
}

#[derive(Parser, Debug)]
#[command(name = "macdonald", version, about = "Macdonald polynomials of type C_n with equal multiplicities")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Seed for probabilistic mode.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value = "exact")]
    mode: ModeArg,
    /// Largest n + r (or n + |k|) checked in exact mode.
    #[arg(long, global = true, default_value_t = Guard::default().max_size)]
    guard: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct PolyArgs {
    #[arg(long)]
    n: usize,
    /// Comma-separated decreasing parts, e.g. "2,1".
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
}

#[derive(Args, Debug)]
struct PairArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, allow_hyphen_values = true)]
    l1: i64,
    #[arg(long, allow_hyphen_values = true)]
    l2: i64,
}

#[derive(Args, Debug, Default)]
struct VerifyArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    l1: Option<i64>,
    #[arg(long)]
    l2: Option<i64>,
    #[arg(long)]
    r: Option<usize>,
    /// Block sizes, comma-separated.
    #[arg(long)]
    kvec: Option<String>,
    #[arg(long)]
    max_size: Option<i32>,
    #[arg(long)]
    bound: Option<i64>,
    /// Report elapsed_ms as 0, for byte-identical output.
    #[arg(long)]
    no_timing: bool,
    /// Adds one to c_ij in thm3, as "i,j".
    #[arg(long, hide = true)]
    perturb: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// P_λ in orbit sums.
    ComputeP(PolyArgs),
    /// Q_λ = b_λ P_λ in orbit sums.
    ComputeQ(PolyArgs),
    /// c_ij in Q_(λ1) Q_(λ2) = Σ c_ij Q_(λ1+i-j, λ2-i-j).
    Pieri(PairArgs),
    /// C_ij in Q_(λ1,λ2) = Σ C_ij Q_(λ1+i-j) Q_(λ2-i-j).
    InversePieri(PairArgs),
    /// Coefficients of P_(1) P_λ.
    PieriMinuscule(PolyArgs),
    /// Coefficients of (P_(1,1) - P_(1,1)(ρ)) P_λ.
    PieriQuasi(PolyArgs),
    /// Q_(r) for r = 0..=max.
    OnerowSeries {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max: usize,
    },
    /// Type B_2.
    #[command(subcommand)]
    B2(B2Command),
    /// Verify an identity, or `all`.
    Verify {
        id: String,
        #[command(flatten)]
        args: VerifyArgs,
    },
}

#[derive(Subcommand, Debug)]
enum B2Command {
    /// P (or Q) of the weight c1 ε1 + c2 ε2, e.g. "3/2,1/2".
    Compute {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        normalized: bool,
    },
    VerifyThm7 {
        #[arg(long)]
        l1: i64,
        #[arg(long)]
        l2: i64,
        #[arg(long)]
        no_timing: bool,
    },
}

enum Failure {
    Usage(String),
    Guard(String),
    Other(String),
}

impl From<MacError> for Failure {
    fn from(e: MacError) -> Self {
        match e {
            MacError::Invalid(_) | MacError::NotSymmetric => Failure::Usage(e.to_string()),
            MacError::ResourceGuard(_) => Failure::Guard(e.to_string()),
            _ => Failure::Other(e.to_string()),
        }
    }
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

/// Parses arguments, runs one command, writes data to standard output and
/// diagnostics to standard error, and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    configure_threads();
    let mut out = String::new();
    let code = match execute(&cli, &mut out) {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Guard(m)) => {
            eprintln!("error: {m}");
            EXIT_GUARD
        }
        Err(Failure::Other(m)) => {
            eprintln!("error: {m}");
            EXIT_FAILED
        }
    };
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    code
}

fn configure_threads() {
    let Ok(v) = std::env::var(THREADS_ENV) else { return };
    match v.trim().parse::<usize>() {
        Ok(k) if k > 0 => {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
        }
        _ => eprintln!("warning: ignoring {THREADS_ENV}={v}"),
    }
}

fn config(cli: &Cli, timing: bool, perturb: Option<Perturbation>) -> Config {
    let mode = match cli.mode {
        ModeArg::Exact => Mode::Exact,
        ModeArg::Probabilistic => Mode::Probabilistic { seed: cli.seed },
    };
    Config { mode, guard: Guard { max_size: cli.guard }, perturb, timing }
}

fn execute(cli: &Cli, out: &mut String) -> Result<i32, Failure> {
    match &cli.command {
        Command::ComputeP(a) | Command::ComputeQ(a) => {
            let lam = parse_partition(&a.lambda)?;
            check_rank(&lam, a.n)?;
            let eng = suite::engine(a.n);
            let (name, e) = match &cli.command {
                Command::ComputeP(_) => ("P", (*eng.compute_p(&lam)?).clone()),
                _ => ("Q", eng.compute_q(&lam)?),
            };
            emit_expansion(cli.format, &format!("{name}{lam} n={}", a.n), &e, out);
        }
        Command::Pieri(a) => emit_pieri(cli.format, &expand_tworow_product(a.l1, a.l2, a.n)?, out),
        Command::InversePieri(a) => emit_pieri(cli.format, &expand_tworow_inverse(a.l1, a.l2, a.n)?, out),
        Command::PieriMinuscule(a) => {
            let lam = parse_partition(&a.lambda)?;
            check_rank(&lam, a.n)?;
            let table = pieri_minuscule(&lam, a.n)?;
            let rows: Vec<(usize, Sign, Partition, _)> = table
                .into_iter()
                .filter_map(|((k, s), c)| shifted(&lam, a.n, k - 1, s).map(|t| (k, s, t, c)))
                .collect();
            match cli.format {
                Format::Json => {
                    let terms: Vec<Value> = rows
                        .iter()
                        .map(|(k, s, t, c)| {
                            json!({"k": k, "sign": sign_tag(*s), "target": t.coords(a.n).to_vec(), "value": scalar_to_json(c)})
                        })
                        .collect();
                    push_json(out, &json!({"n": a.n, "lambda": lam.coords(a.n).to_vec(), "terms": terms}));
                }
                Format::Text => {
                    let _ = writeln!(out, "# P(1) P{lam} n={}", a.n);
                    for (k, s, t, c) in rows {
                        let _ = writeln!(out, "{k}\t{}\t{t}\t{c}", sign_tag(s));
                    }
                }
            }
        }
        Command::PieriQuasi(a) => {
            let lam = parse_partition(&a.lambda)?;
            check_rank(&lam, a.n)?;
            let table = pieri_quasiminuscule(&lam, a.n)?;
            let target = |tau: &[i32]| -> Vec<i32> { lam.coords(a.n).iter().zip(tau).map(|(x, y)| x + y).collect() };
            match cli.format {
                Format::Json => {
                    let terms: Vec<Value> = table
                        .iter()
                        .map(|(tau, (c, d))| {
                            json!({"tau": tau, "target": target(tau), "c": scalar_to_json(c), "d": scalar_to_json(d)})
                        })
                        .collect();
                    push_json(out, &json!({"n": a.n, "lambda": lam.coords(a.n).to_vec(), "terms": terms}));
                }
                Format::Text => {
                    let _ = writeln!(out, "# (P(1,1) - const) P{lam} n={}", a.n);
                    for (tau, (c, d)) in &table {
                        let _ = writeln!(out, "{tau:?}\t{:?}\t{c}\t{d}", target(tau));
                    }
                }
            }
        }
        Command::OnerowSeries { n, max } => {
            if *n == 0 {
                return Err(usage("rank must be positive"));
            }
            let series = onerow_q_series(*max, *n);
            match cli.format {
                Format::Json => {
                    let v: Vec<Value> = series.iter().map(BasisExpansion::to_json).collect();
                    push_json(out, &json!({"n": n, "max": max, "series": v}));
                }
                Format::Text => {
                    for (r, q) in series.iter().enumerate() {
                        emit_expansion(Format::Text, &format!("Q({r}) n={n}"), q, out);
                    }
                }
            }
        }
        Command::B2(B2Command::Compute { lambda, normalized }) => {
            let w = parse_b2_weight(lambda)?;
            let e = if *normalized { b2_compute_q(&w)? } else { (*b2_compute_p(&w)?).clone() };
            let name = if *normalized { "Q" } else { "P" };
            match cli.format {
                Format::Json => {
                    let (d1, d2) = w.doubled();
                    push_json(
                        out,
                        &json!({"weight": w.to_string(), "doubled": [d1, d2], "polynomial": name, "expansion": e.to_json()}),
                    );
                }
                Format::Text => emit_expansion(Format::Text, &format!("B2 {name}{w}, doubled exponents"), &e, out),
            }
        }
        Command::B2(B2Command::VerifyThm7 { l1, l2, no_timing }) => {
            let params = VerifyParams { l1: Some(*l1), l2: Some(*l2), ..Default::default() };
            let r = run_identity("thm7", &params, &config(cli, !no_timing, None))?;
            return Ok(emit_reports(cli.format, &[r], false, out));
        }
        Command::Verify { id, args } => return verify(cli, id, args, out),
    }
    Ok(EXIT_OK)
}

fn verify(cli: &Cli, id: &str, a: &VerifyArgs, out: &mut String) -> Result<i32, Failure> {
    let perturb = match &a.perturb {
        Some(s) => {
            let v = parse_list(s)?;
            if v.len() != 2 {
                return Err(usage("--perturb takes \"i,j\""));
            }
            Some(Perturbation { i: v[0] as i64, j: v[1] as i64 })
        }
        None => None,
    };
    let cfg = config(cli, !a.no_timing, perturb);
    let params = VerifyParams {
        n: a.n,
        l1: a.l1,
        l2: a.l2,
        r: a.r,
        kvec: a.kvec.as_deref().map(parse_list).transpose()?,
        max_size: a.max_size,
        bound: a.bound,
    };
    if id == "all" {
        let mut reports = Vec::new();
        for name in IDENTITIES {
            reports.push(run_identity(name, &params, &cfg)?);
        }
        return Ok(emit_reports(cli.format, &reports, true, out));
    }
    if !IDENTITIES.contains(&id) {
        return Err(usage(format!("unknown identity '{id}'; known: {}, all", IDENTITIES.join(", "))));
    }
    let r = run_identity(id, &params, &cfg)?;
    Ok(emit_reports(cli.format, &[r], false, out))
}

fn emit_reports(format: Format, reports: &[VerificationReport], list: bool, out: &mut String) -> i32 {
    match format {
        Format::Json if list => push_json(out, &Value::Array(reports.iter().map(|r| r.to_json()).collect())),
        Format::Json => push_json(out, &reports[0].to_json()),
        Format::Text => {
            for r in reports {
                let _ = writeln!(out, "{}", r.to_line());
            }
        }
    }
    if reports.iter().all(|r| r.ok) {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

fn check_rank(lam: &Partition, n: usize) -> Result<(), Failure> {
    if n == 0 || !lam.fits(n) {
        return Err(usage(format!("{lam} is not a partition with at most {n} parts")));
    }
    Ok(())
}

fn sign_tag(s: Sign) -> &'static str {
    match s {
        Sign::Plus => "+",
        Sign::Minus => "-",
    }
}

fn push_json(out: &mut String, v: &Value) {
    out.push_str(&serde_json::to_string_pretty(v).expect("serializable"));
    out.push('\n');
}

fn emit_expansion(format: Format, header: &str, e: &BasisExpansion, out: &mut String) {
    match format {
        Format::Json => push_json(out, &e.to_json()),
        Format::Text => {
            let _ = writeln!(out, "# {header}");
            for (l, c) in e.terms() {
                let _ = writeln!(out, "m{l}\t{c}");
            }
        }
    }
}

fn emit_pieri(format: Format, p: &PieriExpansion, out: &mut String) {
    match format {
        Format::Json => push_json(out, &p.to_json()),
        Format::Text => out.push_str(&p.to_text()),
    }
}

/// `"c1,c2"` with integer or half-integer entries.
fn parse_b2_weight(s: &str) -> Result<B2Weight, Failure> {
    let doubled = |x: &str| -> Result<i32, Failure> {
        let x = x.trim();
        match x.split_once('/') {
            Some((a, "2")) => a.trim().parse::<i32>().map_err(|_| usage(format!("bad coordinate '{x}'"))),
            Some(_) => Err(usage(format!("'{x}': coordinates are integers or halves"))),
            None => x.parse::<i32>().map(|v| 2 * v).map_err(|_| usage(format!("bad coordinate '{x}'"))),
        }
    };
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(usage("a B2 weight has two coordinates"));
    }
    Ok(B2Weight::from_doubled(doubled(parts[0])?, doubled(parts[1])?)?)
}
