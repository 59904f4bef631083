//! The registry of verifiable identities and their default parameter boxes.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::Instant;

use macdonald_core::btwo::{verify_bijection, verify_generating_function, verify_thm7, verify_thm7_box};
use macdonald_core::identities::{
    verify_65_summation, verify_cor7, verify_rosengren_form, verify_thm10, verify_thm11, verify_thm6, verify_thm8,
    verify_thm9, Guard, Mode,
};
use macdonald_core::macdonald::{onerow_q_series, Engine};
use macdonald_core::pieri::{
    check_tworow_inverse, check_tworow_product, check_weyl_limit, verify_cor6, verify_eq43, verify_pair_inversion, verify_round_trip,
    verify_round_trip_box, verify_thm2c, verify_thm3, verify_thm5, MatrixPair, PairKind, Perturbation,
};
use macdonald_core::weyl::{verify_macdonald_wsum, Partition};
use macdonald_core::{MacError, Result, Verdict};
use serde_json::{json, Map, Value};

pub const IDENTITIES: &[&str] = &[
    "thm3",
    "thm4",
    "thm5",
    "thm6",
    "thm7",
    "thm8",
    "thm9",
    "thm10",
    "thm11",
    "cor6",
    "cor7",
    "eq43",
    "thm2c",
    "spec-formula",
    "orthogonality",
    "bressoud",
    "phi65",
    "wsum",
    "rosengren",
];

/// Optional narrowing of an identity's default box.
#[derive(Clone, Debug, Default)]
pub struct VerifyParams {
    pub n: Option<usize>,
    pub l1: Option<i64>,
    pub l2: Option<i64>,
    pub r: Option<usize>,
    pub kvec: Option<Vec<usize>>,
    pub max_size: Option<i32>,
    pub bound: Option<i64>,
}

#[derive(Clone, Debug)]
pub struct Config {
    pub mode: Mode,
    pub guard: Guard,
    /// Added to one product coefficient in `thm3`, to confirm the check can fail.
    pub perturb: Option<Perturbation>,
    pub timing: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config { mode: Mode::Exact, guard: Guard::default(), perturb: None, timing: true }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub identity: String,
    pub params: Map<String, Value>,
    pub mode: String,
    pub ok: bool,
    pub elapsed_ms: u64,
    pub detail: Option<String>,
}

impl VerificationReport {
    pub fn to_json(&self) -> Value {
        json!({
            "identity": self.identity,
            "params": self.params,
            "mode": self.mode,
            "ok": self.ok,
            "elapsed_ms": self.elapsed_ms,
            "detail": self.detail,
        })
    }

    pub fn from_json(v: &Value) -> Option<Self> {
        Some(VerificationReport {
            identity: v["identity"].as_str()?.to_string(),
            params: v["params"].as_object()?.clone(),
            mode: v["mode"].as_str()?.to_string(),
            ok: v["ok"].as_bool()?,
            elapsed_ms: v["elapsed_ms"].as_u64()?,
            detail: v["detail"].as_str().map(str::to_string),
        })
    }

    pub fn to_line(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut s = format!(
            "{} {} [{}] {} ({} ms)",
            self.identity,
            if self.ok { "ok" } else { "FAILED" },
            self.mode,
            params.join(" "),
            self.elapsed_ms
        );
        if let Some(d) = &self.detail {
            s.push_str(": ");
            s.push_str(d);
        }
        s
    }
}

/// Shared engines, so that `all` computes each polynomial once.
pub fn engine(n: usize) -> Arc<Engine> {
    static CACHE: OnceLock<Mutex<BTreeMap<usize, Arc<Engine>>>> = OnceLock::new();
    let mut m = CACHE.get_or_init(Default::default).lock().expect("engine cache");
    m.entry(n).or_insert_with(|| Arc::new(Engine::c(n))).clone()
}

struct Outcome {
    params: Map<String, Value>,
    verdict: Verdict,
    mode: Mode,
}

impl Outcome {
    fn exact(params: Value, verdict: Verdict) -> Self {
        Outcome { params: as_map(params), verdict, mode: Mode::Exact }
    }
}

fn as_map(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => Map::new(),
    }
}

fn ranks(p: &VerifyParams, default: &[usize]) -> Vec<usize> {
    p.n.map(|n| vec![n]).unwrap_or_else(|| default.to_vec())
}

fn pair_or_box(p: &VerifyParams) -> Result<Option<(i64, i64)>> {
    match (p.l1, p.l2) {
        (Some(a), Some(b)) => Ok(Some((a, b))),
        (None, None) => Ok(None),
        _ => Err(MacError::Invalid("give both --l1 and --l2, or neither".into())),
    }
}

fn over_ranks(ns: &[usize], f: impl Fn(usize) -> Result<Verdict>) -> Result<Verdict> {
    let mut vs = Vec::new();
    for &n in ns {
        vs.push(f(n)?);
    }
    Ok(Verdict::all(vs))
}

const BOX1: i64 = 4;
const BOX2: i64 = 3;

fn two_row(p: &VerifyParams, name: &str, cfg: &Config) -> Result<Outcome> {
    let ns = ranks(p, &[2, 3]);
    let pair = pair_or_box(p)?;
    let verdict = over_ranks(&ns, |n| {
        let eng = engine(n);
        match (name, pair) {
            ("thm3", Some((a, b))) => {
                check_tworow_product(&eng, &onerow_q_series((a + b) as usize, n), a, b, cfg.perturb)
            }
            ("thm3", None) => verify_thm3(&eng, BOX1, BOX2, cfg.perturb),
            ("thm5", Some((a, b))) => Ok(check_tworow_inverse(&eng, &onerow_q_series((a + b) as usize, n), a, b)?
                .and(|| verify_round_trip(a, b, n).unwrap_or_else(|e| Verdict::fail(e.to_string())))),
            ("thm5", None) => Ok(verify_thm5(&eng, BOX1, BOX2)?
                .and(|| verify_round_trip_box(BOX1, BOX2, n).unwrap_or_else(|e| Verdict::fail(e.to_string())))),
            ("thm4", Some((a, b))) => {
                let ok = eng.verify_thm4(a as i32, b as i32)?;
                Ok(Verdict::from_bool(ok, || format!("E Q({a})Q({b}) at n={n}")))
            }
            ("thm4", None) => eng.verify_thm4_box(BOX1 as i32, BOX2 as i32),
            ("cor6", Some((a, b))) => {
                let at_q: Vec<_> = onerow_q_series((a + b + 1) as usize, n)
                    .iter()
                    .map(|f| f.map_scalars(|c| Ok(c.at_t_equals_q_pow(1)?)))
                    .collect::<Result<_>>()?;
                check_weyl_limit(&at_q, a, b, n)
            }
            ("cor6", None) => verify_cor6(n, BOX1, BOX2),
            _ => unreachable!("registered two-row identity"),
        }
    })?;
    let params = match pair {
        Some((a, b)) => json!({"n": ns, "l1": a, "l2": b}),
        None => json!({"n": ns, "l1_max": BOX1, "l2_max": BOX2}),
    };
    Ok(Outcome::exact(params, verdict))
}

/// Runs `f` on each case, skipping default-box cases beyond the exact-mode guard.
fn guarded_cases<C>(
    cases: Vec<(C, usize)>,
    explicit: bool,
    cfg: &Config,
    label: impl Fn(&C) -> Value,
    f: impl Fn(&C, Mode) -> Result<Verdict>,
) -> Result<(Verdict, Vec<Value>, Vec<Value>)> {
    let mut vs = Vec::new();
    let (mut done, mut skipped) = (Vec::new(), Vec::new());
    for (c, size) in cases {
        if !explicit && cfg.mode == Mode::Exact && size > cfg.guard.max_size {
            skipped.push(label(&c));
            continue;
        }
        vs.push(f(&c, cfg.mode)?);
        done.push(label(&c));
    }
    Ok((Verdict::all(vs), done, skipped))
}

fn thm6(p: &VerifyParams, cfg: &Config) -> Result<Outcome> {
    let explicit = p.n.is_some() || p.r.is_some();
    let cases: Vec<((usize, usize), usize)> = if explicit {
        let (n, r) = (p.n.unwrap_or(2), p.r.unwrap_or(2));
        vec![((n, r), n + r)]
    } else {
        let mut v: Vec<(usize, usize)> = (0..=3).flat_map(|n| (0..=2).map(move |r| (n, r))).collect();
        v.extend([(1, 3), (0, 3)]);
        v.into_iter().map(|c| (c, c.0 + c.1)).collect()
    };
    let (mut verdict, done, skipped) =
        guarded_cases(cases, explicit, cfg, |&(n, r)| json!([n, r]), |&(n, r), mode| verify_thm6(n, r, mode, &cfg.guard))?;
    let mut params = json!({"cases": done, "skipped": skipped});
    if !explicit && cfg.mode == Mode::Exact {
        let seed = 0x5eed;
        verdict = verdict.and(|| {
            verify_thm6(3, 3, Mode::Probabilistic { seed }, &cfg.guard).unwrap_or_else(|e| Verdict::fail(e.to_string()))
        });
        params["probabilistic_cases"] = json!([[3, 3]]);
        params["probabilistic_seed"] = json!(seed);
    }
    Ok(Outcome { params: as_map(params), verdict, mode: cfg.mode })
}

fn thm89(p: &VerifyParams, cfg: &Config, nine: bool) -> Result<Outcome> {
    let explicit = p.n.is_some() || p.r.is_some();
    let list: Vec<(usize, usize)> =
        if explicit { vec![(p.n.unwrap_or(2), p.r.unwrap_or(1))] } else { vec![(1, 1), (2, 1), (2, 2), (3, 2)] };
    let cases = list.into_iter().map(|c| (c, c.0 + c.1)).collect();
    let (verdict, done, skipped) = guarded_cases(cases, explicit, cfg, |&(n, r)| json!([n, r]), |&(n, r), mode| {
        if nine {
            verify_thm9(n, r, mode, &cfg.guard)
        } else {
            verify_thm8(n, r, mode, &cfg.guard)
        }
    })?;
    Ok(Outcome { params: as_map(json!({"cases": done, "skipped": skipped})), verdict, mode: cfg.mode })
}

fn blocks(p: &VerifyParams, cfg: &Config, which: &str) -> Result<Outcome> {
    let explicit = p.n.is_some() || p.kvec.is_some();
    let ns = ranks(p, &[1, 2, 3]);
    let kvecs = p.kvec.clone().map(|k| vec![k]).unwrap_or_else(|| vec![vec![1], vec![2], vec![1, 1], vec![2, 1]]);
    let cases: Vec<((usize, Vec<usize>), usize)> = ns
        .iter()
        .flat_map(|&n| kvecs.iter().map(move |k| ((n, k.clone()), n + k.iter().sum::<usize>())))
        .collect();
    let (verdict, done, skipped) = guarded_cases(cases, explicit, cfg, |(n, k)| json!({"n": n, "kvec": k}), |(n, k), mode| match which {
        "thm10" => verify_thm10(*n, k, mode, &cfg.guard),
        "thm11" => verify_thm11(*n, k, mode, &cfg.guard),
        _ => verify_rosengren_form(*n, k, mode, &cfg.guard),
    })?;
    Ok(Outcome { params: as_map(json!({"cases": done, "skipped": skipped})), verdict, mode: cfg.mode })
}

fn cor7(p: &VerifyParams, cfg: &Config) -> Result<Outcome> {
    let explicit = p.n.is_some();
    let cases = ranks(p, &[1, 2, 3]).into_iter().map(|n| (n, n + 2)).collect();
    let (verdict, done, skipped) = guarded_cases(cases, explicit, cfg, |&n| json!(n), |&n, mode| verify_cor7(n, mode, &cfg.guard))?;
    Ok(Outcome { params: as_map(json!({"n": done, "skipped": skipped})), verdict, mode: cfg.mode })
}

fn by_size(p: &VerifyParams, name: &str) -> Result<Outcome> {
    let ns = ranks(p, &[2, 3]);
    let default = match name {
        "eq43" | "spec-formula" => 5,
        _ => 4,
    };
    let size = p.max_size.unwrap_or(default);
    let verdict = over_ranks(&ns, |n| {
        let eng = engine(n);
        match name {
            "eq43" => verify_eq43(&eng, size),
            "thm2c" => verify_thm2c(&eng, size),
            _ => eng.verify_specialization_box(size),
        }
    })?;
    Ok(Outcome::exact(json!({"n": ns, "max_size": size}), verdict))
}

fn orthogonality(p: &VerifyParams) -> Result<Outcome> {
    let ns = ranks(p, &[2]);
    let size = p.max_size.unwrap_or(3);
    let ks = [1i64, 2];
    let verdict = over_ranks(&ns, |n| {
        let eng = engine(n);
        let mut vs = Vec::new();
        for &k in &ks {
            vs.push(eng.verify_orthogonality(size, k)?);
        }
        Ok(Verdict::all(vs))
    })?;
    Ok(Outcome::exact(json!({"n": ns, "max_size": size, "k": ks}), verdict))
}

fn bressoud(p: &VerifyParams) -> Result<Outcome> {
    let b1 = p.bound.unwrap_or(4);
    let b2 = p.bound.unwrap_or(3);
    let mut vs = Vec::new();
    for kind in [PairKind::BressoudA, PairKind::FgPair, PairKind::TwoDim] {
        let b = if kind == PairKind::TwoDim { b2 } else { b1 };
        vs.push(verify_pair_inversion(&MatrixPair::generic(kind), b)?);
    }
    Ok(Outcome::exact(json!({"bound_1d": b1, "bound_2d": b2}), Verdict::all(vs)))
}

fn thm7(p: &VerifyParams) -> Result<Outcome> {
    match pair_or_box(p)? {
        Some((a, b)) => Ok(Outcome::exact(json!({"l1": a, "l2": b}), verify_thm7(a, b)?)),
        None => {
            let v = verify_thm7_box(BOX1, BOX2)?;
            let v = v.and(|| verify_bijection(6).unwrap_or_else(|e| Verdict::fail(e.to_string())));
            let v = v.and(|| verify_generating_function(5).unwrap_or_else(|e| Verdict::fail(e.to_string())));
            Ok(Outcome::exact(
                json!({"l1_max": BOX1, "l2_max": BOX2, "bijection_max_size": 6, "generating_function_order": 5}),
                v,
            ))
        }
    }
}

fn wsum(p: &VerifyParams) -> Result<Outcome> {
    let ns = ranks(p, &[2, 3]);
    let verdict = over_ranks(&ns, |n| {
        Ok(Verdict::from_bool(verify_macdonald_wsum(n)?, || format!("W-sum identity at n={n}")))
    })?;
    Ok(Outcome::exact(json!({"n": ns}), verdict))
}

fn phi65(p: &VerifyParams) -> Result<Outcome> {
    let i_max = p.max_size.unwrap_or(6) as usize;
    Ok(Outcome::exact(json!({"i_max": i_max}), verify_65_summation(i_max)?))
}

fn dispatch(id: &str, p: &VerifyParams, cfg: &Config) -> Result<Outcome> {
    match id {
        "thm3" | "thm4" | "thm5" | "cor6" => two_row(p, id, cfg),
        "thm6" => thm6(p, cfg),
        "thm7" => thm7(p),
        "thm8" => thm89(p, cfg, false),
        "thm9" => thm89(p, cfg, true),
        "thm10" | "thm11" | "rosengren" => blocks(p, cfg, id),
        "cor7" => cor7(p, cfg),
        "eq43" | "thm2c" | "spec-formula" => by_size(p, id),
        "orthogonality" => orthogonality(p),
        "bressoud" => bressoud(p),
        "phi65" => phi65(p),
        "wsum" => wsum(p),
        _ => Err(MacError::Invalid(format!("unknown identity '{id}'; known: {}, all", IDENTITIES.join(", ")))),
    }
}

/// Runs one identity. Errors are returned for invalid parameters and guard violations;
/// a failed identity is an `ok = false` report.
pub fn run_identity(id: &str, p: &VerifyParams, cfg: &Config) -> Result<VerificationReport> {
    let start = Instant::now();
    let out = dispatch(id, p, cfg)?;
    Ok(VerificationReport {
        identity: id.to_string(),
        params: out.params,
        mode: out.mode.tag().to_string(),
        ok: out.verdict.ok,
        elapsed_ms: if cfg.timing { start.elapsed().as_millis() as u64 } else { 0 },
        detail: out.verdict.detail,
    })
}

/// Every registered identity at its default box, in registration order.
pub fn verify_all(cfg: &Config) -> Vec<Result<VerificationReport>> {
    IDENTITIES.iter().map(|id| run_identity(id, &VerifyParams::default(), cfg)).collect()
}

pub fn parse_partition(s: &str) -> Result<Partition> {
    let s = s.trim();
    if s.is_empty() {
        return Partition::new(&[]);
    }
    let parts: Vec<i32> = s
        .split(',')
        .map(|x| x.trim().parse::<i32>().map_err(|_| MacError::Invalid(format!("'{x}' is not an integer part"))))
        .collect::<Result<_>>()?;
    Partition::new(&parts)
}

pub fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| MacError::Invalid(format!("'{x}' is not a nonnegative integer"))))
        .collect()
}
