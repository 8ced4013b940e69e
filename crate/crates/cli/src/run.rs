use std::time::Instant;

use asnorm::field::is_prime;
use asnorm::normality::{pencil_bound, pencil_map_report, quadric_report};
use asnorm::{
    certify_with, CertifyOptions, CurveParams, EmbeddingSpec, Error, FieldSpec, Regime,
};
use rayon::prelude::*;

use crate::config::{ConfigError, FSpec, Format, Mode, RegimeKind, RunConfig, SWEEP_Q_CAP};
use crate::document::{
    CertificateDocument, ConfigEcho, CurveSummary, EmbeddingSummary, PencilDocument,
    PencilRecord, QuadricDocument, QuadricRecord, RunError, SweepItem, SCHEMA_VERSION,
};
use crate::emit;
use crate::rng::SplitMix64;

/// Largest twist tried by a CASE2 sweep when `--t` is absent.
pub const DEFAULT_SWEEP_T_MAX: u32 = 3;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

#[derive(Debug, Clone)]
pub enum Output {
    Single(Box<CertificateDocument>),
    Sweep(Vec<SweepItem>),
    Pencil(PencilDocument),
    Quadrics(QuadricDocument),
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub output: Output,
    pub exit_code: i32,
}

#[derive(Debug)]
pub enum RunFailure {
    Config(ConfigError),
    /// The computation itself broke (e.g. an unsound witness).
    Verification(String),
}

impl RunFailure {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunFailure::Config(_) => EXIT_CONFIG,
            RunFailure::Verification(_) => EXIT_VERIFICATION,
        }
    }
}

impl std::fmt::Display for RunFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunFailure::Config(e) => e.fmt(f),
            RunFailure::Verification(msg) => write!(f, "verification error: {msg}"),
        }
    }
}

impl std::error::Error for RunFailure {}

impl From<ConfigError> for RunFailure {
    fn from(e: ConfigError) -> Self {
        RunFailure::Config(e)
    }
}

/// Maps a library error raised while building the inputs to the flag that caused it.
pub fn config_error(e: &Error) -> ConfigError {
    let field = match e {
        Error::NotPrime(_) | Error::FieldTooLarge { .. } => "p",
        Error::InvalidExtensionDegree => "k",
        Error::DegreeDivisibleByP { .. } | Error::TrivialCurve => "m",
        Error::InvalidElement { .. } | Error::NotDegreeM => "f",
        Error::RegimeMismatch(_) => "regime",
        Error::FormulaOutOfScope(_) => "mode",
        _ => "config",
    };
    ConfigError::new(field, e.to_string())
}

pub fn run(cfg: &RunConfig) -> Result<Outcome, RunFailure> {
    match cfg.mode {
        Mode::Single => run_single(cfg),
        Mode::Sweep => run_sweep(cfg),
        Mode::Pencil => run_pencil(cfg),
        Mode::Quadrics => run_quadrics(cfg),
    }
}

/// Encoded output bytes for `outcome` in the configured format.
pub fn render(outcome: &Outcome, format: Format) -> anyhow::Result<Vec<u8>> {
    Ok(match (&outcome.output, format) {
        (Output::Single(doc), Format::Json) => emit::to_json(doc)?,
        (Output::Single(doc), Format::Csv) => emit::to_csv(&[SweepItem::Certificate(doc.clone())])?,
        (Output::Sweep(items), Format::Json) => emit::to_json(items)?,
        (Output::Sweep(items), Format::Csv) => emit::to_csv(items)?,
        (Output::Pencil(doc), _) => emit::to_json(doc)?,
        (Output::Quadrics(doc), _) => emit::to_json(doc)?,
    })
}

fn require<T: Copy>(v: Option<T>, field: &str) -> Result<T, ConfigError> {
    v.ok_or_else(|| ConfigError::new(field, "required in this mode"))
}

/// The curve described by `--p --k --m --f --seed`.
pub fn build_curve(cfg: &RunConfig) -> Result<CurveParams, ConfigError> {
    let p = require(cfg.p, "p")?;
    let field = FieldSpec::new(p, cfg.k).map_err(|e| config_error(&e))?;
    let coeffs = match &cfg.f {
        FSpec::PurePower => {
            let m = require(cfg.m, "m")?;
            let mut f = vec![0u64; m as usize + 1];
            f[m as usize] = 1;
            f
        }
        FSpec::Coefficients(c) => c.clone(),
        FSpec::Random => {
            let seed = cfg
                .seed
                .ok_or_else(|| ConfigError::new("seed", "--f random needs an explicit --seed"))?;
            let m = require(cfg.m, "m")?;
            if field.q() < 2 {
                return Err(ConfigError::new("p", "field too small"));
            }
            SplitMix64::new(seed).polynomial(field.q() as u64, m)
        }
    };
    let curve = CurveParams::from_encodings(&field, &coeffs).map_err(|e| config_error(&e))?;
    if let Some(m) = cfg.m {
        if m != curve.m() {
            return Err(ConfigError::new(
                "f",
                format!("f has degree {} but --m is {m}", curve.m()),
            ));
        }
    }
    Ok(curve)
}

fn options(cfg: &RunConfig, emb: &EmbeddingSpec) -> CertifyOptions {
    CertifyOptions {
        s_extra: cfg.s_extra,
        quadrics: emb.regime() == Regime::Case1 && emb.curve().m() >= 3,
        witnesses: cfg.witnesses,
    }
}

fn certify_document(
    cfg: &RunConfig,
    curve_id: String,
    echo: ConfigEcho,
    emb: &EmbeddingSpec,
) -> asnorm::Result<CertificateDocument> {
    let start = Instant::now();
    let cert = certify_with(emb, &options(cfg, emb))?;
    let mut doc = CertificateDocument::new(curve_id, echo, &cert);
    if cfg.timing {
        doc.timing.wall_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(doc)
}

pub fn run_single(cfg: &RunConfig) -> Result<Outcome, RunFailure> {
    let curve = build_curve(cfg)?;
    let regime = cfg.resolved_regime()?;
    let emb = EmbeddingSpec::new(&curve, regime).map_err(|e| config_error(&e))?;
    let curve_id = curve_id(&curve, regime, &cfg.f.to_string());
    let doc = certify_document(cfg, curve_id, ConfigEcho::from_config(cfg), &emb)
        .map_err(|e| RunFailure::Verification(e.to_string()))?;
    let exit_code = single_exit_code(&doc);
    Ok(Outcome {
        output: Output::Single(Box::new(doc)),
        exit_code,
    })
}

/// 1 when the certificate is FAILED, otherwise 0.
pub fn single_exit_code(doc: &CertificateDocument) -> i32 {
    if doc.is_failed() {
        EXIT_VERIFICATION
    } else {
        EXIT_OK
    }
}

/// 1 when any run failed, errored, or missed PROVEN_NORMAL under the theorem hypotheses.
pub fn sweep_exit_code(items: &[SweepItem]) -> i32 {
    let bad = items.iter().any(|item| match item {
        SweepItem::Certificate(doc) => doc.is_failed() || doc.contradicts_theorem(),
        SweepItem::Error(_) => true,
    });
    if bad {
        EXIT_VERIFICATION
    } else {
        EXIT_OK
    }
}

fn curve_id(curve: &CurveParams, regime: Regime, tag: &str) -> String {
    let base = format!("q{}-m{}-{}", curve.q(), curve.m(), regime.name().to_lowercase());
    match regime {
        Regime::Case1 => format!("{base}-{tag}"),
        Regime::Case2 { t } => format!("{base}-t{t}-{tag}"),
    }
}

/// One sweep parameter point: a field, a degree and a regime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepPoint {
    pub p: u64,
    pub k: u32,
    pub q: u64,
    pub m: u32,
    pub regime: Regime,
}

impl SweepPoint {
    fn t_key(&self) -> u32 {
        self.regime.t().unwrap_or(0)
    }
}

/// Every `(p, k, m[, t])` with `q = p^k <= max_q`, `gcd(m, p) = 1` and the regime
/// divisibility, ordered by `q`, then `m`, then `t`. CASE2 also needs
/// `c = (tq + 1)/m <= q - 1`.
pub fn sweep_points(max_q: u64, case1: bool, case2_t_max: Option<u32>) -> Vec<SweepPoint> {
    let mut out = Vec::new();
    for p in (2..=max_q).filter(|&p| is_prime(p)) {
        let mut q = p;
        let mut k = 1;
        while q <= max_q {
            if case1 {
                for m in 2..q {
                    if (q - 1) % m == 0 && m % p != 0 {
                        out.push(SweepPoint { p, k, q, m: m as u32, regime: Regime::Case1 });
                    }
                }
            }
            if let Some(t_max) = case2_t_max {
                for t in 1..=t_max as u64 {
                    let l = t * q + 1;
                    for m in 2..=l {
                        if l % m == 0 && m % p != 0 && l / m <= q - 1 {
                            out.push(SweepPoint {
                                p,
                                k,
                                q,
                                m: m as u32,
                                regime: Regime::Case2 { t: t as u32 },
                            });
                        }
                    }
                }
            }
            q *= p;
            k += 1;
        }
    }
    out.sort_by_key(|pt| (pt.q, pt.m, pt.t_key()));
    out
}

struct Job {
    point: SweepPoint,
    tag: String,
    f: Vec<u64>,
}

pub fn run_sweep(cfg: &RunConfig) -> Result<Outcome, RunFailure> {
    if cfg.max_q > SWEEP_Q_CAP {
        return Err(ConfigError::new("max-q", format!("must be at most {SWEEP_Q_CAP}")).into());
    }
    let (case1, t_max) = match cfg.regime {
        None => (true, Some(cfg.t.unwrap_or(DEFAULT_SWEEP_T_MAX))),
        Some(RegimeKind::Case1) => {
            if cfg.t.is_some() {
                return Err(ConfigError::new("t", "--t only applies to CASE2").into());
            }
            (true, None)
        }
        Some(RegimeKind::Case2) => (false, Some(cfg.t.unwrap_or(DEFAULT_SWEEP_T_MAX))),
    };
    if t_max == Some(0) {
        return Err(ConfigError::new("t", "must be at least 1").into());
    }

    // random polynomials are drawn in sweep order so the stream never depends on scheduling
    let mut rng = SplitMix64::new(cfg.seed.unwrap_or(0));
    let mut jobs = Vec::new();
    for point in sweep_points(cfg.max_q, case1, t_max) {
        let mut pure = vec![0u64; point.m as usize + 1];
        pure[point.m as usize] = 1;
        jobs.push(Job { point, tag: "xm".into(), f: pure });
        for n in 1..=cfg.n_random {
            jobs.push(Job {
                point,
                tag: format!("r{n}"),
                f: rng.polynomial(point.q, point.m),
            });
        }
    }

    let echo = ConfigEcho::from_config(cfg);
    let items: Vec<SweepItem> = jobs
        .par_iter()
        .map(|job| sweep_job(cfg, &echo, job))
        .collect();

    let exit_code = sweep_exit_code(&items);
    Ok(Outcome {
        output: Output::Sweep(items),
        exit_code,
    })
}

fn sweep_job(cfg: &RunConfig, echo: &ConfigEcho, job: &Job) -> SweepItem {
    let pt = job.point;
    let id = match pt.regime {
        Regime::Case1 => format!("q{}-m{}-case1-{}", pt.q, pt.m, job.tag),
        Regime::Case2 { t } => format!("q{}-m{}-case2-t{t}-{}", pt.q, pt.m, job.tag),
    };
    let result = FieldSpec::new(pt.p, pt.k)
        .and_then(|field| CurveParams::from_encodings(&field, &job.f))
        .and_then(|curve| EmbeddingSpec::new(&curve, pt.regime))
        .and_then(|emb| certify_document(cfg, id.clone(), echo.clone(), &emb));
    match result {
        Ok(doc) => SweepItem::Certificate(Box::new(doc)),
        Err(e) => SweepItem::Error(RunError {
            schema_version: SCHEMA_VERSION,
            curve_id: id,
            p: pt.p,
            k: pt.k,
            m: pt.m,
            t: pt.regime.t(),
            f: job.f.clone(),
            error: e.to_string(),
            error_kind: e.name(),
        }),
    }
}

fn json_only(cfg: &RunConfig) -> Result<(), ConfigError> {
    if cfg.format != Format::Json {
        return Err(ConfigError::new("format", "this mode only writes JSON"));
    }
    Ok(())
}

pub fn run_pencil(cfg: &RunConfig) -> Result<Outcome, RunFailure> {
    json_only(cfg)?;
    let curve = build_curve(cfg)?;
    let grid = &cfg.pencil_grid;
    let mut jobs = Vec::new();
    for a in 0..=grid.a_max {
        for b in 0..=grid.b_max {
            if a + b == 0 {
                continue;
            }
            for &delta in &grid.deltas {
                jobs.push((a, b, delta));
            }
        }
    }
    let records: Vec<PencilRecord> = jobs
        .par_iter()
        .map(|&(a, b, delta)| {
            let e = pencil_bound(&curve, a, b).max(0) as u64 + delta;
            PencilRecord::new(&pencil_map_report(&curve, a, b, e), delta)
        })
        .collect();
    let all_surjective = records.iter().all(|r| r.surjective);
    Ok(Outcome {
        output: Output::Pencil(PencilDocument {
            schema_version: SCHEMA_VERSION,
            config: ConfigEcho::from_config(cfg),
            curve: CurveSummary::new(&curve),
            grid: records,
            all_surjective,
        }),
        exit_code: if all_surjective { EXIT_OK } else { EXIT_VERIFICATION },
    })
}

pub fn run_quadrics(cfg: &RunConfig) -> Result<Outcome, RunFailure> {
    json_only(cfg)?;
    let curve = build_curve(cfg)?;
    let regime = cfg.resolved_regime()?;
    let emb = EmbeddingSpec::new(&curve, regime).map_err(|e| config_error(&e))?;
    let report = quadric_report(&emb).map_err(|e| config_error(&e))?;
    let exit_code = if report.matches { EXIT_OK } else { EXIT_VERIFICATION };
    Ok(Outcome {
        output: Output::Quadrics(QuadricDocument {
            schema_version: SCHEMA_VERSION,
            config: ConfigEcho::from_config(cfg),
            curve: CurveSummary::new(&curve),
            embedding: EmbeddingSummary::new(&emb),
            quadric: QuadricRecord::from(&report),
        }),
        exit_code,
    })
}
