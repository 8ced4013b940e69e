//! Serializable certificate records. Every number is an exact integer.

use asnorm::normality::{PencilReport, QuadricReport, WitnessEntry};
use asnorm::{EmbeddingSpec, MuReport, NormalityCertificate, RingElement, Verdict};
use serde::Serialize;

use crate::config::RunConfig;

pub const SCHEMA_VERSION: &str = "1";

/// The configuration as it was understood, echoed into every document.
#[derive(Debug, Clone, Serialize)]
pub struct ConfigEcho {
    pub mode: String,
    pub p: Option<u64>,
    pub k: u32,
    pub m: Option<u32>,
    pub t: Option<u32>,
    pub regime: Option<String>,
    pub f: String,
    pub seed: Option<u64>,
    pub s_extra: u64,
    pub max_q: Option<u64>,
    pub n_random: Option<u32>,
    pub format: String,
    pub witnesses: bool,
}

impl ConfigEcho {
    pub fn from_config(cfg: &RunConfig) -> Self {
        use crate::config::Mode;
        let sweep = cfg.mode == Mode::Sweep;
        Self {
            mode: format!("{:?}", cfg.mode).to_lowercase(),
            p: cfg.p,
            k: cfg.k,
            m: cfg.m,
            t: cfg.t,
            regime: cfg.regime.map(|r| format!("{r:?}").to_uppercase()),
            f: cfg.f.to_string(),
            seed: cfg.seed,
            s_extra: cfg.s_extra,
            max_q: sweep.then_some(cfg.max_q),
            n_random: sweep.then_some(cfg.n_random),
            format: format!("{:?}", cfg.format).to_lowercase(),
            witnesses: cfg.witnesses,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CurveSummary {
    pub p: u32,
    pub k: u32,
    pub q: u32,
    pub m: u32,
    pub g: u64,
    pub gap_count: u64,
    /// Field modulus, low-to-high.
    pub modulus: Vec<u32>,
    /// Base-p encodings of the coefficients of `f`, low-to-high.
    pub f: Vec<u32>,
    pub f_is_pure_power: bool,
}

impl CurveSummary {
    pub fn new(curve: &asnorm::CurveParams) -> Self {
        Self {
            p: curve.p(),
            k: curve.k(),
            q: curve.q(),
            m: curve.m(),
            g: curve.genus(),
            gap_count: curve.semigroup_gaps().len() as u64,
            modulus: curve.field().modulus().to_vec(),
            f: curve.f_encodings().to_vec(),
            f_is_pure_power: curve.is_pure_power(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EmbeddingSummary {
    pub regime: &'static str,
    pub t: Option<u32>,
    pub l_degree: u64,
    pub c: u64,
    pub r: usize,
    pub h0_drop_ok: bool,
    pub hypotheses_hold: bool,
    pub outside_remark_scope: bool,
}

impl EmbeddingSummary {
    pub fn new(emb: &EmbeddingSpec) -> Self {
        Self {
            regime: emb.regime().name(),
            t: emb.t(),
            l_degree: emb.l_degree(),
            c: emb.c(),
            r: emb.r(),
            h0_drop_ok: emb.h0_drop_ok(),
            hypotheses_hold: emb.theorem_hypotheses_hold(),
            outside_remark_scope: emb.outside_remark_scope(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MuRecord {
    pub s: u64,
    pub domain_dim: usize,
    pub factor_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub surjective: bool,
    pub theorem_guaranteed: bool,
}

impl From<&MuReport> for MuRecord {
    fn from(r: &MuReport) -> Self {
        Self {
            s: r.s,
            domain_dim: r.domain_dim,
            factor_dim: r.factor_dim,
            target_dim: r.target_dim,
            rank: r.rank,
            surjective: r.surjective,
            theorem_guaranteed: r.theorem_guaranteed,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct QuadricRecord {
    pub c: u64,
    pub h0_x_2: usize,
    pub expected_h0: u64,
    pub kernel_dim: usize,
    pub formula_value: u64,
    pub matches: bool,
}

impl From<&QuadricReport> for QuadricRecord {
    fn from(r: &QuadricReport) -> Self {
        Self {
            c: r.c,
            h0_x_2: r.h0_x_2,
            expected_h0: r.expected_h0,
            kernel_dim: r.kernel_dim,
            formula_value: r.formula_value,
            matches: r.matches,
        }
    }
}

/// Ring element as `[i, j, coeff]` triples.
fn terms_of(u: &RingElement) -> Vec<[u32; 3]> {
    u.terms().map(|(mono, c)| [mono.i, mono.j, c]).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessTermRecord {
    pub coeff: u32,
    pub left: Vec<[u32; 3]>,
    pub right: Vec<[u32; 3]>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessRecord {
    pub s: u64,
    pub target: [u32; 2],
    pub case: &'static str,
    pub terms: Vec<WitnessTermRecord>,
}

impl From<&WitnessEntry> for WitnessRecord {
    fn from(w: &WitnessEntry) -> Self {
        Self {
            s: w.s,
            target: [w.target.i, w.target.j],
            case: w.case.name(),
            terms: w
                .terms
                .iter()
                .map(|t| WitnessTermRecord {
                    coeff: t.coeff.encoding(),
                    left: terms_of(&t.left),
                    right: terms_of(&t.right),
                })
                .collect(),
        }
    }
}

/// Work counters; reproducible. `wall_ms` only appears with `--timing`.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Timing {
    pub rank_computations: u64,
    pub matrix_columns: u64,
    pub matrix_rows: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateDocument {
    pub schema_version: &'static str,
    pub curve_id: String,
    pub config: ConfigEcho,
    pub curve: CurveSummary,
    pub embedding: EmbeddingSummary,
    pub mu_reports: Vec<MuRecord>,
    pub verdict: &'static str,
    pub first_failing_s: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quadric: Option<QuadricRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<WitnessRecord>>,
    pub timing: Timing,
}

impl CertificateDocument {
    pub fn new(curve_id: String, config: ConfigEcho, cert: &NormalityCertificate) -> Self {
        let emb = &cert.embedding;
        let timing = Timing {
            rank_computations: cert.mu_reports.len() as u64,
            matrix_columns: cert
                .mu_reports
                .iter()
                .map(|r| (r.domain_dim * r.factor_dim) as u64)
                .sum(),
            matrix_rows: cert.mu_reports.iter().map(|r| r.target_dim as u64).sum(),
            wall_ms: None,
        };
        Self {
            schema_version: SCHEMA_VERSION,
            curve_id,
            config,
            curve: CurveSummary::new(emb.curve()),
            embedding: EmbeddingSummary::new(emb),
            mu_reports: cert.mu_reports.iter().map(MuRecord::from).collect(),
            verdict: cert.verdict.name(),
            first_failing_s: match cert.verdict {
                Verdict::Failed { first_failing_s } => Some(first_failing_s),
                _ => None,
            },
            quadric: cert.quadric_report.as_ref().map(QuadricRecord::from),
            witnesses: cert
                .witness_table
                .as_ref()
                .map(|t| t.iter().map(WitnessRecord::from).collect()),
            timing,
        }
    }

    pub fn is_failed(&self) -> bool {
        self.first_failing_s.is_some()
    }

    /// A theorem-covered run that did not come out PROVEN_NORMAL.
    pub fn contradicts_theorem(&self) -> bool {
        self.embedding.hypotheses_hold && self.verdict != Verdict::ProvenNormal.name()
    }
}

/// A sweep run that could not be certified, kept in place of its certificate.
#[derive(Debug, Clone, Serialize)]
pub struct RunError {
    pub schema_version: &'static str,
    pub curve_id: String,
    pub p: u64,
    pub k: u32,
    pub m: u32,
    pub t: Option<u32>,
    pub f: Vec<u64>,
    pub error: String,
    pub error_kind: &'static str,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum SweepItem {
    Certificate(Box<CertificateDocument>),
    Error(RunError),
}

#[derive(Debug, Clone, Serialize)]
pub struct PencilDocument {
    pub schema_version: &'static str,
    pub config: ConfigEcho,
    pub curve: CurveSummary,
    pub grid: Vec<PencilRecord>,
    pub all_surjective: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PencilRecord {
    pub a: u64,
    pub b: u64,
    pub delta: u64,
    pub e: u64,
    pub left_degree: u64,
    pub left_dim: usize,
    pub right_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub surjective: bool,
    pub hypothesis_met: bool,
}

impl PencilRecord {
    pub fn new(r: &PencilReport, delta: u64) -> Self {
        Self {
            a: r.a,
            b: r.b,
            delta,
            e: r.e,
            left_degree: r.left_degree,
            left_dim: r.left_dim,
            right_dim: r.right_dim,
            target_dim: r.target_dim,
            rank: r.rank,
            surjective: r.surjective,
            hypothesis_met: r.hypothesis_met,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct QuadricDocument {
    pub schema_version: &'static str,
    pub config: ConfigEcho,
    pub curve: CurveSummary,
    pub embedding: EmbeddingSummary,
    pub quadric: QuadricRecord,
}
