use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use asnorm::Regime;
use serde::Serialize;

/// Largest `q` a sweep may reach.
pub const SWEEP_Q_CAP: u64 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Single,
    Sweep,
    Pencil,
    Quadrics,
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "single" => Ok(Mode::Single),
            "sweep" => Ok(Mode::Sweep),
            "pencil" => Ok(Mode::Pencil),
            "quadrics" => Ok(Mode::Quadrics),
            other => Err(format!("unknown mode {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RegimeKind {
    #[serde(rename = "CASE1")]
    Case1,
    #[serde(rename = "CASE2")]
    Case2,
}

impl FromStr for RegimeKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_uppercase().as_str() {
            "CASE1" | "1" => Ok(RegimeKind::Case1),
            "CASE2" | "2" => Ok(RegimeKind::Case2),
            other => Err(format!("unknown regime {other:?} (expected CASE1 or CASE2)")),
        }
    }
}

/// How `f` is chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FSpec {
    /// `x^m`
    PurePower,
    /// Base-p encodings of the coefficients, low-to-high.
    Coefficients(Vec<u64>),
    /// Uniform coefficients from SplitMix64 seeded with `--seed`.
    Random,
}

impl FromStr for FSpec {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("random") {
            return Ok(FSpec::Random);
        }
        if s == "x^m" {
            return Ok(FSpec::PurePower);
        }
        s.split(',')
            .map(|part| {
                part.trim()
                    .parse::<u64>()
                    .map_err(|_| format!("bad coefficient {part:?}; expected x^m, random or comma-separated base-p integers"))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(FSpec::Coefficients)
    }
}

impl fmt::Display for FSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FSpec::PurePower => write!(f, "x^m"),
            FSpec::Random => write!(f, "random"),
            FSpec::Coefficients(c) => {
                let parts: Vec<String> = c.iter().map(u64::to_string).collect();
                write!(f, "{}", parts.join(","))
            }
        }
    }
}

/// `--pencil-grid A,B,D1,D2,...`: `a <= A`, `b <= B`, `e = bound + delta` for each delta.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PencilGrid {
    pub a_max: u64,
    pub b_max: u64,
    pub deltas: Vec<u64>,
}

impl Default for PencilGrid {
    fn default() -> Self {
        Self {
            a_max: 3,
            b_max: 3,
            deltas: vec![0, 1, 5],
        }
    }
}

impl FromStr for PencilGrid {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let nums = s
            .split(',')
            .map(|p| p.trim().parse::<u64>().map_err(|_| format!("bad pencil grid entry {p:?}")))
            .collect::<Result<Vec<_>, _>>()?;
        if nums.len() < 3 {
            return Err("pencil grid needs a_max,b_max,delta[,delta...]".into());
        }
        Ok(PencilGrid {
            a_max: nums[0],
            b_max: nums[1],
            deltas: nums[2..].to_vec(),
        })
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub mode: Mode,
    pub p: Option<u64>,
    pub k: u32,
    pub m: Option<u32>,
    /// CASE2 twist in single mode; largest twist tried in sweep mode.
    pub t: Option<u32>,
    pub regime: Option<RegimeKind>,
    pub f: FSpec,
    pub seed: Option<u64>,
    pub s_extra: u64,
    pub max_q: u64,
    pub n_random: u32,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub witnesses: bool,
    pub pencil_grid: PencilGrid,
    /// Adds wall-clock milliseconds to the output, which makes it non-reproducible.
    pub timing: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            mode: Mode::Single,
            p: None,
            k: 1,
            m: None,
            t: None,
            regime: None,
            f: FSpec::PurePower,
            seed: None,
            s_extra: 2,
            max_q: 16,
            n_random: 2,
            format: Format::Json,
            out: None,
            witnesses: false,
            pencil_grid: PencilGrid::default(),
            timing: false,
        }
    }
}

impl RunConfig {
    /// The regime for single-curve modes: explicit, or CASE2 when `--t` is given.
    pub fn resolved_regime(&self) -> Result<Regime, ConfigError> {
        let kind = self.regime.unwrap_or(if self.t.is_some() {
            RegimeKind::Case2
        } else {
            RegimeKind::Case1
        });
        match kind {
            RegimeKind::Case1 => {
                if self.t.is_some() {
                    return Err(ConfigError::new("t", "--t only applies to CASE2"));
                }
                Ok(Regime::Case1)
            }
            RegimeKind::Case2 => {
                let t = self
                    .t
                    .ok_or_else(|| ConfigError::new("t", "CASE2 needs --t"))?;
                Ok(Regime::Case2 { t })
            }
        }
    }
}

/// A configuration problem, reported with the offending field; exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError {
    pub field: String,
    pub message: String,
}

impl ConfigError {
    pub fn new(field: &str, message: impl Into<String>) -> Self {
        Self {
            field: field.to_string(),
            message: message.into(),
        }
    }
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "config error in --{}: {}", self.field, self.message)
    }
}

impl std::error::Error for ConfigError {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_f() {
        assert_eq!("x^m".parse::<FSpec>().unwrap(), FSpec::PurePower);
        assert_eq!("Random".parse::<FSpec>().unwrap(), FSpec::Random);
        assert_eq!(
            "1,0,0,1".parse::<FSpec>().unwrap(),
            FSpec::Coefficients(vec![1, 0, 0, 1])
        );
        assert!("1,a".parse::<FSpec>().is_err());
        assert_eq!(FSpec::Coefficients(vec![3, 0, 1]).to_string(), "3,0,1");
    }

    #[test]
    fn parse_grid() {
        let g: PencilGrid = "2,1,0,4".parse().unwrap();
        assert_eq!(g, PencilGrid { a_max: 2, b_max: 1, deltas: vec![0, 4] });
        assert!("2,1".parse::<PencilGrid>().is_err());
    }

    #[test]
    fn regime_resolution() {
        let mut cfg = RunConfig::default();
        assert_eq!(cfg.resolved_regime().unwrap(), Regime::Case1);
        cfg.t = Some(2);
        assert_eq!(cfg.resolved_regime().unwrap(), Regime::Case2 { t: 2 });
        cfg.regime = Some(RegimeKind::Case1);
        assert_eq!(cfg.resolved_regime().unwrap_err().field, "t");
        cfg.regime = Some(RegimeKind::Case2);
        cfg.t = None;
        assert_eq!(cfg.resolved_regime().unwrap_err().field, "t");
    }
}
