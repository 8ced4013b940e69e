use thiserror::Error;

/// Errors raised by the field, ring, linear-algebra and certification layers.
///
/// The variant name is the stable identifier surfaced by the CLI; see [`Error::name`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("NotPrime: {0} is not prime")]
    NotPrime(u64),
    #[error("FieldTooLarge: {p}^{k} exceeds the field size cap {cap}")]
    FieldTooLarge { p: u64, k: u32, cap: u64 },
    #[error("InvalidExtensionDegree: extension degree must be at least 1")]
    InvalidExtensionDegree,
    #[error("NotIrreducible: modulus {0:?} is not a monic irreducible polynomial of the requested degree")]
    NotIrreducible(Vec<u32>),
    #[error("InvalidElement: encoding {value} is outside GF({q})")]
    InvalidElement { value: u64, q: u32 },
    #[error("FieldMismatch: operands belong to different fields")]
    FieldMismatch,
    #[error("DivisionByZero: zero has no inverse")]
    DivisionByZero,
    #[error("DegreeDivisibleByP: deg f = {m} is divisible by p = {p}")]
    DegreeDivisibleByP { m: u32, p: u32 },
    #[error("NotDegreeM: f must have degree at least 1 with a nonzero leading coefficient")]
    NotDegreeM,
    #[error("CurveMismatch: ring elements live on different curves")]
    CurveMismatch,
    #[error("RegimeMismatch: {0}")]
    RegimeMismatch(String),
    #[error("TrivialCurve: m = 1 gives a genus 0 curve, nothing to verify")]
    TrivialCurve,
    #[error("HypothesisNotMet: {0}")]
    HypothesisNotMet(String),
    #[error("NoConstructiveWitness: {0}")]
    NoConstructiveWitness(String),
    #[error("ContradictionCaseReached: {0}")]
    ContradictionCaseReached(String),
    #[error("WitnessUnsound: {0}")]
    WitnessUnsound(String),
    #[error("FormulaOutOfScope: {0}")]
    FormulaOutOfScope(String),
    #[error("DimensionMismatch: {0}")]
    DimensionMismatch(String),
    #[error("InvalidArgument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable short identifier, e.g. `"DegreeDivisibleByP"`.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::FieldTooLarge { .. } => "FieldTooLarge",
            Error::InvalidExtensionDegree => "InvalidExtensionDegree",
            Error::NotIrreducible(_) => "NotIrreducible",
            Error::InvalidElement { .. } => "InvalidElement",
            Error::FieldMismatch => "FieldMismatch",
            Error::DivisionByZero => "DivisionByZero",
            Error::DegreeDivisibleByP { .. } => "DegreeDivisibleByP",
            Error::NotDegreeM => "NotDegreeM",
            Error::CurveMismatch => "CurveMismatch",
            Error::RegimeMismatch(_) => "RegimeMismatch",
            Error::TrivialCurve => "TrivialCurve",
            Error::HypothesisNotMet(_) => "HypothesisNotMet",
            Error::NoConstructiveWitness(_) => "NoConstructiveWitness",
            Error::ContradictionCaseReached(_) => "ContradictionCaseReached",
            Error::WitnessUnsound(_) => "WitnessUnsound",
            Error::FormulaOutOfScope(_) => "FormulaOutOfScope",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
