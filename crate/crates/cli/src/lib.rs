//! Certification runs, parameter sweeps and reproducible JSON/CSV output for the
//! `asnorm` command-line tool.

pub mod config;
pub mod document;
pub mod emit;
pub mod rng;
pub mod run;

pub use config::{ConfigError, FSpec, Format, Mode, PencilGrid, RegimeKind, RunConfig};
pub use document::{CertificateDocument, SweepItem};
pub use run::{render, run, Outcome, Output, RunFailure};
