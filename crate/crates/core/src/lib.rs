//! Exact verification of projective normality for Artin-Schreier curves
//! `y^q + y = f(x)` over finite fields.
//!
//! The crate is layered bottom-up:
//!
//! - [`field`]: GF(p^k) arithmetic.
//! - [`curve`]: the coordinate ring in normal form, pole orders at infinity,
//!   Riemann-Roch bases and Weierstrass gaps.
//! - [`linalg`]: exact rank, kernel dimension and column-space solves.
//! - [`normality`]: multiplication maps, certificates, witnesses, Veronese
//!   ranks and quadric counts.

pub mod curve;
pub mod error;
pub mod field;
pub mod linalg;
pub mod normality;

pub use curve::{genus_formula, CurveParams, Monomial, PoleOrder, RingElement, RrBasis};
pub use error::{Error, Result};
pub use field::{FieldElement, FieldSpec, FIELD_SIZE_CAP};
pub use linalg::GfMatrix;
pub use normality::{
    certify, certify_with, verify_mu, CertifyOptions, EmbeddingSpec, MuReport,
    NormalityCertificate, Regime, Verdict,
};
