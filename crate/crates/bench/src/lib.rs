//! Fixed embeddings shared by the criterion benchmarks.

use asnorm::{CurveParams, EmbeddingSpec, FieldSpec, Regime};

/// `(label, p, k, m, regime)` for the benchmarked curves, all with `f = x^m`.
pub const FIXTURES: &[(&str, u64, u32, u32, Regime)] = &[
    ("q7_m3_case1", 7, 1, 3, Regime::Case1),
    ("q13_m4_case1", 13, 1, 4, Regime::Case1),
    ("q16_m5_case1", 2, 4, 5, Regime::Case1),
    ("q4_m3_t2_case2", 2, 2, 3, Regime::Case2 { t: 2 }),
    ("q16_m7_t3_case2", 2, 4, 7, Regime::Case2 { t: 3 }),
];

pub fn embedding(p: u64, k: u32, m: u32, regime: Regime) -> EmbeddingSpec {
    let field = FieldSpec::new(p, k).expect("fixture field");
    let curve = CurveParams::monomial(&field, m).expect("fixture curve");
    EmbeddingSpec::new(&curve, regime).expect("fixture embedding")
}
