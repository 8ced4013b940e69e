use crate::curve::{CurveParams, Monomial, RrBasis};
use crate::error::{Error, Result};
use crate::linalg::GfMatrix;

use super::{EmbeddingSpec, Regime};

/// Matrix of `L(left) (x) L(right) -> L(target)`.
///
/// Column `a * right.dim() + b` holds the coordinates of the product of the
/// a-th left and b-th right basis monomials; rows follow `target`.
/// Panics if a product falls outside `target`.
pub fn multiplication_matrix(
    curve: &CurveParams,
    left: &RrBasis,
    right: &RrBasis,
    target: &RrBasis,
) -> GfMatrix {
    let mut columns = Vec::with_capacity(left.dim() * right.dim());
    for &a in left.monomials() {
        for &b in right.monomials() {
            columns.push(product_column(curve, target, &curve.monomial_product(a, b)));
        }
    }
    GfMatrix::from_sparse_columns(curve.field(), target.dim(), columns)
        .expect("product coordinates lie in the target basis")
}

fn product_column(curve: &CurveParams, target: &RrBasis, terms: &[(Monomial, u32)]) -> Vec<(usize, u32)> {
    terms
        .iter()
        .map(|&(mono, v)| {
            let pos = target
                .position_of_order(curve.order(mono))
                .unwrap_or_else(|| panic!("{mono} lies outside L({}Q)", target.s()));
            (pos, v)
        })
        .collect()
}

/// `mu_s : L(D) (x) L(sD) -> L((s+1)D)`.
pub fn mu_matrix(emb: &EmbeddingSpec, s: u64) -> GfMatrix {
    let curve = emb.curve();
    let l = emb.l_degree();
    multiplication_matrix(
        curve,
        &curve.rr_basis(l),
        &curve.rr_basis(s * l),
        &curve.rr_basis((s + 1) * l),
    )
}

/// Restriction of degree-`d` forms in the embedding coordinates to the curve.
///
/// Columns are the multisets of size `d` of coordinate indices (nondecreasing
/// index tuples in lexicographic order), rows the basis of `L(dD)`.
pub fn veronese_matrix(emb: &EmbeddingSpec, d: u32) -> Result<GfMatrix> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("Veronese degree must be >= 2, got {d}")));
    }
    let curve = emb.curve();
    let coords = emb.coordinate_basis();
    let target = curve.rr_basis(d as u64 * emb.l_degree());
    let mut columns = Vec::new();
    for tuple in multisets(coords.dim(), d as usize) {
        let (i, j) = tuple.iter().fold((0u32, 0u32), |(i, j), &pos| {
            let mono = coords.get(pos);
            (i + mono.i, j + mono.j)
        });
        let product = curve.reduce_encoded([((i, j), 1)]);
        let terms: Vec<(Monomial, u32)> = product.terms().collect();
        columns.push(product_column(curve, &target, &terms));
    }
    GfMatrix::from_sparse_columns(curve.field(), target.dim(), columns)
}

/// Nondecreasing tuples of length `d` over `0..n`, lexicographic.
fn multisets(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut cur = vec![0usize; d];
    loop {
        out.push(cur.clone());
        // rightmost position that can still grow
        let Some(pos) = (0..d).rev().find(|&p| cur[p] + 1 < n) else {
            return out;
        };
        let v = cur[pos] + 1;
        for slot in &mut cur[pos..] {
            *slot = v;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PencilReport {
    pub a: u64,
    pub b: u64,
    pub e: u64,
    /// `aq + bm`
    pub left_degree: u64,
    pub left_dim: usize,
    pub right_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub surjective: bool,
    /// `a + b > 0` and `e >= aq + bm + (m-1)(q-1) - 1`.
    pub hypothesis_met: bool,
}

/// `aq + bm + (m-1)(q-1) - 1`, the smallest `e` covered by the pencil-trick bound.
pub fn pencil_bound(curve: &CurveParams, a: u64, b: u64) -> i64 {
    let (q, m) = (curve.q() as i64, curve.m() as i64);
    a as i64 * q + b as i64 * m + (m - 1) * (q - 1) - 1
}

/// `L((aq+bm)Q) (x) L(eQ) -> L((e+aq+bm)Q)`, computed whether or not the
/// hypotheses hold.
pub fn pencil_map_report(curve: &CurveParams, a: u64, b: u64, e: u64) -> PencilReport {
    let left_degree = a * curve.q() as u64 + b * curve.m() as u64;
    let left = curve.rr_basis(left_degree);
    let right = curve.rr_basis(e);
    let target = curve.rr_basis(e + left_degree);
    let rank = multiplication_matrix(curve, &left, &right, &target).rank();
    PencilReport {
        a,
        b,
        e,
        left_degree,
        left_dim: left.dim(),
        right_dim: right.dim(),
        target_dim: target.dim(),
        rank,
        surjective: rank == target.dim(),
        hypothesis_met: a + b > 0 && e as i64 >= pencil_bound(curve, a, b),
    }
}

/// Checks the pencil-trick surjectivity claim; refuses inputs outside its hypotheses.
pub fn verify_pencil_trick(curve: &CurveParams, a: u64, b: u64, e: u64) -> Result<PencilReport> {
    if a + b == 0 {
        return Err(Error::HypothesisNotMet("a + b must be positive".into()));
    }
    let bound = pencil_bound(curve, a, b);
    if (e as i64) < bound {
        return Err(Error::HypothesisNotMet(format!(
            "e = {e} is below aq + bm + (m-1)(q-1) - 1 = {bound}"
        )));
    }
    Ok(pencil_map_report(curve, a, b, e))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadricReport {
    pub c: u64,
    /// `dim L(2qQ)`
    pub h0_x_2: usize,
    /// `3c + 3`
    pub expected_h0: u64,
    /// kernel of the degree-2 Veronese restriction: quadrics through the curve
    pub kernel_dim: usize,
    /// `C(c+3, 2) - 3c - 3`
    pub formula_value: u64,
    pub matches: bool,
}

/// Counts quadrics containing a CASE1 curve with `m >= 3` and compares with
/// `C(c+3, 2) - 3c - 3`.
pub fn quadric_report(emb: &EmbeddingSpec) -> Result<QuadricReport> {
    if emb.regime() != Regime::Case1 {
        return Err(Error::FormulaOutOfScope("quadric count applies to CASE1 only".into()));
    }
    if emb.curve().m() < 3 {
        return Err(Error::FormulaOutOfScope(format!(
            "quadric count needs m >= 3, got m = {}",
            emb.curve().m()
        )));
    }
    let c = emb.c();
    let h0_x_2 = emb.curve().rr_dimension(2 * emb.l_degree());
    let kernel_dim = veronese_matrix(emb, 2)?.kernel_dim();
    let formula_value = (c + 3) * (c + 2) / 2 - 3 * c - 3;
    Ok(QuadricReport {
        c,
        h0_x_2,
        expected_h0: 3 * c + 3,
        kernel_dim,
        formula_value,
        matches: kernel_dim as u64 == formula_value && h0_x_2 as u64 == 3 * c + 3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn curve(p: u64, k: u32, f: &[u64]) -> CurveParams {
        CurveParams::from_encodings(&FieldSpec::new(p, k).unwrap(), f).unwrap()
    }

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn multisets_count_and_order() {
        let ms = multisets(3, 2);
        assert_eq!(
            ms,
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![0, 2],
                vec![1, 1],
                vec![1, 2],
                vec![2, 2]
            ]
        );
        for n in 1..6 {
            for d in 1..5 {
                assert_eq!(multisets(n, d).len() as u64, binom((n + d - 1) as u64, d as u64));
            }
        }
    }

    #[test]
    fn mu_matrix_columns() {
        let c = curve(2, 2, &[0, 0, 0, 1]);
        let e = EmbeddingSpec::new(&c, Regime::Case1).unwrap();
        let mat = mu_matrix(&e, 1);
        let target = c.rr_basis(8);
        // (1 (x) 1) is the unit vector at the constant monomial
        assert_eq!(mat.column(0), &[(0, 1)]);
        // y^3 has order 9 > 4, so y (x) y^3 first appears as a column of mu_3;
        // y^4 = x^3 + y gives two entries
        let left = c.rr_basis(4);
        let right = c.rr_basis(12);
        let big = c.rr_basis(16);
        let m3 = mu_matrix(&e, 3);
        let a = left.position(&c, Monomial::new(0, 1)).unwrap();
        let b = right.position(&c, Monomial::new(0, 3)).unwrap();
        let col = m3.column(a * right.dim() + b);
        let rows: Vec<Monomial> = col.iter().map(|&(r, _)| big.get(r as usize)).collect();
        assert_eq!(rows, vec![Monomial::new(0, 1), Monomial::new(3, 0)]);
        assert_eq!(mat.rows(), target.dim());

        let c7 = curve(7, 1, &[0, 0, 0, 1]);
        let e7 = EmbeddingSpec::new(&c7, Regime::Case1).unwrap();
        let m7 = mu_matrix(&e7, 1);
        let l = c7.rr_basis(7);
        let a = l.position(&c7, Monomial::new(1, 0)).unwrap();
        let b = l.position(&c7, Monomial::new(0, 2)).unwrap();
        let col = m7.column(a * l.dim() + b);
        let t = c7.rr_basis(14);
        assert_eq!(col, &[(t.position(&c7, Monomial::new(1, 2)).unwrap() as u32, 1)]);
    }

    #[test]
    fn veronese_examples() {
        let c7 = curve(7, 1, &[0, 0, 0, 1]);
        let e = EmbeddingSpec::new(&c7, Regime::Case1).unwrap();
        let v = veronese_matrix(&e, 2).unwrap();
        assert_eq!(v.cols(), 10);
        assert_eq!(v.rows(), 9);
        assert_eq!(v.column(0), &[(0, 1)]);
        assert!(v.is_surjective_onto_rows());
        assert_eq!(veronese_matrix(&e, 3).unwrap().cols(), 20);
        assert!(veronese_matrix(&e, 1).is_err());

        let c4 = curve(2, 2, &[0, 0, 0, 1]);
        let e4 = EmbeddingSpec::new(&c4, Regime::Case1).unwrap();
        let v4 = veronese_matrix(&e4, 2).unwrap();
        assert_eq!((v4.rows(), v4.cols(), v4.rank()), (6, 6, 6));
    }

    #[test]
    fn pencil_examples() {
        let c = curve(2, 2, &[0, 0, 0, 1]);
        assert!(verify_pencil_trick(&c, 1, 0, 9).unwrap().surjective);
        assert!(verify_pencil_trick(&c, 0, 1, 8).unwrap().surjective);
        assert_eq!(
            verify_pencil_trick(&c, 1, 0, 8).unwrap_err().name(),
            "HypothesisNotMet"
        );
        assert_eq!(
            verify_pencil_trick(&c, 0, 0, 50).unwrap_err().name(),
            "HypothesisNotMet"
        );
        let forced = pencil_map_report(&c, 1, 0, 8);
        assert!(!forced.hypothesis_met);

        let c3 = curve(3, 1, &[0, 0, 1]);
        assert!(verify_pencil_trick(&c3, 1, 1, 6).unwrap().surjective);
    }

    #[test]
    fn quadric_examples() {
        let e = EmbeddingSpec::new(&curve(7, 1, &[0, 0, 0, 1]), Regime::Case1).unwrap();
        let qr = quadric_report(&e).unwrap();
        assert_eq!((qr.h0_x_2, qr.formula_value, qr.kernel_dim), (9, 1, 1));
        assert!(qr.matches);

        let e13 = EmbeddingSpec::new(&curve(13, 1, &[0, 0, 0, 1]), Regime::Case1).unwrap();
        let qr = quadric_report(&e13).unwrap();
        assert_eq!((qr.c, qr.formula_value), (4, 6));
        assert!(qr.matches);

        let e134 = EmbeddingSpec::new(&curve(13, 1, &[0, 0, 0, 0, 1]), Regime::Case1).unwrap();
        let qr = quadric_report(&e134).unwrap();
        assert_eq!((qr.h0_x_2, qr.formula_value), (12, 3));
        assert!(qr.matches);

        let e2 = EmbeddingSpec::new(&curve(7, 1, &[0, 0, 1]), Regime::Case1).unwrap();
        assert_eq!(quadric_report(&e2).unwrap_err().name(), "FormulaOutOfScope");
        let ec2 = EmbeddingSpec::new(&curve(2, 2, &[0, 0, 0, 1]), Regime::Case2 { t: 2 }).unwrap();
        assert_eq!(quadric_report(&ec2).unwrap_err().name(), "FormulaOutOfScope");
    }
}
