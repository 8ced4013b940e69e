use asnorm::{CurveParams, FieldSpec, GfMatrix, Monomial, PoleOrder, RingElement};
use proptest::prelude::*;

const FIELDS: &[(u64, u32)] = &[(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (5, 2), (7, 1), (2, 5)];

fn field_strategy() -> impl Strategy<Value = FieldSpec> {
    prop::sample::select(FIELDS.to_vec()).prop_map(|(p, k)| FieldSpec::new(p, k).unwrap())
}

/// Field plus three random encodings.
fn triple() -> impl Strategy<Value = (FieldSpec, u32, u32, u32)> {
    field_strategy().prop_flat_map(|f| {
        let q = f.q();
        (Just(f), 0..q, 0..q, 0..q)
    })
}

proptest! {
    #[test]
    fn field_axioms((f, a, b, c) in triple()) {
        let (a, b, c) = (
            f.element(a as u64).unwrap(),
            f.element(b as u64).unwrap(),
            f.element(c as u64).unwrap(),
        );
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &f.zero(), a.clone());
        prop_assert_eq!(&a * &f.one(), a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), f.one());
        }
    }

    #[test]
    fn table_and_polynomial_products_agree((f, a, b, _c) in triple()) {
        prop_assert_eq!(f.mul(a, b), f.mul_by_polynomial(a, b));
    }
}

const CURVES: &[(u64, u32, &[u64])] = &[
    (2, 2, &[0, 0, 0, 1]),
    (2, 2, &[1, 2, 3, 1, 0, 3]),
    (3, 1, &[2, 1, 1]),
    (3, 2, &[0, 5, 0, 0, 7]),
    (5, 1, &[1, 0, 0, 4]),
    (7, 1, &[3, 0, 2, 1]),
];

fn curve_strategy() -> impl Strategy<Value = CurveParams> {
    prop::sample::select((0..CURVES.len()).collect::<Vec<_>>()).prop_map(|idx| {
        let (p, k, f) = CURVES[idx];
        CurveParams::from_encodings(&FieldSpec::new(p, k).unwrap(), f).unwrap()
    })
}

/// Random element of `L(3q Q)` as a combination of its basis monomials.
fn element_of(curve: &CurveParams, picks: &[(usize, u32)]) -> RingElement {
    let basis = curve.rr_basis(3 * curve.q() as u64);
    let mut acc = curve.zero();
    for &(pos, v) in picks {
        let mono = basis.get(pos % basis.dim());
        let c = curve.field().element((v % curve.q()) as u64).unwrap();
        acc = acc.add(&curve.monomial_element(mono).scale(&c).unwrap()).unwrap();
    }
    acc
}

fn ring_triple() -> impl Strategy<Value = (CurveParams, RingElement, RingElement, RingElement)> {
    curve_strategy().prop_flat_map(|c| {
        let picks = || prop::collection::vec((0usize..1000, 0u32..1000), 0..6);
        (Just(c), picks(), picks(), picks()).prop_map(|(c, a, b, d)| {
            let (x, y, z) = (element_of(&c, &a), element_of(&c, &b), element_of(&c, &d));
            (c, x, y, z)
        })
    })
}

proptest! {
    #[test]
    fn ring_axioms((_c, u, v, w) in ring_triple()) {
        let uv_w = u.multiply(&v).unwrap().multiply(&w).unwrap();
        let u_vw = u.multiply(&v.multiply(&w).unwrap()).unwrap();
        prop_assert_eq!(uv_w, u_vw);
        let lhs = u.multiply(&v.add(&w).unwrap()).unwrap();
        let rhs = u.multiply(&v).unwrap().add(&u.multiply(&w).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(u.multiply(&v).unwrap(), v.multiply(&u).unwrap());
    }

    #[test]
    fn valuation_additivity((_c, u, v, _w) in ring_triple()) {
        let prod = u.multiply(&v).unwrap();
        prop_assert_eq!(prod.pole_order(), u.pole_order() + v.pole_order());
        if u.is_zero() || v.is_zero() {
            prop_assert_eq!(prod.pole_order(), PoleOrder::NegInfinity);
        }
    }

    #[test]
    fn normal_form_bounds((c, u, v, _w) in ring_triple()) {
        let prod = u.multiply(&v).unwrap();
        prop_assert!(prod.terms().all(|(m, coeff)| m.j < c.q() && coeff != 0));
    }
}

proptest! {
    #[test]
    fn dimension_steps_are_gaps_or_nongaps(idx in 0..CURVES.len()) {
        let (p, k, f) = CURVES[idx];
        let c = CurveParams::from_encodings(&FieldSpec::new(p, k).unwrap(), f).unwrap();
        let gaps = c.semigroup_gaps();
        prop_assert_eq!(gaps.len() as u64, c.genus());
        for s in 1..(4 * c.genus() + 10) {
            let step = c.rr_dimension(s) - c.rr_dimension(s - 1);
            prop_assert!(step <= 1);
            prop_assert_eq!(step == 0, gaps.contains(&s));
        }
    }
}

/// Textbook dense row reduction on a copy, used as an independent rank oracle.
fn dense_rank(f: &FieldSpec, rows: usize, cols: usize, data: &[u32]) -> usize {
    let mut a: Vec<Vec<u32>> = (0..rows).map(|r| data[r * cols..(r + 1) * cols].to_vec()).collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = f.inv(a[rank][col]).unwrap();
        for x in a[rank].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for r in 0..rows {
            if r != rank && a[r][col] != 0 {
                let factor = a[r][col];
                for c in 0..cols {
                    let sub = f.mul(factor, a[rank][c]);
                    a[r][c] = f.sub(a[r][c], sub);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn matrix_strategy() -> impl Strategy<Value = (FieldSpec, usize, usize, Vec<u32>)> {
    (field_strategy(), 0usize..40, 0usize..40, any::<bool>()).prop_flat_map(|(f, r, c, sparse)| {
        let q = f.q();
        let entry = if sparse {
            prop_oneof![4 => Just(0u32), 1 => 0..q].boxed()
        } else {
            (0..q).boxed()
        };
        (Just(f), Just(r), Just(c), prop::collection::vec(entry, r * c))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_equals_transpose_rank_and_oracle((f, r, c, data) in matrix_strategy()) {
        let m = GfMatrix::from_encoded(&f, r, c, &data).unwrap();
        let rank = m.rank();
        prop_assert_eq!(rank, m.transpose().rank());
        prop_assert_eq!(rank, dense_rank(&f, r, c, &data));
        prop_assert!(rank <= r.min(c));
        prop_assert_eq!(m.kernel_dim() + rank, c);
        prop_assert_eq!(m.is_surjective_onto_rows(), rank == r);
    }

    #[test]
    fn rank_invariant_under_row_shuffle_and_scaling(
        (f, r, c, data) in matrix_strategy(),
        seed in any::<u64>(),
    ) {
        prop_assume!(r > 0);
        let m = GfMatrix::from_encoded(&f, r, c, &data).unwrap();
        let mut order: Vec<usize> = (0..r).collect();
        let mut s = seed;
        for i in (1..r).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (s >> 33) as usize % (i + 1));
        }
        let scale = 1 + (seed % (f.q() as u64 - 1)) as u32;
        let mut shuffled = Vec::with_capacity(data.len());
        for (new_r, &old_r) in order.iter().enumerate() {
            for col in 0..c {
                let v = data[old_r * c + col];
                shuffled.push(if new_r == 0 { f.mul(v, scale) } else { v });
            }
        }
        let m2 = GfMatrix::from_encoded(&f, r, c, &shuffled).unwrap();
        prop_assert_eq!(m.rank(), m2.rank());
    }

    #[test]
    fn solutions_are_exact(
        (f, r, c, data) in matrix_strategy(),
        xs in prop::collection::vec(0u32..1_000_000, 40),
        ts in prop::collection::vec(0u32..1_000_000, 40),
    ) {
        let m = GfMatrix::from_encoded(&f, r, c, &data).unwrap();
        let q = f.q();
        // a target in the column space always solves
        let x: Vec<u32> = xs[..c].iter().map(|v| v % q).collect();
        let b = m.mul_vec_encoded(&x);
        let sol = m.solve_encoded(&b).expect("target built from the columns");
        prop_assert_eq!(m.mul_vec_encoded(&sol), b);
        // an arbitrary target either solves exactly or lies outside the column space
        let t: Vec<u32> = ts[..r].iter().map(|v| v % q).collect();
        match m.solve_encoded(&t) {
            Some(sol) => prop_assert_eq!(m.mul_vec_encoded(&sol), t),
            None => prop_assert!(m.rank() < r),
        }
    }
}

#[test]
fn monomial_orders_are_injective_on_normal_range() {
    for &(p, k, f) in CURVES {
        let c = CurveParams::from_encodings(&FieldSpec::new(p, k).unwrap(), f).unwrap();
        let mut seen = std::collections::HashSet::new();
        for i in 0..20 {
            for j in 0..c.q() {
                assert!(seen.insert(c.order(Monomial::new(i, j))));
            }
        }
    }
}
