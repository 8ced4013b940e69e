//! The coordinate ring `F[x, y] / (y^q + y - f(x))` of an Artin-Schreier curve,
//! pole orders at the point at infinity, Riemann-Roch bases and gaps.
//!
//! Elements are kept in normal form: every monomial `x^i y^j` has `0 <= j <= q - 1`.
//! In that range the pole order `q*i + m*j` determines the monomial, so
//! Riemann-Roch bases are ordered by pole order with no ties.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

/// The immutable curve context: field, `f`, `m = deg f`, `q` and the genus.
#[derive(Clone)]
pub struct CurveParams(Arc<CurveInner>);

struct CurveInner {
    field: FieldSpec,
    /// Encodings, low-to-high, length m + 1, last entry nonzero.
    f: Vec<u32>,
    m: u32,
    q: u32,
    genus: u64,
}

impl CurveParams {
    /// Builds the curve `y^q + y = f(x)` from the coefficients of `f`, low-to-high.
    ///
    /// Trailing zero coefficients are dropped before the degree is read off.
    pub fn new(field: &FieldSpec, f_coeffs: &[FieldElement]) -> Result<Self> {
        if f_coeffs.iter().any(|c| !c.field().same_field(field)) {
            return Err(Error::FieldMismatch);
        }
        let mut f: Vec<u32> = f_coeffs.iter().map(|c| c.encoding()).collect();
        while f.last() == Some(&0) {
            f.pop();
        }
        if f.len() < 2 {
            return Err(Error::NotDegreeM);
        }
        let m = (f.len() - 1) as u32;
        if m % field.p() == 0 {
            return Err(Error::DegreeDivisibleByP { m, p: field.p() });
        }
        let q = field.q();
        let genus = genus_formula(m, q);
        Ok(CurveParams(Arc::new(CurveInner {
            field: field.clone(),
            f,
            m,
            q,
            genus,
        })))
    }

    /// Builds `y^q + y = f(x)` from base-p encodings of the coefficients of `f`.
    pub fn from_encodings(field: &FieldSpec, f: &[u64]) -> Result<Self> {
        let coeffs = f
            .iter()
            .map(|&v| field.element(v))
            .collect::<Result<Vec<_>>>()?;
        Self::new(field, &coeffs)
    }

    /// `y^q + y = x^m`.
    pub fn monomial(field: &FieldSpec, m: u32) -> Result<Self> {
        let mut f = vec![0u64; m as usize + 1];
        f[m as usize] = 1;
        Self::from_encodings(field, &f)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.0.field
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    pub fn m(&self) -> u32 {
        self.0.m
    }

    pub fn p(&self) -> u32 {
        self.0.field.p()
    }

    pub fn k(&self) -> u32 {
        self.0.field.k()
    }

    pub fn genus(&self) -> u64 {
        self.0.genus
    }

    /// Coefficients of `f` as encodings, low-to-high.
    pub fn f_encodings(&self) -> &[u32] {
        &self.0.f
    }

    pub fn f_coeffs(&self) -> Vec<FieldElement> {
        self.0
            .f
            .iter()
            .map(|&v| FieldElement::raw(self.0.field.clone(), v))
            .collect()
    }

    /// True when `f = x^m` exactly.
    pub fn is_pure_power(&self) -> bool {
        let f = &self.0.f;
        f[f.len() - 1] == 1 && f[..f.len() - 1].iter().all(|&c| c == 0)
    }

    pub fn same_curve(&self, other: &CurveParams) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field.same_field(&other.0.field) && self.0.f == other.0.f)
    }

    /// Pole order of a normal monomial at the point at infinity.
    #[inline]
    pub fn order(&self, mono: Monomial) -> u64 {
        self.0.q as u64 * mono.i as u64 + self.0.m as u64 * mono.j as u64
    }

    /// `dim L(s Q)`, counted without enumerating the basis.
    pub fn rr_dimension(&self, s: u64) -> usize {
        let (q, m) = (self.0.q as u64, self.0.m as u64);
        let j_max = (q - 1).min(s / m);
        (0..=j_max).map(|j| ((s - m * j) / q + 1) as usize).sum()
    }

    pub fn rr_basis(&self, s: u64) -> RrBasis {
        RrBasis::new(self, s)
    }

    /// Gaps of the Weierstrass semigroup at infinity: the `s >= 1` with
    /// `dim L(s Q) = dim L((s-1) Q)`. All of them lie below `2g`.
    pub fn semigroup_gaps(&self) -> Vec<u64> {
        let g = self.0.genus;
        if g == 0 {
            return Vec::new();
        }
        let mut prev = self.rr_dimension(0);
        let mut gaps = Vec::new();
        for s in 1..2 * g {
            let cur = self.rr_dimension(s);
            if cur == prev {
                gaps.push(s);
            }
            prev = cur;
        }
        gaps
    }

    /// `dim L((s-2) Q) = dim L(s Q) - 2`, the numeric criterion for the embedding
    /// given by `L(s Q)` to have nonzero differential at infinity.
    pub fn embedding_h0_drop_check(&self, s: u64) -> Result<bool> {
        if s < 2 {
            return Err(Error::InvalidArgument(format!(
                "h0 drop check needs s >= 2, got {s}"
            )));
        }
        Ok(self.rr_dimension(s - 2) + 2 == self.rr_dimension(s))
    }

    pub fn zero(&self) -> RingElement {
        RingElement {
            curve: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> RingElement {
        self.monomial_element(Monomial::new(0, 0))
    }

    pub fn x(&self) -> RingElement {
        self.monomial_element(Monomial::new(1, 0))
    }

    pub fn y(&self) -> RingElement {
        self.reduce_encoded([((0, 1), 1)])
    }

    /// The ring element `x^i y^j` for a normal monomial.
    pub fn monomial_element(&self, mono: Monomial) -> RingElement {
        assert!(mono.j < self.0.q, "monomial {mono} is not in normal form");
        let mut terms = BTreeMap::new();
        terms.insert(mono, 1);
        RingElement {
            curve: self.clone(),
            terms,
        }
    }

    /// Normal form of `sum c * x^i y^j` with unbounded `j`.
    pub fn reduce<I>(&self, raw: I) -> Result<RingElement>
    where
        I: IntoIterator<Item = ((u32, u32), FieldElement)>,
    {
        let mut encoded = Vec::new();
        for (ij, c) in raw {
            if !c.field().same_field(&self.0.field) {
                return Err(Error::FieldMismatch);
            }
            encoded.push((ij, c.encoding()));
        }
        Ok(self.reduce_encoded(encoded))
    }

    /// Normal form, coefficients given as encodings.
    ///
    /// The term with the largest y-exponent `j >= q` is rewritten with
    /// `y^q = f(x) - y`, producing y-exponents `j - q` and `j - q + 1`, until none remain.
    pub fn reduce_encoded<I>(&self, raw: I) -> RingElement
    where
        I: IntoIterator<Item = ((u32, u32), u32)>,
    {
        let fs = &self.0.field;
        let q = self.0.q;
        // keyed (j, i) so the largest y-exponent is last
        let mut work: BTreeMap<(u32, u32), u32> = BTreeMap::new();
        let push = |work: &mut BTreeMap<(u32, u32), u32>, key: (u32, u32), c: u32| {
            if c == 0 {
                return;
            }
            let e = work.entry(key).or_insert(0);
            *e = fs.add(*e, c);
            if *e == 0 {
                work.remove(&key);
            }
        };
        for ((i, j), c) in raw {
            push(&mut work, (j, i), c);
        }
        while let Some((&(j, i), &c)) = work.iter().next_back() {
            if j < q {
                break;
            }
            work.remove(&(j, i));
            let jr = j - q;
            for (l, &fl) in self.0.f.iter().enumerate() {
                if fl != 0 {
                    push(&mut work, (jr, i + l as u32), fs.mul(c, fl));
                }
            }
            push(&mut work, (jr + 1, i), fs.neg(c));
        }
        RingElement {
            curve: self.clone(),
            terms: work
                .into_iter()
                .map(|((j, i), c)| (Monomial::new(i, j), c))
                .collect(),
        }
    }

    /// Product of two normal monomials as `(monomial, encoding)` terms in normal form.
    ///
    /// When `j1 + j2 >= q` this is `x^(i1+i2) y^(e-q) (f(x) - y)` with `e = j1 + j2`,
    /// already normal since `e - q + 1 <= q - 1`.
    pub fn monomial_product(&self, a: Monomial, b: Monomial) -> Vec<(Monomial, u32)> {
        let q = self.0.q;
        let (i, e) = (a.i + b.i, a.j + b.j);
        if e < q {
            return vec![(Monomial::new(i, e), 1)];
        }
        let jr = e - q;
        let mut out: Vec<(Monomial, u32)> = self
            .0
            .f
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(l, &c)| (Monomial::new(i + l as u32, jr), c))
            .collect();
        out.push((Monomial::new(i, jr + 1), self.0.field.neg(1)));
        out
    }
}

impl fmt::Debug for CurveParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "y^{} + y = f(x), f = {:?} over GF({}), g = {}",
            self.0.q, self.0.f, self.0.q, self.0.genus
        )
    }
}

/// `(m - 1)(q - 1) / 2`.
pub fn genus_formula(m: u32, q: u32) -> u64 {
    (m as u64 - 1) * (q as u64 - 1) / 2
}

/// The monomial `x^i y^j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub i: u32,
    pub j: u32,
}

impl Monomial {
    pub const fn new(i: u32, j: u32) -> Self {
        Self { i, j }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{}y^{}", self.i, self.j)
    }
}

/// Pole order at infinity; the zero function gets `NegInfinity`, below every integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PoleOrder {
    NegInfinity,
    Finite(u64),
}

impl PoleOrder {
    pub fn finite(self) -> Option<u64> {
        match self {
            PoleOrder::Finite(v) => Some(v),
            PoleOrder::NegInfinity => None,
        }
    }
}

impl std::ops::Add for PoleOrder {
    type Output = PoleOrder;
    fn add(self, rhs: PoleOrder) -> PoleOrder {
        match (self, rhs) {
            (PoleOrder::Finite(a), PoleOrder::Finite(b)) => PoleOrder::Finite(a + b),
            _ => PoleOrder::NegInfinity,
        }
    }
}

/// A normal-form element of the coordinate ring.
#[derive(Clone)]
pub struct RingElement {
    curve: CurveParams,
    terms: BTreeMap<Monomial, u32>,
}

impl RingElement {
    pub fn curve(&self) -> &CurveParams {
        &self.curve
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Support with encoded coefficients, in `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, u32)> + '_ {
        self.terms.iter().map(|(&m, &c)| (m, c))
    }

    pub fn coefficient(&self, mono: Monomial) -> FieldElement {
        let v = self.terms.get(&mono).copied().unwrap_or(0);
        FieldElement::raw(self.curve.field().clone(), v)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when this element is exactly `1 * mono`.
    pub fn is_monomial(&self, mono: Monomial) -> bool {
        self.terms.len() == 1 && self.terms.get(&mono) == Some(&1)
    }

    pub fn pole_order(&self) -> PoleOrder {
        self.terms
            .keys()
            .map(|&m| self.curve.order(m))
            .max()
            .map_or(PoleOrder::NegInfinity, PoleOrder::Finite)
    }

    fn check(&self, other: &RingElement) -> Result<()> {
        if self.curve.same_curve(&other.curve) {
            Ok(())
        } else {
            Err(Error::CurveMismatch)
        }
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement> {
        self.check(other)?;
        let fs = self.curve.field();
        let mut terms = self.terms.clone();
        for (&m, &c) in &other.terms {
            let e = terms.entry(m).or_insert(0);
            *e = fs.add(*e, c);
            if *e == 0 {
                terms.remove(&m);
            }
        }
        Ok(RingElement {
            curve: self.curve.clone(),
            terms,
        })
    }

    pub fn scale(&self, c: &FieldElement) -> Result<RingElement> {
        if !c.field().same_field(self.curve.field()) {
            return Err(Error::FieldMismatch);
        }
        Ok(self.scale_encoded(c.encoding()))
    }

    pub(crate) fn scale_encoded(&self, c: u32) -> RingElement {
        let fs = self.curve.field();
        RingElement {
            curve: self.curve.clone(),
            terms: self
                .terms
                .iter()
                .filter_map(|(&m, &v)| {
                    let w = fs.mul(v, c);
                    (w != 0).then_some((m, w))
                })
                .collect(),
        }
    }

    pub fn neg(&self) -> RingElement {
        self.scale_encoded(self.curve.field().neg(1))
    }

    pub fn sub(&self, other: &RingElement) -> Result<RingElement> {
        self.add(&other.neg())
    }

    /// Normal form of the product.
    pub fn multiply(&self, other: &RingElement) -> Result<RingElement> {
        self.check(other)?;
        let fs = self.curve.field();
        let mut raw: BTreeMap<(u32, u32), u32> = BTreeMap::new();
        for (&a, &ca) in &self.terms {
            for (&b, &cb) in &other.terms {
                let key = (a.i + b.i, a.j + b.j);
                let e = raw.entry(key).or_insert(0);
                *e = fs.add(*e, fs.mul(ca, cb));
            }
        }
        Ok(self.curve.reduce_encoded(raw))
    }

    pub fn pow(&self, e: u32) -> RingElement {
        let mut acc = self.curve.one();
        for _ in 0..e {
            acc = acc.multiply(self).expect("same curve");
        }
        acc
    }
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        self.curve.same_curve(&other.curve) && self.terms == other.terms
    }
}

impl Eq for RingElement {}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("{c}*{m}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Ordered monomial basis of `L(s Q)`: all normal `x^i y^j` with `q*i + m*j <= s`,
/// sorted by ascending pole order.
#[derive(Clone, Debug)]
pub struct RrBasis {
    s: u64,
    monomials: Vec<Monomial>,
    /// position by pole order; `u32::MAX` at gaps
    by_order: Vec<u32>,
}

impl RrBasis {
    fn new(curve: &CurveParams, s: u64) -> Self {
        let (q, m) = (curve.q() as u64, curve.m() as u64);
        let mut monomials = Vec::with_capacity(curve.rr_dimension(s));
        for j in 0..=(q - 1).min(s / m) {
            for i in 0..=(s - m * j) / q {
                monomials.push(Monomial::new(i as u32, j as u32));
            }
        }
        monomials.sort_by_key(|&mono| curve.order(mono));
        let mut by_order = vec![u32::MAX; s as usize + 1];
        for (pos, &mono) in monomials.iter().enumerate() {
            let slot = &mut by_order[curve.order(mono) as usize];
            assert_eq!(
                *slot,
                u32::MAX,
                "two normal monomials share pole order {}",
                curve.order(mono)
            );
            *slot = pos as u32;
        }
        RrBasis {
            s,
            monomials,
            by_order,
        }
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn get(&self, pos: usize) -> Monomial {
        self.monomials[pos]
    }

    /// Position of the monomial with pole order `ord`, if one is in the basis.
    #[inline]
    pub fn position_of_order(&self, ord: u64) -> Option<usize> {
        match self.by_order.get(ord as usize) {
            Some(&pos) if pos != u32::MAX => Some(pos as usize),
            _ => None,
        }
    }

    pub fn position(&self, curve: &CurveParams, mono: Monomial) -> Option<usize> {
        if mono.j >= curve.q() {
            return None;
        }
        self.position_of_order(curve.order(mono))
            .filter(|&pos| self.monomials[pos] == mono)
    }

    /// Coordinates of `u` in this basis as sparse `(position, encoding)`, or
    /// `None` when `u` is not in `L(s Q)`.
    pub fn coordinates(&self, u: &RingElement) -> Option<Vec<(usize, u32)>> {
        let curve = u.curve();
        let mut out: Vec<(usize, u32)> = u
            .terms()
            .map(|(mono, c)| self.position(curve, mono).map(|pos| (pos, c)))
            .collect::<Option<_>>()?;
        out.sort_unstable();
        Some(out)
    }
}
