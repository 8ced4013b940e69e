//! Finite fields GF(p^k) in polynomial-basis representation.
//!
//! An element is stored as its *encoding*: the integer `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`
//! built from its coefficients over GF(p), low degree first. The encoding is
//! canonical, so equality of encodings is equality of field elements.
//!
//! Multiplication goes through discrete log / antilog tables built once per
//! field from a primitive element; addition is digit-wise mod p (XOR for p = 2).
//! The tables are an implementation detail: every operation agrees with plain
//! polynomial arithmetic modulo the field's modulus, which the tests check.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field size `p^k`.
pub const FIELD_SIZE_CAP: u64 = 1 << 20;

/// An immutable finite field GF(p^k) with a fixed monic irreducible modulus.
///
/// Cloning is cheap (shared pointer).
#[derive(Clone)]
pub struct FieldSpec(Arc<FieldInner>);

struct FieldInner {
    p: u32,
    k: u32,
    q: u32,
    /// Monic, low-to-high, length k + 1.
    modulus: Vec<u32>,
    /// `p^i` for i in 0..k.
    place: Vec<u32>,
    /// `exp[i] = g^i` for i in 0..2(q-1), doubled so products of logs need no reduction.
    exp: Vec<u32>,
    /// `log[a]` for nonzero a; `log[0]` is unused.
    log: Vec<u32>,
}

impl FieldSpec {
    /// Builds GF(p^k) using the lexicographically smallest monic irreducible
    /// polynomial of degree `k` as modulus.
    ///
    /// Candidates are ordered by the base-p integer `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`
    /// of their non-leading coefficients, so the choice is reproducible.
    pub fn new(p: u64, k: u32) -> Result<Self> {
        let (p32, _) = check_size(p, k)?;
        let modulus = smallest_irreducible(p32, k);
        Ok(Self::build(p32, k, modulus))
    }

    /// Builds GF(p^k) with an explicit modulus (low-to-high, monic, degree k).
    pub fn with_modulus(p: u64, modulus: Vec<u32>) -> Result<Self> {
        if modulus.len() < 2 {
            return Err(Error::InvalidExtensionDegree);
        }
        let k = (modulus.len() - 1) as u32;
        let (p32, _) = check_size(p, k)?;
        let poly: Vec<u64> = modulus.iter().map(|&c| c as u64).collect();
        if modulus.iter().any(|&c| c >= p32)
            || *modulus.last().unwrap() != 1
            || !is_irreducible(&poly, p32 as u64)
        {
            return Err(Error::NotIrreducible(modulus));
        }
        Ok(Self::build(p32, k, modulus))
    }

    fn build(p: u32, k: u32, modulus: Vec<u32>) -> Self {
        let q = p.pow(k);
        let place: Vec<u32> = (0..k).map(|i| p.pow(i)).collect();
        let mut inner = FieldInner {
            p,
            k,
            q,
            modulus,
            place,
            exp: Vec::new(),
            log: Vec::new(),
        };
        let g = inner.find_primitive();
        let order = (q - 1) as usize;
        let mut exp = vec![0u32; 2 * order];
        let mut log = vec![0u32; q as usize];
        let mut cur = 1u32;
        for i in 0..order {
            exp[i] = cur;
            exp[i + order] = cur;
            log[cur as usize] = i as u32;
            cur = inner.slow_mul(cur, g);
        }
        debug_assert_eq!(cur, 1);
        inner.exp = exp;
        inner.log = log;
        FieldSpec(Arc::new(inner))
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn k(&self) -> u32 {
        self.0.k
    }

    /// Field size `p^k`.
    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Modulus coefficients, low-to-high, monic.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::raw(self.clone(), 0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::raw(self.clone(), 1)
    }

    /// Element with the given base-p encoding.
    pub fn element(&self, encoding: u64) -> Result<FieldElement> {
        if encoding >= self.0.q as u64 {
            return Err(Error::InvalidElement {
                value: encoding,
                q: self.0.q,
            });
        }
        Ok(FieldElement::raw(self.clone(), encoding as u32))
    }

    /// Element from polynomial-basis coefficients (low-to-high, at most k of them).
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.0.k as usize {
            return Err(Error::InvalidArgument(format!(
                "{} coefficients given for a degree {} extension",
                coeffs.len(),
                self.0.k
            )));
        }
        let mut v = 0u64;
        for (i, &c) in coeffs.iter().enumerate() {
            if c >= self.0.p {
                return Err(Error::InvalidElement {
                    value: c as u64,
                    q: self.0.p,
                });
            }
            v += c as u64 * self.0.place[i] as u64;
        }
        self.element(v)
    }

    /// Image of an integer under Z -> GF(p).
    pub fn from_int(&self, n: i64) -> FieldElement {
        let p = self.0.p as i64;
        FieldElement::raw(self.clone(), n.rem_euclid(p) as u32)
    }

    /// The class of `x` in GF(p)[x]/(modulus). For k = 1 this is `-modulus[0]`.
    pub fn generator(&self) -> FieldElement {
        if self.0.k == 1 {
            let c = self.0.modulus[0];
            FieldElement::raw(self.clone(), (self.0.p - c) % self.0.p)
        } else {
            FieldElement::raw(self.clone(), self.0.p)
        }
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.0.q).map(move |v| FieldElement::raw(self.clone(), v))
    }

    pub fn same_field(&self, other: &FieldSpec) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }

    /// Polynomial-basis coefficients of an encoding.
    pub fn coeffs_of(&self, a: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.0.k as usize);
        let mut v = a;
        for _ in 0..self.0.k {
            out.push(v % self.0.p);
            v /= self.0.p;
        }
        out
    }

    // Arithmetic on encodings. Callers guarantee operands are valid encodings
    // of this field; the `FieldElement` wrappers enforce that.

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let f = &*self.0;
        if f.p == 2 {
            a ^ b
        } else if f.k == 1 {
            let s = a + b;
            if s >= f.p {
                s - f.p
            } else {
                s
            }
        } else {
            let (mut a, mut b) = (a, b);
            let mut out = 0;
            for &pl in &f.place {
                let s = (a % f.p + b % f.p) % f.p;
                out += s * pl;
                a /= f.p;
                b /= f.p;
            }
            out
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        let f = &*self.0;
        if f.p == 2 {
            a
        } else if f.k == 1 {
            if a == 0 {
                0
            } else {
                f.p - a
            }
        } else {
            let mut a = a;
            let mut out = 0;
            for &pl in &f.place {
                let d = a % f.p;
                out += ((f.p - d) % f.p) * pl;
                a /= f.p;
            }
            out
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let f = &*self.0;
        f.exp[(f.log[a as usize] + f.log[b as usize]) as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let f = &*self.0;
        let order = f.q - 1;
        Ok(f.exp[((order - f.log[a as usize]) % order) as usize])
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let f = &*self.0;
        let order = (f.q - 1) as u64;
        let l = (f.log[a as usize] as u64 * (e % order)) % order;
        f.exp[l as usize]
    }

    /// `a^(p^e)`.
    pub fn frobenius(&self, a: u32, e: u64) -> u32 {
        let f = &*self.0;
        let steps = e % f.k as u64;
        let mut out = a;
        for _ in 0..steps {
            out = self.pow(out, f.p as u64);
        }
        out
    }

    /// Reference multiplication by schoolbook product and reduction modulo the
    /// modulus, without the log tables.
    pub fn mul_by_polynomial(&self, a: u32, b: u32) -> u32 {
        self.0.slow_mul(a, b)
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({}^{}, modulus {:?})",
            self.0.p, self.0.k, self.0.modulus
        )
    }
}

impl FieldInner {
    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        let k = self.k as usize;
        let digits = |mut v: u32| {
            let mut d = vec![0u64; k];
            for x in d.iter_mut() {
                *x = (v % self.p) as u64;
                v /= self.p;
            }
            d
        };
        let da = digits(a);
        let db = digits(b);
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for deg in (k..prod.len()).rev() {
            let lead = prod[deg];
            if lead == 0 {
                continue;
            }
            prod[deg] = 0;
            for (i, &mc) in self.modulus[..k].iter().enumerate() {
                let idx = deg - k + i;
                prod[idx] = (prod[idx] + (p - lead) * mc as u64) % p;
            }
        }
        prod[..k]
            .iter()
            .zip(&self.place)
            .map(|(&d, &pl)| d as u32 * pl)
            .sum()
    }

    fn slow_pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.slow_mul(acc, base);
            }
            base = self.slow_mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn find_primitive(&self) -> u32 {
        let order = (self.q - 1) as u64;
        if order == 1 {
            return 1;
        }
        let factors = prime_factors(order);
        (2..self.q)
            .chain(std::iter::once(1))
            .find(|&g| factors.iter().all(|&l| self.slow_pow(g, order / l) != 1))
            .expect("the multiplicative group of a finite field is cyclic")
    }
}

/// A value of a [`FieldSpec`].
#[derive(Clone)]
pub struct FieldElement {
    field: FieldSpec,
    value: u32,
}

impl FieldElement {
    pub(crate) fn raw(field: FieldSpec, value: u32) -> Self {
        Self { field, value }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Base-p integer encoding of the coefficient vector.
    pub fn encoding(&self) -> u32 {
        self.value
    }

    /// Coefficients over GF(p) in the polynomial basis, low-to-high, length k.
    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs_of(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn check(&self, other: &FieldElement) -> Result<()> {
        if self.field.same_field(&other.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(Self::raw(
            self.field.clone(),
            self.field.add(self.value, other.value),
        ))
    }

    pub fn checked_sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(Self::raw(
            self.field.clone(),
            self.field.sub(self.value, other.value),
        ))
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(Self::raw(
            self.field.clone(),
            self.field.mul(self.value, other.value),
        ))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(Self::raw(self.field.clone(), self.field.inv(self.value)?))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        Self::raw(self.field.clone(), self.field.pow(self.value, e))
    }

    /// `self^(p^e)`.
    pub fn frobenius_pow(&self, e: u64) -> FieldElement {
        Self::raw(self.field.clone(), self.field.frobenius(self.value, e))
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.field.same_field(&other.field)
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.p().hash(state);
        self.field.modulus().hash(state);
        self.value.hash(state);
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})[{}]", self.field.q(), self.value)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            /// Panics on operands from different fields; use the `checked_*` form to get an error.
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("FieldMismatch")
            }
        }

        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::raw(self.field.clone(), self.field.neg(self.value))
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

fn check_size(p: u64, k: u32) -> Result<(u32, u64)> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k == 0 {
        return Err(Error::InvalidExtensionDegree);
    }
    let too_large = Error::FieldTooLarge {
        p,
        k,
        cap: FIELD_SIZE_CAP,
    };
    match p.checked_pow(k) {
        Some(q) if q <= FIELD_SIZE_CAP => Ok((p as u32, q)),
        _ => Err(too_large),
    }
}

/// Trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn smallest_irreducible(p: u32, k: u32) -> Vec<u32> {
    let total = (p as u64).pow(k);
    for n in 0..total {
        let mut poly = Vec::with_capacity(k as usize + 1);
        let mut v = n;
        for _ in 0..k {
            poly.push(v % p as u64);
            v /= p as u64;
        }
        poly.push(1);
        if is_irreducible(&poly, p as u64) {
            return poly.into_iter().map(|c| c as u32).collect();
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

// Dense polynomials over GF(p), low-to-high, trimmed of trailing zeros.

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod_p(a: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_mod_p(m[dm], p);
    while r.len() > dm {
        let dr = r.len() - 1;
        let factor = r[dr] * lead_inv % p;
        for (i, &mc) in m.iter().enumerate() {
            let idx = dr - dm + i;
            r[idx] = (r[idx] + (p - factor) * mc % p) % p;
        }
        r = trim(r);
    }
    r
}

fn poly_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    poly_rem(&prod, m, p)
}

fn poly_powmod(a: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut base = poly_rem(a, m, p);
    let mut acc = vec![1u64];
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(&acc, &base, m, p);
        }
        base = poly_mulmod(&base, &base, m, p);
        e >>= 1;
    }
    acc
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Rabin's test: f (monic, degree k) is irreducible over GF(p) iff
/// `x^(p^k) = x mod f` and `gcd(x^(p^(k/l)) - x, f) = 1` for every prime `l | k`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let f = trim(f.to_vec());
    if f.len() < 2 {
        return false;
    }
    let k = f.len() - 1;
    if k == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    // frob[i] = x^(p^i) mod f
    let mut frob = vec![poly_rem(&x, &f, p)];
    for i in 1..=k {
        let next = poly_powmod(&frob[i - 1], p, &f, p);
        frob.push(next);
    }
    if trim(frob[k].clone()) != poly_rem(&x, &f, p) {
        return false;
    }
    for l in prime_factors(k as u64) {
        let h = &frob[k / l as usize];
        let mut diff = h.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        let g = poly_gcd(&f, &diff, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn has_root(poly: &[u32], p: u32) -> bool {
        (0..p as u64).any(|x| {
            poly.iter()
                .rev()
                .fold(0u64, |acc, &c| (acc * x + c as u64) % p as u64)
                == 0
        })
    }

    #[test]
    fn prime_field_gf2() {
        let f = FieldSpec::new(2, 1).unwrap();
        assert_eq!(f.q(), 2);
        assert_eq!(f.modulus(), &[0, 1]);
        let one = f.one();
        assert!((&one + &one).is_zero());
    }

    #[test]
    fn gf4_modulus_and_products() {
        let f = FieldSpec::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let g = f.generator();
        assert_eq!(g.coeffs(), vec![0, 1]);
        // g^2 = g + 1
        assert_eq!(&g * &g, &g + &f.one());
        assert_eq!(g.inv().unwrap(), &g + &f.one());
        assert_eq!(g.frobenius_pow(1), &g + &f.one());
        assert_eq!(g.frobenius_pow(2), g);
        assert_eq!(g.frobenius_pow(0), g);
    }

    #[test]
    fn gf9_modulus_is_x2_plus_1() {
        // Exhaustive root check: the monic quadratics over GF(3) in base-3 order
        // are x^2, x^2+1, ...; x^2 has root 0 and x^2+1 has no root.
        assert!(has_root(&[0, 0, 1], 3));
        assert!(!has_root(&[1, 0, 1], 3));
        let f = FieldSpec::new(3, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
        let g = f.generator();
        assert_eq!(&g * &g, f.from_int(2));
    }

    #[test]
    fn gf7_inverse() {
        let f = FieldSpec::new(7, 1).unwrap();
        assert_eq!(f.from_int(3).inv().unwrap(), f.from_int(5));
        assert_eq!(f.one().inv().unwrap(), f.one());
        assert_eq!(f.zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FieldSpec::new(4, 1).unwrap_err().name(), "NotPrime");
        assert_eq!(FieldSpec::new(1, 1).unwrap_err().name(), "NotPrime");
        assert_eq!(FieldSpec::new(2, 21).unwrap_err().name(), "FieldTooLarge");
        assert_eq!(FieldSpec::new(3, 0).unwrap_err().name(), "InvalidExtensionDegree");
        assert!(FieldSpec::new(2, 20).is_ok());
        assert_eq!(
            FieldSpec::with_modulus(2, vec![1, 0, 1]).unwrap_err().name(),
            "NotIrreducible"
        );
    }

    #[test]
    fn mismatched_fields() {
        let a = FieldSpec::new(2, 2).unwrap().one();
        let b = FieldSpec::new(3, 1).unwrap().one();
        assert_eq!(a.checked_add(&b), Err(Error::FieldMismatch));
        assert_eq!(a.checked_mul(&b), Err(Error::FieldMismatch));
    }

    #[test]
    fn chosen_moduli_are_smallest_irreducible() {
        // Brute force: for k <= 3 irreducible <=> no root.
        for &(p, k) in &[(2u32, 2u32), (2, 3), (3, 2), (3, 3), (5, 2), (5, 3), (7, 2)] {
            let f = FieldSpec::new(p as u64, k).unwrap();
            let total = p.pow(k);
            let first = (0..total)
                .map(|mut n| {
                    let mut poly: Vec<u32> = (0..k)
                        .map(|_| {
                            let d = n % p;
                            n /= p;
                            d
                        })
                        .collect();
                    poly.push(1);
                    poly
                })
                .find(|poly| !has_root(poly, p))
                .unwrap();
            assert_eq!(f.modulus(), first.as_slice(), "GF({p}^{k})");
        }
    }

    #[test]
    fn rabin_test_matches_known_degree4_and_5() {
        // x^4 + x + 1 irreducible, x^4 + x^2 + 1 = (x^2+x+1)^2 not.
        assert!(is_irreducible(&[1, 1, 0, 0, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
        assert_eq!(FieldSpec::new(2, 4).unwrap().modulus(), &[1, 1, 0, 0, 1]);
        assert_eq!(FieldSpec::new(2, 5).unwrap().modulus(), &[1, 0, 1, 0, 0, 1]);
    }

    #[test]
    fn table_multiplication_matches_polynomial_multiplication() {
        for &(p, k) in &[(2u64, 3u32), (3, 2), (5, 2), (2, 5), (3, 3), (7, 1)] {
            let f = FieldSpec::new(p, k).unwrap();
            for a in 0..f.q() {
                for b in 0..f.q() {
                    assert_eq!(f.mul(a, b), f.mul_by_polynomial(a, b));
                }
            }
        }
    }

    #[test]
    fn determinism() {
        let a = FieldSpec::new(3, 3).unwrap();
        let b = FieldSpec::new(3, 3).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a, b);
    }

    #[test]
    fn frobenius_fixes_field_and_fermat() {
        for &(p, k) in &[(2u64, 2u32), (2, 4), (3, 2), (5, 1), (7, 2)] {
            let f = FieldSpec::new(p, k).unwrap();
            for a in f.elements() {
                assert_eq!(a.frobenius_pow(k as u64), a);
                assert_eq!(a.pow(f.q() as u64), a);
                if !a.is_zero() {
                    assert_eq!(a.pow(f.q() as u64 - 1), f.one());
                }
            }
        }
    }
}
