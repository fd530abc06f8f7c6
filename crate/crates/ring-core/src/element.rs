//! Ring elements with exact arithmetic.
//!
//! A `RingElement` pairs a descriptor handle with a payload whose shape
//! matches the descriptor. Binary operators panic on descriptor mismatch
//! (the `try_*` variants surface the error instead); everything else is
//! total or returns `Option`/`Result`.

use crate::desc::{Ring, RingDesc};
use crate::fppoly;
use crate::free::{FreePoly, Word};
use crate::{RingError, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use std::ops::{Add, Mul, Neg, Sub};

/// Payload of a ring element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Value {
    /// Residue in a prime field or in Z/m.
    Scalar(u64),
    /// Extension-field element: coefficients little-endian, length = degree.
    Poly(Vec<u64>),
    /// Row-major n*n entries over the inner ring.
    Matrix(Vec<Value>),
    /// One entry per product factor.
    Tuple(Vec<Value>),
    /// Free-ring element: finitely many words with nonzero integer coefficients.
    Free(FreePoly),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    ring: Ring,
    value: Value,
}

impl RingElement {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn value(&self) -> &Value {
        &self.value
    }

    pub(crate) fn from_parts(ring: Ring, value: Value) -> Self {
        debug_assert!(shape_ok(&ring, &value), "payload shape mismatch for {ring}");
        RingElement { ring, value }
    }

    pub fn zero(ring: &Ring) -> Self {
        RingElement::from_parts(ring.clone(), v_zero(ring))
    }

    pub fn one(ring: &Ring) -> Self {
        RingElement::from_parts(ring.clone(), v_one(ring))
    }

    /// Canonical image of an integer (n * 1).
    pub fn from_int(ring: &Ring, n: i64) -> Self {
        RingElement::from_parts(ring.clone(), v_from_int(ring, n))
    }

    pub fn is_zero(&self) -> bool {
        self.value == v_zero(&self.ring)
    }

    pub fn is_one(&self) -> bool {
        self.value == v_one(&self.ring)
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check_ring(rhs)?;
        Ok(RingElement::from_parts(
            self.ring.clone(),
            v_add(&self.ring, &self.value, &rhs.value),
        ))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_ring(rhs)?;
        Ok(RingElement::from_parts(
            self.ring.clone(),
            v_sub(&self.ring, &self.value, &rhs.value),
        ))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_ring(rhs)?;
        Ok(RingElement::from_parts(
            self.ring.clone(),
            v_mul(&self.ring, &self.value, &rhs.value),
        ))
    }

    pub fn neg_elem(&self) -> Self {
        RingElement::from_parts(self.ring.clone(), v_neg(&self.ring, &self.value))
    }

    /// Two-sided inverse, if one exists. For free-ring elements only the
    /// scalars +1/-1 are invertible and everything else reports `None`.
    pub fn try_invert(&self) -> Option<Self> {
        let inv = v_inv(&self.ring, &self.value)?;
        let out = RingElement::from_parts(self.ring.clone(), inv);
        debug_assert!((&out * self).is_one() && (self * &out).is_one());
        Some(out)
    }

    pub fn is_unit(&self) -> bool {
        self.try_invert().is_some()
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = RingElement::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self * other == other * self
    }

    fn check_ring(&self, rhs: &Self) -> Result<()> {
        if self.ring == rhs.ring {
            Ok(())
        } else {
            Err(RingError::Mismatch(self.ring.to_string(), rhs.ring.to_string()))
        }
    }

    // ---- matrix accessors ----

    /// Matrix entry (i, j) as an element of the inner ring.
    pub fn entry(&self, i: usize, j: usize) -> RingElement {
        match (self.ring.as_ref(), &self.value) {
            (RingDesc::Matrix { n, inner }, Value::Matrix(es)) => {
                RingElement::from_parts(inner.clone(), es[i * n + j].clone())
            }
            _ => panic!("entry() on non-matrix element"),
        }
    }

    /// Build a matrix element from row-major entries over the inner ring.
    pub fn matrix_from_entries(ring: &Ring, entries: &[RingElement]) -> Result<Self> {
        match ring.as_ref() {
            RingDesc::Matrix { n, inner } => {
                if entries.len() != n * n {
                    return Err(RingError::NotSupported(format!(
                        "matrix_from_entries: expected {} entries, got {}",
                        n * n,
                        entries.len()
                    )));
                }
                for e in entries {
                    if e.ring() != inner {
                        return Err(RingError::Mismatch(
                            inner.to_string(),
                            e.ring().to_string(),
                        ));
                    }
                }
                Ok(RingElement::from_parts(
                    ring.clone(),
                    Value::Matrix(entries.iter().map(|e| e.value.clone()).collect()),
                ))
            }
            _ => Err(RingError::NotSupported("matrix_from_entries on non-matrix ring".into())),
        }
    }

    /// a * I in a matrix ring.
    pub fn scalar_matrix(ring: &Ring, a: &RingElement) -> Result<Self> {
        match ring.as_ref() {
            RingDesc::Matrix { n, inner } => {
                if a.ring() != inner {
                    return Err(RingError::Mismatch(inner.to_string(), a.ring().to_string()));
                }
                let mut es = vec![v_zero(inner); n * n];
                for i in 0..*n {
                    es[i * n + i] = a.value.clone();
                }
                Ok(RingElement::from_parts(ring.clone(), Value::Matrix(es)))
            }
            _ => Err(RingError::NotSupported("scalar_matrix on non-matrix ring".into())),
        }
    }

    /// Matrix unit E_ij (1 in position (i, j), zero elsewhere).
    pub fn matrix_unit(ring: &Ring, i: usize, j: usize) -> Result<Self> {
        match ring.as_ref() {
            RingDesc::Matrix { n, inner } => {
                let mut es = vec![v_zero(inner); n * n];
                es[i * n + j] = v_one(inner);
                Ok(RingElement::from_parts(ring.clone(), Value::Matrix(es)))
            }
            _ => Err(RingError::NotSupported("matrix_unit on non-matrix ring".into())),
        }
    }

    /// Component of a product-ring element.
    pub fn component(&self, i: usize) -> RingElement {
        match (self.ring.as_ref(), &self.value) {
            (RingDesc::Product(fs), Value::Tuple(vs)) => {
                RingElement::from_parts(fs[i].clone(), vs[i].clone())
            }
            _ => panic!("component() on non-product element"),
        }
    }

    /// Build a product-ring element from components.
    pub fn tuple_from_components(ring: &Ring, comps: &[RingElement]) -> Result<Self> {
        match ring.as_ref() {
            RingDesc::Product(fs) => {
                if comps.len() != fs.len() {
                    return Err(RingError::NotSupported("wrong number of components".into()));
                }
                for (c, f) in comps.iter().zip(fs) {
                    if c.ring() != f {
                        return Err(RingError::Mismatch(f.to_string(), c.ring().to_string()));
                    }
                }
                Ok(RingElement::from_parts(
                    ring.clone(),
                    Value::Tuple(comps.iter().map(|c| c.value.clone()).collect()),
                ))
            }
            _ => Err(RingError::NotSupported("tuple_from_components on non-product ring".into())),
        }
    }

    // ---- free ring ----

    /// The i-th generator of a free ring.
    pub fn free_var(ring: &Ring, i: usize) -> Result<Self> {
        match ring.as_ref() {
            RingDesc::Free { vars } => {
                if i >= vars.len() {
                    return Err(RingError::NotSupported(format!("free ring has no variable #{i}")));
                }
                Ok(RingElement::from_parts(
                    ring.clone(),
                    Value::Free(FreePoly::var(i as u32)),
                ))
            }
            _ => Err(RingError::NotSupported("free_var on non-free ring".into())),
        }
    }

    /// Deterministic (length-lexicographic) list of monomials with their
    /// coefficients. Empty for zero.
    pub fn free_words(&self) -> Result<Vec<(Word, BigInt)>> {
        match &self.value {
            Value::Free(p) => Ok(p.terms().map(|(w, c)| (w.clone(), c.clone())).collect()),
            _ => Err(RingError::NotSupported("free_words on non-free element".into())),
        }
    }

    // ---- enumeration ----

    /// Element with the given index in the canonical enumeration.
    pub fn from_index(ring: &Ring, idx: u128) -> Self {
        RingElement::from_parts(ring.clone(), v_from_index(ring, idx))
    }

    /// Index in the canonical enumeration; `None` for infinite rings.
    pub fn index(&self) -> Option<u128> {
        v_index(&self.ring, &self.value)
    }
}

/// Iterator over all elements of a finite ring.
pub fn elements(ring: &Ring) -> impl Iterator<Item = RingElement> + '_ {
    let count = ring
        .element_count()
        .unwrap_or_else(|| panic!("elements(): {ring} is infinite"));
    (0..count).map(move |i| RingElement::from_index(ring, i))
}

impl<'a, 'b> Add<&'b RingElement> for &'a RingElement {
    type Output = RingElement;
    fn add(self, rhs: &'b RingElement) -> RingElement {
        self.try_add(rhs).expect("ring mismatch in +")
    }
}

impl<'a, 'b> Sub<&'b RingElement> for &'a RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &'b RingElement) -> RingElement {
        self.try_sub(rhs).expect("ring mismatch in -")
    }
}

impl<'a, 'b> Mul<&'b RingElement> for &'a RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &'b RingElement) -> RingElement {
        self.try_mul(rhs).expect("ring mismatch in *")
    }
}

impl<'a> Neg for &'a RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        self.neg_elem()
    }
}

// ---------------------------------------------------------------------------
// Value-level arithmetic. Callers guarantee the descriptor matches.
// ---------------------------------------------------------------------------

fn shape_ok(ring: &Ring, v: &Value) -> bool {
    match (ring.as_ref(), v) {
        (RingDesc::PrimeField(p), Value::Scalar(x)) => x < p,
        (RingDesc::Zmod(m), Value::Scalar(x)) => x < m,
        (RingDesc::ExtField { p, k, .. }, Value::Poly(cs)) => {
            cs.len() == *k as usize && cs.iter().all(|c| c < p)
        }
        (RingDesc::Matrix { n, inner }, Value::Matrix(es)) => {
            es.len() == n * n && es.iter().all(|e| shape_ok(inner, e))
        }
        (RingDesc::Product(fs), Value::Tuple(vs)) => {
            vs.len() == fs.len() && fs.iter().zip(vs).all(|(f, v)| shape_ok(f, v))
        }
        (RingDesc::Free { vars }, Value::Free(p)) => p.max_var().map_or(true, |m| (m as usize) < vars.len()),
        _ => false,
    }
}

pub(crate) fn v_zero(ring: &Ring) -> Value {
    match ring.as_ref() {
        RingDesc::PrimeField(_) | RingDesc::Zmod(_) => Value::Scalar(0),
        RingDesc::ExtField { k, .. } => Value::Poly(vec![0; *k as usize]),
        RingDesc::Matrix { n, inner } => Value::Matrix(vec![v_zero(inner); n * n]),
        RingDesc::Product(fs) => Value::Tuple(fs.iter().map(v_zero).collect()),
        RingDesc::Free { .. } => Value::Free(FreePoly::zero()),
    }
}

pub(crate) fn v_one(ring: &Ring) -> Value {
    match ring.as_ref() {
        RingDesc::PrimeField(_) | RingDesc::Zmod(_) => Value::Scalar(1),
        RingDesc::ExtField { k, .. } => {
            let mut cs = vec![0; *k as usize];
            cs[0] = 1;
            Value::Poly(cs)
        }
        RingDesc::Matrix { n, inner } => {
            let mut es = vec![v_zero(inner); n * n];
            for i in 0..*n {
                es[i * n + i] = v_one(inner);
            }
            Value::Matrix(es)
        }
        RingDesc::Product(fs) => Value::Tuple(fs.iter().map(v_one).collect()),
        RingDesc::Free { .. } => Value::Free(FreePoly::constant(BigInt::one())),
    }
}

fn v_from_int(ring: &Ring, n: i64) -> Value {
    match ring.as_ref() {
        RingDesc::PrimeField(p) | RingDesc::Zmod(p) => Value::Scalar(fppoly::pmod(n, *p)),
        RingDesc::ExtField { p, k, .. } => {
            let mut cs = vec![0; *k as usize];
            cs[0] = fppoly::pmod(n, *p);
            Value::Poly(cs)
        }
        RingDesc::Matrix { n: sz, inner } => {
            let mut es = vec![v_zero(inner); sz * sz];
            let d = v_from_int(inner, n);
            for i in 0..*sz {
                es[i * sz + i] = d.clone();
            }
            Value::Matrix(es)
        }
        RingDesc::Product(fs) => Value::Tuple(fs.iter().map(|f| v_from_int(f, n)).collect()),
        RingDesc::Free { .. } => Value::Free(FreePoly::constant(BigInt::from(n))),
    }
}

pub(crate) fn v_add(ring: &Ring, a: &Value, b: &Value) -> Value {
    match (ring.as_ref(), a, b) {
        (RingDesc::PrimeField(p), Value::Scalar(x), Value::Scalar(y))
        | (RingDesc::Zmod(p), Value::Scalar(x), Value::Scalar(y)) => Value::Scalar((x + y) % p),
        (RingDesc::ExtField { p, .. }, Value::Poly(xs), Value::Poly(ys)) => {
            Value::Poly(xs.iter().zip(ys).map(|(x, y)| (x + y) % p).collect())
        }
        (RingDesc::Matrix { inner, .. }, Value::Matrix(xs), Value::Matrix(ys)) => {
            Value::Matrix(xs.iter().zip(ys).map(|(x, y)| v_add(inner, x, y)).collect())
        }
        (RingDesc::Product(fs), Value::Tuple(xs), Value::Tuple(ys)) => Value::Tuple(
            fs.iter()
                .zip(xs.iter().zip(ys))
                .map(|(f, (x, y))| v_add(f, x, y))
                .collect(),
        ),
        (RingDesc::Free { .. }, Value::Free(x), Value::Free(y)) => Value::Free(x.add(y)),
        _ => unreachable!("shape mismatch"),
    }
}

pub(crate) fn v_neg(ring: &Ring, a: &Value) -> Value {
    match (ring.as_ref(), a) {
        (RingDesc::PrimeField(p), Value::Scalar(x)) | (RingDesc::Zmod(p), Value::Scalar(x)) => {
            Value::Scalar((p - x) % p)
        }
        (RingDesc::ExtField { p, .. }, Value::Poly(xs)) => {
            Value::Poly(xs.iter().map(|x| (p - x) % p).collect())
        }
        (RingDesc::Matrix { inner, .. }, Value::Matrix(xs)) => {
            Value::Matrix(xs.iter().map(|x| v_neg(inner, x)).collect())
        }
        (RingDesc::Product(fs), Value::Tuple(xs)) => {
            Value::Tuple(fs.iter().zip(xs).map(|(f, x)| v_neg(f, x)).collect())
        }
        (RingDesc::Free { .. }, Value::Free(x)) => Value::Free(x.neg()),
        _ => unreachable!("shape mismatch"),
    }
}

pub(crate) fn v_sub(ring: &Ring, a: &Value, b: &Value) -> Value {
    v_add(ring, a, &v_neg(ring, b))
}

pub(crate) fn v_mul(ring: &Ring, a: &Value, b: &Value) -> Value {
    match (ring.as_ref(), a, b) {
        (RingDesc::PrimeField(p), Value::Scalar(x), Value::Scalar(y))
        | (RingDesc::Zmod(p), Value::Scalar(x), Value::Scalar(y)) => {
            Value::Scalar(mulmod(*x, *y, *p))
        }
        (RingDesc::ExtField { p, k, modulus }, Value::Poly(xs), Value::Poly(ys)) => {
            let prod = fppoly::poly_mul(xs, ys, *p);
            let mut r = fppoly::poly_rem(&prod, modulus, *p);
            r.resize(*k as usize, 0);
            Value::Poly(r)
        }
        (RingDesc::Matrix { n, inner }, Value::Matrix(xs), Value::Matrix(ys)) => {
            let n = *n;
            let mut out = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    let mut acc = v_zero(inner);
                    for l in 0..n {
                        let t = v_mul(inner, &xs[i * n + l], &ys[l * n + j]);
                        acc = v_add(inner, &acc, &t);
                    }
                    out.push(acc);
                }
            }
            Value::Matrix(out)
        }
        (RingDesc::Product(fs), Value::Tuple(xs), Value::Tuple(ys)) => Value::Tuple(
            fs.iter()
                .zip(xs.iter().zip(ys))
                .map(|(f, (x, y))| v_mul(f, x, y))
                .collect(),
        ),
        (RingDesc::Free { .. }, Value::Free(x), Value::Free(y)) => Value::Free(x.mul(y)),
        _ => unreachable!("shape mismatch"),
    }
}

fn mulmod(x: u64, y: u64, m: u64) -> u64 {
    ((x as u128 * y as u128) % m as u128) as u64
}

fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = egcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

fn scalar_inv(x: u64, m: u64) -> Option<u64> {
    if x == 0 {
        return None;
    }
    let (g, s, _) = egcd(x as i128, m as i128);
    if g != 1 {
        return None;
    }
    Some(s.rem_euclid(m as i128) as u64)
}

pub(crate) fn v_inv(ring: &Ring, a: &Value) -> Option<Value> {
    match (ring.as_ref(), a) {
        (RingDesc::PrimeField(p), Value::Scalar(x)) | (RingDesc::Zmod(p), Value::Scalar(x)) => {
            scalar_inv(*x, *p).map(Value::Scalar)
        }
        (RingDesc::ExtField { p, k, modulus }, Value::Poly(xs)) => {
            // x^(q-2) in the multiplicative group of GF(q)
            if xs.iter().all(|&c| c == 0) {
                return None;
            }
            let q = (*p as u128).pow(*k);
            let mut e = q - 2;
            let mut base = xs.clone();
            let one = {
                let mut v = vec![0; *k as usize];
                v[0] = 1;
                v
            };
            let mut acc = one;
            while e > 0 {
                if e & 1 == 1 {
                    let prod = fppoly::poly_mul(&acc, &base, *p);
                    acc = fppoly::poly_rem(&prod, modulus, *p);
                    acc.resize(*k as usize, 0);
                }
                let sq = fppoly::poly_mul(&base, &base, *p);
                base = fppoly::poly_rem(&sq, modulus, *p);
                base.resize(*k as usize, 0);
                e >>= 1;
            }
            Some(Value::Poly(acc))
        }
        (RingDesc::Matrix { n, inner }, Value::Matrix(_)) => {
            crate::linalg::invert_matrix_value(*n, inner, a)
        }
        (RingDesc::Product(fs), Value::Tuple(xs)) => {
            let mut out = Vec::with_capacity(xs.len());
            for (f, x) in fs.iter().zip(xs) {
                out.push(v_inv(f, x)?);
            }
            Some(Value::Tuple(out))
        }
        (RingDesc::Free { .. }, Value::Free(x)) => {
            // In Z<X> the only units are the scalars +1 and -1.
            let c = x.as_constant()?;
            if c.abs().is_one() {
                Some(Value::Free(FreePoly::constant(c)))
            } else {
                None
            }
        }
        _ => unreachable!("shape mismatch"),
    }
}

// ---------------------------------------------------------------------------
// Canonical enumeration (mixed-radix indexing).
// ---------------------------------------------------------------------------

fn v_from_index(ring: &Ring, idx: u128) -> Value {
    match ring.as_ref() {
        RingDesc::PrimeField(p) | RingDesc::Zmod(p) => {
            debug_assert!(idx < *p as u128);
            Value::Scalar(idx as u64)
        }
        RingDesc::ExtField { p, k, .. } => {
            let mut cs = Vec::with_capacity(*k as usize);
            let mut i = idx;
            for _ in 0..*k {
                cs.push((i % *p as u128) as u64);
                i /= *p as u128;
            }
            Value::Poly(cs)
        }
        RingDesc::Matrix { n, inner } => {
            let c = inner.element_count().expect("finite inner ring");
            let mut i = idx;
            let mut es = Vec::with_capacity(n * n);
            for _ in 0..n * n {
                es.push(v_from_index(inner, i % c));
                i /= c;
            }
            Value::Matrix(es)
        }
        RingDesc::Product(fs) => {
            let mut i = idx;
            let mut vs = Vec::with_capacity(fs.len());
            for f in fs {
                let c = f.element_count().expect("finite factor");
                vs.push(v_from_index(f, i % c));
                i /= c;
            }
            Value::Tuple(vs)
        }
        RingDesc::Free { .. } => panic!("cannot enumerate a free ring"),
    }
}

fn v_index(ring: &Ring, v: &Value) -> Option<u128> {
    match (ring.as_ref(), v) {
        (RingDesc::PrimeField(_), Value::Scalar(x)) | (RingDesc::Zmod(_), Value::Scalar(x)) => {
            Some(*x as u128)
        }
        (RingDesc::ExtField { p, .. }, Value::Poly(cs)) => {
            let mut acc: u128 = 0;
            for &c in cs.iter().rev() {
                acc = acc * *p as u128 + c as u128;
            }
            Some(acc)
        }
        (RingDesc::Matrix { inner, .. }, Value::Matrix(es)) => {
            let c = inner.element_count()?;
            let mut acc: u128 = 0;
            for e in es.iter().rev() {
                acc = acc * c + v_index(inner, e)?;
            }
            Some(acc)
        }
        (RingDesc::Product(fs), Value::Tuple(vs)) => {
            let mut acc: u128 = 0;
            for (f, x) in fs.iter().zip(vs).rev() {
                acc = acc * f.element_count()? + v_index(f, x)?;
            }
            Some(acc)
        }
        (RingDesc::Free { .. }, _) => None,
        _ => unreachable!("shape mismatch"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::desc::{gf, mat, parse_ring, zmod};

    #[test]
    fn char_two_addition() {
        let f2 = gf(2);
        let one = RingElement::one(&f2);
        assert!((&one + &one).is_zero());
    }

    #[test]
    fn gf4_has_cube_roots_of_unity() {
        let f4 = gf(4);
        // x (index 2) generates the multiplicative group of order 3
        let x = RingElement::from_index(&f4, 2);
        assert!(x.pow(3).is_one());
        assert!(!x.pow(1).is_one());
        assert!(!x.pow(2).is_one());
    }

    #[test]
    fn zmod_inverse() {
        let z8 = zmod(8);
        let three = RingElement::from_int(&z8, 3);
        let inv = three.try_invert().unwrap();
        assert_eq!(inv, RingElement::from_int(&z8, 3));
        assert!(RingElement::from_int(&z8, 2).try_invert().is_none());
    }

    #[test]
    fn f3_inverse_of_two_is_two() {
        let f3 = gf(3);
        let two = RingElement::from_int(&f3, 2);
        assert_eq!(two.try_invert().unwrap(), two);
    }

    #[test]
    fn index_round_trip() {
        for ring in [
            parse_ring("gf(4)").unwrap(),
            parse_ring("mat(2,gf(2))").unwrap(),
            parse_ring("zmod(8)").unwrap(),
            parse_ring("prod(gf(2),gf(3))").unwrap(),
        ] {
            let n = ring.element_count().unwrap();
            for i in 0..n {
                let e = RingElement::from_index(&ring, i);
                assert_eq!(e.index(), Some(i));
            }
        }
    }

    #[test]
    fn free_cancellation() {
        let fr = parse_ring("free(a,b)").unwrap();
        let a = RingElement::free_var(&fr, 0).unwrap();
        let b = RingElement::free_var(&fr, 1).unwrap();
        let ab = &a * &b;
        assert!((&ab - &ab).is_zero());
        assert_ne!(&a * &b, &b * &a);
    }

    #[test]
    fn free_units() {
        let fr = parse_ring("free(a)").unwrap();
        let one = RingElement::one(&fr);
        let minus_one = one.neg_elem();
        assert!(one.try_invert().is_some());
        assert_eq!(minus_one.try_invert().unwrap(), minus_one);
        let a = RingElement::free_var(&fr, 0).unwrap();
        assert!(a.try_invert().is_none());
        assert!(RingElement::from_int(&fr, 2).try_invert().is_none());
    }

    #[test]
    fn mismatch_is_reported() {
        let x = RingElement::one(&gf(2));
        let y = RingElement::one(&gf(3));
        assert!(x.try_add(&y).is_err());
    }

    #[test]
    fn matrix_ring_mul() {
        let m2 = mat(2, gf(2));
        // N_2 = [[0,1],[1,1]] satisfies N^2 = N + I
        let f2 = gf(2);
        let e = |b: u64| RingElement::from_int(&f2, b as i64);
        let n2 = RingElement::matrix_from_entries(&m2, &[e(0), e(1), e(1), e(1)]).unwrap();
        let sq = &n2 * &n2;
        let id = RingElement::one(&m2);
        assert_eq!(sq, &n2 + &id);
        // N_2^3 = I and the inverse is N_2^2
        assert!(n2.pow(3).is_one());
        assert_eq!(n2.try_invert().unwrap(), n2.pow(2));
    }
}
