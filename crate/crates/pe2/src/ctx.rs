//! Working context for the projective elementary group of a base ring:
//! the 2x2 matrix ring, the central unit list, generator matrices, and
//! canonical projective class representatives.

use ring_core::canon::central_units;
use ring_core::{mat, Ring, RingElement, RingError};
use std::sync::Arc;

/// Immutable context shared by all word/group computations over one ring.
#[derive(Debug, Clone)]
pub struct Pe2Ctx {
    base: Ring,
    mat2: Ring,
    central: Arc<Vec<RingElement>>,
}

/// A projective class: the canonical representative matrix and its element
/// index, used as a hash key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pe2Class {
    pub rep: RingElement,
    pub key: u128,
}

impl Pe2Ctx {
    pub fn new(base: &Ring) -> ring_core::Result<Self> {
        if !base.is_finite() {
            return Err(RingError::Infinite(base.to_string()));
        }
        let central = central_units(base)?;
        Ok(Pe2Ctx {
            base: base.clone(),
            mat2: mat(2, base.clone()),
            central: Arc::new(central),
        })
    }

    pub fn base(&self) -> &Ring {
        &self.base
    }

    pub fn mat2(&self) -> &Ring {
        &self.mat2
    }

    pub fn central_units(&self) -> &[RingElement] {
        &self.central
    }

    /// Some central unit with square -1, if one exists.
    pub fn sqrt_of_minus_one(&self) -> Option<RingElement> {
        let minus_one = RingElement::one(&self.base).neg_elem();
        self.central
            .iter()
            .find(|l| (*l * *l).eq(&minus_one))
            .cloned()
    }

    fn mat2_of(&self, a: RingElement, b: RingElement, c: RingElement, d: RingElement) -> RingElement {
        RingElement::matrix_from_entries(&self.mat2, &[a, b, c, d]).unwrap()
    }

    /// t_a = ((1,a),(0,1)).
    pub fn t(&self, a: &RingElement) -> RingElement {
        let one = RingElement::one(&self.base);
        let zero = RingElement::zero(&self.base);
        self.mat2_of(one.clone(), a.clone(), zero, one)
    }

    /// m_{r,s} = diag(r,s); both arguments must be two-sided invertible.
    pub fn m(&self, r: &RingElement, s: &RingElement) -> ring_core::Result<RingElement> {
        if !r.is_unit() || !s.is_unit() {
            return Err(RingError::NotSupported(
                "m_{r,s} requires two-sided invertible arguments".into(),
            ));
        }
        let zero = RingElement::zero(&self.base);
        Ok(self.mat2_of(r.clone(), zero.clone(), zero, s.clone()))
    }

    /// j = ((0,1),(1,0)).
    pub fn j(&self) -> RingElement {
        let one = RingElement::one(&self.base);
        let zero = RingElement::zero(&self.base);
        self.mat2_of(zero.clone(), one.clone(), one, zero)
    }

    /// e_a = j t_a = ((0,1),(1,a)).
    pub fn e(&self, a: &RingElement) -> RingElement {
        let one = RingElement::one(&self.base);
        let zero = RingElement::zero(&self.base);
        self.mat2_of(zero, one, RingElement::one(&self.base), a.clone())
    }

    /// Canonical representative of the projective class of g: the central
    /// unit multiple with the smallest element index.
    pub fn canon(&self, g: &RingElement) -> Pe2Class {
        let mut best: Option<(u128, RingElement)> = None;
        for lambda in self.central.iter() {
            let scaled = &RingElement::scalar_matrix(&self.mat2, lambda).unwrap() * g;
            let key = scaled.index().expect("finite ring");
            if best.as_ref().map_or(true, |(bk, _)| key < *bk) {
                best = Some((key, scaled));
            }
        }
        let (key, rep) = best.expect("central units contain 1");
        Pe2Class { rep, key }
    }

    /// Projective equality: equal up to a central unit factor.
    pub fn proj_eq(&self, a: &RingElement, b: &RingElement) -> bool {
        self.canon(a).key == self.canon(b).key
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ring_core::parse_ring;

    #[test]
    fn e_is_j_times_t() {
        let ring = parse_ring("zmod(8)").unwrap();
        let ctx = Pe2Ctx::new(&ring).unwrap();
        for a in ring_core::elements_of(&ring) {
            assert_eq!(ctx.e(&a), &ctx.j() * &ctx.t(&a));
        }
    }

    #[test]
    fn projective_identity_class() {
        let ring = parse_ring("gf(5)").unwrap();
        let ctx = Pe2Ctx::new(&ring).unwrap();
        let two = RingElement::from_int(&ring, 2);
        let m22 = ctx.m(&two, &two).unwrap();
        assert!(ctx.proj_eq(&m22, &RingElement::one(ctx.mat2())));
    }

    #[test]
    fn sqrt_minus_one() {
        let f5 = parse_ring("gf(5)").unwrap();
        let ctx = Pe2Ctx::new(&f5).unwrap();
        let l = ctx.sqrt_of_minus_one().unwrap();
        assert_eq!(l.index(), Some(2)); // 2^2 = 4 = -1, and 2 < 3
        let f3 = parse_ring("gf(3)").unwrap();
        assert!(Pe2Ctx::new(&f3).unwrap().sqrt_of_minus_one().is_none());
        let f2 = parse_ring("gf(2)").unwrap();
        assert!(Pe2Ctx::new(&f2).unwrap().sqrt_of_minus_one().is_some()); // 1^2 = 1 = -1
    }

    #[test]
    fn m_rejects_non_units() {
        let ring = parse_ring("zmod(8)").unwrap();
        let ctx = Pe2Ctx::new(&ring).unwrap();
        let two = RingElement::from_int(&ring, 2);
        let one = RingElement::one(&ring);
        assert!(ctx.m(&two, &one).is_err());
    }
}
