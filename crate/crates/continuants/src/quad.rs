//! The four continuant sequences for an input tuple.
//!
//! Input tuples are 1-based (a(1)..a(k)) to mirror the recurrences; storage is
//! 0-based with `p[i]` holding P_i, so `p` and `q` have length k+1 and the
//! subscript shift lives in exactly one place.

use rand::Rng;
use ring_core::{Ring, RingElement};

/// P, Q and their opposites for one input tuple.
///
/// Conventions: P_0 = 0, Q_0 = 1, P_1 = 1, Q_1 = a(1), then
/// P_k = P_{k-2} + a(k) P_{k-1} and Q_k = Q_{k-2} + a(k) Q_{k-1}; the
/// opposites use right multiplication by a(k) instead.
#[derive(Debug, Clone)]
pub struct ContinuantQuad {
    pub a: Vec<RingElement>,
    pub p: Vec<RingElement>,
    pub q: Vec<RingElement>,
    pub pop: Vec<RingElement>,
    pub qop: Vec<RingElement>,
}

impl ContinuantQuad {
    pub fn k(&self) -> usize {
        self.a.len()
    }

    pub fn ring(&self) -> &Ring {
        if let Some(first) = self.a.first() {
            first.ring()
        } else {
            self.q[0].ring()
        }
    }

    /// a(i) with the paper's 1-based subscript.
    pub fn a_at(&self, i: usize) -> &RingElement {
        &self.a[i - 1]
    }
}

/// Populate all four sequences for the tuple.
pub fn build_quad(a: &[RingElement]) -> ring_core::Result<ContinuantQuad> {
    let ring = match a.first() {
        Some(x) => x.ring().clone(),
        None => {
            return Err(ring_core::RingError::NotSupported(
                "build_quad on an empty tuple needs a ring; use build_quad_in".into(),
            ))
        }
    };
    build_quad_in(&ring, a)
}

/// Like `build_quad` but usable for the k = 0 edge case.
pub fn build_quad_in(ring: &Ring, a: &[RingElement]) -> ring_core::Result<ContinuantQuad> {
    for x in a {
        if x.ring() != ring {
            return Err(ring_core::RingError::Mismatch(
                ring.to_string(),
                x.ring().to_string(),
            ));
        }
    }
    let k = a.len();
    let zero = RingElement::zero(ring);
    let one = RingElement::one(ring);
    let mut p = Vec::with_capacity(k + 1);
    let mut q = Vec::with_capacity(k + 1);
    let mut pop = Vec::with_capacity(k + 1);
    let mut qop = Vec::with_capacity(k + 1);
    p.push(zero.clone());
    q.push(one.clone());
    pop.push(zero);
    qop.push(one.clone());
    if k >= 1 {
        p.push(one.clone());
        q.push(a[0].clone());
        pop.push(one);
        qop.push(a[0].clone());
    }
    for i in 2..=k {
        let ai = &a[i - 1];
        p.push(&p[i - 2] + &(ai * &p[i - 1]));
        q.push(&q[i - 2] + &(ai * &q[i - 1]));
        pop.push(&pop[i - 2] + &(&pop[i - 1] * ai));
        qop.push(&qop[i - 2] + &(&qop[i - 1] * ai));
    }
    Ok(ContinuantQuad { a: a.to_vec(), p, q, pop, qop })
}

/// The tuple (a1, .., ak) of distinct generators of a fresh free ring.
pub fn free_tuple(k: usize) -> (Ring, Vec<RingElement>) {
    let names: Vec<String> = (1..=k).map(|i| format!("a{i}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let ring = ring_core::free_ring(if k == 0 { &["a1"] } else { &refs });
    let tuple = (0..k)
        .map(|i| RingElement::free_var(&ring, i).unwrap())
        .collect();
    (ring, tuple)
}

/// A uniformly random tuple over a finite ring.
pub fn random_tuple<R: Rng>(ring: &Ring, k: usize, rng: &mut R) -> Vec<RingElement> {
    let size = ring
        .element_count()
        .unwrap_or_else(|| panic!("random_tuple over infinite ring {ring}"));
    (0..k)
        .map(|_| RingElement::from_index(ring, rng.gen_range(0..size)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use ring_core::parse_ring;

    #[test]
    fn k1_base_case() {
        let (_, a) = free_tuple(1);
        let quad = build_quad(&a).unwrap();
        assert_eq!(quad.q[1], a[0]);
        assert!(quad.p[1].is_one());
    }

    #[test]
    fn first_terms_of_both_series() {
        // P: 1, a2, 1 + a3 a2, a2 + a4 + a4 a3 a2
        // Q: a1, 1 + a2 a1, a1 + a3 + a3 a2 a1, 1 + a2 a1 + a4 a1 + a4 a3 + a4 a3 a2 a1
        let (_, a) = free_tuple(4);
        let quad = build_quad(&a).unwrap();
        let (a1, a2, a3, a4) = (&a[0], &a[1], &a[2], &a[3]);
        assert_eq!(quad.p[2], a2.clone());
        assert_eq!(quad.p[3], &RingElement::one(a1.ring()) + &(a3 * a2));
        assert_eq!(quad.p[4], &(a2 + a4) + &(&(a4 * a3) * a2));
        assert_eq!(
            quad.q[3],
            &(a1 + a3) + &(&(a3 * a2) * a1)
        );
        let q4 = &(&(&RingElement::one(a1.ring()) + &(a2 * a1)) + &(a4 * a1))
            + &(&(a4 * a3) + &(&(&(a4 * a3) * a2) * a1));
        assert_eq!(quad.q[4], q4);
    }

    #[test]
    fn qop_is_q_reversed() {
        for k in 0..=6usize {
            let (ring, full) = free_tuple(k.max(1));
            let a = &full[..k];
            let quad = build_quad_in(&ring, a).unwrap();
            let mut rev = a.to_vec();
            rev.reverse();
            let quad_rev = build_quad_in(&ring, &rev).unwrap();
            assert_eq!(quad.qop[k], quad_rev.q[k], "Qop_k = Q_k(reversed) at k={k}");
        }
    }

    #[test]
    fn p_is_shifted_q() {
        // P_k(a(1..k)) = Q_{k-1}(a(2..k))
        let (_, a) = free_tuple(6);
        let quad = build_quad(&a).unwrap();
        for k in 1..=6 {
            let tail = build_quad_in(quad.ring(), &a[1..k]).unwrap();
            assert_eq!(quad.p[k], tail.q[k - 1], "k={k}");
        }
    }

    #[test]
    fn zero_tuple_parity() {
        let ring = parse_ring("zmod(8)").unwrap();
        let zeros = vec![RingElement::zero(&ring); 7];
        let quad = build_quad(&zeros).unwrap();
        for k in 0..=7 {
            if k % 2 == 0 {
                assert!(quad.q[k].is_one());
            } else {
                assert!(quad.q[k].is_zero());
            }
        }
    }
}
