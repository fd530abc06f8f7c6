//! Transfer matrices: the 2x2 matrix of consecutive continuants, its
//! factorization into elementary factors, the closed-form inverse, and the
//! invertibility / zero transfer between a continuant and its opposite.

use crate::quad::{build_quad_in, ContinuantQuad};
use ring_core::linalg::det;
use ring_core::{mat, Ring, RingElement};

fn mat2(ring: &Ring) -> Ring {
    mat(2, ring.clone())
}

fn mat2_of(
    ring: &Ring,
    a: &RingElement,
    b: &RingElement,
    c: &RingElement,
    d: &RingElement,
) -> RingElement {
    RingElement::matrix_from_entries(&mat2(ring), &[a.clone(), b.clone(), c.clone(), d.clone()])
        .unwrap()
}

/// The transfer matrix ((P_{k-1}, Q_{k-1}), (P_k, Q_k)); identity for k = 0.
pub fn transfer_matrix(quad: &ContinuantQuad) -> RingElement {
    let ring = quad.ring();
    let k = quad.k();
    if k == 0 {
        return RingElement::one(&mat2(ring));
    }
    mat2_of(ring, &quad.p[k - 1], &quad.q[k - 1], &quad.p[k], &quad.q[k])
}

/// Elementary factor ((0,1),(1,a)).
pub fn elementary_factor(a: &RingElement) -> RingElement {
    let ring = a.ring();
    let zero = RingElement::zero(ring);
    let one = RingElement::one(ring);
    mat2_of(ring, &zero, &one, &one, a)
}

/// Product of the elementary factors in descending order
/// ((0,1),(1,a_k)) .. ((0,1),(1,a_1)); equals the transfer matrix.
pub fn factor_product(ring: &Ring, a: &[RingElement]) -> RingElement {
    let mut acc = RingElement::one(&mat2(ring));
    for x in a.iter().rev() {
        acc = &acc * &elementary_factor(x);
    }
    acc
}

/// Closed-form inverse (-1)^k ((Qop_k, -Qop_{k-1}), (-Pop_k, Pop_{k-1})),
/// checked to be a two-sided inverse of the transfer matrix. A failed check
/// signals an arithmetic bug, not bad input.
pub fn invert_transfer(quad: &ContinuantQuad) -> RingElement {
    let ring = quad.ring();
    let k = quad.k();
    let m = transfer_matrix(quad);
    let inv = if k == 0 {
        RingElement::one(&mat2(ring))
    } else {
        let raw = mat2_of(
            ring,
            &quad.qop[k],
            &quad.qop[k - 1].neg_elem(),
            &quad.pop[k].neg_elem(),
            &quad.pop[k - 1],
        );
        if k % 2 == 0 {
            raw
        } else {
            raw.neg_elem()
        }
    };
    assert!(
        (&m * &inv).is_one() && (&inv * &m).is_one(),
        "closed-form transfer inverse failed; arithmetic bug"
    );
    inv
}

/// Outcome of the invertibility transfer between Q_k and Qop_k.
#[derive(Debug, Clone)]
pub struct OpTransferOutcome {
    pub q_invertible: bool,
    pub qop_invertible: bool,
    /// The closed-form inverse (-1)^k (P_{k-1} - Q_{k-1} Q_k^{-1} P_k) of
    /// Qop_k, when Q_k is invertible.
    pub inverse_of_qop: Option<RingElement>,
    /// Invertibility transferred and, where applicable, the closed form
    /// matched the enumerated inverse.
    pub consistent: bool,
}

impl OpTransferOutcome {
    pub fn both_invertible(&self) -> bool {
        self.q_invertible && self.qop_invertible
    }
}

/// Check that Q_k is invertible iff Qop_k is, and that the closed-form
/// inverse of Qop_k matches the one found by direct inversion.
pub fn op_transfer_invertibility(ring: &Ring, a: &[RingElement]) -> OpTransferOutcome {
    let quad = build_quad_in(ring, a).unwrap();
    let k = quad.k();
    if k == 0 {
        return OpTransferOutcome {
            q_invertible: true,
            qop_invertible: true,
            inverse_of_qop: Some(RingElement::one(ring)),
            consistent: true,
        };
    }
    let q_inv = quad.q[k].try_invert();
    let qop_inv = quad.qop[k].try_invert();
    match (&q_inv, &qop_inv) {
        (Some(qi), Some(_)) => {
            let closed = {
                let raw = &quad.p[k - 1] - &(&(&quad.q[k - 1] * qi) * &quad.p[k]);
                if k % 2 == 0 {
                    raw
                } else {
                    raw.neg_elem()
                }
            };
            let ok = (&closed * &quad.qop[k]).is_one() && (&quad.qop[k] * &closed).is_one()
                && Some(&closed) == qop_inv.as_ref();
            OpTransferOutcome {
                q_invertible: true,
                qop_invertible: true,
                inverse_of_qop: Some(closed),
                consistent: ok,
            }
        }
        (None, None) => OpTransferOutcome {
            q_invertible: false,
            qop_invertible: false,
            inverse_of_qop: None,
            consistent: true,
        },
        _ => OpTransferOutcome {
            q_invertible: q_inv.is_some(),
            qop_invertible: qop_inv.is_some(),
            inverse_of_qop: None,
            consistent: false,
        },
    }
}

/// Outcome of the zero transfer: Q_m = 0 iff Qop_m = 0, and when zero both
/// Q_{m-1} and P_m are invertible.
#[derive(Debug, Clone)]
pub struct ZeroTransferOutcome {
    pub q_zero: bool,
    pub qop_zero: bool,
    pub q_prev_invertible: Option<bool>,
    pub p_invertible: Option<bool>,
    pub consistent: bool,
}

pub fn zero_transfer(ring: &Ring, a: &[RingElement]) -> ZeroTransferOutcome {
    let quad = build_quad_in(ring, a).unwrap();
    let m = quad.k();
    let q_zero = quad.q[m].is_zero();
    let qop_zero = quad.qop[m].is_zero();
    if q_zero || qop_zero {
        let q_prev = m >= 1 && quad.q[m - 1].is_unit();
        let p_inv = quad.p[m].is_unit();
        ZeroTransferOutcome {
            q_zero,
            qop_zero,
            q_prev_invertible: Some(q_prev),
            p_invertible: Some(p_inv),
            consistent: q_zero == qop_zero && q_prev && p_inv,
        }
    } else {
        ZeroTransferOutcome {
            q_zero,
            qop_zero,
            q_prev_invertible: None,
            p_invertible: None,
            consistent: true,
        }
    }
}

/// det Q_k = det Qop_k for matrices over a commutative inner ring.
pub fn det_equality(ring: &Ring, a: &[RingElement]) -> ring_core::Result<bool> {
    let quad = build_quad_in(ring, a)?;
    let k = quad.k();
    let dq = det(&quad.q[k])?;
    let dqop = det(&quad.qop[k])?;
    Ok(dq == dqop)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::{free_tuple, random_tuple};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use ring_core::{elements_of, parse_ring};

    #[test]
    fn recurrence_equals_factorization_symbolically() {
        for k in 0..=6 {
            let (ring, full) = free_tuple(k.max(1));
            let a = &full[..k];
            let quad = build_quad_in(&ring, a).unwrap();
            assert_eq!(transfer_matrix(&quad), factor_product(&ring, a), "k={k}");
        }
    }

    #[test]
    fn inverse_k1_matches_direct_check() {
        // inverse of ((0,1),(1,a1)) is ((-a1,1),(1,0))
        let (ring, a) = free_tuple(1);
        let quad = build_quad_in(&ring, &a).unwrap();
        let inv = invert_transfer(&quad);
        let zero = RingElement::zero(&ring);
        let one = RingElement::one(&ring);
        let expect = RingElement::matrix_from_entries(
            &ring_core::mat(2, ring.clone()),
            &[a[0].neg_elem(), one.clone(), one, zero],
        )
        .unwrap();
        assert_eq!(inv, expect);
    }

    #[test]
    fn inverse_round_trip_over_zmod8() {
        let ring = parse_ring("zmod(8)").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let a = random_tuple(&ring, 5, &mut rng);
            let quad = build_quad_in(&ring, &a).unwrap();
            let _ = invert_transfer(&quad); // panics on failure
        }
    }

    #[test]
    fn k2_transfer_is_the_classical_fact() {
        // 1 + a2 a1 invertible iff 1 + a1 a2 invertible, exhaustively over M_2 F_2
        let ring = parse_ring("mat(2,gf(2))").unwrap();
        for x in elements_of(&ring) {
            for y in elements_of(&ring) {
                let out = op_transfer_invertibility(&ring, &[x.clone(), y.clone()]);
                assert!(out.consistent);
            }
        }
    }

    #[test]
    fn zero_transfer_f3_example() {
        // a = (1, 2) over F_3: Q_2 = 1 + 2*1 = 0 = Qop_2
        let ring = parse_ring("gf(3)").unwrap();
        let a = vec![RingElement::from_int(&ring, 1), RingElement::from_int(&ring, 2)];
        let out = zero_transfer(&ring, &a);
        assert!(out.q_zero && out.qop_zero && out.consistent);
    }

    #[test]
    fn det_equality_k2_sylvester() {
        let ring = parse_ring("mat(2,gf(5))").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let a = random_tuple(&ring, 2, &mut rng);
            assert!(det_equality(&ring, &a).unwrap());
        }
    }
}
