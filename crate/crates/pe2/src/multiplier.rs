//! Completing a word prefix to a multiplier: given a(1..k-2) with
//! Q_{k-2} invertible there are unique a(k-1), a(k) and units r, s with
//! S(a(1..k)) = m_{r,s}, namely a(k-1) = -Q_{k-3} Q_{k-2}^{-1},
//! a(k) = -P_{k-2} P_{k-1}^{-1}, r = P_{k-1}, s = Q_{k-2}.
//!
//! Also the four-letter multiplier word for diag(z, z^{-1}):
//! e_{z^{-1}-1} e_1 e_{z-1} e_{-z^{-1}} = m_{z, z^{-1}} for every unit z.

use crate::ctx::Pe2Ctx;
use crate::word::{Generator, GroupWord};
use continuants::build_quad_in;
use ring_core::{Ring, RingElement, RingError};

#[derive(Debug, Clone)]
pub struct MultiplierCompletion {
    /// The full tuple a(1..k).
    pub tuple: Vec<RingElement>,
    pub a_k_minus_1: RingElement,
    pub a_k: RingElement,
    pub r: RingElement,
    pub s: RingElement,
}

impl MultiplierCompletion {
    /// The word S(a) = e_{a(k)} .. e_{a(1)} (multiplier-free part).
    pub fn word(&self, ring: &Ring) -> GroupWord {
        let gens = self
            .tuple
            .iter()
            .rev()
            .cloned()
            .map(Generator::E)
            .collect();
        GroupWord::new(ring, gens).unwrap()
    }
}

/// Complete a prefix to a multiplier word. Requires Q_{k-2}(prefix)
/// invertible (k = prefix len + 2 >= 3).
pub fn complete_to_multiplier(
    ring: &Ring,
    prefix: &[RingElement],
) -> ring_core::Result<MultiplierCompletion> {
    let len = prefix.len();
    if len == 0 {
        return Err(RingError::NotSupported("prefix must have length >= 1".into()));
    }
    let quad = build_quad_in(ring, prefix)?;
    let q_inv = quad.q[len]
        .try_invert()
        .ok_or_else(|| RingError::NotSupported("Q_{k-2}(prefix) is not invertible".into()))?;
    // a(k-1) = -Q_{k-3} Q_{k-2}^{-1}
    let a_k_minus_1 = (&quad.q[len - 1] * &q_inv).neg_elem();

    let mut with_k1 = prefix.to_vec();
    with_k1.push(a_k_minus_1.clone());
    let quad1 = build_quad_in(ring, &with_k1)?;
    let x = quad1.p[len + 1].clone(); // P_{k-1}, invertible by the transfer
    let x_inv = x.try_invert().ok_or_else(|| {
        RingError::NotSupported("P_{k-1} failed to be invertible; arithmetic bug".into())
    })?;
    // a(k) = -P_{k-2} P_{k-1}^{-1}
    let a_k = (&quad1.p[len] * &x_inv).neg_elem();

    let mut tuple = with_k1;
    tuple.push(a_k.clone());
    let full = build_quad_in(ring, &tuple)?;
    let k = len + 2;
    assert!(full.q[k - 1].is_zero() && full.p[k].is_zero(), "multiplier completion failed");
    let r = full.p[k - 1].clone();
    let s = full.q[k].clone();
    debug_assert_eq!(s, quad.q[len]);
    Ok(MultiplierCompletion { tuple, a_k_minus_1, a_k, r, s })
}

/// The four-letter word for diag(z, z^{-1}), written order.
pub fn multiplier_word_for_unit(ring: &Ring, z: &RingElement) -> ring_core::Result<GroupWord> {
    let z_inv = z
        .try_invert()
        .ok_or_else(|| RingError::NotSupported("z must be a unit".into()))?;
    let one = RingElement::one(ring);
    let letters = vec![
        &z_inv - &one,     // e_{z^{-1} - 1}
        one.clone(),       // e_1
        z - &one,          // e_{z - 1}
        z_inv.neg_elem(),  // e_{-z^{-1}}
    ];
    GroupWord::new(ring, letters.into_iter().map(Generator::E).collect())
}

/// Check the multiplier-word fixture for one unit: the word evaluates to
/// exactly diag(z, z^{-1}) (no central factor needed).
pub fn multiplier_word_fixture_holds(ctx: &Pe2Ctx, z: &RingElement) -> bool {
    let Ok(word) = multiplier_word_for_unit(ctx.base(), z) else {
        return false;
    };
    let z_inv = z.try_invert().unwrap();
    let expect = ctx.m(z, &z_inv).unwrap();
    word.raw_matrix(ctx) == expect
}

/// Check the fixture for every unit of the ring.
pub fn multiplier_word_fixture_all_units(ctx: &Pe2Ctx) -> ring_core::Result<bool> {
    let units = ring_core::units::units_cached(ctx.base())?;
    Ok(units.iter().all(|z| multiplier_word_fixture_holds(ctx, z)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ring_core::parse_ring;

    fn ctx(s: &str) -> Pe2Ctx {
        Pe2Ctx::new(&parse_ring(s).unwrap()).unwrap()
    }

    #[test]
    fn k3_from_invertible_prefix() {
        // prefix (b): e_b e_{-b^{-1}} e_b = m_{-b^{-1}, b}
        let c = ctx("gf(5)");
        let b = RingElement::from_int(c.base(), 3);
        let comp = complete_to_multiplier(c.base(), &[b.clone()]).unwrap();
        let binv = b.try_invert().unwrap();
        assert_eq!(comp.a_k_minus_1, binv.neg_elem());
        assert_eq!(comp.a_k, b);
        assert_eq!(comp.r, binv.neg_elem());
        assert_eq!(comp.s, b);
        // word evaluates to the multiplier exactly
        let word = comp.word(c.base());
        assert_eq!(word.raw_matrix(&c), c.m(&comp.r, &comp.s).unwrap());
    }

    #[test]
    fn k3_paper_form() {
        // e_{-b^{-1}} e_b e_{-b^{-1}} = m_{b, -b^{-1}} for every unit b
        for rs in ["gf(5)", "zmod(8)", "mat(2,gf(2))"] {
            let c = ctx(rs);
            for b in ring_core::units::units(c.base()).unwrap() {
                let binv = b.try_invert().unwrap();
                let w = GroupWord::new(
                    c.base(),
                    vec![
                        Generator::E(binv.neg_elem()),
                        Generator::E(b.clone()),
                        Generator::E(binv.neg_elem()),
                    ],
                )
                .unwrap();
                let expect = c.m(&b, &binv.neg_elem()).unwrap();
                assert_eq!(w.raw_matrix(&c), expect, "b = {b} over {rs}");
            }
        }
    }

    #[test]
    fn k4_multiplier_components() {
        // prefix (a1, a2) with 1 + a2 a1 invertible gives
        // m_{(1+a1a2)^{-1}, 1+a2a1}
        let c = ctx("mat(2,gf(3))");
        let ring = c.base();
        let size = ring.element_count().unwrap();
        let mut found = 0;
        for i in 0..size {
            for j in (0..size).step_by(7) {
                let a1 = RingElement::from_index(ring, i);
                let a2 = RingElement::from_index(ring, j);
                let q2 = &RingElement::one(ring) + &(&a2 * &a1);
                if !q2.is_unit() {
                    continue;
                }
                let comp = complete_to_multiplier(ring, &[a1.clone(), a2.clone()]).unwrap();
                let p3 = (&RingElement::one(ring) + &(&a1 * &a2)).try_invert().unwrap();
                assert_eq!(comp.r, p3);
                assert_eq!(comp.s, q2);
                found += 1;
                if found > 200 {
                    return;
                }
            }
        }
        assert!(found > 0);
    }

    #[test]
    fn fixture_all_units_small_rings() {
        for rs in ["gf(2)", "gf(3)", "gf(4)", "zmod(8)", "mat(2,gf(2))"] {
            let c = ctx(rs);
            assert!(multiplier_word_fixture_all_units(&c).unwrap(), "{rs}");
        }
    }
}
