//! Word-calculus invariants: relation checks on sampled generators,
//! normalization preserving the projective class on random words, the tie
//! between words and transfer matrices, and the length-lowering conjugations.

use pe2::{
    complete_to_multiplier, lower_half_order, normalize_checked, Generator, GroupWord,
    OrdValue, Pe2Ctx,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ring_core::units::units_cached;
use ring_core::{parse_ring, Ring, RingElement};

fn random_word(ring: &Ring, rng: &mut ChaCha8Rng, len: usize) -> GroupWord {
    let size = ring.element_count().unwrap();
    let units = units_cached(ring).unwrap();
    let gens = (0..len)
        .map(|_| match rng.gen_range(0..4) {
            0 => Generator::E(RingElement::from_index(ring, rng.gen_range(0..size))),
            1 => Generator::T(RingElement::from_index(ring, rng.gen_range(0..size))),
            2 => Generator::J,
            _ => Generator::M(
                units[rng.gen_range(0..units.len())].clone(),
                units[rng.gen_range(0..units.len())].clone(),
            ),
        })
        .collect();
    GroupWord::new(ring, gens).unwrap()
}

#[test]
fn normalize_preserves_class_on_random_words() {
    for s in ["gf(2)", "gf(3)", "gf(4)", "zmod(8)", "mat(2,gf(2))"] {
        let ring = parse_ring(s).unwrap();
        let ctx = Pe2Ctx::new(&ring).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0xabcd);
        for _ in 0..2000 {
            let len = rng.gen_range(0..=8);
            let w = random_word(&ring, &mut rng, len);
            let nf = normalize_checked(&ctx, &w).expect("class must be preserved");
            // normal form shape: interior letters nonzero
            let k = nf.args.len();
            for (i, a) in nf.args.iter().enumerate() {
                if i != 0 && i != k - 1 {
                    assert!(!a.is_zero(), "interior zero after normalize over {s}");
                }
            }
        }
    }
}

#[test]
fn relation_i_multiplier_product() {
    // m_{r,s} m_{r',s'} = m_{rr',ss'} as projective classes
    for s in ["gf(5)", "zmod(8)", "mat(2,gf(2))"] {
        let ring = parse_ring(s).unwrap();
        let ctx = Pe2Ctx::new(&ring).unwrap();
        let units = units_cached(&ring).unwrap();
        for r1 in units.iter() {
            for s1 in units.iter() {
                for r2 in units.iter().take(3) {
                    for s2 in units.iter().take(3) {
                        let lhs = &ctx.m(r1, s1).unwrap() * &ctx.m(r2, s2).unwrap();
                        let rhs = ctx.m(&(r1 * r2), &(s1 * s2)).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}

#[test]
fn relation_ii_and_inverses() {
    // e_a e_0 e_b = e_{a+b}, e_0^2 = 1, e_a^{-1} = e_0 e_{-a} e_0
    for s in ["gf(4)", "zmod(8)"] {
        let ring = parse_ring(s).unwrap();
        let ctx = Pe2Ctx::new(&ring).unwrap();
        let zero = RingElement::zero(&ring);
        for a in ring_core::elements_of(&ring) {
            for b in ring_core::elements_of(&ring) {
                let lhs = &(&ctx.e(&a) * &ctx.e(&zero)) * &ctx.e(&b);
                assert_eq!(lhs, ctx.e(&(&a + &b)));
            }
            let inv = ctx.e(&a).try_invert().unwrap();
            let rhs = &(&ctx.e(&zero) * &ctx.e(&a.neg_elem())) * &ctx.e(&zero);
            assert_eq!(inv, rhs);
        }
        assert!((&ctx.e(&zero) * &ctx.e(&zero)).is_one());
    }
}

#[test]
fn relation_iii_conjugation() {
    // m_{r,s} e_a m_{r,s}^{-1} = e_{s a r^{-1}} m_{s r^{-1}, r s^{-1}}
    for s in ["gf(5)", "mat(2,gf(2))"] {
        let ring = parse_ring(s).unwrap();
        let ctx = Pe2Ctx::new(&ring).unwrap();
        let units = units_cached(&ring).unwrap();
        for r in units.iter() {
            for t in units.iter() {
                let rinv = r.try_invert().unwrap();
                let tinv = t.try_invert().unwrap();
                for a in ring_core::elements_of(&ring).take(9) {
                    let lhs = &(&ctx.m(r, t).unwrap() * &ctx.e(&a)) * &ctx.m(&rinv, &tinv).unwrap();
                    let arg = &(t * &a) * &rinv;
                    let rhs = &ctx.e(&arg) * &ctx.m(&(t * &rinv), &(r * &tinv)).unwrap();
                    assert_eq!(lhs, rhs, "over {s}");
                }
            }
        }
    }
}

#[test]
fn relation_iv_words_equal_transfer_matrices() {
    // S(a) = e_{a(k)} .. e_{a(1)} equals the transfer matrix of the tuple
    for s in ["gf(3)", "mat(2,gf(2))"] {
        let ring = parse_ring(s).unwrap();
        let ctx = Pe2Ctx::new(&ring).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let size = ring.element_count().unwrap();
        for _ in 0..200 {
            let k = rng.gen_range(0..=5);
            let a: Vec<RingElement> = (0..k)
                .map(|_| RingElement::from_index(&ring, rng.gen_range(0..size)))
                .collect();
            let word = GroupWord::new(
                &ring,
                a.iter().rev().cloned().map(Generator::E).collect(),
            )
            .unwrap();
            let quad = continuants::build_quad_in(&ring, &a).unwrap();
            let _ = &quad;
            let transfer = continuants::factor_product(&ring, &a);
            assert_eq!(word.raw_matrix(&ctx), transfer);
        }
    }
}

#[test]
fn multiplier_completion_reduces_words() {
    // completing a prefix with invertible Q to a multiplier, then checking
    // the word evaluates to [m_{r,s}]
    let ring = parse_ring("mat(2,gf(2))").unwrap();
    let ctx = Pe2Ctx::new(&ring).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    let size = ring.element_count().unwrap();
    let mut done = 0;
    while done < 50 {
        let len = rng.gen_range(1..=3);
        let prefix: Vec<RingElement> = (0..len)
            .map(|_| RingElement::from_index(&ring, rng.gen_range(0..size)))
            .collect();
        let Ok(comp) = complete_to_multiplier(&ring, &prefix) else {
            continue;
        };
        let word = comp.word(&ring);
        let target = ctx.m(&comp.r, &comp.s).unwrap();
        assert!(ctx.proj_eq(&word.raw_matrix(&ctx), &target));
        done += 1;
    }
}

#[test]
fn half_order_conjugation_lowers_length() {
    // Ord k+1/2 shapes drop to at most k after the explicit conjugation
    let ring = parse_ring("zmod(4)").unwrap();
    let ctx = Pe2Ctx::new(&ring).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut tested = 0;
    while tested < 100 {
        let len = rng.gen_range(1..=7);
        let w = random_word(&ring, &mut rng, len);
        let nf = normalize_checked(&ctx, &w).unwrap();
        let v = nf.ord_value();
        // half values above 1/2 have the e_0-prefix shape
        if v >= OrdValue::half_above(1) && v.rank() % 3 == 1 {
            let lowered = lower_half_order(&ctx, &nf).unwrap();
            assert!(lowered.ord_value() <= OrdValue::int(nf.args.len() as u32 - 2));
            tested += 1;
        }
    }
}
