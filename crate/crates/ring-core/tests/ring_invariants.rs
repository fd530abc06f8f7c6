//! Cross-cutting invariants for the ring layer: unit counts against closed
//! forms, two-sided inverses, packed/generic agreement over GF(2), central
//! unit sets, and free-ring associativity.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ring_core::canon::{central_units, is_central_exhaustive};
use ring_core::gf2::Gf2Mat;
use ring_core::units::{unit_count_closed_form, units};
use ring_core::{elements_of, parse_ring, RingElement};

#[test]
fn unit_enumeration_matches_closed_form_orders() {
    for s in [
        "gf(2)",
        "gf(3)",
        "gf(4)",
        "gf(5)",
        "gf(8)",
        "gf(9)",
        "zmod(4)",
        "zmod(8)",
        "zmod(9)",
        "zmod(12)",
        "mat(2,gf(2))",
        "mat(2,gf(3))",
        "mat(3,gf(2))",
        "mat(2,gf(4))",
        "prod(gf(2),gf(3))",
        "prod(gf(4),mat(2,gf(2)))",
    ] {
        let ring = parse_ring(s).unwrap();
        let list = units(&ring).unwrap();
        assert_eq!(
            Some(list.len() as u128),
            unit_count_closed_form(&ring),
            "unit count over {s}"
        );
    }
}

#[test]
fn m4f2_enumerates_20160_units() {
    let ring = parse_ring("mat(4,gf(2))").unwrap();
    assert_eq!(units(&ring).unwrap().len(), 20160);
}

#[test]
fn try_invert_agrees_with_unit_membership() {
    for s in ["zmod(12)", "mat(2,gf(2))", "gf(9)"] {
        let ring = parse_ring(s).unwrap();
        let unit_list = units(&ring).unwrap();
        for e in elements_of(&ring) {
            match e.try_invert() {
                Some(inv) => {
                    assert!(unit_list.contains(&e), "inverse found for non-unit in {s}");
                    assert!((&e * &inv).is_one() && (&inv * &e).is_one());
                }
                None => assert!(!unit_list.contains(&e), "unit without inverse in {s}"),
            }
        }
    }
}

#[test]
fn packed_and_generic_gf2_matrices_agree() {
    // 10^4 random triples per size: add, mul, and inversion agree.
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e3779b97f4a7c15);
    for n in [2usize, 3, 4, 5] {
        let ring = parse_ring(&format!("mat({n},gf(2))")).unwrap();
        let size = ring.element_count().unwrap();
        let trials = 10_000 / 4;
        for _ in 0..trials {
            let a = RingElement::from_index(&ring, rng.gen_range(0..size));
            let b = RingElement::from_index(&ring, rng.gen_range(0..size));
            let c = RingElement::from_index(&ring, rng.gen_range(0..size));
            let pa = Gf2Mat::from_element(&a).unwrap();
            let pb = Gf2Mat::from_element(&b).unwrap();
            let pc = Gf2Mat::from_element(&c).unwrap();

            let sum = &(&a + &b) + &c;
            assert_eq!(Gf2Mat::from_element(&sum).unwrap(), pa.add(&pb).add(&pc));

            let prod = &(&a * &b) * &c;
            assert_eq!(Gf2Mat::from_element(&prod).unwrap(), pa.mul(&pb).mul(&pc));

            match (a.try_invert(), pa.inverse()) {
                (Some(gi), Some(pi)) => assert_eq!(Gf2Mat::from_element(&gi).unwrap(), pi),
                (None, None) => {}
                _ => panic!("packed and generic invertibility disagree"),
            }
        }
    }
}

#[test]
fn central_unit_set_of_matrix_rings_is_scalar() {
    for (s, expect) in [("mat(2,gf(2))", 1), ("mat(3,gf(2))", 1), ("mat(2,gf(3))", 2), ("mat(2,gf(4))", 3)] {
        let ring = parse_ring(s).unwrap();
        let cs = central_units(&ring).unwrap();
        assert_eq!(cs.len(), expect, "central units of {s}");
        for c in &cs {
            assert!(is_central_exhaustive(c));
            assert!(c.is_unit());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn free_ring_multiplication_is_associative(seed in any::<u64>()) {
        // three random polynomials with <= 4 terms each
        let ring = parse_ring("free(a,b,c)").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut rand_poly = || {
            let mut acc = RingElement::zero(&ring);
            for _ in 0..rng.gen_range(0..=4) {
                let mut term = RingElement::from_int(&ring, rng.gen_range(-3i64..=3));
                for _ in 0..rng.gen_range(0..=3) {
                    let v = RingElement::free_var(&ring, rng.gen_range(0..3)).unwrap();
                    term = &term * &v;
                }
                acc = &acc + &term;
            }
            acc
        };
        let (x, y, z) = (rand_poly(), rand_poly(), rand_poly());
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        // distributivity comes along for free
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }
}
