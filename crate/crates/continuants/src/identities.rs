//! The seven identity families tying a continuant quad to its opposites:
//! three with the opposite factors on the right and four with them on the
//! left. Each is checked at every index of the quad; failures carry the
//! offending index as data rather than aborting.

use crate::quad::{build_quad_in, free_tuple, random_tuple, ContinuantQuad};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use ring_core::{Ring, RingElement};
use serde::Serialize;

pub const IDENTITY_NAMES: [&str; 7] = [
    "pq_op_symmetry",      // P_k Qop_k = Q_k Pop_k
    "wronskian_right_upper", // P_{k-1} Qop_k - Q_{k-1} Pop_k = (-1)^k
    "wronskian_right_lower", // Q_k Pop_{k-1} - P_k Qop_{k-1} = (-1)^k
    "wronskian_left_q",    // Qop_k P_{k-1} - Qop_{k-1} P_k = (-1)^k
    "wronskian_left_p",    // Pop_{k-1} Q_k - Pop_k Q_{k-1} = (-1)^k
    "q_cross_commute",     // Qop_k Q_{k-1} = Qop_{k-1} Q_k
    "p_cross_commute",     // Pop_k P_{k-1} = Pop_{k-1} P_k
];

#[derive(Debug, Clone, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub pass: bool,
    pub first_failure_k: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub ring: String,
    pub k: usize,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn sign(ring: &Ring, k: usize) -> RingElement {
    let one = RingElement::one(ring);
    if k % 2 == 0 {
        one
    } else {
        one.neg_elem()
    }
}

/// Evaluate all seven identity families at every index 1..=k of the quad.
/// k = 0 passes vacuously.
pub fn check_identities(quad: &ContinuantQuad) -> IdentityReport {
    let ring = quad.ring();
    let mut failures: [Option<usize>; 7] = [None; 7];
    for j in 1..=quad.k() {
        let (p, q, pop, qop) = (&quad.p, &quad.q, &quad.pop, &quad.qop);
        let s = sign(ring, j);
        let checks = [
            &p[j] * &qop[j] == &q[j] * &pop[j],
            &(&(&p[j - 1] * &qop[j]) - &(&q[j - 1] * &pop[j])) == &s,
            &(&(&q[j] * &pop[j - 1]) - &(&p[j] * &qop[j - 1])) == &s,
            &(&(&qop[j] * &p[j - 1]) - &(&qop[j - 1] * &p[j])) == &s,
            &(&(&pop[j - 1] * &q[j]) - &(&pop[j] * &q[j - 1])) == &s,
            &qop[j] * &q[j - 1] == &qop[j - 1] * &q[j],
            &pop[j] * &p[j - 1] == &pop[j - 1] * &p[j],
        ];
        for (slot, ok) in failures.iter_mut().zip(checks) {
            if !ok && slot.is_none() {
                *slot = Some(j);
            }
        }
    }
    IdentityReport {
        ring: ring.to_string(),
        k: quad.k(),
        checks: IDENTITY_NAMES
            .iter()
            .zip(failures)
            .map(|(name, f)| IdentityCheck { name, pass: f.is_none(), first_failure_k: f })
            .collect(),
    }
}

/// Symbolic verification over the free ring: exact word-level cancellation
/// for every k <= max_k.
pub fn symbolic_identity_report(max_k: usize) -> Vec<IdentityReport> {
    (0..=max_k)
        .map(|k| {
            let (ring, a) = free_tuple(k);
            let quad = build_quad_in(&ring, &a).unwrap();
            check_identities(&quad)
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct RandomIdentityReport {
    pub ring: String,
    pub samples: u64,
    pub seed: u64,
    pub max_k: usize,
    pub identities: Vec<&'static str>,
    pub all_pass: bool,
    pub failed_samples: Vec<u64>,
}

/// Seeded random verification over a finite ring. Samples are sharded across
/// workers by index with a per-sample generator, so the outcome does not
/// depend on the worker count.
pub fn random_identity_report(
    ring: &Ring,
    samples: u64,
    seed: u64,
    max_k: usize,
) -> RandomIdentityReport {
    let failed: Vec<u64> = (0..samples)
        .into_par_iter()
        .filter(|&i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (0x9e3779b97f4a7c15u64.wrapping_mul(i + 1)));
            let k = 1 + (i as usize % max_k);
            let a = random_tuple(ring, k, &mut rng);
            let quad = build_quad_in(ring, &a).unwrap();
            !check_identities(&quad).all_pass()
        })
        .collect();
    RandomIdentityReport {
        ring: ring.to_string(),
        samples,
        seed,
        max_k,
        identities: IDENTITY_NAMES.to_vec(),
        all_pass: failed.is_empty(),
        failed_samples: failed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ring_core::parse_ring;

    #[test]
    fn symbolic_up_to_six() {
        for report in symbolic_identity_report(6) {
            assert!(report.all_pass(), "failure at k={}: {report:?}", report.k);
        }
    }

    #[test]
    fn k0_is_vacuous() {
        let (ring, _) = free_tuple(0);
        let quad = build_quad_in(&ring, &[]).unwrap();
        assert!(check_identities(&quad).all_pass());
    }

    #[test]
    fn random_over_small_rings() {
        for s in ["mat(2,gf(3))", "zmod(8)"] {
            let ring = parse_ring(s).unwrap();
            let report = random_identity_report(&ring, 500, 7, 6);
            assert!(report.all_pass, "{report:?}");
        }
    }

    #[test]
    fn mat2_gf3_k6_passes() {
        let ring = parse_ring("mat(2,gf(3))").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let a = random_tuple(&ring, 6, &mut rng);
        let quad = build_quad_in(&ring, &a).unwrap();
        let report = check_identities(&quad);
        assert_eq!(report.checks.len(), 7);
        assert!(report.all_pass());
    }
}
