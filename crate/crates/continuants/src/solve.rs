//! Constructive continuant equations: solving the prefix system
//! Q_i(x(1..i)) = c_i, and the Fibonacci-structured splitting of Q_N into
//! opposite/plain products.

use crate::quad::build_quad_in;
use ring_core::{Ring, RingElement, RingError};

/// Given c_1, .., c_l with c_i invertible for i < l, produce x(1..l) with
/// Q_i(x(1..i)) = c_i for every i. Construction: x(1) = c_1 and
/// x(k+1) = (c_{k+1} - c_{k-1}) c_k^{-1}, with c_0 = 1.
pub fn solve_prefix_equations(
    ring: &Ring,
    c: &[RingElement],
) -> ring_core::Result<Vec<RingElement>> {
    let l = c.len();
    if l == 0 {
        return Ok(Vec::new());
    }
    let mut inverses = Vec::with_capacity(l.saturating_sub(1));
    for (i, ci) in c.iter().enumerate().take(l - 1) {
        let inv = ci.try_invert().ok_or_else(|| {
            RingError::NotSupported(format!("c({}) must be invertible", i + 1))
        })?;
        inverses.push(inv);
    }
    let mut x = Vec::with_capacity(l);
    x.push(c[0].clone());
    for k in 1..l {
        let c_prev = if k >= 2 { c[k - 2].clone() } else { RingElement::one(ring) };
        x.push(&(&c[k] - &c_prev) * &inverses[k - 1]);
    }
    // the construction satisfies the equations by the recurrence; check
    let quad = build_quad_in(ring, &x)?;
    for i in 1..=l {
        debug_assert!(quad.q[i] == c[i - 1], "prefix equation {i} failed");
    }
    Ok(x)
}

/// The splitting
/// Q_N(b(1..N)) = Qop_m(b(N..N+1-m)) Q_{N-m}(b(1..N-m))
///              + Qop_{m-1}(b(N..N+2-m)) Q_{N-m-1}(b(1..N-m-1))
/// for 0 < m < N. Returns whether it holds for the given tuple.
pub fn splitting_identity(ring: &Ring, b: &[RingElement], m: usize) -> ring_core::Result<bool> {
    let n = b.len();
    if m == 0 || m >= n {
        return Err(RingError::NotSupported(format!("need 0 < m < N, got m={m}, N={n}")));
    }
    let full = build_quad_in(ring, b)?;

    // Qop_j applied to the descending tuple (b(N), b(N-1), ..): since
    // Qop_j(x1..xj) = Q_j(xj..x1), this is Q_j of the ascending suffix.
    let suffix = |from: usize| -> Vec<RingElement> { b[from - 1..].to_vec() };
    let qop_m = build_quad_in(ring, &suffix(n + 1 - m))?.q[m].clone();
    let q_nm = build_quad_in(ring, &b[..n - m])?.q[n - m].clone();
    let lhs_a = &qop_m * &q_nm;

    let qop_m1 = build_quad_in(ring, &suffix(n + 2 - m))?.q[m - 1].clone();
    let q_nm1 = build_quad_in(ring, &b[..n - m - 1])?.q[n - m - 1].clone();
    let lhs_b = &qop_m1 * &q_nm1;

    Ok(&lhs_a + &lhs_b == full.q[n])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::{free_tuple, random_tuple};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use ring_core::parse_ring;

    #[test]
    fn single_equation() {
        let ring = parse_ring("gf(5)").unwrap();
        let c = vec![RingElement::one(&ring)];
        assert_eq!(solve_prefix_equations(&ring, &c).unwrap(), c);
    }

    #[test]
    fn two_equations_over_f5() {
        let ring = parse_ring("gf(5)").unwrap();
        let u = RingElement::from_int(&ring, 3);
        let v = RingElement::from_int(&ring, 2);
        let x = solve_prefix_equations(&ring, &[u.clone(), v.clone()]).unwrap();
        assert_eq!(x[0], u);
        // x(2) = (v - 1) u^{-1}
        let expect = &(&v - &RingElement::one(&ring)) * &u.try_invert().unwrap();
        assert_eq!(x[1], expect);
        let quad = build_quad_in(&ring, &x).unwrap();
        assert_eq!(quad.q[2], v);
    }

    #[test]
    fn chain_of_five_over_m2f3() {
        let ring = parse_ring("mat(2,gf(3))").unwrap();
        let units = ring_core::units::units(&ring).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        use rand::Rng;
        for _ in 0..20 {
            let mut c: Vec<RingElement> = (0..4)
                .map(|_| units[rng.gen_range(0..units.len())].clone())
                .collect();
            c.push(random_tuple(&ring, 1, &mut rng).pop().unwrap());
            let x = solve_prefix_equations(&ring, &c).unwrap();
            let quad = build_quad_in(&ring, &x).unwrap();
            for i in 1..=5 {
                assert_eq!(quad.q[i], c[i - 1], "equation {i}");
            }
        }
    }

    #[test]
    fn splitting_symbolic_n5_m2() {
        let (ring, b) = free_tuple(5);
        assert!(splitting_identity(&ring, &b, 2).unwrap());
    }

    #[test]
    fn splitting_is_the_recurrence_at_m1() {
        let (ring, b) = free_tuple(2);
        assert!(splitting_identity(&ring, &b, 1).unwrap());
    }

    #[test]
    fn splitting_all_cuts_random() {
        let ring = parse_ring("zmod(8)").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..30 {
            let b = random_tuple(&ring, 6, &mut rng);
            for m in 1..6 {
                assert!(splitting_identity(&ring, &b, m).unwrap(), "m={m}");
            }
        }
    }
}
