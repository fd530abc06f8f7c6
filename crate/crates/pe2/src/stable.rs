//! Stable range one, the continuant witness conditions that characterize it,
//! and the bridge to maximal word lengths.

use crate::group::enumerate_pe;
use crate::ordbfs::ord_table;
use crate::ordval::OrdValue;
use ring_core::{elements_of, Ring, RingElement};
use serde::Serialize;

/// Stable range one from the definition: for every left-unimodular pair
/// (a, b) there is c with a + cb invertible. Exhaustive.
pub fn stable_range_one(ring: &Ring) -> bool {
    let all: Vec<RingElement> = elements_of(ring).collect();
    let one = RingElement::one(ring);
    for a in &all {
        for b in &all {
            // left unimodular: 1 in Ra + Rb
            let unimodular = all
                .iter()
                .any(|x| all.iter().any(|y| &(x * a) + &(y * b) == one));
            if !unimodular {
                continue;
            }
            let witness = all.iter().any(|c| (a + &(c * b)).is_unit());
            if !witness {
                return false;
            }
        }
    }
    true
}

/// Q_3-witnesses: for all x, y there exists c with Q_3(x,y,c) = x + c(1 + yx)
/// invertible. Exhaustive.
pub fn q3_witnesses(ring: &Ring) -> bool {
    let all: Vec<RingElement> = elements_of(ring).collect();
    let one = RingElement::one(ring);
    for x in &all {
        for y in &all {
            let q2 = &one + &(y * x);
            let ok = all.iter().any(|c| (x + &(c * &q2)).is_unit());
            if !ok {
                return false;
            }
        }
    }
    true
}

/// The odd-continuant witness condition at level n: for every (n+1)-tuple a
/// there is an n-tuple b with Q_{2n+1}(a, b) invertible. Exhaustive; the
/// state space is |R|^(2n+1).
pub fn qsr_condition(ring: &Ring, n: usize) -> ring_core::Result<bool> {
    let count = ring
        .element_count()
        .ok_or_else(|| ring_core::RingError::Infinite(ring.to_string()))?;
    let states = count.checked_pow((2 * n + 1) as u32);
    if states.map_or(true, |s| s > 1 << 26) {
        return Err(ring_core::RingError::TooLarge(format!(
            "qsr_condition({ring}, {n})"
        )));
    }
    let all: Vec<RingElement> = elements_of(ring).collect();
    let mut a_tuple = vec![0usize; n + 1];
    loop {
        let a: Vec<RingElement> = a_tuple.iter().map(|&i| all[i].clone()).collect();
        let mut b_tuple = vec![0usize; n];
        let mut found = false;
        'b: loop {
            let mut full = a.clone();
            full.extend(b_tuple.iter().map(|&i| all[i].clone()));
            let quad = continuants::build_quad(&full)?;
            if quad.q[2 * n + 1].is_unit() {
                found = true;
                break 'b;
            }
            if !bump(&mut b_tuple, all.len()) {
                break 'b;
            }
        }
        if !found {
            return Ok(false);
        }
        if !bump(&mut a_tuple, all.len()) {
            return Ok(true);
        }
    }
}

fn bump(idx: &mut [usize], base: usize) -> bool {
    for slot in idx.iter_mut() {
        *slot += 1;
        if *slot < base {
            return true;
        }
        *slot = 0;
    }
    false
}

#[derive(Debug, Clone, Serialize)]
pub struct StableRangeReport {
    pub ring: String,
    pub sr1: bool,
    pub q3_witnesses: bool,
    pub max_ord: OrdValue,
    /// sr1 holds iff every element has length at most 5/2
    pub equivalence_holds: bool,
}

/// Check stable range one, the Q_3 witness condition, and the maximal word
/// length over PE(2,R); assert the equivalence between sr1 and max ord <= 5/2.
pub fn stable_range_report(ring: &Ring) -> ring_core::Result<StableRangeReport> {
    let sr1 = stable_range_one(ring);
    let q3 = q3_witnesses(ring);
    let g = enumerate_pe(ring)?;
    let table = ord_table(&g);
    let bound = OrdValue::half_above(2);
    let equivalence_holds = sr1 == (table.max_ord <= bound) && sr1 == q3;
    Ok(StableRangeReport {
        ring: ring.to_string(),
        sr1,
        q3_witnesses: q3,
        max_ord: table.max_ord,
        equivalence_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ring_core::parse_ring;

    #[test]
    fn fields_have_stable_range_one() {
        for s in ["gf(2)", "gf(3)", "gf(4)"] {
            let ring = parse_ring(s).unwrap();
            assert!(stable_range_one(&ring), "{s}");
            assert!(q3_witnesses(&ring), "{s}");
        }
    }

    #[test]
    fn zmod8_report() {
        let ring = parse_ring("zmod(8)").unwrap();
        let r = stable_range_report(&ring).unwrap();
        assert!(r.sr1 && r.q3_witnesses && r.equivalence_holds);
        assert!(r.max_ord <= OrdValue::half_above(2));
    }

    #[test]
    fn qsr_level_one_on_f3() {
        let ring = parse_ring("gf(3)").unwrap();
        assert!(qsr_condition(&ring, 1).unwrap());
    }

    #[test]
    fn qsr_degenerate_zero_tuples() {
        // all-zero tuples are handled by the parity rule: Q_{2n+1}(0,..,0) = 0,
        // so a nonzero witness tuple is genuinely needed
        let ring = parse_ring("gf(2)").unwrap();
        let zeros = vec![RingElement::zero(&ring); 5];
        let quad = continuants::build_quad(&zeros).unwrap();
        assert!(quad.q[5].is_zero());
        assert!(qsr_condition(&ring, 2).unwrap());
    }
}
