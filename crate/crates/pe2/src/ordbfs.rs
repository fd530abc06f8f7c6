//! Exact word lengths over a whole group by level sets.
//!
//! Every element has normal forms e_{a(k)} .. e_{a(1)} m_{r,s} with interior
//! letters nonzero, and the Ord contribution of a form depends only on k and
//! on which end letters vanish. Writing W_j for the set of classes of
//! products of j nonzero letters and M for the multiplier classes, the
//! element sets per chain value are
//!   0      : M
//!   n + 1/2: e_0 W_{n+1} M          (k = n+2, left end zero, right nonzero)
//!   n-     : W_{n-1} e_0 M          (k = n, right end zero, left nonzero)
//!   n      : W_n M  and  e_0 W_n e_0 M   (k = n, no zeros; k = n+2, both)
//! Walking the chain in order and recording first appearance yields the
//! exact minimum for every element, certified by exhaustion per level.

use crate::group::PeGroup;
use crate::ordval::OrdValue;

pub struct OrdTable {
    pub ord: Vec<OrdValue>,
    pub max_ord: OrdValue,
}

/// Set product {x . m : m in M} for every x in xs.
fn right_mult_set(g: &PeGroup, xs: &[u32], ms: &[u32]) -> Vec<u32> {
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    for &x in xs {
        for &m in ms {
            let y = g.mul(x, m);
            if !seen[y as usize] {
                seen[y as usize] = true;
                out.push(y);
            }
        }
    }
    out
}

fn left_mult(g: &PeGroup, a: u32, xs: &[u32]) -> Vec<u32> {
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    for &x in xs {
        let y = g.mul(a, x);
        if !seen[y as usize] {
            seen[y as usize] = true;
            out.push(y);
        }
    }
    out
}

/// Exact ord for every element of PE(2,R), by exhausting each chain level.
pub fn ord_table(g: &PeGroup) -> OrdTable {
    let n_elems = g.order();
    let mut ord: Vec<Option<OrdValue>> = vec![None; n_elems];
    let mut assigned = 0usize;

    // nonzero-letter generators
    let nonzero_e: Vec<u32> = g
        .e_gens
        .iter()
        .copied()
        .filter(|&e| e != g.e0)
        .collect();

    // W_j sets of classes, grown on demand
    let mut w: Vec<Vec<u32>> = vec![vec![g.identity()]];
    let grow_w = |w: &mut Vec<Vec<u32>>, j: usize| {
        while w.len() <= j {
            let prev = &w[w.len() - 1];
            let mut seen = vec![false; n_elems];
            let mut next = Vec::new();
            for &x in prev {
                for &e in &nonzero_e {
                    let y = g.mul(e, x);
                    if !seen[y as usize] {
                        seen[y as usize] = true;
                        next.push(y);
                    }
                }
            }
            w.push(next);
        }
    };

    let record = |set: Vec<u32>, value: OrdValue, ord: &mut Vec<Option<OrdValue>>, assigned: &mut usize| {
        for x in set {
            if ord[x as usize].is_none() {
                ord[x as usize] = Some(value);
                *assigned += 1;
            }
        }
    };

    let mut rank = 0u32;
    while assigned < n_elems {
        let value = OrdValue::from_rank(rank);
        let sets: Vec<Vec<u32>> = match rank % 3 {
            0 if rank == 0 => {
                vec![g.m_classes.clone()]
            }
            0 => {
                // integer value n >= 1: W_n M and e_0 W_n e_0 M
                let n = (rank / 3) as usize;
                grow_w(&mut w, n);
                let wn_m = right_mult_set(g, &w[n], &g.m_classes);
                let e0_wn = left_mult(g, g.e0, &w[n]);
                let e0_wn_e0: Vec<u32> = e0_wn.iter().map(|&x| g.mul(x, g.e0)).collect();
                let both = right_mult_set(g, &e0_wn_e0, &g.m_classes);
                vec![wn_m, both]
            }
            1 => {
                // n + 1/2: e_0 W_{n+1} M
                let n = (rank / 3) as usize;
                grow_w(&mut w, n + 1);
                let e0_w = left_mult(g, g.e0, &w[n + 1]);
                vec![right_mult_set(g, &e0_w, &g.m_classes)]
            }
            _ => {
                // n-: W_{n-1} e_0 M
                let n = ((rank + 1) / 3) as usize;
                grow_w(&mut w, n - 1);
                let w_e0: Vec<u32> = w[n - 1].iter().map(|&x| g.mul(x, g.e0)).collect();
                vec![right_mult_set(g, &w_e0, &g.m_classes)]
            }
        };
        for set in sets {
            record(set, value, &mut ord, &mut assigned);
        }
        rank += 1;
        assert!(rank < 64, "ord levels did not exhaust the group");
    }

    let ord: Vec<OrdValue> = ord.into_iter().map(|o| o.unwrap()).collect();
    let max_ord = ord.iter().copied().max().unwrap_or(OrdValue::ZERO);
    OrdTable { ord, max_ord }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::enumerate_pe;
    use ring_core::parse_ring;

    #[test]
    fn identity_has_ord_zero() {
        let g = enumerate_pe(&parse_ring("gf(3)").unwrap()).unwrap();
        let t = ord_table(&g);
        assert_eq!(t.ord[g.identity() as usize], OrdValue::ZERO);
    }

    #[test]
    fn f2_max_ord_at_most_five_halves() {
        let g = enumerate_pe(&parse_ring("gf(2)").unwrap()).unwrap();
        let t = ord_table(&g);
        assert!(t.max_ord <= OrdValue::half_above(2), "max {}", t.max_ord);
    }

    #[test]
    fn field_words_of_two_letters_collapse() {
        // over a field every nonzero element is invertible, so no two-letter
        // word is indecomposable: max ord of PGL(2,3) is 3/2, and the
        // 1 + ab = 0 words collapse all the way to value 1 via the identity
        // e_a e_b = e_0 e_a e_0 m (both-ends-zero three-letter form)
        let g = enumerate_pe(&parse_ring("gf(3)").unwrap()).unwrap();
        let t = ord_table(&g);
        assert_eq!(t.max_ord, OrdValue::half_above(1));
        let ring = g.ctx.base().clone();
        let one = ring_core::RingElement::from_int(&ring, 1);
        let two = ring_core::RingElement::from_int(&ring, 2);
        let eab = &g.ctx.e(&one) * &g.ctx.e(&two);
        // explicit collapse witness: e_1 e_2 = e_0 e_1 e_0 m_{1,2}
        let zero = ring_core::RingElement::zero(&ring);
        let rhs = &(&(&g.ctx.e(&zero) * &g.ctx.e(&one)) * &g.ctx.e(&zero))
            * &g.ctx.m(&one, &two).unwrap();
        assert_eq!(eab, rhs);
        assert_eq!(t.ord[g.id_of(&eab) as usize], OrdValue::int(1));
    }

    #[test]
    fn zmod4_attains_ord_two() {
        // a = 2 is nonzero and not invertible in Z/4, so e_2 e_1 m is an
        // indecomposable two-letter word
        let g = enumerate_pe(&parse_ring("zmod(4)").unwrap()).unwrap();
        let t = ord_table(&g);
        let ring = g.ctx.base().clone();
        let two = ring_core::RingElement::from_int(&ring, 2);
        let one = ring_core::RingElement::from_int(&ring, 1);
        let w = &g.ctx.e(&two) * &g.ctx.e(&one);
        assert_eq!(t.ord[g.id_of(&w) as usize], OrdValue::int(2));
        assert_eq!(t.max_ord, OrdValue::int(2));
    }

    #[test]
    fn ord_is_a_lower_bound_for_word_forms() {
        // every single-generator word's table entry is <= its shape value
        let g = enumerate_pe(&parse_ring("zmod(4)").unwrap()).unwrap();
        let t = ord_table(&g);
        let ring = g.ctx.base().clone();
        for a in ring_core::elements_of(&ring) {
            let e = g.ctx.e(&a);
            let id = g.id_of(&e);
            let expected_shape = if a.is_zero() {
                OrdValue::minus(1)
            } else {
                OrdValue::int(1)
            };
            assert!(t.ord[id as usize] <= expected_shape);
        }
    }
}
