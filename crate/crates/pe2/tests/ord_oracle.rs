//! Independent oracle for the exact length table: enumerate every normal
//! form up to a letter bound directly (all letter tuples with nonzero
//! interior, times all multiplier classes), take the minimum per element,
//! and compare with the level-set computation.

use pe2::{enumerate_pe, ord_table, OrdValue, PeGroup};
use ring_core::{elements_of, parse_ring, RingElement};
use std::collections::HashMap;

fn brute_force_ord(g: &PeGroup, max_letters: usize) -> HashMap<u32, OrdValue> {
    let ring = g.ctx.base().clone();
    let elems: Vec<RingElement> = elements_of(&ring).collect();
    let nonzero: Vec<RingElement> = elems.iter().filter(|e| !e.is_zero()).cloned().collect();
    let units = ring_core::units::units(&ring).unwrap();

    let mut best: HashMap<u32, OrdValue> = HashMap::new();
    let mut consider = |id: u32, v: OrdValue| {
        best.entry(id)
            .and_modify(|cur| {
                if v < *cur {
                    *cur = v;
                }
            })
            .or_insert(v);
    };

    // all multiplier classes (k = 0)
    let mut m_mats: Vec<RingElement> = Vec::new();
    for r in &units {
        for s in &units {
            m_mats.push(g.ctx.m(r, s).unwrap());
        }
    }
    for m in &m_mats {
        consider(g.id_of(m), OrdValue::ZERO);
    }

    // words of k letters: ends range over everything, interior over nonzero
    for k in 1..=max_letters {
        let mut letters = vec![0usize; k];
        let options = |pos: usize| -> &[RingElement] {
            if pos == 0 || pos == k - 1 {
                &elems
            } else {
                &nonzero
            }
        };
        loop {
            let word: Vec<&RingElement> = (0..k).map(|p| &options(p)[letters[p]]).collect();
            let left_zero = word[0].is_zero();
            let right_zero = word[k - 1].is_zero();
            let valid = k != 1 || true; // single letters are always valid forms
            if valid && !(k >= 2 && left_zero && right_zero && k == 2) {
                // k = 2 with both ends zero is e_0 e_0 = identity, a k = 0 form;
                // skip it (it is covered by the multiplier classes)
                let value = match (k as u32, left_zero, right_zero) {
                    (1, true, _) => OrdValue::minus(1),
                    (1, false, _) => OrdValue::int(1),
                    (kk, true, true) => OrdValue::int(kk - 2),
                    (kk, true, false) => OrdValue::half_above(kk - 2),
                    (kk, false, true) => OrdValue::minus(kk),
                    (kk, false, false) => OrdValue::int(kk),
                };
                let mut mat = RingElement::one(g.ctx.mat2());
                for l in &word {
                    mat = &mat * &g.ctx.e(l);
                }
                for m in &m_mats {
                    consider(g.id_of(&(&mat * m)), value);
                }
            }
            // bump
            let mut pos = 0;
            loop {
                if pos == k {
                    break;
                }
                letters[pos] += 1;
                if letters[pos] < options(pos).len() {
                    break;
                }
                letters[pos] = 0;
                pos += 1;
            }
            if pos == k {
                break;
            }
        }
    }
    best
}

#[test]
fn level_sets_match_brute_force() {
    for s in ["gf(2)", "gf(3)", "zmod(4)"] {
        let ring = parse_ring(s).unwrap();
        let g = enumerate_pe(&ring).unwrap();
        let table = ord_table(&g);
        // six letters cover every value up to 4 and beyond the observed maxima
        let brute = brute_force_ord(&g, 6);
        assert_eq!(brute.len(), g.order(), "{s}: brute force must cover the group");
        for (id, v) in brute {
            assert_eq!(
                table.ord[id as usize], v,
                "{s}: element {id} table={} brute={}",
                table.ord[id as usize], v
            );
        }
    }
}
