//! Enumeration of PE(2,R) for small finite rings, its subgroups PE_1 and
//! PE_2, and the structural checks: index of PE_2 in PE_1, perfectness,
//! derived subgroups, and simplicity by normal-closure probing.

use crate::ctx::Pe2Ctx;
use ring_core::units::units_cached;
use ring_core::{elements_of, Ring, RingElement, RingError};
use serde::Serialize;
use std::collections::HashMap;

/// Cap on the number of projective classes; larger groups are rejected
/// rather than sampled so a false structural verdict is impossible.
pub const GROUP_SIZE_LIMIT: usize = 10_000_000;
/// Cap for the subgroup-structure checks (simplicity probing is quadratic-ish).
pub const LATTICE_SIZE_LIMIT: usize = 1_000_000;

/// The group PE(2,R) as a table of canonical class representatives.
pub struct PeGroup {
    pub ctx: Pe2Ctx,
    pub elems: Vec<RingElement>,
    index: HashMap<u128, u32>,
    /// ids of [e_a] for every a, in element order
    pub e_gens: Vec<u32>,
    /// id of [e_0] = [j]
    pub e0: u32,
    /// ids of all multiplier classes [m_{r,s}]
    pub m_classes: Vec<u32>,
    /// precomputed inverses
    inv: Vec<u32>,
}

impl PeGroup {
    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn id_of(&self, g: &RingElement) -> u32 {
        let key = self.ctx.canon(g).key;
        *self
            .index
            .get(&key)
            .expect("element does not lie in the enumerated group")
    }

    pub fn identity(&self) -> u32 {
        self.id_of(&RingElement::one(self.ctx.mat2()))
    }

    pub fn mul(&self, x: u32, y: u32) -> u32 {
        self.id_of(&(&self.elems[x as usize] * &self.elems[y as usize]))
    }

    pub fn inv(&self, x: u32) -> u32 {
        self.inv[x as usize]
    }

    pub fn conj(&self, g: u32, by: u32) -> u32 {
        self.mul(self.mul(by, g), self.inv(by))
    }

    pub fn commutator(&self, x: u32, y: u32) -> u32 {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }
}

/// Enumerate PE(2,R) by closing {e_a} and {m_{r,s}} under multiplication.
pub fn enumerate_pe(base: &Ring) -> ring_core::Result<PeGroup> {
    let ctx = Pe2Ctx::new(base)?;
    let units = units_cached(base)?;
    let mut gen_mats: Vec<RingElement> = Vec::new();
    for a in elements_of(base) {
        gen_mats.push(ctx.e(&a));
    }
    let e_count = gen_mats.len();
    for r in units.iter() {
        for s in units.iter() {
            gen_mats.push(ctx.m(r, s)?);
        }
    }

    let mut elems: Vec<RingElement> = Vec::new();
    let mut index: HashMap<u128, u32> = HashMap::new();
    let mut frontier: Vec<u32> = Vec::new();
    let one = ctx.canon(&RingElement::one(ctx.mat2()));
    index.insert(one.key, 0);
    elems.push(one.rep);
    frontier.push(0);
    while let Some(x) = frontier.pop() {
        let xm = elems[x as usize].clone();
        for g in &gen_mats {
            let y = ctx.canon(&(g * &xm));
            if !index.contains_key(&y.key) {
                let id = elems.len() as u32;
                if elems.len() >= GROUP_SIZE_LIMIT {
                    return Err(RingError::TooLarge(format!(
                        "PE(2,{base}) exceeds {GROUP_SIZE_LIMIT} classes"
                    )));
                }
                index.insert(y.key, id);
                elems.push(y.rep);
                frontier.push(id);
            }
        }
    }

    let mut inv = vec![0u32; elems.len()];
    for (i, m) in elems.iter().enumerate() {
        let mi = m.try_invert().expect("group elements are invertible");
        let key = ctx.canon(&mi).key;
        inv[i] = index[&key];
    }

    let e_gens: Vec<u32> = gen_mats[..e_count]
        .iter()
        .map(|m| index[&ctx.canon(m).key])
        .collect();
    let e0 = index[&ctx.canon(&ctx.j()).key];
    let mut m_classes: Vec<u32> = gen_mats[e_count..]
        .iter()
        .map(|m| index[&ctx.canon(m).key])
        .collect();
    m_classes.sort_unstable();
    m_classes.dedup();

    Ok(PeGroup { ctx, elems, index, e_gens, e0, m_classes, inv })
}

/// Subgroup closure of a generating set (inverses are added automatically).
pub fn subgroup_closure(g: &PeGroup, gens: &[u32]) -> Vec<bool> {
    let mut gens_full: Vec<u32> = gens.to_vec();
    gens_full.extend(gens.iter().map(|&x| g.inv(x)));
    gens_full.sort_unstable();
    gens_full.dedup();
    let mut member = vec![false; g.order()];
    let id = g.identity();
    member[id as usize] = true;
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for &s in &gens_full {
            let y = g.mul(s, x);
            if !member[y as usize] {
                member[y as usize] = true;
                frontier.push(y);
            }
        }
    }
    member
}

fn member_ids(member: &[bool]) -> Vec<u32> {
    member
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i as u32))
        .collect()
}

/// PE_1 = <e_a>.
pub fn pe1_members(g: &PeGroup) -> Vec<bool> {
    subgroup_closure(g, &g.e_gens)
}

/// PE_2 = <e_a e_b>.
pub fn pe2_members(g: &PeGroup) -> Vec<bool> {
    let mut gens = Vec::new();
    for &a in &g.e_gens {
        for &b in &g.e_gens {
            gens.push(g.mul(a, b));
        }
    }
    gens.sort_unstable();
    gens.dedup();
    subgroup_closure(g, &gens)
}

/// Normal closure of `seeds` inside the subgroup generated by `sub_gens`
/// (conjugation by the subgroup generators, then subgroup closure).
pub fn normal_closure(g: &PeGroup, seeds: &[u32], sub_gens: &[u32]) -> Vec<bool> {
    // orbit of the seeds under conjugation
    let mut conj_gens: Vec<u32> = sub_gens.to_vec();
    conj_gens.extend(sub_gens.iter().map(|&x| g.inv(x)));
    let mut class: Vec<u32> = seeds.to_vec();
    let mut seen: Vec<bool> = vec![false; g.order()];
    for &s in seeds {
        seen[s as usize] = true;
    }
    let mut frontier: Vec<u32> = seeds.to_vec();
    while let Some(x) = frontier.pop() {
        for &c in &conj_gens {
            let y = g.conj(x, c);
            if !seen[y as usize] {
                seen[y as usize] = true;
                class.push(y);
                frontier.push(y);
            }
        }
    }
    subgroup_closure(g, &class)
}

/// Derived subgroup of the subgroup with the given generators: the normal
/// closure (in that subgroup) of the commutators of its generators.
pub fn derived_subgroup(g: &PeGroup, sub_gens: &[u32]) -> Vec<bool> {
    let mut comms = Vec::new();
    for &x in sub_gens {
        for &y in sub_gens {
            let c = g.commutator(x, y);
            if c != g.identity() {
                comms.push(c);
            }
        }
    }
    comms.sort_unstable();
    comms.dedup();
    if comms.is_empty() {
        let mut member = vec![false; g.order()];
        member[g.identity() as usize] = true;
        return member;
    }
    normal_closure(g, &comms, sub_gens)
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupsReport {
    pub ring: String,
    pub order: usize,
    pub pe1_order: usize,
    pub pe2_order: usize,
    pub pe1_index: usize,
    pub pe2_is_derived_of_pe: bool,
    pub pe2_perfect: bool,
    pub pe2_simple: bool,
    pub has_central_sqrt_minus_one: bool,
}

/// Full subgroup-lattice report: enumerates PE(2,R), PE_1, PE_2, computes
/// [PE_1 : PE_2], perfectness and simplicity of PE_2. Groups beyond the
/// lattice limit are rejected.
pub fn subgroup_lattice_checks(base: &Ring) -> ring_core::Result<GroupsReport> {
    let g = enumerate_pe(base)?;
    if g.order() > LATTICE_SIZE_LIMIT {
        return Err(RingError::TooLarge(format!(
            "PE(2,{base}) has {} classes, beyond the lattice limit",
            g.order()
        )));
    }
    let pe1 = pe1_members(&g);
    let pe2 = pe2_members(&g);
    let pe1_order = pe1.iter().filter(|&&b| b).count();
    let pe2_order = pe2.iter().filter(|&&b| b).count();

    // generator sets for the subgroup-level computations
    let mut pe2_gens: Vec<u32> = Vec::new();
    for &a in &g.e_gens {
        for &b in &g.e_gens {
            pe2_gens.push(g.mul(a, b));
        }
    }
    pe2_gens.sort_unstable();
    pe2_gens.dedup();

    let mut pe_gens: Vec<u32> = g.e_gens.clone();
    pe_gens.extend(g.m_classes.iter().copied());
    pe_gens.sort_unstable();
    pe_gens.dedup();

    let derived_pe = derived_subgroup(&g, &pe_gens);
    let pe2_is_derived_of_pe = derived_pe == pe2;

    let derived_pe2 = derived_subgroup(&g, &pe2_gens);
    let pe2_perfect = derived_pe2 == pe2;

    // simplicity: the normal closure of every nontrivial element is everything
    let pe2_ids = member_ids(&pe2);
    let mut pe2_simple = true;
    for &x in &pe2_ids {
        if x == g.identity() {
            continue;
        }
        let nc = normal_closure(&g, &[x], &pe2_gens);
        let nc_order = nc.iter().filter(|&&b| b).count();
        if nc_order != pe2_order {
            pe2_simple = false;
            break;
        }
    }

    Ok(GroupsReport {
        ring: base.to_string(),
        order: g.order(),
        pe1_order,
        pe2_order,
        pe1_index: pe1_order / pe2_order,
        pe2_is_derived_of_pe,
        pe2_perfect,
        pe2_simple,
        has_central_sqrt_minus_one: g.ctx.sqrt_of_minus_one().is_some(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ring_core::parse_ring;

    #[test]
    fn pe_of_f2_is_s3() {
        let g = enumerate_pe(&parse_ring("gf(2)").unwrap()).unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn pe_orders_of_small_fields() {
        // |PGL(2,q)| = q(q-1)(q+1)
        for (q, expect) in [(2u64, 6usize), (3, 24), (4, 60), (5, 120)] {
            let g = enumerate_pe(&parse_ring(&format!("gf({q})")).unwrap()).unwrap();
            assert_eq!(g.order(), expect, "q={q}");
        }
    }

    #[test]
    fn lattice_f3_index_two() {
        let r = subgroup_lattice_checks(&parse_ring("gf(3)").unwrap()).unwrap();
        assert_eq!(r.pe1_index, 2);
        assert_eq!(r.pe2_order, 12); // PSL(2,3) = A_4
        assert!(!r.pe2_perfect); // A_4 is not perfect
        assert!(!r.has_central_sqrt_minus_one);
    }

    #[test]
    fn lattice_f4_is_simple_of_order_60() {
        let r = subgroup_lattice_checks(&parse_ring("gf(4)").unwrap()).unwrap();
        assert_eq!(r.pe2_order, 60);
        assert!(r.pe2_perfect);
        assert!(r.pe2_simple);
        assert!(r.pe2_is_derived_of_pe);
    }

    #[test]
    fn lattice_f5_index_one() {
        let r = subgroup_lattice_checks(&parse_ring("gf(5)").unwrap()).unwrap();
        assert!(r.has_central_sqrt_minus_one);
        assert_eq!(r.pe1_index, 1);
        assert_eq!(r.pe2_order, 60); // PSL(2,5) = A_5
        assert!(r.pe2_simple);
    }
}
