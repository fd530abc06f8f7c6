//! Dense operation tables for small finite rings (up to 1024 elements):
//! addition, multiplication, negation and unit data as flat index tables.
//! The exhaustive witness scans run entirely on these indices.

use ring_core::{elements_of, Ring, RingElement, RingError};

pub const DENSE_LIMIT: usize = 1024;

pub struct DenseRing {
    pub ring: Ring,
    pub size: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    pub is_unit: Vec<bool>,
    /// inverse index per element; size as a sentinel for non-units
    inv: Vec<u16>,
    pub units: Vec<u16>,
    pub zero: u16,
    pub one: u16,
}

impl DenseRing {
    pub fn build(ring: &Ring) -> ring_core::Result<DenseRing> {
        let count = ring
            .element_count()
            .ok_or_else(|| RingError::Infinite(ring.to_string()))?;
        if count as usize > DENSE_LIMIT {
            return Err(RingError::TooLarge(format!(
                "dense tables for {ring} ({count} elements)"
            )));
        }
        let size = count as usize;
        let elems: Vec<RingElement> = elements_of(ring).collect();
        let mut add = vec![0u16; size * size];
        let mut mul = vec![0u16; size * size];
        let mut neg = vec![0u16; size];
        let mut is_unit = vec![false; size];
        let mut inv = vec![size as u16; size];
        let mut units = Vec::new();
        for (i, x) in elems.iter().enumerate() {
            neg[i] = x.neg_elem().index().unwrap() as u16;
            if let Some(xi) = x.try_invert() {
                is_unit[i] = true;
                inv[i] = xi.index().unwrap() as u16;
                units.push(i as u16);
            }
            for (j, y) in elems.iter().enumerate() {
                add[i * size + j] = (x + y).index().unwrap() as u16;
                mul[i * size + j] = (x * y).index().unwrap() as u16;
            }
        }
        Ok(DenseRing {
            ring: ring.clone(),
            size,
            add,
            mul,
            neg,
            is_unit,
            inv,
            units,
            zero: RingElement::zero(ring).index().unwrap() as u16,
            one: RingElement::one(ring).index().unwrap() as u16,
        })
    }

    #[inline]
    pub fn add(&self, x: u16, y: u16) -> u16 {
        self.add[x as usize * self.size + y as usize]
    }

    #[inline]
    pub fn mul(&self, x: u16, y: u16) -> u16 {
        self.mul[x as usize * self.size + y as usize]
    }

    #[inline]
    pub fn neg(&self, x: u16) -> u16 {
        self.neg[x as usize]
    }

    #[inline]
    pub fn unit(&self, x: u16) -> bool {
        self.is_unit[x as usize]
    }

    pub fn inv(&self, x: u16) -> Option<u16> {
        if self.is_unit[x as usize] {
            Some(self.inv[x as usize])
        } else {
            None
        }
    }

    pub fn elem(&self, x: u16) -> RingElement {
        RingElement::from_index(&self.ring, x as u128)
    }

    pub fn idx(&self, e: &RingElement) -> u16 {
        e.index().unwrap() as u16
    }

    /// A small generating set of the unit group, found greedily by closure.
    pub fn unit_group_generators(&self) -> Vec<u16> {
        let mut gens: Vec<u16> = Vec::new();
        let mut closure = vec![false; self.size];
        closure[self.one as usize] = true;
        let mut closed_count = 1usize;
        for &u in &self.units {
            if closure[u as usize] {
                continue;
            }
            gens.push(u);
            // grow the closure with the new generator
            let mut frontier: Vec<u16> = (0..self.size as u16)
                .filter(|&x| closure[x as usize])
                .collect();
            while let Some(x) = frontier.pop() {
                for &g in &gens {
                    let y = self.mul(g, x);
                    if !closure[y as usize] {
                        closure[y as usize] = true;
                        closed_count += 1;
                        frontier.push(y);
                    }
                }
            }
            if closed_count == self.units.len() {
                break;
            }
        }
        gens
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ring_core::parse_ring;

    #[test]
    fn tables_agree_with_generic_ops() {
        for s in ["gf(4)", "zmod(8)", "mat(2,gf(3))"] {
            let ring = parse_ring(s).unwrap();
            let d = DenseRing::build(&ring).unwrap();
            for i in 0..d.size as u16 {
                let x = d.elem(i);
                assert_eq!(d.neg(i), d.idx(&x.neg_elem()));
                assert_eq!(d.unit(i), x.is_unit());
                for j in (0..d.size as u16).step_by(5) {
                    let y = d.elem(j);
                    assert_eq!(d.add(i, j), d.idx(&(&x + &y)));
                    assert_eq!(d.mul(i, j), d.idx(&(&x * &y)));
                }
            }
        }
    }

    #[test]
    fn unit_generators_generate() {
        let ring = parse_ring("mat(2,gf(4))").unwrap();
        let d = DenseRing::build(&ring).unwrap();
        let gens = d.unit_group_generators();
        assert!(gens.len() <= 6);
        // closure check
        let mut closure = vec![false; d.size];
        closure[d.one as usize] = true;
        let mut frontier = vec![d.one];
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                let y = d.mul(g, x);
                if !closure[y as usize] {
                    closure[y as usize] = true;
                    frontier.push(y);
                }
            }
        }
        assert_eq!(
            closure.iter().filter(|&&b| b).count(),
            d.units.len(),
            "generators must generate the whole unit group"
        );
    }
}
