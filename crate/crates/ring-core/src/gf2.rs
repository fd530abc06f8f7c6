//! Bit-packed matrices over GF(2), one row per machine word. The hot path for
//! the exhaustive searches over mat(n, gf(2)); the generic element path covers
//! every other ring. Sizes up to 8 are supported inline, which covers every
//! packed computation in this suite.

use crate::desc::{Ring, RingDesc};
use crate::element::RingElement;
use crate::{RingError, Result};

pub const MAX_N: usize = 8;

/// n x n matrix over GF(2); row i is the low n bits of `rows[i]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gf2Mat {
    pub n: usize,
    pub rows: [u8; MAX_N],
}

impl Gf2Mat {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1 && n <= MAX_N);
        Gf2Mat { n, rows: [0; MAX_N] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Gf2Mat::zero(n);
        for i in 0..n {
            m.rows[i] = 1 << i;
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.rows[i] >> j) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, b: bool) {
        if b {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    pub fn add(&self, other: &Gf2Mat) -> Gf2Mat {
        let mut out = *self;
        for i in 0..self.n {
            out.rows[i] ^= other.rows[i];
        }
        out
    }

    pub fn mul(&self, other: &Gf2Mat) -> Gf2Mat {
        let mut out = Gf2Mat::zero(self.n);
        for i in 0..self.n {
            let mut acc: u8 = 0;
            let mut r = self.rows[i];
            while r != 0 {
                let j = r.trailing_zeros() as usize;
                acc ^= other.rows[j];
                r &= r - 1;
            }
            out.rows[i] = acc;
        }
        out
    }

    pub fn transpose(&self) -> Gf2Mat {
        let mut out = Gf2Mat::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                if self.get(i, j) {
                    out.set(j, i, true);
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows;
        let mut r = 0;
        for c in 0..self.n {
            let Some(p) = (r..self.n).find(|&i| rows[i] >> c & 1 == 1) else {
                continue;
            };
            rows.swap(p, r);
            for i in 0..self.n {
                if i != r && rows[i] >> c & 1 == 1 {
                    rows[i] ^= rows[r];
                }
            }
            r += 1;
        }
        r
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.n
    }

    pub fn inverse(&self) -> Option<Gf2Mat> {
        let mut m = self.rows;
        let mut inv = Gf2Mat::identity(self.n).rows;
        for c in 0..self.n {
            let p = (c..self.n).find(|&i| m[i] >> c & 1 == 1)?;
            m.swap(p, c);
            inv.swap(p, c);
            for i in 0..self.n {
                if i != c && m[i] >> c & 1 == 1 {
                    m[i] ^= m[c];
                    inv[i] ^= inv[c];
                }
            }
        }
        Some(Gf2Mat { n: self.n, rows: inv })
    }

    /// Packed encoding: n^2 bits, row-major, row 0 in the low bits. Agrees
    /// with the generic element index for mat(n, gf(2)).
    pub fn encode(&self) -> u64 {
        let mut acc: u64 = 0;
        for i in (0..self.n).rev() {
            acc = (acc << self.n) | self.rows[i] as u64;
        }
        acc
    }

    pub fn decode(n: usize, code: u64) -> Gf2Mat {
        let mut m = Gf2Mat::zero(n);
        let mask = (1u64 << n) - 1;
        let mut c = code;
        for i in 0..n {
            m.rows[i] = (c & mask) as u8;
            c >>= n;
        }
        m
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &Gf2Mat) -> Gf2Mat {
        let n = self.n + other.n;
        assert!(n <= MAX_N);
        let mut out = Gf2Mat::zero(n);
        for i in 0..self.n {
            out.rows[i] = self.rows[i];
        }
        for i in 0..other.n {
            out.rows[self.n + i] = other.rows[i] << self.n;
        }
        out
    }

    pub fn to_element(&self, ring: &Ring) -> Result<RingElement> {
        match ring.as_ref() {
            RingDesc::Matrix { n, inner }
                if *n == self.n && matches!(inner.as_ref(), RingDesc::PrimeField(2)) =>
            {
                Ok(RingElement::from_index(ring, self.encode() as u128))
            }
            _ => Err(RingError::NotSupported(format!("{ring} is not mat({},gf(2))", self.n))),
        }
    }

    pub fn from_element(e: &RingElement) -> Result<Gf2Mat> {
        match e.ring().as_ref() {
            RingDesc::Matrix { n, inner }
                if *n <= MAX_N && matches!(inner.as_ref(), RingDesc::PrimeField(2)) =>
            {
                Ok(Gf2Mat::decode(*n, e.index().unwrap() as u64))
            }
            other => Err(RingError::NotSupported(format!(
                "packed form unavailable for {other:?}"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::desc::{gf, mat};

    #[test]
    fn encode_round_trip() {
        for code in 0..512u64 {
            let m = Gf2Mat::decode(3, code);
            assert_eq!(m.encode(), code);
        }
    }

    #[test]
    fn packed_encoding_matches_generic_index() {
        let ring = mat(3, gf(2));
        for code in 0..512u64 {
            let m = Gf2Mat::decode(3, code);
            assert_eq!(m.to_element(&ring).unwrap().index(), Some(code as u128));
        }
    }

    #[test]
    fn gl3_count() {
        let n = (0..512u64)
            .filter(|&c| Gf2Mat::decode(3, c).is_invertible())
            .count();
        assert_eq!(n, 168);
    }

    #[test]
    fn inverse_is_two_sided() {
        for code in 0..512u64 {
            let m = Gf2Mat::decode(3, code);
            if let Some(inv) = m.inverse() {
                assert_eq!(m.mul(&inv), Gf2Mat::identity(3));
                assert_eq!(inv.mul(&m), Gf2Mat::identity(3));
            } else {
                assert!(!m.is_invertible());
            }
        }
    }
}
