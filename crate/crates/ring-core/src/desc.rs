//! Ring descriptors and the canonical text grammar.
//!
//! The grammar is the CLI's ring argument and appears verbatim inside
//! certificates: `gf(4)`, `mat(3,gf(2))`, `zmod(8)`, `prod(gf(2),mat(2,gf(3)))`,
//! `free(a,b,c)`.

use crate::fppoly;
use crate::{RingError, Result};
use std::fmt;
use std::sync::Arc;

/// Shared handle to a ring descriptor. Cheap to clone, safe to share.
pub type Ring = Arc<RingDesc>;

/// Runtime description of a coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingDesc {
    /// GF(p), p prime.
    PrimeField(u64),
    /// GF(p^k), k >= 2, with the deterministically chosen irreducible modulus
    /// (coefficients little-endian over GF(p), length k+1, monic).
    ExtField { p: u64, k: u32, modulus: Vec<u64> },
    /// Z/mZ, m >= 2.
    Zmod(u64),
    /// n x n matrices over `inner`.
    Matrix { n: usize, inner: Ring },
    /// Finite direct product.
    Product(Vec<Ring>),
    /// Free noncommutative polynomial ring over named variables with integer
    /// coefficients.
    Free { vars: Vec<String> },
}

/// GF(q) for a prime power q. The modulus for proper extensions is the monic
/// irreducible polynomial of the required degree whose digit encoding
/// `sum c_i p^i` is smallest; this makes certificates reproducible.
pub fn gf(q: u64) -> Ring {
    let (p, k) = factor_prime_power(q).unwrap_or_else(|| panic!("gf({q}): not a prime power"));
    if k == 1 {
        Arc::new(RingDesc::PrimeField(p))
    } else {
        let modulus = fppoly::smallest_irreducible(p, k);
        Arc::new(RingDesc::ExtField { p, k, modulus })
    }
}

/// Z/mZ.
pub fn zmod(m: u64) -> Ring {
    assert!(m >= 2, "zmod({m}): modulus must be >= 2");
    Arc::new(RingDesc::Zmod(m))
}

/// n x n matrices over `inner`.
pub fn mat(n: usize, inner: Ring) -> Ring {
    assert!(n >= 1, "mat({n},..): size must be >= 1");
    Arc::new(RingDesc::Matrix { n, inner })
}

/// Direct product of the given factors.
pub fn prod(factors: Vec<Ring>) -> Ring {
    assert!(!factors.is_empty(), "prod(): needs at least one factor");
    Arc::new(RingDesc::Product(factors))
}

/// Free ring over the named variables.
pub fn free_ring(vars: &[&str]) -> Ring {
    Arc::new(RingDesc::Free {
        vars: vars.iter().map(|s| s.to_string()).collect(),
    })
}

fn factor_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut k = 0;
            let mut rest = q;
            while rest % p == 0 {
                rest /= p;
                k += 1;
            }
            return if rest == 1 { Some((p, k)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

impl RingDesc {
    /// Number of elements, if finite (and representable).
    pub fn element_count(&self) -> Option<u128> {
        match self {
            RingDesc::PrimeField(p) => Some(*p as u128),
            RingDesc::ExtField { p, k, .. } => (*p as u128).checked_pow(*k),
            RingDesc::Zmod(m) => Some(*m as u128),
            RingDesc::Matrix { n, inner } => {
                let c = inner.element_count()?;
                let mut acc: u128 = 1;
                for _ in 0..n * n {
                    acc = acc.checked_mul(c)?;
                }
                Some(acc)
            }
            RingDesc::Product(fs) => {
                let mut acc: u128 = 1;
                for f in fs {
                    acc = acc.checked_mul(f.element_count()?)?;
                }
                Some(acc)
            }
            RingDesc::Free { .. } => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.element_count().is_some()
    }

    /// True for rings whose multiplication is commutative.
    pub fn is_commutative(&self) -> bool {
        match self {
            RingDesc::PrimeField(_) | RingDesc::ExtField { .. } | RingDesc::Zmod(_) => true,
            RingDesc::Matrix { n, inner } => *n == 1 && inner.is_commutative(),
            RingDesc::Product(fs) => fs.iter().all(|f| f.is_commutative()),
            RingDesc::Free { vars } => vars.len() <= 1,
        }
    }

    /// True for GF(p) and GF(p^k).
    pub fn is_field(&self) -> bool {
        matches!(self, RingDesc::PrimeField(_) | RingDesc::ExtField { .. })
    }

    /// Field order for field descriptors.
    pub fn field_order(&self) -> Option<u64> {
        match self {
            RingDesc::PrimeField(p) => Some(*p),
            RingDesc::ExtField { p, k, .. } => (*p).checked_pow(*k),
            _ => None,
        }
    }

    /// Characteristic, when finite.
    pub fn characteristic(&self) -> Option<u64> {
        match self {
            RingDesc::PrimeField(p) | RingDesc::ExtField { p, .. } => Some(*p),
            RingDesc::Zmod(m) => Some(*m),
            RingDesc::Matrix { inner, .. } => inner.characteristic(),
            RingDesc::Product(fs) => {
                let mut l: u64 = 1;
                for f in fs {
                    l = lcm(l, f.characteristic()?);
                }
                Some(l)
            }
            RingDesc::Free { .. } => None,
        }
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for RingDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDesc::PrimeField(p) => write!(f, "gf({p})"),
            RingDesc::ExtField { p, k, .. } => write!(f, "gf({})", (*p).pow(*k)),
            RingDesc::Zmod(m) => write!(f, "zmod({m})"),
            RingDesc::Matrix { n, inner } => write!(f, "mat({n},{inner})"),
            RingDesc::Product(fs) => {
                write!(f, "prod(")?;
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
            RingDesc::Free { vars } => {
                write!(f, "free(")?;
                for (i, v) in vars.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Parse the canonical ring grammar.
pub fn parse_ring(s: &str) -> Result<Ring> {
    let mut p = Parser { s: s.as_bytes(), pos: 0 };
    let ring = p.ring()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(RingError::Parse(format!(
            "trailing input at byte {} in ring descriptor `{s}`",
            p.pos
        )));
    }
    Ok(ring)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.pos < self.s.len() && self.s[self.pos] == c {
            self.pos += 1;
            Ok(())
        } else {
            Err(RingError::Parse(format!(
                "expected `{}` at byte {}",
                c as char, self.pos
            )))
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len()
            && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(RingError::Parse(format!("expected identifier at byte {start}")));
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).unwrap().to_string())
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(RingError::Parse(format!("expected number at byte {start}")));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|e| RingError::Parse(format!("bad number: {e}")))
    }

    fn ring(&mut self) -> Result<Ring> {
        let name = self.ident()?;
        self.expect(b'(')?;
        let out = match name.as_str() {
            "gf" => {
                let q = self.number()?;
                if factor_prime_power(q).is_none() {
                    return Err(RingError::Parse(format!("gf({q}): not a prime power")));
                }
                gf(q)
            }
            "zmod" => {
                let m = self.number()?;
                if m < 2 {
                    return Err(RingError::Parse(format!("zmod({m}): modulus must be >= 2")));
                }
                zmod(m)
            }
            "mat" => {
                let n = self.number()? as usize;
                if n < 1 {
                    return Err(RingError::Parse("mat(0,..): size must be >= 1".into()));
                }
                self.expect(b',')?;
                let inner = self.ring()?;
                mat(n, inner)
            }
            "prod" => {
                let mut factors = vec![self.ring()?];
                loop {
                    self.skip_ws();
                    if self.pos < self.s.len() && self.s[self.pos] == b',' {
                        self.pos += 1;
                        factors.push(self.ring()?);
                    } else {
                        break;
                    }
                }
                prod(factors)
            }
            "free" => {
                let mut vars = vec![self.ident()?];
                loop {
                    self.skip_ws();
                    if self.pos < self.s.len() && self.s[self.pos] == b',' {
                        self.pos += 1;
                        vars.push(self.ident()?);
                    } else {
                        break;
                    }
                }
                let refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
                free_ring(&refs)
            }
            other => {
                return Err(RingError::Parse(format!("unknown ring constructor `{other}`")))
            }
        };
        self.expect(b')')?;
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_round_trips() {
        for s in [
            "gf(4)",
            "mat(3,gf(2))",
            "zmod(8)",
            "prod(gf(2),mat(2,gf(3)))",
            "free(a,b,c)",
        ] {
            let r = parse_ring(s).unwrap();
            assert_eq!(r.to_string(), s);
        }
    }

    #[test]
    fn gf4_modulus_is_deterministic() {
        // Smallest irreducible quadratic over GF(2) is x^2 + x + 1.
        match parse_ring("gf(4)").unwrap().as_ref() {
            RingDesc::ExtField { p, k, modulus } => {
                assert_eq!((*p, *k), (2, 2));
                assert_eq!(modulus, &vec![1, 1, 1]);
            }
            other => panic!("unexpected descriptor {other:?}"),
        }
    }

    #[test]
    fn counts() {
        assert_eq!(parse_ring("gf(4)").unwrap().element_count(), Some(4));
        assert_eq!(parse_ring("mat(2,gf(2))").unwrap().element_count(), Some(16));
        assert_eq!(
            parse_ring("prod(gf(2),mat(2,gf(3)))").unwrap().element_count(),
            Some(2 * 81)
        );
        assert_eq!(parse_ring("free(a)").unwrap().element_count(), None);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_ring("gf(6)").is_err());
        assert!(parse_ring("mat(2,gf(2)").is_err());
        assert!(parse_ring("ring(3)").is_err());
        assert!(parse_ring("gf(4)x").is_err());
    }
}
