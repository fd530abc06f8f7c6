//! Unit group enumeration with closed-form order checks and a process-wide
//! cache. Unit lists are built once per descriptor and shared read-only.

use crate::desc::{Ring, RingDesc};
use crate::element::{elements, RingElement};
use crate::{RingError, Result};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Hard cap on enumerated unit lists (the design limit for cached GL lists).
pub const UNIT_CACHE_LIMIT: u128 = 20_000_000;

/// Enumerate the units of a finite ring, in element-index order, exactly once
/// each. Uses an invertibility filter over the element enumeration.
pub fn units(ring: &Ring) -> Result<Vec<RingElement>> {
    let count = ring
        .element_count()
        .ok_or_else(|| RingError::Infinite(ring.to_string()))?;
    if count > UNIT_CACHE_LIMIT {
        return Err(RingError::TooLarge(format!(
            "unit enumeration over {ring} ({count} elements)"
        )));
    }
    Ok(elements(ring).filter(|e| e.is_unit()).collect())
}

/// Cached unit list, built on first use.
pub fn units_cached(ring: &Ring) -> Result<Arc<Vec<RingElement>>> {
    static CACHE: OnceLock<Mutex<HashMap<String, Arc<Vec<RingElement>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = ring.to_string();
    if let Some(hit) = cache.lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let list = Arc::new(units(ring)?);
    cache.lock().unwrap().insert(key, list.clone());
    Ok(list)
}

/// Closed-form unit group order where one is known:
/// q - 1 for fields, Euler phi for Z/m, prod(q^n - q^i) for mat(n, F_q),
/// |GL(n, Z_{p^e})| = p^((e-1)n^2) |GL(n, F_p)|, products multiply.
pub fn unit_count_closed_form(ring: &Ring) -> Option<u128> {
    match ring.as_ref() {
        RingDesc::PrimeField(p) => Some(*p as u128 - 1),
        RingDesc::ExtField { p, k, .. } => Some((*p as u128).pow(*k) - 1),
        RingDesc::Zmod(m) => Some(euler_phi(*m) as u128),
        RingDesc::Matrix { n, inner } => match inner.as_ref() {
            RingDesc::PrimeField(_) | RingDesc::ExtField { .. } => {
                let q = inner.field_order().unwrap() as u128;
                let qn = q.checked_pow(*n as u32)?;
                let mut acc: u128 = 1;
                let mut qi: u128 = 1;
                for _ in 0..*n {
                    acc = acc.checked_mul(qn - qi)?;
                    qi = qi.checked_mul(q)?;
                }
                Some(acc)
            }
            RingDesc::Zmod(m) => {
                let (p, e) = prime_power(*m)?;
                let gl_p = unit_count_closed_form(&crate::desc::mat(*n, crate::desc::gf(p)))?;
                let pe = (p as u128).checked_pow(((e - 1) as u32) * (*n as u32) * (*n as u32))?;
                gl_p.checked_mul(pe)
            }
            _ => None,
        },
        RingDesc::Product(fs) => {
            let mut acc: u128 = 1;
            for f in fs {
                acc = acc.checked_mul(unit_count_closed_form(f)?)?;
            }
            Some(acc)
        }
        RingDesc::Free { .. } => Some(2), // +1 and -1
    }
}

fn euler_phi(mut m: u64) -> u64 {
    let mut result = m;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn prime_power(m: u64) -> Option<(u64, u32)> {
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            let mut e = 0;
            let mut rest = m;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            return (rest == 1).then_some((p, e));
        }
        p += 1;
    }
    Some((m, 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::desc::{gf, mat, parse_ring, zmod};

    #[test]
    fn unit_counts_match_closed_forms() {
        for s in ["gf(4)", "gf(5)", "zmod(8)", "zmod(12)", "mat(2,gf(2))", "mat(2,gf(3))"] {
            let ring = parse_ring(s).unwrap();
            let listed = units(&ring).unwrap().len() as u128;
            assert_eq!(Some(listed), unit_count_closed_form(&ring), "ring {s}");
        }
    }

    #[test]
    fn m2f2_has_six_units() {
        let ring = mat(2, gf(2));
        assert_eq!(units(&ring).unwrap().len(), 6);
    }

    #[test]
    fn m4f2_closed_form_is_20160() {
        let ring = mat(4, gf(2));
        assert_eq!(unit_count_closed_form(&ring), Some(20160));
    }

    #[test]
    fn gl2_z4_order() {
        // |GL(2, Z_4)| = 2^4 * |GL(2, F_2)| = 96
        let ring = mat(2, zmod(4));
        assert_eq!(unit_count_closed_form(&ring), Some(96));
        assert_eq!(units(&ring).unwrap().len(), 96);
    }

    #[test]
    fn inverses_are_two_sided() {
        let ring = mat(2, gf(3));
        for u in units(&ring).unwrap() {
            let inv = u.try_invert().unwrap();
            assert!((&u * &inv).is_one());
            assert!((&inv * &u).is_one());
        }
    }
}
