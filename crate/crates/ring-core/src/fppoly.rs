//! Polynomial helpers over GF(p), used to pick extension-field moduli.
//!
//! Polynomials are coefficient vectors, little-endian, over a prime p.

pub fn pmod(a: i64, p: u64) -> u64 {
    a.rem_euclid(p as i64) as u64
}

fn trim(v: &mut Vec<u64>) {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
}

pub fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(&mut out);
    out
}

/// Remainder of a modulo the monic polynomial m.
pub fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    debug_assert_eq!(*m.last().unwrap(), 1, "modulus must be monic");
    let mut r: Vec<u64> = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    while r.len() > dm || (r.len() == dm && dm == 0) {
        if r.len() <= dm {
            break;
        }
        let lead = *r.last().unwrap();
        if lead != 0 {
            let shift = r.len() - 1 - dm;
            for (i, &c) in m.iter().enumerate() {
                let idx = i + shift;
                r[idx] = (r[idx] + (p - lead % p) * c) % p;
            }
        }
        r.pop();
        trim(&mut r);
        if r.iter().all(|&c| c == 0) {
            return vec![0];
        }
    }
    trim(&mut r);
    r
}

fn is_zero(v: &[u64]) -> bool {
    v.iter().all(|&c| c == 0)
}

/// Decode digits of `code` in base p as a polynomial.
fn decode(code: u64, p: u64) -> Vec<u64> {
    let mut v = Vec::new();
    let mut c = code;
    while c > 0 {
        v.push(c % p);
        c /= p;
    }
    if v.is_empty() {
        v.push(0);
    }
    v
}

/// Irreducibility by trial division against every monic polynomial of degree
/// 1..=deg/2. Fine for the tiny degrees used here.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    if deg == 0 {
        return false;
    }
    if deg == 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        // monic divisors of degree d: p^d candidates for the lower digits
        let lower = p.pow(d as u32);
        for code in 0..lower {
            let mut g = decode(code, p);
            g.resize(d, 0);
            g.push(1);
            if is_zero(&poly_rem(f, &g, p)) {
                return false;
            }
        }
    }
    true
}

/// The monic irreducible polynomial of degree k over GF(p) whose digit
/// encoding `sum c_i p^i` is smallest. Deterministic so that certificates
/// are reproducible.
pub fn smallest_irreducible(p: u64, k: u32) -> Vec<u64> {
    let lower = p.checked_pow(k).expect("field too large");
    for code in 0..lower {
        let mut f = decode(code, p);
        f.resize(k as usize, 0);
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over GF(p)")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_moduli() {
        assert_eq!(smallest_irreducible(2, 2), vec![1, 1, 1]); // x^2+x+1
        assert_eq!(smallest_irreducible(2, 3), vec![1, 1, 0, 1]); // x^3+x+1
        assert_eq!(smallest_irreducible(3, 2), vec![1, 0, 1]); // x^2+1
        assert_eq!(smallest_irreducible(5, 2), vec![2, 0, 1]); // x^2+2
    }

    #[test]
    fn rem_basics() {
        // x^2 mod x^2+x+1 = x+1 over GF(2)
        assert_eq!(poly_rem(&[0, 0, 1], &[1, 1, 1], 2), vec![1, 1]);
    }
}
