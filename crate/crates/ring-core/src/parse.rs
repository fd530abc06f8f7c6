//! Element text forms used by the CLI and inside certificates.
//!
//! Scalars print as their enumeration index (for extension fields the index
//! encodes the coefficients base p). Matrices print as `[a,b;c,d]`, product
//! components as `(x,y)`, free-ring elements as signed monomial sums like
//! `1 + 2*a*b - c`.

use crate::desc::{Ring, RingDesc};
use crate::element::RingElement;
use crate::free::Word;
use crate::{RingError, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Render an element in the canonical text form.
pub fn render(e: &RingElement) -> String {
    match e.ring().as_ref() {
        RingDesc::PrimeField(_) | RingDesc::Zmod(_) | RingDesc::ExtField { .. } => {
            e.index().unwrap().to_string()
        }
        RingDesc::Matrix { n, .. } => {
            let mut s = String::from("[");
            for i in 0..*n {
                if i > 0 {
                    s.push(';');
                }
                for j in 0..*n {
                    if j > 0 {
                        s.push(',');
                    }
                    s.push_str(&render(&e.entry(i, j)));
                }
            }
            s.push(']');
            s
        }
        RingDesc::Product(fs) => {
            let mut s = String::from("(");
            for i in 0..fs.len() {
                if i > 0 {
                    s.push(',');
                }
                s.push_str(&render(&e.component(i)));
            }
            s.push(')');
            s
        }
        RingDesc::Free { vars } => {
            let words = e.free_words().unwrap();
            if words.is_empty() {
                return "0".into();
            }
            let mut s = String::new();
            for (i, (w, c)) in words.iter().enumerate() {
                let neg = c.is_negative();
                let abs = c.abs();
                if i == 0 {
                    if neg {
                        s.push('-');
                    }
                } else {
                    s.push_str(if neg { " - " } else { " + " });
                }
                let show_coeff = !abs.is_one() || w.is_empty();
                if show_coeff {
                    s.push_str(&abs.to_string());
                }
                for (vi, v) in w.0.iter().enumerate() {
                    if vi > 0 || show_coeff {
                        s.push('*');
                    }
                    s.push_str(&vars[*v as usize]);
                }
            }
            s
        }
    }
}

/// Parse the canonical element form for the given ring.
pub fn parse_element(ring: &Ring, s: &str) -> Result<RingElement> {
    let s = s.trim();
    match ring.as_ref() {
        RingDesc::PrimeField(_) | RingDesc::Zmod(_) | RingDesc::ExtField { .. } => {
            let idx: i128 = s
                .parse()
                .map_err(|_| RingError::Parse(format!("bad scalar `{s}`")))?;
            let count = ring.element_count().unwrap() as i128;
            let idx = idx.rem_euclid(count);
            Ok(RingElement::from_index(ring, idx as u128))
        }
        RingDesc::Matrix { n, inner } => {
            let body = s
                .strip_prefix('[')
                .and_then(|t| t.strip_suffix(']'))
                .ok_or_else(|| RingError::Parse(format!("matrix must look like [..;..]: `{s}`")))?;
            let rows: Vec<&str> = split_top_level(body, ';');
            if rows.len() != *n {
                return Err(RingError::Parse(format!("expected {n} rows, got {}", rows.len())));
            }
            let mut entries = Vec::with_capacity(n * n);
            for row in rows {
                let cells = split_top_level(row, ',');
                if cells.len() != *n {
                    return Err(RingError::Parse(format!(
                        "expected {n} entries per row, got {}",
                        cells.len()
                    )));
                }
                for cell in cells {
                    entries.push(parse_element(inner, cell)?);
                }
            }
            RingElement::matrix_from_entries(ring, &entries)
        }
        RingDesc::Product(fs) => {
            let body = s
                .strip_prefix('(')
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| RingError::Parse(format!("tuple must look like (..,..): `{s}`")))?;
            let cells = split_top_level(body, ',');
            if cells.len() != fs.len() {
                return Err(RingError::Parse(format!(
                    "expected {} components, got {}",
                    fs.len(),
                    cells.len()
                )));
            }
            let comps: Vec<RingElement> = cells
                .iter()
                .zip(fs)
                .map(|(c, f)| parse_element(f, c))
                .collect::<Result<_>>()?;
            RingElement::tuple_from_components(ring, &comps)
        }
        RingDesc::Free { vars } => parse_free(ring, vars, s),
    }
}

/// Split on a separator, ignoring separators nested inside [..] or (..).
pub fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

fn parse_free(ring: &Ring, vars: &[String], s: &str) -> Result<RingElement> {
    // signed sum of terms; term = [int] factors separated by '*'
    let mut acc = RingElement::zero(ring);
    let mut rest = s.trim();
    let mut sign = BigInt::one();
    if let Some(r) = rest.strip_prefix('-') {
        sign = -sign;
        rest = r.trim_start();
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r.trim_start();
    }
    loop {
        let term_end = rest
            .char_indices()
            .find(|(_, c)| *c == '+' || *c == '-')
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        let term = rest[..term_end].trim();
        if term.is_empty() {
            return Err(RingError::Parse(format!("empty term in `{s}`")));
        }
        let mut coeff = sign.clone();
        let mut word: Vec<u32> = Vec::new();
        for factor in term.split('*') {
            let f = factor.trim();
            if f.chars().all(|c| c.is_ascii_digit()) {
                let n: BigInt = f
                    .parse()
                    .map_err(|_| RingError::Parse(format!("bad integer `{f}`")))?;
                coeff *= n;
            } else if let Some(vi) = vars.iter().position(|v| v == f) {
                word.push(vi as u32);
            } else {
                return Err(RingError::Parse(format!("unknown variable `{f}`")));
            }
        }
        if !coeff.is_zero() {
            let mut term_elem = RingElement::from_parts_free(ring, Word(word), coeff)?;
            term_elem = acc.try_add(&term_elem)?;
            acc = term_elem;
        }
        if term_end == rest.len() {
            break;
        }
        sign = if rest.as_bytes()[term_end] == b'-' {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        rest = rest[term_end + 1..].trim_start();
    }
    Ok(acc)
}

impl RingElement {
    fn from_parts_free(ring: &Ring, w: Word, c: BigInt) -> Result<RingElement> {
        // build c * w as a product of vars times the constant
        let mut acc = RingElement::from_int_big(ring, c)?;
        for v in w.0 {
            let var = RingElement::free_var(ring, v as usize)?;
            acc = acc.try_mul(&var)?;
        }
        Ok(acc)
    }

    fn from_int_big(ring: &Ring, c: BigInt) -> Result<RingElement> {
        match ring.as_ref() {
            RingDesc::Free { .. } => {
                use crate::free::FreePoly;
                use crate::Value;
                Ok(RingElement::from_parts(
                    ring.clone(),
                    Value::Free(FreePoly::constant(c)),
                ))
            }
            _ => Err(RingError::NotSupported("from_int_big on non-free ring".into())),
        }
    }
}

impl std::fmt::Display for RingElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", render(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::desc::parse_ring;

    #[test]
    fn round_trip_matrix() {
        let ring = parse_ring("mat(2,gf(3))").unwrap();
        for i in 0..81u128 {
            let e = RingElement::from_index(&ring, i);
            let s = render(&e);
            assert_eq!(parse_element(&ring, &s).unwrap(), e);
        }
    }

    #[test]
    fn round_trip_product() {
        let ring = parse_ring("prod(gf(2),mat(2,gf(2)))").unwrap();
        for i in 0..32u128 {
            let e = RingElement::from_index(&ring, i);
            assert_eq!(parse_element(&ring, &render(&e)).unwrap(), e);
        }
    }

    #[test]
    fn free_forms() {
        let ring = parse_ring("free(a,b)").unwrap();
        let a = RingElement::free_var(&ring, 0).unwrap();
        let b = RingElement::free_var(&ring, 1).unwrap();
        let one = RingElement::one(&ring);
        let expr = &(&one + &(&a * &b)) - &(&b * &a);
        let s = render(&expr);
        assert_eq!(s, "1 + a*b - b*a");
        assert_eq!(parse_element(&ring, &s).unwrap(), expr);
        assert_eq!(render(&RingElement::zero(&ring)), "0");
        assert_eq!(parse_element(&ring, "0").unwrap(), RingElement::zero(&ring));
    }
}
