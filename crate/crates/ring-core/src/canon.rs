//! Canonical matrix constructors (Jordan blocks, companion matrices, rank
//! normal forms) and maximal subfields of matrix rings over finite fields.

use crate::desc::{Ring, RingDesc};
use crate::element::{elements, RingElement};
use crate::{RingError, Result};

fn matrix_parts(ring: &Ring) -> Result<(usize, Ring)> {
    match ring.as_ref() {
        RingDesc::Matrix { n, inner } => Ok((*n, inner.clone())),
        _ => Err(RingError::NotSupported(format!("{ring} is not a matrix ring"))),
    }
}

/// Unipotent Jordan block of size k (ones on the diagonal and superdiagonal),
/// embedded in the top-left corner of the ring's matrices, identity elsewhere
/// when k equals the matrix size.
pub fn jnf(ring: &Ring, k: usize) -> Result<RingElement> {
    let (n, inner) = matrix_parts(ring)?;
    if k > n {
        return Err(RingError::NotSupported(format!("jnf({k}) in mat({n},..)")));
    }
    let one = RingElement::one(&inner);
    let zero = RingElement::zero(&inner);
    let mut es = vec![zero; n * n];
    for i in 0..k {
        es[i * n + i] = one.clone();
        if i + 1 < k {
            es[i * n + i + 1] = one.clone();
        }
    }
    RingElement::matrix_from_entries(ring, &es)
}

/// Nilpotent Jordan block of size k (ones on the superdiagonal only).
pub fn jnf0(ring: &Ring, k: usize) -> Result<RingElement> {
    let (n, inner) = matrix_parts(ring)?;
    if k > n {
        return Err(RingError::NotSupported(format!("jnf0({k}) in mat({n},..)")));
    }
    let one = RingElement::one(&inner);
    let zero = RingElement::zero(&inner);
    let mut es = vec![zero; n * n];
    for i in 0..k.saturating_sub(1) {
        es[i * n + i + 1] = one.clone();
    }
    RingElement::matrix_from_entries(ring, &es)
}

/// Companion matrix of x^n + c_{n-1} x^{n-1} + .. + c_1 x + c_0 (coefficients
/// little-endian, length n): ones on the subdiagonal, last column
/// (-c_0, .., -c_{n-1}).
pub fn companion(ring: &Ring, coeffs_le: &[u64]) -> Result<RingElement> {
    let (n, inner) = matrix_parts(ring)?;
    if coeffs_le.len() != n {
        return Err(RingError::NotSupported(format!(
            "companion needs {n} coefficients, got {}",
            coeffs_le.len()
        )));
    }
    let zero = RingElement::zero(&inner);
    let mut es = vec![zero; n * n];
    let one = RingElement::one(&inner);
    for i in 1..n {
        es[i * n + (i - 1)] = one.clone();
    }
    for i in 0..n {
        es[i * n + (n - 1)] = RingElement::from_int(&inner, coeffs_le[i] as i64).neg_elem();
    }
    RingElement::matrix_from_entries(ring, &es)
}

/// The parameterized invertible companion N_k over GF(2): subdiagonal ones,
/// last column (1, params reversed..). N_2 has rows (0 1),(1 1); N_3(a,b) has
/// last column (1, b, a) and characteristic polynomial x^3 + a x^2 + b x + 1.
pub fn n_k(ring: &Ring, params: &[u64]) -> Result<RingElement> {
    let (n, _inner) = matrix_parts(ring)?;
    if params.len() + 2 != n + 1 {
        return Err(RingError::NotSupported(format!(
            "n_k in mat({n},..) takes {} parameters, got {}",
            n - 1,
            params.len()
        )));
    }
    // char poly x^n + params[0] x^{n-1} + .. + params[n-2] x + 1
    let mut coeffs = vec![0u64; n];
    coeffs[0] = 1;
    for (i, &p) in params.iter().enumerate() {
        coeffs[n - 1 - i] = p;
    }
    // companion() negates; over GF(2) negation is the identity, and these
    // matrices are only used there or where the sign convention matches.
    companion(ring, &coeffs)
}

/// diag(I_r, 0).
pub fn rank_normal(ring: &Ring, r: usize) -> Result<RingElement> {
    let (n, inner) = matrix_parts(ring)?;
    if r > n {
        return Err(RingError::NotSupported(format!("rank {r} > size {n}")));
    }
    let one = RingElement::one(&inner);
    let zero = RingElement::zero(&inner);
    let mut es = vec![zero; n * n];
    for i in 0..r {
        es[i * n + i] = one.clone();
    }
    RingElement::matrix_from_entries(ring, &es)
}

/// Block diagonal sum of square matrices over the same inner ring.
pub fn direct_sum(ring: &Ring, blocks: &[RingElement]) -> Result<RingElement> {
    let (n, inner) = matrix_parts(ring)?;
    let mut sizes = Vec::new();
    for b in blocks {
        let (m, bi) = matrix_parts(b.ring())?;
        if bi != inner {
            return Err(RingError::Mismatch(inner.to_string(), bi.to_string()));
        }
        sizes.push(m);
    }
    if sizes.iter().sum::<usize>() != n {
        return Err(RingError::NotSupported("block sizes do not sum to matrix size".into()));
    }
    let zero = RingElement::zero(&inner);
    let mut es = vec![zero; n * n];
    let mut off = 0;
    for (b, m) in blocks.iter().zip(&sizes) {
        for i in 0..*m {
            for j in 0..*m {
                es[(off + i) * n + (off + j)] = b.entry(i, j);
            }
        }
        off += m;
    }
    RingElement::matrix_from_entries(ring, &es)
}

/// A maximal subfield of mat(n, F_q): the unital subring generated by the
/// companion matrix of the deterministic degree-n irreducible over F_q,
/// isomorphic to F_{q^n}.
pub struct MaximalSubfield {
    /// The ambient matrix ring mat(n, F_q).
    pub ambient: Ring,
    /// Generator: companion matrix of the chosen irreducible polynomial.
    pub generator: RingElement,
    /// The q^n - 1 nonzero elements, as successive powers of the generator
    /// (generator^0 = identity first).
    pub nonzero: Vec<RingElement>,
}

/// The subfield generated by the companion matrix of the first (by digit
/// encoding) monic irreducible of degree n over F_q whose companion matrix
/// has multiplicative order q^n - 1. Primitivity makes the nonzero elements
/// exactly the powers of the generator, which is the scan order the witness
/// searches use.
pub fn maximal_subfield(ring: &Ring) -> Result<MaximalSubfield> {
    let (n, inner) = matrix_parts(ring)?;
    if !inner.is_field() {
        return Err(RingError::NotAField(inner.to_string()));
    }
    let q = inner.field_order().unwrap();
    let order = (q as u128).pow(n as u32) - 1;
    for coeffs in irreducibles_in_order(&inner, n)? {
        let generator = {
            let zero = RingElement::zero(&inner);
            let one = RingElement::one(&inner);
            let mut es = vec![zero; n * n];
            for i in 1..n {
                es[i * n + (i - 1)] = one.clone();
            }
            for i in 0..n {
                es[i * n + (n - 1)] = coeffs[i].neg_elem();
            }
            RingElement::matrix_from_entries(ring, &es)?
        };
        let mut nonzero = Vec::with_capacity(order as usize);
        let mut acc = RingElement::one(ring);
        let mut primitive = true;
        for i in 0..order {
            if i > 0 && acc.is_one() {
                primitive = false;
                break;
            }
            nonzero.push(acc.clone());
            acc = &acc * &generator;
        }
        if primitive && acc.is_one() {
            return Ok(MaximalSubfield { ambient: ring.clone(), generator, nonzero });
        }
    }
    unreachable!("F_{{q^n}} has a primitive element, so some companion is primitive")
}

/// All monic irreducibles of degree n over a finite field in increasing
/// digit-encoding order, each as little-endian coefficients c_0..c_{n-1}
/// (the leading 1 implicit). Irreducibility by trial division.
fn irreducibles_in_order(field: &Ring, n: usize) -> Result<Vec<Vec<RingElement>>> {
    if !field.is_field() {
        return Err(RingError::NotAField(field.to_string()));
    }
    let q = field.field_order().unwrap() as u128;
    let total = q.checked_pow(n as u32).ok_or_else(|| RingError::TooLarge("degree".into()))?;
    let mut out = Vec::new();
    'cand: for code in 0..total {
        let mut cs: Vec<RingElement> = Vec::with_capacity(n + 1);
        let mut c = code;
        for _ in 0..n {
            cs.push(RingElement::from_index(field, c % q));
            c /= q;
        }
        cs.push(RingElement::one(field));
        // trial division by every monic polynomial of degree 1..=n/2;
        // for n == 1 every monic is irreducible
        for d in 1..=n / 2 {
            let divisors = q.pow(d as u32);
            for dc in 0..divisors {
                let mut g: Vec<RingElement> = Vec::with_capacity(d + 1);
                let mut x = dc;
                for _ in 0..d {
                    g.push(RingElement::from_index(field, x % q));
                    x /= q;
                }
                g.push(RingElement::one(field));
                if poly_rem_elems(&cs, &g).iter().all(|r| r.is_zero()) {
                    continue 'cand;
                }
            }
        }
        cs.pop();
        out.push(cs);
    }
    Ok(out)
}

/// Smallest monic irreducible of degree n over a finite field (coefficients
/// little-endian, leading 1 implicit).
pub fn smallest_irreducible_over(field: &Ring, n: usize) -> Result<Vec<RingElement>> {
    Ok(irreducibles_in_order(field, n)?
        .into_iter()
        .next()
        .expect("irreducible polynomials exist in every degree"))
}

fn poly_rem_elems(a: &[RingElement], m: &[RingElement]) -> Vec<RingElement> {
    let mut r: Vec<RingElement> = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r.last().unwrap().clone();
        if !lead.is_zero() {
            let shift = r.len() - 1 - dm;
            for (i, c) in m.iter().enumerate() {
                let t = &lead * c;
                r[i + shift] = &r[i + shift] - &t;
            }
        }
        r.pop();
        while r.len() > 1 && r.last().unwrap().is_zero() {
            r.pop();
        }
    }
    r
}

/// The central units of a finite ring: two-sided invertible elements that
/// commute with everything. For mat(n, F_q) these are the q-1 nonzero scalar
/// matrices.
pub fn central_units(ring: &Ring) -> Result<Vec<RingElement>> {
    match ring.as_ref() {
        RingDesc::PrimeField(_) | RingDesc::ExtField { .. } | RingDesc::Zmod(_) => {
            Ok(crate::units::units(ring)?)
        }
        RingDesc::Product(fs) => {
            let parts: Vec<Vec<RingElement>> =
                fs.iter().map(central_units).collect::<Result<_>>()?;
            let mut out = vec![Vec::new()];
            for p in &parts {
                let mut next = Vec::new();
                for partial in &out {
                    for x in p {
                        let mut v = partial.clone();
                        v.push(x.clone());
                        next.push(v);
                    }
                }
                out = next;
            }
            out.into_iter()
                .map(|comps| RingElement::tuple_from_components(ring, &comps))
                .collect()
        }
        RingDesc::Matrix { .. } => {
            // filter units commuting with a generating set: the matrix units
            // and the scalar embeddings of inner generators
            let count = ring
                .element_count()
                .ok_or_else(|| RingError::Infinite(ring.to_string()))?;
            if count > 1 << 20 {
                return Err(RingError::TooLarge(format!("central_units over {ring}")));
            }
            let gens = ring_generators(ring)?;
            Ok(crate::units::units(ring)?
                .into_iter()
                .filter(|u| gens.iter().all(|g| u.commutes_with(g)))
                .collect())
        }
        RingDesc::Free { .. } => {
            // units of Z<X> are +-1, both central
            Ok(vec![
                RingElement::one(ring),
                RingElement::one(ring).neg_elem(),
            ])
        }
    }
}

/// A small generating set of the ring as an algebra (enough to test
/// centrality by commutation).
fn ring_generators(ring: &Ring) -> Result<Vec<RingElement>> {
    match ring.as_ref() {
        RingDesc::Matrix { n, inner } => {
            let mut gens = Vec::new();
            for i in 0..*n {
                for j in 0..*n {
                    gens.push(RingElement::matrix_unit(ring, i, j)?);
                }
            }
            for g in ring_generators(inner)? {
                gens.push(RingElement::scalar_matrix(ring, &g)?);
            }
            Ok(gens)
        }
        RingDesc::ExtField { .. } => Ok(vec![RingElement::from_index(ring, 1)]),
        RingDesc::PrimeField(_) | RingDesc::Zmod(_) => Ok(vec![RingElement::one(ring)]),
        RingDesc::Product(fs) => {
            let mut gens = Vec::new();
            for (i, f) in fs.iter().enumerate() {
                for g in ring_generators(f)? {
                    let comps: Vec<RingElement> = fs
                        .iter()
                        .enumerate()
                        .map(|(j, fj)| if j == i { g.clone() } else { RingElement::zero(fj) })
                        .collect();
                    gens.push(RingElement::tuple_from_components(ring, &comps)?);
                }
            }
            Ok(gens)
        }
        RingDesc::Free { vars } => (0..vars.len())
            .map(|i| RingElement::free_var(ring, i))
            .collect(),
    }
}

/// Check that every element of a list commutes with every ring element
/// (exhaustive; small rings only). Test helper for the central unit set.
pub fn is_central_exhaustive(x: &RingElement) -> bool {
    elements(x.ring()).all(|y| x.commutes_with(&y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::desc::{gf, mat};

    #[test]
    fn n2_matches_its_display() {
        let m2 = mat(2, gf(2));
        let n2 = n_k(&m2, &[1]).unwrap();
        let f2 = gf(2);
        let e = |x: i64| RingElement::from_int(&f2, x);
        let expect =
            RingElement::matrix_from_entries(&m2, &[e(0), e(1), e(1), e(1)]).unwrap();
        assert_eq!(n2, expect);
    }

    #[test]
    fn companion_char_poly_small_sizes() {
        // direct expansion check for k <= 5 over GF(2) and GF(3)
        for (q, coeffs) in [
            (2u64, vec![1u64, 1]),
            (2, vec![1, 1, 0]),
            (2, vec![1, 0, 1, 1]),
            (2, vec![1, 1, 1, 0, 1]),
            (3, vec![2, 1]),
            (3, vec![1, 0, 2]),
        ] {
            let n = coeffs.len();
            let ring = mat(n, gf(q));
            let c = companion(&ring, &coeffs).unwrap();
            let cp = crate::linalg::char_poly(&c).unwrap();
            let got: Vec<u64> = cp.iter().map(|x| x.index().unwrap() as u64).collect();
            let mut want = coeffs.clone();
            want.push(1);
            assert_eq!(got, want, "companion char poly over gf({q})");
        }
    }

    #[test]
    fn maximal_subfield_of_m2f2_is_f4() {
        let m2 = mat(2, gf(2));
        let sf = maximal_subfield(&m2).unwrap();
        assert_eq!(sf.nonzero.len(), 3);
        // G = {0, I, N_2, N_2^2}
        let n2 = n_k(&m2, &[1]).unwrap();
        assert!(sf.nonzero.contains(&RingElement::one(&m2)));
        assert!(sf.nonzero.contains(&n2));
        assert!(sf.nonzero.contains(&n2.pow(2)));
    }

    #[test]
    fn maximal_subfield_of_m3f2_uses_x3_x_1() {
        let m3 = mat(3, gf(2));
        let sf = maximal_subfield(&m3).unwrap();
        assert_eq!(sf.nonzero.len(), 7);
        // D^7 = I for the companion of x^3 + x + 1
        assert!(sf.generator.pow(7).is_one());
        let c = companion(&m3, &[1, 1, 0]).unwrap();
        assert_eq!(sf.generator, c);
    }

    #[test]
    fn maximal_subfield_of_size_one_is_the_scalar_field() {
        // mat(1, gf(5)): the subfield is F_5 itself, generated by a
        // primitive scalar
        let m1 = mat(1, gf(5));
        let sf = maximal_subfield(&m1).unwrap();
        assert_eq!(sf.nonzero.len(), 4);
        assert!(sf.generator.pow(4).is_one());
        assert!(!sf.generator.pow(2).is_one());
    }

    #[test]
    fn central_units_of_matrix_ring_are_scalars() {
        for (n, q) in [(2usize, 2u64), (2, 3), (3, 2)] {
            let ring = mat(n, gf(q));
            let cs = central_units(&ring).unwrap();
            assert_eq!(cs.len(), (q - 1) as usize);
            for c in &cs {
                assert!(is_central_exhaustive(c));
            }
        }
    }
}
