//! Peirce-corner constructions: the generic corner lift (invertible u with
//! u + b, u + c invertible assembled from relatively invertible corner data),
//! the corner composition proving closure of the property under matrix
//! enlargement, and the triangular witness for pairs whose first member has a
//! zero block column.

use crate::search::find_witness;
use ring_core::linalg::rank;
use ring_core::{mat, Ring, RingDesc, RingElement, RingError};

/// x in the corner eRe is relatively invertible iff x + (1 - e) is invertible
/// in R; the relative inverse is e (x + 1 - e)^{-1} e.
pub fn relative_inverse(
    e: &RingElement,
    x: &RingElement,
) -> Option<RingElement> {
    let one = RingElement::one(x.ring());
    let shifted = &(x + &one) - e;
    let inv = shifted.try_invert()?;
    Some(&(e * &inv) * e)
}

/// The corner lift: given an idempotent e, elements b and c with c = ec,
/// u_0 in eRe relatively invertible with u_0 + ece and u_0 + ebe relatively
/// invertible, and v_0 in (1-e)R(1-e) relatively invertible with
/// v_0 + (1-e)b(1-e) relatively invertible, the element
/// u = u_0 + v_0 - eb(1-e) is invertible with u + b and u + c invertible.
pub fn lemma_corner_lift(
    e: &RingElement,
    b: &RingElement,
    c: &RingElement,
    u0: &RingElement,
    v0: &RingElement,
) -> ring_core::Result<RingElement> {
    let ring = e.ring();
    let one = RingElement::one(ring);
    let f = &one - e; // 1 - e
    if !(e * e).eq(e) {
        return Err(RingError::NotSupported("e must be idempotent".into()));
    }
    if (e * c) != *c {
        return Err(RingError::NotSupported("need c = ec".into()));
    }
    let ece = &(e * c) * e;
    let ebe = &(e * b) * e;
    let fbf = &(&f * b) * &f;
    for (name, corner, x) in [
        ("u0", e, u0.clone()),
        ("u0 + ece", e, u0 + &ece),
        ("u0 + ebe", e, u0 + &ebe),
        ("v0", &f, v0.clone()),
        ("v0 + (1-e)b(1-e)", &f, v0 + &fbf),
    ] {
        if relative_inverse(corner, &x).is_none() {
            return Err(RingError::NotSupported(format!(
                "{name} is not relatively invertible"
            )));
        }
    }
    let ebf = &(e * b) * &f;
    let u = &(u0 + v0) - &ebf;
    // guaranteed by the 1 + nilpotent factorizations; re-verified directly
    if !u.is_unit() || !(&u + b).is_unit() || !(&u + c).is_unit() {
        return Err(RingError::NotSupported(
            "corner lift postcondition failed; arithmetic bug".into(),
        ));
    }
    Ok(u)
}

fn matrix_parts(ring: &Ring) -> ring_core::Result<(usize, Ring)> {
    match ring.as_ref() {
        RingDesc::Matrix { n, inner } => Ok((*n, inner.clone())),
        _ => Err(RingError::NotSupported(format!("{ring} is not a matrix ring"))),
    }
}

fn block(ring_sub: &Ring, a: &RingElement, i0: usize, j0: usize, sz: usize) -> RingElement {
    let entries: Vec<RingElement> = (0..sz)
        .flat_map(|i| (0..sz).map(move |j| (i, j)))
        .map(|(i, j)| a.entry(i0 + i, j0 + j))
        .collect();
    RingElement::matrix_from_entries(ring_sub, &entries).unwrap()
}

/// Corner composition over mat(n, F) with e = diag(I_m, 0): if both corner
/// rings admit witnesses for the projected tuples, assemble a witness for the
/// whole tuple as w_top + w_bottom, where the bottom tuple carries the
/// Schur-style correction c_i = BR_i - BL_i ubar_i TR_i.
pub fn corner_composition(
    ring: &Ring,
    m: usize,
    tuple: &[RingElement],
) -> ring_core::Result<RingElement> {
    let (n, inner) = matrix_parts(ring)?;
    if m == 0 || m >= n {
        return Err(RingError::NotSupported("corner size must be 0 < m < n".into()));
    }
    let top = mat(m, inner.clone());
    let bottom = mat(n - m, inner.clone());

    // top corner: witness for the projected tuple {TL_i}
    let tl: Vec<RingElement> = tuple.iter().map(|a| block(&top, a, 0, 0, m)).collect();
    let w_top = find_witness(&top, &tl)?
        .ok_or_else(|| RingError::NotSupported("top corner admits no witness".into()))?;

    // corrected bottom tuple: BR_i - BL_i (TL_i + w_top)^{-1} TR_i
    let mut corrected = Vec::with_capacity(tuple.len());
    for (a, tl_i) in tuple.iter().zip(&tl) {
        let u_i = tl_i + &w_top;
        let ubar = u_i.try_invert().expect("witness property");
        let br = block(&bottom, a, m, m, n - m);
        // BL_i: (n-m) x m and TR_i: m x (n-m) rectangular blocks; assemble the
        // product BL ubar TR entrywise
        let mut entries = Vec::with_capacity((n - m) * (n - m));
        for i in 0..n - m {
            for j in 0..n - m {
                let mut acc = RingElement::zero(&inner);
                for p in 0..m {
                    for q in 0..m {
                        let t = &(&a.entry(m + i, p) * &ubar.entry(p, q)) * &a.entry(q, m + j);
                        acc = &acc + &t;
                    }
                }
                entries.push(acc);
            }
        }
        let correction = RingElement::matrix_from_entries(&bottom, &entries)?;
        corrected.push(&br - &correction);
    }
    let w_bottom = find_witness(&bottom, &corrected)?
        .ok_or_else(|| RingError::NotSupported("bottom corner admits no witness".into()))?;

    // assemble w = w_top (+) w_bottom and verify
    let zero = RingElement::zero(&inner);
    let mut entries = vec![zero; n * n];
    for i in 0..m {
        for j in 0..m {
            entries[i * n + j] = w_top.entry(i, j);
        }
    }
    for i in 0..n - m {
        for j in 0..n - m {
            entries[(m + i) * n + (m + j)] = w_bottom.entry(i, j);
        }
    }
    let w = RingElement::matrix_from_entries(ring, &entries)?;
    if !w.is_unit() || tuple.iter().any(|a| !(&w + a).is_unit()) {
        return Err(RingError::NotSupported(
            "corner composition postcondition failed; arithmetic bug".into(),
        ));
    }
    Ok(w)
}

/// Triangular witness for B = F (+) 0 over mat(n, F_q), q >= 3: triangularize
/// F to rank normal form, cyclically shift so B becomes strictly upper
/// triangular, pick diagonal two-translate witnesses u_i against C's
/// diagonal, and cancel C's strict upper part. Returns the witness for the
/// original pair. Not applicable over GF(2) (no two-translate witnesses on
/// the diagonal).
pub fn triangular_witness(
    ring: &Ring,
    b: &RingElement,
    c: &RingElement,
) -> ring_core::Result<RingElement> {
    let (n, inner) = matrix_parts(ring)?;
    if !inner.is_field() {
        return Err(RingError::NotAField(inner.to_string()));
    }
    let q = inner.field_order().unwrap();
    if q < 3 {
        return Err(RingError::NotSupported(
            "the diagonal step needs two-translate witnesses; not applicable over gf(2)".into(),
        ));
    }
    // requires the last row and column of B to vanish (B = F (+) 0)
    for i in 0..n {
        if !b.entry(n - 1, i).is_zero() || !b.entry(i, n - 1).is_zero() {
            return Err(RingError::NotSupported("B must have the block form F (+) 0".into()));
        }
    }

    // rank-normalize the top-left (n-1) block: V F W = diag(I_r, 0)
    let r = rank(b)?;
    // row/column reduce B with invertible V, W of full size, fixing the last
    // coordinate: do full-size reduction (it cannot mix the zero last line)
    let (v, w) = rank_decompose_generic(ring, b)?;
    let b1 = &(&v * b) * &w;
    // cyclic column shift
    let mut p_entries = vec![RingElement::zero(&inner); n * n];
    let one = RingElement::one(&inner);
    for i in 0..n {
        p_entries[i * n + ((i + 1) % n)] = one.clone();
    }
    let p = RingElement::matrix_from_entries(ring, &p_entries)?;
    let b2 = &b1 * &p;
    let c2 = &(&(&v * c) * &w) * &p;
    // b2 is strictly upper triangular
    for i in 0..n {
        for j in 0..=i {
            if !b2.entry(i, j).is_zero() {
                return Err(RingError::NotSupported(
                    "shifted form is not strictly upper triangular; arithmetic bug".into(),
                ));
            }
        }
    }
    let _ = r;

    // diagonal witnesses: u_i a unit with u_i + c2[i][i] a unit
    let mut entries = vec![RingElement::zero(&inner); n * n];
    for i in 0..n {
        let cii = c2.entry(i, i);
        let u_i = ring_core::elements_of(&inner)
            .find(|u| u.is_unit() && (u + &cii).is_unit())
            .expect("fields with q >= 3 have two-translate witnesses");
        entries[i * n + i] = u_i;
        for j in i + 1..n {
            entries[i * n + j] = c2.entry(i, j).neg_elem();
        }
    }
    let u2 = RingElement::matrix_from_entries(ring, &entries)?;
    debug_assert!(u2.is_unit() && (&u2 + &b2).is_unit() && (&u2 + &c2).is_unit());

    // map back: U = V^{-1} U2 P^{-1} W^{-1}
    let vinv = v.try_invert().unwrap();
    let winv = w.try_invert().unwrap();
    let pinv = p.try_invert().unwrap();
    let u = &(&vinv * &u2) * &(&pinv * &winv);
    if !u.is_unit() || !(&u + b).is_unit() || !(&u + c).is_unit() {
        return Err(RingError::NotSupported(
            "triangular witness postcondition failed; arithmetic bug".into(),
        ));
    }
    Ok(u)
}

/// V, W invertible with V A W in rank normal form, over a field.
fn rank_decompose_generic(
    ring: &Ring,
    a: &RingElement,
) -> ring_core::Result<(RingElement, RingElement)> {
    let (n, inner) = matrix_parts(ring)?;
    let mut m: Vec<RingElement> = (0..n * n)
        .map(|idx| a.entry(idx / n, idx % n))
        .collect();
    let mut v: Vec<RingElement> = match RingElement::one(ring) {
        e => (0..n * n).map(|idx| e.entry(idx / n, idx % n)).collect(),
    };
    let mut r = 0;
    for col in 0..n {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| !m[i * n + col].is_zero()) else {
            continue;
        };
        for j in 0..n {
            m.swap(p * n + j, r * n + j);
            v.swap(p * n + j, r * n + j);
        }
        let pinv = m[r * n + col].try_invert().unwrap();
        for j in 0..n {
            m[r * n + j] = &pinv * &m[r * n + j];
            v[r * n + j] = &pinv * &v[r * n + j];
        }
        for i in 0..n {
            if i != r && !m[i * n + col].is_zero() {
                let f = m[i * n + col].clone();
                for j in 0..n {
                    m[i * n + j] = &m[i * n + j] - &(&f * &m[r * n + j]);
                    v[i * n + j] = &v[i * n + j] - &(&f * &v[r * n + j]);
                }
            }
        }
        r += 1;
    }
    // column reduction via the transpose trick
    let mut wt: Vec<RingElement> = {
        let e = RingElement::one(ring);
        (0..n * n).map(|idx| e.entry(idx / n, idx % n)).collect()
    };
    let mut mt: Vec<RingElement> = (0..n * n).map(|idx| m[(idx % n) * n + idx / n].clone()).collect();
    let mut rr = 0;
    for col in 0..n {
        if rr == n {
            break;
        }
        let Some(p) = (rr..n).find(|&i| !mt[i * n + col].is_zero()) else {
            continue;
        };
        for j in 0..n {
            mt.swap(p * n + j, rr * n + j);
            wt.swap(p * n + j, rr * n + j);
        }
        let pinv = mt[rr * n + col].try_invert().unwrap();
        for j in 0..n {
            mt[rr * n + j] = &pinv * &mt[rr * n + j];
            wt[rr * n + j] = &pinv * &wt[rr * n + j];
        }
        for i in 0..n {
            if i != rr && !mt[i * n + col].is_zero() {
                let f = mt[i * n + col].clone();
                for j in 0..n {
                    mt[i * n + j] = &mt[i * n + j] - &(&f * &mt[rr * n + j]);
                    wt[i * n + j] = &wt[i * n + j] - &(&f * &wt[rr * n + j]);
                }
            }
        }
        rr += 1;
    }
    let v_mat = RingElement::matrix_from_entries(ring, &v)?;
    let w_mat = {
        // w = (wt)^T
        let entries: Vec<RingElement> = (0..n * n).map(|idx| wt[(idx % n) * n + idx / n].clone()).collect();
        RingElement::matrix_from_entries(ring, &entries)?
    };
    let _ = inner;
    Ok((v_mat, w_mat))
}
