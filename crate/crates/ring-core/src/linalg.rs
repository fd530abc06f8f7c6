//! Exact linear algebra over the descriptor zoo: matrix inversion, rank over
//! fields, determinants and characteristic polynomials over commutative
//! coefficient rings.
//!
//! Inversion strategy: matrices over fields are inverted by Gaussian
//! elimination; matrices over Z/m by adjugate and determinant; matrices over
//! matrix rings or products are flattened first (mat(n, mat(m, F)) = mat(nm, F)
//! and mat(n, prod(..)) = prod(mat(n, ..))).

use crate::desc::{mat, prod, Ring, RingDesc};
use crate::element::{v_add, v_inv, v_mul, v_neg, v_one, v_sub, v_zero, RingElement, Value};
use crate::{RingError, Result};

/// Invert an n x n matrix value over `inner`. Returns `None` when the matrix
/// is not invertible.
pub(crate) fn invert_matrix_value(n: usize, inner: &Ring, a: &Value) -> Option<Value> {
    match inner.as_ref() {
        RingDesc::PrimeField(_) | RingDesc::ExtField { .. } => gauss_invert(n, inner, a),
        RingDesc::Zmod(_) => adjugate_invert(n, inner, a),
        RingDesc::Matrix { n: m, inner: inner2 } => {
            let flat = flatten_block_matrix(n, *m, a);
            let res = invert_matrix_value(n * m, inner2, &flat)?;
            Some(unflatten_block_matrix(n, *m, &res))
        }
        RingDesc::Product(fs) => {
            let Value::Matrix(es) = a else { unreachable!() };
            // Split the matrix componentwise, invert each factor matrix.
            let mut out_components = Vec::with_capacity(fs.len());
            for (ci, f) in fs.iter().enumerate() {
                let comp_entries: Vec<Value> = es
                    .iter()
                    .map(|e| match e {
                        Value::Tuple(vs) => vs[ci].clone(),
                        _ => unreachable!(),
                    })
                    .collect();
                out_components.push(invert_matrix_value(n, f, &Value::Matrix(comp_entries))?);
            }
            // Reassemble entrywise.
            let mut es_out = Vec::with_capacity(n * n);
            for idx in 0..n * n {
                let tuple: Vec<Value> = out_components
                    .iter()
                    .map(|c| match c {
                        Value::Matrix(v) => v[idx].clone(),
                        _ => unreachable!(),
                    })
                    .collect();
                es_out.push(Value::Tuple(tuple));
            }
            Some(Value::Matrix(es_out))
        }
        RingDesc::Free { .. } => None,
    }
}

fn flatten_block_matrix(n: usize, m: usize, a: &Value) -> Value {
    let Value::Matrix(blocks) = a else { unreachable!() };
    let big = n * m;
    let mut out = vec![Value::Scalar(0); big * big];
    for bi in 0..n {
        for bj in 0..n {
            let Value::Matrix(entries) = &blocks[bi * n + bj] else { unreachable!() };
            for i in 0..m {
                for j in 0..m {
                    out[(bi * m + i) * big + (bj * m + j)] = entries[i * m + j].clone();
                }
            }
        }
    }
    Value::Matrix(out)
}

fn unflatten_block_matrix(n: usize, m: usize, a: &Value) -> Value {
    let Value::Matrix(flat) = a else { unreachable!() };
    let big = n * m;
    let mut blocks = Vec::with_capacity(n * n);
    for bi in 0..n {
        for bj in 0..n {
            let mut entries = Vec::with_capacity(m * m);
            for i in 0..m {
                for j in 0..m {
                    entries.push(flat[(bi * m + i) * big + (bj * m + j)].clone());
                }
            }
            blocks.push(Value::Matrix(entries));
        }
    }
    Value::Matrix(blocks)
}

/// Gauss-Jordan over a field.
fn gauss_invert(n: usize, field: &Ring, a: &Value) -> Option<Value> {
    let Value::Matrix(es) = a else { unreachable!() };
    let mut m: Vec<Value> = es.clone();
    let mut inv: Vec<Value> = match v_one(&mat(n, field.clone())) {
        Value::Matrix(es) => es,
        _ => unreachable!(),
    };
    let zero = v_zero(field);
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| m[r * n + col] != zero)?;
        if pivot_row != col {
            for j in 0..n {
                m.swap(pivot_row * n + j, col * n + j);
                inv.swap(pivot_row * n + j, col * n + j);
            }
        }
        let pinv = v_inv(field, &m[col * n + col])?;
        for j in 0..n {
            m[col * n + j] = v_mul(field, &pinv, &m[col * n + j]);
            inv[col * n + j] = v_mul(field, &pinv, &inv[col * n + j]);
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let factor = m[r * n + col].clone();
            if factor == zero {
                continue;
            }
            for j in 0..n {
                let t = v_mul(field, &factor, &m[col * n + j]);
                m[r * n + j] = v_sub(field, &m[r * n + j], &t);
                let t = v_mul(field, &factor, &inv[col * n + j]);
                inv[r * n + j] = v_sub(field, &inv[r * n + j], &t);
            }
        }
    }
    Some(Value::Matrix(inv))
}

/// Adjugate inversion over a commutative ring: invertible iff det is a unit.
fn adjugate_invert(n: usize, inner: &Ring, a: &Value) -> Option<Value> {
    let Value::Matrix(es) = a else { unreachable!() };
    let d = det_value(n, inner, es);
    let dinv = v_inv(inner, &d)?;
    let mut adj = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            // adj[i][j] = (-1)^{i+j} * minor(j, i)
            let minor = minor_value(n, inner, es, j, i);
            let c = if (i + j) % 2 == 0 { minor } else { v_neg(inner, &minor) };
            adj.push(v_mul(inner, &dinv, &c));
        }
    }
    Some(Value::Matrix(adj))
}

fn minor_value(n: usize, inner: &Ring, es: &[Value], row: usize, col: usize) -> Value {
    let mut sub = Vec::with_capacity((n - 1) * (n - 1));
    for i in 0..n {
        if i == row {
            continue;
        }
        for j in 0..n {
            if j == col {
                continue;
            }
            sub.push(es[i * n + j].clone());
        }
    }
    det_value(n - 1, inner, &sub)
}

/// Determinant by cofactor expansion; fine for the small sizes used here.
fn det_value(n: usize, inner: &Ring, es: &[Value]) -> Value {
    match n {
        0 => v_one(inner),
        1 => es[0].clone(),
        _ => {
            let mut acc = v_zero(inner);
            for j in 0..n {
                if es[j] == v_zero(inner) {
                    continue;
                }
                let minor = minor_value(n, inner, es, 0, j);
                let term = v_mul(inner, &es[j], &minor);
                acc = if j % 2 == 0 {
                    v_add(inner, &acc, &term)
                } else {
                    v_sub(inner, &acc, &term)
                };
            }
            acc
        }
    }
}

/// Determinant of a square matrix over a commutative inner ring.
pub fn det(a: &RingElement) -> Result<RingElement> {
    match (a.ring().as_ref(), a.value()) {
        (RingDesc::Matrix { n, inner }, Value::Matrix(es)) => {
            if !inner.is_commutative() {
                return Err(RingError::NotSupported(format!(
                    "determinant over noncommutative inner ring {inner}"
                )));
            }
            Ok(RingElement::from_parts(
                inner.clone(),
                det_value(*n, inner, es),
            ))
        }
        _ => Err(RingError::NotSupported("det on non-matrix element".into())),
    }
}

/// Row rank of a matrix over a field, by Gaussian elimination.
pub fn rank(a: &RingElement) -> Result<usize> {
    match (a.ring().as_ref(), a.value()) {
        (RingDesc::Matrix { n, inner }, Value::Matrix(es)) => {
            if !inner.is_field() {
                return Err(RingError::NotAField(inner.to_string()));
            }
            Ok(rank_value(*n, *n, inner, es))
        }
        _ => Err(RingError::NotSupported("rank on non-matrix element".into())),
    }
}

/// Rank of a rectangular matrix over a field, entries row-major.
pub fn rank_rect(rows: usize, cols: usize, field: &Ring, entries: &[RingElement]) -> usize {
    let es: Vec<Value> = entries.iter().map(|e| e.value().clone()).collect();
    rank_value(rows, cols, field, &es)
}

fn rank_value(rows: usize, cols: usize, field: &Ring, es: &[Value]) -> usize {
    let zero = v_zero(field);
    let mut m: Vec<Value> = es.to_vec();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| m[i * cols + c] != zero) else {
            continue;
        };
        for j in 0..cols {
            m.swap(p * cols + j, r * cols + j);
        }
        let pinv = v_inv(field, &m[r * cols + c]).expect("field pivot");
        for j in 0..cols {
            m[r * cols + j] = v_mul(field, &pinv, &m[r * cols + j]);
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = m[i * cols + c].clone();
            if f == zero {
                continue;
            }
            for j in 0..cols {
                let t = v_mul(field, &f, &m[r * cols + j]);
                m[i * cols + j] = v_sub(field, &m[i * cols + j], &t);
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Kernel of a matrix over a field, as a basis of column vectors
/// (each vector is a Vec of field elements of length n).
pub fn kernel_basis(a: &RingElement) -> Result<Vec<Vec<RingElement>>> {
    let (n, field, es) = match (a.ring().as_ref(), a.value()) {
        (RingDesc::Matrix { n, inner }, Value::Matrix(es)) => {
            if !inner.is_field() {
                return Err(RingError::NotAField(inner.to_string()));
            }
            (*n, inner.clone(), es.clone())
        }
        _ => return Err(RingError::NotSupported("kernel_basis on non-matrix".into())),
    };
    let zero = v_zero(&field);
    let mut m = es;
    // reduced row echelon form
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..n).find(|&i| m[i * n + c] != zero) else {
            continue;
        };
        for j in 0..n {
            m.swap(p * n + j, r * n + j);
        }
        let pinv = v_inv(&field, &m[r * n + c]).expect("field pivot");
        for j in 0..n {
            m[r * n + j] = v_mul(&field, &pinv, &m[r * n + j]);
        }
        for i in 0..n {
            if i == r {
                continue;
            }
            let f = m[i * n + c].clone();
            if f == zero {
                continue;
            }
            for j in 0..n {
                let t = v_mul(&field, &f, &m[r * n + j]);
                m[i * n + j] = v_sub(&field, &m[i * n + j], &t);
            }
        }
        pivots.push(c);
        r += 1;
        if r == n {
            break;
        }
    }
    let mut basis = Vec::new();
    for free_col in (0..n).filter(|c| !pivots.contains(c)) {
        let mut vec = vec![v_zero(&field); n];
        vec[free_col] = v_one(&field);
        for (ri, &pc) in pivots.iter().enumerate() {
            vec[pc] = v_neg(&field, &m[ri * n + free_col]);
        }
        basis.push(
            vec.into_iter()
                .map(|v| RingElement::from_parts(field.clone(), v))
                .collect(),
        );
    }
    Ok(basis)
}

/// Characteristic polynomial det(xI - A) of a matrix over a field, returned
/// as coefficients little-endian (length n+1, monic). Computed by cofactor
/// expansion with polynomial entries; intended for small n.
pub fn char_poly(a: &RingElement) -> Result<Vec<RingElement>> {
    let (n, field, es) = match (a.ring().as_ref(), a.value()) {
        (RingDesc::Matrix { n, inner }, Value::Matrix(es)) => {
            if !inner.is_field() {
                return Err(RingError::NotAField(inner.to_string()));
            }
            (*n, inner.clone(), es.clone())
        }
        _ => return Err(RingError::NotSupported("char_poly on non-matrix".into())),
    };
    // entries of xI - A as poly vectors (little-endian over the field)
    let pz = || vec![v_zero(&field)];
    let mut pm: Vec<Vec<Value>> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let c0 = v_neg(&field, &es[i * n + j]);
            if i == j {
                pm.push(vec![c0, v_one(&field)]);
            } else if c0 == v_zero(&field) {
                pm.push(pz());
            } else {
                pm.push(vec![c0]);
            }
        }
    }
    let coeffs = poly_det(n, &field, &pm);
    Ok(coeffs
        .into_iter()
        .map(|c| RingElement::from_parts(field.clone(), c))
        .collect())
}

fn poly_add(field: &Ring, a: &[Value], b: &[Value]) -> Vec<Value> {
    let n = a.len().max(b.len());
    let z = v_zero(field);
    (0..n)
        .map(|i| v_add(field, a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
        .collect()
}

fn poly_mul_f(field: &Ring, a: &[Value], b: &[Value]) -> Vec<Value> {
    let mut out = vec![v_zero(field); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let t = v_mul(field, x, y);
            out[i + j] = v_add(field, &out[i + j], &t);
        }
    }
    out
}

fn poly_neg_f(field: &Ring, a: &[Value]) -> Vec<Value> {
    a.iter().map(|x| v_neg(field, x)).collect()
}

fn poly_det(n: usize, field: &Ring, pm: &[Vec<Value>]) -> Vec<Value> {
    if n == 1 {
        return pm[0].clone();
    }
    let mut acc = vec![v_zero(field)];
    for j in 0..n {
        let mut sub = Vec::with_capacity((n - 1) * (n - 1));
        for i in 1..n {
            for jj in 0..n {
                if jj != j {
                    sub.push(pm[i * n + jj].clone());
                }
            }
        }
        let minor = poly_det(n - 1, field, &sub);
        let term = poly_mul_f(field, &pm[j], &minor);
        let term = if j % 2 == 0 { term } else { poly_neg_f(field, &term) };
        acc = poly_add(field, &acc, &term);
    }
    acc
}

/// mat(n, prod(A, B, ..)) viewed as prod(mat(n, A), mat(n, B), ..).
pub fn split_matrix_over_product(a: &RingElement) -> Result<Vec<RingElement>> {
    match (a.ring().as_ref(), a.value()) {
        (RingDesc::Matrix { n, inner }, Value::Matrix(es)) => match inner.as_ref() {
            RingDesc::Product(fs) => {
                let mut out = Vec::with_capacity(fs.len());
                for (ci, f) in fs.iter().enumerate() {
                    let comp: Vec<Value> = es
                        .iter()
                        .map(|e| match e {
                            Value::Tuple(vs) => vs[ci].clone(),
                            _ => unreachable!(),
                        })
                        .collect();
                    out.push(RingElement::from_parts(
                        mat(*n, f.clone()),
                        Value::Matrix(comp),
                    ));
                }
                Ok(out)
            }
            _ => Err(RingError::NotSupported("inner ring is not a product".into())),
        },
        _ => Err(RingError::NotSupported("not a matrix element".into())),
    }
}

/// prod(mat(n, A), mat(n, B), ..) reassembled into mat(n, prod(A, B, ..)).
pub fn join_matrix_over_product(parts: &[RingElement]) -> Result<RingElement> {
    let (n, inners): (usize, Vec<Ring>) = {
        let mut n0 = None;
        let mut inners = Vec::new();
        for p in parts {
            match p.ring().as_ref() {
                RingDesc::Matrix { n, inner } => {
                    if *n0.get_or_insert(*n) != *n {
                        return Err(RingError::NotSupported("mismatched matrix sizes".into()));
                    }
                    inners.push(inner.clone());
                }
                _ => return Err(RingError::NotSupported("non-matrix part".into())),
            }
        }
        (n0.ok_or_else(|| RingError::NotSupported("empty part list".into()))?, inners)
    };
    let ring = mat(n, prod(inners));
    let mut es = Vec::with_capacity(n * n);
    for idx in 0..n * n {
        let tuple: Vec<Value> = parts
            .iter()
            .map(|p| match p.value() {
                Value::Matrix(v) => v[idx].clone(),
                _ => unreachable!(),
            })
            .collect();
        es.push(Value::Tuple(tuple));
    }
    Ok(RingElement::from_parts(ring, Value::Matrix(es)))
}
