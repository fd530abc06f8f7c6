//! The combinatorial word model of Q_k over the free ring: Q_k is the sum,
//! each with coefficient one, of the words a_{i_1} a_{i_2} .. a_{i_l} with
//! strictly descending indices, odd gaps between consecutive indices, odd
//! terminal index, head index of the same parity as k, plus the empty word
//! exactly when k is even. The model is cross-checked against the recurrence,
//! and the count is the Fibonacci number f(k) with f(0) = f(1) = 1.

use crate::quad::{build_quad_in, free_tuple};
use ring_core::Word;
use num_bigint::BigInt;

/// f(k) with f(0) = f(1) = 1.
pub fn fibonacci(k: usize) -> u128 {
    let (mut a, mut b) = (1u128, 1u128);
    for _ in 0..k {
        let c = a + b;
        a = b;
        b = c;
    }
    a
}

/// All index words of Q_k, descending 1-based indices.
pub fn word_model(k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if k % 2 == 0 {
        out.push(Vec::new());
    }
    // descending words starting at any head h <= k with h = k (mod 2)
    let mut stack: Vec<Vec<u32>> = Vec::new();
    for h in (1..=k).rev() {
        if h % 2 == k % 2 {
            stack.push(vec![h as u32]);
        }
    }
    while let Some(w) = stack.pop() {
        let last = *w.last().unwrap() as usize;
        if last % 2 == 1 {
            out.push(w.clone());
        }
        // extend with any smaller index at odd distance
        let mut next = last as i64 - 1;
        while next >= 1 {
            let mut w2 = w.clone();
            w2.push(next as u32);
            stack.push(w2);
            next -= 2;
        }
    }
    out.sort();
    out
}

/// The word model agrees with the recurrence as multisets with every
/// coefficient one.
pub fn word_model_matches_free_quad(k: usize) -> bool {
    let (ring, full) = free_tuple(k.max(1));
    let a = &full[..k];
    let quad = build_quad_in(&ring, a).unwrap();
    let words = quad.q[k].free_words().unwrap();
    if words.iter().any(|(_, c)| c != &BigInt::from(1)) {
        return false;
    }
    let mut from_quad: Vec<Vec<u32>> = words
        .iter()
        // free variables are 0-based; the model is 1-based and descending
        .map(|(Word(w), _)| w.iter().map(|v| v + 1).collect())
        .collect();
    from_quad.sort();
    from_quad == word_model(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fib_values() {
        assert_eq!(fibonacci(0), 1);
        assert_eq!(fibonacci(1), 1);
        assert_eq!(fibonacci(8), 34);
        assert_eq!(fibonacci(10), 89);
        assert_eq!(fibonacci(20), 10946);
    }

    #[test]
    fn small_models() {
        assert_eq!(word_model(0), vec![Vec::<u32>::new()]);
        let mut m3 = word_model(3);
        m3.sort();
        assert_eq!(m3, vec![vec![1], vec![3], vec![3, 2, 1]]);
        assert_eq!(word_model(8).len(), 34);
    }

    #[test]
    fn model_matches_quad_up_to_10() {
        for k in 0..=10 {
            assert!(word_model_matches_free_quad(k), "k={k}");
        }
    }

    #[test]
    fn model_count_is_fibonacci() {
        for k in 0..=16 {
            assert_eq!(word_model(k).len() as u128, fibonacci(k), "k={k}");
        }
    }
}
