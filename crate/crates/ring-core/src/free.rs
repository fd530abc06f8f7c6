//! Free noncommutative polynomials with arbitrary-precision integer
//! coefficients. Words are stored length-lexicographically so monomial
//! listings are deterministic.

use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;

/// A word in the free monoid on the ring variables (variable indices).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Finitely many words, each with a nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreePoly {
    terms: BTreeMap<Word, BigInt>,
}

impl FreePoly {
    pub fn zero() -> Self {
        FreePoly::default()
    }

    pub fn constant(c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Word::empty(), c);
        }
        FreePoly { terms }
    }

    pub fn var(i: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Word(vec![i]), BigInt::from(1));
        FreePoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient if the polynomial is a constant (zero counts as constant 0).
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (w, c) = self.terms.iter().next().unwrap();
                w.is_empty().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn max_var(&self) -> Option<u32> {
        self.terms.keys().flat_map(|w| w.0.iter().copied()).max()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &FreePoly) -> FreePoly {
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            let e = terms.entry(w.clone()).or_insert_with(BigInt::zero);
            *e += c;
            if e.is_zero() {
                terms.remove(w);
            }
        }
        FreePoly { terms }
    }

    pub fn neg(&self) -> FreePoly {
        FreePoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &FreePoly) -> FreePoly {
        let mut terms: BTreeMap<Word, BigInt> = BTreeMap::new();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let w = w1.concat(w2);
                let e = terms.entry(w).or_insert_with(BigInt::zero);
                *e += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        FreePoly { terms }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_order_is_length_lex() {
        let mut ws = vec![
            Word(vec![1, 0]),
            Word(vec![0]),
            Word::empty(),
            Word(vec![0, 1]),
            Word(vec![2]),
        ];
        ws.sort();
        assert_eq!(
            ws,
            vec![
                Word::empty(),
                Word(vec![0]),
                Word(vec![2]),
                Word(vec![0, 1]),
                Word(vec![1, 0]),
            ]
        );
    }

    #[test]
    fn mul_concatenates() {
        let a = FreePoly::var(0);
        let b = FreePoly::var(1);
        let ab = a.mul(&b);
        assert_eq!(ab.coeff(&Word(vec![0, 1])), BigInt::from(1));
        assert_eq!(ab.num_terms(), 1);
    }
}
