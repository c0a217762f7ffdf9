//! Serre relations and the per-weight-space bases they cut out.

use std::collections::HashMap;

use crate::error::Result;
use crate::linalg;
use crate::root_data::{q_binomial, CartanType, Weight};
use crate::scalar::Scalar;

/// The two word orders in which the quantum Serre relations appear.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SerreFamily {
    /// `Σ (-1)^k [n k] c^k X_i^k X_j X_i^{n-k}`, for `e''` and `f`.
    Leading,
    /// `Σ (-1)^k [n k] c^k Y_i^{n-k} Y_j Y_i^k`, for `e` and `f'`.
    Trailing,
}

/// The Serre element for `(i, j)` as a combination of words.
pub fn serre_element(
    cartan: &CartanType,
    family: SerreFamily,
    i: usize,
    j: usize,
) -> Result<Vec<(Vec<u8>, Scalar)>> {
    let n = 1 - cartan.cartan(i, j);
    let q = cartan.q(i);
    let mut out = Vec::new();
    for k in 0..=n {
        let sign = if k % 2 == 0 {
            Scalar::one()
        } else {
            -Scalar::one()
        };
        let c = sign * q_binomial(n, k, &q)? * cartan.serre_coefficient(i, j, k)?;
        let (left, right) = match family {
            SerreFamily::Leading => (k, n - k),
            SerreFamily::Trailing => (n - k, k),
        };
        let mut word = vec![i as u8; left as usize];
        word.push(j as u8);
        word.extend(std::iter::repeat_n(i as u8, right as usize));
        out.push((word, c));
    }
    Ok(out)
}

/// All words of the given weight, in lexicographic order.
pub fn words_of_weight(weight: &Weight) -> Vec<Vec<u8>> {
    fn rec(left: &mut Vec<i64>, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if left.iter().all(|&m| m == 0) {
            out.push(cur.clone());
            return;
        }
        for i in 0..left.len() {
            if left[i] > 0 {
                left[i] -= 1;
                cur.push(i as u8);
                rec(left, cur, out);
                cur.pop();
                left[i] += 1;
            }
        }
    }
    let mut out = Vec::new();
    if weight.is_nonnegative() {
        rec(&mut weight.0.clone(), &mut Vec::new(), &mut out);
    }
    out
}

/// Basis of one weight space of the free algebra modulo the Serre ideal.
#[derive(Debug)]
pub struct SerreBasis {
    /// Non-pivot words in lexicographic order.
    pub basis: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
    /// Pivot words rewritten in the basis.
    reductions: HashMap<Vec<u8>, Vec<(usize, Scalar)>>,
}

impl SerreBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn position(&self, word: &[u8]) -> Option<usize> {
        self.index.get(word).copied()
    }

    /// Coordinates of an arbitrary word of this weight.
    pub fn reduce(&self, word: &[u8]) -> Vec<(usize, Scalar)> {
        if let Some(&k) = self.index.get(word) {
            return vec![(k, Scalar::one())];
        }
        self.reductions
            .get(word)
            .cloned()
            .unwrap_or_else(|| panic!("word {word:?} has the wrong weight"))
    }

    /// Is every word of this weight already a basis word?
    pub fn is_free(&self) -> bool {
        self.reductions.is_empty()
    }

    pub fn compute(cartan: &CartanType, family: SerreFamily, weight: &Weight) -> Result<Self> {
        let words = words_of_weight(weight);
        let col: HashMap<&[u8], usize> = words
            .iter()
            .enumerate()
            .map(|(k, w)| (w.as_slice(), k))
            .collect();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        let rank = cartan.rank();
        for i in 0..rank {
            for j in 0..rank {
                if i == j {
                    continue;
                }
                let rel = serre_element(cartan, family, i, j)?;
                let sigma = Weight::of_word(rank, &rel[0].0);
                let rest = weight.sub(&sigma);
                if !rest.is_nonnegative() {
                    continue;
                }
                for w in words_of_weight(&rest) {
                    for p in 0..=w.len() {
                        let mut row = vec![Scalar::zero(); words.len()];
                        for (rw, c) in &rel {
                            let mut full = w[..p].to_vec();
                            full.extend_from_slice(rw);
                            full.extend_from_slice(&w[p..]);
                            let k = col[full.as_slice()];
                            row[k] = &row[k] + c;
                        }
                        rows.push(row);
                    }
                }
            }
        }
        let (rref, pivots) = linalg::rref(rows, words.len());
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let basis_cols: Vec<usize> = (0..words.len()).filter(|c| !pivot_set.contains(c)).collect();
        let basis: Vec<Vec<u8>> = basis_cols.iter().map(|&c| words[c].clone()).collect();
        let index: HashMap<Vec<u8>, usize> =
            basis.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
        let mut reductions = HashMap::new();
        for (row, &pc) in rref.iter().zip(&pivots) {
            let combo: Vec<(usize, Scalar)> = basis_cols
                .iter()
                .enumerate()
                .filter(|(_, &c)| !row[c].is_zero())
                .map(|(k, &c)| (k, -&row[c]))
                .collect();
            reductions.insert(words[pc].clone(), combo);
        }
        Ok(SerreBasis {
            basis,
            index,
            reductions,
        })
    }
}
