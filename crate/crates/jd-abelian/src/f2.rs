//! Linear algebra over 𝔽₂ on packed bit vectors.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn from_indices(len: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut b = BitVec::zeros(len);
        for i in idx {
            b.flip(i);
        }
        b
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, v: bool) {
        let m = 1u64 << (i % 64);
        if v {
            self.words[i / 64] |= m;
        } else {
            self.words[i / 64] &= !m;
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn xor_assign(&mut self, o: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(&o.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn first_one(&self) -> Option<usize> {
        for (k, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(k * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * 64 + t)
                }
            })
        })
    }
}

/// Reduced row echelon form, pivots at the lowest set bit of each row.
///
/// Every stored row has its pivot bit and otherwise only non-pivot bits, so
/// `reduce` needs one pass over the pivots present in the input.
#[derive(Clone, Debug, Default)]
pub struct F2Echelon {
    ncols: usize,
    rows: Vec<BitVec>,
    pivot_row: Vec<Option<usize>>,
}

impl F2Echelon {
    pub fn new(ncols: usize) -> Self {
        F2Echelon { ncols, rows: Vec::new(), pivot_row: vec![None; ncols] }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.pivot_row[c].is_some()
    }

    /// Normal form of `v` modulo the row span: only non-pivot bits remain.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        let mut v = v.clone();
        let hits: Vec<usize> = v.ones().filter(|&c| self.pivot_row[c].is_some()).collect();
        for c in hits {
            if v.get(c) {
                v.xor_assign(&self.rows[self.pivot_row[c].unwrap()]);
            }
        }
        v
    }

    /// Adds a vector to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: BitVec) -> bool {
        let v = self.reduce(&v);
        let Some(p) = v.first_one() else { return false };
        for r in self.rows.iter_mut() {
            if r.get(p) {
                r.xor_assign(&v);
            }
        }
        self.pivot_row[p] = Some(self.rows.len());
        self.rows.push(v);
        true
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Non-pivot columns: a basis of the quotient `𝔽₂^n / span`.
    pub fn quotient_basis(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivot_row[c].is_none()).collect()
    }
}

/// Rank of a family of vectors over 𝔽₂.
pub fn f2_rank(ncols: usize, vs: impl IntoIterator<Item = BitVec>) -> usize {
    let mut e = F2Echelon::new(ncols);
    for v in vs {
        e.insert(v);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn echelon_reduces_to_quotient() {
        let mut e = F2Echelon::new(4);
        assert!(e.insert(BitVec::from_indices(4, [0, 1])));
        assert!(e.insert(BitVec::from_indices(4, [1, 2])));
        assert!(!e.insert(BitVec::from_indices(4, [0, 2])));
        assert_eq!(e.rank(), 2);
        assert_eq!(e.quotient_basis(), vec![2, 3]);
        let r = e.reduce(&BitVec::from_indices(4, [0]));
        assert_eq!(r.ones().collect::<Vec<_>>(), vec![2]);
    }
}
