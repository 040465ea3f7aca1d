//! The degree-`n` part `Lₙ` of the free Lie algebra on `H`, in the Lyndon basis.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::LieError;
use crate::tree::RTree;
use crate::word::{is_lyndon, lyndon_words, render_word, standard_factorization, witt_dimension, Tensor, Word};

#[derive(Debug)]
pub struct FreeLie {
    genus: u16,
    degree: usize,
    basis: Vec<Word>,
    index: HashMap<Word, usize>,
    trees: Vec<RTree>,
    expansions: Vec<Tensor>,
}

/// Standard bracketing of a Lyndon word.
pub fn lyndon_tree(w: &[u8]) -> RTree {
    debug_assert!(is_lyndon(w));
    if w.len() == 1 {
        return RTree::leaf(w[0]);
    }
    let (u, v) = standard_factorization(w);
    RTree::bracket(lyndon_tree(u), lyndon_tree(v))
}

impl FreeLie {
    pub fn new(genus: u16, degree: usize) -> Result<FreeLie, LieError> {
        if degree == 0 {
            return Err(LieError::ZeroDegree);
        }
        let basis = lyndon_words(2 * genus as usize, degree);
        let index = basis.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let trees: Vec<RTree> = basis.iter().map(|w| lyndon_tree(w)).collect();
        let expansions = trees.iter().map(RTree::to_tensor).collect();
        Ok(FreeLie { genus, degree, basis, index, trees, expansions })
    }

    /// Shared instance.
    pub fn cached(genus: u16, degree: usize) -> Result<Arc<FreeLie>, LieError> {
        static CACHE: OnceLock<Mutex<HashMap<(u16, usize), Arc<FreeLie>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(f) = cache.lock().expect("poisoned").get(&(genus, degree)) {
            return Ok(f.clone());
        }
        let f = Arc::new(FreeLie::new(genus, degree)?);
        Ok(cache.lock().expect("poisoned").entry((genus, degree)).or_insert(f).clone())
    }

    pub fn genus(&self) -> u16 {
        self.genus
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Witt's closed formula, independent of the basis enumeration.
    pub fn witt_dimension(&self) -> usize {
        witt_dimension(2 * self.genus as usize, self.degree)
    }

    pub fn basis(&self) -> &[Word] {
        &self.basis
    }

    pub fn basis_tree(&self, i: usize) -> &RTree {
        &self.trees[i]
    }

    pub fn basis_name(&self, i: usize) -> String {
        self.trees[i].to_string()
    }

    pub fn expansion(&self, i: usize) -> &Tensor {
        &self.expansions[i]
    }

    /// Lyndon coordinates of a homogeneous Lie polynomial. The smallest word
    /// of `P(w)` is `w` itself with coefficient 1, so peeling off leading
    /// words terminates; a non-Lyndon leading word certifies `t ∉ Lₙ`.
    pub fn coords(&self, t: &Tensor) -> Result<Vec<i64>, LieError> {
        let mut rest = t.clone();
        let mut out = vec![0i64; self.dim()];
        while let Some((w, c)) = rest.leading() {
            if w.len() != self.degree {
                return Err(LieError::Degree { expected: self.degree, found: w.len() });
            }
            let Some(&i) = self.index.get(w) else {
                return Err(LieError::NotLie(render_word(w)));
            };
            out[i] += c;
            rest.add(&self.expansions[i], -c);
        }
        Ok(out)
    }

    pub fn tree_coords(&self, t: &RTree) -> Result<Vec<i64>, LieError> {
        self.coords(&t.to_tensor())
    }

    /// The element with given coordinates, as a tensor.
    pub fn element(&self, coords: &[i64]) -> Tensor {
        let mut out = Tensor::zero();
        for (i, &c) in coords.iter().enumerate() {
            out.add(&self.expansions[i], c);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_one_degree_two() {
        let l = FreeLie::new(1, 2).unwrap();
        assert_eq!(l.dim(), 1);
        assert_eq!(l.basis_name(0), "[1+,1-]");
    }

    #[test]
    fn jacobi_decomposes_to_zero() {
        let l = FreeLie::new(2, 3).unwrap();
        let (a, b, c) = (RTree::leaf(0), RTree::leaf(1), RTree::leaf(2));
        let mut t = RTree::bracket(a.clone(), RTree::bracket(b.clone(), c.clone())).to_tensor();
        t.add(&RTree::bracket(b.clone(), RTree::bracket(c.clone(), a.clone())).to_tensor(), 1);
        t.add(&RTree::bracket(c, RTree::bracket(a, b)).to_tensor(), 1);
        assert!(l.coords(&t).unwrap().iter().all(|&x| x == 0));
    }

    #[test]
    fn non_lie_polynomial_is_rejected() {
        let l = FreeLie::new(1, 2).unwrap();
        assert!(matches!(l.coords(&Tensor::word(vec![0, 1])), Err(LieError::NotLie(_))));
    }

    #[test]
    fn coordinates_round_trip() {
        let l = FreeLie::new(1, 5).unwrap();
        let coords: Vec<i64> = (0..l.dim() as i64).map(|i| i * 3 - 7).collect();
        assert_eq!(l.coords(&l.element(&coords)).unwrap(), coords);
    }
}
