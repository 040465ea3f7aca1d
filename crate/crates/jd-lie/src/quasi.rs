//! The degree-`n` part `L′ₙ` of the free quasi-Lie algebra: rooted trees
//! modulo antisymmetry and Jacobi. Only `[x,y] = −[y,x]` holds, so `[T,T]`
//! survives as 2-torsion; the Smith form sorts out the rest.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use jd_abelian::{BigInt, GroupHom, PresentedGroup};

use crate::error::LieError;
use crate::free::FreeLie;
use crate::tree::{RTree, TreeCombination};

#[derive(Debug)]
pub struct QuasiLie {
    genus: u16,
    degree: usize,
    gens: Vec<RTree>,
    odd: Vec<bool>,
    index: HashMap<RTree, usize>,
    relators: Vec<Vec<(usize, i64)>>,
    group: OnceLock<Arc<PresentedGroup>>,
}

/// All antisymmetry-canonical trees with `n` leaves over `k` letters.
pub fn canonical_trees(k: usize, n: usize) -> Vec<RTree> {
    let mut by_size: Vec<Vec<RTree>> = vec![Vec::new(), (0..k as u8).map(RTree::leaf).collect()];
    for m in 2..=n {
        let mut out = Vec::new();
        for p in 1..m {
            for a in &by_size[p] {
                for b in &by_size[m - p] {
                    if a <= b {
                        out.push(RTree::bracket(a.clone(), b.clone()));
                    }
                }
            }
        }
        out.sort();
        by_size.push(out);
    }
    by_size.swap_remove(n)
}

/// The three Jacobi terms `[x,[y,z]], [y,[z,x]], [z,[x,y]]`.
pub fn jacobi_terms(x: &RTree, y: &RTree, z: &RTree) -> [RTree; 3] {
    let b = |p: &RTree, q: &RTree, r: &RTree| RTree::bracket(p.clone(), RTree::bracket(q.clone(), r.clone()));
    [b(x, y, z), b(y, z, x), b(z, x, y)]
}

impl QuasiLie {
    pub fn new(genus: u16, degree: usize) -> Result<QuasiLie, LieError> {
        if degree == 0 {
            return Err(LieError::ZeroDegree);
        }
        let gens = canonical_trees(2 * genus as usize, degree);
        let odd: Vec<bool> = gens.iter().map(|t| t.canonical().odd).collect();
        let index: HashMap<RTree, usize> = gens.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        let mut rels: BTreeSet<Vec<(usize, i64)>> = BTreeSet::new();
        for (i, g) in gens.iter().enumerate() {
            if odd[i] {
                rels.insert(vec![(i, 2)]);
            }
            for path in g.node_paths() {
                let RTree::Node(l, r) = g.at(&path) else { unreachable!() };
                for (x, yz) in [(l, r), (r, l)] {
                    let RTree::Node(y, z) = yz.as_ref() else { continue };
                    let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
                    for t in jacobi_terms(x, y, z) {
                        let c = g.replace(&path, t).canonical();
                        *acc.entry(index[&c.tree]).or_default() += c.sign;
                    }
                    let mut r: Vec<(usize, i64)> = acc
                        .into_iter()
                        .map(|(j, v)| (j, if odd[j] { v.rem_euclid(2) } else { v }))
                        .filter(|&(_, v)| v != 0)
                        .collect();
                    if r.is_empty() {
                        continue;
                    }
                    if r[0].1 < 0 {
                        r.iter_mut().for_each(|x| x.1 = -x.1);
                    }
                    rels.insert(r);
                }
            }
        }
        Ok(QuasiLie { genus, degree, gens, odd, index, relators: rels.into_iter().collect(), group: OnceLock::new() })
    }

    pub fn cached(genus: u16, degree: usize) -> Result<Arc<QuasiLie>, LieError> {
        static CACHE: OnceLock<Mutex<HashMap<(u16, usize), Arc<QuasiLie>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(q) = cache.lock().expect("poisoned").get(&(genus, degree)) {
            return Ok(q.clone());
        }
        let q = Arc::new(QuasiLie::new(genus, degree)?);
        Ok(cache.lock().expect("poisoned").entry((genus, degree)).or_insert(q).clone())
    }

    pub fn genus(&self) -> u16 {
        self.genus
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[RTree] {
        &self.gens
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.odd[i]
    }

    pub fn relators(&self) -> &[Vec<(usize, i64)>] {
        &self.relators
    }

    pub fn index_of(&self, t: &RTree) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn group(&self) -> Arc<PresentedGroup> {
        self.group
            .get_or_init(|| Arc::new(PresentedGroup::from_relators(self.gens.len(), self.relators.iter().map(|r| r.iter().copied()))))
            .clone()
    }

    /// Generator coordinates of a combination of degree-`n` trees.
    pub fn coords(&self, c: &TreeCombination) -> Result<Vec<BigInt>, LieError> {
        let mut out = vec![BigInt::from(0); self.len()];
        for (t, k) in c.terms() {
            let Some(i) = self.index_of(t) else {
                return Err(LieError::Degree { expected: self.degree, found: t.degree() });
            };
            out[i] += k;
        }
        Ok(out)
    }

    pub fn tree_coords(&self, t: &RTree) -> Result<Vec<BigInt>, LieError> {
        self.coords(&TreeCombination::from_tree(t))
    }

    /// `γₙ : L′ₙ → Lₙ`, evaluating each tree as a bracket.
    pub fn gamma(&self) -> Result<GroupHom, LieError> {
        let free = FreeLie::cached(self.genus, self.degree)?;
        let images = self
            .gens
            .iter()
            .map(|t| Ok(free.tree_coords(t)?.into_iter().map(BigInt::from).collect()))
            .collect::<Result<Vec<Vec<BigInt>>, LieError>>()?;
        Ok(GroupHom::from_images(self.group(), Arc::new(PresentedGroup::free(free.dim())), images)?)
    }
}

/// `θₖ : Lₖ ⊗ ℤ/2 → L′₂ₖ`, `T ↦ [T,T]` on the Lyndon basis trees.
pub fn theta(genus: u16, k: usize) -> Result<GroupHom, LieError> {
    let free = FreeLie::cached(genus, k)?;
    let target = QuasiLie::cached(genus, 2 * k)?;
    let images = (0..free.dim())
        .map(|i| {
            let t = free.basis_tree(i);
            target.tree_coords(&RTree::bracket(t.clone(), t.clone()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GroupHom::from_images(Arc::new(PresentedGroup::elementary(free.dim(), 2)), target.group(), images)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_two_genus_one() {
        let q = QuasiLie::new(1, 2).unwrap();
        // [1+,1+], [1+,1-], [1-,1-]
        assert_eq!(q.len(), 3);
        assert_eq!(q.group().structure().describe(), "Z ^ 1 + Z/2 ^ 2");
    }

    #[test]
    fn gamma_kills_self_brackets() {
        let q = QuasiLie::new(1, 2).unwrap();
        let g = q.gamma().unwrap();
        let i = q.index_of(&RTree::bracket(RTree::leaf(0), RTree::leaf(0))).unwrap();
        assert!(g.target().is_zero(&g.apply(&jd_abelian::unit(q.len(), i))));
    }

    #[test]
    fn tree_counts() {
        assert_eq!(canonical_trees(2, 3).len(), 2 * 3);
        assert_eq!(canonical_trees(4, 2).len(), 10);
    }
}
