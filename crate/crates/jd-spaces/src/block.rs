//! Presentations of the connected diagrams with fixed i-degree, loop degree
//! and leg multiset. Every relation is local to one such block.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, OnceLock};

use jd_abelian::{BitVec, F2Echelon, PresentedGroup};
use jd_diagram::{canonicalize, ClassKey, Diagram, Expr, Label, Ring, SignedClass};

use crate::skeleton::skeletons;

/// Identifies a block: i-degree, loop degree and sorted leg labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockId {
    pub ideg: usize,
    pub loops: usize,
    pub legs: Vec<Label>,
}

impl BlockId {
    pub fn of(c: &SignedClass) -> Self {
        BlockId { ideg: c.i_deg, loops: c.loop_degree(), legs: c.legs.clone() }
    }
}

pub struct Block {
    id: BlockId,
    gens: Vec<SignedClass>,
    index: HashMap<ClassKey, usize>,
    relators: Vec<Vec<(usize, i64)>>,
    group: OnceLock<Arc<PresentedGroup>>,
    f2: OnceLock<F2Echelon>,
}

impl std::fmt::Debug for Block {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Block").field("id", &self.id).field("gens", &self.gens.len()).field("relators", &self.relators.len()).finish()
    }
}

/// The three diagrams `I, H, X` around the internal edge at dart `e`, in the
/// form whose sum vanishes: with `a, b` following `e` at its vertex and
/// `c, d` following the partner dart, the subtrees `b, c, d` are permuted
/// cyclically.
pub fn ihx_triple(d: &Diagram, e: usize) -> [Diagram; 3] {
    let f = d.pair(e);
    assert!(e < 3 * d.trivalent_count() && f < 3 * d.trivalent_count() && e / 3 != f / 3, "not an internal edge");
    let (u, su) = (e / 3, e % 3);
    let (w, sw) = (f / 3, f % 3);
    let b = 3 * u + (su + 2) % 3;
    let c = 3 * w + (sw + 1) % 3;
    let dd = 3 * w + (sw + 2) % 3;
    // Slot permutations: content at `from` moves to `to`.
    let rewire = |moves: [(usize, usize); 3]| -> Diagram {
        let sigma = |x: usize| moves.iter().find(|m| m.0 == x).map_or(x, |m| m.1);
        let old = d.pairs();
        let mut pair = old.to_vec();
        for &(from, to) in &moves {
            let p = old[from];
            let np = sigma(p);
            pair[to] = np;
            pair[np] = to;
        }
        Diagram::from_darts(d.trivalent_count(), d.legs().to_vec(), pair).expect("rewired diagram")
    };
    [d.clone(), rewire([(c, b), (dd, c), (b, dd)]), rewire([(dd, b), (b, c), (c, dd)])]
}

/// Internal edges of a diagram, one dart per edge.
pub fn internal_edges(d: &Diagram) -> Vec<usize> {
    let n = 3 * d.trivalent_count();
    (0..n).filter(|&x| {
        let p = d.pair(x);
        p < n && x < p && x / 3 != p / 3
    }).collect()
}

/// Distinct permutations of a sorted multiset, in lexicographic order.
pub fn multiset_permutations(items: &[Label]) -> Vec<Vec<Label>> {
    let mut cur: Vec<Label> = items.to_vec();
    cur.sort();
    let mut out = vec![cur.clone()];
    loop {
        let n = cur.len();
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { return out };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

impl Block {
    pub fn build(id: BlockId) -> Block {
        let sk = skeletons(id.ideg, id.loops);
        Block::build_from(id, &sk)
    }

    pub(crate) fn build_from(id: BlockId, skeletons: &[Diagram]) -> Block {
        let mut classes: BTreeMap<ClassKey, SignedClass> = BTreeMap::new();
        let m = id.legs.len();
        if id.ideg + 2 == m + 2 * id.loops {
            let arrangements = multiset_permutations(&id.legs);
            for sk in skeletons {
                debug_assert_eq!(sk.leg_count(), m);
                for arr in &arrangements {
                    let d = sk.map_labels_by_position(arr);
                    let c = canonicalize(&d);
                    if c.sign != 0 && !classes.contains_key(&c.key) {
                        // A generator stands for its canonical representative.
                        let c = SignedClass { sign: 1, ..c };
                        classes.insert(c.key.clone(), c);
                    }
                }
            }
        }
        let gens: Vec<SignedClass> = classes.into_values().collect();
        let index: HashMap<ClassKey, usize> = gens.iter().enumerate().map(|(i, c)| (c.key.clone(), i)).collect();
        let mut rels: BTreeSet<Vec<(usize, i64)>> = BTreeSet::new();
        for (i, g) in gens.iter().enumerate() {
            if g.odd_automorphism {
                rels.insert(vec![(i, 2)]);
            }
            for e in internal_edges(&g.rep) {
                let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
                for term in ihx_triple(&g.rep, e) {
                    let c = canonicalize(&term);
                    if c.sign == 0 {
                        continue;
                    }
                    let j = *index.get(&c.key).expect("IHX term outside its block");
                    *acc.entry(j).or_default() += c.sign as i64;
                }
                // Odd classes are already 2-torsion.
                let mut r: Vec<(usize, i64)> = acc
                    .into_iter()
                    .map(|(j, v)| (j, if gens[j].odd_automorphism { v.rem_euclid(2) } else { v }))
                    .filter(|&(_, v)| v != 0)
                    .collect();
                if r.is_empty() {
                    continue;
                }
                if r[0].1 < 0 {
                    for x in r.iter_mut() {
                        x.1 = -x.1;
                    }
                }
                rels.insert(r);
            }
        }
        Block { id, gens, index, relators: rels.into_iter().collect(), group: OnceLock::new(), f2: OnceLock::new() }
    }

    pub fn id(&self) -> &BlockId {
        &self.id
    }

    pub fn gens(&self) -> &[SignedClass] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn index_of(&self, key: &ClassKey) -> Option<usize> {
        self.index.get(key).copied()
    }

    pub fn relators(&self) -> &[Vec<(usize, i64)>] {
        &self.relators
    }

    /// A relator as a diagram combination.
    pub fn relator_expr(&self, r: usize) -> Expr {
        let mut e = Expr::zero(Ring::Z);
        for &(j, c) in &self.relators[r] {
            e.add_class(&self.gens[j], c);
        }
        e
    }

    pub fn group(&self) -> Arc<PresentedGroup> {
        self.group
            .get_or_init(|| Arc::new(PresentedGroup::from_relators(self.gens.len(), self.relators.iter().map(|r| r.iter().copied()))))
            .clone()
    }

    /// Row echelon form of the relators modulo 2.
    pub fn f2(&self) -> &F2Echelon {
        self.f2.get_or_init(|| {
            let mut e = F2Echelon::new(self.gens.len());
            for r in &self.relators {
                e.insert(BitVec::from_indices(self.gens.len(), r.iter().filter(|(_, c)| c % 2 != 0).map(|(j, _)| *j)));
            }
            e
        })
    }
}

trait RelabelByPosition {
    fn map_labels_by_position(&self, labels: &[Label]) -> Diagram;
}

impl RelabelByPosition for Diagram {
    fn map_labels_by_position(&self, labels: &[Label]) -> Diagram {
        Diagram::from_darts(self.trivalent_count(), labels.to_vec(), self.pairs().to_vec()).expect("same shape")
    }
}
