//! Process-wide cache of blocks and per-class normal forms.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use jd_diagram::{canonicalize, ClassKey, Diagram, SignedClass};

use crate::block::{Block, BlockId};
use crate::skeleton::skeletons;

#[derive(Default)]
pub struct Catalog {
    blocks: Mutex<HashMap<BlockId, Arc<Block>>>,
    skeletons: Mutex<HashMap<(usize, usize), Arc<Vec<Diagram>>>>,
    mod2: Mutex<HashMap<ClassKey, Arc<Vec<usize>>>>,
    half: Mutex<HashMap<ClassKey, Arc<Vec<usize>>>>,
}

/// Where a connected class lives.
#[derive(Clone, Debug)]
pub struct Located {
    pub block: Arc<Block>,
    pub index: usize,
    pub class: SignedClass,
}

impl Catalog {
    pub fn new() -> Self {
        Catalog::default()
    }

    pub fn global() -> &'static Catalog {
        static G: OnceLock<Catalog> = OnceLock::new();
        G.get_or_init(Catalog::new)
    }

    pub fn skeletons(&self, t: usize, k: usize) -> Arc<Vec<Diagram>> {
        if let Some(s) = self.skeletons.lock().expect("poisoned").get(&(t, k)) {
            return s.clone();
        }
        let s = Arc::new(skeletons(t, k));
        self.skeletons.lock().expect("poisoned").entry((t, k)).or_insert(s).clone()
    }

    pub fn block(&self, id: &BlockId) -> Arc<Block> {
        if let Some(b) = self.blocks.lock().expect("poisoned").get(id) {
            return b.clone();
        }
        let sk = self.skeletons(id.ideg, id.loops);
        let b = Arc::new(Block::build_from(id.clone(), &sk));
        self.blocks.lock().expect("poisoned").entry(id.clone()).or_insert(b).clone()
    }

    /// Locates a connected diagram in its block; `None` if it vanishes.
    pub fn locate(&self, d: &Diagram) -> Option<Located> {
        let class = canonicalize(d);
        if class.sign == 0 {
            return None;
        }
        assert!(class.is_connected(), "locate expects a connected diagram");
        let block = self.block(&BlockId::of(&class));
        let index = block.index_of(&class.key).expect("class missing from its block");
        Some(Located { block, index, class })
    }

    /// Normal form modulo 2 of a connected class: indices of basis
    /// generators of its block whose sum it equals in `⊗ ℤ/2`.
    pub(crate) fn mod2_normal_form(&self, c: &SignedClass) -> Arc<Vec<usize>> {
        if let Some(v) = self.mod2.lock().expect("poisoned").get(&c.key) {
            return v.clone();
        }
        let block = self.block(&BlockId::of(c));
        let i = block.index_of(&c.key).expect("class missing from its block");
        let nf = block.f2().reduce(&jd_abelian::BitVec::from_indices(block.len(), [i]));
        let v = Arc::new(nf.ones().collect::<Vec<_>>());
        self.mod2.lock().expect("poisoned").insert(c.key.clone(), v.clone());
        v
    }

    /// Free Smith coordinates of a connected class, reduced modulo 2.
    pub(crate) fn half_coordinates(&self, c: &SignedClass) -> Arc<Vec<usize>> {
        if let Some(v) = self.half.lock().expect("poisoned").get(&c.key) {
            return v.clone();
        }
        let block = self.block(&BlockId::of(c));
        let i = block.index_of(&c.key).expect("class missing from its block");
        let g = block.group();
        let bits = g.half_image(&jd_abelian::unit(block.len(), i));
        let v = Arc::new(bits.ones().collect::<Vec<_>>());
        self.half.lock().expect("poisoned").insert(c.key.clone(), v.clone());
        v
    }
}
