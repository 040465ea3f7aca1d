//! Whole modules: `𝒜^c_n`, `𝒜^c_{n,k}`, `𝒜^Y_n`, `𝒜_n` (with a fixed leg
//! count), and the symmetric / periodic one-loop subgroups.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use jd_abelian::{BigInt, GroupElement, PresentedGroup, Structure, Subgroup};
use jd_diagram::{canonicalize, render_diagram, ClassKey, Diagram, Expr, Label, Ring};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::block::{Block, BlockId};
use crate::catalog::Catalog;
use crate::error::SpaceError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "camelCase")]
pub enum Flavor {
    /// Connected diagrams, all loop degrees or exactly `loops`.
    Connected { ideg: usize, loops: Option<usize> },
    /// Strut-free, possibly disconnected.
    StrutFree { ideg: usize },
    /// All diagrams (struts allowed) with exactly `legs` legs.
    Full { ideg: usize, legs: usize },
    /// Subgroup of `𝒜^c_{n,1}` spanned by symmetric wheels.
    OneLoopSymmetric { ideg: usize },
    /// Subgroup of `𝒜^c_{n,1}` (`n` even) spanned by wheels `O(ww)`.
    OneLoopPeriodic { ideg: usize },
}

impl Flavor {
    pub fn ideg(&self) -> usize {
        match *self {
            Flavor::Connected { ideg, .. }
            | Flavor::StrutFree { ideg }
            | Flavor::Full { ideg, .. }
            | Flavor::OneLoopSymmetric { ideg }
            | Flavor::OneLoopPeriodic { ideg } => ideg,
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flavor::Connected { ideg, loops: None } => write!(f, "c{ideg}"),
            Flavor::Connected { ideg, loops: Some(k) } => write!(f, "c{ideg},{k}"),
            Flavor::StrutFree { ideg } => write!(f, "y{ideg}"),
            Flavor::Full { ideg, legs } => write!(f, "full{ideg}/{legs}"),
            Flavor::OneLoopSymmetric { ideg } => write!(f, "sym{ideg}"),
            Flavor::OneLoopPeriodic { ideg } => write!(f, "period{ideg}"),
        }
    }
}

/// Largest i-degree accepted for whole-module computations at genus `g`.
pub fn ideg_bound(genus: u16) -> usize {
    match genus {
        0 | 1 => 6,
        2 => 4,
        3 => 3,
        _ => 2,
    }
}

/// Multisets of `m` labels at genus `g`, as sorted lists in lexicographic order.
pub fn label_multisets(genus: u16, m: usize) -> Vec<Vec<Label>> {
    fn rec(all: &[Label], start: usize, m: usize, cur: &mut Vec<Label>, out: &mut Vec<Vec<Label>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in start..all.len() {
            cur.push(all[i]);
            rec(all, i, m, cur, out);
            cur.pop();
        }
    }
    let all = Label::all(genus);
    let mut out = Vec::new();
    rec(&all, 0, m, &mut Vec::new(), &mut out);
    out
}

/// Whether the cyclic word is reflection-symmetric: `a_{n−i} = a_{k+i}` for
/// some `k` and all `i` (indices mod `n`).
pub fn is_symmetric_word(w: &[Label]) -> bool {
    let n = w.len();
    (0..n).any(|k| (0..n).all(|i| w[(2 * n - 1 - i) % n] == w[(k + i) % n]))
}

/// All words of length `n` at genus `g`, lexicographic.
pub fn words(genus: u16, n: usize) -> Vec<Vec<Label>> {
    let all = Label::all(genus);
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w: Vec<Label>| {
                all.iter().map(move |&a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out
}

enum Kind {
    /// Direct sum of connected blocks.
    Blocks { blocks: Vec<Arc<Block>>, offsets: Vec<usize>, pos: HashMap<BlockId, usize> },
    /// Multisets of connected generators.
    Products { components: Vec<(Arc<Block>, usize)>, comp_index: HashMap<ClassKey, usize>, gens: Vec<Vec<usize>>, index: HashMap<Vec<usize>, usize>, relators: Vec<Vec<(usize, i64)>> },
    /// A subgroup of another space.
    Sub { ambient: Arc<Space>, subgroup: Subgroup },
}

pub struct Space {
    genus: u16,
    flavor: Flavor,
    kind: Kind,
    group: OnceLock<Arc<PresentedGroup>>,
}

impl fmt::Debug for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Space").field("genus", &self.genus).field("flavor", &self.flavor).field("generators", &self.len()).finish()
    }
}

fn check_bounds(genus: u16, ideg: usize) -> Result<(), SpaceError> {
    if genus == 0 {
        return Err(SpaceError::Bounds { what: "genus 0".into(), bound: "genus ≥ 1".into() });
    }
    let b = ideg_bound(genus);
    if ideg > b {
        return Err(SpaceError::Bounds { what: format!("i-degree {ideg} at genus {genus}"), bound: format!("i-degree ≤ {b}") });
    }
    Ok(())
}

impl Space {
    pub fn new(cat: &Catalog, genus: u16, flavor: Flavor) -> Result<Space, SpaceError> {
        check_bounds(genus, flavor.ideg())?;
        Ok(Self::new_unchecked(cat, genus, flavor))
    }

    /// As [`Space::new`] without the desk-scale guard.
    pub fn new_unchecked(cat: &Catalog, genus: u16, flavor: Flavor) -> Space {
        let kind = match flavor {
            Flavor::Connected { ideg, loops } => {
                let ks: Vec<usize> = match loops {
                    Some(k) => vec![k],
                    None => (0..=ideg / 2 + 1).collect(),
                };
                let mut ids = Vec::new();
                for k in ks {
                    if ideg + 2 < 2 * k || (ideg == 0 && k > 0) {
                        continue;
                    }
                    let m = ideg + 2 - 2 * k;
                    for legs in label_multisets(genus, m) {
                        ids.push(BlockId { ideg, loops: k, legs });
                    }
                }
                blocks_kind(cat, ids)
            }
            Flavor::StrutFree { ideg } => products_kind(cat, genus, ideg, None),
            Flavor::Full { ideg, legs } => products_kind(cat, genus, ideg, Some(legs)),
            Flavor::OneLoopSymmetric { ideg } | Flavor::OneLoopPeriodic { ideg } => {
                let ambient = Arc::new(Self::new_unchecked(cat, genus, Flavor::Connected { ideg, loops: Some(1) }));
                let gens: Vec<Vec<BigInt>> = match flavor {
                    Flavor::OneLoopSymmetric { .. } => words(genus, ideg)
                        .into_iter()
                        .filter(|w| is_symmetric_word(w))
                        .map(|w| ambient.coords(&Expr::from_diagram(&Diagram::wheel(&w).expect("nonempty"), Ring::Z)).expect("wheel in space"))
                        .collect(),
                    _ => {
                        assert!(ideg % 2 == 0, "periodic wheels have even length");
                        words(genus, ideg / 2)
                            .into_iter()
                            .map(|w| {
                                let ww: Vec<Label> = w.iter().chain(w.iter()).copied().collect();
                                ambient.coords(&Expr::from_diagram(&Diagram::wheel(&ww).expect("nonempty"), Ring::Z)).expect("wheel in space")
                            })
                            .collect()
                    }
                };
                let subgroup = Subgroup::new(ambient.group(), gens);
                Kind::Sub { ambient, subgroup }
            }
        };
        Space { genus, flavor, kind, group: OnceLock::new() }
    }

    /// A direct sum of arbitrary connected blocks.
    pub fn from_blocks(cat: &Catalog, genus: u16, flavor: Flavor, ids: Vec<BlockId>) -> Space {
        Space { genus, flavor, kind: blocks_kind(cat, ids), group: OnceLock::new() }
    }

    pub fn genus(&self) -> u16 {
        self.genus
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// Cache descriptor.
    pub fn descriptor(&self) -> String {
        format!("g{}:{}", self.genus, self.flavor)
    }

    pub fn len(&self) -> usize {
        match &self.kind {
            Kind::Blocks { offsets, .. } => *offsets.last().expect("sentinel"),
            Kind::Products { gens, .. } => gens.len(),
            Kind::Sub { subgroup, .. } => subgroup.generators().len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn blocks(&self) -> &[Arc<Block>] {
        match &self.kind {
            Kind::Blocks { blocks, .. } => blocks,
            _ => &[],
        }
    }

    /// The ambient space and subgroup for the one-loop subgroup flavors.
    pub fn subgroup(&self) -> Option<(&Arc<Space>, &Subgroup)> {
        match &self.kind {
            Kind::Sub { ambient, subgroup } => Some((ambient, subgroup)),
            _ => None,
        }
    }

    /// Generator `i` as a diagram combination.
    pub fn generator(&self, i: usize) -> Expr {
        match &self.kind {
            Kind::Blocks { blocks, offsets, .. } => {
                let b = offsets.partition_point(|&o| o <= i) - 1;
                let mut e = Expr::zero(Ring::Z);
                e.add_class(&blocks[b].gens()[i - offsets[b]], 1);
                e
            }
            Kind::Products { components, gens, .. } => {
                let mut d = Diagram::empty();
                for &c in &gens[i] {
                    let (b, j) = &components[c];
                    d = d.disjoint_union(&b.gens()[*j].rep);
                }
                Expr::from_diagram(&d, Ring::Z)
            }
            Kind::Sub { ambient, subgroup } => {
                let mut e = Expr::zero(Ring::Z);
                for (j, c) in subgroup.generators()[i].iter().enumerate() {
                    if !c.is_zero() {
                        let c: i64 = c.try_into().expect("small coefficient");
                        e.add_expr(&ambient.generator(j), c);
                    }
                }
                e
            }
        }
    }

    pub fn generators(&self) -> Vec<Expr> {
        (0..self.len()).map(|i| self.generator(i)).collect()
    }

    /// Text form of generator `i`.
    pub fn generator_name(&self, i: usize) -> String {
        jd_diagram::render_expr(&self.generator(i))
    }

    pub fn group(&self) -> Arc<PresentedGroup> {
        self.group
            .get_or_init(|| match &self.kind {
                Kind::Blocks { blocks, .. } => {
                    let groups: Vec<Arc<PresentedGroup>> = blocks.iter().map(|b| b.group()).collect();
                    let refs: Vec<&PresentedGroup> = groups.iter().map(|g| g.as_ref()).collect();
                    Arc::new(PresentedGroup::direct_sum(&refs))
                }
                Kind::Products { gens, relators, .. } => {
                    Arc::new(PresentedGroup::from_relators(gens.len(), relators.iter().map(|r| r.iter().copied())))
                }
                Kind::Sub { subgroup, .. } => Arc::new(subgroup.as_group()),
            })
            .clone()
    }

    pub fn structure(&self) -> Structure {
        self.group().structure()
    }

    fn term_error(d: &Diagram, reason: &str) -> SpaceError {
        SpaceError::OutOfFlavor { term: render_diagram(d).0, reason: reason.into() }
    }

    /// Generator coordinates of an expression.
    pub fn coords(&self, e: &Expr) -> Result<Vec<BigInt>, SpaceError> {
        let mut out = vec![BigInt::zero(); self.len()];
        match &self.kind {
            Kind::Blocks { blocks, offsets, pos } => {
                for (key, term) in e.terms() {
                    let d = &term.rep;
                    let m = d.metrics();
                    if m.components != 1 {
                        return Err(Self::term_error(d, "not connected"));
                    }
                    let id = BlockId { ideg: m.i_deg, loops: m.loop_degrees[0], legs: m.leg_labels };
                    let Some(&b) = pos.get(&id) else {
                        return Err(Self::term_error(d, "i-degree, loop degree or labels outside the space"));
                    };
                    let j = blocks[b].index_of(key).expect("class in its block");
                    out[offsets[b] + j] += term.coeff;
                }
            }
            Kind::Products { comp_index, index, .. } => {
                for (_, term) in e.terms() {
                    let mut ids = Vec::new();
                    let mut sign = 1i64;
                    for comp in term.rep.split_components() {
                        let c = canonicalize(&comp);
                        let Some(&ci) = comp_index.get(&c.key) else {
                            return Err(Self::term_error(&term.rep, "component outside the space"));
                        };
                        sign *= c.sign as i64;
                        ids.push(ci);
                    }
                    ids.sort_unstable();
                    let Some(&g) = index.get(&ids) else {
                        return Err(Self::term_error(&term.rep, "degree or leg count outside the space"));
                    };
                    out[g] += term.coeff * sign;
                }
            }
            Kind::Sub { .. } => {
                return Err(SpaceError::OutOfFlavor { term: jd_diagram::render_expr(e), reason: "subgroup spaces have no direct coordinates".into() });
            }
        }
        Ok(out)
    }

    /// Image of an expression in the group, in normal form.
    pub fn element(&self, e: &Expr) -> Result<GroupElement, SpaceError> {
        Ok(self.group().element(&self.coords(e)?))
    }

    pub fn is_zero(&self, e: &Expr) -> Result<bool, SpaceError> {
        Ok(self.group().is_zero(&self.coords(e)?))
    }
}

fn blocks_kind(cat: &Catalog, ids: Vec<BlockId>) -> Kind {
    let mut blocks = Vec::new();
    let mut offsets = vec![0];
    let mut pos = HashMap::new();
    let ids: BTreeSet<BlockId> = ids.into_iter().collect();
    for id in ids {
        let b = cat.block(&id);
        pos.insert(id, blocks.len());
        offsets.push(offsets.last().expect("sentinel") + b.len());
        blocks.push(b);
    }
    Kind::Blocks { blocks, offsets, pos }
}

/// Multisets of connected generators with prescribed total degree (and leg count).
fn products_kind(cat: &Catalog, genus: u16, ideg: usize, legs: Option<usize>) -> Kind {
    let min_deg = if legs.is_some() { 0 } else { 1 };
    let mut components: Vec<(Arc<Block>, usize)> = Vec::new();
    for a in min_deg..=ideg {
        for k in 0..=a / 2 + 1 {
            if a + 2 < 2 * k || (a == 0 && k > 0) {
                continue;
            }
            let m = a + 2 - 2 * k;
            if legs.is_some_and(|l| m > l) {
                continue;
            }
            for ls in label_multisets(genus, m) {
                let b = cat.block(&BlockId { ideg: a, loops: k, legs: ls });
                for j in 0..b.len() {
                    components.push((b.clone(), j));
                }
            }
        }
    }
    let comp_index: HashMap<ClassKey, usize> = components.iter().enumerate().map(|(i, (b, j))| (b.gens()[*j].key.clone(), i)).collect();
    let deg = |c: usize| components[c].0.id().ideg;
    let nlegs = |c: usize| components[c].0.id().legs.len();

    // Multisets with total degree `n` and, if given, total legs `m`.
    let mut memo: BTreeMap<(usize, Option<usize>), Vec<Vec<usize>>> = BTreeMap::new();
    let mut multisets = |n: usize, m: Option<usize>| -> Vec<Vec<usize>> {
        memo.entry((n, m))
            .or_insert_with(|| {
                let mut out = Vec::new();
                let mut cur = Vec::new();
                fn rec(
                    start: usize,
                    n: usize,
                    m: Option<usize>,
                    ncomp: usize,
                    deg: &dyn Fn(usize) -> usize,
                    nlegs: &dyn Fn(usize) -> usize,
                    cur: &mut Vec<usize>,
                    out: &mut Vec<Vec<usize>>,
                ) {
                    if n == 0 && m.map_or(true, |m| m == 0) {
                        out.push(cur.clone());
                        if m.is_none() {
                            return;
                        }
                    }
                    for c in start..ncomp {
                        let (dc, lc) = (deg(c), nlegs(c));
                        if dc > n || m.is_some_and(|m| lc > m) {
                            continue;
                        }
                        if dc == 0 && m.is_none() {
                            continue;
                        }
                        cur.push(c);
                        rec(c, n - dc, m.map(|m| m - lc), ncomp, deg, nlegs, cur, out);
                        cur.pop();
                    }
                }
                rec(0, n, m, components.len(), &deg, &nlegs, &mut cur, &mut out);
                out.sort();
                out.dedup();
                out
            })
            .clone()
    };
    let gens = multisets(ideg, legs);
    let index: HashMap<Vec<usize>, usize> = gens.iter().enumerate().map(|(i, g)| (g.clone(), i)).collect();
    let mut relators = BTreeSet::new();
    let mut seen_blocks: BTreeSet<BlockId> = BTreeSet::new();
    let mut first_of_block: HashMap<BlockId, usize> = HashMap::new();
    for (i, (b, j)) in components.iter().enumerate() {
        if *j == 0 {
            first_of_block.insert(b.id().clone(), i);
        }
    }
    for (b, _) in &components {
        if !seen_blocks.insert(b.id().clone()) {
            continue;
        }
        let base = first_of_block[b.id()];
        let (a, l) = (b.id().ideg, b.id().legs.len());
        if a > ideg || legs.is_some_and(|m| l > m) {
            continue;
        }
        let rests = multisets(ideg - a, legs.map(|m| m - l));
        for r in b.relators() {
            for rest in &rests {
                let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
                for &(j, c) in r {
                    let mut ids = rest.clone();
                    ids.push(base + j);
                    ids.sort_unstable();
                    let g = *index.get(&ids).expect("lifted relator term is a generator");
                    *acc.entry(g).or_default() += c;
                }
                let rel: Vec<(usize, i64)> = acc.into_iter().filter(|&(_, c)| c != 0).collect();
                if !rel.is_empty() {
                    relators.insert(rel);
                }
            }
        }
    }
    Kind::Products { components, comp_index, gens, index, relators: relators.into_iter().collect() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multisets_count() {
        assert_eq!(label_multisets(1, 3).len(), 4);
        assert_eq!(label_multisets(2, 3).len(), 20);
    }

    #[test]
    fn symmetric_words() {
        let l = |s: &str| s.parse::<Label>().unwrap();
        assert!(is_symmetric_word(&[l("1+"), l("2+"), l("2+")]));
        assert!(!is_symmetric_word(&[l("1+"), l("2+"), l("1-")]));
    }
}
