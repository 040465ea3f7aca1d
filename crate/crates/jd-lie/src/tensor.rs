//! Groups built from `H = ℤ^{2g}`: `H ⊗ Lₙ`, `H ⊗ L′ₙ`, `Λ²H`, `Λ³H`,
//! `S²H`, `H^{⊗n}` and the dihedral coinvariants `(H^{⊗n})_{𝔇₂ₙ}`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use jd_abelian::{BigInt, GroupHom, PresentedGroup};

use crate::error::LieError;
use crate::free::FreeLie;
use crate::quasi::QuasiLie;
use crate::tree::{RTree, TreeCombination};
use crate::word::{all_words, letter_label, render_word, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TensorKind {
    /// `H ⊗ Lₙ`
    HLie(usize),
    /// `H ⊗ L′ₙ`
    HQuasiLie(usize),
    Lambda2,
    Lambda3,
    Sym2,
    /// `H^{⊗n}`
    Power(usize),
    /// `(H^{⊗n})_{𝔇₂ₙ}`: rotation acts plainly, reflection with sign `(−1)ⁿ`.
    Dihedral(usize),
}

impl fmt::Display for TensorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TensorKind::HLie(n) => write!(f, "H⊗L{n}"),
            TensorKind::HQuasiLie(n) => write!(f, "H⊗L'{n}"),
            TensorKind::Lambda2 => write!(f, "Λ2H"),
            TensorKind::Lambda3 => write!(f, "Λ3H"),
            TensorKind::Sym2 => write!(f, "S2H"),
            TensorKind::Power(n) => write!(f, "H^{n}"),
            TensorKind::Dihedral(n) => write!(f, "(H^{n})_D{}", 2 * n),
        }
    }
}

#[derive(Debug)]
pub struct HTensorSpace {
    genus: u16,
    kind: TensorKind,
    names: Vec<String>,
    group: Arc<PresentedGroup>,
}

fn letters(genus: u16) -> u8 {
    2 * genus as u8
}

/// Cyclic rotation by `k` places.
fn rotate(w: &[u8], k: usize) -> Word {
    let n = w.len();
    (0..n).map(|i| w[(i + k) % n]).collect()
}

impl HTensorSpace {
    pub fn new(genus: u16, kind: TensorKind) -> Result<HTensorSpace, LieError> {
        let k = letters(genus);
        let name = |a: u8| letter_label(a).to_string();
        let (names, group) = match kind {
            TensorKind::HLie(n) => {
                let l = FreeLie::cached(genus, n)?;
                let names = (0..k).flat_map(|x| (0..l.dim()).map(move |i| (x, i))).map(|(x, i)| format!("{}⊗{}", name(x), l.basis_name(i))).collect::<Vec<_>>();
                let g = PresentedGroup::free(names.len());
                (names, g)
            }
            TensorKind::HQuasiLie(n) => {
                let q = QuasiLie::cached(genus, n)?;
                let names = (0..k).flat_map(|x| q.generators().iter().map(move |t| format!("{}⊗{t}", name(x)))).collect();
                let qg = q.group();
                let copies: Vec<&PresentedGroup> = (0..k).map(|_| qg.as_ref()).collect();
                (names, PresentedGroup::direct_sum(&copies))
            }
            TensorKind::Lambda2 => {
                let names: Vec<String> = pairs(k, false).into_iter().map(|(a, b)| format!("{}∧{}", name(a), name(b))).collect();
                let g = PresentedGroup::free(names.len());
                (names, g)
            }
            TensorKind::Lambda3 => {
                let names: Vec<String> = triples(k).into_iter().map(|(a, b, c)| format!("{}∧{}∧{}", name(a), name(b), name(c))).collect();
                let g = PresentedGroup::free(names.len());
                (names, g)
            }
            TensorKind::Sym2 => {
                let names: Vec<String> = pairs(k, true).into_iter().map(|(a, b)| format!("{}·{}", name(a), name(b))).collect();
                let g = PresentedGroup::free(names.len());
                (names, g)
            }
            TensorKind::Power(n) => {
                let names: Vec<String> = all_words(k as usize, n).iter().map(|w| render_word(w).replace(' ', "⊗")).collect();
                let g = PresentedGroup::free(names.len());
                (names, g)
            }
            TensorKind::Dihedral(n) => {
                let words = all_words(k as usize, n);
                let idx = |w: &[u8]| w.iter().fold(0usize, |acc, &a| acc * k as usize + a as usize);
                let sign: i64 = if n % 2 == 0 { 1 } else { -1 };
                let mut rels: BTreeSet<Vec<(usize, i64)>> = BTreeSet::new();
                for w in &words {
                    let i = idx(w);
                    let mut push = |j: usize, s: i64| {
                        // w − s·w′
                        let r = if i == j {
                            if s == 1 { vec![] } else { vec![(i, 2)] }
                        } else if i < j {
                            vec![(i, 1), (j, -s)]
                        } else {
                            vec![(j, -s), (i, 1)]
                        };
                        let r = if r.first().is_some_and(|x| x.1 < 0) { r.into_iter().map(|(a, b)| (a, -b)).collect() } else { r };
                        if !r.is_empty() {
                            rels.insert(r);
                        }
                    };
                    push(idx(&rotate(w, 1)), 1);
                    let rev: Word = w.iter().rev().copied().collect();
                    push(idx(&rev), sign);
                }
                let names = words.iter().map(|w| render_word(w).replace(' ', "⊗")).collect();
                (names, PresentedGroup::from_relators(words.len(), rels))
            }
        };
        Ok(HTensorSpace { genus, kind, names, group: Arc::new(group) })
    }

    pub fn genus(&self) -> u16 {
        self.genus
    }

    pub fn kind(&self) -> TensorKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn generator_name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn group(&self) -> Arc<PresentedGroup> {
        self.group.clone()
    }
}

/// Ordered pairs `a < b` (or `a ≤ b`).
pub fn pairs(k: u8, diagonal: bool) -> Vec<(u8, u8)> {
    (0..k).flat_map(|a| (a..k).filter(move |&b| diagonal || b > a).map(move |b| (a, b))).collect()
}

pub fn triples(k: u8) -> Vec<(u8, u8, u8)> {
    (0..k).flat_map(|a| (a + 1..k).flat_map(move |b| (b + 1..k).map(move |c| (a, b, c)))).collect()
}

/// Index of the word `w` among the `H^{⊗n}` generators.
pub fn word_index(genus: u16, w: &[u8]) -> usize {
    let k = letters(genus) as usize;
    w.iter().fold(0usize, |acc, &a| acc * k + a as usize)
}

/// Bracket map `H ⊗ Lₙ₊₁ → Lₙ₊₂`, `x ⊗ T ↦ [x, T]`.
pub fn lie_bracket_map(genus: u16, n: usize) -> Result<GroupHom, LieError> {
    let src = FreeLie::cached(genus, n + 1)?;
    let tgt = FreeLie::cached(genus, n + 2)?;
    let mut images = Vec::with_capacity(letters(genus) as usize * src.dim());
    for x in 0..letters(genus) {
        for i in 0..src.dim() {
            let t = RTree::bracket(RTree::leaf(x), src.basis_tree(i).clone());
            images.push(tgt.tree_coords(&t)?.into_iter().map(BigInt::from).collect());
        }
    }
    let source = HTensorSpace::new(genus, TensorKind::HLie(n + 1))?.group();
    Ok(GroupHom::from_images(source, Arc::new(PresentedGroup::free(tgt.dim())), images)?)
}

/// Bracket map `H ⊗ L′ₙ₊₁ → L′ₙ₊₂`.
pub fn quasi_bracket_map(genus: u16, n: usize) -> Result<GroupHom, LieError> {
    let src = QuasiLie::cached(genus, n + 1)?;
    let tgt = QuasiLie::cached(genus, n + 2)?;
    let mut images = Vec::with_capacity(letters(genus) as usize * src.len());
    for x in 0..letters(genus) {
        for t in src.generators() {
            images.push(tgt.tree_coords(&RTree::bracket(RTree::leaf(x), t.clone()))?);
        }
    }
    let source = HTensorSpace::new(genus, TensorKind::HQuasiLie(n + 1))?.group();
    Ok(GroupHom::from_images(source, tgt.group(), images)?)
}

/// `id ⊗ γₙ : H ⊗ L′ₙ → H ⊗ Lₙ`.
pub fn id_tensor_gamma(genus: u16, n: usize) -> Result<GroupHom, LieError> {
    let q = QuasiLie::cached(genus, n)?;
    let l = FreeLie::cached(genus, n)?;
    let k = letters(genus) as usize;
    let mut images = Vec::with_capacity(k * q.len());
    for x in 0..k {
        for t in q.generators() {
            let mut v = vec![BigInt::from(0); k * l.dim()];
            for (i, c) in l.tree_coords(t)?.into_iter().enumerate() {
                v[x * l.dim() + i] = BigInt::from(c);
            }
            images.push(v);
        }
    }
    let source = HTensorSpace::new(genus, TensorKind::HQuasiLie(n))?.group();
    let target = HTensorSpace::new(genus, TensorKind::HLie(n))?.group();
    Ok(GroupHom::from_images(source, target, images)?)
}

/// Coordinates in `H ⊗ L′ₙ` of `∑ xᵢ ⊗ Tᵢ`.
pub fn hq_coords(q: &QuasiLie, terms: &[(u8, TreeCombination)]) -> Result<Vec<BigInt>, LieError> {
    let n = q.len();
    let k = letters(q.genus()) as usize;
    let mut out = vec![BigInt::from(0); k * n];
    for (x, c) in terms {
        for (i, v) in q.coords(c)?.into_iter().enumerate() {
            out[*x as usize * n + i] += v;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_degree_two() {
        // Rotation-and-reflection classes of 2-letter words: aa, ab, bb.
        let d = HTensorSpace::new(1, TensorKind::Dihedral(2)).unwrap();
        assert_eq!(d.group().structure().describe(), "Z ^ 3");
    }

    #[test]
    fn dihedral_degree_three_is_two_torsion() {
        let d = HTensorSpace::new(1, TensorKind::Dihedral(3)).unwrap();
        assert_eq!(d.group().structure().describe(), "Z/2 ^ 4");
    }

    #[test]
    fn exterior_and_symmetric_ranks() {
        assert_eq!(HTensorSpace::new(2, TensorKind::Lambda3).unwrap().len(), 4);
        assert_eq!(HTensorSpace::new(2, TensorKind::Lambda2).unwrap().len(), 6);
        assert_eq!(HTensorSpace::new(2, TensorKind::Sym2).unwrap().len(), 10);
    }

    #[test]
    fn bracket_kernel_ranks() {
        // D₁ at genus 2 has rank 24 − 20 = 4.
        let b = lie_bracket_map(2, 1).unwrap();
        assert_eq!(b.kernel().as_group().structure().describe(), "Z ^ 4");
    }
}
