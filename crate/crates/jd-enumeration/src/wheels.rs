//! The dictionary between cyclic words and one-loop diagrams: `Φ`, the
//! torsion parametrization in odd degree and the doubling `w ↦ ww`.

use std::sync::Arc;

use jd_abelian::{unit, AbelianError, BigInt, GroupHom, PresentedGroup, Subgroup};
use jd_diagram::{Diagram, Expr, Ring};
use jd_lie::{all_words, letter_label, HTensorSpace, TensorKind, Word};
use jd_spaces::{Catalog, Flavor, Space};

use crate::cyclic::{is_symmetric, palindrome_of};
use crate::error::EnumError;

fn certificate(map: &'static str) -> impl Fn(AbelianError) -> EnumError {
    move |e| EnumError::Certificate { map, reason: e.to_string() }
}

fn letters(genus: u16) -> usize {
    2 * genus as usize
}

/// The wheel `O(w)`.
pub fn wheel(w: &[u8]) -> Diagram {
    let labels: Vec<_> = w.iter().map(|&a| letter_label(a)).collect();
    Diagram::wheel(&labels).expect("nonempty word")
}

pub fn wheel_expr(w: &[u8]) -> Expr {
    Expr::from_diagram(&wheel(w), Ring::Z)
}

pub fn doubled(w: &[u8]) -> Word {
    w.iter().chain(w).copied().collect()
}

/// `G ⊗ ℤ/2`, or `G` itself when `even`.
pub fn tensor_m(g: &PresentedGroup, even: bool) -> PresentedGroup {
    if even {
        return g.clone();
    }
    let n = g.generators();
    let twos: Vec<Vec<BigInt>> = (0..n).map(|i| unit(n, i).into_iter().map(|x| x * 2).collect()).collect();
    g.quotient(&twos)
}

pub fn one_loop(genus: u16, n: usize) -> Result<Space, EnumError> {
    Ok(Space::new(Catalog::global(), genus, Flavor::Connected { ideg: n, loops: Some(1) })?)
}

/// A certified map together with the one-loop space it lands in.
#[derive(Debug)]
pub struct WheelMap {
    pub space: Arc<Space>,
    pub hom: GroupHom,
}

/// `Φ : (H^{⊗n})_{𝔇₂ₙ} → 𝒜^c_{n,1}`, `a₁ ⊗ … ⊗ aₙ ↦ O(a₁…aₙ)`.
pub fn phi(genus: u16, n: usize) -> Result<WheelMap, EnumError> {
    if n < 1 {
        return Err(EnumError::Length { n, min: 1 });
    }
    let space = Arc::new(one_loop(genus, n)?);
    let src = HTensorSpace::new(genus, TensorKind::Dihedral(n))?;
    let images = all_words(letters(genus), n).iter().map(|w| space.coords(&wheel_expr(w))).collect::<Result<Vec<_>, _>>()?;
    let hom = GroupHom::from_images(src.group(), space.group(), images).map_err(certificate("Φ"))?;
    Ok(WheelMap { space, hom })
}

/// For odd `n = 2m − 1`: `H^{⊗m} ⊗ ℤ/2 → 𝒜^c_{n,1}`,
/// `a₁ ⊗ … ⊗ a_m ↦ O(a₁…a_m a_m…a₂)`.
pub fn torsion_param(genus: u16, n: usize) -> Result<WheelMap, EnumError> {
    if n % 2 == 0 {
        return Err(EnumError::Certificate { map: "torsion parametrization", reason: format!("degree {n} is even") });
    }
    let m = n.div_ceil(2);
    let space = Arc::new(one_loop(genus, n)?);
    let words = all_words(letters(genus), m);
    let src = Arc::new(PresentedGroup::elementary(words.len(), 2));
    let images = words.iter().map(|p| space.coords(&wheel_expr(&palindrome_of(p)))).collect::<Result<Vec<_>, _>>()?;
    let hom = GroupHom::from_images(src, space.group(), images).map_err(certificate("torsion parametrization"))?;
    Ok(WheelMap { space, hom })
}

/// Whether the image of `torsion_param` is the whole torsion subgroup.
pub fn torsion_param_is_onto_torsion(map: &WheelMap) -> bool {
    let s = map.space.structure();
    let t = Subgroup::new(map.space.group(), s.torsion_basis.clone());
    let im = map.hom.image();
    im.equals(&t)
}

/// The doubling isomorphisms in degree `n ≥ 2`, with `M = ℤ` for even `n`
/// and `ℤ/2` for odd `n`.
#[derive(Debug)]
pub struct PeriodicIso {
    pub degree: usize,
    /// `Φ ⊗ M : (H^{⊗n})_{𝔇₂ₙ} ⊗ M → 𝒜^c_{n,1} ⊗ M`.
    pub phi: GroupHom,
    /// `w ↦ O(ww)` into `𝒜^{c,period}_{2n,1} ⊗ M`.
    pub doubling: GroupHom,
    /// `𝒜^{c,s}_{n,1} → 𝒜^{c,s,period}_{2n,1} ⊗ M`, `O(w) ↦ O(ww)`.
    pub symmetric: GroupHom,
}

impl PeriodicIso {
    /// `𝒜^c_{n,1} ⊗ M ≅ 𝒜^{c,period}_{2n,1} ⊗ M` is `doubling ∘ phi⁻¹`.
    pub fn holds(&self) -> (bool, bool) {
        (self.phi.is_isomorphism() && self.doubling.is_isomorphism(), self.symmetric.is_isomorphism())
    }
}

pub fn periodic_iso(genus: u16, n: usize) -> Result<PeriodicIso, EnumError> {
    if n < 2 {
        return Err(EnumError::Length { n, min: 2 });
    }
    let even = n % 2 == 0;
    let cat = Catalog::global();
    let k = letters(genus);

    let base = phi(genus, n)?;
    let src = HTensorSpace::new(genus, TensorKind::Dihedral(n))?;
    let src_m = Arc::new(tensor_m(&src.group(), even));
    let a_m = Arc::new(tensor_m(&base.space.group(), even));
    let phi_m = GroupHom::from_images(src_m.clone(), a_m, (0..src.len()).map(|i| base.hom.apply(&unit(src.len(), i))).collect())
        .map_err(certificate("Φ ⊗ M"))?;

    let period = Space::new(cat, genus, Flavor::OneLoopPeriodic { ideg: 2 * n })?;
    let p_m = Arc::new(tensor_m(&period.group(), even));
    let words = all_words(k, n);
    // Periodic generators are indexed by the same words, in the same order.
    let doubling = GroupHom::from_images(src_m, p_m, (0..words.len()).map(|i| unit(words.len(), i)).collect())
        .map_err(certificate("doubling"))?;

    let sym = Space::new(cat, genus, Flavor::OneLoopSymmetric { ideg: n })?;
    let sym_words: Vec<Word> = words.into_iter().filter(|w| is_symmetric(w)).collect();
    let ambient = one_loop(genus, 2 * n)?;
    let gens = sym_words.iter().map(|w| ambient.coords(&wheel_expr(&doubled(w)))).collect::<Result<Vec<_>, _>>()?;
    let sub = Subgroup::new(ambient.group(), gens);
    let target = Arc::new(tensor_m(&sub.as_group(), even));
    let symmetric = GroupHom::from_images(sym.group(), target, (0..sym_words.len()).map(|i| unit(sym_words.len(), i)).collect())
        .map_err(certificate("symmetric doubling"))?;

    Ok(PeriodicIso { degree: n, phi: phi_m, doubling, symmetric })
}

/// `H^{⊗m} ⊗ ℤ/2 → 𝒜^{c,s,period}_{4m−2,1} ⊗ ℤ/2`, `p ↦ O(ww)` with
/// `w = p₁…p_m p_m…p₂`.
#[derive(Debug)]
pub struct PeriodicIdentification {
    pub m: usize,
    pub ambient: Space,
    /// Symmetric words of length `2m − 1`, indexing the target generators.
    pub words: Vec<Word>,
    pub hom: GroupHom,
    /// Whether `𝒜^{c,s,period} ⊗ ℤ/2 → 𝒜^c_{4m−2,1} ⊗ ℤ/2` is injective, so
    /// that equalities may be tested in the ambient module.
    pub detects_mod2: bool,
}

impl PeriodicIdentification {
    /// The image of `∑ pᵢ` as a mod-2 diagram combination in the ambient.
    pub fn image_expr(&self, tensor: &[Word]) -> Expr {
        let mut e = Expr::zero(Ring::Mod2);
        for p in tensor {
            e.add_diagram(&wheel(&doubled(&palindrome_of(p))), 1);
        }
        e
    }
}

pub fn periodic_symmetric_identification(genus: u16, m: usize) -> Result<PeriodicIdentification, EnumError> {
    if m < 1 {
        return Err(EnumError::Length { n: m, min: 1 });
    }
    let k = letters(genus);
    let ambient = one_loop(genus, 4 * m - 2)?;
    let words: Vec<Word> = all_words(k, 2 * m - 1).into_iter().filter(|w| is_symmetric(w)).collect();
    let gens = words.iter().map(|w| ambient.coords(&wheel_expr(&doubled(w)))).collect::<Result<Vec<_>, _>>()?;
    let sub_group = Arc::new(Subgroup::new(ambient.group(), gens.clone()).as_group());
    let target = Arc::new(tensor_m(&sub_group, false));
    let ps = all_words(k, m);
    let images = ps
        .iter()
        .map(|p| {
            let w = palindrome_of(p);
            unit(words.len(), words.iter().position(|x| *x == w).expect("palindromes are symmetric"))
        })
        .collect();
    let src = Arc::new(PresentedGroup::elementary(ps.len(), 2));
    let hom = GroupHom::from_images(src, target, images).map_err(certificate("periodic identification"))?;
    let inclusion = GroupHom::from_images(sub_group.clone(), ambient.group(), gens).map_err(certificate("inclusion"))?;
    let detects_mod2 = inclusion.rank_mod2() == sub_group.dim_mod2();
    Ok(PeriodicIdentification { m, ambient, words, hom, detects_mod2 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_m_kills_doubles() {
        let g = PresentedGroup::free(3);
        assert_eq!(tensor_m(&g, true).structure().rank, 3);
        let h = tensor_m(&g, false).structure();
        assert_eq!(h.rank, 0);
        assert_eq!(h.count_factor(2), 3);
    }

    #[test]
    fn phi_in_degree_two() {
        let p = phi(1, 2).unwrap();
        assert!(p.hom.is_isomorphism());
        assert_eq!(p.space.structure().rank, 3);
    }

    #[test]
    fn doubled_words() {
        assert_eq!(doubled(&[0, 1]), vec![0, 1, 0, 1]);
    }
}
