//! Maps between tree / one-loop diagrams and the Lie side: `η′`, `η`, `sq`,
//! `sq-bar`, `ξ`, `ν`, the `sl` identification and `j`.
//!
//! A rooted tree `[A,B]` is drawn as a vertex with darts `(root, B, A)` in
//! counterclockwise order; reading a diagram back from a leg inverts this,
//! so `η′` of a drawn tree recovers the bracket.

use std::collections::BTreeMap;
use std::sync::Arc;

use jd_abelian::{f2_rank, generated_subgroup, unit, AbelianError, BigInt, GroupHom, PresentedGroup, Structure};
use jd_diagram::{DartOwner, Diagram, Expr, Ring, Workbench};
use jd_spaces::{half_support, is_half_zero, support_vectors, Catalog, Flavor, Space};

use crate::error::LieError;
use crate::free::FreeLie;
use crate::kernels::{to_big, BracketKernel};
use crate::quasi::QuasiLie;
use crate::tensor::{hq_coords, pairs, triples, HTensorSpace, TensorKind};
use crate::tree::{RTree, TreeCombination};
use crate::word::{label_letter, letter_label, Tensor};

fn certificate(map: &'static str) -> impl Fn(AbelianError) -> LieError {
    move |e| LieError::Certificate { map, reason: e.to_string() }
}

/// Draws `t` on the workbench; returns its unpaired root dart.
pub fn embed_tree(w: &mut Workbench, t: &RTree) -> usize {
    match t {
        RTree::Leaf(a) => {
            let j = w.add_leg(letter_label(*a));
            w.leg_dart(j)
        }
        RTree::Node(a, b) => {
            let [p, s1, s2] = w.add_vertex();
            let da = embed_tree(w, a);
            let db = embed_tree(w, b);
            w.connect(s2, da);
            w.connect(s1, db);
            p
        }
    }
}

/// `(T — T)`: two copies of `t` with their roots joined.
pub fn joined(t: &RTree) -> Diagram {
    let mut w = Workbench::new();
    let a = embed_tree(&mut w, t);
    let b = embed_tree(&mut w, t);
    w.connect(a, b);
    w.build().expect("joined trees form a diagram")
}

/// `(T — x — T)`: two copies of `t` whose roots meet a new vertex carrying leg `x`.
pub fn sandwich(x: u8, t: &RTree) -> Diagram {
    let mut w = Workbench::new();
    let [m0, m1, m2] = w.add_vertex();
    let leg = w.add_leg(letter_label(x));
    let ld = w.leg_dart(leg);
    w.connect(m0, ld);
    let a = embed_tree(&mut w, t);
    w.connect(m1, a);
    let b = embed_tree(&mut w, t);
    w.connect(m2, b);
    w.build().expect("sandwich forms a diagram")
}

/// The tree hanging off dart `dart`, seen from its partner.
fn rooted_at(d: &Diagram, dart: usize) -> RTree {
    match d.owner(dart) {
        DartOwner::Leg(j) => RTree::leaf(label_letter(d.legs()[j])),
        DartOwner::Vertex { vertex, slot } => {
            let s1 = 3 * vertex + (slot + 1) % 3;
            let s2 = 3 * vertex + (slot + 2) % 3;
            RTree::bracket(rooted_at(d, d.pair(s2)), rooted_at(d, d.pair(s1)))
        }
    }
}

fn require_tree(d: &Diagram) -> Result<(), LieError> {
    if !d.is_connected() || d.loop_degree() != 0 || d.leg_count() < 2 {
        return Err(LieError::NotTree(jd_diagram::render_diagram(d).0));
    }
    Ok(())
}

/// `η′(T) = ∑_v ℓ(v) ⊗ T_v`, one term per leg.
pub fn eta_prime_terms(d: &Diagram) -> Result<Vec<(u8, RTree)>, LieError> {
    require_tree(d)?;
    Ok((0..d.leg_count()).map(|j| (label_letter(d.legs()[j]), rooted_at(d, d.leg_partner(j)))).collect())
}

/// `η′` extended linearly, grouped by the `H` factor.
pub fn eta_prime_expr(e: &Expr) -> Result<Vec<(u8, TreeCombination)>, LieError> {
    let mut by: BTreeMap<u8, TreeCombination> = BTreeMap::new();
    for (_, term) in e.terms() {
        for (x, t) in eta_prime_terms(&term.rep)? {
            by.entry(x).or_default().add_tree(&t, term.coeff);
        }
    }
    Ok(by.into_iter().collect())
}

/// `𝒜^c_{n,0}`.
pub fn tree_space(genus: u16, n: usize) -> Result<Space, LieError> {
    Ok(Space::new(Catalog::global(), genus, Flavor::Connected { ideg: n, loops: Some(0) })?)
}

/// A certified hom together with its diagram space.
pub struct DiagramHom {
    pub space: Space,
    pub hom: GroupHom,
}

/// `η′ : 𝒜^c_{n,0} → H ⊗ L′ₙ₊₁`.
pub fn eta_prime(genus: u16, n: usize) -> Result<DiagramHom, LieError> {
    let space = tree_space(genus, n)?;
    let q = QuasiLie::cached(genus, n + 1)?;
    let images = (0..space.len())
        .map(|i| hq_coords(&q, &eta_prime_expr(&space.generator(i))?))
        .collect::<Result<Vec<_>, _>>()?;
    let target = HTensorSpace::new(genus, TensorKind::HQuasiLie(n + 1))?.group();
    let hom = GroupHom::from_images(space.group(), target, images).map_err(certificate("eta_prime"))?;
    Ok(DiagramHom { space, hom })
}

/// `H ⊗ Lₙ₊₁` coordinates of `(id ⊗ γ)∘η′` on an expression.
pub fn eta_coords(genus: u16, n: usize, e: &Expr) -> Result<Vec<i64>, LieError> {
    let l = FreeLie::cached(genus, n + 1)?;
    let mut out = vec![0i64; 2 * genus as usize * l.dim()];
    for (x, c) in eta_prime_expr(e)? {
        for (i, v) in l.coords(&c.to_tensor())?.into_iter().enumerate() {
            out[x as usize * l.dim() + i] += v;
        }
    }
    Ok(out)
}

/// `η = (id ⊗ γ)∘η′ : 𝒜^c_{n,0} → H ⊗ Lₙ₊₁`.
pub fn eta(genus: u16, n: usize) -> Result<DiagramHom, LieError> {
    let space = tree_space(genus, n)?;
    let images = (0..space.len()).map(|i| eta_coords(genus, n, &space.generator(i)).map(to_big)).collect::<Result<Vec<_>, _>>()?;
    let target = HTensorSpace::new(genus, TensorKind::HLie(n + 1))?.group();
    let hom = GroupHom::from_images(space.group(), target, images).map_err(certificate("eta"))?;
    Ok(DiagramHom { space, hom })
}

/// `sq(x ⊗ T) = (T — x — T)` on the basis `x ⊗ P(w)` of `H ⊗ Lₖ`.
pub fn sq_diagram(genus: u16, k: usize, x: u8, i: usize) -> Result<Diagram, LieError> {
    Ok(sandwich(x, FreeLie::cached(genus, k)?.basis_tree(i)))
}

/// `sq : (H ⊗ Lₖ) ⊗ ℤ/2 → 𝒜^c_{2k−1,0}`.
pub fn sq(genus: u16, k: usize) -> Result<DiagramHom, LieError> {
    let l = FreeLie::cached(genus, k)?;
    let space = tree_space(genus, 2 * k - 1)?;
    let mut images = Vec::new();
    for x in 0..2 * genus as u8 {
        for i in 0..l.dim() {
            images.push(space.coords(&Expr::from_diagram(&sandwich(x, l.basis_tree(i)), Ring::Z))?);
        }
    }
    let source = Arc::new(PresentedGroup::elementary(images.len(), 2));
    let hom = GroupHom::from_images(source, space.group(), images).map_err(certificate("sq"))?;
    Ok(DiagramHom { space, hom })
}

/// Levine's `sq : (H ⊗ Lₖ) ⊗ ℤ/2 → H ⊗ L′₂ₖ`, `x ⊗ T ↦ x ⊗ [T,T]`.
pub fn sq_quasi(genus: u16, k: usize) -> Result<GroupHom, LieError> {
    let l = FreeLie::cached(genus, k)?;
    let q = QuasiLie::cached(genus, 2 * k)?;
    let mut images = Vec::new();
    for x in 0..2 * genus as u8 {
        for i in 0..l.dim() {
            let t = l.basis_tree(i);
            images.push(hq_coords(&q, &[(x, TreeCombination::from_tree(&RTree::bracket(t.clone(), t.clone())))])?);
        }
    }
    let source = Arc::new(PresentedGroup::elementary(images.len(), 2));
    let target = HTensorSpace::new(genus, TensorKind::HQuasiLie(2 * k))?.group();
    GroupHom::from_images(source, target, images).map_err(certificate("sq_quasi"))
}

/// `sq-bar([a, T′]) = (T′ — a — T′)`.
pub fn sq_bar_diagram(t: &RTree) -> Result<Diagram, LieError> {
    match t {
        RTree::Node(a, rest) | RTree::Node(rest, a) if matches!(a.as_ref(), RTree::Leaf(_)) => {
            let RTree::Leaf(x) = a.as_ref() else { unreachable!() };
            Ok(sandwich(*x, rest))
        }
        _ => Err(LieError::NotLeftLeaf(t.to_string())),
    }
}

/// `O(a₀, a₁, …, aₖ₋₁, aₖ, aₖ₋₁, …, a₁)` for `a₀ = x` and `a₁…aₖ = w`.
pub fn xi_wheel(x: u8, w: &[u8]) -> Diagram {
    let mut seq = vec![x];
    seq.extend_from_slice(w);
    seq.extend(w[..w.len() - 1].iter().rev());
    let labels: Vec<_> = seq.into_iter().map(letter_label).collect();
    Diagram::wheel(&labels).expect("nonempty wheel")
}

/// `ξ(x ⊗ t) ∈ 𝒜^c_{2k,1} ⊗ ℤ/2` for a homogeneous tensor `t` of degree `k`.
pub fn xi(x: u8, t: &Tensor) -> Expr {
    let mut out = Expr::zero(Ring::Mod2);
    for (w, c) in t.terms() {
        out.add_diagram(&xi_wheel(x, w), c);
    }
    out
}

/// Half-integral supports `½(T — T)` of the Lyndon basis of `Lₖ₊₁`.
pub fn nu_supports(genus: u16, k: usize) -> Result<Vec<Vec<jd_spaces::Monomial>>, LieError> {
    let l = FreeLie::cached(genus, k + 1)?;
    Ok((0..l.dim()).map(|i| half_support(Catalog::global(), &Expr::from_diagram(&joined(l.basis_tree(i)), Ring::Z))).collect())
}

/// 𝔽₂-rank of `ν : Lₖ₊₁ ⊗ ℤ/2 → 𝒜^c_{2k,0} ⊗ ℚ/ℤ` and the source dimension.
pub fn nu_rank(genus: u16, k: usize) -> Result<(usize, usize), LieError> {
    let s = nu_supports(genus, k)?;
    let vecs = support_vectors(&s);
    let n = vecs.first().map_or(0, |v| v.len());
    Ok((f2_rank(n, vecs), s.len()))
}

/// `ν′(v) = ½ ∑ vᵢ (Tᵢ — Tᵢ)` on `L′ₖ₊₁`: cross terms `(Tᵢ — Tⱼ)` come in
/// symmetric pairs, so only the parity of each coefficient matters.
pub fn nu_prime(q: &QuasiLie, v: &[BigInt]) -> Expr {
    let mut e = Expr::zero(Ring::Z);
    for (i, c) in v.iter().enumerate() {
        if c.bit(0) {
            e.add_diagram(&joined(&q.generators()[i]), 1);
        }
    }
    e
}

/// Whether `ν′` vanishes on `ker γₖ₊₁` (so `ν` factors through `γ`).
pub fn nu_factors_through_gamma(genus: u16, k: usize) -> Result<bool, LieError> {
    let q = QuasiLie::cached(genus, k + 1)?;
    let ker = q.gamma()?.kernel();
    Ok(ker.generators().iter().all(|v| is_half_zero(Catalog::global(), &nu_prime(&q, v))))
}

/// Whether `ν′([S,S]) = 0` for every Lyndon basis tree `S` of `L_{(k+1)/2}`.
pub fn nu_kills_theta(genus: u16, k: usize) -> Result<bool, LieError> {
    if (k + 1) % 2 != 0 {
        return Ok(true);
    }
    let l = FreeLie::cached(genus, (k + 1) / 2)?;
    Ok((0..l.dim()).all(|i| {
        let s = l.basis_tree(i);
        is_half_zero(Catalog::global(), &Expr::from_diagram(&joined(&RTree::bracket(s.clone(), s.clone())), Ring::Z))
    }))
}

/// The identification `Lₖ₊₁ ⊗ ℤ/2 → D₂ₖ / η(𝒜^c_{2k,0})`, `T ↦ [½ η(T — T)]`.
pub struct SlIdent {
    pub hom: GroupHom,
    /// Structure of `D₂ₖ / η(𝒜^c_{2k,0})`.
    pub quotient: Structure,
}

pub fn sl_ident(genus: u16, k: usize) -> Result<SlIdent, LieError> {
    let d = BracketKernel::lie(genus, 2 * k)?;
    let e = eta(genus, 2 * k)?;
    let image = e.hom.image();
    let l = FreeLie::cached(genus, k + 1)?;
    let mut halves = Vec::new();
    for i in 0..l.dim() {
        let v = eta_coords(genus, 2 * k, &Expr::from_diagram(&joined(l.basis_tree(i)), Ring::Z))?;
        if v.iter().any(|c| c % 2 != 0) {
            return Err(LieError::Certificate { map: "sl_ident", reason: format!("η(T — T) is not divisible by 2 for T = {}", l.basis_name(i)) });
        }
        let h = to_big(v.into_iter().map(|c| c / 2).collect());
        if !d.kernel.contains(&h) {
            return Err(LieError::Certificate { map: "sl_ident", reason: format!("½η(T — T) leaves D for T = {}", l.basis_name(i)) });
        }
        halves.push(h);
    }
    let ambient = d.ambient().quotient(image.generators());
    let r = d.kernel.generators().len();
    let mut gens = d.kernel.generators().to_vec();
    gens.extend(halves);
    let quotient_group = Arc::new(generated_subgroup(&ambient, &gens));
    let images = (0..l.dim()).map(|t| unit(gens.len(), r + t)).collect();
    let hom = GroupHom::from_images(Arc::new(PresentedGroup::elementary(l.dim(), 2)), quotient_group.clone(), images)
        .map_err(certificate("sl_ident"))?;
    Ok(SlIdent { hom, quotient: quotient_group.structure() })
}

fn tree_of(labels: &[u8]) -> Diagram {
    Diagram::tree(&labels.iter().map(|&a| letter_label(a)).collect::<Vec<_>>()).expect("at least three legs")
}

fn wheel_of(labels: &[u8]) -> Diagram {
    Diagram::wheel(&labels.iter().map(|&a| letter_label(a)).collect::<Vec<_>>()).expect("nonempty")
}

/// `j(a∧b∧c) = T(a,b,c,b,a) + T(b,c,a,c,b) + T(c,a,b,a,c)`.
pub fn j3(a: u8, b: u8, c: u8) -> Expr {
    let mut e = Expr::zero(Ring::Z);
    for (p, q, r) in [(a, b, c), (b, c, a), (c, a, b)] {
        e.add_diagram(&tree_of(&[p, q, r, q, p]), 1);
    }
    e
}

/// `j(a∧b) = O(a,b,b) + O(b,a,a)`.
pub fn j2(a: u8, b: u8) -> Expr {
    let mut e = Expr::from_diagram(&wheel_of(&[a, b, b]), Ring::Z);
    e.add_diagram(&wheel_of(&[b, a, a]), 1);
    e
}

/// `j : (Λ³H ⊕ Λ²H) ⊗ ℤ/2 → 𝒜^c_3`, generators `a<b<c` then `a<b`.
pub fn j_hom(genus: u16) -> Result<DiagramHom, LieError> {
    let space = Space::new(Catalog::global(), genus, Flavor::Connected { ideg: 3, loops: None })?;
    let k = 2 * genus as u8;
    let mut images = Vec::new();
    for (a, b, c) in triples(k) {
        images.push(space.coords(&j3(a, b, c))?);
    }
    for (a, b) in pairs(k, false) {
        images.push(space.coords(&j2(a, b))?);
    }
    let source = Arc::new(PresentedGroup::elementary(images.len(), 2));
    let hom = GroupHom::from_images(source, space.group(), images).map_err(certificate("j"))?;
    Ok(DiagramHom { space, hom })
}

#[cfg(test)]
mod tests {
    use super::*;
    use jd_diagram::Label;

    fn l(s: &str) -> Label {
        s.parse().unwrap()
    }

    #[test]
    fn embedding_round_trips_through_eta_prime() {
        let t = RTree::bracket(RTree::leaf(0), RTree::bracket(RTree::leaf(1), RTree::leaf(2)));
        let d = sandwich(3, &t);
        let terms = eta_prime_terms(&d).unwrap();
        let at_x: Vec<_> = terms.iter().filter(|(x, _)| *x == 3).collect();
        assert_eq!(at_x.len(), 1);
        assert_eq!(at_x[0].1, RTree::bracket(t.clone(), t.clone()));
    }

    #[test]
    fn tripod() {
        let d = Diagram::tree(&[l("1+"), l("1-"), l("2+")]).unwrap();
        let terms = eta_prime_terms(&d).unwrap();
        let s: Vec<String> = terms.iter().map(|(x, t)| format!("{}⊗{t}", letter_label(*x))).collect();
        assert_eq!(s, vec!["1+⊗[1-,2+]", "1-⊗[2+,1+]", "2+⊗[1+,1-]"]);
    }

    #[test]
    fn xi_in_degree_one_is_a_bigon() {
        let w = xi_wheel(0, &[1]);
        assert_eq!(w, Diagram::wheel(&[l("1+"), l("1-")]).unwrap());
    }

    #[test]
    fn wheels_are_not_trees() {
        assert!(eta_prime_terms(&Diagram::wheel(&[l("1+"), l("1-")]).unwrap()).is_err());
    }
}
