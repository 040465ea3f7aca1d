//! Module structures: one-loop ranks, `Φ`, doubling, and the degree-three
//! quotient by `j`.

use jd_abelian::{BigInt, Structure};
use jd_diagram::{Expr, Ring};
use jd_enumeration::{one_loop, periodic_iso, periodic_symmetric_identification, phi, PeriodicIso, rank_formula, tensor_m, torsion_param, torsion_param_is_onto_torsion};
use jd_lie::{j_hom, letter_label, witt_dimension, BracketKernel, HTensorSpace, RTree, TensorKind};
use jd_operators::delta_double_prime;
use jd_spaces::{equal_mod2, Catalog};

use crate::ctx::{hom_kind, Cost, Ctx, Problem};
use crate::report::Case;

pub fn describe(rank: usize, twos: usize) -> String {
    Structure { rank, invariant_factors: vec![BigInt::from(2); twos], torsion_basis: Vec::new() }.describe()
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `𝒜^c_{n,1}` against the necklace formula and the palindromic torsion,
/// after checking the counting formulas themselves.
pub fn oneloop_rank(ctx: &Ctx) -> Vec<Case> {
    let mut out = crate::suites::counting::necklace_counts(ctx);
    for g in ctx.genera(&[1, 2]) {
        let top = if g == 1 { 4 } else { 3 };
        for n in (2..=top).filter(|&n| ctx.degree_ok(n)) {
            let k = 2 * g as usize;
            let twos = if n % 2 == 1 { k.pow(n.div_ceil(2) as u32) } else { 0 };
            let id = format!("A^c_{{{n},1}} g={g}");
            let expected = match rank_formula(g, n) {
                Ok(r) => describe(r as usize, twos),
                Err(e) => format!("error: {e}"),
            };
            out.push(ctx.case(id, expected, g, Cost::Module(n), || Ok(one_loop(g, n)?.structure().describe())));
            if n % 2 == 1 {
                out.push(ctx.case(format!("palindromes span tor A^c_{{{n},1}} g={g}"), "injective onto torsion", g, Cost::Module(n), || {
                    let t = torsion_param(g, n)?;
                    Ok(match (t.hom.is_injective(), torsion_param_is_onto_torsion(&t)) {
                        (true, true) => "injective onto torsion".into(),
                        (inj, onto) => format!("injective={inj}, onto torsion={onto}"),
                    })
                }));
            }
        }
    }
    out
}

/// `Φ : (H^{⊗n})_{𝔇₂ₙ} → 𝒜^c_{n,1}`.
pub fn oneloop_phi(ctx: &Ctx) -> Vec<Case> {
    let mut out = Vec::new();
    for g in ctx.genera(&[1, 2]) {
        for n in [2, 3].into_iter().filter(|&n| ctx.degree_ok(n)) {
            out.push(ctx.case_with(format!("Phi n={n} g={g}"), g, Cost::Module(n), || {
                let src = HTensorSpace::new(g, TensorKind::Dihedral(n)).map_err(Problem::from)?;
                let expected = format!("iso; {}", src.group().structure().describe());
                let p = phi(g, n)?;
                Ok((expected, format!("{}; {}", hom_kind(&p.hom), p.space.structure().describe())))
            }));
        }
    }
    out
}

/// Doubling `w ↦ ww` on full and symmetric one-loop modules.
pub fn periodic_iso_suite(ctx: &Ctx) -> Vec<Case> {
    let mut out = Vec::new();
    for g in ctx.genera(&[1]) {
        for n in [2, 3].into_iter().filter(|&n| ctx.degree_ok(n)) {
            let even = n % 2 == 0;
            let cost = Cost::Module(2 * n);
            let mut built: Option<PeriodicIso> = None;
            out.push(ctx.case_with(format!("A^c_{{{n},1}}⊗M ≅ A^c,period_{{{},1}}⊗M g={g}", 2 * n), g, cost, || {
                let a = one_loop(g, n)?;
                let expected = format!("iso; {}", tensor_m(&a.group(), even).structure().describe());
                let p = periodic_iso(g, n)?;
                let kind = if p.phi.is_isomorphism() && p.doubling.is_isomorphism() {
                    "iso".to_string()
                } else {
                    format!("Φ⊗M {}, doubling {}", hom_kind(&p.phi), hom_kind(&p.doubling))
                };
                let computed = format!("{kind}; {}", p.doubling.target().structure().describe());
                built = Some(p);
                Ok((expected, computed))
            }));
            out.push(ctx.case_with(format!("A^c,s_{{{n},1}} ≅ A^c,s,period_{{{},1}}⊗M g={g}", 2 * n), g, cost, || {
                let p = match built.take() {
                    Some(p) => p,
                    None => periodic_iso(g, n)?,
                };
                let expected = format!("iso; {}", p.symmetric.source().structure().describe());
                Ok((expected, format!("{}; {}", hom_kind(&p.symmetric), p.symmetric.target().structure().describe())))
            }));
        }
    }
    out
}

/// `δ″ ∘ sq̄ ∘ θ` against `p ↦ O(ww)` in the lowest case `m = 1`.
pub fn periodic_inclusion(ctx: &Ctx) -> Vec<Case> {
    let mut out = Vec::new();
    let m = 1;
    for g in ctx.genera(&[1, 2]) {
        let k = 2 * g as usize;
        out.push(ctx.case_with(format!("H⊗Z/2 ≅ A^c,s,period_{{2,1}}⊗Z/2 g={g}"), g, Cost::Module(4 * m - 2), || {
            let id = periodic_symmetric_identification(g, m)?;
            let embed = if id.detects_mod2 { "embeds mod 2" } else { "does not embed mod 2" };
            Ok((format!("iso; {}; embeds mod 2", describe(0, k)), format!("{}; {}; {embed}", hom_kind(&id.hom), id.hom.target().structure().describe())))
        }));
        for a in 0..k as u8 {
            let name = letter_label(a);
            out.push(ctx.case(format!("δ″ sq̄[{name},{name}] = O({name},{name}) g={g}"), "equal mod 2", g, Cost::Terms(2), || {
                let id = periodic_symmetric_identification(g, m)?;
                let t = RTree::bracket(RTree::leaf(a), RTree::leaf(a));
                let d = jd_lie::sq_bar_diagram(&t)?;
                let lhs = delta_double_prime(&Expr::from_diagram(&d, Ring::Z))?;
                let rhs = id.image_expr(&[vec![a]]);
                Ok(if equal_mod2(Catalog::global(), &lhs, &rhs) { "equal mod 2".into() } else { format!("differ: {}", jd_diagram::render_expr(&lhs)) })
            }));
        }
    }
    out
}

/// `j` on `(Λ³H ⊕ Λ²H) ⊗ ℤ/2` and the quotient `𝒜^c_3 / im j`.
pub fn y3_structure(ctx: &Ctx) -> Vec<Case> {
    let mut out = Vec::new();
    for g in ctx.genera(&[1, 2]) {
        let k = 2 * g as usize;
        let src = describe(0, binomial(k, 3) + binomial(k, 2));
        let mut hom: Option<jd_lie::DiagramHom> = None;
        out.push(ctx.case(format!("j well-defined and injective g={g}"), format!("injective from {src}"), g, Cost::Module(3), || {
            let j = j_hom(g)?;
            let c = format!("{} from {}", if j.hom.is_injective() { "injective" } else { "not injective" }, j.hom.source().structure().describe());
            hom = Some(j);
            Ok(c)
        }));
        out.push(ctx.case_with(format!("A^c_3 / im j g={g}"), g, Cost::Module(3), || {
            // (L₃ ⊕ S²H) ⊗ ℤ/2 ⊕ D₃ ⊕ Λ³H, with D₃ from its own presentation.
            let d3 = BracketKernel::lie(g, 3)?.structure();
            let twos = witt_dimension(k, 3) + binomial(k + 1, 2);
            let mut expected = Structure { rank: d3.rank + binomial(k, 3), invariant_factors: d3.invariant_factors.clone(), torsion_basis: Vec::new() };
            expected.invariant_factors.extend(std::iter::repeat_n(BigInt::from(2), twos));
            expected.invariant_factors.sort();
            let j = match hom.take() {
                Some(j) => j,
                None => j_hom(g)?,
            };
            Ok((expected.describe(), j.hom.cokernel().structure().describe()))
        }));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_binomials() {
        assert_eq!(binomial(4, 3), 4);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 3), 0);
    }

    #[test]
    fn describe_matches_structure_text() {
        assert_eq!(describe(4, 16), "Z ^ 4 + Z/2 ^ 16");
        assert_eq!(describe(0, 0), "0");
    }
}
