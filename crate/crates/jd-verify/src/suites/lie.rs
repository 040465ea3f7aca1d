//! Tree-level suites: quasi-Lie sequences, `η′`, `ν`, `sq` versus `ξ`, and
//! the kernel of `(id⊗½)δ` on tree torsion.

use jd_abelian::{BitVec, F2Echelon, Subgroup};
use jd_diagram::{Expr, Ring};
use jd_lie::{eta_prime, nu_factors_through_gamma, nu_kills_theta, nu_rank, sq, sq_diagram, theta, tree_space, witt_dimension, xi, BracketKernel, FreeLie, QuasiLie};
use jd_operators::{delta, delta_double_prime, doubling};
use jd_spaces::{half_support, is_zero_mod2, support_vectors, Catalog};
use num_integer::Integer;

use crate::ctx::{hom_kind, Cost, Ctx, Problem, Tally};
use crate::report::Case;
use crate::suites::structure::describe;

fn dim_l(g: u16, n: usize) -> usize {
    witt_dimension(2 * g as usize, n)
}

/// `0 → Lₖ ⊗ ℤ/2 → L′₂ₖ → L₂ₖ → 0`, `γ` in odd degree and the tree torsion.
pub fn quasilie_exact(ctx: &Ctx) -> Vec<Case> {
    let mut out = Vec::new();
    for g in ctx.genera(&[1, 2]) {
        let evens: &[usize] = if g == 1 { &[2, 4, 6] } else { &[2, 4] };
        for &n in evens.iter().filter(|&&n| ctx.degree_ok(n)) {
            out.push(ctx.case(format!("L'_{n} g={g}"), describe(dim_l(g, n), dim_l(g, n / 2)), g, Cost::Free, || {
                Ok(QuasiLie::cached(g, n)?.group().structure().describe())
            }));
            out.push(ctx.case(format!("θ → L'_{n} → L_{n} exact g={g}"), "θ injective; im θ = ker γ; γ surjective", g, Cost::Free, || {
                let gamma = QuasiLie::cached(g, n)?.gamma()?;
                let th = theta(g, n / 2)?;
                Ok(format!(
                    "θ {}; im θ {} ker γ; γ {}",
                    if th.is_injective() { "injective" } else { "not injective" },
                    if th.image().equals(&gamma.kernel()) { "=" } else { "≠" },
                    if gamma.is_surjective() { "surjective" } else { "not surjective" },
                ))
            }));
        }
        let odds: &[usize] = if g == 1 { &[1, 3, 5] } else { &[1, 3] };
        for &n in odds.iter().filter(|&&n| ctx.degree_ok(n)) {
            out.push(ctx.case(format!("γ_{n} g={g}"), "iso", g, Cost::Free, || Ok(hom_kind(&QuasiLie::cached(g, n)?.gamma()?).to_string())));
        }
        for k in (1..=2).filter(|&k| ctx.degree_ok(2 * k - 1)) {
            let n = 2 * k - 1;
            let twos = 2 * g as usize * dim_l(g, k);
            out.push(ctx.case(format!("tor A^c_{{{n},0}} g={g}"), describe(0, twos), g, Cost::Module(n), || {
                let s = tree_space(g, n)?.structure();
                Ok(jd_abelian::Structure { rank: 0, invariant_factors: s.invariant_factors, torsion_basis: Vec::new() }.describe())
            }));
            out.push(ctx.case(format!("sq onto tor A^c_{{{n},0}} g={g}"), "injective; image = torsion", g, Cost::Module(n), || {
                let s = sq(g, k)?;
                let st = s.space.structure();
                let torsion = Subgroup::new(s.space.group(), st.torsion_basis.clone());
                Ok(format!(
                    "{}; image {} torsion",
                    if s.hom.is_injective() { "injective" } else { "not injective" },
                    if s.hom.image().equals(&torsion) { "=" } else { "≠" }
                ))
            }));
        }
    }
    out
}

/// `η′ : 𝒜^c_{n,0} → D′ₙ`.
pub fn eta_iso(ctx: &Ctx) -> Vec<Case> {
    let mut out = Vec::new();
    for g in ctx.genera(&[1, 2]) {
        for n in (0..=3).filter(|&n| ctx.degree_ok(n)) {
            out.push(ctx.case_with(format!("η' n={n} g={g}"), g, Cost::Module(n), || {
                let d = BracketKernel::quasi(g, n)?;
                let expected = format!("iso onto D'; {}", d.structure().describe());
                let e = eta_prime(g, n)?;
                let status = match (e.hom.is_injective(), e.hom.image().equals(&d.kernel)) {
                    (true, true) => "iso onto D'".to_string(),
                    (inj, onto) => format!("injective={inj}, image = D' {onto}"),
                };
                Ok((expected, format!("{status}; {}", e.space.structure().describe())))
            }));
        }
    }
    out
}

/// `ν : Lₖ₊₁ ⊗ ℤ/2 → 𝒜^c_{2k,0} ⊗ ℚ/ℤ`.
pub fn nu_inj(ctx: &Ctx) -> Vec<Case> {
    let mut out = Vec::new();
    for g in ctx.genera(&[1, 2]) {
        for k in (1..=2).filter(|&k| ctx.degree_ok(k)) {
            let dim = dim_l(g, k + 1);
            out.push(ctx.case(format!("ν injective k={k} g={g}"), format!("rank {dim}"), g, Cost::Terms(2 * k), || {
                let (rank, _) = nu_rank(g, k)?;
                Ok(format!("rank {rank}"))
            }));
            out.push(ctx.case(format!("ν′ kills θ and ker γ k={k} g={g}"), "ν′∘θ = 0; ν′(ker γ) = 0", g, Cost::Terms(2 * k), || {
                let t = nu_kills_theta(g, k)?;
                let f = nu_factors_through_gamma(g, k)?;
                Ok(format!("ν′∘θ {} 0; ν′(ker γ) {} 0", if t { "=" } else { "≠" }, if f { "=" } else { "≠" }))
            }));
        }
    }
    out
}

/// `δ″ ∘ sq = ξ` on the basis `x ⊗ P(w)` of `(H ⊗ Lₖ) ⊗ ℤ/2`.
pub fn sq_xi(ctx: &Ctx) -> Vec<Case> {
    let mut out = Vec::new();
    for g in ctx.genera(&[1, 2]) {
        for k in (1..=3).filter(|&k| ctx.degree_ok(k)) {
            out.push(ctx.case_with(format!("δ″∘sq = ξ k={k} g={g}"), g, Cost::Terms(2 * k), || {
                let l = FreeLie::cached(g, k)?;
                let mut tally = Tally::default();
                for x in 0..2 * g as u8 {
                    for i in 0..l.dim() {
                        let s = Expr::from_diagram(&sq_diagram(g, k, x, i)?, Ring::Z);
                        let lhs = delta_double_prime(&s)?;
                        let rhs = xi(x, l.expansion(i));
                        tally.record(is_zero_mod2(Catalog::global(), &(&lhs + &rhs)), || format!("x={} P={}", jd_lie::letter_label(x), l.basis_name(i)));
                    }
                }
                Ok((tally.expected(), tally.computed()))
            }));
        }
    }
    out
}

/// `Ker((id⊗½)δ |tor 𝒜^c_{2k−1,0}) = Im Δ_{k−1,0}`, compared as subspaces of
/// the elementary 2-group `tor 𝒜^c_{2k−1,0}`.
pub fn tree_kernel(ctx: &Ctx) -> Vec<Case> {
    let mut out = Vec::new();
    for g in ctx.genera(&[1, 2]) {
        let ks: &[usize] = if g == 1 { &[1, 2] } else { &[1] };
        for &k in ks.iter().filter(|&&k| ctx.degree_ok(k)) {
            out.push(ctx.case_with(format!("Ker (id⊗½)δ = Im Δ k={k} g={g}"), g, Cost::Module(2 * k - 1), || tree_kernel_case(g, k)));
        }
    }
    out
}

fn tree_kernel_case(g: u16, k: usize) -> Result<(String, String), Problem> {
    let cat = Catalog::global();
    let space = tree_space(g, 2 * k - 1)?;
    let group = space.group();
    let st = group.structure();
    if st.invariant_factors.iter().any(|d| *d != 2.into()) {
        return Err(Problem::Failed("torsion is not elementary abelian".into()));
    }
    let m = st.invariant_factors.len();
    let as_expr = |v: &[jd_abelian::BigInt]| {
        let mut e = Expr::zero(Ring::Z);
        for (i, c) in v.iter().enumerate() {
            let c = c.mod_floor(&2.into());
            if c == 1.into() {
                e.add_expr(&space.generator(i), 1);
            }
        }
        e
    };

    // Kernel side: δ of each torsion basis element, then ⊗½.
    let supports = st.torsion_basis.iter().map(|t| Ok(half_support(cat, &delta(&as_expr(t))?))).collect::<Result<Vec<_>, Problem>>()?;
    let vecs = support_vectors(&supports);
    let kernel = f2_kernel(m, &vecs);

    // Image side: Δ of the generators of 𝒜^c_{k−1,0}, in torsion coordinates.
    let source = tree_space(g, k - 1)?;
    let mut image = F2Echelon::new(m);
    let mut outside = 0;
    for i in 0..source.len() {
        let d = doubling(&source.generator(i))?;
        let el = group.element(&space.coords(&d)?);
        if el.free.iter().any(|c| *c != 0.into()) {
            outside += 1;
        }
        image.insert(BitVec::from_indices(m, el.torsion.iter().enumerate().filter(|(_, c)| c.is_odd()).map(|(j, _)| j)));
    }
    let mut both = image.clone();
    let mut equal = kernel.len() == image.rank();
    for v in &kernel {
        equal &= !both.insert(v.clone());
    }
    let expected = format!("(Z/2)^{} = Im Δ inside tor = (Z/2)^{m}", image.rank());
    let computed = if outside > 0 {
        format!("Δ leaves the torsion on {outside} generators")
    } else {
        format!("(Z/2)^{} {} Im Δ inside tor = (Z/2)^{m}", kernel.len(), if equal { "=" } else { "≠" })
    };
    Ok((expected, computed))
}

/// Null space over 𝔽₂ of `e_j ↦ vecs[j]`, as a basis.
fn f2_kernel(m: usize, vecs: &[BitVec]) -> Vec<BitVec> {
    let width = vecs.first().map_or(0, |v| v.len());
    // Augment each image with its unit vector and eliminate.
    let mut rows: Vec<(BitVec, BitVec)> = vecs.iter().enumerate().map(|(j, v)| (v.clone(), BitVec::from_indices(m, [j]))).collect();
    let mut pivot_row = 0;
    for col in 0..width {
        let Some(p) = (pivot_row..rows.len()).find(|&r| rows[r].0.get(col)) else { continue };
        rows.swap(pivot_row, p);
        let (pv, pu) = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != pivot_row && row.0.get(col) {
                row.0.xor_assign(&pv);
                row.1.xor_assign(&pu);
            }
        }
        pivot_row += 1;
    }
    rows.into_iter().skip(pivot_row).map(|(v, u)| {
        debug_assert!(v.is_zero());
        u
    }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn null_space_over_f2() {
        let v = |ix: &[usize]| BitVec::from_indices(3, ix.iter().copied());
        let k = f2_kernel(3, &[v(&[0]), v(&[0]), v(&[1])]);
        assert_eq!(k, vec![BitVec::from_indices(3, [0, 1])]);
        assert_eq!(f2_kernel(2, &[BitVec::zeros(0), BitVec::zeros(0)]).len(), 2);
    }
}
