//! Bracket kernels `Dₙ = ker(H ⊗ Lₙ₊₁ → Lₙ₊₂)` and
//! `D′ₙ = ker(H ⊗ L′ₙ₊₁ → L′ₙ₊₂)`, plus the comparison map between them.

use std::sync::Arc;

use jd_abelian::{BigInt, GroupHom, PresentedGroup, Structure, Subgroup};

use crate::error::LieError;
use crate::tensor::{id_tensor_gamma, lie_bracket_map, quasi_bracket_map};

#[derive(Debug, Clone)]
pub struct BracketKernel {
    pub degree: usize,
    pub quasi: bool,
    pub bracket: GroupHom,
    pub kernel: Subgroup,
}

impl BracketKernel {
    /// `Dₙ`.
    pub fn lie(genus: u16, n: usize) -> Result<BracketKernel, LieError> {
        let bracket = lie_bracket_map(genus, n)?;
        let kernel = bracket.kernel();
        Ok(BracketKernel { degree: n, quasi: false, bracket, kernel })
    }

    /// `D′ₙ`.
    pub fn quasi(genus: u16, n: usize) -> Result<BracketKernel, LieError> {
        let bracket = quasi_bracket_map(genus, n)?;
        let kernel = bracket.kernel();
        Ok(BracketKernel { degree: n, quasi: true, bracket, kernel })
    }

    pub fn ambient(&self) -> &Arc<PresentedGroup> {
        self.bracket.source()
    }

    pub fn structure(&self) -> Structure {
        self.kernel.as_group().structure()
    }
}

/// Pairs two homs with a common source into the direct sum of targets.
pub fn pair_homs(f: &GroupHom, g: &GroupHom) -> Result<GroupHom, LieError> {
    assert_eq!(f.source().generators(), g.source().generators(), "common source");
    let n = f.source().generators();
    let images = (0..n)
        .map(|j| {
            let e = jd_abelian::unit(n, j);
            let mut v = f.apply(&e);
            v.extend(g.apply(&e));
            v
        })
        .collect();
    let target = PresentedGroup::direct_sum(&[f.target().as_ref(), g.target().as_ref()]);
    Ok(GroupHom::from_images(f.source().clone(), Arc::new(target), images)?)
}

/// `ker(id ⊗ γₙ₊₁) ∩ D′ₙ` inside `H ⊗ L′ₙ₊₁`.
pub fn comparison_kernel(genus: u16, n: usize) -> Result<Subgroup, LieError> {
    let both = pair_homs(&quasi_bracket_map(genus, n)?, &id_tensor_gamma(genus, n + 1)?)?;
    Ok(both.kernel())
}

/// Whether every generator of `s` is zero in its ambient group.
pub fn is_trivial_subgroup(s: &Subgroup) -> bool {
    s.generators().iter().all(|v| s.ambient().is_zero(v))
}

pub(crate) fn to_big(v: Vec<i64>) -> Vec<BigInt> {
    v.into_iter().map(BigInt::from).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d3_genus_one_vanishes() {
        let d = BracketKernel::lie(1, 3).unwrap();
        assert_eq!(d.structure().rank, 0);
    }

    #[test]
    fn quasi_kernel_degree_one() {
        // D′₁ ≅ 𝒜^c_{1,0} = ℤ/2^4 at genus 1.
        let d = BracketKernel::quasi(1, 1).unwrap();
        assert_eq!(d.structure().describe(), "Z/2 ^ 4");
    }
}
