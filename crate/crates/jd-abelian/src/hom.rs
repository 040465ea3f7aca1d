//! Homomorphisms between presented groups, subgroups and lattices.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::AbelianError;
use crate::f2::{BitVec, F2Echelon};
use crate::group::{GroupElement, PresentedGroup};
use crate::matrix::{sparse_dot, IntMatrix, SparseVec};
use crate::smith::{smith, SnfOptions};

/// Integer kernel of a matrix: a ℤ-basis of `{x : M x = 0}`.
pub fn integer_kernel(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let s = smith(m, SnfOptions { track_u: false, track_u_inv: false, track_v: true });
    let v = s.v.as_ref().expect("tracked");
    s.free_cols()
        .into_iter()
        .map(|c| crate::matrix::dense_from_sparse(m.cols(), &v[c]))
        .collect()
}

/// A sublattice of `ℤ^n` given by generators, with a membership oracle.
#[derive(Clone, Debug)]
pub struct Lattice {
    dim: usize,
    pivots: Vec<(usize, BigInt)>,
    free_rows: Vec<usize>,
    u: Vec<SparseVec>,
}

impl Lattice {
    pub fn new(dim: usize, gens: &IntMatrix) -> Self {
        assert_eq!(gens.rows(), dim, "lattice generator length");
        let s = smith(gens, SnfOptions { track_u: true, track_u_inv: false, track_v: false });
        let free_rows = s.free_rows();
        let pivots = s.pivots.iter().map(|p| (p.row, p.d.clone())).collect();
        Lattice { dim, pivots, free_rows, u: s.u.expect("tracked") }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        assert_eq!(x.len(), self.dim, "vector length");
        self.pivots.iter().all(|(r, d)| sparse_dot(&self.u[*r], x).is_multiple_of(d))
            && self.free_rows.iter().all(|r| sparse_dot(&self.u[*r], x).is_zero())
    }
}

/// A subgroup of a presented group, given by generating elements.
#[derive(Clone, Debug)]
pub struct Subgroup {
    ambient: Arc<PresentedGroup>,
    generators: Vec<Vec<BigInt>>,
    lattice: Lattice,
}

impl Subgroup {
    pub fn new(ambient: Arc<PresentedGroup>, generators: Vec<Vec<BigInt>>) -> Self {
        let n = ambient.generators();
        let gm = IntMatrix::from_columns(
            n,
            generators.iter().map(|g| g.iter().enumerate().map(|(i, v)| (i, v.clone())).collect::<Vec<_>>()),
        );
        let lattice = Lattice::new(n, &gm.hcat(ambient.relations()));
        Subgroup { ambient, generators, lattice }
    }

    pub fn ambient(&self) -> &Arc<PresentedGroup> {
        &self.ambient
    }

    pub fn generators(&self) -> &[Vec<BigInt>] {
        &self.generators
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.lattice.contains(x)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }

    pub fn equals(&self, other: &Subgroup) -> bool {
        self.is_subgroup_of(other) && other.is_subgroup_of(self)
    }

    /// The subgroup as a group in its own right, generated by `generators`.
    pub fn as_group(&self) -> PresentedGroup {
        generated_subgroup(&self.ambient, &self.generators)
    }
}

/// Presentation of the subgroup of `ambient` generated by `gens`:
/// relators are the integer combinations of `gens` that vanish in `ambient`.
pub fn generated_subgroup(ambient: &PresentedGroup, gens: &[Vec<BigInt>]) -> PresentedGroup {
    let n = ambient.generators();
    let k = gens.len();
    let gm = IntMatrix::from_columns(
        n,
        gens.iter().map(|g| g.iter().enumerate().map(|(i, v)| (i, v.clone())).collect::<Vec<_>>()),
    );
    let ker = integer_kernel(&gm.hcat(ambient.relations()));
    let rel = IntMatrix::from_columns(
        k,
        ker.iter().map(|v| v[..k].iter().enumerate().map(|(i, x)| (i, x.clone())).collect::<Vec<_>>()),
    );
    PresentedGroup::new(k, rel)
}

/// A homomorphism certified to send every source relator to zero.
#[derive(Clone, Debug)]
pub struct GroupHom {
    source: Arc<PresentedGroup>,
    target: Arc<PresentedGroup>,
    /// `target.generators × source.generators`.
    matrix: IntMatrix,
}

impl GroupHom {
    /// Builds the hom from one image vector per source generator and checks
    /// that every source relator lands in the target's relation lattice.
    pub fn from_images(
        source: Arc<PresentedGroup>,
        target: Arc<PresentedGroup>,
        images: Vec<Vec<BigInt>>,
    ) -> Result<Self, AbelianError> {
        if images.len() != source.generators() {
            return Err(AbelianError::Dimension { expected: source.generators(), got: images.len() });
        }
        for im in &images {
            if im.len() != target.generators() {
                return Err(AbelianError::Dimension { expected: target.generators(), got: im.len() });
            }
        }
        let matrix = IntMatrix::from_columns(
            target.generators(),
            images.iter().map(|g| g.iter().enumerate().map(|(i, v)| (i, v.clone())).collect::<Vec<_>>()),
        );
        let h = GroupHom { source, target, matrix };
        for (k, rel) in h.source.relations().columns().iter().enumerate() {
            let x = crate::matrix::dense_from_sparse(h.source.generators(), rel);
            if !h.target.is_zero(&h.matrix.mul_vec(&x)) {
                return Err(AbelianError::NotWellDefined { relator: k });
            }
        }
        Ok(h)
    }

    pub fn identity(g: Arc<PresentedGroup>) -> Self {
        let n = g.generators();
        GroupHom { source: g.clone(), target: g, matrix: IntMatrix::identity(n) }
    }

    pub fn source(&self) -> &Arc<PresentedGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<PresentedGroup> {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.matrix.mul_vec(x)
    }

    pub fn apply_element(&self, x: &[BigInt]) -> GroupElement {
        self.target.element(&self.apply(x))
    }

    pub fn compose(&self, after: &GroupHom) -> Result<GroupHom, AbelianError> {
        let images = (0..self.source.generators())
            .map(|j| {
                let col = crate::matrix::dense_from_sparse(self.target.generators(), self.matrix.column(j));
                after.apply(&col)
            })
            .collect();
        GroupHom::from_images(self.source.clone(), after.target.clone(), images)
    }

    /// `{x : f(x) = 0}` as a lattice in source generator coordinates.
    fn kernel_vectors(&self) -> Vec<Vec<BigInt>> {
        let s = self.source.generators();
        let ker = integer_kernel(&self.matrix.hcat(self.target.relations()));
        ker.into_iter().map(|v| v[..s].to_vec()).filter(|v| v.iter().any(|x| !x.is_zero())).collect()
    }

    pub fn kernel(&self) -> Subgroup {
        Subgroup::new(self.source.clone(), self.kernel_vectors())
    }

    pub fn image(&self) -> Subgroup {
        let gens = (0..self.source.generators())
            .map(|j| crate::matrix::dense_from_sparse(self.target.generators(), self.matrix.column(j)))
            .collect();
        Subgroup::new(self.target.clone(), gens)
    }

    pub fn cokernel(&self) -> PresentedGroup {
        PresentedGroup::new(self.target.generators(), self.target.relations().hcat(&self.matrix))
    }

    pub fn is_injective(&self) -> bool {
        self.kernel_vectors().iter().all(|v| self.source.is_zero(v))
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().is_trivial()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Rank over 𝔽₂ of the induced map `source ⊗ ℤ/2 → target ⊗ ℤ/2`.
    pub fn rank_mod2(&self) -> usize {
        let tgt = self.target.generators();
        let mut rel = F2Echelon::new(tgt);
        for c in self.target.relations().columns() {
            rel.insert(odd_bits(tgt, c));
        }
        let base = rel.rank();
        for c in self.matrix.columns() {
            rel.insert(odd_bits(tgt, c));
        }
        rel.rank() - base
    }
}

fn odd_bits(n: usize, c: &SparseVec) -> BitVec {
    BitVec::from_indices(n, c.iter().filter(|(_, v)| v.is_odd()).map(|(i, _)| *i))
}

/// Convenience: unit vector.
pub fn unit(n: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[i] = BigInt::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn doubling_map_has_cokernel_z2() {
        let z = Arc::new(PresentedGroup::free(1));
        let f = GroupHom::from_images(z.clone(), z, vec![vec![BigInt::from(2)]]).unwrap();
        let c = f.cokernel().structure();
        assert_eq!(c.rank, 0);
        assert_eq!(c.invariant_factors, vec![BigInt::from(2)]);
        assert!(f.is_injective());
        assert!(!f.is_surjective());
    }

    #[test]
    fn identity_is_isomorphism() {
        let g = Arc::new(PresentedGroup::from_relators(3, vec![vec![(0, 2)], vec![(1, 3), (2, 3)]]));
        assert!(GroupHom::identity(g).is_isomorphism());
    }

    #[test]
    fn ill_defined_map_is_rejected() {
        let z2 = Arc::new(PresentedGroup::elementary(1, 2));
        let z = Arc::new(PresentedGroup::free(1));
        let err = GroupHom::from_images(z2, z, vec![vec![BigInt::one()]]).unwrap_err();
        assert_eq!(err, AbelianError::NotWellDefined { relator: 0 });
    }

    #[test]
    fn projection_kernel() {
        // ℤ² → ℤ, (a, b) ↦ a − b.
        let z2 = Arc::new(PresentedGroup::free(2));
        let z = Arc::new(PresentedGroup::free(1));
        let f = GroupHom::from_images(z2, z, vec![vec![BigInt::one()], vec![-BigInt::one()]]).unwrap();
        let k = f.kernel();
        assert!(k.contains(&[BigInt::from(3), BigInt::from(3)]));
        assert!(!k.contains(&[BigInt::from(1), BigInt::from(0)]));
        assert_eq!(k.as_group().structure().rank, 1);
    }
}
