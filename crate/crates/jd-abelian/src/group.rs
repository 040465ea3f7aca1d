//! Finitely presented abelian groups `ℤ^gens / (column span of relations)`.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::f2::{BitVec, F2Echelon};
use crate::matrix::{sparse_dot, IntMatrix, SparseVec};
use crate::smith::{smith, SnfOptions};

/// Cached change of basis to Smith coordinates.
#[derive(Clone, Debug)]
struct SmithData {
    /// `(d, row of U, column of U⁻¹)` for each invariant factor `d > 1`.
    torsion: Vec<(BigInt, SparseVec, SparseVec)>,
    /// `(row of U, column of U⁻¹)` for each free coordinate.
    free: Vec<(SparseVec, SparseVec)>,
}

/// `ℤ^generators` modulo the span of the relation columns.
#[derive(Serialize, Deserialize)]
pub struct PresentedGroup {
    generators: usize,
    relations: IntMatrix,
    #[serde(skip)]
    smith: OnceLock<SmithData>,
}

impl Clone for PresentedGroup {
    fn clone(&self) -> Self {
        let smith = OnceLock::new();
        if let Some(s) = self.smith.get() {
            let _ = smith.set(s.clone());
        }
        PresentedGroup { generators: self.generators, relations: self.relations.clone(), smith }
    }
}

impl fmt::Debug for PresentedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PresentedGroup")
            .field("generators", &self.generators)
            .field("relators", &self.relations.cols())
            .finish()
    }
}

/// Isomorphism type: `ℤ^rank ⊕ ⊕ ℤ/dᵢ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Structure {
    pub rank: usize,
    pub invariant_factors: Vec<BigInt>,
    /// One generator per invariant factor, in generator coordinates.
    pub torsion_basis: Vec<Vec<BigInt>>,
}

impl Structure {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.invariant_factors.is_empty()
    }

    /// Number of ℤ/d summands for a given `d`.
    pub fn count_factor(&self, d: u64) -> usize {
        let d = BigInt::from(d);
        self.invariant_factors.iter().filter(|x| **x == d).count()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.invariant_factors.iter().fold(BigInt::one(), |a, b| a * b)
    }

    /// Compact textual form such as `Z ^ 4 + Z/2 ^ 16`, or `0`.
    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        if self.rank > 0 {
            parts.push(format!("Z ^ {}", self.rank));
        }
        let mut i = 0;
        while i < self.invariant_factors.len() {
            let d = &self.invariant_factors[i];
            let mut j = i;
            while j < self.invariant_factors.len() && &self.invariant_factors[j] == d {
                j += 1;
            }
            parts.push(format!("Z/{} ^ {}", d, j - i));
            i = j;
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }

    /// Same isomorphism type, ignoring bases.
    pub fn same_type(&self, other: &Structure) -> bool {
        self.rank == other.rank && self.invariant_factors == other.invariant_factors
    }
}

/// Normal form of an element: torsion coordinates reduced into `[0, d)`, free
/// coordinates exact. Two elements are equal iff their normal forms are.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    pub torsion: Vec<BigInt>,
    pub free: Vec<BigInt>,
}

impl GroupElement {
    pub fn is_zero(&self) -> bool {
        self.torsion.iter().all(Zero::is_zero) && self.free.iter().all(Zero::is_zero)
    }
}

impl PresentedGroup {
    /// `relations` has one column per relator, rows indexed by generators.
    pub fn new(generators: usize, relations: IntMatrix) -> Self {
        assert_eq!(relations.rows(), generators, "relation rows must match generators");
        PresentedGroup { generators, relations, smith: OnceLock::new() }
    }

    pub fn from_relators<I, R>(generators: usize, relators: I) -> Self
    where
        I: IntoIterator<Item = R>,
        R: IntoIterator<Item = (usize, i64)>,
    {
        let cols = relators
            .into_iter()
            .map(|r| r.into_iter().map(|(i, c)| (i, BigInt::from(c))).collect::<Vec<_>>());
        PresentedGroup::new(generators, IntMatrix::from_columns(generators, cols))
    }

    pub fn free(n: usize) -> Self {
        PresentedGroup::new(n, IntMatrix::zeros(n, 0))
    }

    /// `(ℤ/d)^n`.
    pub fn elementary(n: usize, d: i64) -> Self {
        PresentedGroup::from_relators(n, (0..n).map(|i| vec![(i, d)]))
    }

    pub fn direct_sum(parts: &[&PresentedGroup]) -> Self {
        let gens: usize = parts.iter().map(|p| p.generators).sum();
        let mut cols = Vec::new();
        let mut off = 0;
        for p in parts {
            for c in p.relations.columns() {
                cols.push(c.iter().map(|(i, v)| (i + off, v.clone())).collect::<Vec<_>>());
            }
            off += p.generators;
        }
        PresentedGroup::new(gens, IntMatrix::from_columns(gens, cols))
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    /// Adds further relators, producing the quotient group.
    pub fn quotient(&self, extra: &[Vec<BigInt>]) -> PresentedGroup {
        let mut rel = self.relations.clone();
        for x in extra {
            rel.push_column(x.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())));
        }
        PresentedGroup::new(self.generators, rel)
    }

    fn data(&self) -> &SmithData {
        self.smith.get_or_init(|| {
            let s = smith(&self.relations, SnfOptions { track_u: true, track_u_inv: true, track_v: false });
            let u = s.u.as_ref().expect("tracked");
            let ui = s.u_inv.as_ref().expect("tracked");
            let torsion = s
                .pivots
                .iter()
                .filter(|p| !p.d.is_one())
                .map(|p| (p.d.clone(), u[p.row].clone(), ui[p.row].clone()))
                .collect();
            let free = s.free_rows().into_iter().map(|r| (u[r].clone(), ui[r].clone())).collect();
            SmithData { torsion, free }
        })
    }

    pub fn structure(&self) -> Structure {
        let d = self.data();
        Structure {
            rank: d.free.len(),
            invariant_factors: d.torsion.iter().map(|t| t.0.clone()).collect(),
            torsion_basis: d
                .torsion
                .iter()
                .map(|t| crate::matrix::dense_from_sparse(self.generators, &t.2))
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.data().free.len()
    }

    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.data().torsion.iter().map(|t| t.0.clone()).collect()
    }

    pub fn is_trivial(&self) -> bool {
        let d = self.data();
        d.free.is_empty() && d.torsion.is_empty()
    }

    /// Free-part generators (images of the free Smith basis) in generator coordinates.
    pub fn free_basis(&self) -> Vec<Vec<BigInt>> {
        self.data()
            .free
            .iter()
            .map(|f| crate::matrix::dense_from_sparse(self.generators, &f.1))
            .collect()
    }

    pub fn element(&self, x: &[BigInt]) -> GroupElement {
        assert_eq!(x.len(), self.generators, "coordinate length");
        let d = self.data();
        let torsion = d.torsion.iter().map(|(m, row, _)| sparse_dot(row, x).mod_floor(m)).collect();
        let free = d.free.iter().map(|(row, _)| sparse_dot(row, x)).collect();
        GroupElement { torsion, free }
    }

    pub fn element_i64(&self, x: &[i64]) -> GroupElement {
        self.element(&crate::matrix::dense_from_i64(x))
    }

    pub fn is_zero(&self, x: &[BigInt]) -> bool {
        self.element(x).is_zero()
    }

    /// Canonical representative of `x` in generator coordinates.
    pub fn reduce(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.lift(&self.element(x))
    }

    /// Generator-coordinate vector realizing a normal form.
    pub fn lift(&self, e: &GroupElement) -> Vec<BigInt> {
        let d = self.data();
        let mut out = vec![BigInt::zero(); self.generators];
        for ((_, _, col), c) in d.torsion.iter().zip(&e.torsion) {
            for (i, v) in col {
                out[*i] += v * c;
            }
        }
        for ((_, col), c) in d.free.iter().zip(&e.free) {
            for (i, v) in col {
                out[*i] += v * c;
            }
        }
        out
    }

    /// Free coordinates of a rational vector taken modulo 1: the image in
    /// `G ⊗ ℚ/ℤ`. Torsion vanishes since `ℚ/ℤ` is divisible.
    pub fn qz_coordinates(&self, x: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(x.len(), self.generators, "coordinate length");
        self.data()
            .free
            .iter()
            .map(|(row, _)| {
                let mut s = BigRational::zero();
                for (j, u) in row {
                    if !x[*j].is_zero() {
                        s += &x[*j] * BigRational::from_integer(u.clone());
                    }
                }
                let fl = s.floor();
                s - fl
            })
            .collect()
    }

    /// Free coordinates modulo 2: the image of `x ⊗ ½` in `G ⊗ ℚ/ℤ`, which
    /// vanishes exactly when every free coordinate is even.
    pub fn half_image(&self, x: &[BigInt]) -> BitVec {
        let d = self.data();
        let mut b = BitVec::zeros(d.free.len());
        for (k, (row, _)) in d.free.iter().enumerate() {
            if sparse_dot(row, x).is_odd() {
                b.set(k, true);
            }
        }
        b
    }

    /// `dim_F₂ (G ⊗ ℤ/2)`, computed directly from the relators mod 2.
    pub fn dim_mod2(&self) -> usize {
        let mut ech = F2Echelon::new(self.generators);
        for c in self.relations.columns() {
            let mut b = BitVec::zeros(self.generators);
            for (i, v) in c {
                if v.is_odd() {
                    b.set(*i, true);
                }
            }
            ech.insert(b);
        }
        self.generators - ech.rank()
    }

    /// `dim_ℚ (G ⊗ ℚ)`.
    pub fn rank_q(&self) -> usize {
        self.rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn z_plus_z2() -> PresentedGroup {
        PresentedGroup::from_relators(2, vec![vec![(1, 2)]])
    }

    #[test]
    fn z_plus_z2_structure() {
        let g = z_plus_z2();
        let s = g.structure();
        assert_eq!(s.rank, 1);
        assert_eq!(s.invariant_factors, vec![BigInt::from(2)]);
        assert_eq!(s.describe(), "Z ^ 1 + Z/2 ^ 1");
    }

    #[test]
    fn qz_examples() {
        let g = z_plus_z2();
        let half = |a: i64, b: i64| {
            vec![BigRational::new(a.into(), 2.into()), BigRational::new(b.into(), 2.into())]
        };
        assert!(g.qz_coordinates(&half(2, 0)).iter().all(Zero::is_zero));
        assert!(!g.qz_coordinates(&half(1, 0)).iter().all(Zero::is_zero));
        assert!(g.qz_coordinates(&half(0, 1)).iter().all(Zero::is_zero));
    }

    #[test]
    fn zero_relations_give_free_group() {
        let g = PresentedGroup::new(3, IntMatrix::zeros(3, 2));
        assert_eq!(g.structure().rank, 3);
    }

    #[test]
    fn mod2_dimension_matches_structure() {
        let g = PresentedGroup::from_relators(3, vec![vec![(0, 4)], vec![(1, 3)], vec![(2, 6), (0, 2)]]);
        let s = g.structure();
        let even = s.invariant_factors.iter().filter(|d| d.is_even()).count();
        assert_eq!(g.dim_mod2(), s.rank + even);
    }
}
