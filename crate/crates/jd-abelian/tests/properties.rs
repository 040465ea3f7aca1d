use std::sync::Arc;

use jd_abelian::{smith, smith_decompose, BigInt, GroupHom, IntMatrix, PresentedGroup, SnfOptions};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-6i64..7, c), r))
}

fn to_group(rows: &[Vec<i64>]) -> PresentedGroup {
    let m = IntMatrix::from_rows(rows);
    PresentedGroup::new(m.rows(), m)
}

/// Determinant by fraction-free Bareiss elimination.
fn det(m: &IntMatrix) -> BigInt {
    let n = m.rows();
    let mut a = m.to_dense();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else { return BigInt::zero() };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

proptest! {
    #[test]
    fn decomposition_is_exact_and_unimodular(rows in small_matrix()) {
        let m = IntMatrix::from_rows(&rows);
        let dec = smith_decompose(&m);
        prop_assert_eq!(dec.u.mul(&m).mul(&dec.v), dec.d.clone());
        prop_assert_eq!(det(&dec.u).abs(), BigInt::one());
        prop_assert_eq!(det(&dec.v).abs(), BigInt::one());
        let diag: Vec<BigInt> = (0..m.rows().min(m.cols())).map(|i| dec.d.get(i, i)).filter(|d| !d.is_zero()).collect();
        for w in diag.windows(2) {
            prop_assert!(w[1].is_multiple_of(&w[0]));
        }
        prop_assert!(diag.iter().all(|d| d.is_positive()));
    }

    #[test]
    fn structure_is_shuffle_invariant(rows in small_matrix(), seed in any::<u64>()) {
        let g = to_group(&rows);
        let mut perm_r: Vec<usize> = (0..rows.len()).collect();
        let mut perm_c: Vec<usize> = (0..rows[0].len()).collect();
        let mut s = seed;
        let mut next = || { s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); (s >> 33) as usize };
        for i in (1..perm_r.len()).rev() { let j = next() % (i + 1); perm_r.swap(i, j); }
        for i in (1..perm_c.len()).rev() { let j = next() % (i + 1); perm_c.swap(i, j); }
        let shuffled: Vec<Vec<i64>> = perm_r.iter().map(|&i| perm_c.iter().map(|&j| rows[i][j]).collect()).collect();
        let h = to_group(&shuffled);
        prop_assert_eq!(g.rank(), h.rank());
        prop_assert_eq!(g.invariant_factors(), h.invariant_factors());
    }

    #[test]
    fn reduce_is_a_retraction(rows in small_matrix(), x in prop::collection::vec(-9i64..10, 5)) {
        let g = to_group(&rows);
        let x: Vec<BigInt> = x.into_iter().take(g.generators()).chain(std::iter::repeat(0)).take(g.generators()).map(BigInt::from).collect();
        let r = g.reduce(&x);
        prop_assert_eq!(g.reduce(&r), r.clone());
        prop_assert_eq!(g.element(&r), g.element(&x));
        let diff: Vec<BigInt> = x.iter().zip(&r).map(|(a, b)| a - b).collect();
        prop_assert!(g.is_zero(&diff));
    }

    #[test]
    fn mod2_dimension_counts_even_factors(rows in small_matrix()) {
        let g = to_group(&rows);
        let even = g.invariant_factors().iter().filter(|d| d.is_even()).count();
        prop_assert_eq!(g.dim_mod2(), g.rank() + even);
    }

    #[test]
    fn rank_nullity_for_free_source(rows in small_matrix()) {
        // A map ℤ^c → ℤ^r given by the matrix itself.
        let m = IntMatrix::from_rows(&rows);
        let src = Arc::new(PresentedGroup::free(m.cols()));
        let tgt = Arc::new(PresentedGroup::free(m.rows()));
        let images = (0..m.cols()).map(|j| (0..m.rows()).map(|i| m.get(i, j)).collect()).collect();
        let f = GroupHom::from_images(src.clone(), tgt, images).unwrap();
        let k = f.kernel().as_group().rank();
        let im = f.image().as_group().rank();
        prop_assert_eq!(src.rank(), k + im);
        let s = smith(&m, SnfOptions::default());
        prop_assert_eq!(im, s.matrix_rank());
    }
}

#[test]
fn row_two_four_six_has_factor_two() {
    let g = PresentedGroup::new(1, IntMatrix::from_rows(&[vec![2, 4, 6]]));
    assert_eq!(g.invariant_factors(), vec![BigInt::from(2)]);
    assert_eq!(g.rank(), 0);
}

#[test]
fn zero_matrix_gives_free_group() {
    let g = PresentedGroup::new(3, IntMatrix::zeros(3, 4));
    assert_eq!(g.rank(), 3);
    assert!(g.invariant_factors().is_empty());
}
