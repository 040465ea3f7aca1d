//! Zero tests in `𝒜^Y ⊗ ℤ/2` and `𝒜^Y ⊗ ℚ/ℤ`.
//!
//! The non-connected module is the symmetric algebra on the connected one,
//! and symmetric powers commute with base change. A term is therefore
//! expanded as the product of its components' normal forms (mod 2) or free
//! Smith coordinates (mod 2, for `x ⊗ ½`), and the expression vanishes iff
//! every resulting monomial cancels.

use std::collections::HashMap;
use std::sync::Arc;

use jd_diagram::{canonicalize, Expr};

use crate::block::BlockId;
use crate::catalog::Catalog;

/// A product of basis elements, one per component, sorted.
pub type Monomial = Vec<(BlockId, usize)>;

fn expand(cat: &Catalog, e: &Expr, coords: impl Fn(&Catalog, &jd_diagram::SignedClass) -> Arc<Vec<usize>>) -> HashMap<Monomial, ()> {
    let mut acc: HashMap<Monomial, ()> = HashMap::new();
    for (_, term) in e.terms() {
        if term.coeff.rem_euclid(2) == 0 {
            continue;
        }
        let mut factors: Vec<(BlockId, Arc<Vec<usize>>)> = Vec::new();
        let mut vanishes = false;
        for comp in term.rep.split_components() {
            let c = canonicalize(&comp);
            if c.sign == 0 {
                vanishes = true;
                break;
            }
            let v = coords(cat, &c);
            if v.is_empty() {
                vanishes = true;
                break;
            }
            factors.push((BlockId::of(&c), v));
        }
        if vanishes {
            continue;
        }
        let mut idx = vec![0usize; factors.len()];
        'odometer: loop {
            let mut mono: Monomial = factors.iter().zip(&idx).map(|((b, v), &i)| (b.clone(), v[i])).collect();
            mono.sort();
            if acc.remove(&mono).is_none() {
                acc.insert(mono, ());
            }
            let mut k = 0;
            loop {
                if k == factors.len() {
                    break 'odometer;
                }
                idx[k] += 1;
                if idx[k] < factors[k].1.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }
    acc
}

/// Whether `e` vanishes in `𝒜 ⊗ ℤ/2`.
pub fn is_zero_mod2(cat: &Catalog, e: &Expr) -> bool {
    expand(cat, e, |c, x| c.mod2_normal_form(x)).is_empty()
}

/// Whether `e ⊗ ½` vanishes in `𝒜 ⊗ ℚ/ℤ`, i.e. whether `e` is twice an
/// element modulo torsion.
pub fn is_half_zero(cat: &Catalog, e: &Expr) -> bool {
    expand(cat, e, |c, x| c.half_coordinates(x)).is_empty()
}

/// Whether `a = b` in `𝒜 ⊗ ℤ/2`.
pub fn equal_mod2(cat: &Catalog, a: &Expr, b: &Expr) -> bool {
    is_zero_mod2(cat, &(&a.to_mod2() + &b.to_mod2()))
}

/// The monomials of `e` in `𝒜 ⊗ ℤ/2`, sorted: an 𝔽₂-coordinate vector.
pub fn mod2_support(cat: &Catalog, e: &Expr) -> Vec<Monomial> {
    let mut v: Vec<Monomial> = expand(cat, e, |c, x| c.mod2_normal_form(x)).into_keys().collect();
    v.sort();
    v
}

/// The monomials of `e ⊗ ½` in `𝒜 ⊗ ℚ/ℤ`, sorted.
pub fn half_support(cat: &Catalog, e: &Expr) -> Vec<Monomial> {
    let mut v: Vec<Monomial> = expand(cat, e, |c, x| c.half_coordinates(x)).into_keys().collect();
    v.sort();
    v
}

/// Supports as bit vectors over a common monomial index.
pub fn support_vectors(supports: &[Vec<Monomial>]) -> Vec<jd_abelian::BitVec> {
    let mut index: HashMap<&Monomial, usize> = HashMap::new();
    for s in supports {
        for m in s {
            let n = index.len();
            index.entry(m).or_insert(n);
        }
    }
    let n = index.len();
    supports.iter().map(|s| jd_abelian::BitVec::from_indices(n, s.iter().map(|m| index[m]))).collect()
}
