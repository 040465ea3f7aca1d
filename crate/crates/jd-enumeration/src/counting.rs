//! Pólya counts of necklaces and bracelets, with brute-force cross-checks.

use std::collections::BTreeSet;

use serde::Serialize;

use jd_lie::{all_words, witt_dimension};

use crate::cyclic::rotations;
use crate::error::EnumError;

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Euler's totient.
pub fn totient(n: usize) -> usize {
    (1..=n).filter(|&k| gcd(k, n) == 1).count()
}

pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n % d == 0).collect()
}

fn pow(k: usize, e: usize) -> u128 {
    (k as u128).pow(e as u32)
}

/// `N_k(n) = (1/n) ∑_{d|n} φ(d) k^{n/d}`.
pub fn necklaces(k: usize, n: usize) -> u128 {
    assert!(n >= 1);
    divisors(n).into_iter().map(|d| totient(d) as u128 * pow(k, n / d)).sum::<u128>() / n as u128
}

/// Rotation-and-reflection classes.
pub fn bracelets(k: usize, n: usize) -> u128 {
    let nk = necklaces(k, n);
    if n % 2 == 1 {
        (nk + pow(k, n.div_ceil(2))) / 2
    } else {
        (2 * nk + (k as u128 + 1) * pow(k, n / 2)) / 4
    }
}

pub fn necklaces_brute(k: usize, n: usize) -> usize {
    let reps: BTreeSet<Vec<u8>> = all_words(k, n).iter().map(|w| rotations(w).min().expect("nonempty")).collect();
    reps.len()
}

pub fn bracelets_brute(k: usize, n: usize) -> usize {
    let reps: BTreeSet<Vec<u8>> = all_words(k, n)
        .iter()
        .map(|w| {
            let rev: Vec<u8> = w.iter().rev().copied().collect();
            rotations(w).chain(rotations(&rev)).min().expect("nonempty")
        })
        .collect();
    reps.len()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Counts {
    pub alphabet: usize,
    pub length: usize,
    /// `φ(1), …, φ(n)`.
    pub totients: Vec<usize>,
    pub necklaces: u128,
    pub bracelets: u128,
    pub witt_dim: usize,
}

pub fn counts(alphabet: usize, length: usize) -> Result<Counts, EnumError> {
    if length == 0 {
        return Err(EnumError::Length { n: length, min: 1 });
    }
    Ok(Counts {
        alphabet,
        length,
        totients: (1..=length).map(totient).collect(),
        necklaces: necklaces(alphabet, length),
        bracelets: bracelets(alphabet, length),
        witt_dim: witt_dimension(alphabet, length),
    })
}

/// Predicted rank of `𝒜^c_{n,1}`:
/// `½N + ¼(2g+1)(2g)^{n/2}` for even `n`, `½N − ½(2g)^{(n+1)/2}` for odd `n`.
pub fn rank_formula(g: u16, n: usize) -> Result<u128, EnumError> {
    if n < 2 {
        return Err(EnumError::Length { n, min: 2 });
    }
    let k = 2 * g as usize;
    let nk = necklaces(k, n) as i128;
    let (num, den) = if n % 2 == 0 {
        (2 * nk + (k as i128 + 1) * pow(k, n / 2) as i128, 4)
    } else {
        (nk - pow(k, n.div_ceil(2)) as i128, 2)
    };
    if num < 0 || num % den != 0 {
        return Err(EnumError::NonIntegral { n, g });
    }
    Ok((num / den) as u128)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(necklaces(2, 2), 3);
        assert_eq!(necklaces(2, 3), 4);
        assert_eq!(bracelets(2, 2), 3);
        assert_eq!(totient(12), 4);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_formula(1, 2).unwrap(), 3);
        assert_eq!(rank_formula(1, 3).unwrap(), 0);
        assert_eq!(rank_formula(2, 3).unwrap(), 4);
        assert!(rank_formula(1, 1).is_err());
    }

    #[test]
    fn formulas_match_brute_force() {
        for k in 1..=4 {
            for n in 1..=6 {
                assert_eq!(necklaces(k, n), necklaces_brute(k, n) as u128, "necklaces k={k} n={n}");
                assert_eq!(bracelets(k, n), bracelets_brute(k, n) as u128, "bracelets k={k} n={n}");
            }
        }
    }
}
