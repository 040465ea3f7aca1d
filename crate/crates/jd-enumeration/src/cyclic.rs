//! Cyclic words up to rotation, with the reflection and period tests used
//! to name one-loop diagrams.

use std::fmt;

use serde::Serialize;

use jd_lie::{render_word, Word};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CyclicWord {
    /// Lexicographically least rotation.
    pub letters: Word,
    pub symmetric: bool,
    /// Whether the word is a square `uu`.
    pub periodic: bool,
}

pub fn rotations(w: &[u8]) -> impl Iterator<Item = Word> + '_ {
    (0..w.len()).map(move |r| w[r..].iter().chain(&w[..r]).copied().collect())
}

pub fn least_rotation(w: &[u8]) -> Word {
    rotations(w).min().unwrap_or_default()
}

/// Whether some rotation of `w` reads the same backwards.
pub fn is_symmetric(w: &[u8]) -> bool {
    let rev: Word = w.iter().rev().copied().collect();
    rotations(w).any(|r| r == rev)
}

/// Whether `w = uu`.
pub fn is_square(w: &[u8]) -> bool {
    let n = w.len();
    n % 2 == 0 && w[..n / 2] == w[n / 2..]
}

/// Smallest `p | n` with `w` invariant under rotation by `p`.
pub fn primitive_period(w: &[u8]) -> usize {
    let n = w.len();
    (1..=n).find(|&p| n % p == 0 && (0..n).all(|i| w[i] == w[(i + p) % n])).unwrap_or(0)
}

impl CyclicWord {
    pub fn new(w: &[u8]) -> Self {
        let letters = least_rotation(w);
        CyclicWord { symmetric: is_symmetric(&letters), periodic: is_square(&letters), letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `ww`.
    pub fn doubled(&self) -> CyclicWord {
        let ww: Word = self.letters.iter().chain(&self.letters).copied().collect();
        CyclicWord::new(&ww)
    }

    /// Least representative of the reflection `w ↦ w̄`.
    pub fn reversed(&self) -> CyclicWord {
        let rev: Word = self.letters.iter().rev().copied().collect();
        CyclicWord::new(&rev)
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O({})", render_word(&self.letters))
    }
}

/// Symmetric words `p₁…p_m p_m…p₂` of length `2m − 1`.
pub fn palindrome_of(p: &[u8]) -> Word {
    assert!(!p.is_empty());
    p.iter().chain(p[1..].iter().rev()).copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aab_is_symmetric() {
        let w = CyclicWord::new(&[0, 1, 1]);
        assert!(w.symmetric);
        assert!(!w.periodic);
        assert!(!is_symmetric(&[0, 1, 2, 3]));
        assert!(is_symmetric(&[0, 1, 2, 1]));
    }

    #[test]
    fn doubling_is_periodic() {
        let w = CyclicWord::new(&[2, 0, 1]);
        assert_eq!(w.letters, vec![0, 1, 2]);
        let d = w.doubled();
        assert!(d.periodic);
        assert_eq!(primitive_period(&d.letters), 3);
    }

    #[test]
    fn palindromes() {
        assert_eq!(palindrome_of(&[0]), vec![0]);
        assert_eq!(palindrome_of(&[0, 1, 2]), vec![0, 1, 2, 2, 1]);
        assert!(is_symmetric(&palindrome_of(&[3, 1, 2])));
    }
}
