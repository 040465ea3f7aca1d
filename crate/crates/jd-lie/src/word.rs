//! Words over the `2g` letters `1+, 1-, …` and the tensor algebra on them.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use jd_diagram::Label;

/// Letters are label codes (`1+ ↦ 0`, `1- ↦ 1`, …).
pub type Word = Vec<u8>;

pub fn letter_label(a: u8) -> Label {
    Label::from_code(a as u16)
}

pub fn label_letter(l: Label) -> u8 {
    l.code() as u8
}

pub fn render_word(w: &[u8]) -> String {
    w.iter().map(|&a| letter_label(a).to_string()).collect::<Vec<_>>().join(" ")
}

/// All words of length `n` over `k` letters, in lexicographic order.
pub fn all_words(k: usize, n: usize) -> Vec<Word> {
    let mut out: Vec<Word> = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..k as u8).map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out
}

/// Whether `w` is strictly smaller than each of its proper suffixes.
pub fn is_lyndon(w: &[u8]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// Lyndon words of length `n` over `k` letters in lexicographic order (Duval).
pub fn lyndon_words(k: usize, n: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if k == 0 || n == 0 {
        return out;
    }
    let mut w: Word = vec![0];
    loop {
        if w.len() == n {
            out.push(w.clone());
        }
        let m = w.len();
        while w.len() < n {
            w.push(w[w.len() - m]);
        }
        while w.last().is_some_and(|&l| l as usize == k - 1) {
            w.pop();
        }
        match w.last_mut() {
            None => break,
            Some(l) => *l += 1,
        }
    }
    out
}

/// Standard factorization `w = uv` with `v` the longest proper Lyndon suffix.
pub fn standard_factorization(w: &[u8]) -> (&[u8], &[u8]) {
    assert!(w.len() >= 2, "letters have no factorization");
    let i = (1..w.len()).find(|&i| is_lyndon(&w[i..])).expect("the last letter is Lyndon");
    (&w[..i], &w[i..])
}

pub fn mobius(n: usize) -> i64 {
    let mut n = n;
    let mut mu = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// Witt's formula `(1/n) ∑_{d|n} μ(d) k^{n/d}`.
pub fn witt_dimension(k: usize, n: usize) -> usize {
    assert!(n >= 1);
    let s: i128 = (1..=n).filter(|d| n % d == 0).map(|d| mobius(d) as i128 * (k as i128).pow((n / d) as u32)).sum();
    (s / n as i128) as usize
}

/// A homogeneous or inhomogeneous element of the tensor algebra `T(H)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tensor {
    terms: BTreeMap<Word, i64>,
}

impl Tensor {
    pub fn zero() -> Self {
        Tensor::default()
    }

    pub fn word(w: Word) -> Self {
        let mut t = Tensor::zero();
        t.add_term(w, 1);
        t
    }

    pub fn letter(a: u8) -> Self {
        Tensor::word(vec![a])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn coeff(&self, w: &[u8]) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    /// The lexicographically smallest word with nonzero coefficient.
    pub fn leading(&self) -> Option<(&Word, i64)> {
        self.terms.iter().next().map(|(w, &c)| (w, c))
    }

    pub fn add_term(&mut self, w: Word, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(w) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&mut self, other: &Tensor, scale: i64) {
        for (w, &c) in &other.terms {
            self.add_term(w.clone(), c * scale);
        }
    }

    pub fn scaled(&self, c: i64) -> Tensor {
        let mut t = Tensor::zero();
        t.add(self, c);
        t
    }

    /// Concatenation product.
    pub fn mul(&self, other: &Tensor) -> Tensor {
        let mut out = Tensor::zero();
        for (a, &x) in &self.terms {
            for (b, &y) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, x * y);
            }
        }
        out
    }

    /// The commutator `ab − ba`.
    pub fn bracket(&self, other: &Tensor) -> Tensor {
        let mut out = self.mul(other);
        out.add(&other.mul(self), -1);
        out
    }

    /// Coefficients reduced modulo 2.
    pub fn mod2(&self) -> Tensor {
        let mut out = Tensor::zero();
        for (w, &c) in &self.terms {
            out.add_term(w.clone(), c.rem_euclid(2));
        }
        out
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, &c)) in self.terms.iter().enumerate() {
            match (i, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "{}", render_word(w).replace(' ', "⊗"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lyndon_counts_match_witt() {
        for k in 1..=4 {
            for n in 1..=7 {
                assert_eq!(lyndon_words(k, n).len(), witt_dimension(k, n), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn lyndon_words_are_lyndon_and_complete() {
        let l = lyndon_words(3, 4);
        let brute: Vec<Word> = all_words(3, 4).into_iter().filter(|w| is_lyndon(w)).collect();
        assert_eq!(l, brute);
    }

    #[test]
    fn factorization() {
        assert_eq!(standard_factorization(&[0, 0, 1]), (&[0u8][..], &[0u8, 1][..]));
        assert_eq!(standard_factorization(&[0, 1, 1]), (&[0u8, 1][..], &[1u8][..]));
    }

    #[test]
    fn mobius_values() {
        let mu: Vec<i64> = (1..=10).map(mobius).collect();
        assert_eq!(mu, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
    }

    #[test]
    fn commutator_of_letters() {
        let t = Tensor::letter(0).bracket(&Tensor::letter(1));
        assert_eq!(t.coeff(&[0, 1]), 1);
        assert_eq!(t.coeff(&[1, 0]), -1);
        assert!(Tensor::letter(0).bracket(&Tensor::letter(0)).is_zero());
    }
}
