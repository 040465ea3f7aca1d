//! Formal combinations of diagram classes.

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::canon::{canonicalize, ClassKey, SignedClass};
use crate::diagram::Diagram;
use crate::label::Label;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ring {
    Z,
    Mod2,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub rep: Diagram,
    pub odd: bool,
    pub coeff: i64,
}

/// A combination `∑ cᵢ Dᵢ` over canonical classes. Classes with an odd
/// automorphism are 2-torsion already, so their coefficients are kept in
/// `{0, 1}`; zero terms are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expr {
    ring: Ring,
    terms: BTreeMap<ClassKey, Term>,
}

impl Expr {
    pub fn zero(ring: Ring) -> Self {
        Expr { ring, terms: BTreeMap::new() }
    }

    pub fn from_diagram(d: &Diagram, ring: Ring) -> Self {
        let mut e = Expr::zero(ring);
        e.add_diagram(d, 1);
        e
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ClassKey, &Term)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &ClassKey) -> i64 {
        self.terms.get(key).map_or(0, |t| t.coeff)
    }

    fn normalize(&self, c: i64, odd: bool) -> i64 {
        if self.ring == Ring::Mod2 || odd {
            c.rem_euclid(2)
        } else {
            c
        }
    }

    pub fn add_class(&mut self, c: &SignedClass, coeff: i64) {
        if c.sign == 0 || coeff == 0 {
            return;
        }
        let delta = coeff.checked_mul(c.sign as i64).expect("coefficient overflow");
        let odd = c.odd_automorphism;
        let entry = self.terms.entry(c.key.clone());
        let new = match &entry {
            std::collections::btree_map::Entry::Occupied(o) => o.get().coeff.checked_add(delta).expect("coefficient overflow"),
            std::collections::btree_map::Entry::Vacant(_) => delta,
        };
        let new = if self.ring == Ring::Mod2 || odd { new.rem_euclid(2) } else { new };
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                if new == 0 {
                    o.remove();
                } else {
                    o.get_mut().coeff = new;
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                if new != 0 {
                    v.insert(Term { rep: c.rep.clone(), odd, coeff: new });
                }
            }
        }
    }

    pub fn add_diagram(&mut self, d: &Diagram, coeff: i64) {
        if coeff == 0 {
            return;
        }
        self.add_class(&canonicalize(d), coeff);
    }

    pub fn add_expr(&mut self, other: &Expr, scale: i64) {
        for (k, t) in &other.terms {
            self.add_key(k, t, scale);
        }
    }

    fn add_key(&mut self, k: &ClassKey, t: &Term, scale: i64) {
        let delta = t.coeff.checked_mul(scale).expect("coefficient overflow");
        let cur = self.coeff(k);
        let new = self.normalize(cur.checked_add(delta).expect("coefficient overflow"), t.odd);
        if new == 0 {
            self.terms.remove(k);
        } else {
            self.terms
                .entry(k.clone())
                .and_modify(|x| x.coeff = new)
                .or_insert_with(|| Term { rep: t.rep.clone(), odd: t.odd, coeff: new });
        }
    }

    pub fn scale(&self, c: i64) -> Expr {
        let mut out = Expr::zero(self.ring);
        out.add_expr(self, c);
        out
    }

    /// Reduction of coefficients modulo 2.
    pub fn to_mod2(&self) -> Expr {
        let mut out = Expr::zero(Ring::Mod2);
        out.add_expr(self, 1);
        out
    }

    /// Reinterprets a combination with coefficients lifted to `ℤ` (mod-2
    /// coefficients become `1`).
    pub fn to_integral(&self) -> Expr {
        Expr { ring: Ring::Z, terms: self.terms.clone() }
    }

    /// Linear extension of a map on representatives.
    pub fn map_linear(&self, ring: Ring, mut f: impl FnMut(&Diagram) -> Expr) -> Expr {
        let mut out = Expr::zero(ring);
        for t in self.terms.values() {
            out.add_expr(&f(&t.rep), t.coeff);
        }
        out
    }

    /// Bilinear extension of a map on pairs of representatives.
    pub fn map_bilinear(&self, other: &Expr, ring: Ring, mut f: impl FnMut(&Diagram, &Diagram) -> Expr) -> Expr {
        let mut out = Expr::zero(ring);
        for a in self.terms.values() {
            for b in other.terms.values() {
                out.add_expr(&f(&a.rep, &b.rep), a.coeff.checked_mul(b.coeff).expect("coefficient overflow"));
            }
        }
        out
    }

    /// Applies a relabeling to every term.
    pub fn map_labels(&self, f: impl Fn(Label) -> Label) -> Expr {
        self.map_linear(self.ring, |d| Expr::from_diagram(&d.map_labels(&f), self.ring))
    }

    /// Largest label index occurring in the expression.
    pub fn max_index(&self) -> u16 {
        self.terms.values().flat_map(|t| t.rep.legs().iter().map(|l| l.index())).max().unwrap_or(0)
    }
}

impl Add for &Expr {
    type Output = Expr;

    fn add(self, rhs: &Expr) -> Expr {
        let mut out = self.clone();
        out.add_expr(rhs, 1);
        out
    }
}

impl Sub for &Expr {
    type Output = Expr;

    fn sub(self, rhs: &Expr) -> Expr {
        let mut out = self.clone();
        out.add_expr(rhs, -1);
        out
    }
}

impl Neg for &Expr {
    type Output = Expr;

    fn neg(self) -> Expr {
        self.scale(-1)
    }
}

impl AddAssign<&Expr> for Expr {
    fn add_assign(&mut self, rhs: &Expr) {
        self.add_expr(rhs, 1);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> Label {
        s.parse().unwrap()
    }

    #[test]
    fn as_pair_cancels() {
        let a = Diagram::tree(&[l("1+"), l("2+"), l("1-")]).unwrap();
        let b = Diagram::tree(&[l("2+"), l("1+"), l("1-")]).unwrap();
        let mut e = Expr::from_diagram(&a, Ring::Z);
        e.add_diagram(&b, 1);
        assert!(e.is_zero());
    }

    #[test]
    fn odd_class_is_two_torsion() {
        let a = Diagram::tree(&[l("1+"), l("2+"), l("1+")]).unwrap();
        let mut e = Expr::zero(Ring::Z);
        e.add_diagram(&a, 2);
        assert!(e.is_zero());
        e.add_diagram(&a, 3);
        assert_eq!(e.len(), 1);
        assert_eq!(e.terms().next().unwrap().1.coeff, 1);
    }

    #[test]
    fn self_loop_vanishes() {
        assert!(Expr::from_diagram(&Diagram::wheel(&[l("1+")]).unwrap(), Ring::Z).is_zero());
    }

    #[test]
    fn mod2_drops_even_terms() {
        let a = Diagram::wheel(&[l("1+"), l("1-")]).unwrap();
        let mut e = Expr::zero(Ring::Z);
        e.add_diagram(&a, 4);
        assert!(!e.is_zero());
        assert!(e.to_mod2().is_zero());
    }
}
