//! Planar binary rooted trees with coloured leaves, read as iterated
//! brackets, and their formal combinations modulo antisymmetry.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::word::{letter_label, Tensor};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RTree {
    Leaf(u8),
    Node(Box<RTree>, Box<RTree>),
}

/// A tree in antisymmetry normal form: children sorted at every node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalTree {
    pub tree: RTree,
    /// `±1`, the sign picked up while sorting.
    pub sign: i64,
    /// Some node has equal children, so the class is 2-torsion.
    pub odd: bool,
}

impl RTree {
    pub fn leaf(a: u8) -> RTree {
        RTree::Leaf(a)
    }

    pub fn bracket(a: RTree, b: RTree) -> RTree {
        RTree::Node(Box::new(a), Box::new(b))
    }

    pub fn degree(&self) -> usize {
        match self {
            RTree::Leaf(_) => 1,
            RTree::Node(a, b) => a.degree() + b.degree(),
        }
    }

    pub fn leaves(&self) -> Vec<u8> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<u8>) {
        match self {
            RTree::Leaf(a) => out.push(*a),
            RTree::Node(a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
        }
    }

    pub fn canonical(&self) -> CanonicalTree {
        match self {
            RTree::Leaf(_) => CanonicalTree { tree: self.clone(), sign: 1, odd: false },
            RTree::Node(a, b) => {
                let ca = a.canonical();
                let cb = b.canonical();
                let odd = ca.odd || cb.odd || ca.tree == cb.tree;
                let sign = ca.sign * cb.sign;
                if ca.tree <= cb.tree {
                    CanonicalTree { tree: RTree::bracket(ca.tree, cb.tree), sign, odd }
                } else {
                    CanonicalTree { tree: RTree::bracket(cb.tree, ca.tree), sign: -sign, odd }
                }
            }
        }
    }

    /// Evaluation in the tensor algebra, brackets as commutators.
    pub fn to_tensor(&self) -> Tensor {
        match self {
            RTree::Leaf(a) => Tensor::letter(*a),
            RTree::Node(a, b) => a.to_tensor().bracket(&b.to_tensor()),
        }
    }

    /// Subtree at a path of child choices (`false` = left).
    pub fn at(&self, path: &[bool]) -> &RTree {
        match (path.split_first(), self) {
            (None, _) => self,
            (Some((&right, rest)), RTree::Node(a, b)) => if right { b } else { a }.at(rest),
            (Some(_), RTree::Leaf(_)) => panic!("path leaves the tree"),
        }
    }

    pub fn replace(&self, path: &[bool], new: RTree) -> RTree {
        match (path.split_first(), self) {
            (None, _) => new,
            (Some((&right, rest)), RTree::Node(a, b)) => {
                if right {
                    RTree::Node(a.clone(), Box::new(b.replace(rest, new)))
                } else {
                    RTree::Node(Box::new(a.replace(rest, new)), b.clone())
                }
            }
            (Some(_), RTree::Leaf(_)) => panic!("path leaves the tree"),
        }
    }

    /// Paths to every internal node, root first.
    pub fn node_paths(&self) -> Vec<Vec<bool>> {
        let mut out = Vec::new();
        let mut stack = vec![(self, Vec::new())];
        while let Some((t, p)) = stack.pop() {
            if let RTree::Node(a, b) = t {
                let mut pr = p.clone();
                pr.push(true);
                stack.push((b, pr));
                let mut pl = p.clone();
                pl.push(false);
                stack.push((a, pl));
                out.push(p);
            }
        }
        out
    }

    /// Relabels the leaves.
    pub fn map_leaves(&self, f: &impl Fn(u8) -> u8) -> RTree {
        match self {
            RTree::Leaf(a) => RTree::Leaf(f(*a)),
            RTree::Node(a, b) => RTree::bracket(a.map_leaves(f), b.map_leaves(f)),
        }
    }
}

impl fmt::Display for RTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RTree::Leaf(a) => write!(f, "{}", letter_label(*a)),
            RTree::Node(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

/// A combination of canonical trees; coefficients of odd trees live in `{0,1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TreeCombination {
    terms: BTreeMap<RTree, (i64, bool)>,
}

impl TreeCombination {
    pub fn zero() -> Self {
        TreeCombination::default()
    }

    pub fn from_tree(t: &RTree) -> Self {
        let mut c = TreeCombination::zero();
        c.add_tree(t, 1);
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&RTree, i64)> {
        self.terms.iter().map(|(t, &(c, _))| (t, c))
    }

    pub fn add_tree(&mut self, t: &RTree, coeff: i64) {
        let c = t.canonical();
        self.add_canonical(c.tree, coeff * c.sign, c.odd);
    }

    fn add_canonical(&mut self, t: RTree, coeff: i64, odd: bool) {
        let norm = |x: i64| if odd { x.rem_euclid(2) } else { x };
        match self.terms.entry(t) {
            Entry::Occupied(mut o) => {
                let v = norm(o.get().0 + coeff);
                if v == 0 {
                    o.remove();
                } else {
                    o.get_mut().0 = v;
                }
            }
            Entry::Vacant(v) => {
                let x = norm(coeff);
                if x != 0 {
                    v.insert((x, odd));
                }
            }
        }
    }

    pub fn add(&mut self, other: &TreeCombination, scale: i64) {
        for (t, &(c, odd)) in &other.terms {
            self.add_canonical(t.clone(), c * scale, odd);
        }
    }

    /// Bilinear bracket.
    pub fn bracket(&self, other: &TreeCombination) -> TreeCombination {
        let mut out = TreeCombination::zero();
        for (a, &(x, _)) in &self.terms {
            for (b, &(y, _)) in &other.terms {
                out.add_tree(&RTree::bracket(a.clone(), b.clone()), x * y);
            }
        }
        out
    }

    pub fn to_tensor(&self) -> Tensor {
        let mut out = Tensor::zero();
        for (t, &(c, _)) in &self.terms {
            out.add(&t.to_tensor(), c);
        }
        out
    }
}

impl fmt::Display for TreeCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (t, &(c, _))) in self.terms.iter().enumerate() {
            match (i, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(a: u8) -> RTree {
        RTree::leaf(a)
    }

    #[test]
    fn antisymmetry_sign() {
        let t = RTree::bracket(l(1), l(0)).canonical();
        assert_eq!(t.tree, RTree::bracket(l(0), l(1)));
        assert_eq!(t.sign, -1);
        assert!(!t.odd);
    }

    #[test]
    fn self_bracket_is_two_torsion() {
        let mut c = TreeCombination::zero();
        c.add_tree(&RTree::bracket(l(0), l(0)), 3);
        assert_eq!(c.terms().next().unwrap().1, 1);
        c.add_tree(&RTree::bracket(l(0), l(0)), 1);
        assert!(c.is_zero());
    }

    #[test]
    fn paths_and_replacement() {
        let t = RTree::bracket(l(0), RTree::bracket(l(1), l(2)));
        let p = t.node_paths();
        assert_eq!(p, vec![vec![], vec![true]]);
        assert_eq!(t.at(&[true]), &RTree::bracket(l(1), l(2)));
        assert_eq!(t.replace(&[true], l(3)), RTree::bracket(l(0), l(3)));
        assert_eq!(t.leaves(), vec![0, 1, 2]);
    }
}
