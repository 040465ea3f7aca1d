//! Jacobi diagrams as dart structures.
//!
//! Trivalent vertex `i` owns darts `3i, 3i+1, 3i+2`, listed in its cyclic
//! (counterclockwise) order; leg `j` owns dart `3t + j`. An edge is a pair of
//! darts, so multi-edges and self-loops are distinguished by dart identity.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::DiagramError;
use crate::label::Label;

/// Endpoint of an edge in the literal (edge-list) description.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Endpoint {
    Vertex(usize),
    Leg(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Diagram {
    trivalent: usize,
    legs: Vec<Label>,
    pair: Vec<usize>,
}

/// What a dart is attached to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DartOwner {
    Vertex { vertex: usize, slot: usize },
    Leg(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metrics {
    pub i_deg: usize,
    /// First Betti number of each connected component, in component order.
    pub loop_degrees: Vec<usize>,
    pub leg_labels: Vec<Label>,
    pub components: usize,
    pub strut_free: bool,
    pub top_substantial: bool,
}

impl Diagram {
    /// Builds a diagram from raw darts, checking the invariants.
    pub fn from_darts(trivalent: usize, legs: Vec<Label>, pair: Vec<usize>) -> Result<Self, DiagramError> {
        let d = Diagram { trivalent, legs, pair };
        d.validate()?;
        Ok(d)
    }

    pub(crate) fn from_darts_unchecked(trivalent: usize, legs: Vec<Label>, pair: Vec<usize>) -> Self {
        let d = Diagram { trivalent, legs, pair };
        debug_assert!(d.validate().is_ok(), "invalid diagram {d:?}");
        d
    }

    fn validate(&self) -> Result<(), DiagramError> {
        let n = 3 * self.trivalent + self.legs.len();
        if self.pair.len() != n {
            return Err(DiagramError::Invalid(format!("expected {n} darts, got {}", self.pair.len())));
        }
        for (d, &p) in self.pair.iter().enumerate() {
            if p >= n || p == d || self.pair[p] != d {
                return Err(DiagramError::Invalid(format!("dart {d} is not properly paired")));
            }
        }
        Ok(())
    }

    pub fn empty() -> Self {
        Diagram { trivalent: 0, legs: Vec::new(), pair: Vec::new() }
    }

    pub fn trivalent_count(&self) -> usize {
        self.trivalent
    }

    pub fn legs(&self) -> &[Label] {
        &self.legs
    }

    pub fn leg_count(&self) -> usize {
        self.legs.len()
    }

    pub fn dart_count(&self) -> usize {
        self.pair.len()
    }

    pub fn pair(&self, d: usize) -> usize {
        self.pair[d]
    }

    pub fn pairs(&self) -> &[usize] {
        &self.pair
    }

    pub fn is_empty(&self) -> bool {
        self.pair.is_empty()
    }

    pub fn leg_dart(&self, leg: usize) -> usize {
        3 * self.trivalent + leg
    }

    pub fn owner(&self, d: usize) -> DartOwner {
        if d < 3 * self.trivalent {
            DartOwner::Vertex { vertex: d / 3, slot: d % 3 }
        } else {
            DartOwner::Leg(d - 3 * self.trivalent)
        }
    }

    /// Node index of a dart: vertices `0..t`, legs `t..t+m`.
    pub fn node_of(&self, d: usize) -> usize {
        if d < 3 * self.trivalent {
            d / 3
        } else {
            d - 2 * self.trivalent
        }
    }

    pub fn node_count(&self) -> usize {
        self.trivalent + self.legs.len()
    }

    pub fn has_self_loop(&self) -> bool {
        (0..3 * self.trivalent).any(|d| self.pair[d] < 3 * self.trivalent && self.pair[d] / 3 == d / 3)
    }

    /// Builds a diagram from the literal description: edges as endpoint
    /// pairs and, per vertex, the cyclic sequence of its incident edge ids.
    pub fn from_edges(
        trivalent: usize,
        legs: Vec<Label>,
        edges: &[(Endpoint, Endpoint)],
        cyclic: &[Vec<usize>],
    ) -> Result<Self, DiagramError> {
        let m = legs.len();
        if (3 * trivalent + m) % 2 != 0 {
            return Err(DiagramError::Invalid("3·t + legs must be even".into()));
        }
        if cyclic.len() != trivalent {
            return Err(DiagramError::Invalid(format!("cyclic orders given for {} of {trivalent} vertices", cyclic.len())));
        }
        let mut darts_of_edge: Vec<Vec<usize>> = vec![Vec::new(); edges.len()];
        for (v, cyc) in cyclic.iter().enumerate() {
            if cyc.len() != 3 {
                return Err(DiagramError::Invalid(format!("vertex v{} lists {} edges, expected 3", v + 1, cyc.len())));
            }
            for (slot, &e) in cyc.iter().enumerate() {
                if e >= edges.len() {
                    return Err(DiagramError::Invalid(format!("unknown edge e{}", e + 1)));
                }
                darts_of_edge[e].push(3 * v + slot);
            }
        }
        let mut leg_seen = vec![false; m];
        for (e, &(a, b)) in edges.iter().enumerate() {
            for end in [a, b] {
                match end {
                    Endpoint::Vertex(v) => {
                        if v >= trivalent {
                            return Err(DiagramError::Invalid(format!("unknown vertex v{}", v + 1)));
                        }
                    }
                    Endpoint::Leg(l) => {
                        if l >= m {
                            return Err(DiagramError::Invalid(format!("unknown leg l{}", l + 1)));
                        }
                        if leg_seen[l] {
                            return Err(DiagramError::Invalid(format!("leg l{} has more than one edge", l + 1)));
                        }
                        leg_seen[l] = true;
                        darts_of_edge[e].push(3 * trivalent + l);
                    }
                }
            }
            // Each vertex endpoint must be matched by one occurrence in its cyclic order.
            let mut want: BTreeMap<usize, usize> = BTreeMap::new();
            for end in [a, b] {
                if let Endpoint::Vertex(v) = end {
                    *want.entry(v).or_default() += 1;
                }
            }
            let mut have: BTreeMap<usize, usize> = BTreeMap::new();
            for &d in &darts_of_edge[e] {
                if d < 3 * trivalent {
                    *have.entry(d / 3).or_default() += 1;
                }
            }
            if want != have {
                return Err(DiagramError::Invalid(format!("edge e{} disagrees with the cyclic orders", e + 1)));
            }
        }
        if let Some(l) = leg_seen.iter().position(|s| !s) {
            return Err(DiagramError::Invalid(format!("leg l{} has no edge", l + 1)));
        }
        let mut pair = vec![usize::MAX; 3 * trivalent + m];
        for ds in &darts_of_edge {
            pair[ds[0]] = ds[1];
            pair[ds[1]] = ds[0];
        }
        Diagram::from_darts(trivalent, legs, pair)
    }

    /// Edge list and cyclic orders in the literal format (edges ordered by
    /// their smaller dart).
    pub fn to_edges(&self) -> (Vec<(Endpoint, Endpoint)>, Vec<Vec<usize>>) {
        let mut edge_of = vec![usize::MAX; self.pair.len()];
        let mut edges = Vec::new();
        let end = |d: usize| match self.owner(d) {
            DartOwner::Vertex { vertex, .. } => Endpoint::Vertex(vertex),
            DartOwner::Leg(l) => Endpoint::Leg(l),
        };
        for d in 0..self.pair.len() {
            let p = self.pair[d];
            if d < p {
                edge_of[d] = edges.len();
                edge_of[p] = edges.len();
                edges.push((end(d), end(p)));
            }
        }
        let cyc = (0..self.trivalent).map(|v| (0..3).map(|s| edge_of[3 * v + s]).collect()).collect();
        (edges, cyc)
    }

    /// The caterpillar `T(a₁,…,aₙ)`, `n ≥ 3`, drawn with `a₁` on the left,
    /// `aₙ` on the right and `a₂,…,aₙ₋₁` hanging upward.
    pub fn tree(labels: &[Label]) -> Result<Self, DiagramError> {
        let n = labels.len();
        if n < 3 {
            return Err(DiagramError::TreeArity(n));
        }
        let t = n - 2;
        let leg = |j: usize| 3 * t + j;
        let mut pair = vec![usize::MAX; 3 * t + n];
        let mut link = |a: usize, b: usize| {
            pair[a] = b;
            pair[b] = a;
        };
        if t == 1 {
            // Counterclockwise: right, up, left.
            link(0, leg(2));
            link(1, leg(1));
            link(2, leg(0));
        } else {
            // Vertex i sits under a_{i+2}; slots (right, up, left).
            for i in 0..t {
                link(3 * i + 1, leg(i + 1));
                if i == 0 {
                    link(3 * i + 2, leg(0));
                }
                if i == t - 1 {
                    link(3 * i, leg(n - 1));
                } else {
                    link(3 * i, 3 * (i + 1) + 2);
                }
            }
        }
        Ok(Diagram::from_darts_unchecked(t, labels.to_vec(), pair))
    }

    /// The wheel `O(a₁,…,aₙ)`, legs read clockwise around the circle.
    pub fn wheel(labels: &[Label]) -> Result<Self, DiagramError> {
        let n = labels.len();
        if n == 0 {
            return Err(DiagramError::WheelArity);
        }
        // Vertex i: (leg a_i, arc toward a_{i-1}, arc toward a_{i+1}).
        let mut pair = vec![usize::MAX; 4 * n];
        for i in 0..n {
            let leg = 3 * n + i;
            pair[3 * i] = leg;
            pair[leg] = 3 * i;
            let next = (i + 1) % n;
            pair[3 * i + 2] = 3 * next + 1;
            pair[3 * next + 1] = 3 * i + 2;
        }
        Ok(Diagram::from_darts_unchecked(n, labels.to_vec(), pair))
    }

    pub fn strut(a: Label, b: Label) -> Self {
        Diagram::from_darts_unchecked(0, vec![a, b], vec![1, 0])
    }

    /// Relabels every leg.
    pub fn map_labels(&self, f: impl Fn(Label) -> Label) -> Diagram {
        Diagram { trivalent: self.trivalent, legs: self.legs.iter().map(|&l| f(l)).collect(), pair: self.pair.clone() }
    }

    /// Disjoint union `self ⊔ other`.
    pub fn disjoint_union(&self, other: &Diagram) -> Diagram {
        let (t1, m1) = (self.trivalent, self.legs.len());
        let (t2, m2) = (other.trivalent, other.legs.len());
        let map1 = |d: usize| if d < 3 * t1 { d } else { d + 3 * t2 };
        let map2 = |d: usize| if d < 3 * t2 { d + 3 * t1 } else { d - 3 * t2 + 3 * (t1 + t2) + m1 };
        let mut pair = vec![usize::MAX; 3 * (t1 + t2) + m1 + m2];
        for d in 0..self.pair.len() {
            pair[map1(d)] = map1(self.pair[d]);
        }
        for d in 0..other.pair.len() {
            pair[map2(d)] = map2(other.pair[d]);
        }
        let mut legs = self.legs.clone();
        legs.extend_from_slice(&other.legs);
        Diagram::from_darts_unchecked(t1 + t2, legs, pair)
    }

    /// Connected components as sorted node lists (vertices `0..t`, legs `t..`).
    pub fn components(&self) -> Vec<Vec<usize>> {
        let nn = self.node_count();
        let mut comp = vec![usize::MAX; nn];
        let mut out = Vec::new();
        for start in 0..nn {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![start];
            comp[start] = id;
            let mut nodes = Vec::new();
            while let Some(x) = stack.pop() {
                nodes.push(x);
                for d in self.node_darts(x) {
                    let y = self.node_of(self.pair[d]);
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        stack.push(y);
                    }
                }
            }
            nodes.sort_unstable();
            out.push(nodes);
        }
        out
    }

    pub fn node_darts(&self, node: usize) -> std::ops::Range<usize> {
        if node < self.trivalent {
            3 * node..3 * node + 3
        } else {
            let d = 3 * self.trivalent + node - self.trivalent;
            d..d + 1
        }
    }

    /// Extracts the sub-diagram spanned by a node set closed under adjacency.
    pub fn restrict(&self, nodes: &[usize]) -> Diagram {
        let t = self.trivalent;
        let verts: Vec<usize> = nodes.iter().copied().filter(|&x| x < t).collect();
        let legs: Vec<usize> = nodes.iter().copied().filter(|&x| x >= t).map(|x| x - t).collect();
        let mut map = vec![usize::MAX; self.pair.len()];
        for (k, &v) in verts.iter().enumerate() {
            for s in 0..3 {
                map[3 * v + s] = 3 * k + s;
            }
        }
        for (k, &l) in legs.iter().enumerate() {
            map[3 * t + l] = 3 * verts.len() + k;
        }
        let mut pair = vec![usize::MAX; 3 * verts.len() + legs.len()];
        for d in 0..self.pair.len() {
            if map[d] != usize::MAX {
                pair[map[d]] = map[self.pair[d]];
            }
        }
        let labels = legs.iter().map(|&l| self.legs[l]).collect();
        Diagram::from_darts_unchecked(verts.len(), labels, pair)
    }

    pub fn split_components(&self) -> Vec<Diagram> {
        self.components().iter().map(|c| self.restrict(c)).collect()
    }

    /// Struts as `(leg, leg)` index pairs.
    pub fn struts(&self) -> Vec<(usize, usize)> {
        let base = 3 * self.trivalent;
        (0..self.legs.len())
            .filter_map(|l| {
                let p = self.pair[base + l];
                (p >= base && p - base > l).then(|| (l, p - base))
            })
            .collect()
    }

    pub fn metrics(&self) -> Metrics {
        let comps = self.components();
        let loop_degrees = comps
            .iter()
            .map(|c| {
                let t = c.iter().filter(|&&x| x < self.trivalent).count();
                let m = c.len() - t;
                // Betti number: edges − nodes + 1.
                (3 * t + m) / 2 + 1 - c.len()
            })
            .collect();
        let struts = self.struts();
        let top_substantial =
            struts.iter().all(|&(a, b)| !(self.legs[a].is_plus() && self.legs[b].is_plus()));
        let mut leg_labels = self.legs.clone();
        leg_labels.sort();
        Metrics {
            i_deg: self.trivalent,
            loop_degrees,
            leg_labels,
            components: comps.len(),
            strut_free: struts.is_empty(),
            top_substantial,
        }
    }

    /// First Betti number of the whole diagram.
    pub fn loop_degree(&self) -> usize {
        self.metrics().loop_degrees.iter().sum()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> Label {
        s.parse().unwrap()
    }

    #[test]
    fn tree_shapes() {
        let t3 = Diagram::tree(&[l("1+"), l("2+"), l("3-")]).unwrap();
        assert_eq!(t3.trivalent_count(), 1);
        let m = t3.metrics();
        assert_eq!((m.i_deg, m.loop_degrees.clone(), m.components), (1, vec![0], 1));
        let t5 = Diagram::tree(&[l("1+"), l("1-"), l("2+"), l("2-"), l("1+")]).unwrap();
        assert_eq!(t5.trivalent_count(), 3);
        assert_eq!(t5.metrics().loop_degrees, vec![0]);
        assert_eq!(Diagram::tree(&[l("1+"), l("2+")]), Err(DiagramError::TreeArity(2)));
    }

    #[test]
    fn wheel_metrics() {
        let o = Diagram::wheel(&[l("1+"), l("2-")]).unwrap();
        let m = o.metrics();
        assert_eq!(m.i_deg, 2);
        assert_eq!(m.loop_degrees, vec![1]);
        assert!(Diagram::wheel(&[l("1+")]).unwrap().has_self_loop());
    }

    #[test]
    fn strut_top_substantial() {
        assert!(!Diagram::strut(l("1+"), l("1+")).metrics().top_substantial);
        assert!(Diagram::strut(l("1+"), l("1-")).metrics().top_substantial);
        assert!(!Diagram::strut(l("1+"), l("1-")).metrics().strut_free);
    }

    #[test]
    fn edge_literal_roundtrip() {
        let t = Diagram::tree(&[l("1+"), l("2-"), l("1-"), l("2+")]).unwrap();
        let (edges, cyc) = t.to_edges();
        let back = Diagram::from_edges(t.trivalent_count(), t.legs().to_vec(), &edges, &cyc).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn union_and_components() {
        let a = Diagram::tree(&[l("1+"), l("1+"), l("1-")]).unwrap();
        let b = Diagram::wheel(&[l("2+"), l("2-")]).unwrap();
        let u = a.disjoint_union(&b);
        assert_eq!(u.components().len(), 2);
        let parts = u.split_components();
        assert_eq!(parts[0], a);
        assert_eq!(parts[1], b);
    }
}
