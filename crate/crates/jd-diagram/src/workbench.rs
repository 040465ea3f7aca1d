//! Mutable dart-level surgery on diagrams.
//!
//! Local replacements (leg doubling, fusing, gluing, edge insertion) are
//! written against stable dart ids; [`Workbench::build`] compacts the result
//! back into a [`Diagram`].

use crate::diagram::{DartOwner, Diagram};
use crate::error::DiagramError;
use crate::label::Label;

const FREE: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Owner {
    Vertex(usize, usize),
    Leg(usize),
}

#[derive(Clone, Debug, Default)]
pub struct Workbench {
    owner: Vec<Owner>,
    pair: Vec<usize>,
    vertices: Vec<[usize; 3]>,
    legs: Vec<(Label, usize, bool)>,
}

/// Where the darts and legs of an inserted diagram ended up.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub darts: Vec<usize>,
    pub legs: Vec<usize>,
}

impl Embedding {
    pub fn leg(&self, j: usize) -> usize {
        self.legs[j]
    }

    pub fn dart(&self, d: usize) -> usize {
        self.darts[d]
    }
}

impl Workbench {
    pub fn new() -> Self {
        Workbench::default()
    }

    /// A workbench holding one copy of `d`, with dart ids equal to `d`'s.
    pub fn from_diagram(d: &Diagram) -> (Self, Embedding) {
        let mut w = Workbench::new();
        let e = w.insert(d);
        (w, e)
    }

    /// Adds a disjoint copy of `d`.
    pub fn insert(&mut self, d: &Diagram) -> Embedding {
        let mut darts = vec![FREE; d.dart_count()];
        for v in 0..d.trivalent_count() {
            let ids = self.add_vertex();
            for s in 0..3 {
                darts[3 * v + s] = ids[s];
            }
        }
        let mut legs = Vec::with_capacity(d.leg_count());
        for (j, &lab) in d.legs().iter().enumerate() {
            let li = self.add_leg(lab);
            legs.push(li);
            darts[d.leg_dart(j)] = self.leg_dart(li);
        }
        for x in 0..d.dart_count() {
            self.pair[darts[x]] = darts[d.pair(x)];
        }
        Embedding { darts, legs }
    }

    fn new_dart(&mut self, o: Owner) -> usize {
        self.owner.push(o);
        self.pair.push(FREE);
        self.owner.len() - 1
    }

    /// New vertex; its darts are returned in counterclockwise order, unpaired.
    pub fn add_vertex(&mut self) -> [usize; 3] {
        let v = self.vertices.len();
        let ids = [self.new_dart(Owner::Vertex(v, 0)), self.new_dart(Owner::Vertex(v, 1)), self.new_dart(Owner::Vertex(v, 2))];
        self.vertices.push(ids);
        ids
    }

    /// New leg; returns its index.
    pub fn add_leg(&mut self, label: Label) -> usize {
        let j = self.legs.len();
        let d = self.new_dart(Owner::Leg(j));
        self.legs.push((label, d, true));
        j
    }

    pub fn leg_dart(&self, j: usize) -> usize {
        self.legs[j].1
    }

    pub fn leg_label(&self, j: usize) -> Label {
        self.legs[j].0
    }

    pub fn set_leg_label(&mut self, j: usize, label: Label) {
        self.legs[j].0 = label;
    }

    pub fn leg_alive(&self, j: usize) -> bool {
        self.legs[j].2
    }

    pub fn leg_count(&self) -> usize {
        self.legs.len()
    }

    pub fn live_legs(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.legs.len()).filter(|&j| self.legs[j].2)
    }

    pub fn vertex_darts(&self, v: usize) -> [usize; 3] {
        self.vertices[v]
    }

    pub fn pair(&self, d: usize) -> usize {
        self.pair[d]
    }

    /// The leg owning dart `d`, if any.
    pub fn leg_of(&self, d: usize) -> Option<usize> {
        match self.owner[d] {
            Owner::Leg(j) => Some(j),
            Owner::Vertex(..) => None,
        }
    }

    /// The two darts following `d` at its vertex, counterclockwise.
    pub fn next_at_vertex(&self, d: usize) -> Option<(usize, usize)> {
        match self.owner[d] {
            Owner::Vertex(v, s) => Some((self.vertices[v][(s + 1) % 3], self.vertices[v][(s + 2) % 3])),
            Owner::Leg(_) => None,
        }
    }

    pub fn connect(&mut self, a: usize, b: usize) {
        self.pair[a] = b;
        self.pair[b] = a;
    }

    /// Removes a leg; its partner dart is left dangling and must be
    /// reconnected before [`build`](Self::build).
    pub fn kill_leg(&mut self, j: usize) {
        let d = self.legs[j].1;
        let p = self.pair[d];
        if p != FREE && self.pair[p] == d {
            self.pair[p] = FREE;
        }
        self.pair[d] = FREE;
        self.legs[j].2 = false;
    }

    /// Glues leg `a` to leg `b`: both legs disappear and their neighbours are
    /// joined by an edge.
    pub fn glue(&mut self, a: usize, b: usize) -> Result<(), DiagramError> {
        let pa = self.pair[self.legs[a].1];
        let pb = self.pair[self.legs[b].1];
        if pa == self.legs[b].1 {
            return Err(DiagramError::Invalid("gluing the two ends of a strut closes a circle".into()));
        }
        self.kill_leg(a);
        self.kill_leg(b);
        self.connect(pa, pb);
        Ok(())
    }

    /// Subdivides the edge at dart `d` with a new vertex whose darts are
    /// `(toward d, toward pair(d), third)`; returns the third (unpaired) dart.
    pub fn subdivide(&mut self, d: usize) -> usize {
        let p = self.pair[d];
        let [m0, m1, m2] = self.add_vertex();
        self.connect(m0, d);
        self.connect(m1, p);
        m2
    }

    pub fn build(&self) -> Result<Diagram, DiagramError> {
        let t = self.vertices.len();
        let mut newpos = vec![FREE; self.owner.len()];
        for (v, ids) in self.vertices.iter().enumerate() {
            for s in 0..3 {
                newpos[ids[s]] = 3 * v + s;
            }
        }
        let mut labels = Vec::new();
        for &(lab, d, alive) in &self.legs {
            if alive {
                newpos[d] = 3 * t + labels.len();
                labels.push(lab);
            }
        }
        let mut pair = vec![FREE; 3 * t + labels.len()];
        for (x, &p) in self.pair.iter().enumerate() {
            if newpos[x] == FREE {
                continue;
            }
            if p == FREE || newpos[p] == FREE {
                return Err(DiagramError::Invalid(format!("dangling dart {x} in workbench")));
            }
            pair[newpos[x]] = newpos[p];
        }
        Diagram::from_darts(t, labels, pair)
    }
}

impl Diagram {
    /// Dart of the neighbour of leg `j` (the other end of its edge).
    pub fn leg_partner(&self, j: usize) -> usize {
        self.pair(self.leg_dart(j))
    }

    /// Whether the leg's partner is another leg.
    pub fn is_strut_leg(&self, j: usize) -> bool {
        matches!(self.owner(self.leg_partner(j)), DartOwner::Leg(_))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonicalize;

    fn l(s: &str) -> Label {
        s.parse().unwrap()
    }

    #[test]
    fn gluing_two_trees_gives_h() {
        let x = Diagram::tree(&[l("1+"), l("2+"), l("2-")]).unwrap();
        let y = Diagram::tree(&[l("1-"), l("3+"), l("3-")]).unwrap();
        let mut w = Workbench::new();
        let ex = w.insert(&x);
        let ey = w.insert(&y);
        w.glue(ex.leg(0), ey.leg(0)).unwrap();
        let h = w.build().unwrap();
        assert_eq!(h.trivalent_count(), 2);
        assert_eq!(h.leg_count(), 4);
        let expected = Diagram::tree(&[l("2+"), l("2-"), l("3+"), l("3-")]).unwrap();
        assert_eq!(canonicalize(&h).key, canonicalize(&expected).key);
    }

    #[test]
    fn strut_chain_glue() {
        let x = Diagram::strut(l("1+"), l("2-"));
        let y = Diagram::strut(l("1+"), l("1-"));
        let mut w = Workbench::new();
        let ex = w.insert(&x);
        let ey = w.insert(&y);
        w.glue(ex.leg(0), ey.leg(1)).unwrap();
        let s = w.build().unwrap();
        assert_eq!(canonicalize(&s).key, canonicalize(&Diagram::strut(l("1+"), l("2-"))).key);
    }

    #[test]
    fn closing_a_circle_is_rejected() {
        let (mut w, e) = Workbench::from_diagram(&Diagram::strut(l("1+"), l("1-")));
        assert!(w.glue(e.leg(0), e.leg(1)).is_err());
    }
}
