//! Canonical forms of diagrams up to color-preserving isomorphism, with the
//! sign coming from the orientation convention at trivalent vertices.
//!
//! Each connected component is traversed breadth-first from a leg of minimal
//! refined color. Every dart visited emits one token describing its partner
//! (new vertex, new leg with its color, or an already-numbered dart); the
//! lexicographically least token stream over all admissible traversals is the
//! component key. The two non-entry darts of a newly reached vertex are
//! ordered by an invariant key, and only ties are branched on, so the search
//! stays small on desk-scale diagrams.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{DartOwner, Diagram};
use crate::label::Label;

const UNKNOWN: u32 = u32::MAX;
const COMPONENT_SEP: u8 = 0xFF;
const KNOWN_BASE: u32 = 64;
const MAX_DARTS: usize = (COMPONENT_SEP as u32 - 1 - KNOWN_BASE) as usize + 1;

/// Canonical byte encoding of an isomorphism class.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
pub struct ClassKey(pub Vec<u8>);

impl ClassKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for ClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClassKey({})", self.to_hex())
    }
}

/// Result of canonicalization: the input equals `sign · rep` modulo AS.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedClass {
    pub key: ClassKey,
    /// `0` when the diagram has a self-loop, otherwise `±1`. Classes with an
    /// odd automorphism always report `+1`.
    pub sign: i8,
    pub odd_automorphism: bool,
    pub i_deg: usize,
    /// Loop degree of each component, in canonical component order.
    pub loop_degrees: Vec<usize>,
    /// Leg labels, sorted.
    pub legs: Vec<Label>,
    pub rep: Diagram,
}

impl SignedClass {
    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn components(&self) -> usize {
        self.loop_degrees.len()
    }

    pub fn loop_degree(&self) -> usize {
        self.loop_degrees.iter().sum()
    }

    pub fn is_connected(&self) -> bool {
        self.loop_degrees.len() == 1
    }
}

/// Canonicalizes a diagram (possibly disconnected).
pub fn canonicalize(d: &Diagram) -> SignedClass {
    let self_loop = d.has_self_loop();
    let mut parts: Vec<ComponentCanon> = d.split_components().iter().map(canonicalize_component).collect();
    parts.sort_by(|a, b| a.key.cmp(&b.key));
    let mut key = Vec::new();
    let mut rep = Diagram::empty();
    let mut sign = 1i8;
    let mut odd = false;
    let mut loop_degrees = Vec::with_capacity(parts.len());
    for (k, p) in parts.iter().enumerate() {
        if k > 0 {
            key.push(COMPONENT_SEP);
        }
        key.extend_from_slice(&p.key);
        rep = rep.disjoint_union(&p.rep);
        sign *= p.sign;
        odd |= p.odd;
        loop_degrees.push(p.loops);
    }
    if odd {
        sign = 1;
    }
    if self_loop {
        sign = 0;
    }
    let mut legs = d.legs().to_vec();
    legs.sort();
    SignedClass {
        key: ClassKey(key),
        sign,
        odd_automorphism: odd,
        i_deg: d.trivalent_count(),
        loop_degrees,
        legs,
        rep,
    }
}

struct ComponentCanon {
    key: Vec<u8>,
    sign: i8,
    odd: bool,
    loops: usize,
    rep: Diagram,
}

#[derive(Clone)]
struct State {
    order: Vec<usize>,
    cidx: Vec<u32>,
    events: Vec<u8>,
    sign: i8,
    less: bool,
}

struct Search<'a> {
    d: &'a Diagram,
    color: Vec<u32>,
    best: Option<Vec<u8>>,
    best_order: Vec<usize>,
    best_signs: Vec<i8>,
}

fn canonicalize_component(c: &Diagram) -> ComponentCanon {
    let t = c.trivalent_count();
    let m = c.leg_count();
    assert!(c.dart_count() <= MAX_DARTS, "component with {} darts is too large to encode", c.dart_count());
    assert!(t < 256 && m < 256);
    let loops = (3 * t + m) / 2 + 1 - (t + m);
    let mut s = Search { d: c, color: refine_colors(c), best: None, best_order: Vec::new(), best_signs: Vec::new() };
    let starts: Vec<usize> = if m > 0 {
        let min = (0..m).map(|l| s.color[t + l]).min().expect("legs");
        (0..m).filter(|&l| s.color[t + l] == min).map(|l| c.leg_dart(l)).collect()
    } else {
        let min = (0..t).map(|v| s.color[v]).min().expect("vertices");
        (0..t).filter(|&v| s.color[v] == min).flat_map(|v| 3 * v..3 * v + 3).collect()
    };
    for start in starts {
        let mut st = State {
            order: Vec::with_capacity(c.dart_count()),
            cidx: vec![UNKNOWN; c.dart_count()],
            events: Vec::with_capacity(c.dart_count()),
            sign: 1,
            less: false,
        };
        match c.owner(start) {
            DartOwner::Leg(l) => {
                if !s.emit(&mut st, 1 + c.legs()[l].code() as u8) {
                    continue;
                }
                push(&mut st, start);
                s.run(st, 0);
            }
            DartOwner::Vertex { .. } => {
                if !s.emit(&mut st, 0) {
                    continue;
                }
                let alt = s.enter_vertex(&mut st, start);
                if let Some(alt) = alt {
                    s.run(alt, 0);
                }
                s.run(st, 0);
            }
        }
    }
    let events = s.best.expect("at least one traversal");
    let odd = s.best_signs.iter().any(|&x| x != s.best_signs[0]);
    let sign = if odd { 1 } else { s.best_signs[0] };
    let rep = rebuild(c, &s.best_order);
    let mut key = vec![t as u8, m as u8];
    key.extend_from_slice(&events);
    ComponentCanon { key, sign, odd, loops, rep }
}

fn push(st: &mut State, d: usize) {
    st.cidx[d] = st.order.len() as u32;
    st.order.push(d);
}

impl Search<'_> {
    /// Appends a token, comparing against the current best stream; returns
    /// `false` when this traversal is already worse.
    fn emit(&self, st: &mut State, tok: u8) -> bool {
        if !st.less {
            if let Some(best) = &self.best {
                let pos = st.events.len();
                match tok.cmp(&best[pos]) {
                    std::cmp::Ordering::Greater => return false,
                    std::cmp::Ordering::Less => st.less = true,
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
        st.events.push(tok);
        true
    }

    fn dart_key(&self, st: &State, x: usize) -> u64 {
        let p = self.d.pair(x);
        if st.cidx[p] != UNKNOWN {
            st.cidx[p] as u64
        } else {
            (1u64 << 40) + self.color[self.d.node_of(p)] as u64
        }
    }

    /// Pushes the darts of the vertex entered through `q`; on a tie between
    /// the two exits returns the alternative state as well.
    fn enter_vertex(&self, st: &mut State, q: usize) -> Option<State> {
        let v = q / 3;
        let slot = q % 3;
        let a = 3 * v + (slot + 1) % 3;
        let b = 3 * v + (slot + 2) % 3;
        push(st, q);
        let (ka, kb) = (self.dart_key(st, a), self.dart_key(st, b));
        let mut alt = None;
        if ka == kb {
            let mut other = st.clone();
            push(&mut other, b);
            push(&mut other, a);
            other.sign = -other.sign;
            alt = Some(other);
        }
        if kb < ka {
            push(st, b);
            push(st, a);
            st.sign = -st.sign;
        } else {
            push(st, a);
            push(st, b);
        }
        alt
    }

    fn run(&mut self, mut st: State, mut i: usize) {
        // The best stream may have improved since this state was forked.
        if let Some(best) = &self.best {
            match st.events.as_slice().cmp(&best[..st.events.len()]) {
                std::cmp::Ordering::Greater => return,
                std::cmp::Ordering::Less => st.less = true,
                std::cmp::Ordering::Equal => st.less = false,
            }
        }
        while i < st.order.len() {
            let d = st.order[i];
            let q = self.d.pair(d);
            let cq = st.cidx[q];
            if cq != UNKNOWN {
                if (cq as usize) > i && !self.emit(&mut st, (KNOWN_BASE + cq) as u8) {
                    return;
                }
                i += 1;
                continue;
            }
            match self.d.owner(q) {
                DartOwner::Leg(l) => {
                    if !self.emit(&mut st, 1 + self.d.legs()[l].code() as u8) {
                        return;
                    }
                    push(&mut st, q);
                }
                DartOwner::Vertex { .. } => {
                    if !self.emit(&mut st, 0) {
                        return;
                    }
                    if let Some(alt) = self.enter_vertex(&mut st, q) {
                        self.run(alt, i + 1);
                        // Re-check against a possibly improved best.
                        return self.run(st, i + 1);
                    }
                }
            }
            i += 1;
        }
        self.finish(st);
    }

    fn finish(&mut self, st: State) {
        if self.best.is_none() || st.less {
            self.best = Some(st.events);
            self.best_order = st.order;
            self.best_signs = vec![st.sign];
        } else {
            self.best_signs.push(st.sign);
        }
    }
}

/// Color refinement on nodes (vertices, then legs) until stable.
fn refine_colors(d: &Diagram) -> Vec<u32> {
    let t = d.trivalent_count();
    let n = d.node_count();
    let mut color: Vec<u32> = (0..n).map(|x| if x < t { 0 } else { 1 + d.legs()[x - t].code() as u32 }).collect();
    let mut classes = {
        let mut c = color.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|x| {
                let mut nb: Vec<u32> = d.node_darts(x).map(|dd| color[d.node_of(d.pair(dd))]).collect();
                nb.sort_unstable();
                (color[x], nb)
            })
            .collect();
        let mut uniq = sigs.clone();
        uniq.sort();
        uniq.dedup();
        color = sigs.iter().map(|s| uniq.binary_search(s).expect("present") as u32).collect();
        if uniq.len() == classes {
            return color;
        }
        classes = uniq.len();
    }
}

/// Renumbers darts in traversal order: vertex blocks `(entry, o1, o2)`, legs
/// in discovery order.
fn rebuild(d: &Diagram, order: &[usize]) -> Diagram {
    let t = d.trivalent_count();
    let mut newpos = vec![usize::MAX; d.dart_count()];
    let mut legs = Vec::with_capacity(d.leg_count());
    let mut k = 0;
    let mut vcount = 0;
    while k < order.len() {
        match d.owner(order[k]) {
            DartOwner::Vertex { .. } => {
                for s in 0..3 {
                    newpos[order[k + s]] = 3 * vcount + s;
                }
                vcount += 1;
                k += 3;
            }
            DartOwner::Leg(l) => {
                newpos[order[k]] = 3 * t + legs.len();
                legs.push(d.legs()[l]);
                k += 1;
            }
        }
    }
    let mut pair = vec![usize::MAX; d.dart_count()];
    for (x, &p) in newpos.iter().enumerate() {
        pair[p] = newpos[d.pair(x)];
    }
    Diagram::from_darts_unchecked(t, legs, pair)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> Label {
        s.parse().unwrap()
    }

    fn reversed_at(d: &Diagram, v: usize) -> Diagram {
        // Swap slots 1 and 2 of vertex v.
        let mut pair = d.pairs().to_vec();
        let (a, b) = (3 * v + 1, 3 * v + 2);
        let (pa, pb) = (pair[a], pair[b]);
        if pa == b {
            return d.clone();
        }
        pair[a] = pb;
        pair[pb] = a;
        pair[b] = pa;
        pair[pa] = b;
        Diagram::from_darts(d.trivalent_count(), d.legs().to_vec(), pair).unwrap()
    }

    #[test]
    fn as_flip_changes_sign() {
        let y = Diagram::tree(&[l("1+"), l("2+"), l("1-")]).unwrap();
        let a = canonicalize(&y);
        let b = canonicalize(&reversed_at(&y, 0));
        assert_eq!(a.key, b.key);
        assert_eq!(a.sign, -b.sign);
        assert!(!a.odd_automorphism);
    }

    #[test]
    fn repeated_leg_gives_odd_automorphism() {
        let y = Diagram::tree(&[l("1+"), l("2+"), l("1+")]).unwrap();
        let c = canonicalize(&y);
        assert!(c.odd_automorphism);
        assert_eq!(c.sign, 1);
    }

    #[test]
    fn canonical_rep_is_fixed() {
        let o = Diagram::wheel(&[l("1+"), l("2-"), l("1+"), l("1-")]).unwrap();
        let c = canonicalize(&o);
        let again = canonicalize(&c.rep);
        assert_eq!(again.key, c.key);
        assert_eq!(again.sign, 1);
        assert_eq!(again.rep, c.rep);
    }

    #[test]
    fn self_loop_is_zero() {
        assert_eq!(canonicalize(&Diagram::wheel(&[l("1+")]).unwrap()).sign, 0);
    }

    #[test]
    fn strut_key_is_symmetric() {
        let a = canonicalize(&Diagram::strut(l("1+"), l("2-")));
        let b = canonicalize(&Diagram::strut(l("2-"), l("1+")));
        assert_eq!(a.key, b.key);
        assert_eq!(a.sign, 1);
        assert_eq!(b.sign, 1);
    }

    #[test]
    fn component_order_is_irrelevant() {
        let x = Diagram::tree(&[l("1+"), l("2+"), l("1-")]).unwrap();
        let y = Diagram::wheel(&[l("2+"), l("2-")]).unwrap();
        let a = canonicalize(&x.disjoint_union(&y));
        let b = canonicalize(&y.disjoint_union(&x));
        assert_eq!(a.key, b.key);
        assert_eq!(a.sign, b.sign);
        assert_eq!(a.loop_degrees.len(), 2);
    }
}
