//! Connected trivalent skeletons: multigraphs on the trivalent vertices,
//! with the remaining slots left for legs.

use std::collections::BTreeMap;

use jd_diagram::{canonicalize, ClassKey, Diagram, Label};

/// All connected diagrams with `t` trivalent vertices and loop degree `k`,
/// one per unoriented isomorphism class, with every leg labeled `1+`.
/// Self-loops are excluded since such diagrams vanish.
pub fn skeletons(t: usize, k: usize) -> Vec<Diagram> {
    if t == 0 {
        return if k == 0 { vec![Diagram::strut(Label::plus(1), Label::plus(1))] } else { Vec::new() };
    }
    let edges = t - 1 + k;
    if 2 * edges > 3 * t {
        return Vec::new();
    }
    let pairs: Vec<(usize, usize)> = (1..t).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut mult = vec![0u8; pairs.len()];
    let mut deg = vec![0u8; t];
    let mut found: BTreeMap<ClassKey, Diagram> = BTreeMap::new();
    search(&pairs, 0, edges, &mut mult, &mut deg, t, &mut found);
    found.into_values().collect()
}

fn search(
    pairs: &[(usize, usize)],
    p: usize,
    left: usize,
    mult: &mut Vec<u8>,
    deg: &mut Vec<u8>,
    t: usize,
    found: &mut BTreeMap<ClassKey, Diagram>,
) {
    if p == pairs.len() {
        if left == 0 {
            let d = build(pairs, mult, t);
            let key = canonicalize(&d).key;
            found.entry(key).or_insert(d);
        }
        return;
    }
    let (i, j) = pairs[p];
    // Vertex j must meet an earlier vertex by the time its column closes.
    let closes = i + 1 == j;
    let cap = (3 - deg[i]).min(3 - deg[j]).min(left.min(3) as u8);
    for m in 0..=cap {
        if closes && m == 0 && (0..i).all(|a| mult[pair_index(a, j)] == 0) {
            continue;
        }
        mult[p] = m;
        deg[i] += m;
        deg[j] += m;
        search(pairs, p + 1, left - m as usize, mult, deg, t, found);
        deg[i] -= m;
        deg[j] -= m;
    }
    mult[p] = 0;
}

fn pair_index(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

fn build(pairs: &[(usize, usize)], mult: &[u8], t: usize) -> Diagram {
    let mut next_slot = vec![0usize; t];
    let mut pair = Vec::new();
    let mut links = Vec::new();
    for (p, &(i, j)) in pairs.iter().enumerate() {
        for _ in 0..mult[p] {
            let a = 3 * i + next_slot[i];
            let b = 3 * j + next_slot[j];
            next_slot[i] += 1;
            next_slot[j] += 1;
            links.push((a, b));
        }
    }
    let m: usize = next_slot.iter().map(|s| 3 - s).sum();
    pair.resize(3 * t + m, usize::MAX);
    for (a, b) in links {
        pair[a] = b;
        pair[b] = a;
    }
    let mut leg = 0;
    for (v, &s) in next_slot.iter().enumerate() {
        for slot in s..3 {
            pair[3 * v + slot] = 3 * t + leg;
            pair[3 * t + leg] = 3 * v + slot;
            leg += 1;
        }
    }
    Diagram::from_darts(t, vec![Label::plus(1); m], pair).expect("skeleton is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        // Y, then T(·,·,·,·) and the bigon, then theta.
        assert_eq!(skeletons(1, 0).len(), 1);
        assert_eq!(skeletons(1, 1).len(), 0);
        assert_eq!(skeletons(2, 0).len(), 1);
        assert_eq!(skeletons(2, 1).len(), 1);
        assert_eq!(skeletons(2, 2).len(), 1);
        // Trees with 4 vertices: the path and the star.
        assert_eq!(skeletons(4, 0).len(), 2);
    }

    #[test]
    fn leg_counts_follow_loop_degree() {
        for t in 1..6 {
            for k in 0..4 {
                for s in skeletons(t, k) {
                    assert_eq!(s.leg_count() + 2 * k, t + 2);
                    assert!(s.is_connected());
                }
            }
        }
    }
}
