use jd_diagram::{Diagram, Expr, Label, Ring};
use jd_spaces::{ihx_triple, internal_edges, Catalog, Flavor, Space};
use proptest::prelude::*;

fn space(genus: u16, ideg: usize, loops: usize) -> Space {
    Space::new(Catalog::global(), genus, Flavor::Connected { ideg, loops: Some(loops) }).unwrap()
}

fn labels(genus: u16, n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<Label>> {
    prop::collection::vec(prop::sample::select(Label::all(genus)), n)
}

/// Reverses the cyclic order at vertex `v`.
fn flip(d: &Diagram, v: usize) -> Option<Diagram> {
    let (a, b) = (3 * v + 1, 3 * v + 2);
    let (pa, pb) = (d.pair(a), d.pair(b));
    if pa == b {
        return None;
    }
    let mut pair = d.pairs().to_vec();
    pair[a] = pb;
    pair[pb] = a;
    pair[b] = pa;
    pair[pa] = b;
    Some(Diagram::from_darts(d.trivalent_count(), d.legs().to_vec(), pair).unwrap())
}

fn sum(ds: &[Diagram]) -> Expr {
    let mut e = Expr::zero(Ring::Z);
    for d in ds {
        e.add_diagram(d, 1);
    }
    e
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn antisymmetry_holds_in_trees(ls in labels(2, 3..=5), v in 0usize..3) {
        let t = Diagram::tree(&ls).unwrap();
        let v = v % t.trivalent_count();
        let f = flip(&t, v).unwrap();
        prop_assert!(space(2, t.trivalent_count(), 0).is_zero(&sum(&[t, f])).unwrap());
    }

    #[test]
    fn antisymmetry_holds_in_wheels(ls in labels(1, 2..=4), v in 0usize..4) {
        let w = Diagram::wheel(&ls).unwrap();
        let v = v % w.trivalent_count();
        let f = flip(&w, v).unwrap();
        prop_assert!(space(1, w.trivalent_count(), 1).is_zero(&sum(&[w, f])).unwrap());
    }

    #[test]
    fn ihx_sums_vanish(ls in labels(2, 4..=5), k in 0usize..3) {
        let t = Diagram::tree(&ls).unwrap();
        let edges = internal_edges(&t);
        let e = edges[k % edges.len()];
        let s = space(2, t.trivalent_count(), 0);
        prop_assert!(s.is_zero(&sum(&ihx_triple(&t, e))).unwrap());
    }

    #[test]
    fn coordinates_are_additive(a in labels(2, 4..=4), b in labels(2, 4..=4)) {
        let s = space(2, 2, 0);
        let (x, y) = (Expr::from_diagram(&Diagram::tree(&a).unwrap(), Ring::Z), Expr::from_diagram(&Diagram::tree(&b).unwrap(), Ring::Z));
        if x.is_zero() || y.is_zero() {
            return Ok(());
        }
        // Mixed leg multisets land in different blocks; same ones must add.
        let mut xy = x.clone();
        xy.add_expr(&y, 1);
        let (cx, cy, cxy) = (s.coords(&x).unwrap(), s.coords(&y).unwrap(), s.coords(&xy).unwrap());
        let added: Vec<_> = cx.iter().zip(&cy).map(|(p, q)| p + q).collect();
        prop_assert_eq!(s.element(&xy).unwrap(), s.group().element(&added));
        prop_assert_eq!(cxy.len(), added.len());
    }
}
