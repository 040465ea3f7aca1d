use jd_lie::*;
use proptest::prelude::*;

fn arb_tree(letters: u8, depth: u32) -> impl Strategy<Value = RTree> {
    let leaf = (0..letters).prop_map(RTree::leaf);
    leaf.prop_recursive(depth, 16, 2, |inner| (inner.clone(), inner).prop_map(|(a, b)| RTree::bracket(a, b)))
}

proptest! {
    #[test]
    fn brackets_of_trees_are_lie(t in arb_tree(4, 4)) {
        let l = FreeLie::cached(2, t.degree()).unwrap();
        let c = l.tree_coords(&t).unwrap();
        prop_assert_eq!(l.element(&c), t.to_tensor());
    }

    #[test]
    fn jacobi_holds_in_the_free_lie_algebra(x in arb_tree(2, 2), y in arb_tree(2, 2), z in arb_tree(2, 2)) {
        let mut s = Tensor::zero();
        for t in jacobi_terms(&x, &y, &z) {
            s.add(&t.to_tensor(), 1);
        }
        prop_assert!(s.is_zero());
    }

    #[test]
    fn canonical_form_is_idempotent(t in arb_tree(3, 4)) {
        let c = t.canonical();
        let cc = c.tree.canonical();
        prop_assert_eq!(&cc.tree, &c.tree);
        prop_assert_eq!(cc.sign, 1);
        prop_assert_eq!(c.tree.to_tensor(), t.to_tensor().scaled(c.sign));
    }

    #[test]
    fn quasi_coordinates_respect_antisymmetry(a in arb_tree(2, 1), b in arb_tree(2, 2)) {
        let n = a.degree() + b.degree();
        let q = QuasiLie::cached(1, n).unwrap();
        let ab = q.tree_coords(&RTree::bracket(a.clone(), b.clone())).unwrap();
        let ba = q.tree_coords(&RTree::bracket(b, a)).unwrap();
        let sum: Vec<_> = ab.iter().zip(&ba).map(|(x, y)| x + y).collect();
        prop_assert!(q.group().is_zero(&sum));
    }
}
