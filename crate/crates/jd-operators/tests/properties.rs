use jd_diagram::{Diagram, Expr, Label, Ring};
use jd_operators::{delta, delta_double_prime, delta_prime, rev};
use jd_spaces::{equal_mod2, Catalog};
use proptest::prelude::*;

fn tree(genus: u16) -> impl Strategy<Value = Expr> {
    prop::collection::vec(prop::sample::select(Label::all(genus)), 3..=5)
        .prop_map(|ls| Expr::from_diagram(&Diagram::tree(&ls).unwrap(), Ring::Z))
}

fn swap_colours(l: Label) -> Label {
    Label::new(3 - l.index(), l.sign())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn delta_splits_into_its_parts(x in tree(2)) {
        let mut parts = delta_prime(&x).unwrap();
        parts.add_expr(&delta_double_prime(&x).unwrap(), 1);
        prop_assert!(equal_mod2(Catalog::global(), &delta(&x).unwrap(), &parts));
    }

    #[test]
    fn delta_commutes_with_rev(x in tree(2)) {
        prop_assert!(equal_mod2(Catalog::global(), &delta(&rev(&x)).unwrap(), &rev(&delta(&x).unwrap())));
    }

    #[test]
    fn delta_commutes_with_colour_swaps(x in tree(2)) {
        let lhs = delta(&x.map_labels(swap_colours)).unwrap();
        let rhs = delta(&x).unwrap().map_labels(swap_colours);
        prop_assert!(equal_mod2(Catalog::global(), &lhs, &rhs));
    }

    #[test]
    fn delta_is_additive(x in tree(2), y in tree(2)) {
        let mut s = x.clone();
        s.add_expr(&y, 1);
        let mut parts = delta(&x).unwrap();
        parts.add_expr(&delta(&y).unwrap(), 1);
        prop_assert!(equal_mod2(Catalog::global(), &delta(&s).unwrap(), &parts));
    }

    #[test]
    fn rev_is_an_involution(x in tree(3)) {
        prop_assert_eq!(rev(&rev(&x)), x);
    }
}
