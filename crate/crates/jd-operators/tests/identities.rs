use jd_diagram::{parse_diagram, parse_expr, Diagram, Expr, Label, Ring};
use jd_operators::leibniz::{lhs, rhs, Identity};
use jd_operators::local::delta_v_moves;
use jd_operators::*;
use jd_spaces::{equal_mod2, is_zero_mod2, Catalog, Flavor, Space};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ex(s: &str) -> Expr {
    parse_expr(s).unwrap()
}

fn cat() -> &'static Catalog {
    Catalog::global()
}

#[test]
fn double_delta_of_a_tripod_is_the_triangle() {
    let t = ex("T(1+,2+,3+)");
    let got = delta_double_prime(&delta_prime(&t).unwrap()).unwrap();
    assert!(equal_mod2(cat(), &got, &ex("O(1+,2+,3+)")));
}

#[test]
fn fusing_equal_legs_of_a_tripod() {
    let got = delta_double_prime(&ex("T(2+,1+,2+)")).unwrap();
    assert!(equal_mod2(cat(), &got, &ex("O(1+,2+)")));
}

#[test]
fn as_related_representatives_agree() {
    let a = parse_diagram("T(1+,2-,2-,1+)").unwrap();
    let b = parse_diagram("T(2-,1+,2-,1+)").unwrap();
    let sum = |d: &Diagram| -> Expr {
        let mut e = Expr::zero(Ring::Mod2);
        for v in 0..d.leg_count() {
            e += &delta_v(d, v).unwrap();
        }
        for (v, w) in same_label_pairs(d.legs(), None) {
            e += &delta_vw(d, v, w).unwrap();
        }
        e
    };
    assert_eq!(sum(&a), sum(&b));
}

#[test]
fn doubling_a_tripod() {
    let s = Space::new(cat(), 2, Flavor::Connected { ideg: 3, loops: Some(0) }).unwrap();
    let got = doubling(&ex("T(1+,1-,2+)")).unwrap();
    let want = ex("T(2+,1-,1+,1-,2+) + T(1+,2+,1-,2+,1+) + T(1+,1-,2+,1-,1+)");
    assert!(s.is_zero(&(&got - &want)).unwrap(), "{}", jd_diagram::render_expr(&got));
}

#[test]
fn edge_join_is_first_term_of_delta_on_double() {
    for text in ["T(1+,2+,2-)", "T(1+,1-,1+,2-)", "O(1+,2-)"] {
        let j = parse_diagram(text).unwrap();
        for v in 0..j.leg_count() {
            let dv = doubling_at(&j, v).unwrap();
            let new_leg = dv.leg_count() - 1;
            let (w, _) = jd_diagram::Workbench::from_diagram(&dv);
            let [first, _] = delta_v_moves(&w, new_leg).unwrap();
            let a = Expr::from_diagram(&first.build().unwrap(), Ring::Mod2);
            let b = Expr::from_diagram(&edge_join(&j, v, v).unwrap(), Ring::Mod2);
            assert_eq!(a, b, "{text} leg {v}");
        }
    }
}

#[test]
fn delta_kills_doubles_on_small_inputs() {
    for text in ["S(1+,1-)", "T(1+,2+,2-)", "T(1+,1+,1-)", "O(1+,1-)"] {
        let d = doubling(&ex(text)).unwrap();
        assert!(is_zero_mod2(cat(), &delta_prime(&d).unwrap()), "δ′Δ {text}");
        assert!(is_zero_mod2(cat(), &delta_double_prime(&d).unwrap()), "δ″Δ {text}");
    }
}

#[test]
fn kirchhoff_and_diagonal_sum() {
    for text in ["T(1+,2+,2-)", "T(1+,1+,1-)", "T(1+,1-,2+,2-)"] {
        let j = parse_diagram(text).unwrap();
        let mut diag = Expr::zero(Ring::Mod2);
        for v in 0..j.leg_count() {
            diag.add_diagram(&edge_join(&j, v, v).unwrap(), 1);
            let mut row = Expr::zero(Ring::Mod2);
            for w in 0..j.leg_count() {
                row.add_diagram(&edge_join(&j, v, w).unwrap(), 1);
            }
            assert!(is_zero_mod2(cat(), &row), "{text} row {v}");
        }
        assert!(is_zero_mod2(cat(), &diag), "{text}");
    }
}

#[test]
fn rev_commutes_with_delta_v() {
    for text in ["T(1+,2-,1-)", "T(1+,1+,2-,1-)", "O(1+,2-,2-)"] {
        let d = parse_diagram(text).unwrap();
        let r = d.map_labels(Label::star);
        for v in 0..d.leg_count() {
            assert_eq!(rev(&delta_v(&d, v).unwrap()), delta_v(&r, v).unwrap());
        }
    }
}

#[test]
fn leibniz_and_per_color_identities() {
    let xs = ["T(1+,1+,2-)", "T(1-,2+,1+)", "O(1+,1-)", "T(1+,1-,1-)"];
    for a in xs {
        for b in xs {
            let (x, y) = (ex(a), ex(b));
            let left = delta(&star(&x, &y).unwrap()).unwrap();
            let right = &star(&delta(&x).unwrap(), &y).unwrap() + &star(&x, &delta(&y).unwrap()).unwrap();
            assert!(equal_mod2(cat(), &left, &right), "{a} ⋆ {b}");
            let (dx, dy) = (parse_diagram(a).unwrap(), parse_diagram(b).unwrap());
            for id in [Identity::B1, Identity::B2, Identity::B3] {
                for i in 1..=2 {
                    let l = lhs(id, &dx, &dy, i).unwrap();
                    let r = rhs(id, &dx, &dy, i).unwrap();
                    assert!(equal_mod2(cat(), &l, &r), "{id:?} color {i}: {a}, {b}");
                }
            }
        }
    }
}

#[test]
fn star_is_associative_on_samples() {
    let pool = ["T(1+,1-,2+)", "T(2-,2+,1-)", "O(1+,2-)", "T(1-,1-,2+)", "T(1+,2-,2+,1-)"];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let t: Vec<Expr> = (0..3).map(|_| ex(pool.choose(&mut rng).unwrap())).collect();
        let l = star(&star(&t[0], &t[1]).unwrap(), &t[2]).unwrap();
        let r = star(&t[0], &star(&t[1], &t[2]).unwrap()).unwrap();
        assert_eq!(l, r);
    }
}

#[test]
fn rev_reverses_colored_products() {
    let x = ex("T(1+,1-,2+)");
    let y = ex("T(1-,1+,1-)");
    assert_eq!(rev(&star_i(&x, &y, 1).unwrap()), star_i(&rev(&y), &rev(&x), 1).unwrap());
}

#[test]
fn half_values() {
    let x = ex("T(1+,2+,3+)");
    assert!(!half_delta(&x).unwrap().is_zero(cat()));
    assert!(half_delta(&x.scale(2)).unwrap().is_zero(cat()));
    let o = ex("O(1+,2-)");
    assert_eq!(half_delta_y(&o).unwrap(), half_delta(&o).unwrap());
}
