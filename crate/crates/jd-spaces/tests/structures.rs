use jd_diagram::{parse_expr, Expr, Ring};
use jd_spaces::{ihx_triple, internal_edges, Catalog, Flavor, Space};

fn space(g: u16, flavor: Flavor) -> Space {
    Space::new(Catalog::global(), g, flavor).unwrap()
}

fn conn(ideg: usize, loops: usize) -> Flavor {
    Flavor::Connected { ideg, loops: Some(loops) }
}

#[test]
fn generator_counts() {
    assert_eq!(space(1, conn(1, 0)).len(), 4);
    assert_eq!(space(1, conn(2, 1)).len(), 3);
    assert_eq!(space(1, conn(0, 0)).len(), 3);
    let names: Vec<String> = (0..3).map(|i| space(1, conn(2, 1)).generator_name(i)).collect();
    assert!(names.iter().all(|n| n.trim_start_matches('-').starts_with("O(")), "{names:?}");
}

#[test]
fn one_loop_structures() {
    assert_eq!(space(1, conn(2, 1)).structure().describe(), "Z ^ 3");
    assert_eq!(space(1, conn(3, 1)).structure().describe(), "Z/2 ^ 4");
    assert_eq!(space(2, conn(2, 1)).structure().describe(), "Z ^ 10");
}

#[test]
fn two_loop_degree_three_vanishes() {
    assert!(space(1, conn(3, 2)).structure().is_trivial());
    assert!(space(2, conn(3, 2)).structure().is_trivial());
}

#[test]
fn tree_degree_one() {
    // Λ³H plus (H⊗H)⊗ℤ/2.
    assert_eq!(space(1, conn(1, 0)).structure().describe(), "Z/2 ^ 4");
    assert_eq!(space(2, conn(1, 0)).structure().describe(), "Z ^ 4 + Z/2 ^ 16");
}

#[test]
fn reduce_examples() {
    let s = space(2, conn(1, 0));
    for text in ["T(1+,2+,2-) + T(2+,1+,2-)", "2*T(1+,2+,1+)"] {
        assert!(s.is_zero(&parse_expr(text).unwrap()).unwrap(), "{text}");
    }
    assert!(!s.is_zero(&parse_expr("T(1+,2+,1+)").unwrap()).unwrap());
    let one = space(1, conn(1, 1));
    assert!(one.is_zero(&parse_expr("O(1+)").unwrap()).unwrap());
    assert!(s.coords(&parse_expr("O(1+,2+)").unwrap()).is_err());
}

#[test]
fn relators_vanish() {
    for (g, f) in [(1, conn(2, 0)), (1, conn(3, 0)), (2, conn(2, 1)), (1, conn(4, 1))] {
        let s = space(g, f);
        for b in s.blocks() {
            for g in b.gens() {
                // Every internal dart, in both directions, gives a relation.
                for e in internal_edges(&g.rep).into_iter().flat_map(|e| [e, g.rep.pair(e)]) {
                    let mut sum = Expr::zero(Ring::Z);
                    for d in ihx_triple(&g.rep, e) {
                        sum.add_diagram(&d, 1);
                    }
                    assert!(s.is_zero(&sum).unwrap());
                }
            }
        }
    }
}

#[test]
fn strut_free_products() {
    let y = space(1, Flavor::StrutFree { ideg: 2 });
    // Components: 𝒜^c_2 plus pairs of degree-one generators.
    let c2 = space(1, Flavor::Connected { ideg: 2, loops: None });
    assert_eq!(y.len(), c2.len() + 4 * 5 / 2);
    let s = y.structure();
    // Sym²((ℤ/2)⁴) has dimension 10 over 𝔽₂.
    assert_eq!(s.rank, c2.structure().rank);
    let e = parse_expr("T(1+,1+,1-) ⊔ T(1+,1-,1-) + T(1-,1+,1+) ⊔ T(1+,1-,1-)").unwrap();
    assert!(y.is_zero(&e).unwrap());
}

#[test]
fn full_flavor_with_struts() {
    let f = space(1, Flavor::Full { ideg: 0, legs: 4 });
    // Unordered pairs of the three struts.
    assert_eq!(f.len(), 6);
    assert_eq!(f.structure().describe(), "Z ^ 6");
}

#[test]
fn bounds_are_enforced() {
    assert!(Space::new(Catalog::global(), 2, conn(5, 1)).is_err());
    assert!(Space::new(Catalog::global(), 3, conn(4, 1)).is_err());
}

#[test]
fn symmetric_and_periodic_subgroups() {
    let s = space(1, Flavor::OneLoopSymmetric { ideg: 3 });
    assert_eq!(s.structure().describe(), "Z/2 ^ 4");
    let p = space(1, Flavor::OneLoopPeriodic { ideg: 4 });
    assert_eq!(p.structure().describe(), "Z ^ 3");
}

#[test]
fn generators_have_unit_coordinates() {
    use jd_abelian::unit;
    for (g, f) in [(2, conn(3, 0)), (1, conn(4, 1)), (2, Flavor::StrutFree { ideg: 2 })] {
        let s = space(g, f);
        for i in 0..s.len() {
            assert_eq!(s.coords(&s.generator(i)).unwrap(), unit(s.len(), i), "{} generator {i}", s.descriptor());
        }
    }
}
