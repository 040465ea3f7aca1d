use jd_abelian::{BigInt, Subgroup};
use jd_diagram::parse_expr;
use jd_lie::*;

fn dim_l(g: u16, n: usize) -> usize {
    witt_dimension(2 * g as usize, n)
}

#[test]
fn quasi_lie_even_degrees() {
    for (g, n) in [(1, 2), (2, 2), (1, 4), (2, 4), (1, 6)] {
        let q = QuasiLie::cached(g, n).unwrap();
        let s = q.group().structure();
        assert_eq!(s.rank, dim_l(g, n), "rank of L'_{n} at g={g}");
        assert_eq!(s.count_factor(2), dim_l(g, n / 2), "torsion of L'_{n} at g={g}");
        assert_eq!(s.invariant_factors.len(), s.count_factor(2));

        let gamma = q.gamma().unwrap();
        assert!(gamma.is_surjective());
        let th = theta(g, n / 2).unwrap();
        assert!(th.is_injective(), "theta injective at g={g}, k={}", n / 2);
        assert!(th.image().equals(&gamma.kernel()), "im theta = ker gamma at g={g}, n={n}");
    }
}

#[test]
fn gamma_is_an_isomorphism_in_odd_degrees() {
    for n in [1, 3, 5] {
        let q = QuasiLie::cached(1, n).unwrap();
        assert!(q.gamma().unwrap().is_isomorphism(), "gamma_{n}");
    }
    assert!(QuasiLie::cached(2, 3).unwrap().gamma().unwrap().is_isomorphism());
}

#[test]
fn eta_prime_is_an_isomorphism_onto_the_quasi_kernel() {
    for g in [1u16, 2] {
        for n in 0..=3 {
            let e = eta_prime(g, n).unwrap();
            let d = BracketKernel::quasi(g, n).unwrap();
            assert!(e.hom.is_injective(), "eta' injective n={n} g={g}");
            assert!(e.hom.image().equals(&d.kernel), "eta' onto D'_{n} at g={g}");
        }
    }
}

#[test]
fn eta_prime_on_four_legs() {
    let e = parse_expr("T(1+,1-,2+,2-)").unwrap();
    let terms = eta_prime_expr(&e).unwrap();
    let (a1, a2, a3, a4) = (RTree::leaf(0), RTree::leaf(1), RTree::leaf(2), RTree::leaf(3));
    let b = |x: &RTree, y: &RTree| RTree::bracket(x.clone(), y.clone());
    let expected = [
        (0u8, b(&a2, &b(&a3, &a4))),
        (1, b(&b(&a3, &a4), &a1)),
        (2, b(&a4, &b(&a1, &a2))),
        (3, b(&b(&a1, &a2), &a3)),
    ];
    for (x, t) in expected {
        let got = terms.iter().find(|(y, _)| *y == x).map(|(_, c)| c.clone()).unwrap();
        assert_eq!(got, TreeCombination::from_tree(&t), "leg {x}");
    }
}

#[test]
fn bracket_kernels() {
    assert_eq!(BracketKernel::lie(1, 3).unwrap().structure().rank, 0);
    assert_eq!(BracketKernel::lie(2, 1).unwrap().structure().describe(), "Z ^ 4");
    for (g, n) in [(1, 1), (1, 2), (2, 2), (2, 3)] {
        let s = BracketKernel::lie(g, n).unwrap().structure();
        assert!(s.invariant_factors.is_empty(), "D_{n} torsion-free at g={g}");
    }
}

#[test]
fn tree_torsion_is_the_image_of_sq() {
    for (g, k) in [(1u16, 1usize), (2, 1), (1, 2), (2, 2)] {
        let s = sq(g, k).unwrap();
        assert!(s.hom.is_injective(), "sq injective g={g} k={k}");
        let st = s.space.structure();
        let torsion = Subgroup::new(s.space.group(), st.torsion_basis.clone());
        assert!(s.hom.image().equals(&torsion), "tor = im sq at g={g} k={k}");
        assert_eq!(st.count_factor(2), 2 * g as usize * dim_l(g, k));
    }
}

#[test]
fn levine_sequences_are_exact() {
    for (g, k) in [(1u16, 1usize), (2, 1), (1, 2)] {
        let sqq = sq_quasi(g, k).unwrap();
        assert!(sqq.is_injective());
        assert!(sqq.image().equals(&comparison_kernel(g, 2 * k - 1).unwrap()), "second sequence g={g} k={k}");
    }
    for (g, k) in [(1u16, 1usize), (2, 1), (1, 2)] {
        assert!(is_trivial_subgroup(&comparison_kernel(g, 2 * k).unwrap()), "first sequence g={g} k={k}");
    }
}

#[test]
fn nu_is_injective_and_factors_through_gamma() {
    for (g, k) in [(1u16, 1usize), (2, 1), (1, 2), (2, 2)] {
        let (rank, dim) = nu_rank(g, k).unwrap();
        assert_eq!(rank, dim, "nu injective g={g} k={k}");
        assert!(nu_kills_theta(g, k).unwrap());
        assert!(nu_factors_through_gamma(g, k).unwrap());
    }
}

#[test]
fn sl_identification() {
    for (g, k) in [(1u16, 1usize), (2, 1), (1, 2)] {
        let s = sl_ident(g, k).unwrap();
        assert!(s.hom.is_isomorphism(), "sl g={g} k={k}");
        assert_eq!(s.quotient.count_factor(2), dim_l(g, k + 1));
    }
}

#[test]
fn j_and_the_degree_three_quotient() {
    for (g, expected) in [(1u16, "Z/2 ^ 5"), (2, "Z ^ 40 + Z/2 ^ 30")] {
        let j = j_hom(g).unwrap();
        assert!(j.hom.is_injective(), "j injective at g={g}");
        assert_eq!(j.hom.cokernel().structure().describe(), expected);
    }
}

#[test]
fn j_is_alternating() {
    let g = 2u16;
    let space = jd_spaces::Space::new(jd_spaces::Catalog::global(), g, jd_spaces::Flavor::Connected { ideg: 3, loops: None }).unwrap();
    let el = |e: &jd_diagram::Expr| space.element(e).unwrap();
    let two = BigInt::from(2);
    for a in 0..4u8 {
        for b in 0..4u8 {
            let x = j2(a, b);
            assert!(space.group().is_zero(&space.coords(&x).unwrap().iter().map(|c| c * &two).collect::<Vec<_>>()));
            if a == b {
                assert!(el(&x).is_zero());
            } else {
                assert_eq!(el(&x), el(&j2(b, a)));
            }
            for c in 0..4u8 {
                let y = j3(a, b, c);
                if a == b || b == c || a == c {
                    assert!(el(&y).is_zero(), "j({a},{b},{c}) with a repeat");
                } else {
                    let mut s = [a, b, c];
                    s.sort();
                    assert_eq!(el(&y), el(&j3(s[0], s[1], s[2])));
                }
            }
        }
    }
}
