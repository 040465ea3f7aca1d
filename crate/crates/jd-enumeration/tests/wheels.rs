use jd_abelian::BigInt;
use jd_enumeration::*;
use jd_lie::{all_words, Word};

#[test]
fn phi_is_an_isomorphism_in_low_degree() {
    for g in 1..=2 {
        for n in 2..=3 {
            let p = phi(g, n).unwrap();
            assert!(p.hom.is_isomorphism(), "Φ at g={g} n={n}");
        }
    }
}

#[test]
fn one_loop_rank_matches_the_necklace_formula() {
    for (n, g) in [(2, 1), (2, 2), (3, 1), (3, 2), (4, 1)] {
        let s = one_loop(g, n).unwrap().structure();
        assert_eq!(s.rank as u128, rank_formula(g, n).unwrap(), "n={n} g={g}");
        let m = (2 * g as usize).pow(n.div_ceil(2) as u32);
        if n % 2 == 1 {
            assert_eq!(s.invariant_factors.len(), m);
            assert!(s.invariant_factors.iter().all(|d| *d == BigInt::from(2)));
        } else {
            assert!(s.invariant_factors.is_empty());
        }
    }
}

#[test]
fn odd_torsion_is_parametrized_by_palindromes() {
    for (g, n) in [(1, 3), (2, 3), (1, 5)] {
        let t = torsion_param(g, n).unwrap();
        assert!(t.hom.is_injective(), "g={g} n={n}");
        assert!(torsion_param_is_onto_torsion(&t), "g={g} n={n}");
    }
    assert!(torsion_param(1, 2).is_err());
    // O(a) carries a self-loop, so degree one has nothing to parametrize.
    assert!(one_loop(1, 1).unwrap().structure().is_trivial());
}

#[test]
fn doubling_gives_periodic_isomorphisms() {
    for n in [2, 3] {
        let p = periodic_iso(1, n).unwrap();
        assert_eq!(p.holds(), (true, true), "n={n}");
    }
}

#[test]
fn symmetric_identification_at_the_bottom() {
    for g in 1..=2 {
        let id = periodic_symmetric_identification(g, 1).unwrap();
        assert!(id.hom.is_isomorphism());
        assert!(id.detects_mod2);
        assert_eq!(id.words.len(), 2 * g as usize);
        let e = id.image_expr(&[vec![0u8]]);
        assert_eq!(e.len(), 1);
    }
}

#[test]
fn cyclic_words_cover_necklaces() {
    for (k, n) in [(2, 4), (3, 3), (4, 2)] {
        let mut seen: Vec<Word> = all_words(k, n).iter().map(|w| CyclicWord::new(w).letters).collect();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len() as u128, necklaces(k, n));
    }
}
