//! Counting formulas against brute force.

use jd_enumeration::{bracelets, bracelets_brute, necklaces, necklaces_brute};

use crate::ctx::Ctx;
use crate::report::Case;

pub fn necklace_counts(ctx: &Ctx) -> Vec<Case> {
    let mut out = Vec::new();
    for k in 1..=4 {
        for n in (1..=6).filter(|&n| ctx.degree_ok(n)) {
            out.push(Case::compare(
                format!("necklaces/bracelets k={k} n={n}"),
                format!("{} / {}", necklaces_brute(k, n), bracelets_brute(k, n)),
                format!("{} / {}", necklaces(k, n), bracelets(k, n)),
            ));
        }
    }
    out
}
