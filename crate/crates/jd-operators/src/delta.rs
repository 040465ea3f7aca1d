//! `δ = δ′ + δ″ : 𝒜ₙ^Y → 𝒜ₙ₊₁^Y ⊗ ℤ/2` and its pieces.

use jd_diagram::{Diagram, Expr, Label, Ring, Workbench};

use crate::error::OpError;
use crate::local::{delta_v_moves, delta_vw_move, require_strut_free};

fn build_into(out: &mut Expr, w: &Workbench) -> Result<(), OpError> {
    out.add_diagram(&w.build()?, 1);
    Ok(())
}

/// `δ_v(J)` for the leg at position `v`.
pub fn delta_v(d: &Diagram, v: usize) -> Result<Expr, OpError> {
    require_strut_free(d)?;
    let (w, _) = Workbench::from_diagram(d);
    let mut out = Expr::zero(Ring::Mod2);
    for t in delta_v_moves(&w, v)? {
        build_into(&mut out, &t)?;
    }
    Ok(out)
}

/// `δ_vw(J)` for two distinct legs with equal labels.
pub fn delta_vw(d: &Diagram, v: usize, u: usize) -> Result<Expr, OpError> {
    require_strut_free(d)?;
    let (w, _) = Workbench::from_diagram(d);
    let mut out = Expr::zero(Ring::Mod2);
    build_into(&mut out, &delta_vw_move(&w, v, u)?)?;
    Ok(out)
}

/// Unordered pairs of distinct legs sharing a label, optionally restricted
/// to one label.
pub fn same_label_pairs(legs: &[Label], only: Option<Label>) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for v in 0..legs.len() {
        for u in v + 1..legs.len() {
            if legs[v] == legs[u] && only.is_none_or(|a| a == legs[v]) {
                out.push((v, u));
            }
        }
    }
    out
}

fn delta1_diagram(d: &Diagram, only: Option<Label>) -> Result<Expr, OpError> {
    let mut out = Expr::zero(Ring::Mod2);
    for v in 0..d.leg_count() {
        if only.is_none_or(|a| a == d.legs()[v]) {
            out += &delta_v(d, v)?;
        }
    }
    Ok(out)
}

fn delta2_diagram(d: &Diagram, only: Option<Label>) -> Result<Expr, OpError> {
    require_strut_free(d)?;
    let mut out = Expr::zero(Ring::Mod2);
    for (v, u) in same_label_pairs(d.legs(), only) {
        out += &delta_vw(d, v, u)?;
    }
    Ok(out)
}

fn linear(e: &Expr, f: impl Fn(&Diagram) -> Result<Expr, OpError>) -> Result<Expr, OpError> {
    let mut out = Expr::zero(Ring::Mod2);
    for (_, t) in e.terms() {
        out.add_expr(&f(&t.rep)?, t.coeff);
    }
    Ok(out)
}

/// `δ′ = ∑_v δ_v`.
pub fn delta_prime(e: &Expr) -> Result<Expr, OpError> {
    linear(e, |d| delta1_diagram(d, None))
}

/// `δ″ = ∑_{v,w} δ_vw` over unordered pairs with equal labels.
pub fn delta_double_prime(e: &Expr) -> Result<Expr, OpError> {
    linear(e, |d| delta2_diagram(d, None))
}

/// `δ = δ′ + δ″`.
pub fn delta(e: &Expr) -> Result<Expr, OpError> {
    linear(e, |d| Ok(&delta1_diagram(d, None)? + &delta2_diagram(d, None)?))
}

/// `δ^a`: the part of `δ` supported on legs labelled `a`.
pub fn delta_at(e: &Expr, a: Label) -> Result<Expr, OpError> {
    linear(e, |d| Ok(&delta1_diagram(d, Some(a))? + &delta2_diagram(d, Some(a))?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use jd_diagram::parse_expr;

    fn ex(s: &str) -> Expr {
        parse_expr(s).unwrap()
    }

    #[test]
    fn split_by_color_sums_to_delta() {
        let e = ex("T(1+,2+,1+,2-) + T(1-,1-,1+)");
        let mut sum = Expr::zero(Ring::Mod2);
        for a in Label::all(2) {
            sum += &delta_at(&e, a).unwrap();
        }
        assert_eq!(sum, delta(&e).unwrap());
        assert_eq!(delta(&e).unwrap(), &delta_prime(&e).unwrap() + &delta_double_prime(&e).unwrap());
    }

    #[test]
    fn struts_are_rejected() {
        assert!(matches!(delta(&ex("S(1+,1-)")), Err(OpError::Strut(_))));
    }

    #[test]
    fn delta_vw_requires_equal_labels() {
        let d = jd_diagram::parse_diagram("T(1+,2+,1+)").unwrap();
        assert!(delta_vw(&d, 0, 1).is_err());
        assert!(delta_vw(&d, 0, 0).is_err());
        assert_eq!(delta_vw(&d, 0, 2).unwrap().len(), 1);
    }
}
