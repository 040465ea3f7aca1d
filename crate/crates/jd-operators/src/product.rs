//! Gluing products: `⋆`, `⋆ᵢ`, `∘`, and the label-reversal `rev`, plus the
//! component-duplicating `𝕐`.

use jd_diagram::{render_diagram, Diagram, Expr, Label, Ring, Workbench};

use crate::error::OpError;
use crate::local::require_strut_free;

/// All partial injections from `a` into `b`, as lists of pairs; includes
/// the empty one.
pub fn partial_matchings(a: &[usize], b: &[usize]) -> Vec<Vec<(usize, usize)>> {
    fn rec(a: &[usize], b: &[usize], used: &mut Vec<bool>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let Some((&x, rest)) = a.split_first() else {
            out.push(cur.clone());
            return;
        };
        rec(rest, b, used, cur, out);
        for j in 0..b.len() {
            if !used[j] {
                used[j] = true;
                cur.push((x, b[j]));
                rec(rest, b, used, cur, out);
                cur.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(a, b, &mut vec![false; b.len()], &mut Vec::new(), &mut out);
    out
}

/// All bijections between `a` and `b` (none if the sizes differ).
pub fn complete_matchings(a: &[usize], b: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if a.len() != b.len() {
        return Vec::new();
    }
    partial_matchings(a, b).into_iter().filter(|m| m.len() == a.len()).collect()
}

fn legs_with(d: &Diagram, l: Label) -> Vec<usize> {
    (0..d.leg_count()).filter(|&j| d.legs()[j] == l).collect()
}

/// Cartesian product of per-color matching lists.
fn combine(per_color: Vec<Vec<Vec<(usize, usize)>>>) -> Vec<Vec<(usize, usize)>> {
    per_color.into_iter().fold(vec![Vec::new()], |acc, ms| {
        acc.iter()
            .flat_map(|p| {
                ms.iter().map(move |m| {
                    let mut v = p.clone();
                    v.extend_from_slice(m);
                    v
                })
            })
            .collect()
    })
}

fn colors(x: &Diagram, y: &Diagram) -> Vec<u16> {
    let mut c: Vec<u16> = x.legs().iter().chain(y.legs()).map(|l| l.index()).collect();
    c.sort_unstable();
    c.dedup();
    c
}

/// `x ∪_β y`: the disjoint union with leg `a` of `x` glued to leg `b` of
/// `y` for each `(a, b)` in `beta`.
pub fn glue_along(x: &Diagram, y: &Diagram, beta: &[(usize, usize)]) -> Result<Diagram, OpError> {
    let mut w = Workbench::new();
    let ex = w.insert(x);
    let ey = w.insert(y);
    for &(a, b) in beta {
        w.glue(ex.leg(a), ey.leg(b))?;
    }
    Ok(w.build()?)
}

/// Matchings of `i⁺` legs of `x` with `i⁻` legs of `y`, for the colors in
/// `only` (all colors if `None`).
pub fn star_matchings(x: &Diagram, y: &Diagram, only: Option<u16>) -> Vec<Vec<(usize, usize)>> {
    let per_color = colors(x, y)
        .into_iter()
        .filter(|&i| only.is_none_or(|o| o == i))
        .map(|i| partial_matchings(&legs_with(x, Label::plus(i)), &legs_with(y, Label::minus(i))))
        .collect();
    combine(per_color)
}

fn star_diagrams(x: &Diagram, y: &Diagram, only: Option<u16>, ring: Ring) -> Result<Expr, OpError> {
    require_strut_free(x)?;
    require_strut_free(y)?;
    let mut out = Expr::zero(ring);
    for beta in star_matchings(x, y, only) {
        out.add_diagram(&glue_along(x, y, &beta)?, 1);
    }
    Ok(out)
}

fn ring_of(x: &Expr, y: &Expr) -> Ring {
    if x.ring() == Ring::Mod2 || y.ring() == Ring::Mod2 {
        Ring::Mod2
    } else {
        Ring::Z
    }
}

fn bilinear(x: &Expr, y: &Expr, f: impl Fn(&Diagram, &Diagram, Ring) -> Result<Expr, OpError>) -> Result<Expr, OpError> {
    let ring = ring_of(x, y);
    let mut out = Expr::zero(ring);
    for (_, a) in x.terms() {
        for (_, b) in y.terms() {
            out.add_expr(&f(&a.rep, &b.rep, ring)?, a.coeff * b.coeff);
        }
    }
    Ok(out)
}

/// `x ⋆ y`: all partial gluings of `i⁺` legs of `x` to `i⁻` legs of `y`.
pub fn star(x: &Expr, y: &Expr) -> Result<Expr, OpError> {
    bilinear(x, y, |a, b, r| star_diagrams(a, b, None, r))
}

/// `x ⋆ᵢ y`: as [`star`], gluing only color `i`.
pub fn star_i(x: &Expr, y: &Expr, i: u16) -> Result<Expr, OpError> {
    bilinear(x, y, |a, b, r| star_diagrams(a, b, Some(i), r))
}

/// `x ∘ y`: all complete gluings of the `i⁺` legs of `x` to the `i⁻` legs
/// of `y`, for every color at once.
pub fn compose(x: &Expr, y: &Expr) -> Result<Expr, OpError> {
    bilinear(x, y, |a, b, ring| {
        if !a.metrics().top_substantial {
            return Err(OpError::NotTopSubstantial(render_diagram(a).0));
        }
        let per_color = colors(a, b)
            .into_iter()
            .map(|i| complete_matchings(&legs_with(a, Label::plus(i)), &legs_with(b, Label::minus(i))))
            .collect();
        let mut out = Expr::zero(ring);
        for beta in combine(per_color) {
            out.add_diagram(&glue_along(a, b, &beta)?, 1);
        }
        Ok(out)
    })
}

/// Flips the sign of every leg label.
pub fn rev(e: &Expr) -> Expr {
    e.map_labels(Label::star)
}

/// `𝕐(J) = ∑_Y J ⊔ Y` over the components `Y` of `J` with one trivalent
/// vertex.
pub fn y_op(e: &Expr) -> Result<Expr, OpError> {
    let mut out = Expr::zero(e.ring());
    for (_, t) in e.terms() {
        require_strut_free(&t.rep)?;
        for c in t.rep.split_components() {
            if c.trivalent_count() == 1 {
                out.add_diagram(&t.rep.disjoint_union(&c), t.coeff);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use jd_diagram::parse_expr;

    fn ex(s: &str) -> Expr {
        parse_expr(s).unwrap()
    }

    #[test]
    fn matching_counts() {
        assert_eq!(partial_matchings(&[0, 1], &[0, 1]).len(), 7);
        assert_eq!(partial_matchings(&[], &[0, 1]).len(), 1);
        assert_eq!(complete_matchings(&[0, 1, 2], &[3, 4, 5]).len(), 6);
        assert!(complete_matchings(&[0], &[]).is_empty());
    }

    #[test]
    fn empty_diagram_is_a_unit() {
        let x = ex("T(1+,2-,3+) + 2*O(1+,1-)");
        let one = Expr::from_diagram(&Diagram::empty(), Ring::Z);
        assert_eq!(star(&one, &x).unwrap(), x);
        assert_eq!(star(&x, &one).unwrap(), x);
    }

    #[test]
    fn single_gluing_gives_an_h() {
        let x = ex("T(1+,2+,2-)");
        let y = ex("T(1-,3+,3-)");
        let got = star(&x, &y).unwrap();
        let glued = &ex("T(1+,2+,2-) ⊔ T(1-,3+,3-)") + &ex("T(2+,2-,3+,3-)");
        let other = &ex("T(1+,2+,2-) ⊔ T(1-,3+,3-)") - &ex("T(2+,2-,3+,3-)");
        assert!(got == glued || got == other, "{}", jd_diagram::render_expr(&got));
        assert_eq!(got.len(), 2);
    }

    #[test]
    fn compose_examples() {
        assert_eq!(compose(&ex("S(1+,2-)"), &ex("S(1+,1-)")).unwrap(), ex("S(1+,2-)"));
        assert!(compose(&ex("S(1+,2-)"), &ex("S(1+,2+)")).unwrap().is_zero());
        assert!(matches!(compose(&ex("S(1+,1+)"), &ex("S(1-,1-)")), Err(OpError::NotTopSubstantial(_))));
    }

    #[test]
    fn y_examples() {
        assert_eq!(y_op(&ex("T(1+,2+,1-)")).unwrap(), ex("T(1+,2+,1-) ⊔ T(1+,2+,1-)"));
        assert!(y_op(&ex("O(1+,2+)")).unwrap().is_zero());
        assert_eq!(y_op(&ex("T(1+,2+,1-) ⊔ O(1-,2-)")).unwrap(), ex("T(1+,2+,1-) ⊔ T(1+,2+,1-) ⊔ O(1-,2-)"));
    }

    #[test]
    fn rev_example() {
        assert_eq!(rev(&ex("T(1+,2-,1-)")), ex("T(1-,2+,1+)"));
    }
}
