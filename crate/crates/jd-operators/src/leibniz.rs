//! Both sides of the per-color identities behind the Leibniz rule for `δ`.
//!
//! The right-hand sides apply `δ_v` / `δ_vv′` to the legs left unmatched by
//! a gluing `β`, on a workbench that already carries the gluing.

use jd_diagram::{Diagram, Expr, Label, Ring, Workbench};

use crate::delta::delta_at;
use crate::error::OpError;
use crate::local::{delta_v_moves, delta_vw_move, require_strut_free};
use crate::product::{star_i, star_matchings};

/// Which identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    /// `δ^{i⁺}J ⋆ᵢ J′ + J ⋆ᵢ δ^{i⁻}J′`.
    B1,
    /// `δ^{i⁺}(J ⋆ᵢ J′) + J ⋆ᵢ δ^{i⁺}J′`.
    B2,
    /// `δ^{i⁻}(J ⋆ᵢ J′) + δ^{i⁻}J ⋆ᵢ J′`.
    B3,
}

pub fn lhs(id: Identity, x: &Diagram, y: &Diagram, i: u16) -> Result<Expr, OpError> {
    let (p, m) = (Label::plus(i), Label::minus(i));
    let ex = Expr::from_diagram(x, Ring::Mod2);
    let ey = Expr::from_diagram(y, Ring::Mod2);
    Ok(match id {
        Identity::B1 => &star_i(&delta_at(&ex, p)?, &ey, i)? + &star_i(&ex, &delta_at(&ey, m)?, i)?,
        Identity::B2 => &delta_at(&star_i(&ex, &ey, i)?, p)? + &star_i(&ex, &delta_at(&ey, p)?, i)?,
        Identity::B3 => &delta_at(&star_i(&ex, &ey, i)?, m)? + &star_i(&delta_at(&ex, m)?, &ey, i)?,
    })
}

/// Workbench ids of the legs labelled `l` that `beta` leaves unmatched.
fn unmatched(d: &Diagram, ids: &[usize], used: impl Fn(usize) -> bool, l: Label) -> Vec<usize> {
    (0..d.leg_count()).filter(|&j| d.legs()[j] == l && !used(j)).map(|j| ids[j]).collect()
}

/// `∑_v δ_v + ∑_{v,v′} δ_vv′` over the given legs, which share one label.
fn apply_all(w: &Workbench, free: &[usize], out: &mut Expr) -> Result<(), OpError> {
    for &v in free {
        for t in delta_v_moves(w, v)? {
            out.add_diagram(&t.build()?, 1);
        }
    }
    for (k, &a) in free.iter().enumerate() {
        for &b in &free[k + 1..] {
            out.add_diagram(&delta_vw_move(w, a, b)?.build()?, 1);
        }
    }
    Ok(())
}

pub fn rhs(id: Identity, x: &Diagram, y: &Diagram, i: u16) -> Result<Expr, OpError> {
    require_strut_free(x)?;
    require_strut_free(y)?;
    let (p, m) = (Label::plus(i), Label::minus(i));
    let mut out = Expr::zero(Ring::Mod2);
    for beta in star_matchings(x, y, Some(i)) {
        let mut w = Workbench::new();
        let ex = w.insert(x);
        let ey = w.insert(y);
        for &(a, b) in &beta {
            w.glue(ex.leg(a), ey.leg(b))?;
        }
        if matches!(id, Identity::B1 | Identity::B2) {
            let free = unmatched(x, &ex.legs, |j| beta.iter().any(|&(a, _)| a == j), p);
            apply_all(&w, &free, &mut out)?;
        }
        if matches!(id, Identity::B1 | Identity::B3) {
            let free = unmatched(y, &ey.legs, |j| beta.iter().any(|&(_, b)| b == j), m);
            apply_all(&w, &free, &mut out)?;
        }
    }
    Ok(out)
}
