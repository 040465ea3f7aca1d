//! Local replacements on a [`Workbench`], addressed by stable leg ids so
//! that they compose with gluing.

use jd_diagram::{render_diagram, Diagram, Workbench};

use crate::error::OpError;

/// Dart of the trivalent vertex a leg hangs from.
pub(crate) fn attachment(w: &Workbench, leg: usize) -> Result<usize, OpError> {
    if leg >= w.leg_count() || !w.leg_alive(leg) {
        return Err(OpError::NoSuchLeg(leg));
    }
    let p = w.pair(w.leg_dart(leg));
    if w.leg_of(p).is_some() {
        return Err(OpError::Strut(format!("leg {leg} is a strut end")));
    }
    Ok(p)
}

/// The two terms of `δ_v`: a second `ℓ(v)` leg on an adjacent edge, and
/// the fork `(ℓ(v), ℓ(v)*)` in place of `v`.
pub fn delta_v_moves(w: &Workbench, leg: usize) -> Result<[Workbench; 2], OpError> {
    let p = attachment(w, leg)?;
    let lab = w.leg_label(leg);

    let mut a = w.clone();
    let (_, s2) = a.next_at_vertex(p).expect("vertex dart");
    let third = a.subdivide(s2);
    let l = a.add_leg(lab);
    let ld = a.leg_dart(l);
    a.connect(third, ld);

    let mut b = w.clone();
    b.kill_leg(leg);
    let [stem, y1, y2] = b.add_vertex();
    b.connect(stem, p);
    let l1 = b.add_leg(lab.star());
    let l2 = b.add_leg(lab);
    let (d1, d2) = (b.leg_dart(l1), b.leg_dart(l2));
    b.connect(y1, d1);
    b.connect(y2, d2);
    Ok([a, b])
}

/// `δ_vw`: the two legs fuse into an arc through a new vertex carrying a
/// single leg of the common label.
pub fn delta_vw_move(w: &Workbench, v: usize, u: usize) -> Result<Workbench, OpError> {
    if v == u {
        return Err(OpError::SameLeg);
    }
    let (pv, pu) = (attachment(w, v)?, attachment(w, u)?);
    let (lv, lu) = (w.leg_label(v), w.leg_label(u));
    if lv != lu {
        return Err(OpError::LabelMismatch { v, w: u, lv: lv.to_string(), lw: lu.to_string() });
    }
    let mut a = w.clone();
    a.kill_leg(v);
    a.kill_leg(u);
    let [m0, m1, m2] = a.add_vertex();
    a.connect(m0, pu);
    a.connect(m2, pv);
    let l = a.add_leg(lv);
    let ld = a.leg_dart(l);
    a.connect(m1, ld);
    Ok(a)
}

pub(crate) fn require_strut_free(d: &Diagram) -> Result<(), OpError> {
    if d.struts().is_empty() {
        Ok(())
    } else {
        Err(OpError::Strut(render_diagram(d).0))
    }
}
