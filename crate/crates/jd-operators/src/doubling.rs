//! The doubling map `Δ_{n,r} : 𝒜^c_{n,r} → 𝒜^c_{2n+1,2r}` and the
//! edge-joined doubles `D_vw`.

use jd_diagram::{render_diagram, Diagram, Expr, Ring, Workbench};

use crate::error::OpError;

fn require_connected(d: &Diagram) -> Result<(), OpError> {
    if d.is_connected() && !d.is_empty() {
        Ok(())
    } else {
        Err(OpError::Disconnected(render_diagram(d).0))
    }
}

/// `Δ_v(J)`: two copies of `J` with `v` removed, joined at a new vertex
/// ordered `(ℓ(v), copy 1, copy 2)`.
pub fn doubling_at(d: &Diagram, v: usize) -> Result<Diagram, OpError> {
    require_connected(d)?;
    if v >= d.leg_count() {
        return Err(OpError::NoSuchLeg(v));
    }
    let mut w = Workbench::new();
    let e1 = w.insert(d);
    let e2 = w.insert(d);
    let p1 = w.pair(w.leg_dart(e1.leg(v)));
    let p2 = w.pair(w.leg_dart(e2.leg(v)));
    w.kill_leg(e1.leg(v));
    w.kill_leg(e2.leg(v));
    let [x0, x1, x2] = w.add_vertex();
    let l = w.add_leg(d.legs()[v]);
    let ld = w.leg_dart(l);
    w.connect(x0, ld);
    w.connect(x1, p1);
    w.connect(x2, p2);
    Ok(w.build()?)
}

/// `Δ_{n,r}(J) = ∑_v Δ_v(J)` over ℤ, extended linearly.
pub fn doubling(e: &Expr) -> Result<Expr, OpError> {
    let mut out = Expr::zero(Ring::Z);
    for (_, t) in e.terms() {
        for v in 0..t.rep.leg_count() {
            out.add_diagram(&doubling_at(&t.rep, v)?, t.coeff);
        }
    }
    Ok(out)
}

/// `D_vw(J)`: the midpoints of the edges at `v` (first copy) and `w`
/// (second copy) joined by a new edge.
pub fn edge_join(d: &Diagram, v: usize, u: usize) -> Result<Diagram, OpError> {
    require_connected(d)?;
    if v >= d.leg_count() || u >= d.leg_count() {
        return Err(OpError::NoSuchLeg(v.max(u)));
    }
    let mut w = Workbench::new();
    let e1 = w.insert(d);
    let e2 = w.insert(d);
    let m1 = w.subdivide(w.leg_dart(e1.leg(v)));
    let m2 = w.subdivide(w.leg_dart(e2.leg(u)));
    w.connect(m1, m2);
    Ok(w.build()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use jd_diagram::parse_expr;

    #[test]
    fn strut_doubles_to_two_trees() {
        let e = parse_expr("S(1+,2-)").unwrap();
        assert_eq!(doubling(&e).unwrap(), parse_expr("T(1+,2-,2-) + T(2-,1+,1+)").unwrap());
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let d = jd_diagram::parse_diagram("T(1+,1+,1-) ⊔ T(1+,1-,1-)").unwrap();
        assert!(matches!(doubling_at(&d, 0), Err(OpError::Disconnected(_))));
    }

    #[test]
    fn edge_join_degrees() {
        let d = jd_diagram::parse_diagram("T(1+,2+,2-)").unwrap();
        let j = edge_join(&d, 0, 2).unwrap();
        assert_eq!(j.trivalent_count(), 4);
        assert_eq!(j.loop_degree(), 0);
        assert!(j.is_connected());
    }
}
