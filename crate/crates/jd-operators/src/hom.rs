//! Operators as certified homomorphisms between presented spaces.

use std::sync::Arc;

use jd_abelian::{BigInt, GroupHom, PresentedGroup};
use jd_diagram::{Diagram, Expr};
use jd_spaces::Space;

use crate::error::OpError;

/// The map `source → target` sending each generator `D` to `f(D)`, with
/// every source relator checked to vanish.
pub fn induced_hom(source: &Space, target: &Space, f: impl Fn(&Diagram) -> Result<Expr, OpError>) -> Result<GroupHom, OpError> {
    induced_hom_into(source, target.group(), |e| {
        let img = e.terms().try_fold(Expr::zero(jd_diagram::Ring::Z), |mut acc, (_, t)| {
            acc.add_expr(&f(&t.rep)?, t.coeff);
            Ok::<_, OpError>(acc)
        })?;
        Ok(target.coords(&img)?)
    })
}

/// As [`induced_hom`], with images given directly in target coordinates.
pub fn induced_hom_into(
    source: &Space,
    target: Arc<PresentedGroup>,
    f: impl Fn(&Expr) -> Result<Vec<BigInt>, OpError>,
) -> Result<GroupHom, OpError> {
    let images = (0..source.len()).map(|i| f(&source.generator(i))).collect::<Result<Vec<_>, _>>()?;
    Ok(GroupHom::from_images(source.group(), target, images)?)
}
