//! `ℚ/ℤ`-valued right-hand sides: `(id⊗½)(δ + 𝕐)` on `𝒜^Y` and
//! `(id⊗½)δ` on `𝒜^c`.

use std::fmt;

use jd_diagram::{render_expr, Expr, Ring};
use jd_spaces::{is_half_zero, Catalog};

use crate::delta::delta;
use crate::error::OpError;
use crate::product::y_op;

/// The element `x ⊗ ½` of `𝒜 ⊗ ℚ/ℤ`, stored through an integral lift `x`
/// (only `x` modulo 2 matters).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Half {
    lift: Expr,
}

impl Half {
    pub fn new(x: &Expr) -> Self {
        Half { lift: x.to_mod2().to_integral() }
    }

    pub fn lift(&self) -> &Expr {
        &self.lift
    }

    pub fn is_zero(&self, cat: &Catalog) -> bool {
        is_half_zero(cat, &self.lift)
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lift.is_zero() {
            return write!(f, "0");
        }
        write!(f, "1/2*({})", render_expr(&self.lift))
    }
}

/// `(id⊗½)δ`.
pub fn half_delta(e: &Expr) -> Result<Half, OpError> {
    Ok(Half::new(&delta(e)?))
}

/// `(id⊗½)(δ + 𝕐)`.
pub fn half_delta_y(e: &Expr) -> Result<Half, OpError> {
    let d = delta(e)?.to_integral();
    let y = y_op(&e.to_integral())?;
    let mut sum = Expr::zero(Ring::Z);
    sum += &d;
    sum += &y;
    Ok(Half::new(&sum))
}
