//! Operators by name, as used on the command line.

use std::fmt;

use jd_diagram::{render_expr, Expr, Label};

use crate::error::OpError;
use crate::half::{half_delta, half_delta_y, Half};
use crate::{compose, delta, delta_at, delta_double_prime, delta_prime, doubling, rev, star, y_op};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OpOutput {
    Expr(Expr),
    Half(Half),
}

impl fmt::Display for OpOutput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpOutput::Expr(e) => write!(f, "{}", render_expr(e)),
            OpOutput::Half(h) => write!(f, "{h}"),
        }
    }
}

/// Number of expression arguments the named operator takes.
pub fn arity(name: &str) -> Result<usize, OpError> {
    match name {
        "star" | "compose" => Ok(2),
        "delta" | "delta1" | "delta2" | "Y" | "Delta" | "rev" | "halfDelta" | "halfDeltaY" => Ok(1),
        n if n.starts_with("deltaAt:") => Ok(1),
        n => Err(OpError::UnknownOperator(n.to_string())),
    }
}

pub fn apply_named(name: &str, args: &[Expr]) -> Result<OpOutput, OpError> {
    let k = arity(name)?;
    if args.len() != k {
        return Err(OpError::UnknownOperator(format!("{name} takes {k} argument(s), got {}", args.len())));
    }
    let x = &args[0];
    let out = match name {
        "delta" => delta(x)?,
        "delta1" => delta_prime(x)?,
        "delta2" => delta_double_prime(x)?,
        "Y" => y_op(x)?,
        "Delta" => doubling(x)?,
        "rev" => rev(x),
        "star" => star(x, &args[1])?,
        "compose" => compose(x, &args[1])?,
        "halfDelta" => return Ok(OpOutput::Half(half_delta(x)?)),
        "halfDeltaY" => return Ok(OpOutput::Half(half_delta_y(x)?)),
        n => {
            let arg = n.trim_start_matches("deltaAt:");
            let label = parse_label(arg).ok_or_else(|| OpError::UnknownOperator(n.to_string()))?;
            delta_at(x, label)?
        }
    };
    Ok(OpOutput::Expr(out))
}

/// `3+`, `3-`, or `3*` … forms; a trailing `*` applies the dual involution.
fn parse_label(s: &str) -> Option<Label> {
    if let Some(base) = s.strip_suffix('*') {
        return parse_label(base).map(Label::star);
    }
    s.parse().ok()
}
