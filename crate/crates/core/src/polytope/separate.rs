//! Separation over a facet system in one pass.

use num_traits::Signed;

use super::{FacetSystem, LinearConstraint, Sense};
use crate::error::{MatroidError, Result};
use crate::Rational;

/// A violated constraint and by how much it is violated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub constraint: LinearConstraint,
    pub amount: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separation {
    pub violated: Option<Violation>,
    /// Number of constraints evaluated, the equality counted once.
    pub evaluated: usize,
}

fn violation(c: &LinearConstraint, x: &[Rational]) -> Rational {
    let lhs = c.lhs_rational(x);
    let rhs = Rational::from_integer(c.rhs.into());
    match c.sense {
        Sense::Le => lhs - rhs,
        Sense::Ge => rhs - lhs,
        Sense::Eq => (lhs - rhs).abs(),
    }
}

/// Scans every constraint once and returns a most violated one (the first among ties).
pub fn separation_pass(system: &FacetSystem, x: &[Rational]) -> Result<Separation> {
    let width = system.dimension();
    if x.len() != width {
        return Err(MatroidError::DimensionMismatch {
            expected: width,
            found: x.len(),
        });
    }
    let mut best: Option<Violation> = None;
    let mut evaluated = 0;
    for c in system.constraints() {
        evaluated += 1;
        let amount = violation(c, x);
        if amount.is_positive() && best.as_ref().is_none_or(|b| amount > b.amount) {
            best = Some(Violation {
                constraint: c.clone(),
                amount,
            });
        }
    }
    Ok(Separation {
        violated: best,
        evaluated,
    })
}

/// A most violated constraint, or `None` when `x` satisfies the whole system.
pub fn separate(system: &FacetSystem, x: &[Rational]) -> Result<Option<Violation>> {
    separation_pass(system, x).map(|s| s.violated)
}
