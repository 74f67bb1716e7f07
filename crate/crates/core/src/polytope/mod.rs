//! Facet systems of the bases polytope `P(M)` and independence polytope `Q(M)`.
//!
//! Facets are identified by their tight sets: the vertices at which an inequality holds
//! with equality. Two inequalities that differ by a multiple of `x(E) = r(E)` have the
//! same tight set on `P(M)` and are the same facet.

mod affine;
mod certify;
mod separate;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{MatroidError, Result};
use crate::locked::enumerate_locked;
use crate::matroid::Matroid;
use crate::set::{subsets_by_size, ElementSet, GroundSet};
use crate::Rational;

pub use affine::{integer_rank, polytope_dimension};
pub use certify::{
    certify, certify_independence, oracle_facets_bases, oracle_facets_independence,
    CertificationReport, IndependenceCheck, LemmaCase, LemmaKind, OracleFacet,
};
pub use separate::{separate, separation_pass, Separation, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sense {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "=")]
    Eq,
}

impl fmt::Display for Sense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sense::Le => "≤",
            Sense::Ge => "≥",
            Sense::Eq => "=",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstraintOrigin {
    /// `x(e) ≥ 0`
    Nonnegativity,
    /// `x(P) ≤ 1` for a parallel class `P`
    ParallelUpper,
    /// `x(S) ≥ |S| - 1` for a series class `S`
    CoparallelLower,
    /// `x(L) ≤ r(L)` for a locked subset `L`
    LockedUpper,
    /// `x(A) ≤ r(A)` for an arbitrary subset
    RankUpper,
    /// `x(E) = r(E)`
    RankEquality,
}

impl ConstraintOrigin {
    pub fn tag(self) -> &'static str {
        match self {
            ConstraintOrigin::Nonnegativity => "nonnegativity",
            ConstraintOrigin::ParallelUpper => "parallel",
            ConstraintOrigin::CoparallelLower => "coparallel",
            ConstraintOrigin::LockedUpper => "locked",
            ConstraintOrigin::RankUpper => "rank",
            ConstraintOrigin::RankEquality => "equality",
        }
    }
}

/// `coeffs · x (sense) rhs` over the ground set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearConstraint {
    pub coeffs: Vec<i64>,
    pub sense: Sense,
    pub rhs: i64,
    pub origin: ConstraintOrigin,
}

impl LinearConstraint {
    /// `x(set) (sense) rhs` over `n` elements.
    pub fn sum(
        n: usize,
        set: ElementSet,
        sense: Sense,
        rhs: i64,
        origin: ConstraintOrigin,
    ) -> Self {
        let coeffs = (0..n).map(|i| i64::from(set.contains(i))).collect();
        Self {
            coeffs,
            sense,
            rhs,
            origin,
        }
    }

    pub fn support(&self) -> ElementSet {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Left-hand side at the incidence vector of `set`.
    pub fn lhs_at(&self, set: ElementSet) -> i64 {
        set.iter().map(|i| self.coeffs[i]).sum()
    }

    pub fn lhs_rational(&self, x: &[Rational]) -> Rational {
        self.coeffs
            .iter()
            .zip(x)
            .filter(|(&c, _)| c != 0)
            .map(|(&c, v)| Rational::from_integer(c.into()) * v)
            .sum()
    }

    pub fn holds_at(&self, set: ElementSet) -> bool {
        let lhs = self.lhs_at(set);
        match self.sense {
            Sense::Le => lhs <= self.rhs,
            Sense::Ge => lhs >= self.rhs,
            Sense::Eq => lhs == self.rhs,
        }
    }

    pub fn tight_at(&self, set: ElementSet) -> bool {
        self.lhs_at(set) == self.rhs
    }

    /// Canonical text form, e.g. `x(ab,ac,bc) ≤ 2`. Elements appear in ground-set order
    /// and unit coefficients are omitted.
    pub fn render(&self, ground: &GroundSet) -> String {
        let unit = self.coeffs.iter().all(|&c| c == 0 || c == 1);
        let lhs = if unit {
            format!("x({})", ground.names(self.support()).join(","))
        } else {
            let terms: Vec<String> = self
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| match c {
                    1 => format!("x({})", ground.label(i)),
                    -1 => format!("-x({})", ground.label(i)),
                    c => format!("{c}x({})", ground.label(i)),
                })
                .collect();
            terms.join(" + ")
        };
        format!("{lhs} {} {}", self.sense, self.rhs)
    }
}

/// A set of inequalities with an optional defining equality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetSystem {
    pub equality: Option<LinearConstraint>,
    pub facets: Vec<LinearConstraint>,
    /// Constraints dropped because their support is all of `E`, where they coincide
    /// with the equality.
    pub collapsed: Vec<LinearConstraint>,
}

impl FacetSystem {
    pub fn dimension(&self) -> usize {
        self.facets
            .first()
            .or(self.equality.as_ref())
            .map_or(0, |c| c.coeffs.len())
    }

    pub fn count(&self, origin: ConstraintOrigin) -> usize {
        self.facets.iter().filter(|c| c.origin == origin).count()
    }

    /// Every constraint, equality first.
    pub fn constraints(&self) -> impl Iterator<Item = &LinearConstraint> {
        self.equality.iter().chain(&self.facets)
    }

    pub fn contains_vertex(&self, set: ElementSet) -> bool {
        self.constraints().all(|c| c.holds_at(set))
    }
}

/// Sorted indices of the vertices at which a constraint is tight.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TightSet(pub Vec<usize>);

impl TightSet {
    pub fn of(constraint: &LinearConstraint, vertices: &[ElementSet]) -> Self {
        TightSet(
            vertices
                .iter()
                .enumerate()
                .filter(|(_, &v)| constraint.tight_at(v))
                .map(|(i, _)| i)
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// The predicted minimal description of `P(M)`: `x(E) = r(E)`, `x(P) ≤ 1` for parallel
/// classes, `x(S) ≥ |S| - 1` for series classes and `x(L) ≤ r(L)` for locked subsets.
///
/// A class equal to `E` gives a constraint identical to the equality; it is moved to
/// `collapsed`. When that leaves no facets at all (only `U(1,2)` among connected
/// matroids, a segment) the two endpoint facets `x(e) ≥ 0` are emitted instead.
pub fn predicted_facets_bases(m: &Matroid) -> Result<FacetSystem> {
    let n = m.len();
    if n < 2 {
        return Err(MatroidError::TooFewElements(2));
    }
    let parallel = m.parallel_classes()?;
    let coparallel = m.coparallel_classes()?;
    if !m.is_connected() {
        return Err(MatroidError::NotConnected);
    }
    let full = m.full();
    let r = m.rank_value() as i64;
    let equality = LinearConstraint::sum(n, full, Sense::Eq, r, ConstraintOrigin::RankEquality);

    let candidates = parallel
        .iter()
        .map(|&p| LinearConstraint::sum(n, p, Sense::Le, 1, ConstraintOrigin::ParallelUpper))
        .chain(coparallel.iter().map(|&s| {
            LinearConstraint::sum(
                n,
                s,
                Sense::Ge,
                s.len() as i64 - 1,
                ConstraintOrigin::CoparallelLower,
            )
        }))
        .chain(enumerate_locked(m, None).into_iter().map(|l| {
            LinearConstraint::sum(
                n,
                l,
                Sense::Le,
                m.rank_of(l) as i64,
                ConstraintOrigin::LockedUpper,
            )
        }));
    let (collapsed, mut facets): (Vec<_>, Vec<_>) = candidates.partition(|c| c.support() == full);
    if facets.is_empty() {
        facets = (0..n)
            .map(|e| {
                LinearConstraint::sum(
                    n,
                    ElementSet::singleton(e),
                    Sense::Ge,
                    0,
                    ConstraintOrigin::Nonnegativity,
                )
            })
            .collect();
    }
    Ok(FacetSystem {
        equality: Some(equality),
        facets,
        collapsed,
    })
}

/// The predicted minimal description of `Q(M)`: `x(e) ≥ 0` for every element and
/// `x(A) ≤ r(A)` for every closed, connected, nonempty `A`.
pub fn predicted_facets_independence(m: &Matroid) -> Result<FacetSystem> {
    let n = m.len();
    if let Some(e) = m.loops().first() {
        return Err(MatroidError::LoopPresent(m.ground().label(e).to_string()));
    }
    let mut facets: Vec<LinearConstraint> = (0..n)
        .map(|e| {
            LinearConstraint::sum(
                n,
                ElementSet::singleton(e),
                Sense::Ge,
                0,
                ConstraintOrigin::Nonnegativity,
            )
        })
        .collect();
    for a in subsets_by_size(n).filter(|a| !a.is_empty()) {
        if m.closure(a)? == a && m.is_connected_on(a) {
            facets.push(LinearConstraint::sum(
                n,
                a,
                Sense::Le,
                m.rank_of(a) as i64,
                ConstraintOrigin::RankUpper,
            ));
        }
    }
    Ok(FacetSystem {
        equality: None,
        facets,
        collapsed: Vec::new(),
    })
}
