//! Brute-force facet oracles and certification of the predicted facet systems.
//!
//! The oracle starts from the complete but redundant description of the polytope
//! (`x(e) ≥ 0` and `x(A) ≤ r(A)` for every nonempty `A`) and keeps the candidates whose
//! tight vertex set has affine dimension one less than the polytope.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::affine::polytope_dimension;
use super::{
    predicted_facets_bases, predicted_facets_independence, ConstraintOrigin, LinearConstraint,
    Sense, TightSet,
};
use crate::error::{MatroidError, Result};
use crate::locked::is_locked;
use crate::matroid::Matroid;
use crate::set::{subsets_by_size, ElementSet};

/// A facet found by the oracle, with every candidate inequality that defines it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleFacet {
    pub tight: TightSet,
    pub witnesses: Vec<LinearConstraint>,
}

fn candidates(m: &Matroid) -> impl Iterator<Item = LinearConstraint> + '_ {
    let n = m.len();
    let nonneg = (0..n).map(move |e| {
        LinearConstraint::sum(
            n,
            ElementSet::singleton(e),
            Sense::Ge,
            0,
            ConstraintOrigin::Nonnegativity,
        )
    });
    let ranks = subsets_by_size(n).filter(|a| !a.is_empty()).map(move |a| {
        LinearConstraint::sum(
            n,
            a,
            Sense::Le,
            m.rank_of(a) as i64,
            ConstraintOrigin::RankUpper,
        )
    });
    nonneg.chain(ranks)
}

fn facets_over(m: &Matroid, vertices: &[ElementSet]) -> Vec<OracleFacet> {
    let n = m.len();
    let dim = polytope_dimension(vertices, n);
    let mut dims: HashMap<TightSet, usize> = HashMap::new();
    let mut found: BTreeMap<TightSet, Vec<LinearConstraint>> = BTreeMap::new();
    for c in candidates(m) {
        debug_assert!(vertices.iter().all(|&v| c.holds_at(v)));
        let tight = TightSet::of(&c, vertices);
        let d = *dims.entry(tight.clone()).or_insert_with(|| {
            let pts: Vec<ElementSet> = tight.0.iter().map(|&i| vertices[i]).collect();
            if pts.is_empty() {
                usize::MAX
            } else {
                polytope_dimension(&pts, n)
            }
        });
        if d + 1 == dim {
            found.entry(tight).or_default().push(c);
        }
    }
    found
        .into_iter()
        .map(|(tight, witnesses)| OracleFacet { tight, witnesses })
        .collect()
}

/// Facets of `P(M)`, each identified by its set of tight bases (indices into
/// `m.bases()`).
pub fn oracle_facets_bases(m: &Matroid) -> Result<Vec<OracleFacet>> {
    if !m.is_connected() {
        return Err(MatroidError::NotConnected);
    }
    if m.bases().len() < 2 {
        return Err(MatroidError::DegeneratePolytope);
    }
    Ok(facets_over(m, m.bases()))
}

/// Every independent set, in increasing bitmask order.
pub fn independent_sets(m: &Matroid) -> Vec<ElementSet> {
    m.full()
        .subsets()
        .filter(|&x| m.is_independent(x))
        .collect()
}

/// Facets of `Q(M)`, identified by tight independent sets (indices into
/// [`independent_sets`]).
pub fn oracle_facets_independence(m: &Matroid) -> Result<Vec<OracleFacet>> {
    if let Some(e) = m.loops().first() {
        return Err(MatroidError::LoopPresent(m.ground().label(e).to_string()));
    }
    Ok(facets_over(m, &independent_sets(m)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaKind {
    /// `A` is locked.
    Locked,
    /// `A` is a parallel class, `x(A) ≤ 1`.
    ParallelClass,
    /// `x(A) ≤ r(A)` is the complement form of a nonnegativity or series-class facet.
    ComplementForm,
    /// None of the above.
    Unexplained,
}

/// Classification of one facet-defining `x(A) ≤ r(A)` with `A ≠ E`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaCase {
    pub set: ElementSet,
    pub kind: LemmaKind,
}

/// Outcome of comparing the predicted facets of `P(M)` with the oracle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificationReport {
    pub elements: usize,
    pub rank: usize,
    pub dimension: usize,
    pub predicted_count: usize,
    pub oracle_count: usize,
    pub matched: usize,
    /// Oracle facets with no predicted constraint, each with one defining inequality.
    pub missing: Vec<LinearConstraint>,
    /// Predicted constraints that are not facets.
    pub extra: Vec<LinearConstraint>,
    /// Predicted constraints violated by some basis.
    pub invalid: Vec<LinearConstraint>,
    /// Predicted constraints sharing a tight set with an earlier one.
    pub duplicates: Vec<LinearConstraint>,
    pub lemma_cases: Vec<LemmaCase>,
    /// Facet-defining `x(A) ≤ r(A)` with `A` closed and connected but `M*|(E \ A)`
    /// disconnected.
    pub dual_disconnected: Vec<ElementSet>,
    pub collapsed: Vec<LinearConstraint>,
    pub passed: bool,
}

/// Checks the predicted facet system of `P(M)` against [`oracle_facets_bases`].
///
/// Returns [`MatroidError::CertificationFailed`] carrying the full report when the two
/// families differ or any predicted constraint is invalid or redundant.
pub fn certify(m: &Matroid) -> Result<CertificationReport> {
    let predicted = predicted_facets_bases(m)?;
    let oracle = oracle_facets_bases(m)?;
    let bases = m.bases();
    let n = m.len();
    let full = m.full();

    let mut invalid = Vec::new();
    if let Some(eq) = &predicted.equality {
        if !bases.iter().all(|&b| eq.tight_at(b)) {
            invalid.push(eq.clone());
        }
    }
    let mut predicted_tight: BTreeMap<TightSet, &LinearConstraint> = BTreeMap::new();
    let mut duplicates = Vec::new();
    for c in &predicted.facets {
        if !bases.iter().all(|&b| c.holds_at(b)) {
            invalid.push(c.clone());
            continue;
        }
        let tight = TightSet::of(c, bases);
        if predicted_tight.contains_key(&tight) {
            duplicates.push(c.clone());
        } else {
            predicted_tight.insert(tight, c);
        }
    }
    let oracle_tight: BTreeMap<&TightSet, &OracleFacet> =
        oracle.iter().map(|f| (&f.tight, f)).collect();

    let missing: Vec<LinearConstraint> = oracle
        .iter()
        .filter(|f| !predicted_tight.contains_key(&f.tight))
        .map(|f| f.witnesses[0].clone())
        .collect();
    let extra: Vec<LinearConstraint> = predicted_tight
        .iter()
        .filter(|(t, _)| !oracle_tight.contains_key(t))
        .map(|(_, c)| (*c).clone())
        .collect();
    let matched = predicted_tight.len() - extra.len();

    let parallel = m.parallel_classes()?;
    let mut lemma_cases = Vec::new();
    let mut dual_disconnected = Vec::new();
    for facet in &oracle {
        let partner = predicted_tight.get(&facet.tight).map(|c| c.origin);
        for w in facet
            .witnesses
            .iter()
            .filter(|w| w.origin == ConstraintOrigin::RankUpper)
        {
            let a = w.support();
            if a == full {
                continue;
            }
            let kind = if is_locked(m, a)? {
                LemmaKind::Locked
            } else if parallel.contains(&a) {
                LemmaKind::ParallelClass
            } else if matches!(
                partner,
                Some(ConstraintOrigin::Nonnegativity | ConstraintOrigin::CoparallelLower)
            ) {
                LemmaKind::ComplementForm
            } else {
                LemmaKind::Unexplained
            };
            lemma_cases.push(LemmaCase { set: a, kind });
            let rest = a.complement(n);
            if m.is_closed(a)? && m.is_connected_on(a) && !m.is_coconnected_on(rest) {
                dual_disconnected.push(a);
            }
        }
    }

    let passed = missing.is_empty()
        && extra.is_empty()
        && invalid.is_empty()
        && duplicates.is_empty()
        && dual_disconnected.is_empty()
        && lemma_cases.iter().all(|c| c.kind != LemmaKind::Unexplained);
    let report = CertificationReport {
        elements: n,
        rank: m.rank_value(),
        dimension: polytope_dimension(bases, n),
        predicted_count: predicted.facets.len(),
        oracle_count: oracle.len(),
        matched,
        missing,
        extra,
        invalid,
        duplicates,
        lemma_cases,
        dual_disconnected,
        collapsed: predicted.collapsed,
        passed,
    };
    if report.passed {
        Ok(report)
    } else {
        Err(MatroidError::CertificationFailed(Box::new(report)))
    }
}

/// Outcome of comparing the predicted facets of `Q(M)` with the oracle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependenceCheck {
    pub predicted_count: usize,
    pub oracle_count: usize,
    pub missing: Vec<LinearConstraint>,
    pub extra: Vec<LinearConstraint>,
    pub passed: bool,
}

pub fn certify_independence(m: &Matroid) -> Result<IndependenceCheck> {
    let predicted = predicted_facets_independence(m)?;
    let oracle = oracle_facets_independence(m)?;
    let vertices = independent_sets(m);
    let predicted_tight: BTreeMap<TightSet, &LinearConstraint> = predicted
        .facets
        .iter()
        .map(|c| (TightSet::of(c, &vertices), c))
        .collect();
    let missing: Vec<_> = oracle
        .iter()
        .filter(|f| !predicted_tight.contains_key(&f.tight))
        .map(|f| f.witnesses[0].clone())
        .collect();
    let oracle_keys: Vec<&TightSet> = oracle.iter().map(|f| &f.tight).collect();
    let extra: Vec<_> = predicted_tight
        .iter()
        .filter(|(t, _)| oracle_keys.binary_search(t).is_err())
        .map(|(_, c)| (*c).clone())
        .collect();
    let passed =
        missing.is_empty() && extra.is_empty() && predicted_tight.len() == predicted.facets.len();
    Ok(IndependenceCheck {
        predicted_count: predicted.facets.len(),
        oracle_count: oracle.len(),
        missing,
        extra,
        passed,
    })
}
