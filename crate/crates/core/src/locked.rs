//! Locked subsets, the locked structure, and the oracles built on them.
//!
//! `L` is locked when `M|L` and `M*|(E \ L)` are connected and
//! `min(r(L), r*(E \ L)) ≥ 2`. For a disconnected matroid the locked subsets are those
//! of its components, each taken relative to its own component.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::connectivity::connected_within;
use crate::error::{MatroidError, Result};
use crate::matroid::Matroid;
use crate::set::{subsets_by_size, ElementSet};

/// Parallel classes, series classes, locked subsets and the rank restricted to them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LockedStructure {
    pub parallel: Vec<ElementSet>,
    pub coparallel: Vec<ElementSet>,
    /// Ordered by size, then lexicographically.
    pub locked: Vec<ElementSet>,
    /// Rank of every member of the three families, of `∅` and of `E`.
    pub rho: BTreeMap<ElementSet, usize>,
}

impl LockedStructure {
    pub fn locked_number(&self) -> usize {
        self.locked.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KLockedVerdict {
    /// More than `|E|^k` locked subsets exist.
    No,
    Structure(LockedStructure),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LockedNumbers {
    pub ell: usize,
    pub rank: usize,
    pub parallel_count: usize,
    pub coparallel_count: usize,
}

/// Literal test of the four locked conditions against the whole ground set.
pub fn is_locked(m: &Matroid, l: ElementSet) -> Result<bool> {
    m.ground().check(l)?;
    let n = m.len();
    if l.is_empty() || l == m.full() {
        return Err(MatroidError::NotProperSubset);
    }
    let rest = l.complement(n);
    Ok(m.rank_of(l) >= 2
        && m.corank_of(rest) >= 2
        && m.is_connected_on(l)
        && m.is_coconnected_on(rest))
}

/// Locked test for `l` inside the component `c`, with the dual taken of `M|C`.
fn locked_in_component(m: &Matroid, c: ElementSet, l: ElementSet) -> bool {
    if l.is_empty() || l == c || !l.is_subset(c) {
        return false;
    }
    let rc = m.rank_of(c);
    let corank_c = |z: ElementSet| z.len() + m.rank_of(c.difference(z)) - rc;
    let rest = c.difference(l);
    m.rank_of(l) >= 2
        && corank_c(rest) >= 2
        && m.is_connected_on(l)
        && connected_within(corank_c, rest)
}

/// All locked subsets, scanning subsets by size then lexicographically. With a cap the
/// scan stops as soon as `cap + 1` locked subsets have been found.
pub fn enumerate_locked(m: &Matroid, cap: Option<usize>) -> Vec<ElementSet> {
    let components = m.components();
    let mut component_of = vec![ElementSet::EMPTY; m.len()];
    for &c in &components {
        for e in c.iter() {
            component_of[e] = c;
        }
    }
    let mut found = Vec::new();
    for l in subsets_by_size(m.len()) {
        let Some(first) = l.first() else {
            continue;
        };
        if locked_in_component(m, component_of[first], l) {
            found.push(l);
            if cap.is_some_and(|c| found.len() > c) {
                break;
            }
        }
    }
    found
}

/// Union of the locked subsets of each component, each computed on the restriction to
/// that component. Agrees with [`enumerate_locked`]; kept as an independent route.
pub fn enumerate_locked_by_components(m: &Matroid) -> Vec<ElementSet> {
    let components = m.components();
    if components.len() == 1 {
        return enumerate_locked(m, None);
    }
    let mut out: Vec<ElementSet> = components
        .iter()
        .flat_map(|&c| {
            let part = m.restrict(c).expect("component is a nonempty subset");
            enumerate_locked(&part, None)
                .into_iter()
                .map(move |l| l.expand(c))
        })
        .collect();
    out.sort_by_key(|l| l.canonical_key());
    out
}

fn assemble(m: &Matroid, locked: Vec<ElementSet>) -> Result<LockedStructure> {
    let parallel = m.parallel_classes()?;
    let coparallel = m.coparallel_classes()?;
    let rho = parallel
        .iter()
        .chain(&coparallel)
        .chain(&locked)
        .copied()
        .chain([ElementSet::EMPTY, m.full()])
        .map(|x| (x, m.rank_of(x)))
        .collect();
    Ok(LockedStructure {
        parallel,
        coparallel,
        locked,
        rho,
    })
}

/// The locked structure. Requires a matroid without loops or coloops.
pub fn locked_structure(m: &Matroid) -> Result<LockedStructure> {
    m.parallel_classes()?;
    m.coparallel_classes()?;
    assemble(m, enumerate_locked(m, None))
}

/// `|E|^k`, saturating.
pub fn k_threshold(n: usize, k: u32) -> usize {
    n.checked_pow(k).unwrap_or(usize::MAX)
}

/// Answers `No` when there are more than `|E|^k` locked subsets, otherwise returns the
/// locked structure.
pub fn k_locked_oracle(m: &Matroid, k: u32) -> Result<KLockedVerdict> {
    m.parallel_classes()?;
    m.coparallel_classes()?;
    let threshold = k_threshold(m.len(), k);
    let locked = enumerate_locked(m, Some(threshold));
    if locked.len() > threshold {
        return Ok(KLockedVerdict::No);
    }
    Ok(KLockedVerdict::Structure(assemble(m, locked)?))
}

/// `ℓ(M)`, `r(M)`, `|P(M)|` and `|S(M)|`.
pub fn locked_number_oracle(m: &Matroid) -> Result<LockedNumbers> {
    let parallel_count = m.parallel_classes()?.len();
    let coparallel_count = m.coparallel_classes()?.len();
    Ok(LockedNumbers {
        ell: enumerate_locked(m, None).len(),
        rank: m.rank_value(),
        parallel_count,
        coparallel_count,
    })
}
