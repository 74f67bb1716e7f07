//! Separators, components, Tutte 3-connectivity and parallel/series classes.
//!
//! All searches are exhaustive over subsets.

use crate::error::{MatroidError, Result};
use crate::matroid::Matroid;
use crate::set::ElementSet;

/// True when no `∅ ⊊ X ⊊ S` splits `S` additively under `rank`. Only submasks holding the
/// lowest element of `S` are visited, since `X` and `S \ X` are interchangeable.
pub(crate) fn connected_within(rank: impl Fn(ElementSet) -> usize, s: ElementSet) -> bool {
    let Some(low) = s.first() else {
        return true;
    };
    let rest = s.without(low);
    let total = rank(s);
    rest.subsets()
        .map(|x| x.with(low))
        .filter(|&x| x != s)
        .all(|x| rank(x) + rank(s.difference(x)) != total)
}

impl Matroid {
    /// `X` is a separator when `r(X) + r(E \ X) = r(E)`.
    pub fn is_separator(&self, x: ElementSet) -> bool {
        let n = self.len();
        self.rank_of(x) + self.rank_of(x.complement(n)) == self.rank_value()
    }

    pub fn is_connected(&self) -> bool {
        connected_within(|x| self.rank_of(x), self.full())
    }

    /// Whether `M | X` is connected.
    pub fn is_connected_on(&self, x: ElementSet) -> bool {
        connected_within(|y| self.rank_of(y), x)
    }

    /// Whether `M* | X` is connected, using `r*` directly.
    pub fn is_coconnected_on(&self, x: ElementSet) -> bool {
        connected_within(|y| self.corank_of(y), x)
    }

    /// The connected components: the finest partition of `E` into separators, ordered by
    /// smallest element. The component of `e` is the intersection of every separator
    /// containing `e`.
    pub fn components(&self) -> Vec<ElementSet> {
        let full = self.full();
        let mut meet = vec![full; self.len()];
        for x in full.subsets().filter(|&x| self.is_separator(x)) {
            for e in x.iter() {
                meet[e] = meet[e].intersection(x);
            }
        }
        let mut out: Vec<ElementSet> = Vec::new();
        for (e, cell) in meet.into_iter().enumerate() {
            if cell.first() == Some(e) {
                out.push(cell);
            }
        }
        out
    }

    /// Tutte 3-connectivity: connected, and no partition `(X, E \ X)` with both sides of
    /// size at least 2 has `r(X) + r(E \ X) ≤ r(E) + 1`. Ground sets with fewer than four
    /// elements admit no such partition, so they are 3-connected exactly when connected.
    pub fn is_3_connected(&self) -> bool {
        if !self.is_connected() {
            return false;
        }
        let n = self.len();
        let full = self.full();
        let limit = self.rank_value() + 1;
        full.subsets().all(|x| {
            let y = x.complement(n);
            x.len() < 2 || y.len() < 2 || self.rank_of(x) + self.rank_of(y) > limit
        })
    }

    /// Partition of `E` into parallel classes `cl({e})`, ordered by smallest element.
    pub fn parallel_classes(&self) -> Result<Vec<ElementSet>> {
        if let Some(e) = self.loops().first() {
            return Err(MatroidError::LoopPresent(
                self.ground().label(e).to_string(),
            ));
        }
        Ok(classes(self.len(), |e, f| {
            self.rank_of(ElementSet::from_indices([e, f])) == 1
        }))
    }

    /// Partition of `E` into series (coparallel) classes: parallel classes of `M*`.
    pub fn coparallel_classes(&self) -> Result<Vec<ElementSet>> {
        if let Some(e) = self.coloops().first() {
            return Err(MatroidError::ColoopPresent(
                self.ground().label(e).to_string(),
            ));
        }
        Ok(classes(self.len(), |e, f| {
            self.corank_of(ElementSet::from_indices([e, f])) == 1
        }))
    }

    /// No parallel pairs and no loops.
    pub fn is_simple(&self) -> bool {
        self.parallel_classes()
            .map(|p| p.len() == self.len())
            .unwrap_or(false)
    }

    pub fn is_cosimple(&self) -> bool {
        self.coparallel_classes()
            .map(|s| s.len() == self.len())
            .unwrap_or(false)
    }
}

fn classes(n: usize, related: impl Fn(usize, usize) -> bool) -> Vec<ElementSet> {
    let mut seen = ElementSet::EMPTY;
    let mut out = Vec::new();
    for e in 0..n {
        if seen.contains(e) {
            continue;
        }
        let class: ElementSet = std::iter::once(e)
            .chain((e + 1..n).filter(|&f| related(e, f)))
            .collect();
        seen = seen.union(class);
        out.push(class);
    }
    out
}
