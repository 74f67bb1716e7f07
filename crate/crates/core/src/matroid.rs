//! Matroids given by an explicit basis family.

use std::collections::HashSet;
use std::sync::OnceLock;

use crate::error::{MatroidError, Result};
use crate::set::{ElementSet, GroundSet};

/// Above this many elements ranks are recomputed from the basis list on every query
/// instead of being tabulated for all `2^n` subsets.
const RANK_TABLE_LIMIT: usize = 20;

/// A matroid stored as its full list of bases.
///
/// Immutable after construction. The rank of every subset is derived from the bases as
/// `max |B ∩ X|`; for ground sets up to 20 elements those values are tabulated on first
/// use.
#[derive(Clone, Debug)]
pub struct Matroid {
    ground: GroundSet,
    bases: Vec<ElementSet>,
    lookup: HashSet<ElementSet>,
    rank: usize,
    table: OnceLock<Option<Vec<u8>>>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.bases == other.bases
    }
}

impl Eq for Matroid {}

/// `r(X)` together with an independent subset of `X` attaining it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankQuery {
    pub value: usize,
    pub witness: ElementSet,
}

impl Matroid {
    /// Builds a matroid from its bases. Duplicate bases are merged. With `validate` set,
    /// the basis exchange axiom is checked for every ordered pair of bases.
    pub fn new<I>(ground: GroundSet, bases: I, validate: bool) -> Result<Self>
    where
        I: IntoIterator<Item = ElementSet>,
    {
        let mut list: Vec<ElementSet> = bases.into_iter().collect();
        let first = *list.first().ok_or(MatroidError::EmptyBasisFamily)?;
        let rank = first.len();
        for &b in &list {
            ground.check(b)?;
            if b.len() != rank {
                return Err(MatroidError::UnequalBasisSizes {
                    expected: rank,
                    found: b.len(),
                });
            }
        }
        list.sort_by_key(|b| b.canonical_key());
        list.dedup();
        let lookup: HashSet<ElementSet> = list.iter().copied().collect();
        let m = Matroid {
            ground,
            bases: list,
            lookup,
            rank,
            table: OnceLock::new(),
        };
        if validate {
            m.check_exchange()?;
        }
        Ok(m)
    }

    /// Builds a matroid whose bases are every `rank`-subset except `nonbases`.
    pub fn from_nonbases<I>(
        ground: GroundSet,
        rank: usize,
        nonbases: I,
        validate: bool,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = ElementSet>,
    {
        use itertools::Itertools;
        let n = ground.len();
        if rank > n {
            return Err(MatroidError::BadParameters(format!(
                "rank {rank} exceeds {n} elements"
            )));
        }
        let excluded: HashSet<ElementSet> = nonbases
            .into_iter()
            .map(|s| {
                ground.check(s)?;
                if s.len() != rank {
                    return Err(MatroidError::UnequalBasisSizes {
                        expected: rank,
                        found: s.len(),
                    });
                }
                Ok(s)
            })
            .collect::<Result<_>>()?;
        let bases = (0..n)
            .combinations(rank)
            .map(ElementSet::from_indices)
            .filter(|b| !excluded.contains(b));
        Self::new(ground, bases, validate)
    }

    fn check_exchange(&self) -> Result<()> {
        for &b1 in &self.bases {
            for &b2 in &self.bases {
                if b1 == b2 {
                    continue;
                }
                for e in b1.difference(b2).iter() {
                    let ok = b2
                        .difference(b1)
                        .iter()
                        .any(|f| self.lookup.contains(&b1.without(e).with(f)));
                    if !ok {
                        return Err(MatroidError::ExchangeAxiomViolated {
                            b1: self.ground.names(b1),
                            b2: self.ground.names(b2),
                            element: self.ground.label(e).to_string(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn full(&self) -> ElementSet {
        self.ground.full()
    }

    pub fn bases(&self) -> &[ElementSet] {
        &self.bases
    }

    pub fn is_basis(&self, set: ElementSet) -> bool {
        self.lookup.contains(&set)
    }

    /// `r(E)`.
    pub fn rank_value(&self) -> usize {
        self.rank
    }

    fn table(&self) -> Option<&[u8]> {
        self.table
            .get_or_init(|| {
                let n = self.len();
                (n <= RANK_TABLE_LIMIT).then(|| {
                    (0u32..1 << n)
                        .map(|x| self.rank_direct(ElementSet::from_bits(x)) as u8)
                        .collect()
                })
            })
            .as_deref()
    }

    fn rank_direct(&self, x: ElementSet) -> usize {
        self.bases
            .iter()
            .map(|b| b.intersection(x).len())
            .max()
            .unwrap_or(0)
    }

    /// `r(X)` for a subset already known to lie in the ground set.
    pub fn rank_of(&self, x: ElementSet) -> usize {
        match self.table() {
            Some(t) => t[x.bits() as usize] as usize,
            None => self.rank_direct(x),
        }
    }

    /// `r*(X) = |X| - r(E) + r(E \ X)`.
    pub fn corank_of(&self, x: ElementSet) -> usize {
        x.len() + self.rank_of(x.complement(self.len())) - self.rank
    }

    pub fn rank(&self, x: ElementSet) -> Result<RankQuery> {
        self.ground.check(x)?;
        let best = self
            .bases
            .iter()
            .max_by_key(|b| {
                (
                    b.intersection(x).len(),
                    std::cmp::Reverse(b.canonical_key()),
                )
            })
            .expect("basis family is nonempty");
        let witness = best.intersection(x);
        Ok(RankQuery {
            value: witness.len(),
            witness,
        })
    }

    pub fn corank(&self, x: ElementSet) -> Result<usize> {
        self.ground.check(x)?;
        Ok(self.corank_of(x))
    }

    pub fn is_independent(&self, x: ElementSet) -> bool {
        self.rank_of(x) == x.len()
    }

    /// Elements contained in no basis.
    pub fn loops(&self) -> ElementSet {
        let covered = self
            .bases
            .iter()
            .fold(ElementSet::EMPTY, |a, &b| a.union(b));
        covered.complement(self.len())
    }

    /// Elements contained in every basis.
    pub fn coloops(&self) -> ElementSet {
        self.bases
            .iter()
            .fold(self.full(), |a, &b| a.intersection(b))
    }

    /// The dual matroid, whose bases are the complements of the bases of `self`.
    pub fn dual(&self) -> Matroid {
        let n = self.len();
        let bases = self.bases.iter().map(|b| b.complement(n));
        Matroid::new(self.ground.clone(), bases, false)
            .expect("complements of bases form a basis family")
    }

    /// `M | X`, relabelled onto the elements of `X` in ground-set order.
    pub fn restrict(&self, x: ElementSet) -> Result<Matroid> {
        self.ground.check(x)?;
        if x.is_empty() {
            return Err(MatroidError::EmptyGroundSet);
        }
        let r = self.rank_of(x);
        let ground = GroundSet::new(x.iter().map(|i| self.ground.label(i).to_string()))?;
        let bases = self
            .bases
            .iter()
            .map(|b| b.intersection(x))
            .filter(|b| b.len() == r)
            .map(|b| b.compress(x));
        Matroid::new(ground, bases, false)
    }

    /// `M / X = (M* | (E \ X))*`.
    pub fn contract(&self, x: ElementSet) -> Result<Matroid> {
        self.ground.check(x)?;
        Ok(self.dual().restrict(x.complement(self.len()))?.dual())
    }

    /// `M \ X = M | (E \ X)`.
    pub fn delete(&self, x: ElementSet) -> Result<Matroid> {
        self.ground.check(x)?;
        self.restrict(x.complement(self.len()))
    }

    /// `cl(X) = { e : r(X ∪ e) = r(X) }`.
    pub fn closure(&self, x: ElementSet) -> Result<ElementSet> {
        self.ground.check(x)?;
        let r = self.rank_of(x);
        Ok((0..self.len())
            .filter(|&e| self.rank_of(x.with(e)) == r)
            .collect())
    }

    pub fn is_closed(&self, x: ElementSet) -> Result<bool> {
        Ok(self.closure(x)? == x)
    }

    /// The same basis family over a new ground set of equal size, matched by position.
    pub fn relabelled(&self, ground: &GroundSet) -> Matroid {
        assert_eq!(ground.len(), self.len(), "relabelling must preserve size");
        Matroid {
            ground: ground.clone(),
            ..self.clone()
        }
    }

    /// Same bases, possibly listed under a different ground-set order: compares basis
    /// families by label.
    pub fn same_as(&self, other: &Matroid) -> bool {
        if self.len() != other.len() || self.bases.len() != other.bases.len() {
            return false;
        }
        let relabel: Option<Vec<usize>> = self
            .ground
            .labels()
            .iter()
            .map(|l| other.ground.position(l))
            .collect();
        let Some(relabel) = relabel else {
            return false;
        };
        self.bases
            .iter()
            .all(|b| other.is_basis(b.iter().map(|i| relabel[i]).collect()))
    }
}
