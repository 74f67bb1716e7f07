//! Maximum-weight bases, and rank and independence answered through optimization.

use std::cmp::Ordering;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{MatroidError, Result};
use crate::matroid::Matroid;
use crate::set::ElementSet;
use crate::Rational;

/// Exact weight per element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFunction(Vec<Rational>);

impl WeightFunction {
    pub fn new(weights: Vec<Rational>) -> Self {
        WeightFunction(weights)
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(weights: I) -> Self {
        WeightFunction(
            weights
                .into_iter()
                .map(|w| Rational::from_integer(w.into()))
                .collect(),
        )
    }

    /// Characteristic vector of `x` over `n` elements.
    pub fn indicator(n: usize, x: ElementSet) -> Self {
        Self::from_integers((0..n).map(|i| i64::from(x.contains(i))))
    }

    /// Parses comma-separated weights such as `3,-1/2,0.25`.
    pub fn parse(text: &str) -> std::result::Result<Self, String> {
        text.split(',')
            .map(|w| parse_rational(w.trim()).ok_or_else(|| format!("bad weight {w:?}")))
            .collect::<std::result::Result<_, _>>()
            .map(WeightFunction)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.0[i]
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn total(&self, set: ElementSet) -> Rational {
        set.iter().map(|i| &self.0[i]).sum()
    }
}

/// Parses an integer, a fraction `p/q` or a decimal `a.b`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    if text.contains('/') {
        let q = Rational::from_str(text).ok()?;
        return Some(q);
    }
    match text.split_once('.') {
        None => BigInt::from_str(text).ok().map(Rational::from_integer),
        Some((int, frac)) => {
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            let negative = int.starts_with('-');
            let digits = format!("{}{frac}", int.trim_start_matches(['-', '+']));
            let numer = BigInt::from_str(&digits).ok()?;
            let denom = BigInt::from(10u32).pow(frac.len() as u32);
            let q = Rational::new(numer, denom);
            Some(if negative { -q } else { q })
        }
    }
}

/// Renders a rational as an integer or `p/q`.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyStep {
    pub element: usize,
    pub weight: Rational,
    pub accepted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimizationResult {
    pub basis: ElementSet,
    pub value: Rational,
    /// Greedy decisions in scan order; empty for the brute-force search.
    pub trace: Vec<GreedyStep>,
}

fn check_width(m: &Matroid, c: &WeightFunction) -> Result<()> {
    if c.len() != m.len() {
        return Err(MatroidError::DimensionMismatch {
            expected: m.len(),
            found: c.len(),
        });
    }
    Ok(())
}

/// Greedy scan by decreasing weight; at equal weight elements of `prefer` come first,
/// then lower indices.
fn greedy(m: &Matroid, c: &WeightFunction, prefer: ElementSet) -> OptimizationResult {
    let mut order: Vec<usize> = (0..m.len()).collect();
    order.sort_by(|&a, &b| {
        c.get(b)
            .cmp(c.get(a))
            .then_with(|| prefer.contains(b).cmp(&prefer.contains(a)))
            .then_with(|| a.cmp(&b))
    });
    let mut basis = ElementSet::EMPTY;
    let mut trace = Vec::with_capacity(order.len());
    for e in order {
        let accepted = m.is_independent(basis.with(e));
        if accepted {
            basis.insert(e);
        }
        trace.push(GreedyStep {
            element: e,
            weight: c.get(e).clone(),
            accepted,
        });
    }
    OptimizationResult {
        value: c.total(basis),
        basis,
        trace,
    }
}

/// Maximum-weight basis by the matroid greedy algorithm.
pub fn greedy_max_basis(m: &Matroid, c: &WeightFunction) -> Result<OptimizationResult> {
    check_width(m, c)?;
    Ok(greedy(m, c, ElementSet::EMPTY))
}

/// Maximum-weight basis by exhaustive search; ties go to the lexicographically
/// smallest basis.
pub fn brute_force_max_basis(m: &Matroid, c: &WeightFunction) -> Result<OptimizationResult> {
    check_width(m, c)?;
    let mut best: Option<(ElementSet, Rational)> = None;
    for &b in m.bases() {
        let v = c.total(b);
        if best
            .as_ref()
            .is_none_or(|(_, bv)| v.cmp(bv) == Ordering::Greater)
        {
            best = Some((b, v));
        }
    }
    let (basis, value) = best.expect("basis family is nonempty");
    Ok(OptimizationResult {
        basis,
        value,
        trace: Vec::new(),
    })
}

/// `r(X)` as the optimum of the greedy with weights `χ_X`.
pub fn rank_via_optimization(m: &Matroid, x: ElementSet) -> Result<usize> {
    m.ground().check(x)?;
    let result = greedy(m, &WeightFunction::indicator(m.len(), x), x);
    Ok(result
        .value
        .to_integer()
        .to_usize()
        .expect("rank fits in usize"))
}

/// `X` is independent when the greedy optimum for `χ_X` contains it.
pub fn independent_via_optimization(m: &Matroid, x: ElementSet) -> Result<bool> {
    m.ground().check(x)?;
    let result = greedy(m, &WeightFunction::indicator(m.len(), x), x);
    Ok(x.is_subset(result.basis))
}
