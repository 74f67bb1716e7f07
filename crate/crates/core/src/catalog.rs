//! Named matroids and the constructions used to build them.

use std::collections::HashMap;

use itertools::Itertools;
use petgraph::unionfind::UnionFind;

use crate::error::{MatroidError, Result};
use crate::matroid::Matroid;
use crate::set::{ElementSet, GroundSet};

/// A named matroid, with its locked number when that value is a published one.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub matroid: Matroid,
    pub expected_locked_number: Option<usize>,
}

/// Names returned by [`standard`], in order.
pub const STANDARD_NAMES: [&str; 8] = ["MK4", "W3", "Q6", "P6", "V8", "U_1_2", "U_2_4", "U_3_6"];

/// `U_{r,n}` on elements `1..=n`.
pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
    if n == 0 || r > n {
        return Err(MatroidError::BadParameters(format!(
            "U({r},{n}) needs 0 <= r <= n and n >= 1"
        )));
    }
    let bases = (0..n).combinations(r).map(ElementSet::from_indices);
    Matroid::new(GroundSet::numbered(n)?, bases, false)
}

/// Cycle matroid of a connected multigraph on `vertices` vertices. Edges are labelled
/// `u-v`, with `#k` appended to repeated edges; self-loops become matroid loops.
pub fn graphic(vertices: usize, edges: &[(usize, usize)]) -> Result<Matroid> {
    if vertices == 0 || edges.is_empty() {
        return Err(MatroidError::BadParameters(
            "graph needs vertices and edges".into(),
        ));
    }
    if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= vertices || v >= vertices) {
        return Err(MatroidError::BadParameters(format!(
            "edge {u}-{v} leaves the vertex range"
        )));
    }
    let mut seen: HashMap<String, usize> = HashMap::new();
    let labels: Vec<String> = edges
        .iter()
        .map(|&(u, v)| {
            let base = format!("{}-{}", u.min(v), u.max(v));
            let count = seen.entry(base.clone()).or_insert(0);
            *count += 1;
            if *count == 1 {
                base
            } else {
                format!("{base}#{count}")
            }
        })
        .collect();
    let trees: Vec<ElementSet> = (0..edges.len())
        .combinations(vertices - 1)
        .filter(|c| {
            let mut uf = UnionFind::<usize>::new(vertices);
            c.iter().all(|&i| uf.union(edges[i].0, edges[i].1))
        })
        .map(ElementSet::from_indices)
        .collect();
    if trees.is_empty() {
        return Err(MatroidError::DisconnectedGraph);
    }
    Matroid::new(GroundSet::new(labels)?, trees, false)
}

/// Whether `h` is a circuit that is also a hyperplane.
pub fn is_circuit_hyperplane(m: &Matroid, h: ElementSet) -> bool {
    let r = m.rank_value();
    h.len() == r
        && r >= 1
        && m.rank_of(h) == r - 1
        && h.iter().all(|e| m.is_independent(h.without(e)))
        && m.closure(h).map(|c| c == h).unwrap_or(false)
}

/// Relaxes the circuit-hyperplane `h` into a basis.
pub fn relax(m: &Matroid, h: ElementSet) -> Result<Matroid> {
    m.ground().check(h)?;
    if !is_circuit_hyperplane(m, h) {
        return Err(MatroidError::NotCircuitHyperplane(m.ground().names(h)));
    }
    let bases = m.bases().iter().copied().chain(std::iter::once(h));
    Matroid::new(m.ground().clone(), bases, true)
}

/// 2-sum along basepoints `p1` and `p2`. Elements are renamed `L.<label>` and
/// `R.<label>`.
pub fn two_sum(m1: &Matroid, p1: &str, m2: &Matroid, p2: &str) -> Result<Matroid> {
    let i1 = m1
        .ground()
        .position(p1)
        .ok_or_else(|| MatroidError::ForeignElement(p1.to_string()))?;
    let i2 = m2
        .ground()
        .position(p2)
        .ok_or_else(|| MatroidError::ForeignElement(p2.to_string()))?;
    if m1.len() < 3 || m2.len() < 3 {
        return Err(MatroidError::BadParameters(
            "2-sum summands need at least 3 elements".into(),
        ));
    }
    for (m, i, p) in [(m1, i1, p1), (m2, i2, p2)] {
        if m.loops().contains(i) || m.coloops().contains(i) {
            return Err(MatroidError::BasepointDegenerate(p.to_string()));
        }
    }
    let keep1 = m1.full().without(i1);
    let keep2 = m2.full().without(i2);
    let shift = keep1.len();
    let labels: Vec<String> = keep1
        .iter()
        .map(|i| format!("L.{}", m1.ground().label(i)))
        .chain(keep2.iter().map(|i| format!("R.{}", m2.ground().label(i))))
        .collect();
    let ground = GroundSet::new(labels).map_err(|e| match e {
        MatroidError::DuplicateLabel(l) => MatroidError::LabelCollision(l),
        other => other,
    })?;
    let mut bases = Vec::new();
    for &b1 in m1.bases() {
        for &b2 in m2.bases() {
            if b1.contains(i1) != b2.contains(i2) {
                let left = b1.intersection(keep1).compress(keep1);
                let right = b2.intersection(keep2).compress(keep2);
                bases.push(ElementSet::from_bits(left.bits() | right.bits() << shift));
            }
        }
    }
    Matroid::new(ground, bases, true)
}

/// The Vámos matroid `V8` on `a a' b b' c c' d d'`.
pub fn vamos() -> Matroid {
    let ground = GroundSet::new(["a", "a'", "b", "b'", "c", "c'", "d", "d'"]).unwrap();
    let nonbases = [
        [0, 1, 2, 3],
        [0, 1, 4, 5],
        [0, 1, 6, 7],
        [2, 3, 4, 5],
        [2, 3, 6, 7],
    ]
    .map(ElementSet::from_indices);
    Matroid::from_nonbases(ground, 4, nonbases, true).expect("Vámos bases are valid")
}

/// The triangles of `K4` over the edge labels `ab ac ad bc bd cd`.
pub const K4_TRIANGLES: [[usize; 3]; 4] = [[0, 1, 3], [0, 2, 4], [1, 2, 5], [3, 4, 5]];

/// `M(K4)`: all 3-subsets of the six edges except the four triangles.
pub fn mk4() -> Matroid {
    let ground = GroundSet::new(["ab", "ac", "ad", "bc", "bd", "cd"]).unwrap();
    Matroid::from_nonbases(ground, 3, K4_TRIANGLES.map(ElementSet::from_indices), true)
        .expect("M(K4) bases are valid")
}

/// `M(K4)` followed by repeated relaxation of the first remaining circuit-hyperplane:
/// `[M(K4), W3, Q6, P6, U(3,6)]`.
pub fn relaxation_chain() -> Vec<Matroid> {
    let mut chain = vec![mk4()];
    for _ in 0..4 {
        let last = chain.last().unwrap();
        let h = first_circuit_hyperplane(last).expect("chain member has a circuit-hyperplane");
        chain.push(relax(last, h).expect("relaxation of a circuit-hyperplane"));
    }
    chain
}

/// The first circuit-hyperplane in size-then-lexicographic order.
pub fn first_circuit_hyperplane(m: &Matroid) -> Option<ElementSet> {
    (0..m.len())
        .combinations(m.rank_value())
        .map(ElementSet::from_indices)
        .find(|&h| !m.is_basis(h) && is_circuit_hyperplane(m, h))
}

pub fn whirl3() -> Matroid {
    relaxation_chain().swap_remove(1)
}

pub fn q6() -> Matroid {
    relaxation_chain().swap_remove(2)
}

pub fn p6() -> Matroid {
    relaxation_chain().swap_remove(3)
}

/// Looks up `MK4`, `W3`, `Q6`, `P6`, `V8` or `U_<r>_<n>`.
pub fn get(name: &str) -> Result<CatalogEntry> {
    let (matroid, expected) = match name {
        "MK4" => (mk4(), 4),
        "W3" => (whirl3(), 3),
        "Q6" => (q6(), 2),
        "P6" => (p6(), 1),
        "V8" => (vamos(), 5),
        _ => {
            let (r, n) =
                parse_uniform(name).ok_or_else(|| MatroidError::UnknownName(name.to_string()))?;
            (uniform(r, n)?, 0)
        }
    };
    Ok(CatalogEntry {
        name: name.to_string(),
        matroid,
        expected_locked_number: Some(expected),
    })
}

fn parse_uniform(name: &str) -> Option<(usize, usize)> {
    let rest = name.strip_prefix("U_")?;
    let (r, n) = rest.split_once('_')?;
    Some((r.parse().ok()?, n.parse().ok()?))
}

/// The catalog instances listed in [`STANDARD_NAMES`].
pub fn standard() -> Vec<CatalogEntry> {
    STANDARD_NAMES
        .iter()
        .map(|n| get(n).expect("standard name"))
        .collect()
}
