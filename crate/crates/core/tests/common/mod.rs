#![allow(dead_code)]

use itertools::Itertools;
use matlock_core::catalog::{self, graphic, two_sum, uniform};
use matlock_core::{ElementSet, Matroid};

/// `(r1, n1, r2, n2, bases, ell)` for `U(r1,n1) ⊕₂ U(r2,n2)` glued at the last element
/// of each summand, computed by the Python brute force in `tests/oracle/brute.py`.
pub const TWO_SUM_FIXTURES: [(usize, usize, usize, usize, usize, usize); 81] = [
    (1, 3, 1, 3, 4, 0),
    (1, 3, 2, 3, 5, 0),
    (1, 3, 1, 4, 5, 0),
    (1, 3, 2, 4, 9, 0),
    (1, 3, 3, 4, 7, 0),
    (1, 3, 1, 5, 6, 0),
    (1, 3, 2, 5, 14, 0),
    (1, 3, 3, 5, 16, 0),
    (1, 3, 4, 5, 9, 0),
    (2, 3, 1, 3, 5, 0),
    (2, 3, 2, 3, 4, 0),
    (2, 3, 1, 4, 7, 0),
    (2, 3, 2, 4, 9, 0),
    (2, 3, 3, 4, 5, 0),
    (2, 3, 1, 5, 9, 0),
    (2, 3, 2, 5, 16, 0),
    (2, 3, 3, 5, 14, 0),
    (2, 3, 4, 5, 6, 0),
    (1, 4, 1, 3, 5, 0),
    (1, 4, 2, 3, 7, 0),
    (1, 4, 1, 4, 6, 0),
    (1, 4, 2, 4, 12, 0),
    (1, 4, 3, 4, 10, 0),
    (1, 4, 1, 5, 7, 0),
    (1, 4, 2, 5, 18, 0),
    (1, 4, 3, 5, 22, 0),
    (1, 4, 4, 5, 13, 0),
    (2, 4, 1, 3, 9, 0),
    (2, 4, 2, 3, 9, 0),
    (2, 4, 1, 4, 12, 0),
    (2, 4, 2, 4, 18, 2),
    (2, 4, 3, 4, 12, 0),
    (2, 4, 1, 5, 15, 0),
    (2, 4, 2, 5, 30, 2),
    (2, 4, 3, 5, 30, 2),
    (2, 4, 4, 5, 15, 0),
    (3, 4, 1, 3, 7, 0),
    (3, 4, 2, 3, 5, 0),
    (3, 4, 1, 4, 10, 0),
    (3, 4, 2, 4, 12, 0),
    (3, 4, 3, 4, 6, 0),
    (3, 4, 1, 5, 13, 0),
    (3, 4, 2, 5, 22, 0),
    (3, 4, 3, 5, 18, 0),
    (3, 4, 4, 5, 7, 0),
    (1, 5, 1, 3, 6, 0),
    (1, 5, 2, 3, 9, 0),
    (1, 5, 1, 4, 7, 0),
    (1, 5, 2, 4, 15, 0),
    (1, 5, 3, 4, 13, 0),
    (1, 5, 1, 5, 8, 0),
    (1, 5, 2, 5, 22, 0),
    (1, 5, 3, 5, 28, 0),
    (1, 5, 4, 5, 17, 0),
    (2, 5, 1, 3, 14, 0),
    (2, 5, 2, 3, 16, 0),
    (2, 5, 1, 4, 18, 0),
    (2, 5, 2, 4, 30, 2),
    (2, 5, 3, 4, 22, 0),
    (2, 5, 1, 5, 22, 0),
    (2, 5, 2, 5, 48, 2),
    (2, 5, 3, 5, 52, 2),
    (2, 5, 4, 5, 28, 0),
    (3, 5, 1, 3, 16, 0),
    (3, 5, 2, 3, 14, 0),
    (3, 5, 1, 4, 22, 0),
    (3, 5, 2, 4, 30, 2),
    (3, 5, 3, 4, 18, 0),
    (3, 5, 1, 5, 28, 0),
    (3, 5, 2, 5, 52, 2),
    (3, 5, 3, 5, 48, 2),
    (3, 5, 4, 5, 22, 0),
    (4, 5, 1, 3, 9, 0),
    (4, 5, 2, 3, 6, 0),
    (4, 5, 1, 4, 13, 0),
    (4, 5, 2, 4, 15, 0),
    (4, 5, 3, 4, 7, 0),
    (4, 5, 1, 5, 17, 0),
    (4, 5, 2, 5, 28, 0),
    (4, 5, 3, 5, 22, 0),
    (4, 5, 4, 5, 8, 0),
];

pub fn uniform_two_sum(r1: usize, n1: usize, r2: usize, n2: usize) -> Matroid {
    two_sum(
        &uniform(r1, n1).unwrap(),
        &n1.to_string(),
        &uniform(r2, n2).unwrap(),
        &n2.to_string(),
    )
    .unwrap()
}

/// Catalog matroids with at most `max` elements, with names.
pub fn catalog_pool() -> Vec<(String, Matroid)> {
    catalog::standard()
        .into_iter()
        .map(|e| (e.name, e.matroid))
        .collect()
}

pub fn uniform_pool(max_n: usize) -> Vec<(String, Matroid)> {
    (1..=max_n)
        .flat_map(|n| (0..=n).map(move |r| (format!("U_{r}_{n}"), uniform(r, n).unwrap())))
        .collect()
}

/// Every connected simple graph on `v` labelled vertices.
pub fn connected_graphs(v: usize) -> Vec<(String, Matroid)> {
    let all: Vec<(usize, usize)> = (0..v).tuple_combinations().collect();
    let mut out = Vec::new();
    for mask in 1u32..1 << all.len() {
        let edges: Vec<(usize, usize)> =
            ElementSet::from_bits(mask).iter().map(|i| all[i]).collect();
        if let Ok(m) = graphic(v, &edges) {
            out.push((format!("G{v}:{mask:b}"), m));
        }
    }
    out
}

/// Graphs on five vertices and a few multigraphs.
pub fn named_graphs() -> Vec<(String, Matroid)> {
    let k5: Vec<(usize, usize)> = (0..5).tuple_combinations().collect();
    let graphs: Vec<(&str, usize, Vec<(usize, usize)>)> = vec![
        ("K5", 5, k5.clone()),
        ("K5-e", 5, k5[1..].to_vec()),
        ("C5", 5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
        (
            "W4",
            5,
            vec![
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (4, 0),
                (4, 1),
                (4, 2),
                (4, 3),
            ],
        ),
        (
            "K23",
            5,
            vec![(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
        ),
        (
            "house",
            5,
            vec![(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 4)],
        ),
        (
            "bowtie",
            5,
            vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)],
        ),
        (
            "theta",
            5,
            vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (0, 4)],
        ),
        ("doubled-triangle", 3, vec![(0, 1), (0, 1), (1, 2), (2, 0)]),
        (
            "doubled-C4",
            4,
            vec![(0, 1), (0, 1), (1, 2), (2, 3), (3, 0)],
        ),
        ("tripled-edge", 2, vec![(0, 1), (0, 1), (0, 1)]),
    ];
    graphs
        .into_iter()
        .map(|(name, v, e)| (name.to_string(), graphic(v, &e).unwrap()))
        .collect()
}

pub fn chain_pool() -> Vec<(String, Matroid)> {
    ["MK4", "W3", "Q6", "P6", "U36"]
        .iter()
        .zip(catalog::relaxation_chain())
        .map(|(n, m)| (format!("chain:{n}"), m))
        .collect()
}

pub fn two_sum_pool() -> Vec<(String, Matroid)> {
    TWO_SUM_FIXTURES
        .iter()
        .step_by(4)
        .map(|&(r1, n1, r2, n2, _, _)| {
            (
                format!("U_{r1}_{n1}+U_{r2}_{n2}"),
                uniform_two_sum(r1, n1, r2, n2),
            )
        })
        .collect()
}

/// The mixed pool used for uniformity agreement.
pub fn uniformity_pool() -> Vec<(String, Matroid)> {
    let mut pool = catalog_pool();
    pool.extend(uniform_pool(8));
    pool.extend(connected_graphs(4));
    pool.extend(named_graphs());
    pool.extend(chain_pool());
    pool.extend(two_sum_pool());
    pool
}

/// Every subset of the ground set.
pub fn all_subsets(m: &Matroid) -> impl Iterator<Item = ElementSet> {
    m.full().subsets()
}
