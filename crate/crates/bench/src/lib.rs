//! Fixtures shared by the criterion benchmarks.

use matlock_core::{catalog, Matroid};

/// The standard catalog matroids, by name.
pub fn catalog_matroids() -> Vec<(String, Matroid)> {
    catalog::standard()
        .into_iter()
        .map(|e| (e.name, e.matroid))
        .collect()
}
