//! Exact affine dimension by fraction-free (Bareiss) elimination.

use crate::set::ElementSet;

/// Rank of an integer matrix. Every intermediate entry is a minor of the input, so the
/// divisions are exact.
pub fn integer_rank(mut rows: Vec<Vec<i128>>) -> usize {
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    let height = rows.len();
    let mut rank = 0;
    let mut prev_pivot: i128 = 1;
    for col in 0..width {
        if rank == height {
            break;
        }
        let Some(p) = (rank..height).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col];
        for r in rank + 1..height {
            let factor = rows[r][col];
            for c in col + 1..width {
                let num = pivot * rows[r][c] - factor * rows[rank][c];
                debug_assert_eq!(num % prev_pivot, 0);
                rows[r][c] = num / prev_pivot;
            }
            rows[r][col] = 0;
        }
        prev_pivot = pivot;
        rank += 1;
    }
    rank
}

/// Affine dimension of 0/1 vertices over `n` coordinates: the rank of the differences
/// to the first vertex. Zero for one vertex or none.
pub fn polytope_dimension(vertices: &[ElementSet], n: usize) -> usize {
    let Some((&first, rest)) = vertices.split_first() else {
        return 0;
    };
    let rows = rest
        .iter()
        .map(|v| {
            (0..n)
                .map(|i| i128::from(v.contains(i)) - i128::from(first.contains(i)))
                .collect()
        })
        .collect();
    integer_rank(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use num_rational::BigRational;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    /// Plain Gaussian elimination over the rationals.
    fn rational_rank(rows: &[Vec<i128>]) -> usize {
        let mut m: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| BigRational::from_integer(v.into()))
                    .collect()
            })
            .collect();
        let width = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..width {
            let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            let inv = BigRational::one() / m[rank][col].clone();
            for r in 0..m.len() {
                if r != rank && !m[r][col].is_zero() {
                    let f = m[r][col].clone() * inv.clone();
                    for c in 0..width {
                        let d = f.clone() * m[rank][c].clone();
                        m[r][c] -= d;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn dimension_examples() {
        let k4 = catalog::mk4();
        assert_eq!(polytope_dimension(k4.bases(), 6), 5);
        assert_eq!(polytope_dimension(&[ElementSet::singleton(0)], 2), 0);
        let u12 = catalog::uniform(1, 2).unwrap();
        assert_eq!(polytope_dimension(u12.bases(), 2), 1);
        assert_eq!(polytope_dimension(&[], 3), 0);
    }

    proptest! {
        #[test]
        fn bareiss_matches_rational_elimination(
            rows in prop::collection::vec(prop::collection::vec(-3i128..=3, 6), 0..10)
        ) {
            prop_assert_eq!(integer_rank(rows.clone()), rational_rank(&rows));
        }
    }
}
