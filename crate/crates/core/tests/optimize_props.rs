mod common;

use common::catalog_pool;
use matlock_core::optimize::{
    brute_force_max_basis, greedy_max_basis, independent_via_optimization, rank_via_optimization,
};
use matlock_core::polytope::predicted_facets_bases;
use matlock_core::{Rational, WeightFunction};
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn weight() -> impl Strategy<Value = Rational> {
    prop_oneof![
        (-3i64..=3).prop_map(|v| Rational::from_integer(v.into())),
        ((-20i64..=20), (1i64..=7)).prop_map(|(p, q)| Rational::new(p.into(), q.into())),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn greedy_is_optimal(idx in 0usize..8, ws in prop::collection::vec(weight(), 8)) {
        let (_, m) = catalog_pool().swap_remove(idx);
        let c = WeightFunction::new(ws[..m.len()].to_vec());
        let g = greedy_max_basis(&m, &c).unwrap();
        let b = brute_force_max_basis(&m, &c).unwrap();
        prop_assert!(m.is_basis(g.basis));
        prop_assert_eq!(&g.value, &b.value);
        prop_assert_eq!(c.total(g.basis), g.value);
        let sys = predicted_facets_bases(&m).unwrap();
        prop_assert!(sys.contains_vertex(g.basis));
    }
}

#[test]
fn convex_combinations_never_beat_the_best_vertex() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (name, m) in catalog_pool() {
        let c = WeightFunction::new(
            (0..m.len())
                .map(|_| {
                    Rational::new(
                        rng.random_range(-9i64..=9).into(),
                        rng.random_range(1i64..=4).into(),
                    )
                })
                .collect(),
        );
        let best = brute_force_max_basis(&m, &c).unwrap().value;
        let values: Vec<Rational> = m.bases().iter().map(|&b| c.total(b)).collect();
        assert!(values.contains(&best), "{name}");
        for _ in 0..10_000 / 8 {
            let picks: Vec<usize> = (0..3).map(|_| rng.random_range(0..values.len())).collect();
            let lambdas: Vec<i64> = (0..3).map(|_| rng.random_range(1..=5)).collect();
            let total: i64 = lambdas.iter().sum();
            let mix = picks
                .iter()
                .zip(&lambdas)
                .fold(Rational::zero(), |acc, (&p, &l)| {
                    acc + &values[p] * Rational::from_integer(l.into())
                });
            let mix = mix / Rational::from_integer(total.into());
            assert!(mix <= best, "{name}");
        }
    }
}

#[test]
fn oracle_reductions_are_exhaustively_exact() {
    for (name, m) in catalog_pool() {
        for x in m.full().subsets() {
            assert_eq!(
                rank_via_optimization(&m, x).unwrap(),
                m.rank_of(x),
                "{name} {x:?}"
            );
            assert_eq!(
                independent_via_optimization(&m, x).unwrap(),
                m.rank_of(x) == x.len(),
                "{name} {x:?}"
            );
        }
    }
}
