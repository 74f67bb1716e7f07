mod common;

use std::cell::Cell;

use common::{connected_graphs, uniform_pool, uniformity_pool};
use matlock_core::locked::{enumerate_locked, locked_number_oracle};
use matlock_core::uniformity::{
    check_unlocked_iff_uniform, is_uniform_direct, test_uniformity, test_uniformity_with,
};
use matlock_core::UniformityCondition;

#[test]
fn verdict_matches_definition_with_one_oracle_call() {
    let pool = uniformity_pool();
    assert!(pool.len() >= 50);
    for (name, m) in pool {
        let calls = Cell::new(0);
        let verdict = test_uniformity_with(&m, |m| {
            calls.set(calls.get() + 1);
            locked_number_oracle(m)
        })
        .unwrap();
        assert_eq!(calls.get(), 1, "{name}");
        assert_eq!(verdict.uniform, is_uniform_direct(&m), "{name}");
        assert_eq!(verdict.uniform, verdict.witness.is_some(), "{name}");
    }
}

#[test]
fn all_graphs_on_five_vertices() {
    for (name, m) in connected_graphs(5) {
        assert_eq!(
            test_uniformity(&m).unwrap().uniform,
            is_uniform_direct(&m),
            "{name}"
        );
    }
}

#[test]
fn three_connected_biconditional() {
    for (name, m) in uniformity_pool()
        .into_iter()
        .filter(|(_, m)| m.is_3_connected())
    {
        assert!(check_unlocked_iff_uniform(&m).unwrap(), "{name}");
    }
}

#[test]
fn uniform_matroids_have_no_locked_subsets() {
    for (name, m) in uniform_pool(8) {
        assert!(enumerate_locked(&m, None).is_empty(), "{name}");
    }
}

#[test]
fn connected_matroids_need_only_first_three_conditions() {
    let first_three = [
        UniformityCondition::Unlocked,
        UniformityCondition::OneParallelClass,
        UniformityCondition::OneSeriesClass,
    ];
    for (name, m) in uniformity_pool() {
        if !m.is_connected() || !m.loops().is_empty() || !m.coloops().is_empty() {
            continue;
        }
        let numbers = locked_number_oracle(&m).unwrap();
        let holds = first_three.iter().any(|c| c.holds(&numbers, m.len()));
        assert_eq!(holds, is_uniform_direct(&m), "{name}");
    }
}
