mod common;

use std::sync::OnceLock;

use common::arb_graph;
use ngon_core::builder::{grow, GrowOutcome};
use ngon_core::graph::{girth, BipartiteGraph, Extent, VertexSet};
use ngon_core::kmu::{in_class, short_cycles, KmuOptions, MuFunction};
use ngon_core::predim::{delta, is_strong, min_nonempty_delta};
use ngon_core::witness::make_cycle;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn grown(seed: u64) -> &'static GrowOutcome {
    static CACHE: OnceLock<Vec<GrowOutcome>> = OnceLock::new();
    let all = CACHE.get_or_init(|| {
        let start = make_cycle(3, 8).unwrap().graph;
        let mu = MuFunction::default_mu(3);
        (0..3).map(|s| grow(&start, 10, s, &mu).unwrap()).collect()
    });
    &all[seed as usize % all.len()]
}

fn random_connected_set(g: &BipartiteGraph, rng: &mut ChaCha8Rng, size: usize) -> VertexSet {
    let mut set = g.set_of([rng.random_range(0..g.vertex_count())]);
    while set.count_ones(..) < size {
        let frontier: Vec<usize> = g.boundary(&set).ones().collect();
        if frontier.is_empty() {
            break;
        }
        set.insert(frontier[rng.random_range(0..frontier.len())]);
    }
    set
}

proptest! {
    #[test]
    fn short_cycle_condition_is_girth_at_least_2n(g in arb_graph(3..=5, 2, 10)) {
        let ok = match girth(&g) {
            Extent::Infinite => true,
            Extent::Finite(x) => x >= 2 * g.n(),
        };
        prop_assert_eq!(short_cycles(&g).is_empty(), ok);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn induced_subgraphs_of_members_are_members(seed in 0u64..3, keep in prop::collection::vec(prop::bool::weighted(0.7), 128)) {
        let g = &grown(seed).graph;
        let sub = g.set_of((0..g.vertex_count()).filter(|&v| keep[v % keep.len()]));
        let h = g.induced(&sub);
        let mu = MuFunction::default_mu(3);
        let rep = in_class(&h, &mu, KmuOptions::for_n(3));
        prop_assert!(rep.member, "{:?}", rep.violations.first().map(|v| v.to_string()));
    }
}

#[test]
fn grown_graphs_are_positive_members() {
    let mu = MuFunction::default_mu(3);
    for s in 0..3 {
        let out = grown(s);
        assert!(out.graph.vertex_count() > 8, "seed {s} did not grow");
        assert!(in_class(&out.graph, &mu, KmuOptions::for_n(3)).member);
        let (min, _) = min_nonempty_delta(&out.graph).unwrap();
        assert!(min >= 1, "seed {s}: {min}");
    }
}

#[test]
fn small_delta_sets_in_grown_graphs_are_strong() {
    let n = 3;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    for s in 0..3 {
        let g = &grown(s).graph;
        let full = g.full_set();
        for _ in 0..400 {
            let size = rng.random_range(1..=8);
            let a = random_connected_set(g, &mut rng, size);
            if delta(g, &a) <= 2 * n as i64 + 1 {
                checked += 1;
                assert!(is_strong(g, &a, &full).unwrap().holds, "{:?}", g.ids_of(&a));
            }
        }
    }
    assert!(checked > 100, "only {checked} samples");
}
