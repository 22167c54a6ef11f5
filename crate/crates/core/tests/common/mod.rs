#![allow(dead_code)]

use ngon_core::graph::{BipartiteGraph, Part, VertexSet};
use ngon_core::predim::delta;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn build(n: usize, parts: &[bool], edges: &[bool]) -> BipartiteGraph {
    let nv = parts.len();
    let vs: Vec<(u32, Part)> = parts
        .iter()
        .enumerate()
        .map(|(i, &p)| (i as u32, if p { Part::One } else { Part::Zero }))
        .collect();
    let mut es = Vec::new();
    let mut k = 0;
    for a in 0..nv {
        for b in a + 1..nv {
            if parts[a] != parts[b] && edges[k % edges.len().max(1)] {
                es.push((a as u32, b as u32));
            }
            k += 1;
        }
    }
    BipartiteGraph::from_parts(n, &vs, &es).unwrap()
}

pub fn random_graph(seed: u64, n: usize, nv: usize, p: f64) -> BipartiteGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let parts: Vec<bool> = (0..nv).map(|_| rng.random_bool(0.5)).collect();
    let edges: Vec<bool> = (0..nv * nv).map(|_| rng.random_bool(p)).collect();
    build(n, &parts, &edges)
}

/// Random bipartite graphs with gonality in `ns` and `lo..=hi` vertices.
pub fn arb_graph(
    ns: std::ops::RangeInclusive<usize>,
    lo: usize,
    hi: usize,
) -> impl Strategy<Value = BipartiteGraph> {
    (ns, lo..=hi).prop_flat_map(|(n, nv)| {
        (
            Just(n),
            prop::collection::vec(any::<bool>(), nv),
            prop::collection::vec(prop::bool::weighted(0.45), nv * nv),
        )
            .prop_map(|(n, parts, edges)| build(n, &parts, &edges))
    })
}

pub fn from_mask(g: &BipartiteGraph, mask: u32) -> VertexSet {
    g.set_of((0..g.vertex_count()).filter(|i| mask >> i & 1 == 1))
}

/// δ of every subset, indexed by bitmask.
pub fn all_deltas(g: &BipartiteGraph) -> Vec<i64> {
    (0..1u32 << g.vertex_count())
        .map(|m| delta(g, &from_mask(g, m)))
        .collect()
}

/// Least δ over supersets of each mask.
pub fn superset_minima(g: &BipartiteGraph, deltas: &[i64]) -> Vec<i64> {
    let mut best = deltas.to_vec();
    for bit in 0..g.vertex_count() {
        for m in 0..best.len() {
            if m >> bit & 1 == 0 {
                best[m] = best[m].min(best[m | 1 << bit]);
            }
        }
    }
    best
}

/// Brute-force 0-algebraicity straight from the definition.
pub fn brute_zero_algebraic(g: &BipartiteGraph, base: u32, body: u32, deltas: &[i64]) -> bool {
    if body == 0 || base & body != 0 || deltas[(base | body) as usize] != deltas[base as usize] {
        return false;
    }
    let mut sub = (body - 1) & body;
    while sub != 0 {
        if deltas[(base | sub) as usize] <= deltas[base as usize] {
            return false;
        }
        sub = (sub - 1) & body;
    }
    let _ = g;
    true
}
