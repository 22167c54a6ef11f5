//! The predimension calculus on a finite ambient graph.
//!
//! `δ(A) = (n-1)|A| - (n-2)e(A)` is submodular, so minimising it over the
//! supersets of a fixed set is a max-closure problem. Every superset
//! minimisation here (`d`, strong embedding, closure) is one minimum cut,
//! and the inclusion-minimal minimiser falls out of the residual network.

use thiserror::Error;

use crate::flow::FlowNetwork;
use crate::graph::{BipartiteGraph, VertexSet, VertexSubset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PredimError {
    #[error("the first set is not contained in the second")]
    NotSubset,
}

/// `(n-1)|A| - (n-2)e(A)`.
pub fn delta(g: &BipartiteGraph, a: &VertexSet) -> i64 {
    let n = g.n() as i64;
    (n - 1) * a.count_ones(..) as i64 - (n - 2) * g.edges_within(a) as i64
}

/// `δ(A/B) = δ(A ∪ B) - δ(B)`.
pub fn delta_rel(g: &BipartiteGraph, a: &VertexSet, b: &VertexSet) -> i64 {
    let mut ab = a.clone();
    ab.union_with(b);
    delta(g, &ab) - delta(g, b)
}

/// Network whose minimum cuts are the minimisers of δ over
/// `a ⊆ X ⊆ within`; node `i` stands for `free[i]`.
struct SupersetNetwork {
    net: FlowNetwork,
    free: Vec<usize>,
    positive: i64,
}

impl SupersetNetwork {
    fn build(g: &BipartiteGraph, within: &VertexSet, a: &VertexSet) -> Self {
        let n = g.n() as i64;
        let mut free_set = within.clone();
        free_set.difference_with(a);
        let free: Vec<usize> = free_set.ones().collect();
        let mut slot = vec![usize::MAX; g.vertex_count()];
        for (i, &v) in free.iter().enumerate() {
            slot[v] = i;
        }
        // Twice the gain of adding Y: sum of per-vertex weights minus (n-2)
        // per edge leaving Y inside the free vertices.
        let s = free.len();
        let mut net = FlowNetwork::with_arc_capacity(s + 2, 3 * s);
        let mut positive = 0;
        for (i, &v) in free.iter().enumerate() {
            let deg_free = g.degree_into(v, &free_set) as i64;
            let deg_base = g.degree_into(v, a) as i64;
            let cost = (n - 1) - (n - 2) * deg_base;
            let w = (n - 2) * deg_free - 2 * cost;
            if w > 0 {
                net.add_arc(s, i, w);
                positive += w;
            } else if w < 0 {
                net.add_arc(i, s + 1, -w);
            }
            for &u in g.neighbors(v) {
                if free_set.contains(u) && u > v {
                    net.add_arc(i, slot[u], n - 2);
                    net.add_arc(slot[u], i, n - 2);
                }
            }
        }
        SupersetNetwork {
            net,
            free,
            positive,
        }
    }

    fn source(&self) -> usize {
        self.free.len()
    }

    fn sink(&self) -> usize {
        self.free.len() + 1
    }

    /// Runs the flow; returns the minimum of δ.
    fn solve(&mut self, g: &BipartiteGraph, a: &VertexSet) -> i64 {
        let (s, t) = (self.source(), self.sink());
        let cut = self.net.max_flow(s, t);
        let twice_gain = self.positive - cut;
        debug_assert!(twice_gain % 2 == 0);
        delta(g, a) - twice_gain / 2
    }
}

/// Minimum of δ over `a ⊆ X ⊆ within`, together with the inclusion-smallest
/// minimiser. `a` must be contained in `within`.
pub(crate) fn min_superset(
    g: &BipartiteGraph,
    within: &VertexSet,
    a: &VertexSet,
) -> (i64, VertexSet) {
    debug_assert!(a.is_subset(within));
    let mut sn = SupersetNetwork::build(g, within, a);
    if sn.free.is_empty() {
        return (delta(g, a), a.clone());
    }
    let value = sn.solve(g, a);
    let reach = sn.net.residual_reach(sn.source());
    let mut best = a.clone();
    for (i, &v) in sn.free.iter().enumerate() {
        if reach[i] {
            best.insert(v);
        }
    }
    debug_assert_eq!(value, delta(g, &best));
    (value, best)
}

/// Whether `a` and `within` are the only minimisers of δ over
/// `a ⊆ X ⊆ within`, both attaining `δ(a)`.
pub(crate) fn only_extreme_minimisers(
    g: &BipartiteGraph,
    within: &VertexSet,
    a: &VertexSet,
) -> bool {
    debug_assert!(a.is_subset(within));
    let mut sn = SupersetNetwork::build(g, within, a);
    if sn.free.is_empty() {
        return true;
    }
    if sn.solve(g, a) != delta(g, a) {
        return false;
    }
    // Minimum cuts are exactly the residual-closed sets between the
    // source-reachable and sink-coreachable nodes.
    let reach = sn.net.residual_reach(sn.source());
    let coreach = sn.net.residual_coreach(sn.sink());
    let k = sn.free.len();
    if (0..k).any(|i| reach[i] || coreach[i]) {
        return false;
    }
    let mut nodes = vec![true; k + 2];
    nodes[k] = false;
    nodes[k + 1] = false;
    sn.net.strongly_connected(&nodes)
}

/// Outcome of a strong-embedding test. On failure `witness` is an
/// inclusion-minimal intermediate set with δ below δ(A).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongReport {
    pub holds: bool,
    pub witness: Option<VertexSet>,
}

/// Whether `a ≤ b`: every `a ⊆ X ⊆ b` has `δ(X) ≥ δ(a)`.
pub fn is_strong(
    g: &BipartiteGraph,
    a: &VertexSet,
    b: &VertexSet,
) -> Result<StrongReport, PredimError> {
    if !a.is_subset(b) {
        return Err(PredimError::NotSubset);
    }
    let target = delta(g, a);
    let (value, mut witness) = min_superset(g, b, a);
    if value >= target {
        return Ok(StrongReport {
            holds: true,
            witness: None,
        });
    }
    // Shrink to an inclusion-minimal violator. A vertex that cannot be
    // dropped now cannot be dropped from any smaller violator either, so a
    // single pass suffices.
    let extra: Vec<usize> = witness.difference(a).collect();
    for v in extra {
        if !witness.contains(v) {
            continue;
        }
        let mut inner = witness.clone();
        inner.set(v, false);
        let (val, smaller) = min_superset(g, &inner, a);
        if val < target {
            witness = smaller;
        }
    }
    Ok(StrongReport {
        holds: false,
        witness: Some(witness),
    })
}

/// `d(A)`: the least δ over supersets of `a` in the ambient graph.
pub fn d_min(g: &BipartiteGraph, a: &VertexSet) -> i64 {
    min_superset(g, &g.full_set(), a).0
}

/// `d(B/A) = d(B ∪ A) - d(A)`.
pub fn d_rel(g: &BipartiteGraph, b: &VertexSet, a: &VertexSet) -> i64 {
    let mut ab = a.clone();
    ab.union_with(b);
    d_min(g, &ab) - d_min(g, a)
}

/// The smallest strong subset of the ambient graph containing `a`.
///
/// Strong supersets are closed under intersection, and the smallest
/// minimiser of δ over supersets of `a` is contained in each of them.
pub fn closure(g: &BipartiteGraph, a: &VertexSet) -> VertexSet {
    min_superset(g, &g.full_set(), a).1
}

/// Vertices `x` with `d(A ∪ {x}) = d(A)`, relative to the finite ambient.
pub fn acl_relative(g: &BipartiteGraph, a: &VertexSet) -> VertexSet {
    let full = g.full_set();
    let base = min_superset(g, &full, a).0;
    let mut out = a.clone();
    for x in 0..g.vertex_count() {
        if a.contains(x) {
            continue;
        }
        let mut ax = a.clone();
        ax.insert(x);
        if min_superset(g, &full, &ax).0 == base {
            out.insert(x);
        }
    }
    out
}

/// Least δ over all nonempty subsets of the graph (`None` if it has no
/// vertices).
pub fn min_nonempty_delta(g: &BipartiteGraph) -> Option<(i64, VertexSet)> {
    let full = g.full_set();
    (0..g.vertex_count())
        .map(|v| min_superset(g, &full, &g.set_of([v])))
        .min_by_key(|(val, set)| (*val, set.count_ones(..)))
}

impl VertexSubset<'_> {
    pub fn delta(&self) -> i64 {
        delta(self.graph(), self.members())
    }

    /// `δ(self / base)`.
    pub fn delta_over(&self, base: &VertexSubset<'_>) -> i64 {
        delta_rel(self.graph(), self.members(), base.members())
    }

    pub fn is_strong_in(&self, outer: &VertexSubset<'_>) -> Result<StrongReport, PredimError> {
        is_strong(self.graph(), self.members(), outer.members())
    }

    pub fn d_min(&self) -> i64 {
        d_min(self.graph(), self.members())
    }

    pub fn closure(&self) -> Self {
        VertexSubset::from_set(self.graph(), closure(self.graph(), self.members()))
    }

    pub fn acl(&self) -> Self {
        VertexSubset::from_set(self.graph(), acl_relative(self.graph(), self.members()))
    }
}
