//! 0-algebraic and 0-minimally algebraic pairs.
//!
//! `B` is 0-algebraic over a disjoint `A` when `δ(B/A) = 0` and every proper
//! nonempty `B' ⊂ B` has `δ(B'/A) > 0`. Checking the second condition does
//! not need all subsets: for each `u ∈ B` the smallest minimiser of
//! `δ(· ∪ A)` over sets containing `A ∪ {u}` inside `A ∪ B` must be all of
//! `A ∪ B`, which is one minimum cut per body vertex.

use thiserror::Error;

use crate::graph::{BipartiteGraph, VertexSet};
use crate::predim::{delta, delta_rel, only_extreme_minimisers};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZeroAlgError {
    #[error("base and body overlap")]
    NotDisjoint,
    #[error("body is not 0-algebraic over the base")]
    NotZeroAlgebraic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairKind {
    Algebraic,
    MinimallyAlgebraic,
}

/// A body `B` together with a base `A` it is 0-algebraic over.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZeroAlgebraicPair {
    pub base: VertexSet,
    pub body: VertexSet,
    pub kind: PairKind,
}

/// Default cap on body size for enumeration: `4 · 3 · (n-2)`, enough for
/// the cycle witnesses with up to three windings.
pub fn default_body_cap(n: usize) -> usize {
    4 * 3 * (n - 2)
}

fn check_disjoint(base: &VertexSet, body: &VertexSet) -> Result<(), ZeroAlgError> {
    if base.is_disjoint(body) {
        Ok(())
    } else {
        Err(ZeroAlgError::NotDisjoint)
    }
}

/// Assumes disjointness.
fn zero_algebraic(g: &BipartiteGraph, base: &VertexSet, body: &VertexSet) -> bool {
    if body.is_clear() || delta_rel(g, body, base) != 0 {
        return false;
    }
    let n = g.n();
    // Dropping a single vertex must leave a positive remainder.
    let support = required_support(n);
    if body.count_ones(..) > 1
        && body
            .ones()
            .any(|v| g.degree_into(v, body) + g.degree_into(v, base) < support)
    {
        return false;
    }
    let mut whole = base.clone();
    whole.union_with(body);
    only_extreme_minimisers(g, &whole, base)
}

pub fn is_zero_algebraic(
    g: &BipartiteGraph,
    base: &VertexSet,
    body: &VertexSet,
) -> Result<bool, ZeroAlgError> {
    check_disjoint(base, body)?;
    Ok(zero_algebraic(g, base, body))
}

/// The base vertices with at least one edge into the body: the unique part
/// of the base over which the body is 0-minimally algebraic.
pub fn minimal_base(
    g: &BipartiteGraph,
    base: &VertexSet,
    body: &VertexSet,
) -> Result<VertexSet, ZeroAlgError> {
    if !is_zero_algebraic(g, base, body)? {
        return Err(ZeroAlgError::NotZeroAlgebraic);
    }
    let mut out = g.boundary(body);
    out.intersect_with(base);
    Ok(out)
}

pub fn is_zero_minimally_algebraic(
    g: &BipartiteGraph,
    base: &VertexSet,
    body: &VertexSet,
) -> Result<bool, ZeroAlgError> {
    check_disjoint(base, body)?;
    if !zero_algebraic(g, base, body) {
        return Ok(false);
    }
    Ok(&minimal_base(g, base, body)? == base)
}

/// `|B|(n-1) = (n-2)(e(B) + e(B,A))`, which every 0-algebraic pair obeys.
pub fn degree_identity_check(g: &BipartiteGraph, pair: &ZeroAlgebraicPair) -> bool {
    let n = g.n();
    let lhs = pair.body.count_ones(..) * (n - 1);
    let rhs = (n - 2) * (g.edges_within(&pair.body) + g.edges_between(&pair.body, &pair.base));
    lhs == rhs
}

/// Result of a capped enumeration; `body_cap` is the search horizon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairEnumeration {
    pub pairs: Vec<ZeroAlgebraicPair>,
    pub body_cap: usize,
}

/// All pairs `(A, B)` with `B` 0-minimally algebraic over `A`, `B` nonempty
/// and connected with at most `body_cap` vertices. Sorted by body, then base.
pub fn enumerate_zero_min_pairs(g: &BipartiteGraph, body_cap: usize) -> PairEnumeration {
    let mut pairs = Vec::new();
    connected_sets(g, body_cap, required_support(g.n()), &mut |body| {
        for base in candidate_bases(g, body) {
            if zero_algebraic(g, &base, body) {
                pairs.push(ZeroAlgebraicPair {
                    base,
                    body: body.clone(),
                    kind: PairKind::MinimallyAlgebraic,
                });
            }
        }
    });
    pairs.sort_by(|x, y| {
        let kx = (
            x.body.ones().collect::<Vec<_>>(),
            x.base.ones().collect::<Vec<_>>(),
        );
        let ky = (
            y.body.ones().collect::<Vec<_>>(),
            y.base.ones().collect::<Vec<_>>(),
        );
        kx.cmp(&ky)
    });
    PairEnumeration { pairs, body_cap }
}

/// Calls `visit` once for every connected vertex set with at most `cap`
/// vertices.
#[cfg(test)]
fn for_each_connected_set(g: &BipartiteGraph, cap: usize, visit: &mut dyn FnMut(&VertexSet)) {
    connected_sets(g, cap, 0, visit);
}

/// Least value of `inner degree + anchors` a vertex of a body with at least
/// two vertices can have: removing it must leave a positive remainder.
fn required_support(n: usize) -> usize {
    (n - 1) / (n - 2) + 1
}

/// Connected sets, each produced once from its smallest vertex. Sets of two
/// or more vertices are skipped (with all their supersets) once some member
/// can no longer reach `support` in `inner degree + 1`.
fn connected_sets(
    g: &BipartiteGraph,
    cap: usize,
    support: usize,
    visit: &mut dyn FnMut(&VertexSet),
) {
    if cap == 0 {
        return;
    }
    for root in 0..g.vertex_count() {
        let mut sub = g.set_of([root]);
        // everything below the root counts as excluded
        let mut excluded = g.set_of(0..root);
        grow(g, cap, support, &mut sub, &mut excluded, visit);
    }
}

fn feasible(g: &BipartiteGraph, support: usize, sub: &VertexSet, excluded: &VertexSet) -> bool {
    support == 0
        || sub.ones().all(|v| {
            let avail = g
                .neighbors(v)
                .iter()
                .filter(|&&u| !excluded.contains(u))
                .count();
            (avail + 1).min(g.degree(v)) >= support
        })
}

fn grow(
    g: &BipartiteGraph,
    cap: usize,
    support: usize,
    sub: &mut VertexSet,
    excluded: &mut VertexSet,
    visit: &mut dyn FnMut(&VertexSet),
) {
    visit(sub);
    if sub.count_ones(..) == cap {
        return;
    }
    let mut frontier = g.boundary(sub);
    frontier.difference_with(excluded);
    let mut dropped = Vec::new();
    for f in frontier.ones() {
        sub.insert(f);
        if feasible(g, support, sub, excluded) {
            grow(g, cap, support, sub, excluded, visit);
        }
        sub.set(f, false);
        excluded.insert(f);
        dropped.push(f);
        if !feasible(g, support, sub, excluded) && sub.count_ones(..) > 1 {
            break;
        }
    }
    for f in dropped {
        excluded.set(f, false);
    }
}

/// Bases `A ⊆ N(B)` that could make `B` 0-minimally algebraic, using only
/// counting constraints. Each candidate still needs the full check.
fn candidate_bases(g: &BipartiteGraph, body: &VertexSet) -> Vec<VertexSet> {
    let n = g.n() as i64;
    let d = delta(g, body);
    if d < 0 || d % (n - 2) != 0 {
        return Vec::new();
    }
    let need = (d / (n - 2)) as usize;
    let outside: Vec<usize> = g.boundary(body).ones().collect();
    let size = body.count_ones(..);

    if size == 1 {
        // A lone vertex may see several base vertices.
        let v = body.ones().next().unwrap();
        let nbrs: Vec<usize> = g.neighbors(v).to_vec();
        let mut out = Vec::new();
        choose(&nbrs, need, 0, &mut Vec::new(), &mut |pick| {
            out.push(g.set_of(pick.iter().copied()))
        });
        return out;
    }

    // With two or more body vertices each sees at most one base vertex, and
    // a vertex whose inner degree is too low must see exactly one.
    let mut forced = g.empty_set();
    for v in body.ones() {
        let inner = g.degree_into(v, body) as i64;
        if (n - 2) * inner - (n - 1) <= 0 {
            if (n - 2) * (inner + 1) - (n - 1) <= 0 || g.degree(v) as i64 == inner {
                return Vec::new();
            }
            forced.insert(v);
        }
    }
    if forced.count_ones(..) > need {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut hit = g.empty_set();
    pick_base(
        g,
        body,
        &outside,
        0,
        need,
        &forced,
        &mut hit,
        &mut Vec::new(),
        &mut out,
    );
    out
}

fn choose(
    items: &[usize],
    k: usize,
    from: usize,
    acc: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if acc.len() == k {
        f(acc);
        return;
    }
    for i in from..items.len() {
        if items.len() - i < k - acc.len() {
            break;
        }
        acc.push(items[i]);
        choose(items, k, i + 1, acc, f);
        acc.pop();
    }
}

#[allow(clippy::too_many_arguments)]
fn pick_base(
    g: &BipartiteGraph,
    body: &VertexSet,
    outside: &[usize],
    i: usize,
    remaining: usize,
    forced: &VertexSet,
    hit: &mut VertexSet,
    chosen: &mut Vec<usize>,
    out: &mut Vec<VertexSet>,
) {
    if remaining == 0 {
        if forced.is_subset(hit) {
            out.push(g.set_of(chosen.iter().copied()));
        }
        return;
    }
    if i == outside.len() {
        return;
    }
    let a = outside[i];
    let mut touches = g.neighbor_set(a).clone();
    touches.intersect_with(body);
    let k = touches.count_ones(..);
    if k <= remaining && touches.is_disjoint(hit) {
        hit.union_with(&touches);
        chosen.push(a);
        pick_base(
            g,
            body,
            outside,
            i + 1,
            remaining - k,
            forced,
            hit,
            chosen,
            out,
        );
        chosen.pop();
        hit.difference_with(&touches);
    }
    pick_base(g, body, outside, i + 1, remaining, forced, hit, chosen, out);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Part;

    fn path(n: usize, len: u32) -> BipartiteGraph {
        let vs: Vec<(u32, Part)> = (0..=len)
            .map(|i| (i, Part::from_index((i % 2) as u8).unwrap()))
            .collect();
        let es: Vec<(u32, u32)> = (0..len).map(|i| (i, i + 1)).collect();
        BipartiteGraph::from_parts(n, &vs, &es).unwrap()
    }

    /// Straight from the definition: every proper nonempty subset checked.
    fn brute_zero_algebraic(g: &BipartiteGraph, base: &VertexSet, body: &VertexSet) -> bool {
        let members: Vec<usize> = body.ones().collect();
        if members.is_empty() || delta_rel(g, body, base) != 0 {
            return false;
        }
        let full = (1u64 << members.len()) - 1;
        (1..full).all(|mask| {
            let sub = g.set_of(
                members
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v),
            );
            delta_rel(g, &sub, base) > 0
        })
    }

    #[test]
    fn path_interiors() {
        for n in 3..=6usize {
            for len in 2..=n + 1 {
                let g = path(n, len as u32);
                let ends = g.set_of([0, len]);
                let inner = g.set_of(1..len);
                let expect = len == n - 1;
                assert_eq!(is_zero_algebraic(&g, &ends, &inner).unwrap(), expect);
                assert_eq!(brute_zero_algebraic(&g, &ends, &inner), expect);
                assert_eq!(
                    is_zero_minimally_algebraic(&g, &ends, &inner).unwrap(),
                    expect
                );
            }
        }
    }

    #[test]
    fn overlap_is_error() {
        let g = path(3, 2);
        let s = g.set_of([0, 1]);
        assert_eq!(
            is_zero_algebraic(&g, &s, &s),
            Err(ZeroAlgError::NotDisjoint)
        );
        assert_eq!(
            minimal_base(&g, &g.set_of([0]), &g.set_of([1])),
            Err(ZeroAlgError::NotZeroAlgebraic)
        );
    }

    #[test]
    fn extra_base_vertex_breaks_minimality() {
        let mut vs: Vec<(u32, Part)> = (0..=3)
            .map(|i| (i, Part::from_index((i % 2) as u8).unwrap()))
            .collect();
        vs.push((9, Part::Zero));
        let g = BipartiteGraph::from_parts(4, &vs, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let base = g.set_of([0, 3, 4]);
        let body = g.set_of([1, 2]);
        assert!(is_zero_algebraic(&g, &base, &body).unwrap());
        assert!(!is_zero_minimally_algebraic(&g, &base, &body).unwrap());
        assert_eq!(minimal_base(&g, &base, &body).unwrap(), g.set_of([0, 3]));
    }

    #[test]
    fn single_path_has_one_pair() {
        for n in 3..=6usize {
            let g = path(n, (n - 1) as u32);
            let e = enumerate_zero_min_pairs(&g, default_body_cap(n));
            assert_eq!(e.pairs.len(), 1, "n = {n}");
            assert_eq!(e.pairs[0].base, g.set_of([0, n - 1]));
            assert!(degree_identity_check(&g, &e.pairs[0]));
        }
    }

    #[test]
    fn edgeless_graph_has_none() {
        let g = BipartiteGraph::from_parts(3, &[(0, Part::Zero), (1, Part::One)], &[]).unwrap();
        assert!(enumerate_zero_min_pairs(&g, 12).pairs.is_empty());
    }

    #[test]
    fn connected_sets_counted_once() {
        // A path on 5 vertices has 15 nonempty connected sets (intervals).
        let g = path(3, 4);
        let mut seen = std::collections::HashSet::new();
        let mut count = 0;
        for_each_connected_set(&g, 10, &mut |s| {
            count += 1;
            seen.insert(s.clone());
        });
        assert_eq!(count, 15);
        assert_eq!(seen.len(), 15);
    }

    /// Every disjoint pair on the graph, tested straight from the definition.
    fn brute_pairs(g: &BipartiteGraph) -> Vec<(Vec<usize>, Vec<usize>)> {
        let nv = g.vertex_count();
        let mut out = Vec::new();
        for code in 0..3u32.pow(nv as u32) {
            let (mut base, mut body) = (g.empty_set(), g.empty_set());
            let mut c = code;
            for v in 0..nv {
                match c % 3 {
                    1 => base.insert(v),
                    2 => body.insert(v),
                    _ => {}
                }
                c /= 3;
            }
            if !brute_zero_algebraic(g, &base, &body) {
                continue;
            }
            let members: Vec<usize> = base.ones().collect();
            let smaller_works = (0..(1u64 << members.len()) - 1).any(|mask| {
                let sub = g.set_of(
                    members
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &v)| v),
                );
                brute_zero_algebraic(g, &sub, &body)
            });
            if !smaller_works {
                out.push((body.ones().collect(), base.ones().collect()));
            }
        }
        out.sort();
        out
    }

    fn random_graph(
        rng: &mut rand_chacha::ChaCha8Rng,
        n: usize,
        nv: usize,
        p: f64,
    ) -> BipartiteGraph {
        use rand::Rng;
        let vs: Vec<(u32, Part)> = (0..nv as u32)
            .map(|i| {
                (
                    i,
                    if rng.random_bool(0.5) {
                        Part::One
                    } else {
                        Part::Zero
                    },
                )
            })
            .collect();
        let mut es = Vec::new();
        for a in 0..nv {
            for b in a + 1..nv {
                if vs[a].1 != vs[b].1 && rng.random_bool(p) {
                    es.push((a as u32, b as u32));
                }
            }
        }
        BipartiteGraph::from_parts(n, &vs, &es).unwrap()
    }

    #[test]
    fn enumeration_matches_brute_force_on_small_graphs() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for trial in 0..60 {
            let n = 3 + trial % 3;
            let nv = 5 + trial % 4;
            let g = random_graph(&mut rng, n, nv, 0.45);
            let mut got: Vec<(Vec<usize>, Vec<usize>)> = enumerate_zero_min_pairs(&g, nv)
                .pairs
                .iter()
                .map(|p| (p.body.ones().collect(), p.base.ones().collect()))
                .collect();
            got.sort();
            assert_eq!(got, brute_pairs(&g), "trial {trial}");
        }
    }

    #[test]
    fn disconnected_bodies_never_qualify() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for trial in 0..30 {
            let g = random_graph(&mut rng, 3 + trial % 3, 7, 0.4);
            for (body, _) in brute_pairs(&g) {
                assert!(g.is_connected_within(&g.set_of(body)));
            }
        }
    }
}
