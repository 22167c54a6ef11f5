use std::collections::VecDeque;

use super::{BipartiteGraph, Part};

/// All simple cycles with exactly `length` edges, each reported once.
///
/// A cycle is listed as its vertex sequence starting at its smallest index,
/// oriented so that the second vertex is smaller than the last. Odd lengths
/// and lengths below 4 yield nothing.
pub fn enumerate_cycles(g: &BipartiteGraph, length: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if length < 4 || length % 2 == 1 {
        return out;
    }
    for start in 0..g.vertex_count() {
        let dist = bounded_distances(g, start, length / 2);
        let mut path = vec![start];
        let mut on_path = g.empty_set();
        on_path.insert(start);
        extend(g, start, length, &dist, &mut path, &mut on_path, &mut out);
    }
    out
}

/// BFS distances from `start` inside the vertices with index >= `start`.
fn bounded_distances(g: &BipartiteGraph, start: usize, limit: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    dist[start] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        if dist[u] >= limit {
            continue;
        }
        for &w in g.neighbors(u) {
            if w > start && dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

fn extend(
    g: &BipartiteGraph,
    start: usize,
    length: usize,
    dist: &[usize],
    path: &mut Vec<usize>,
    on_path: &mut super::VertexSet,
    out: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().unwrap();
    if path.len() == length {
        if g.adjacent(last, start) && path[1] < path[length - 1] {
            out.push(path.clone());
        }
        return;
    }
    let remaining = length - path.len();
    for &w in g.neighbors(last) {
        if w <= start || on_path.contains(w) || dist[w] > remaining {
            continue;
        }
        path.push(w);
        on_path.insert(w);
        extend(g, start, length, dist, path, on_path, out);
        on_path.set(w, false);
        path.pop();
    }
}

/// Cycles of `length` as closed walks with a distinguished start vertex of
/// part `start_part` and a direction. Every undirected cycle contributes
/// `length` sequences: `length / 2` starting points times two directions.
pub fn enumerate_ordered_cycles(
    g: &BipartiteGraph,
    length: usize,
    start_part: Part,
) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for cyc in enumerate_cycles(g, length) {
        for shift in 0..length {
            if g.part(cyc[shift]) != start_part {
                continue;
            }
            let forward: Vec<usize> = (0..length).map(|i| cyc[(shift + i) % length]).collect();
            let backward: Vec<usize> = (0..length)
                .map(|i| cyc[(shift + length - i) % length])
                .collect();
            out.push(forward);
            out.push(backward);
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete_bipartite(a: u32, b: u32) -> BipartiteGraph {
        let mut vs = Vec::new();
        let mut es = Vec::new();
        for i in 0..a {
            vs.push((i, Part::Zero));
        }
        for j in 0..b {
            vs.push((a + j, Part::One));
            for i in 0..a {
                es.push((i, a + j));
            }
        }
        BipartiteGraph::from_parts(3, &vs, &es).unwrap()
    }

    #[test]
    fn k33_cycle_counts() {
        // K_{3,3}: 9 four-cycles, 6 six-cycles.
        let g = complete_bipartite(3, 3);
        assert_eq!(enumerate_cycles(&g, 4).len(), 9);
        assert_eq!(enumerate_cycles(&g, 6).len(), 6);
        assert!(enumerate_cycles(&g, 5).is_empty());
        assert!(enumerate_cycles(&g, 8).is_empty());
    }

    #[test]
    fn ordered_cycles_multiply_by_length() {
        let g = complete_bipartite(3, 3);
        assert_eq!(enumerate_ordered_cycles(&g, 6, Part::Zero).len(), 36);
        let c = &enumerate_ordered_cycles(&g, 4, Part::One)[0];
        assert_eq!(g.part(c[0]), Part::One);
    }
}
