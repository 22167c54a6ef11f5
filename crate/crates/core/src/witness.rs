//! Constructors for the explicit configurations: paths, cycles, the
//! pointed path `γ`, the six-vertex star-path, and the spoked cycles hanging
//! off a base set. All of them come back as standalone graphs with named
//! subsets.

use thiserror::Error;

use crate::graph::{distances_from, BipartiteGraph, GraphBuilder, GraphDocument, Part, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("gonality parameter must be at least 3, got {0}")]
    InvalidGonality(usize),
    #[error("cycle length must be even and at least 4, got {0}")]
    BadCycleLength(usize),
    #[error("spoked cycle needs at least two windings, got {0}")]
    TooFewWindings(usize),
}

fn builder(n: usize) -> Result<GraphBuilder, WitnessError> {
    GraphBuilder::new(n).map_err(|_| WitnessError::InvalidGonality(n))
}

fn alternating(i: usize) -> Part {
    Part::Zero.shifted(i)
}

/// A path with `length` edges on vertices `0..=length`.
pub fn make_path(n: usize, length: usize) -> Result<GraphDocument, WitnessError> {
    let mut b = builder(n)?;
    for i in 0..=length {
        b.vertex(VertexId(i as u32), alternating(i)).unwrap();
    }
    for i in 0..length {
        b.edge(VertexId(i as u32), VertexId(i as u32 + 1)).unwrap();
    }
    let g = b.build();
    let ends = g.set_of([0, length]);
    let inner = g.set_of(1..length);
    let all = g.full_set();
    Ok(GraphDocument::new(g)
        .with_subset("endpoints", ends)
        .with_subset("interior", inner)
        .with_subset("path", all))
}

/// A cycle with `length` vertices, `0..length` in cyclic order.
pub fn make_cycle(n: usize, length: usize) -> Result<GraphDocument, WitnessError> {
    if length < 4 || length % 2 == 1 {
        return Err(WitnessError::BadCycleLength(length));
    }
    let mut b = builder(n)?;
    for i in 0..length {
        b.vertex(VertexId(i as u32), alternating(i)).unwrap();
    }
    for i in 0..length {
        b.edge(VertexId(i as u32), VertexId(((i + 1) % length) as u32))
            .unwrap();
    }
    let g = b.build();
    let all = g.full_set();
    let anti = g.set_of([0, length / 2]);
    Ok(GraphDocument::new(g)
        .with_subset("cycle", all)
        .with_subset("antipodes", anti))
}

/// The path `x_0 … x_n` with a second neighbour `x_{n+1}` of `x_{n-1}`;
/// vertex `x_i` has id `i`. Subsets: `gamma`, every prefix `gamma_i`, and
/// `A0 = {x_0, x_{n-1}, x_n, x_{n+1}}`.
pub fn make_gamma(n: usize) -> Result<GraphDocument, WitnessError> {
    let mut b = builder(n)?;
    for i in 0..=n + 1 {
        let part = if i == n + 1 {
            alternating(n)
        } else {
            alternating(i)
        };
        b.vertex(VertexId(i as u32), part).unwrap();
    }
    for i in 0..n {
        b.edge(VertexId(i as u32), VertexId(i as u32 + 1)).unwrap();
    }
    b.edge(VertexId(n as u32 - 1), VertexId(n as u32 + 1))
        .unwrap();
    let g = b.build();
    let mut doc = GraphDocument::new(g.clone()).with_subset("gamma", g.full_set());
    for i in 0..=n + 1 {
        doc = doc.with_subset(&format!("gamma_{i}"), g.set_of(0..=i));
    }
    Ok(doc.with_subset("A0", g.set_of([0, n - 1, n, n + 1])))
}

/// Two internally disjoint paths of length `n-1` between vertices `0` and
/// `1`. Subsets: `ends`, `first` and `second` (the two interiors).
pub fn make_double_path(n: usize) -> Result<GraphDocument, WitnessError> {
    let mut b = builder(n)?;
    b.vertex(VertexId(0), Part::Zero).unwrap();
    b.vertex(VertexId(1), alternating(n - 1)).unwrap();
    let mut next = 2u32;
    let mut interiors = Vec::new();
    for _ in 0..2 {
        let mut prev = 0u32;
        let mut inner = Vec::new();
        for i in 1..n - 1 {
            b.vertex(VertexId(next), alternating(i)).unwrap();
            b.edge(VertexId(prev), VertexId(next)).unwrap();
            inner.push(next as usize);
            prev = next;
            next += 1;
        }
        b.edge(VertexId(prev), VertexId(1)).unwrap();
        interiors.push(inner);
    }
    let g = b.build();
    let ends = g.set_of([0, 1]);
    let first = g.set_of(interiors[0].iter().copied());
    let second = g.set_of(interiors[1].iter().copied());
    Ok(GraphDocument::new(g)
        .with_subset("ends", ends)
        .with_subset("first", first)
        .with_subset("second", second))
}

/// Edges `a1–x0, x0–z1, z1–z0, z0–b1, z0–b2` with ids
/// `a1=0, x0=1, z1=2, z0=3, b1=4, b2=5`.
pub fn make_star_path(n: usize) -> Result<GraphDocument, WitnessError> {
    let mut b = builder(n)?;
    let parts = [
        Part::One,
        Part::Zero,
        Part::One,
        Part::Zero,
        Part::One,
        Part::One,
    ];
    for (i, p) in parts.iter().enumerate() {
        b.vertex(VertexId(i as u32), *p).unwrap();
    }
    for (x, y) in [(0, 1), (1, 2), (2, 3), (3, 4), (3, 5)] {
        b.edge(VertexId(x), VertexId(y)).unwrap();
    }
    let g = b.build();
    let all = g.full_set();
    Ok(GraphDocument::new(g).with_subset("config", all))
}

/// The cycle `c_0 … c_{4ℓ(n-2)-1}` with spokes `c_{i(n-2)} – s_{i mod 4}`
/// for `i = 0 … 4ℓ-1`.
///
/// Ids: `c_j = j`, then `s_0..s_3`, then `b` if requested. With `with_b` the
/// spoke at `c_0` goes to `b` instead of `s_0`. Subsets: `A0`, `C`, and with
/// `b` also `b` and `A0b`.
pub fn make_cl_witness(
    n: usize,
    windings: usize,
    with_b: bool,
) -> Result<GraphDocument, WitnessError> {
    if windings < 2 {
        return Err(WitnessError::TooFewWindings(windings));
    }
    let mut b = builder(n)?;
    let step = n - 2;
    let len = 4 * windings * step;
    for j in 0..len {
        b.vertex(VertexId(j as u32), alternating(j)).unwrap();
    }
    let s = |k: usize| VertexId((len + k) as u32);
    for k in 0..4 {
        // s_k is attached to c_{i·step} with i ≡ k (mod 4)
        b.vertex(s(k), alternating(k * step).other()).unwrap();
    }
    let b_id = VertexId((len + 4) as u32);
    if with_b {
        b.vertex(b_id, alternating(0).other()).unwrap();
    }
    for j in 0..len {
        b.edge(VertexId(j as u32), VertexId(((j + 1) % len) as u32))
            .unwrap();
    }
    for i in 0..4 * windings {
        let c = VertexId((i * step) as u32);
        let target = if with_b && i == 0 { b_id } else { s(i % 4) };
        b.edge(c, target).unwrap();
    }
    let g = b.build();
    let cycle = g.set_of(0..len);
    let base = g.set_of(len..len + 4);
    let mut doc = GraphDocument::new(g.clone())
        .with_subset("A0", base.clone())
        .with_subset("C", cycle);
    if with_b {
        let mut ab = base;
        ab.insert(len + 4);
        doc = doc
            .with_subset("b", g.set_of([len + 4]))
            .with_subset("A0b", ab);
    }
    Ok(doc)
}

/// Which vertex types a base set uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseSetMode {
    /// `n` odd: `s_0, s_2` of one type, `s_1, s_3` of the other.
    OddN,
    /// `n` even, all four vertices of part 0.
    EvenNType0,
    /// `n` even, all four vertices of part 1.
    EvenNType1,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BaseSetSpec {
    pub s: [VertexId; 4],
    pub mode: BaseSetMode,
}

/// Distance between opposite members of a base set: `n - 1` for odd `n`
/// and `n` for even `n` (opposite members share a type).
pub fn base_set_diagonal(n: usize) -> usize {
    if n.is_multiple_of(2) {
        n
    } else {
        n - 1
    }
}

/// Every ordered quadruple `(s_0, s_1, s_2, s_3)` with consecutive distances
/// `n` (cyclically) and both diagonals at [`base_set_diagonal`].
pub fn find_base_set(g: &BipartiteGraph) -> Vec<BaseSetSpec> {
    let n = g.n();
    let diag = base_set_diagonal(n);
    let nv = g.vertex_count();
    let dist: Vec<Vec<Option<usize>>> = (0..nv).map(|v| distances_from(g, v)).collect();
    let at = |u: usize, v: usize, d: usize| dist[u][v] == Some(d);
    let mut out = Vec::new();
    for s0 in 0..nv {
        for s1 in (0..nv).filter(|&v| at(s0, v, n)) {
            for s2 in (0..nv).filter(|&v| at(s1, v, n) && at(s0, v, diag)) {
                for s3 in (0..nv).filter(|&v| at(s2, v, n) && at(s0, v, n) && at(s1, v, diag)) {
                    let mode = if n % 2 == 1 {
                        BaseSetMode::OddN
                    } else if g.part(s0) == Part::Zero {
                        BaseSetMode::EvenNType0
                    } else {
                        BaseSetMode::EvenNType1
                    };
                    out.push(BaseSetSpec {
                        s: [g.id(s0), g.id(s1), g.id(s2), g.id(s3)],
                        mode,
                    });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{girth, Extent};
    use crate::predim::{delta, delta_rel};

    #[test]
    fn constructor_errors() {
        assert_eq!(
            make_cycle(3, 7).unwrap_err(),
            WitnessError::BadCycleLength(7)
        );
        assert_eq!(
            make_cycle(3, 2).unwrap_err(),
            WitnessError::BadCycleLength(2)
        );
        assert_eq!(
            make_cl_witness(3, 1, false).unwrap_err(),
            WitnessError::TooFewWindings(1)
        );
        assert_eq!(
            make_path(2, 3).unwrap_err(),
            WitnessError::InvalidGonality(2)
        );
    }

    #[test]
    fn cycle_delta_and_girth() {
        for n in 3..=6 {
            let doc = make_cycle(n, 2 * n).unwrap();
            let g = &doc.graph;
            assert_eq!(girth(g), Extent::Finite(2 * n));
            assert_eq!(delta(g, &g.full_set()), 2 * n as i64);
            let doc = make_cycle(n, 2 * n + 2).unwrap();
            assert_eq!(delta(&doc.graph, &doc.graph.full_set()), 2 * n as i64 + 2);
        }
    }

    #[test]
    fn gamma_prefixes() {
        for n in 3..=7 {
            let doc = make_gamma(n).unwrap();
            let g = &doc.graph;
            assert_eq!(delta(g, doc.subset("gamma").unwrap()), 2 * n as i64);
            assert_eq!(delta(g, doc.subset("A0").unwrap()), 2 * n as i64);
            for i in 0..=n + 1 {
                let pre = doc.subset(&format!("gamma_{i}")).unwrap();
                assert_eq!(delta(g, pre), (n - 1 + i) as i64);
            }
        }
    }

    #[test]
    fn star_path_delta() {
        for n in 3..=8 {
            let doc = make_star_path(n).unwrap();
            assert_eq!(delta(&doc.graph, &doc.graph.full_set()), n as i64 + 4);
        }
    }

    #[test]
    fn spoked_cycle_shape() {
        for n in 3..=6 {
            for l in 2..=4 {
                let doc = make_cl_witness(n, l, false).unwrap();
                let g = &doc.graph;
                let c = doc.subset("C").unwrap();
                let a0 = doc.subset("A0").unwrap();
                assert_eq!(c.count_ones(..), 4 * l * (n - 2));
                assert_eq!(g.edges_between(c, a0), 4 * l);
                assert_eq!(delta(g, c), (4 * l * (n - 2)) as i64);
                assert_eq!(delta_rel(g, c, a0), 0);
                let doc = make_cl_witness(n, l, true).unwrap();
                let g = &doc.graph;
                let b = doc.subset("b").unwrap();
                assert_eq!(g.edges_between(doc.subset("C").unwrap(), b), 1);
            }
        }
    }

    #[test]
    fn short_graph_has_no_base_set() {
        // diameter 2 < n = 3
        let doc = make_path(3, 2).unwrap();
        assert!(find_base_set(&doc.graph).is_empty());
    }
}
