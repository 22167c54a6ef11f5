use std::collections::VecDeque;
use std::fmt;

use super::{BipartiteGraph, GraphError, VertexId};

/// A distance-like quantity that may be unbounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extent {
    Finite(usize),
    Infinite,
}

impl Extent {
    pub fn finite(self) -> Option<usize> {
        match self {
            Extent::Finite(k) => Some(k),
            Extent::Infinite => None,
        }
    }
}

impl fmt::Display for Extent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extent::Finite(k) => write!(f, "{k}"),
            Extent::Infinite => write!(f, "inf"),
        }
    }
}

/// BFS distances from `src`; `None` for unreachable vertices.
pub fn distances_from(g: &BipartiteGraph, src: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[src] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn distance_by_index(g: &BipartiteGraph, u: usize, v: usize) -> Extent {
    match distances_from(g, u)[v] {
        Some(d) => Extent::Finite(d),
        None => Extent::Infinite,
    }
}

pub fn distance(g: &BipartiteGraph, u: VertexId, v: VertexId) -> Result<Extent, GraphError> {
    let (u, v) = (g.require(u)?, g.require(v)?);
    Ok(distance_by_index(g, u, v))
}

/// Length of a shortest cycle. Bipartite graphs only have even cycles, so
/// the result is even or infinite.
pub fn girth(g: &BipartiteGraph) -> Extent {
    let nv = g.vertex_count();
    let mut best: Option<usize> = None;
    for root in 0..nv {
        let mut dist = vec![usize::MAX; nv];
        let mut parent = vec![usize::MAX; nv];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best.map_or(Extent::Infinite, Extent::Finite)
}

/// Largest distance between two vertices; infinite when disconnected.
pub fn diameter(g: &BipartiteGraph) -> Extent {
    let mut best = 0;
    for v in 0..g.vertex_count() {
        for d in distances_from(g, v) {
            match d {
                Some(d) => best = best.max(d),
                None => return Extent::Infinite,
            }
        }
    }
    Extent::Finite(best)
}

/// First axiom that fails, in the order diameter, girth, valency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NgonViolation {
    /// Two vertices with no path between them.
    Disconnected { u: VertexId, v: VertexId },
    /// A pair at distance greater than `n`.
    TooFar {
        u: VertexId,
        v: VertexId,
        distance: usize,
    },
    /// Every pair is within distance `n - 1`.
    DiameterTooSmall { diameter: Extent },
    /// Girth differs from `2n`.
    WrongGirth { girth: Extent },
    /// Vertex of valency below 3 when thickness was requested.
    Thin { vertex: VertexId, degree: usize },
}

impl fmt::Display for NgonViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NgonViolation::Disconnected { u, v } => write!(f, "disconnected {u} {v}"),
            NgonViolation::TooFar { u, v, distance } => write!(f, "too_far {u} {v} {distance}"),
            NgonViolation::DiameterTooSmall { diameter } => {
                write!(f, "diameter_too_small {diameter}")
            }
            NgonViolation::WrongGirth { girth } => write!(f, "wrong_girth {girth}"),
            NgonViolation::Thin { vertex, degree } => write!(f, "thin {vertex} {degree}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NgonReport {
    pub holds: bool,
    pub violation: Option<NgonViolation>,
}

/// Checks diameter `n` and girth `2n`, plus valency at least 3 if `thick`.
pub fn is_generalized_ngon(g: &BipartiteGraph, thick: bool) -> NgonReport {
    let n = g.n();
    let fail = |v| NgonReport {
        holds: false,
        violation: Some(v),
    };
    let mut diam = 0;
    for u in 0..g.vertex_count() {
        for (v, d) in distances_from(g, u).into_iter().enumerate() {
            match d {
                None => {
                    return fail(NgonViolation::Disconnected {
                        u: g.id(u),
                        v: g.id(v),
                    })
                }
                Some(d) if d > n => {
                    return fail(NgonViolation::TooFar {
                        u: g.id(u),
                        v: g.id(v),
                        distance: d,
                    })
                }
                Some(d) => diam = diam.max(d),
            }
        }
    }
    if diam != n {
        return fail(NgonViolation::DiameterTooSmall {
            diameter: Extent::Finite(diam),
        });
    }
    let gi = girth(g);
    if gi != Extent::Finite(2 * n) {
        return fail(NgonViolation::WrongGirth { girth: gi });
    }
    if thick {
        if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) < 3) {
            return fail(NgonViolation::Thin {
                vertex: g.id(v),
                degree: g.degree(v),
            });
        }
    }
    NgonReport {
        holds: true,
        violation: None,
    }
}
