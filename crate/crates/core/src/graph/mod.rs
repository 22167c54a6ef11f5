//! Finite bipartite graphs with a mandatory two-part typing.
//!
//! Vertices carry opaque integer ids. Internally every vertex also has a
//! dense index, assigned in increasing id order, and all set-valued
//! computations run on [`VertexSet`] bitsets over those indices. Index order
//! therefore coincides with id order, which is what makes every "sorted by
//! vertex id" tie-break in this crate a plain index comparison.

mod cycles;
mod format;
mod metric;

use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;
use thiserror::Error;

pub use cycles::{enumerate_cycles, enumerate_ordered_cycles};
pub use format::{parse_document, write_document, GraphDocument, ParseError, ParseErrorKind};
pub use metric::{
    diameter, distance, distance_by_index, distances_from, girth, is_generalized_ngon, Extent,
    NgonReport, NgonViolation,
};

/// A set of vertex indices of some ambient graph.
pub type VertexSet = FixedBitSet;

/// Opaque vertex identifier as it appears in graph files.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The two vertex types of the incidence structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    Zero,
    One,
}

impl Part {
    pub fn other(self) -> Part {
        match self {
            Part::Zero => Part::One,
            Part::One => Part::Zero,
        }
    }

    pub fn from_index(i: u8) -> Option<Part> {
        match i {
            0 => Some(Part::Zero),
            1 => Some(Part::One),
            _ => None,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Part::Zero => 0,
            Part::One => 1,
        }
    }

    /// The part at odd distance `k` flips, even distance keeps.
    pub fn shifted(self, k: usize) -> Part {
        if k.is_multiple_of(2) {
            self
        } else {
            self.other()
        }
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("gonality parameter must be at least 3, got {0}")]
    InvalidGonality(usize),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(VertexId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("loop at vertex {0}")]
    Loop(VertexId),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("edge {0} {1} joins two vertices of part {2}")]
    SamePart(VertexId, VertexId, Part),
}

/// Accumulates vertices and edges, validating as it goes.
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    n: usize,
    vertices: HashMap<VertexId, Part>,
    edges: Vec<(VertexId, VertexId)>,
    edge_keys: std::collections::HashSet<(VertexId, VertexId)>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidGonality(n));
        }
        Ok(GraphBuilder {
            n,
            vertices: HashMap::new(),
            edges: Vec::new(),
            edge_keys: Default::default(),
        })
    }

    pub fn vertex(&mut self, id: VertexId, part: Part) -> Result<&mut Self, GraphError> {
        if self.vertices.contains_key(&id) {
            return Err(GraphError::DuplicateVertex(id));
        }
        self.vertices.insert(id, part);
        Ok(self)
    }

    pub fn has_vertex(&self, id: VertexId) -> bool {
        self.vertices.contains_key(&id)
    }

    pub fn edge(&mut self, a: VertexId, b: VertexId) -> Result<&mut Self, GraphError> {
        let pa = *self.vertices.get(&a).ok_or(GraphError::UnknownVertex(a))?;
        let pb = *self.vertices.get(&b).ok_or(GraphError::UnknownVertex(b))?;
        if a == b {
            return Err(GraphError::Loop(a));
        }
        if pa == pb {
            return Err(GraphError::SamePart(a, b, pa));
        }
        let key = (a.min(b), a.max(b));
        if !self.edge_keys.insert(key) {
            return Err(GraphError::DuplicateEdge(a, b));
        }
        self.edges.push(key);
        Ok(self)
    }

    pub fn build(&self) -> BipartiteGraph {
        let mut ids: Vec<VertexId> = self.vertices.keys().copied().collect();
        ids.sort_unstable();
        let index: HashMap<VertexId, usize> =
            ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
        let parts = ids.iter().map(|id| self.vertices[id]).collect();
        let nv = ids.len();
        let mut adj = vec![Vec::new(); nv];
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|(a, b)| {
                let (u, v) = (index[a], index[b]);
                (u.min(v), u.max(v))
            })
            .collect();
        edges.sort_unstable();
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let adj_bits = adj
            .iter()
            .map(|list| {
                let mut s = FixedBitSet::with_capacity(nv);
                for &w in list {
                    s.insert(w);
                }
                s
            })
            .collect();
        BipartiteGraph {
            n: self.n,
            ids,
            parts,
            index,
            adj,
            adj_bits,
            edges,
        }
    }
}

/// A finite simple bipartite graph together with the gonality parameter `n`.
///
/// Immutable once built.
#[derive(Debug, Clone)]
pub struct BipartiteGraph {
    n: usize,
    ids: Vec<VertexId>,
    parts: Vec<Part>,
    index: HashMap<VertexId, usize>,
    adj: Vec<Vec<usize>>,
    adj_bits: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
}

impl PartialEq for BipartiteGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.ids == other.ids
            && self.parts == other.parts
            && self.edges == other.edges
    }
}

impl Eq for BipartiteGraph {}

impl BipartiteGraph {
    pub fn builder(n: usize) -> Result<GraphBuilder, GraphError> {
        GraphBuilder::new(n)
    }

    /// Builds a graph from id/part pairs and id edges in one go.
    pub fn from_parts(
        n: usize,
        vertices: &[(u32, Part)],
        edges: &[(u32, u32)],
    ) -> Result<Self, GraphError> {
        let mut b = GraphBuilder::new(n)?;
        for &(id, p) in vertices {
            b.vertex(VertexId(id), p)?;
        }
        for &(x, y) in edges {
            b.edge(VertexId(x), VertexId(y))?;
        }
        Ok(b.build())
    }

    /// Same vertices and edges with a different gonality parameter.
    pub fn with_gonality(&self, n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidGonality(n));
        }
        let mut g = self.clone();
        g.n = n;
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn ids(&self) -> &[VertexId] {
        &self.ids
    }

    pub fn id(&self, v: usize) -> VertexId {
        self.ids[v]
    }

    pub fn index_of(&self, id: VertexId) -> Option<usize> {
        self.index.get(&id).copied()
    }

    pub fn require(&self, id: VertexId) -> Result<usize, GraphError> {
        self.index_of(id).ok_or(GraphError::UnknownVertex(id))
    }

    pub fn part(&self, v: usize) -> Part {
        self.parts[v]
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn neighbor_set(&self, v: usize) -> &VertexSet {
        &self.adj_bits[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj_bits[u].contains(v)
    }

    /// Edges as index pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn max_id(&self) -> Option<VertexId> {
        self.ids.last().copied()
    }

    pub fn empty_set(&self) -> VertexSet {
        FixedBitSet::with_capacity(self.vertex_count())
    }

    pub fn full_set(&self) -> VertexSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    pub fn set_of(&self, indices: impl IntoIterator<Item = usize>) -> VertexSet {
        let mut s = self.empty_set();
        for v in indices {
            s.insert(v);
        }
        s
    }

    pub fn set_from_ids(&self, ids: &[VertexId]) -> Result<VertexSet, GraphError> {
        let mut s = self.empty_set();
        for &id in ids {
            s.insert(self.require(id)?);
        }
        Ok(s)
    }

    pub fn ids_of(&self, set: &VertexSet) -> Vec<VertexId> {
        set.ones().map(|v| self.ids[v]).collect()
    }

    /// Number of edges with both ends in `set`.
    pub fn edges_within(&self, set: &VertexSet) -> usize {
        let twice: usize = set
            .ones()
            .map(|v| self.adj_bits[v].intersection_count(set))
            .sum();
        twice / 2
    }

    /// Number of edges with one end in `a` and the other in `b`; the sets
    /// are expected to be disjoint.
    pub fn edges_between(&self, a: &VertexSet, b: &VertexSet) -> usize {
        a.ones()
            .map(|v| self.adj_bits[v].intersection_count(b))
            .sum()
    }

    /// Number of neighbours of `v` inside `set`.
    pub fn degree_into(&self, v: usize, set: &VertexSet) -> usize {
        self.adj_bits[v].intersection_count(set)
    }

    /// All vertices outside `set` with a neighbour in it.
    pub fn boundary(&self, set: &VertexSet) -> VertexSet {
        let mut out = self.empty_set();
        for v in set.ones() {
            out.union_with(&self.adj_bits[v]);
        }
        out.difference_with(set);
        out
    }

    /// The induced subgraph on `set`, keeping vertex ids.
    pub fn induced(&self, set: &VertexSet) -> BipartiteGraph {
        let mut b = GraphBuilder::new(self.n).expect("n already validated");
        for v in set.ones() {
            b.vertex(self.ids[v], self.parts[v])
                .expect("ids are unique");
        }
        for &(u, v) in &self.edges {
            if set.contains(u) && set.contains(v) {
                b.edge(self.ids[u], self.ids[v]).expect("edge is valid");
            }
        }
        b.build()
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.component_of(0).count_ones(..) == self.vertex_count()
    }

    /// Vertices reachable from `v`.
    pub fn component_of(&self, v: usize) -> VertexSet {
        let mut seen = self.empty_set();
        let mut stack = vec![v];
        seen.insert(v);
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen.put(w) {
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Whether the subgraph induced on `set` is connected (empty counts as
    /// connected).
    pub fn is_connected_within(&self, set: &VertexSet) -> bool {
        let Some(start) = set.ones().next() else {
            return true;
        };
        let mut seen = self.empty_set();
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if set.contains(w) && !seen.put(w) {
                    stack.push(w);
                }
            }
        }
        seen.count_ones(..) == set.count_ones(..)
    }
}

/// A subset of the vertices of a particular ambient graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSubset<'g> {
    graph: &'g BipartiteGraph,
    members: VertexSet,
}

impl<'g> VertexSubset<'g> {
    pub fn from_ids(graph: &'g BipartiteGraph, ids: &[VertexId]) -> Result<Self, GraphError> {
        Ok(VertexSubset {
            graph,
            members: graph.set_from_ids(ids)?,
        })
    }

    /// Wraps an index set. Panics if the set was sized for another graph.
    pub fn from_set(graph: &'g BipartiteGraph, members: VertexSet) -> Self {
        assert_eq!(
            members.len(),
            graph.vertex_count(),
            "set sized for another graph"
        );
        VertexSubset { graph, members }
    }

    pub fn empty(graph: &'g BipartiteGraph) -> Self {
        VertexSubset {
            graph,
            members: graph.empty_set(),
        }
    }

    pub fn all(graph: &'g BipartiteGraph) -> Self {
        VertexSubset {
            graph,
            members: graph.full_set(),
        }
    }

    pub fn graph(&self) -> &'g BipartiteGraph {
        self.graph
    }

    pub fn members(&self) -> &VertexSet {
        &self.members
    }

    pub fn into_members(self) -> VertexSet {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_clear()
    }

    pub fn contains(&self, id: VertexId) -> bool {
        self.graph
            .index_of(id)
            .is_some_and(|v| self.members.contains(v))
    }

    pub fn ids(&self) -> Vec<VertexId> {
        self.graph.ids_of(&self.members)
    }

    pub fn union(&self, other: &VertexSubset<'_>) -> VertexSubset<'g> {
        let mut m = self.members.clone();
        m.union_with(&other.members);
        VertexSubset {
            graph: self.graph,
            members: m,
        }
    }

    pub fn is_subset(&self, other: &VertexSubset<'_>) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_disjoint(&self, other: &VertexSubset<'_>) -> bool {
        self.members.is_disjoint(&other.members)
    }
}

impl fmt::Display for VertexSubset<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, id) in self.ids().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{id}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> BipartiteGraph {
        BipartiteGraph::from_parts(
            3,
            &[(10, Part::Zero), (11, Part::One), (12, Part::Zero)],
            &[(10, 11), (12, 11)],
        )
        .unwrap()
    }

    #[test]
    fn builder_rejects_malformed_input() {
        assert_eq!(
            GraphBuilder::new(2).unwrap_err(),
            GraphError::InvalidGonality(2)
        );
        let mut b = GraphBuilder::new(3).unwrap();
        b.vertex(VertexId(1), Part::Zero).unwrap();
        b.vertex(VertexId(2), Part::Zero).unwrap();
        b.vertex(VertexId(3), Part::One).unwrap();
        assert!(matches!(
            b.vertex(VertexId(1), Part::One),
            Err(GraphError::DuplicateVertex(_))
        ));
        assert!(matches!(
            b.edge(VertexId(1), VertexId(2)),
            Err(GraphError::SamePart(..))
        ));
        assert!(matches!(
            b.edge(VertexId(1), VertexId(1)),
            Err(GraphError::Loop(_))
        ));
        assert!(matches!(
            b.edge(VertexId(1), VertexId(9)),
            Err(GraphError::UnknownVertex(_))
        ));
        b.edge(VertexId(1), VertexId(3)).unwrap();
        assert!(matches!(
            b.edge(VertexId(3), VertexId(1)),
            Err(GraphError::DuplicateEdge(..))
        ));
    }

    #[test]
    fn indices_follow_id_order() {
        let g = path3();
        assert_eq!(g.ids(), &[VertexId(10), VertexId(11), VertexId(12)]);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert!(g.adjacent(1, 2));
        assert!(!g.adjacent(0, 2));
    }

    #[test]
    fn edge_counts() {
        let g = path3();
        let ends = g.set_of([0, 2]);
        let mid = g.set_of([1]);
        assert_eq!(g.edges_within(&g.full_set()), 2);
        assert_eq!(g.edges_within(&ends), 0);
        assert_eq!(g.edges_between(&ends, &mid), 2);
        assert_eq!(g.boundary(&mid), ends);
        assert!(!g.is_connected_within(&ends));
        assert!(g.is_connected());
    }

    #[test]
    fn induced_keeps_ids() {
        let g = path3();
        let h = g.induced(&g.set_of([0, 1]));
        assert_eq!(h.ids(), &[VertexId(10), VertexId(11)]);
        assert_eq!(h.edge_count(), 1);
    }
}
