//! The μ-function and membership in the amalgamation class `K^μ`.
//!
//! A finite graph is a member when
//! 1. it has no cycle of length `2m` with `m < n`,
//! 2. every vertex set containing a cycle longer than `2n` has `δ ≥ 2n+2`,
//! 3. over every base `A`, each 0-minimally algebraic body `B` has at most
//!    `μ(A, B)` copies.
//!
//! Conditions 2 and 3 quantify over unboundedly large configurations, so
//! they are checked up to a cycle-length horizon and a body-size cap. Both
//! horizons are carried in every [`KmuReport`].

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::graph::{enumerate_cycles, BipartiteGraph, GraphBuilder, Part, VertexId, VertexSet};
use crate::predim::{delta, min_superset};
use crate::zero_alg::{default_body_cap, enumerate_zero_min_pairs, is_zero_minimally_algebraic};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MuError {
    #[error("line {0}: {1}")]
    Syntax(usize, String),
    #[error("μ file is for n = {file}, graph has n = {graph}")]
    GonalityMismatch { file: usize, graph: usize },
    #[error("rule body is not 0-minimally algebraic over its base")]
    NotMinimallyAlgebraic,
    #[error("the path configuration always has μ = 1")]
    PathRule,
    #[error("rule value {value} is below the admissible minimum {min}")]
    BelowMinimum { value: u64, min: u64 },
    #[error("two rules for isomorphic pairs")]
    DuplicateRule,
}

/// The isomorphism type of a pair: a small graph on `base` vertices
/// `0..base_len` followed by the body.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairShape {
    graph: BipartiteGraph,
    base_len: usize,
}

impl PairShape {
    pub fn from_pair(g: &BipartiteGraph, base: &VertexSet, body: &VertexSet) -> Self {
        let order: Vec<usize> = base.ones().chain(body.ones()).collect();
        let parts: Vec<Part> = order.iter().map(|&v| g.part(v)).collect();
        let mut edges = Vec::new();
        for (i, &u) in order.iter().enumerate() {
            for (j, &v) in order.iter().enumerate().skip(i + 1) {
                if g.adjacent(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Self::build(g.n(), base.count_ones(..), &parts, &edges).expect("induced from a valid graph")
    }

    fn build(
        n: usize,
        base_len: usize,
        parts: &[Part],
        edges: &[(usize, usize)],
    ) -> Result<Self, String> {
        let mut b = GraphBuilder::new(n).map_err(|e| e.to_string())?;
        for (i, &p) in parts.iter().enumerate() {
            b.vertex(VertexId(i as u32), p).map_err(|e| e.to_string())?;
        }
        for &(x, y) in edges {
            b.edge(VertexId(x as u32), VertexId(y as u32))
                .map_err(|e| e.to_string())?;
        }
        Ok(PairShape {
            graph: b.build(),
            base_len,
        })
    }

    pub fn graph(&self) -> &BipartiteGraph {
        &self.graph
    }

    pub fn base_set(&self) -> VertexSet {
        self.graph.set_of(0..self.base_len)
    }

    pub fn body_set(&self) -> VertexSet {
        self.graph.set_of(self.base_len..self.graph.vertex_count())
    }

    pub fn base_delta(&self) -> i64 {
        delta(&self.graph, &self.base_set())
    }

    /// `A = {a, b}` and `A ∪ B` a simple path of length `n-1` with end
    /// points `a, b`.
    pub fn is_path_configuration(&self) -> bool {
        let g = &self.graph;
        let n = g.n();
        if self.base_len != 2 || g.vertex_count() != n || g.edge_count() != n - 1 {
            return false;
        }
        let ends_ok = g.degree(0) == 1 && g.degree(1) == 1;
        let inner_ok = (2..g.vertex_count()).all(|v| g.degree(v) == 2);
        ends_ok && inner_ok && g.is_connected()
    }

    /// Isomorphism preserving parts and mapping base onto base.
    pub fn is_isomorphic(&self, other: &PairShape) -> bool {
        let (g, h) = (&self.graph, &other.graph);
        if self.base_len != other.base_len
            || g.vertex_count() != h.vertex_count()
            || g.edge_count() != h.edge_count()
        {
            return false;
        }
        let signature =
            |s: &PairShape, v: usize| (v < s.base_len, s.graph.part(v), s.graph.degree(v));
        let mut sg: Vec<_> = (0..g.vertex_count()).map(|v| signature(self, v)).collect();
        let mut sh: Vec<_> = (0..h.vertex_count()).map(|v| signature(other, v)).collect();
        sg.sort();
        sh.sort();
        if sg != sh {
            return false;
        }
        let order = search_order(g);
        let mut map = vec![usize::MAX; g.vertex_count()];
        let mut used = vec![false; h.vertex_count()];
        extend_iso(self, other, &order, 0, &mut map, &mut used)
    }

    /// `mu-rule` line encoding (without the value).
    fn encode(&self) -> String {
        let parts = |r: std::ops::Range<usize>| -> String {
            r.map(|v| char::from(b'0' + self.graph.part(v).index()))
                .collect()
        };
        let edges: Vec<String> = self
            .graph
            .edges()
            .iter()
            .map(|(u, v)| format!("{u}-{v}"))
            .collect();
        format!(
            "base={} body={} edges={}",
            parts(0..self.base_len),
            parts(self.base_len..self.graph.vertex_count()),
            if edges.is_empty() {
                "-".to_string()
            } else {
                edges.join(",")
            }
        )
    }
}

/// BFS order so that each vertex after the first of its component has an
/// already-placed neighbour.
fn search_order(g: &BipartiteGraph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.vertex_count());
    let mut seen = vec![false; g.vertex_count()];
    for s in 0..g.vertex_count() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut i = order.len();
        order.push(s);
        while i < order.len() {
            let u = order[i];
            i += 1;
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

fn extend_iso(
    a: &PairShape,
    b: &PairShape,
    order: &[usize],
    k: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if k == order.len() {
        return true;
    }
    let (g, h) = (&a.graph, &b.graph);
    let v = order[k];
    let in_base = v < a.base_len;
    for w in 0..h.vertex_count() {
        if used[w]
            || (w < b.base_len) != in_base
            || h.part(w) != g.part(v)
            || h.degree(w) != g.degree(v)
        {
            continue;
        }
        let consistent = order[..k]
            .iter()
            .all(|&u| g.adjacent(u, v) == h.adjacent(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend_iso(a, b, order, k + 1, map, used) {
            return true;
        }
        used[w] = false;
    }
    map[v] = usize::MAX;
    false
}

/// Bound on copy counts, keyed by isomorphism type of the pair.
///
/// The path configuration always gets 1. Explicit rules give other values;
/// everything else falls back to `max(δ(A), n) + offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuFunction {
    n: usize,
    rules: Vec<(PairShape, u64)>,
    offset: u64,
}

impl MuFunction {
    /// The least admissible μ: 1 on the path configuration and
    /// `max(δ(A), n)` elsewhere.
    pub fn default_mu(n: usize) -> Self {
        MuFunction {
            n,
            rules: Vec::new(),
            offset: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn with_offset(mut self, offset: u64) -> Self {
        self.offset = offset;
        self
    }

    /// Adds a rule, checking that it is admissible.
    pub fn with_rule(mut self, shape: PairShape, value: u64) -> Result<Self, MuError> {
        let g = shape.graph();
        if !is_zero_minimally_algebraic(g, &shape.base_set(), &shape.body_set()).unwrap_or(false) {
            return Err(MuError::NotMinimallyAlgebraic);
        }
        if shape.is_path_configuration() {
            return Err(MuError::PathRule);
        }
        let min = Self::minimum(self.n, &shape);
        if value < min {
            return Err(MuError::BelowMinimum { value, min });
        }
        if self.rules.iter().any(|(s, _)| s.is_isomorphic(&shape)) {
            return Err(MuError::DuplicateRule);
        }
        self.rules.push((shape, value));
        Ok(self)
    }

    fn minimum(n: usize, shape: &PairShape) -> u64 {
        shape.base_delta().max(n as i64).max(0) as u64
    }

    pub fn value_of_shape(&self, shape: &PairShape) -> u64 {
        if shape.is_path_configuration() {
            return 1;
        }
        if let Some((_, v)) = self.rules.iter().find(|(s, _)| s.is_isomorphic(shape)) {
            return *v;
        }
        Self::minimum(self.n, shape) + self.offset
    }

    pub fn value(&self, g: &BipartiteGraph, base: &VertexSet, body: &VertexSet) -> u64 {
        self.value_of_shape(&PairShape::from_pair(g, base, body))
    }

    /// `mu-fallback` and `mu-rule` lines, as embedded in graph files.
    pub fn to_lines(&self) -> Vec<String> {
        let mut out = vec![format!("mu-fallback {}", self.offset)];
        for (shape, v) in &self.rules {
            out.push(format!("mu-rule {v} {}", shape.encode()));
        }
        out
    }

    /// Standalone μ file: a `mu <n>` header followed by [`Self::to_lines`].
    pub fn to_text(&self) -> String {
        let mut s = format!("mu {}\n", self.n);
        for l in self.to_lines() {
            s.push_str(&l);
            s.push('\n');
        }
        s
    }

    /// Parses `mu-*` lines for gonality `n`.
    pub fn from_lines<'a>(
        n: usize,
        lines: impl IntoIterator<Item = &'a str>,
    ) -> Result<Self, MuError> {
        let mut mu = MuFunction::default_mu(n);
        let mut seen_fallback = false;
        for (i, line) in lines.into_iter().enumerate() {
            let err = |m: &str| MuError::Syntax(i + 1, m.to_string());
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks.first().copied() {
                Some("mu-fallback") => {
                    if seen_fallback {
                        return Err(err("fallback declared twice"));
                    }
                    seen_fallback = true;
                    if toks.len() != 2 {
                        return Err(err("expected `mu-fallback <offset>`"));
                    }
                    mu.offset = toks[1].parse().map_err(|_| err("bad offset"))?;
                }
                Some("mu-rule") => {
                    if toks.len() != 5 {
                        return Err(err("expected `mu-rule <value> base=.. body=.. edges=..`"));
                    }
                    let value: u64 = toks[1].parse().map_err(|_| err("bad value"))?;
                    let field = |t: &str, key: &str| -> Result<String, MuError> {
                        t.strip_prefix(key)
                            .map(str::to_string)
                            .ok_or_else(|| err(&format!("expected `{key}`")))
                    };
                    let base = field(toks[2], "base=")?;
                    let body = field(toks[3], "body=")?;
                    let edges = field(toks[4], "edges=")?;
                    let mut parts = Vec::new();
                    for c in base.chars().chain(body.chars()) {
                        parts.push(match c {
                            '0' => Part::Zero,
                            '1' => Part::One,
                            _ => return Err(err("parts must be 0 or 1")),
                        });
                    }
                    let mut elist = Vec::new();
                    if edges != "-" {
                        for e in edges.split(',') {
                            let (x, y) = e.split_once('-').ok_or_else(|| err("bad edge"))?;
                            let x: usize = x.parse().map_err(|_| err("bad edge"))?;
                            let y: usize = y.parse().map_err(|_| err("bad edge"))?;
                            if x >= parts.len() || y >= parts.len() {
                                return Err(err("edge endpoint out of range"));
                            }
                            elist.push((x, y));
                        }
                    }
                    let shape =
                        PairShape::build(n, base.len(), &parts, &elist).map_err(|m| err(&m))?;
                    mu = mu.with_rule(shape, value)?;
                }
                _ => return Err(err("expected a `mu-` line")),
            }
        }
        Ok(mu)
    }

    pub fn parse(text: &str) -> Result<Self, MuError> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap().trim())
            .filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or(MuError::Syntax(1, "missing `mu <n>` header".into()))?;
        let n = header
            .strip_prefix("mu ")
            .and_then(|s| s.trim().parse::<usize>().ok())
            .filter(|&n| n >= 3)
            .ok_or(MuError::Syntax(1, "expected `mu <n>` with n >= 3".into()))?;
        Self::from_lines(n, lines)
    }
}

/// Number of distinct vertex sets `B*` outside `base` such that
/// `(base, B*)` is isomorphic to `(base, body)` over `base`, i.e. by a map
/// fixing the base pointwise. Induced structure and parts are preserved.
pub fn count_copies(g: &BipartiteGraph, base: &VertexSet, body: &VertexSet) -> usize {
    copies(g, base, body).len()
}

pub(crate) fn copies(
    g: &BipartiteGraph,
    base: &VertexSet,
    body: &VertexSet,
) -> BTreeSet<Vec<usize>> {
    // Place body vertices anchored to the base first, then BFS outward.
    let mut order: Vec<usize> = Vec::new();
    let mut placed = g.empty_set();
    let mut frontier: Vec<usize> = body
        .ones()
        .filter(|&v| g.degree_into(v, base) > 0)
        .collect();
    if frontier.is_empty() {
        frontier.extend(body.ones().next());
    }
    while order.len() < body.count_ones(..) {
        if frontier.is_empty() {
            frontier.extend(body.ones().find(|&v| !placed.contains(v)));
        }
        let v = frontier.remove(0);
        if placed.put(v) {
            continue;
        }
        order.push(v);
        for &w in g.neighbors(v) {
            if body.contains(w) && !placed.contains(w) {
                frontier.push(w);
            }
        }
    }
    let mut found = BTreeSet::new();
    let mut map = vec![usize::MAX; g.vertex_count()];
    let mut used = base.clone();
    embed(g, base, &order, 0, &mut map, &mut used, &mut found);
    found
}

fn embed(
    g: &BipartiteGraph,
    base: &VertexSet,
    order: &[usize],
    k: usize,
    map: &mut [usize],
    used: &mut VertexSet,
    found: &mut BTreeSet<Vec<usize>>,
) {
    if k == order.len() {
        let mut img: Vec<usize> = order.iter().map(|&v| map[v]).collect();
        img.sort_unstable();
        found.insert(img);
        return;
    }
    let v = order[k];
    // Candidates come from the neighbourhood of something already fixed.
    let anchor = g
        .neighbors(v)
        .iter()
        .copied()
        .find(|&u| base.contains(u) || order[..k].contains(&u));
    let candidates: Vec<usize> = match anchor {
        Some(u) => {
            let img = if base.contains(u) { u } else { map[u] };
            g.neighbors(img).to_vec()
        }
        None => (0..g.vertex_count()).collect(),
    };
    for w in candidates {
        if used.contains(w)
            || g.part(w) != g.part(v)
            || g.degree_into(w, base) != g.degree_into(v, base)
        {
            continue;
        }
        let base_ok = g
            .neighbor_set(v)
            .intersection(base)
            .eq(g.neighbor_set(w).intersection(base));
        if !base_ok {
            continue;
        }
        let inner_ok = order[..k]
            .iter()
            .all(|&u| g.adjacent(u, v) == g.adjacent(map[u], w));
        if !inner_ok {
            continue;
        }
        map[v] = w;
        used.insert(w);
        embed(g, base, order, k + 1, map, used, found);
        used.set(w, false);
        map[v] = usize::MAX;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    ShortCycle,
    LongCycleLowDelta,
    MuExceeded,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::ShortCycle => "short_cycle",
            Condition::LongCycleLowDelta => "long_cycle_low_delta",
            Condition::MuExceeded => "mu_exceeded",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Witness {
    /// Cycle in traversal order.
    Cycle(Vec<VertexId>),
    /// A vertex set containing a long cycle.
    Set {
        set: Vec<VertexId>,
        cycle: Vec<VertexId>,
    },
    /// A base with all copies of one body over it.
    Copies {
        base: Vec<VertexId>,
        bodies: Vec<Vec<VertexId>>,
    },
}

fn join(ids: &[VertexId]) -> String {
    ids.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Cycle(c) => f.write_str(&join(c)),
            Witness::Set { set, .. } => f.write_str(&join(set)),
            Witness::Copies { base, bodies } => {
                f.write_str(&join(base))?;
                for b in bodies {
                    write!(f, "/{}", join(b))?;
                }
                Ok(())
            }
        }
    }
}

/// One failed condition with the measured value and the bound it broke.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ViolationReport {
    pub condition: Condition,
    pub witness: Witness,
    pub value: i64,
    pub bound: i64,
}

impl fmt::Display for ViolationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "VIOLATION {} {} {} {}",
            self.condition, self.witness, self.value, self.bound
        )
    }
}

impl ViolationReport {
    /// Recomputes the violation from the witness alone.
    pub fn is_genuine(&self, g: &BipartiteGraph, mu: &MuFunction) -> bool {
        let n = g.n() as i64;
        let idx = |ids: &[VertexId]| -> Option<Vec<usize>> {
            ids.iter().map(|&i| g.index_of(i)).collect()
        };
        let is_cycle = |c: &[usize]| {
            let k = c.len();
            k >= 4
                && c.iter().collect::<HashSet<_>>().len() == k
                && (0..k).all(|i| g.adjacent(c[i], c[(i + 1) % k]))
        };
        match (&self.condition, &self.witness) {
            (Condition::ShortCycle, Witness::Cycle(c)) => {
                let Some(c) = idx(c) else { return false };
                is_cycle(&c) && (c.len() as i64) < 2 * n && self.value == c.len() as i64
            }
            (Condition::LongCycleLowDelta, Witness::Set { set, cycle }) => {
                let (Some(s), Some(c)) = (idx(set), idx(cycle)) else {
                    return false;
                };
                let s = g.set_of(s);
                is_cycle(&c)
                    && c.len() as i64 > 2 * n
                    && c.iter().all(|&v| s.contains(v))
                    && delta(g, &s) == self.value
                    && self.value < 2 * n + 2
            }
            (Condition::MuExceeded, Witness::Copies { base, bodies }) => {
                let Some(a) = idx(base) else { return false };
                let a = g.set_of(a);
                let Some(first) = bodies.first().and_then(|b| idx(b)) else {
                    return false;
                };
                let b = g.set_of(first);
                let bound = mu.value(g, &a, &b) as i64;
                let count = count_copies(g, &a, &b) as i64;
                is_zero_minimally_algebraic(g, &a, &b).unwrap_or(false)
                    && count == self.value
                    && bound == self.bound
                    && count > bound
            }
            _ => false,
        }
    }
}

/// Search horizons for the unbounded conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KmuOptions {
    /// Longest cycle length examined for condition 2.
    pub horizon: usize,
    /// Largest body examined for condition 3.
    pub body_cap: usize,
}

impl KmuOptions {
    pub fn for_n(n: usize) -> Self {
        KmuOptions {
            horizon: 2 * n + 6,
            body_cap: default_body_cap(n),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KmuReport {
    pub member: bool,
    pub violations: Vec<ViolationReport>,
    pub options: KmuOptions,
}

/// Decides membership in `K^μ` within the given horizons, collecting every
/// violation found.
pub fn in_class(g: &BipartiteGraph, mu: &MuFunction, opts: KmuOptions) -> KmuReport {
    let mut violations = short_cycles(g);
    violations.extend(low_delta_long_cycles(g, opts.horizon));
    violations.extend(mu_violations(g, mu, opts.body_cap));
    KmuReport {
        member: violations.is_empty(),
        violations,
        options: opts,
    }
}

pub fn short_cycles(g: &BipartiteGraph) -> Vec<ViolationReport> {
    let n = g.n();
    let mut out = Vec::new();
    for m in 2..n {
        for c in enumerate_cycles(g, 2 * m) {
            out.push(ViolationReport {
                condition: Condition::ShortCycle,
                witness: Witness::Cycle(c.iter().map(|&v| g.id(v)).collect()),
                value: (2 * m) as i64,
                bound: (2 * n) as i64,
            });
        }
    }
    out
}

pub fn low_delta_long_cycles(g: &BipartiteGraph, horizon: usize) -> Vec<ViolationReport> {
    let n = g.n();
    let full = g.full_set();
    let bound = 2 * n as i64 + 2;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut len = 2 * n + 2;
    while len <= horizon {
        for c in enumerate_cycles(g, len) {
            let (val, set) = min_superset(g, &full, &g.set_of(c.iter().copied()));
            if val < bound && seen.insert(set.clone()) {
                out.push(ViolationReport {
                    condition: Condition::LongCycleLowDelta,
                    witness: Witness::Set {
                        set: g.ids_of(&set),
                        cycle: c.iter().map(|&v| g.id(v)).collect(),
                    },
                    value: val,
                    bound,
                });
            }
        }
        len += 2;
    }
    out
}

pub fn mu_violations(g: &BipartiteGraph, mu: &MuFunction, body_cap: usize) -> Vec<ViolationReport> {
    let pairs = enumerate_zero_min_pairs(g, body_cap).pairs;
    let mut done: HashMap<VertexSet, Vec<VertexSet>> = HashMap::new();
    let mut out = Vec::new();
    for p in pairs {
        let reported = done.entry(p.base.clone()).or_default();
        if reported.contains(&p.body) {
            continue;
        }
        let found = copies(g, &p.base, &p.body);
        let bound = mu.value(g, &p.base, &p.body);
        for b in &found {
            reported.push(g.set_of(b.iter().copied()));
        }
        if found.len() as u64 > bound {
            out.push(ViolationReport {
                condition: Condition::MuExceeded,
                witness: Witness::Copies {
                    base: g.ids_of(&p.base),
                    bodies: found
                        .iter()
                        .map(|b| b.iter().map(|&v| g.id(v)).collect())
                        .collect(),
                },
                value: found.len() as i64,
                bound: bound as i64,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::{make_cycle, make_path};

    fn double_path(n: usize) -> BipartiteGraph {
        crate::witness::make_double_path(n).unwrap().graph
    }

    #[test]
    fn default_mu_values() {
        for n in 3..=6 {
            let mu = MuFunction::default_mu(n);
            let doc = make_path(n, n - 1).unwrap();
            let g = &doc.graph;
            assert_eq!(
                mu.value(
                    g,
                    doc.subset("endpoints").unwrap(),
                    doc.subset("interior").unwrap()
                ),
                1
            );
        }
    }

    #[test]
    fn copies_of_double_path() {
        for n in 3..=6 {
            let g = double_path(n);
            let base = g.set_of([0, 1]);
            let body: Vec<usize> = (2..2 + (n - 2)).collect();
            assert_eq!(count_copies(&g, &base, &g.set_of(body)), 2);
            let single = make_path(n, n - 1).unwrap();
            let sg = &single.graph;
            assert_eq!(
                count_copies(
                    sg,
                    single.subset("endpoints").unwrap(),
                    single.subset("interior").unwrap()
                ),
                1
            );
        }
    }

    #[test]
    fn double_path_fails_conditions_one_and_three() {
        for n in 3..=5 {
            let g = double_path(n);
            let mu = MuFunction::default_mu(n);
            let rep = in_class(&g, &mu, KmuOptions::for_n(n));
            assert!(!rep.member);
            let conds: BTreeSet<Condition> = rep.violations.iter().map(|v| v.condition).collect();
            assert!(conds.contains(&Condition::ShortCycle));
            assert!(conds.contains(&Condition::MuExceeded));
            for v in &rep.violations {
                assert!(v.is_genuine(&g, &mu), "{v}");
            }
        }
    }

    #[test]
    fn long_cycle_accepted_short_cycle_rejected() {
        for n in 3..=5 {
            let mu = MuFunction::default_mu(n);
            let ok = make_cycle(n, 2 * n + 2).unwrap();
            assert!(in_class(&ok.graph, &mu, KmuOptions::for_n(n)).member);
            let bad = make_cycle(n, 2 * n - 2).unwrap();
            let rep = in_class(&bad.graph, &mu, KmuOptions::for_n(n));
            assert!(!rep.member);
            assert_eq!(rep.violations[0].condition, Condition::ShortCycle);
        }
    }

    #[test]
    fn spoked_cycle_is_member_with_one_copy() {
        // larger windings for n > 3 take minutes at the default body cap
        for (n, l) in [(3, 2), (3, 3), (3, 4), (4, 2), (5, 2)] {
            {
                let doc = crate::witness::make_cl_witness(n, l, false).unwrap();
                let g = &doc.graph;
                let (a0, c) = (doc.subset("A0").unwrap(), doc.subset("C").unwrap());
                assert_eq!(count_copies(g, a0, c), 1);
                let rep = in_class(g, &MuFunction::default_mu(n), KmuOptions::for_n(n));
                assert!(rep.member, "n={n} l={l}: {:?}", rep.violations);
            }
        }
    }

    #[test]
    fn condition_one_matches_girth() {
        use crate::graph::{girth, Extent};
        for n in 3..=5 {
            for len in (4..=2 * n + 2).step_by(2) {
                let g = make_cycle(n, len).unwrap().graph;
                let short_free = short_cycles(&g).is_empty();
                let girth_ok = matches!(girth(&g), Extent::Finite(x) if x >= 2 * n);
                assert_eq!(short_free, girth_ok);
            }
        }
    }

    #[test]
    fn mu_text_round_trip_and_validation() {
        let n = 3;
        let doc = crate::witness::make_cl_witness(n, 2, false).unwrap();
        let shape = PairShape::from_pair(
            &doc.graph,
            doc.subset("A0").unwrap(),
            doc.subset("C").unwrap(),
        );
        assert!(matches!(
            MuFunction::default_mu(n).with_rule(shape.clone(), 3),
            Err(MuError::BelowMinimum { value: 3, min: 8 })
        ));
        let mu = MuFunction::default_mu(n)
            .with_offset(2)
            .with_rule(shape.clone(), 9)
            .unwrap();
        assert_eq!(mu.value_of_shape(&shape), 9);
        let again = MuFunction::parse(&mu.to_text()).unwrap();
        assert_eq!(again.to_text(), mu.to_text());
        assert_eq!(again.value_of_shape(&shape), 9);
        assert!(matches!(
            mu.clone().with_rule(shape, 10),
            Err(MuError::DuplicateRule)
        ));
        let path = make_path(n, n - 1).unwrap();
        let pshape = PairShape::from_pair(
            &path.graph,
            path.subset("endpoints").unwrap(),
            path.subset("interior").unwrap(),
        );
        assert_eq!(
            MuFunction::default_mu(n).with_rule(pshape, 5),
            Err(MuError::PathRule)
        );
        assert!(MuFunction::parse("mu 3\nmu-rule x\n").is_err());
        assert!(MuFunction::parse("nope\n").is_err());
    }

    #[test]
    fn shape_isomorphism_respects_base() {
        let doc = make_path(4, 3).unwrap();
        let g = &doc.graph;
        let a = PairShape::from_pair(g, &g.set_of([0, 3]), &g.set_of([1, 2]));
        let b = PairShape::from_pair(g, &g.set_of([0, 3]), &g.set_of([2, 1]));
        let c = PairShape::from_pair(g, &g.set_of([0, 1]), &g.set_of([2, 3]));
        assert!(a.is_isomorphic(&b));
        assert!(!a.is_isomorphic(&c));
        assert!(a.is_path_configuration());
        assert!(!c.is_path_configuration());
    }
}
