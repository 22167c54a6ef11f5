//! Free amalgamation over strong subsets, and a seeded growth loop that
//! keeps every intermediate graph inside `K^μ`.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{distances_from, BipartiteGraph, GraphBuilder, VertexId, VertexSet};
use crate::kmu::{in_class, KmuOptions, MuFunction, ViolationReport};
use crate::predim::is_strong;
use crate::witness::{make_cl_witness, make_cycle, make_path};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AmalgamError {
    #[error("gonality differs: ambient n = {ambient}, extension n = {extension}")]
    GonalityMismatch { ambient: usize, extension: usize },
    #[error("vertex {0} is not in the extension")]
    UnknownInExtension(VertexId),
    #[error("vertex {0} is not in the ambient graph")]
    UnknownInAmbient(VertexId),
    #[error("gluing is not injective")]
    NotInjective,
    #[error("gluing maps {0} to {1}, which lies in the other part")]
    PartMismatch(VertexId, VertexId),
    #[error("gluing is not an induced isomorphism at {0}, {1}")]
    NotInduced(VertexId, VertexId),
    #[error("base is not strong in the extension (violating set {0:?})")]
    BaseNotStrong(Vec<VertexId>),
}

/// The result of gluing an extension `E` onto `M` over a common base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmalgamStep {
    /// Base vertices, as ids of `M`.
    pub base: Vec<VertexId>,
    /// `(extension id, ambient id)` for each base vertex.
    pub gluing: Vec<(VertexId, VertexId)>,
    pub result: BipartiteGraph,
    /// Where each extension vertex ended up in the result.
    pub image: BTreeMap<VertexId, VertexId>,
}

/// Disjoint union of `m` and `e` glued along `gluing`, with no edges added
/// between the two sides. Extension vertices outside the base get fresh ids
/// above the largest id of `m`, in increasing order of their old ids.
pub fn free_amalgam(
    m: &BipartiteGraph,
    e: &BipartiteGraph,
    gluing: &[(VertexId, VertexId)],
) -> Result<AmalgamStep, AmalgamError> {
    if m.n() != e.n() {
        return Err(AmalgamError::GonalityMismatch {
            ambient: m.n(),
            extension: e.n(),
        });
    }
    let mut pairs = Vec::with_capacity(gluing.len());
    for &(x, y) in gluing {
        let xi = e.index_of(x).ok_or(AmalgamError::UnknownInExtension(x))?;
        let yi = m.index_of(y).ok_or(AmalgamError::UnknownInAmbient(y))?;
        if e.part(xi) != m.part(yi) {
            return Err(AmalgamError::PartMismatch(x, y));
        }
        pairs.push((xi, yi));
    }
    let mut seen_e = e.empty_set();
    let mut seen_m = m.empty_set();
    for &(xi, yi) in &pairs {
        if seen_e.put(xi) || seen_m.put(yi) {
            return Err(AmalgamError::NotInjective);
        }
    }
    for (i, &(x1, y1)) in pairs.iter().enumerate() {
        for &(x2, y2) in &pairs[i + 1..] {
            if e.adjacent(x1, x2) != m.adjacent(y1, y2) {
                return Err(AmalgamError::NotInduced(e.id(x1), e.id(x2)));
            }
        }
    }
    let rep = is_strong(e, &seen_e, &e.full_set()).expect("base is a subset");
    if let Some(w) = rep.witness {
        return Err(AmalgamError::BaseNotStrong(e.ids_of(&w)));
    }

    let mut b = GraphBuilder::new(m.n()).expect("valid gonality");
    for v in 0..m.vertex_count() {
        b.vertex(m.id(v), m.part(v)).unwrap();
    }
    for &(u, v) in m.edges() {
        b.edge(m.id(u), m.id(v)).unwrap();
    }
    let mut image = BTreeMap::new();
    for &(xi, yi) in &pairs {
        image.insert(e.id(xi), m.id(yi));
    }
    let mut next = m.max_id().map_or(0, |v| v.0 + 1);
    for v in 0..e.vertex_count() {
        if !seen_e.contains(v) {
            let id = VertexId(next);
            next += 1;
            b.vertex(id, e.part(v)).unwrap();
            image.insert(e.id(v), id);
        }
    }
    for &(u, v) in e.edges() {
        if seen_e.contains(u) && seen_e.contains(v) {
            continue;
        }
        b.edge(image[&e.id(u)], image[&e.id(v)]).unwrap();
    }
    Ok(AmalgamStep {
        base: pairs.iter().map(|&(_, y)| m.id(y)).collect(),
        gluing: gluing.to_vec(),
        result: b.build(),
        image,
    })
}

/// Extension shapes the growth loop draws from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Template {
    /// A path hanging off one vertex.
    PendantPath,
    /// A path of length `n-1` between two existing vertices.
    PathCompletion,
    /// A `(2n+2)`-cycle sharing an arc with the graph.
    CycleAttachment,
    /// A spoked cycle `C_2` over four existing vertices.
    SpokedCycle,
}

impl Template {
    pub const ALL: [Template; 4] = [
        Template::PendantPath,
        Template::PathCompletion,
        Template::CycleAttachment,
        Template::SpokedCycle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Template::PendantPath => "pendant_path",
            Template::PathCompletion => "path_completion",
            Template::CycleAttachment => "cycle_attachment",
            Template::SpokedCycle => "spoked_cycle",
        }
    }

    /// Relative frequency in the growth loop.
    fn weight(self) -> u32 {
        match self {
            Template::PendantPath => 2,
            Template::PathCompletion => 4,
            Template::CycleAttachment => 3,
            Template::SpokedCycle => 1,
        }
    }

    /// An extension graph and its base, ordered for site search.
    pub fn extension(self, n: usize, rng: &mut impl Rng) -> (BipartiteGraph, Vec<VertexId>) {
        match self {
            Template::PendantPath => {
                let len = rng.random_range(1..=n);
                (make_path(n, len).unwrap().graph, vec![VertexId(0)])
            }
            Template::PathCompletion => {
                let g = make_path(n, n - 1).unwrap().graph;
                (g, vec![VertexId(0), VertexId(n as u32 - 1)])
            }
            Template::CycleAttachment => {
                // shared arc of 0..=n edges
                let arc = rng.random_range(0..=n) as u32;
                let g = make_cycle(n, 2 * n + 2).unwrap().graph;
                (g, (0..=arc).map(VertexId).collect())
            }
            Template::SpokedCycle => {
                let doc = make_cl_witness(n, 2, false).unwrap();
                let base = doc.graph.ids_of(doc.subset("A0").unwrap());
                (doc.graph, base)
            }
        }
    }
}

impl fmt::Display for Template {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepOutcome {
    Accepted,
    Rejected(String),
}

/// One attempted step; `vertices` and `edges` describe the graph after it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepLog {
    pub step: usize,
    pub template: Template,
    pub outcome: StepOutcome,
    pub vertices: usize,
    pub edges: usize,
}

impl fmt::Display for StepLog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let outcome = match &self.outcome {
            StepOutcome::Accepted => "accepted".to_string(),
            StepOutcome::Rejected(r) => format!("rejected:{r}"),
        };
        write!(
            f,
            "STEP {} {} {} {} {}",
            self.step, self.template, outcome, self.vertices, self.edges
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrowError {
    #[error("seed graph is not in the class ({} violations)", .0.len())]
    SeedNotMember(Vec<ViolationReport>),
    #[error("μ-function is for n = {mu}, seed has n = {seed}")]
    GonalityMismatch { mu: usize, seed: usize },
    #[error("step {step}: previous graph is no longer strong (violating set {witness:?})")]
    StrongnessLost { step: usize, witness: Vec<VertexId> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowOutcome {
    pub graph: BipartiteGraph,
    pub log: Vec<StepLog>,
}

/// Attempts per site search before a step gives up.
const SITE_BUDGET: usize = 4000;

/// Runs `steps` amalgamation attempts from `seed`. Candidates failing the
/// membership test are rejected and logged; the graph only changes on
/// acceptance.
pub fn grow(
    seed: &BipartiteGraph,
    steps: usize,
    rng_seed: u64,
    mu: &MuFunction,
) -> Result<GrowOutcome, GrowError> {
    grow_with(seed, steps, rng_seed, mu, KmuOptions::for_n(seed.n()))
}

pub fn grow_with(
    seed: &BipartiteGraph,
    steps: usize,
    rng_seed: u64,
    mu: &MuFunction,
    opts: KmuOptions,
) -> Result<GrowOutcome, GrowError> {
    if mu.n() != seed.n() {
        return Err(GrowError::GonalityMismatch {
            mu: mu.n(),
            seed: seed.n(),
        });
    }
    let rep = in_class(seed, mu, opts);
    if !rep.member {
        return Err(GrowError::SeedNotMember(rep.violations));
    }
    let n = seed.n();
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let weighted: Vec<Template> = Template::ALL
        .iter()
        .flat_map(|&t| std::iter::repeat_n(t, t.weight() as usize))
        .collect();
    let mut g = seed.clone();
    let mut log = Vec::with_capacity(steps);
    for step in 1..=steps {
        let template = *weighted.choose(&mut rng).unwrap();
        let (ext, base) = template.extension(n, &mut rng);
        let outcome = match find_site(&g, &ext, &base, &mut rng) {
            None => StepOutcome::Rejected("no_site".into()),
            Some(site) => {
                let gluing: Vec<_> = base.iter().copied().zip(site).collect();
                match free_amalgam(&g, &ext, &gluing) {
                    Err(_) => StepOutcome::Rejected("not_amalgamable".into()),
                    Ok(am) => {
                        let rep = in_class(&am.result, mu, opts);
                        if let Some(v) = rep.violations.first() {
                            StepOutcome::Rejected(v.condition.to_string())
                        } else {
                            let old = am.result.set_from_ids(g.ids()).unwrap();
                            let strong =
                                is_strong(&am.result, &old, &am.result.full_set()).unwrap();
                            if let Some(w) = strong.witness {
                                return Err(GrowError::StrongnessLost {
                                    step,
                                    witness: am.result.ids_of(&w),
                                });
                            }
                            g = am.result;
                            StepOutcome::Accepted
                        }
                    }
                }
            }
        };
        log.push(StepLog {
            step,
            template,
            outcome,
            vertices: g.vertex_count(),
            edges: g.edge_count(),
        });
    }
    Ok(GrowOutcome { graph: g, log })
}

/// A random induced copy of the base inside `m`, respecting parts. Sites
/// that would obviously close a short cycle are skipped: for base vertices
/// `x, y` the distance in `m` plus the distance through new extension
/// vertices must reach `2n`.
fn find_site(
    m: &BipartiteGraph,
    ext: &BipartiteGraph,
    base: &[VertexId],
    rng: &mut impl Rng,
) -> Option<Vec<VertexId>> {
    let n = m.n();
    let bidx: Vec<usize> = base.iter().map(|&b| ext.index_of(b).unwrap()).collect();
    let base_set = ext.set_of(bidx.iter().copied());
    let outer = without_edges_within(ext, &base_set);
    let ext_dist: Vec<Vec<Option<usize>>> =
        bidx.iter().map(|&b| distances_from(&outer, b)).collect();
    let mut m_dist: BTreeMap<usize, Vec<Option<usize>>> = BTreeMap::new();
    let mut order: Vec<usize> = (0..m.vertex_count()).collect();
    order.shuffle(rng);
    let mut chosen: Vec<usize> = Vec::with_capacity(base.len());
    let mut budget = SITE_BUDGET;
    let ok = place(
        m,
        ext,
        &bidx,
        &ext_dist,
        &mut m_dist,
        &order,
        &mut chosen,
        &mut budget,
        n,
        rng,
    );
    ok.then(|| chosen.iter().map(|&v| m.id(v)).collect())
}

fn without_edges_within(g: &BipartiteGraph, set: &VertexSet) -> BipartiteGraph {
    let mut b = GraphBuilder::new(g.n()).expect("valid gonality");
    for v in 0..g.vertex_count() {
        b.vertex(g.id(v), g.part(v)).unwrap();
    }
    for &(u, v) in g.edges() {
        if !(set.contains(u) && set.contains(v)) {
            b.edge(g.id(u), g.id(v)).unwrap();
        }
    }
    b.build()
}

#[allow(clippy::too_many_arguments)]
fn place(
    m: &BipartiteGraph,
    ext: &BipartiteGraph,
    bidx: &[usize],
    ext_dist: &[Vec<Option<usize>>],
    m_dist: &mut BTreeMap<usize, Vec<Option<usize>>>,
    order: &[usize],
    chosen: &mut Vec<usize>,
    budget: &mut usize,
    n: usize,
    rng: &mut impl Rng,
) -> bool {
    let k = chosen.len();
    if k == bidx.len() {
        return true;
    }
    let x = bidx[k];
    // follow an edge to an earlier base vertex when there is one
    let anchor = (0..k).find(|&j| ext.adjacent(bidx[j], x));
    let mut cands: Vec<usize> = match anchor {
        Some(j) => {
            let mut c = m.neighbors(chosen[j]).to_vec();
            c.shuffle(rng);
            c
        }
        None => order.to_vec(),
    };
    cands.retain(|&y| m.part(y) == ext.part(x) && !chosen.contains(&y));
    for y in cands {
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        let dy = m_dist
            .entry(y)
            .or_insert_with(|| distances_from(m, y))
            .clone();
        let fits = (0..k).all(|j| {
            let (xj, yj) = (bidx[j], chosen[j]);
            if ext.adjacent(xj, x) != m.adjacent(yj, y) {
                return false;
            }
            match (dy[yj], ext_dist[j][x]) {
                (Some(a), Some(b)) => ext.adjacent(xj, x) || a + b >= 2 * n,
                _ => true,
            }
        });
        if !fits {
            continue;
        }
        chosen.push(y);
        if place(
            m, ext, bidx, ext_dist, m_dist, order, chosen, budget, n, rng,
        ) {
            return true;
        }
        chosen.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{girth, Extent};
    use crate::predim::delta;

    #[test]
    fn two_paths_make_a_cycle() {
        for n in 3..=6 {
            let p = make_path(n, n).unwrap().graph;
            let ends = [VertexId(0), VertexId(n as u32)];
            let am = free_amalgam(&p, &p, &[(ends[0], ends[0]), (ends[1], ends[1])]).unwrap();
            let g = &am.result;
            assert_eq!((g.vertex_count(), g.edge_count()), (2 * n, 2 * n));
            assert_eq!(girth(g), Extent::Finite(2 * n));
            assert!((0..g.vertex_count()).all(|v| g.degree(v) == 2));
            assert!(g.is_connected());
        }
    }

    #[test]
    fn gluing_the_base_alone_changes_nothing() {
        let m = make_cycle(3, 8).unwrap().graph;
        let e = make_path(3, 1).unwrap().graph;
        let am = free_amalgam(
            &m,
            &e,
            &[(VertexId(0), VertexId(4)), (VertexId(1), VertexId(5))],
        )
        .unwrap();
        assert_eq!(am.result, m);
    }

    #[test]
    fn delta_adds_over_the_base() {
        for n in 3..=5 {
            let m = make_cycle(n, 4 * n + 8).unwrap().graph;
            let e = make_cl_witness(n, 2, false).unwrap();
            let base = e.graph.ids_of(e.subset("A0").unwrap());
            // pairwise non-adjacent cycle vertices of the parts the spokes need
            let mut sites = Vec::new();
            let mut next = 0;
            for &b in &base {
                let want = e.graph.part(e.graph.index_of(b).unwrap());
                while m.part(next) != want {
                    next += 1;
                }
                sites.push(m.id(next));
                next += 2;
            }
            let gluing: Vec<_> = base.iter().copied().zip(sites.iter().copied()).collect();
            match free_amalgam(&m, &e.graph, &gluing) {
                Ok(am) => {
                    let d_a = delta(&e.graph, e.subset("A0").unwrap());
                    let whole = delta(&am.result, &am.result.full_set());
                    assert_eq!(
                        whole,
                        delta(&m, &m.full_set()) + delta(&e.graph, &e.graph.full_set()) - d_a
                    );
                }
                Err(err) => panic!("n = {n}: {err}"),
            }
        }
    }

    #[test]
    fn amalgam_errors() {
        let n = 4;
        let m = make_cycle(n, 10).unwrap().graph;
        let short = make_path(n, n - 2).unwrap().graph;
        let ends = [VertexId(0), VertexId(n as u32 - 2)];
        assert!(matches!(
            free_amalgam(
                &m,
                &short,
                &[(ends[0], VertexId(0)), (ends[1], VertexId(2))]
            ),
            Err(AmalgamError::BaseNotStrong(_))
        ));
        let p = make_path(n, 3).unwrap().graph;
        assert_eq!(
            free_amalgam(&m, &p, &[(VertexId(0), VertexId(1))]),
            Err(AmalgamError::PartMismatch(VertexId(0), VertexId(1)))
        );
        assert_eq!(
            free_amalgam(
                &m,
                &p,
                &[(VertexId(0), VertexId(0)), (VertexId(3), VertexId(1))]
            ),
            Err(AmalgamError::NotInduced(VertexId(0), VertexId(3)))
        );
        assert_eq!(
            free_amalgam(
                &m,
                &p,
                &[(VertexId(0), VertexId(0)), (VertexId(2), VertexId(0))]
            ),
            Err(AmalgamError::NotInjective)
        );
        assert_eq!(
            free_amalgam(&m, &p, &[(VertexId(9), VertexId(0))]),
            Err(AmalgamError::UnknownInExtension(VertexId(9)))
        );
        let other = make_path(3, 3).unwrap().graph;
        assert!(matches!(
            free_amalgam(&m, &other, &[]),
            Err(AmalgamError::GonalityMismatch { .. })
        ));
    }

    #[test]
    fn zero_steps_return_the_seed() {
        let seed = make_cycle(3, 8).unwrap().graph;
        let out = grow(&seed, 0, 5, &MuFunction::default_mu(3)).unwrap();
        assert_eq!(out.graph, seed);
        assert!(out.log.is_empty());
    }

    #[test]
    fn bad_seed_is_refused() {
        let seed = make_cycle(3, 4).unwrap().graph;
        assert!(matches!(
            grow(&seed, 3, 1, &MuFunction::default_mu(3)),
            Err(GrowError::SeedNotMember(_))
        ));
        let ok = make_cycle(3, 8).unwrap().graph;
        assert!(matches!(
            grow(&ok, 3, 1, &MuFunction::default_mu(4)),
            Err(GrowError::GonalityMismatch { .. })
        ));
    }

    #[test]
    fn growth_is_deterministic_and_stays_in_class() {
        let n = 3;
        let seed = make_cycle(n, 2 * n + 2).unwrap().graph;
        let mu = MuFunction::default_mu(n);
        let a = grow(&seed, 8, 42, &mu).unwrap();
        let b = grow(&seed, 8, 42, &mu).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.log.len(), 8);
        assert!(in_class(&a.graph, &mu, KmuOptions::for_n(n)).member);
        let old = a.graph.set_from_ids(seed.ids()).unwrap();
        assert!(
            is_strong(&a.graph, &old, &a.graph.full_set())
                .unwrap()
                .holds
        );
    }
}
