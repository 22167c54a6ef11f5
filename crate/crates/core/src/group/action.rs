//! Transitivity properties of a group acting on a generalized polygon.
//!
//! Conditions phrased with typed starting points are evaluated on the
//! type-preserving subgroup; stabilizers of a vertex are type-preserving
//! anyway on a connected graph.

use thiserror::Error;

use crate::graph::{
    enumerate_ordered_cycles, is_generalized_ngon, BipartiteGraph, NgonViolation, Part, VertexId,
};

use super::perm::{Perm, PermGroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("not a generalized {n}-gon: {violation}")]
    NotNgon { n: usize, violation: NgonViolation },
    #[error("group degree {group} differs from vertex count {vertices}")]
    DegreeMismatch { group: usize, vertices: usize },
    #[error("generator {0} is not an automorphism")]
    NotAutomorphism(usize),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
}

fn check_group(g: &BipartiteGraph, grp: &PermGroup) -> Result<(), ActionError> {
    if grp.degree() != g.vertex_count() {
        return Err(ActionError::DegreeMismatch {
            group: grp.degree(),
            vertices: g.vertex_count(),
        });
    }
    for (i, p) in grp.generators().iter().enumerate() {
        if !g
            .edges()
            .iter()
            .all(|&(a, b)| g.adjacent(p.apply(a), p.apply(b)))
        {
            return Err(ActionError::NotAutomorphism(i));
        }
    }
    Ok(())
}

fn check_polygon(g: &BipartiteGraph, grp: &PermGroup) -> Result<(), ActionError> {
    let report = is_generalized_ngon(g, false);
    if let Some(violation) = report.violation {
        return Err(ActionError::NotNgon {
            n: g.n(),
            violation,
        });
    }
    check_group(g, grp)
}

fn swaps_parts(g: &BipartiteGraph, p: &Perm) -> bool {
    g.vertex_count() > 0 && g.part(p.apply(0)) != g.part(0)
}

/// The subgroup of elements mapping each part to itself. Assumes `g` is
/// connected, so every element either keeps or swaps the parts.
pub fn type_preserving_subgroup(g: &BipartiteGraph, grp: &PermGroup) -> PermGroup {
    let Some(s) = grp.generators().iter().find(|p| swaps_parts(g, p)).cloned() else {
        return grp.clone();
    };
    let s_inv = s.inverse();
    let mut gens = Vec::new();
    for x in grp.generators() {
        if swaps_parts(g, x) {
            gens.push(x.then(&s_inv));
            gens.push(s.then(x));
        } else {
            gens.push(x.clone());
            gens.push(s.then(x).then(&s_inv));
        }
    }
    PermGroup::new(grp.degree(), gens).unwrap()
}

/// All simple paths with `len` edges, as vertex sequences.
fn simple_paths(g: &BipartiteGraph, len: usize) -> Vec<Vec<usize>> {
    fn grow(g: &BipartiteGraph, len: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if path.len() == len + 1 {
            out.push(path.clone());
            return;
        }
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if !path.contains(&w) {
                path.push(w);
                grow(g, len, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for v in 0..g.vertex_count() {
        grow(g, len, &mut vec![v], &mut out);
    }
    out
}

fn far_panel(g: &BipartiteGraph, path: &[usize]) -> Vec<usize> {
    let (last, prev) = (path[path.len() - 1], path[path.len() - 2]);
    g.neighbors(last)
        .iter()
        .copied()
        .filter(|&w| w != prev)
        .collect()
}

fn transitive_on_points(grp: &PermGroup, points: &[usize]) -> bool {
    match points.first() {
        None => true,
        Some(&p) => {
            let orbit = grp.orbit(p);
            points.iter().all(|x| orbit.binary_search(x).is_ok())
        }
    }
}

/// Checks every simple path of length `n` up to the group action; the
/// first path whose `stabilizer` fails to be transitive on the far panel is
/// returned.
fn first_failing_path(
    g: &BipartiteGraph,
    grp: &PermGroup,
    stabilizer: impl Fn(&[usize]) -> PermGroup,
) -> Option<Vec<usize>> {
    let paths = simple_paths(g, g.n());
    grp.tuple_orbit_representatives(&paths)
        .into_iter()
        .find(|path| !transitive_on_points(&stabilizer(path), &far_panel(g, path)))
}

fn ids(g: &BipartiteGraph, seq: &[usize]) -> Vec<VertexId> {
    seq.iter().map(|&v| g.id(v)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongTransitivityReport {
    /// Both characterizations hold.
    pub holds: bool,
    /// Every path stabilizer is transitive on the far panel.
    pub path_form: bool,
    /// Transitive on ordered `2n`-cycles starting in part zero.
    pub cycle_form: bool,
    /// A path whose stabilizer fails, or the first ordered cycle outside
    /// the orbit of the first one.
    pub counterexample: Option<Vec<VertexId>>,
}

impl StrongTransitivityReport {
    pub fn forms_agree(&self) -> bool {
        self.path_form == self.cycle_form
    }
}

pub fn is_strongly_transitive(
    g: &BipartiteGraph,
    grp: &PermGroup,
) -> Result<StrongTransitivityReport, ActionError> {
    check_polygon(g, grp)?;
    let failing = first_failing_path(g, grp, |p| grp.pointwise_stabilizer(p));
    let plus = type_preserving_subgroup(g, grp);
    let cycles = enumerate_ordered_cycles(g, 2 * g.n(), Part::Zero);
    let outside = cycles.first().and_then(|c0| {
        let orbit = plus.tuple_orbit(c0);
        cycles.iter().find(|c| !orbit.contains(*c)).cloned()
    });
    let path_form = failing.is_none();
    let cycle_form = outside.is_none();
    Ok(StrongTransitivityReport {
        holds: path_form && cycle_form,
        path_form,
        cycle_form,
        counterexample: failing.or(outside).map(|s| ids(g, &s)),
    })
}

/// Both sides of the criterion for transitivity on ordered
/// `(2n+2)`-cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleExtensionReport {
    /// Transitive on ordered `(2n+2)`-cycles starting in part zero.
    pub long_cycles: bool,
    /// Transitive on ordered `2n`-cycles starting in part zero.
    pub short_cycles: bool,
    /// The pointwise stabilizer of an ordered `2n`-cycle is transitive on
    /// `(D_1(x_1) - {x_0, x_2}) x (D_1(x_2) - {x_1, x_3})`.
    pub stabilizer_on_pairs: bool,
}

impl CycleExtensionReport {
    pub fn right_side(&self) -> bool {
        self.short_cycles && self.stabilizer_on_pairs
    }

    pub fn equivalence_holds(&self) -> bool {
        self.long_cycles == self.right_side()
    }
}

pub fn cycle_extension_criterion(
    g: &BipartiteGraph,
    grp: &PermGroup,
) -> Result<CycleExtensionReport, ActionError> {
    check_polygon(g, grp)?;
    let n = g.n();
    let plus = type_preserving_subgroup(g, grp);
    let long = enumerate_ordered_cycles(g, 2 * n + 2, Part::Zero);
    let short = enumerate_ordered_cycles(g, 2 * n, Part::Zero);
    let stabilizer_on_pairs = match short.first() {
        None => true,
        Some(c) => {
            let stab = plus.pointwise_stabilizer(c);
            let first: Vec<usize> = g
                .neighbors(c[1])
                .iter()
                .copied()
                .filter(|&w| w != c[0] && w != c[2])
                .collect();
            let second: Vec<usize> = g
                .neighbors(c[2])
                .iter()
                .copied()
                .filter(|&w| w != c[1] && w != c[3])
                .collect();
            let pairs: Vec<Vec<usize>> = first
                .iter()
                .flat_map(|&a| second.iter().map(move |&b| vec![a, b]))
                .collect();
            stab.is_transitive_on(&pairs)
        }
    };
    Ok(CycleExtensionReport {
        long_cycles: plus.is_transitive_on(&long),
        short_cycles: plus.is_transitive_on(&short),
        stabilizer_on_pairs,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoufangReport {
    pub holds: bool,
    pub failing_path: Option<Vec<VertexId>>,
}

/// For every simple path `(x_0..x_n)`, the elements fixing all neighbours
/// of `x_1..x_{n-1}` must be transitive on `D_1(x_n) - {x_{n-1}}`.
pub fn is_moufang(g: &BipartiteGraph, grp: &PermGroup) -> Result<MoufangReport, ActionError> {
    check_polygon(g, grp)?;
    let failing = first_failing_path(g, grp, |path| {
        let fixed: Vec<usize> = path[1..path.len() - 1]
            .iter()
            .flat_map(|&x| g.neighbors(x).iter().copied())
            .collect();
        grp.pointwise_stabilizer(&fixed)
    });
    Ok(MoufangReport {
        holds: failing.is_none(),
        failing_path: failing.map(|p| ids(g, &p)),
    })
}

/// Largest `t` such that the stabilizer of `x` is transitive on ordered
/// `t`-tuples of distinct neighbours of `x`; 0 if it is not transitive.
pub fn stabilizer_transitivity_degree(
    g: &BipartiteGraph,
    grp: &PermGroup,
    x: VertexId,
) -> Result<usize, ActionError> {
    check_group(g, grp)?;
    let v = g.index_of(x).ok_or(ActionError::UnknownVertex(x))?;
    let stab = grp.pointwise_stabilizer(&[v]);
    let nbrs = g.neighbors(v);
    let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
    let mut degree = 0;
    for t in 1..=nbrs.len() {
        tuples = tuples
            .iter()
            .flat_map(|tup| {
                nbrs.iter().filter(|w| !tup.contains(w)).map(move |&w| {
                    let mut next = tup.clone();
                    next.push(w);
                    next
                })
            })
            .collect();
        if !stab.is_transitive_on(&tuples) {
            break;
        }
        degree = t;
    }
    Ok(degree)
}
