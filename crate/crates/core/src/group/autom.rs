//! Automorphism groups by individualization and refinement.

use std::collections::BTreeMap;

use crate::graph::{BipartiteGraph, Part};

use super::perm::{Perm, PermGroup};

type Cells = Vec<Vec<usize>>;
/// Per refinement round: for each new cell, its parent cell, its
/// neighbourhood signature and its size.
type Trace = Vec<Vec<(usize, Vec<usize>, usize)>>;

fn cell_index(nv: usize, cells: &Cells) -> Vec<usize> {
    let mut of = vec![0; nv];
    for (i, c) in cells.iter().enumerate() {
        for &v in c {
            of[v] = i;
        }
    }
    of
}

/// Iterates signature splitting until the number of cells is stable.
fn refine(g: &BipartiteGraph, mut cells: Cells) -> (Cells, Trace) {
    let mut trace = Trace::new();
    loop {
        let of = cell_index(g.vertex_count(), &cells);
        let mut next = Cells::new();
        let mut round = Vec::new();
        for (ci, cell) in cells.iter().enumerate() {
            let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
            for &v in cell {
                let mut sig: Vec<usize> = g.neighbors(v).iter().map(|&w| of[w]).collect();
                sig.sort_unstable();
                groups.entry(sig).or_default().push(v);
            }
            for (sig, members) in groups {
                round.push((ci, sig, members.len()));
                next.push(members);
            }
        }
        trace.push(round);
        let stable = next.len() == cells.len();
        cells = next;
        if stable {
            return (cells, trace);
        }
    }
}

fn individualize(g: &BipartiteGraph, cells: &Cells, target: usize, v: usize) -> (Cells, Trace) {
    let mut out = Cells::with_capacity(cells.len() + 1);
    for (i, c) in cells.iter().enumerate() {
        if i == target {
            out.push(vec![v]);
            out.push(c.iter().copied().filter(|&w| w != v).collect());
        } else {
            out.push(c.clone());
        }
    }
    refine(g, out)
}

fn first_split_cell(cells: &Cells) -> Option<usize> {
    cells.iter().position(|c| c.len() > 1)
}

/// The leftmost branch of the search tree.
struct Spine {
    partitions: Vec<Cells>,
    traces: Vec<Trace>,
    targets: Vec<usize>,
    base: Vec<usize>,
}

impl Spine {
    fn build(g: &BipartiteGraph, start: Cells) -> Self {
        let (mut cells, trace) = refine(g, start);
        let mut spine = Spine {
            partitions: Vec::new(),
            traces: vec![trace],
            targets: Vec::new(),
            base: Vec::new(),
        };
        while let Some(t) = first_split_cell(&cells) {
            let v = cells[t][0];
            let (next, trace) = individualize(g, &cells, t, v);
            spine.partitions.push(std::mem::replace(&mut cells, next));
            spine.traces.push(trace);
            spine.targets.push(t);
            spine.base.push(v);
        }
        spine.partitions.push(cells);
        spine
    }

    fn leaf(&self) -> &Cells {
        self.partitions.last().unwrap()
    }
}

struct Search<'a> {
    g: &'a BipartiteGraph,
    spine: &'a Spine,
    type_preserving: bool,
}

impl Search<'_> {
    fn is_automorphism(&self, p: &Perm) -> bool {
        self.g
            .edges()
            .iter()
            .all(|&(a, b)| self.g.adjacent(p.apply(a), p.apply(b)))
            && (!self.type_preserving
                || (0..self.g.vertex_count()).all(|v| self.g.part(v) == self.g.part(p.apply(v))))
    }

    /// Depth-first search below a node at `level` whose trace matched.
    fn descend(&self, level: usize, cells: &Cells) -> Option<Perm> {
        match first_split_cell(cells) {
            None => {
                let mut img = vec![0; self.g.vertex_count()];
                for (l, c) in self.spine.leaf().iter().zip(cells) {
                    img[l[0]] = c[0];
                }
                let p = Perm::from_images(img).ok()?;
                self.is_automorphism(&p).then_some(p)
            }
            Some(t) => {
                if self.spine.targets.get(level) != Some(&t) {
                    return None;
                }
                for &u in &cells[t] {
                    let (next, trace) = individualize(self.g, cells, t, u);
                    if trace == self.spine.traces[level + 1] {
                        if let Some(p) = self.descend(level + 1, &next) {
                            return Some(p);
                        }
                    }
                }
                None
            }
        }
    }
}

/// Generators of the automorphism group of `g`. With `type_preserving`
/// only automorphisms fixing each part are included.
pub fn automorphism_group(g: &BipartiteGraph, type_preserving: bool) -> PermGroup {
    let nv = g.vertex_count();
    let start: Cells = if type_preserving {
        [Part::Zero, Part::One]
            .iter()
            .map(|&p| (0..nv).filter(|&v| g.part(v) == p).collect::<Vec<_>>())
            .filter(|c| !c.is_empty())
            .collect()
    } else if nv == 0 {
        Vec::new()
    } else {
        vec![(0..nv).collect()]
    };
    let spine = Spine::build(g, start);
    let search = Search {
        g,
        spine: &spine,
        type_preserving,
    };
    let mut gens: Vec<Perm> = Vec::new();
    for level in (0..spine.base.len()).rev() {
        let cells = &spine.partitions[level];
        let t = spine.targets[level];
        let v = spine.base[level];
        for &w in &cells[t] {
            if w == v {
                continue;
            }
            let known = PermGroup::new(nv, gens.clone()).unwrap();
            if known.orbit(v).binary_search(&w).is_ok() {
                continue;
            }
            let (next, trace) = individualize(g, cells, t, w);
            if trace != spine.traces[level + 1] {
                continue;
            }
            if let Some(p) = search.descend(level + 1, &next) {
                gens.push(p);
            }
        }
    }
    PermGroup::new(nv, gens).unwrap()
}
