//! Incidence graphs of small classical polygons.

use crate::graph::{BipartiteGraph, Part};

/// Fano plane: points `0..7`, lines `7..14`; line `7 + j` is
/// `{j, j+1, j+3} mod 7`. Gonality 3.
pub fn fano_plane() -> BipartiteGraph {
    let mut vertices: Vec<(u32, Part)> = (0..7).map(|i| (i, Part::Zero)).collect();
    vertices.extend((7..14).map(|i| (i, Part::One)));
    let edges: Vec<(u32, u32)> = (0..7u32)
        .flat_map(|j| [0, 1, 3].map(|k| ((j + k) % 7, 7 + j)))
        .collect();
    BipartiteGraph::from_parts(3, &vertices, &edges).unwrap()
}

/// The symplectic quadrangle W(2): points are the 15 two-subsets of
/// `{0..5}` (ids `0..15`, lexicographic), lines the 15 perfect matchings
/// (ids `15..30`, lexicographic), incidence is membership. Gonality 4.
pub fn gq22() -> BipartiteGraph {
    let duads: Vec<(u32, u32)> = (0..6)
        .flat_map(|a| (a + 1..6).map(move |b| (a, b)))
        .collect();
    let mut synthemes: Vec<[(u32, u32); 3]> = Vec::new();
    for &(a, b) in duads.iter().filter(|d| d.0 == 0) {
        let rest: Vec<u32> = (0..6).filter(|&x| x != a && x != b).collect();
        let c = rest[0];
        for k in 1..4 {
            let d = rest[k];
            let others: Vec<u32> = rest[1..].iter().copied().filter(|&x| x != d).collect();
            synthemes.push([(a, b), (c, d), (others[0], others[1])]);
        }
    }
    synthemes.sort();
    let mut vertices: Vec<(u32, Part)> = (0..15).map(|i| (i, Part::Zero)).collect();
    vertices.extend((15..30).map(|i| (i, Part::One)));
    let mut edges = Vec::new();
    for (s, syn) in synthemes.iter().enumerate() {
        for pair in syn {
            let p = duads.iter().position(|d| d == pair).unwrap();
            edges.push((p as u32, 15 + s as u32));
        }
    }
    BipartiteGraph::from_parts(4, &vertices, &edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_cycles, is_generalized_ngon};

    #[test]
    fn fano_is_a_thick_triangle_geometry() {
        let g = fano_plane();
        assert_eq!((g.vertex_count(), g.edge_count()), (14, 21));
        assert!(is_generalized_ngon(&g, true).holds);
        assert_eq!(enumerate_cycles(&g, 4).len(), 0);
        assert_eq!(enumerate_cycles(&g, 6).len(), 28);
    }

    #[test]
    fn gq22_is_a_thick_quadrangle() {
        let g = gq22();
        assert_eq!((g.vertex_count(), g.edge_count()), (30, 45));
        assert!(is_generalized_ngon(&g, true).holds);
        assert_eq!(enumerate_cycles(&g, 6).len(), 0);
    }
}
