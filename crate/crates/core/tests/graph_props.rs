mod common;

use common::arb_graph;
use ngon_core::graph::{
    diameter, distances_from, enumerate_cycles, girth, is_generalized_ngon, parse_document,
    write_document, Extent, GraphDocument,
};
use ngon_core::group::{fano_plane, gq22};
use ngon_core::witness::{find_base_set, make_cycle};
use proptest::prelude::*;

proptest! {
    #[test]
    fn distance_is_a_metric_on_components(g in arb_graph(3..=5, 2, 10)) {
        let d: Vec<Vec<Option<usize>>> = (0..g.vertex_count()).map(|v| distances_from(&g, v)).collect();
        for u in 0..g.vertex_count() {
            prop_assert_eq!(d[u][u], Some(0));
            for v in 0..g.vertex_count() {
                prop_assert_eq!(d[u][v], d[v][u]);
                if u != v {
                    prop_assert_ne!(d[u][v], Some(0));
                }
                for w in 0..g.vertex_count() {
                    if let (Some(a), Some(b), Some(c)) = (d[u][v], d[v][w], d[u][w]) {
                        prop_assert!(c <= a + b);
                    }
                }
            }
        }
    }

    #[test]
    fn cycles_are_even_closed_and_distinct(g in arb_graph(3..=3, 4, 9)) {
        for len in [3usize, 5, 7] {
            prop_assert!(enumerate_cycles(&g, len).is_empty());
        }
        for len in [4usize, 6, 8] {
            let cycles = enumerate_cycles(&g, len);
            let mut seen = std::collections::HashSet::new();
            for c in &cycles {
                prop_assert_eq!(c.len(), len);
                for i in 0..len {
                    prop_assert!(g.adjacent(c[i], c[(i + 1) % len]));
                }
                let mut key = c.clone();
                key.sort_unstable();
                key.dedup();
                prop_assert_eq!(key.len(), len);
                prop_assert!(seen.insert(c.clone()));
            }
        }
        if let Extent::Finite(gi) = girth(&g) {
            prop_assert!(!enumerate_cycles(&g, gi).is_empty());
        }
    }

    #[test]
    fn text_format_round_trips(g in arb_graph(3..=6, 0, 10), mask in any::<u32>()) {
        let sub = common::from_mask(&g, mask);
        let doc = GraphDocument::new(g).with_subset("S", sub);
        let text = write_document(&doc);
        let back = parse_document(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(write_document(&back), text);
    }
}

#[test]
fn polygons_have_girth_twice_the_diameter() {
    let mut graphs = vec![fano_plane(), gq22()];
    graphs.extend((3..=7).map(|n| make_cycle(n, 2 * n).unwrap().graph));
    for g in graphs {
        assert!(is_generalized_ngon(&g, false).holds);
        let (Extent::Finite(gi), Extent::Finite(d)) = (girth(&g), diameter(&g)) else {
            panic!("infinite extent");
        };
        assert_eq!(gi, 2 * d);
        assert_eq!(d, g.n());
    }
}

#[test]
fn fano_minus_an_edge_is_not_a_polygon() {
    let g = fano_plane();
    let doc = GraphDocument::new(g.clone());
    let text = write_document(&doc).replacen("edge 0 7\n", "", 1);
    let cut = parse_document(&text).unwrap().graph;
    assert_eq!(cut.edge_count(), 20);
    assert!(!is_generalized_ngon(&cut, false).holds);
}

#[test]
fn fano_base_sets_match_a_direct_count() {
    let g = fano_plane();
    let d: Vec<Vec<Option<usize>>> = (0..14).map(|v| distances_from(&g, v)).collect();
    let mut count = 0;
    for a in 0..14 {
        for b in 0..14 {
            for c in 0..14 {
                for e in 0..14 {
                    let ok = d[a][b] == Some(3)
                        && d[b][c] == Some(3)
                        && d[c][e] == Some(3)
                        && d[e][a] == Some(3)
                        && d[a][c] == Some(2)
                        && d[b][e] == Some(2);
                    count += ok as usize;
                }
            }
        }
    }
    assert_eq!(count, 168);
    assert_eq!(find_base_set(&g).len(), count);
}
