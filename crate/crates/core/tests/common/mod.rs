#![allow(dead_code)]

use nbc_core::constructors::{blow_up, color_circulant, color_complete_multipartite};
use nbc_core::search::{decide, SearchConfig, SearchStatus};
use nbc_core::{Coloring, Graph, Palette};
use proptest::prelude::*;

pub fn palette(q: usize) -> Palette {
    Palette::new(q).unwrap()
}

pub fn graph_from_mask(n: usize, mask: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges: Vec<_> = pairs.zip(mask).filter(|(_, &keep)| keep).map(|(e, _)| e).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Arbitrary simple graph on `lo..=hi` vertices.
pub fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |mask| graph_from_mask(n, &mask))
    })
}

pub fn arb_colored_graph(q: usize, lo: usize, hi: usize) -> impl Strategy<Value = (Graph, Coloring)> {
    arb_graph(lo, hi).prop_flat_map(move |g| {
        let n = g.order();
        proptest::collection::vec(0..q, n)
            .prop_map(move |colors| (g.clone(), Coloring::new(palette(q), colors).unwrap()))
    })
}

pub fn arb_permutation(q: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..q).collect::<Vec<_>>()).prop_shuffle()
}

/// Balanced colorings drawn from several independent sources: the
/// multipartite and circulant constructions, blow-ups, random colorings of
/// edgeless graphs, and search on random small graphs. Each is then
/// recolored by a random permutation.
pub fn arb_balanced(q: usize, max_order: usize) -> impl Strategy<Value = (Graph, Coloring)> {
    let p = palette(q);
    let part_vectors: Vec<Vec<usize>> = [[1, 1].as_slice(), &[1, 2], &[2, 2], &[1, 1, 1], &[1, 1, 2], &[1, 2, 2]]
        .iter()
        .map(|m| m.iter().map(|x| x * q).collect::<Vec<usize>>())
        .filter(|parts| parts.iter().sum::<usize>() <= max_order)
        .collect();
    let mut circulants = Vec::new();
    for n in (2 * q..=max_order).step_by(2 * q) {
        for start in 1..=2 {
            for step in 1..q {
                let conn: Vec<usize> = (0..q).map(|i| start + i * step).collect();
                if let Ok(r) = color_circulant(n, &conn, p) {
                    circulants.push((r.graph.unwrap(), r.coloring));
                }
            }
        }
    }
    let mut closed_form: Vec<(Graph, Coloring)> = part_vectors
        .iter()
        .map(|parts| {
            let r = color_complete_multipartite(parts, p).unwrap();
            (r.graph.unwrap(), r.coloring)
        })
        .collect();
    closed_form.extend(circulants);
    assert!(!closed_form.is_empty(), "max_order {max_order} admits no closed-form instance");
    let closed_form = prop::sample::select(closed_form);
    let blown = arb_graph(1, (max_order / q).max(1)).prop_map(move |g| {
        let r = blow_up(&g, p).unwrap();
        (r.graph.unwrap(), r.coloring)
    });
    let edgeless = (1..=max_order).prop_flat_map(move |n| {
        proptest::collection::vec(0..q, n)
            .prop_map(move |c| (Graph::empty(n), Coloring::new(p, c).unwrap()))
    });
    let searched = arb_graph(1, max_order.min(8)).prop_filter_map("no balanced coloring", move |g| {
        let out = decide(&g, &SearchConfig::new(p));
        (out.status == SearchStatus::Found).then(|| (g, out.colorings[0].clone()))
    });
    (
        prop_oneof![closed_form, blown, edgeless, searched],
        arb_permutation(q),
    )
        .prop_map(|((g, c), perm)| {
            let c = c.permute(&perm).unwrap();
            (g, c)
        })
}
