//! Cartesian, lexicographic, direct and strong products, and the join.
//!
//! Product vertex `(u, v)` lives at index `u * |V(H)| + v`, so each H-layer
//! `{(u, *)}` is a contiguous block of indices.

use std::fmt;
use std::str::FromStr;

use crate::graph::{check_order, Graph, GraphError, DEFAULT_VERTEX_LIMIT};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductKind {
    Cartesian,
    Lexicographic,
    Direct,
    Strong,
}

impl ProductKind {
    pub const ALL: [ProductKind; 4] = [
        ProductKind::Cartesian,
        ProductKind::Lexicographic,
        ProductKind::Direct,
        ProductKind::Strong,
    ];
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Lexicographic => "lexicographic",
            ProductKind::Direct => "direct",
            ProductKind::Strong => "strong",
        })
    }
}

impl FromStr for ProductKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cartesian" => Ok(ProductKind::Cartesian),
            "lexicographic" | "lex" => Ok(ProductKind::Lexicographic),
            "direct" => Ok(ProductKind::Direct),
            "strong" => Ok(ProductKind::Strong),
            _ => Err(format!("unknown product kind {s:?}")),
        }
    }
}

/// Index of product vertex `(u, v)`.
#[inline]
pub fn pair_index(u: usize, v: usize, h_order: usize) -> usize {
    u * h_order + v
}

pub fn product(kind: ProductKind, g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    product_with_limit(kind, g, h, DEFAULT_VERTEX_LIMIT)
}

pub fn product_with_limit(
    kind: ProductKind,
    g: &Graph,
    h: &Graph,
    limit: usize,
) -> Result<Graph, GraphError> {
    let (ng, nh) = (g.order(), h.order());
    let n = check_order(ng as u128 * nh as u128, limit)?;
    let mut adjacency: Vec<Vec<usize>> = Vec::with_capacity(n);
    for u in 0..ng {
        for v in 0..nh {
            let mut list = Vec::new();
            let cartesian = |list: &mut Vec<usize>| {
                list.extend(h.neighbors(v).iter().map(|&w| pair_index(u, w, nh)));
                list.extend(g.neighbors(u).iter().map(|&x| pair_index(x, v, nh)));
            };
            let direct = |list: &mut Vec<usize>| {
                for &x in g.neighbors(u) {
                    list.extend(h.neighbors(v).iter().map(|&w| pair_index(x, w, nh)));
                }
            };
            match kind {
                ProductKind::Cartesian => cartesian(&mut list),
                ProductKind::Direct => direct(&mut list),
                ProductKind::Strong => {
                    cartesian(&mut list);
                    direct(&mut list);
                }
                ProductKind::Lexicographic => {
                    list.extend(h.neighbors(v).iter().map(|&w| pair_index(u, w, nh)));
                    for &x in g.neighbors(u) {
                        list.extend((0..nh).map(|w| pair_index(x, w, nh)));
                    }
                }
            }
            adjacency.push(list);
        }
    }
    Ok(Graph::from_adjacency(adjacency))
}

/// `G + H`: disjoint union plus every edge between the two vertex sets.
/// H's vertices are shifted by `|V(G)|`.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    join_with_limit(g, h, DEFAULT_VERTEX_LIMIT)
}

pub fn join_with_limit(g: &Graph, h: &Graph, limit: usize) -> Result<Graph, GraphError> {
    let (ng, nh) = (g.order(), h.order());
    check_order(ng as u128 + nh as u128, limit)?;
    let mut adjacency = Vec::with_capacity(ng + nh);
    for u in 0..ng {
        let mut list = g.neighbors(u).to_vec();
        list.extend(ng..ng + nh);
        adjacency.push(list);
    }
    for v in 0..nh {
        let mut list: Vec<usize> = (0..ng).collect();
        list.extend(h.neighbors(v).iter().map(|&w| w + ng));
        adjacency.push(list);
    }
    Ok(Graph::from_adjacency(adjacency))
}
