//! Immutable simple undirected graphs.

use std::fmt;

use thiserror::Error;

/// Upper bound on the order of any graph built by a product, join or blow-up.
pub const DEFAULT_VERTEX_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    IndexOutOfRange { u: usize, v: usize, n: usize },
    #[error("invalid family parameters: {0}")]
    InvalidFamilyParams(String),
    #[error("graph would have {requested} vertices, limit is {limit}")]
    SizeOverflow { requested: u128, limit: usize },
}

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are sorted ascending, so they double as adjacency sets
/// (see [`Graph::has_edge`]).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::IndexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let v = w[0];
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(Self::from_sorted(adjacency))
    }

    /// Takes adjacency lists that are already symmetric and loop-free. Lists
    /// are sorted and deduplicated here.
    pub(crate) fn from_adjacency(mut adjacency: Vec<Vec<usize>>) -> Self {
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Self::from_sorted(adjacency)
    }

    fn from_sorted(adjacency: Vec<Vec<usize>>) -> Self {
        let total: usize = adjacency.iter().map(Vec::len).sum();
        let g = Graph {
            adjacency,
            edge_count: total / 2,
        };
        debug_assert!(g.check_invariants().is_ok());
        g
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges).expect("path edges are simple")
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adjacency.iter().map(Vec::len)
    }

    /// The common degree if every vertex has the same degree. The graph on
    /// zero vertices is not considered regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let min = self.degrees().min()?;
        let max = self.degrees().max()?;
        (min == max).then_some(min)
    }

    /// Subgraph induced by `vertices`, relabelled to `0..vertices.len()` in
    /// the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Self {
        let mut position = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            position[v] = i;
        }
        let adjacency = vertices
            .iter()
            .map(|&v| {
                self.adjacency[v]
                    .iter()
                    .filter_map(|&w| (position[w] != usize::MAX).then(|| position[w]))
                    .collect()
            })
            .collect();
        Self::from_adjacency(adjacency)
    }

    /// Re-checks every structural invariant. Used by tests and debug builds.
    pub fn check_invariants(&self) -> Result<(), String> {
        let n = self.order();
        let mut total = 0;
        for (v, list) in self.adjacency.iter().enumerate() {
            total += list.len();
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("adjacency of {v} not strictly increasing"));
            }
            for &w in list {
                if w >= n {
                    return Err(format!("neighbor {w} of {v} out of range"));
                }
                if w == v {
                    return Err(format!("loop at {v}"));
                }
                if self.adjacency[w].binary_search(&v).is_err() {
                    return Err(format!("edge {v}->{w} not mirrored"));
                }
            }
        }
        if total != 2 * self.edge_count {
            return Err(format!(
                "edge_count {} but degree sum {total}",
                self.edge_count
            ));
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("m", &self.edge_count)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Rejects orders above `limit`, computing the request without overflow.
pub(crate) fn check_order(requested: u128, limit: usize) -> Result<usize, GraphError> {
    if requested > limit as u128 {
        Err(GraphError::SizeOverflow { requested, limit })
    } else {
        Ok(requested as usize)
    }
}
