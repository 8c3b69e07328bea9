//! Constructions that embed a graph into a larger balanced one.

use super::{require_balanced, ConstructError, ConstructionResult, Operand, Provenance};
use crate::coloring::{Coloring, Palette};
use crate::graph::{check_order, Graph, DEFAULT_VERTEX_LIMIT};

pub fn blow_up(g: &Graph, palette: Palette) -> Result<ConstructionResult, ConstructError> {
    blow_up_with_limit(g, palette, DEFAULT_VERTEX_LIMIT)
}

/// Takes `q` copies of `G` and joins copy `p` of `x` to copy `r` of `y` for
/// every edge `xy` of `G` and every pair of copies `(p, r)`, including
/// `p = r`. Copy `j` of vertex `i` has index `j * n + i` and color `j`.
///
/// Copy 0 induces `G` itself, so any graph is an induced subgraph of a graph
/// with a balanced coloring.
pub fn blow_up_with_limit(
    g: &Graph,
    palette: Palette,
    limit: usize,
) -> Result<ConstructionResult, ConstructError> {
    let (n, q) = (g.order(), palette.q());
    check_order(n as u128 * q as u128, limit)?;
    let mut adjacency = Vec::with_capacity(n * q);
    for _copy in 0..q {
        for i in 0..n {
            let list = (0..q)
                .flat_map(|r| g.neighbors(i).iter().map(move |&y| r * n + y))
                .collect();
            adjacency.push(list);
        }
    }
    let graph = Graph::from_adjacency(adjacency);
    let colors = (0..q).flat_map(|j| std::iter::repeat(j).take(n)).collect();
    let coloring = Coloring::new_unchecked(palette, colors);
    Ok(ConstructionResult::new(Some(graph), coloring, Provenance::BlowUp))
}

/// The `2q` attachment points of a vertex addition: `primary[i]` and
/// `secondary[i]` must both have color `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnchorSet {
    pub primary: Vec<usize>,
    pub secondary: Vec<usize>,
}

impl AnchorSet {
    pub fn new(primary: Vec<usize>, secondary: Vec<usize>) -> Self {
        AnchorSet { primary, secondary }
    }

    /// Picks, for every color, the two lowest-indexed vertices of that color.
    pub fn lowest(coloring: &Coloring) -> Result<Self, ConstructError> {
        let q = coloring.q();
        let mut primary = vec![None; q];
        let mut secondary = vec![None; q];
        for (v, &c) in coloring.colors().iter().enumerate() {
            if primary[c].is_none() {
                primary[c] = Some(v);
            } else if secondary[c].is_none() {
                secondary[c] = Some(v);
            }
        }
        let collect = |slots: Vec<Option<usize>>| -> Result<Vec<usize>, ConstructError> {
            slots
                .into_iter()
                .enumerate()
                .map(|(c, s)| {
                    s.ok_or_else(|| {
                        ConstructError::BadAnchors(format!("fewer than two vertices of color {c}"))
                    })
                })
                .collect()
        };
        Ok(AnchorSet { primary: collect(primary)?, secondary: collect(secondary)? })
    }

    pub fn validate(&self, coloring: &Coloring) -> Result<(), ConstructError> {
        let q = coloring.q();
        if self.primary.len() != q || self.secondary.len() != q {
            return Err(ConstructError::BadAnchors(format!(
                "need {q} primary and {q} secondary anchors, got {} and {}",
                self.primary.len(),
                self.secondary.len()
            )));
        }
        let mut seen = vec![false; coloring.len()];
        for (i, &v) in self.primary.iter().chain(&self.secondary).enumerate() {
            if v >= coloring.len() {
                return Err(ConstructError::BadAnchors(format!("anchor {v} is not a vertex")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(ConstructError::BadAnchors(format!("anchor {v} repeated")));
            }
            let want = i % q;
            if coloring.color(v) != want {
                return Err(ConstructError::BadAnchors(format!(
                    "anchor {v} has color {} but position requires color {want}",
                    coloring.color(v)
                )));
            }
        }
        Ok(())
    }
}

/// Appends `2q - 1` vertices `u, a_1..a_{q-1}, a'_1..a'_{q-1}` (in that
/// index order). `u` joins all `2q` anchors and takes color `q - 1`; `a_i`
/// joins the primary anchors, `a'_i` the secondary ones, and both take color
/// `i - 1`.
///
/// Each anchor gains one neighbor of every color, so balance is preserved;
/// color `q - 1` gains one vertex and every other color gains two.
pub fn vertex_addition(
    g: &Graph,
    coloring: &Coloring,
    anchors: &AnchorSet,
) -> Result<ConstructionResult, ConstructError> {
    require_balanced(g, coloring, Operand::G)?;
    anchors.validate(coloring)?;
    let (n, q) = (g.order(), coloring.q());
    let extra = q - 1;
    let u = n;
    let first_a = n + 1;
    let first_a_prime = n + 1 + extra;

    let mut adjacency: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    adjacency.resize(n + 1 + 2 * extra, Vec::new());
    let mut link = |x: usize, y: usize| {
        adjacency[x].push(y);
        adjacency[y].push(x);
    };
    for (side, first) in [(&anchors.primary, first_a), (&anchors.secondary, first_a_prime)] {
        for &v in side {
            link(v, u);
            for w in first..first + extra {
                link(v, w);
            }
        }
    }
    let graph = Graph::from_adjacency(adjacency);

    let mut colors = coloring.colors().to_vec();
    colors.push(q - 1);
    colors.extend(0..extra);
    colors.extend(0..extra);
    let coloring = Coloring::new_unchecked(coloring.palette(), colors);
    Ok(ConstructionResult::new(Some(graph), coloring, Provenance::VertexAddition))
}
