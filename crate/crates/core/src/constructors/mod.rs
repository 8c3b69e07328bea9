//! Closed-form balanced colorings.
//!
//! Every successful constructor returns a coloring that passes
//! [`verify`](crate::verify::verify) on the graph it is paired with.

mod embedding;
mod families;
mod products;

use std::fmt;

use thiserror::Error;

pub use embedding::{blow_up, blow_up_with_limit, vertex_addition, AnchorSet};
pub use families::{
    admits_bipartite_direct, admits_complete, color_circulant, color_complete,
    color_complete_multipartite, CirculantClause,
};
pub use products::{
    color_cartesian_product, color_direct_product, color_join, color_lex_product,
    color_lex_product_equal_counts, color_strong_product, join_counts_follow_from_regularity,
};

use crate::coloring::{Coloring, ColoringError};
use crate::graph::{Graph, GraphError};

/// Which construction produced a coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    CompleteGraph,
    CompleteMultipartite,
    Circulant,
    LexicographicProduct,
    LexicographicProductEqualCounts,
    DirectProduct,
    CartesianProduct,
    StrongProduct,
    Join,
    BlowUp,
    VertexAddition,
}

/// Names an input of a binary construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operand {
    G,
    H,
}

impl fmt::Display for Operand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Operand::G => "G",
            Operand::H => "H",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("part {part} has size {size}, not divisible by {q}")]
    NotAdmissible { part: usize, size: usize, q: usize },
    #[error("K_{0} has no balanced coloring; only K_1 does")]
    CompleteNotAdmissible(usize),
    #[error("{0}")]
    HypothesisViolation(CirculantClause),
    #[error("coloring of {0} is not balanced")]
    InputNotBalanced(Operand),
    #[error("palettes differ: {0} vs {1} colors")]
    PaletteMismatch(usize, usize),
    #[error("color classes of {operand} have unequal sizes {counts:?}")]
    CountsNotEqual { operand: Operand, counts: Vec<usize> },
    #[error("{0}")]
    BadAnchors(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

impl ConstructError {
    /// Stable variant name, used in command-line diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            ConstructError::NotAdmissible { .. } | ConstructError::CompleteNotAdmissible(_) => {
                "NotAdmissible"
            }
            ConstructError::HypothesisViolation(_) => "HypothesisViolation",
            ConstructError::InputNotBalanced(_) => "InputNotBalanced",
            ConstructError::PaletteMismatch(..) => "PaletteMismatch",
            ConstructError::CountsNotEqual { .. } => "CountsNotEqual",
            ConstructError::BadAnchors(_) => "BadAnchors",
            ConstructError::Graph(GraphError::SizeOverflow { .. }) => "SizeOverflow",
            ConstructError::Graph(_) => "InvalidGraph",
            ConstructError::Coloring(ColoringError::LengthMismatch { .. }) => "LengthMismatch",
            ConstructError::Coloring(_) => "InvalidColoring",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionResult {
    /// The graph the coloring belongs to, when the construction builds one.
    pub graph: Option<Graph>,
    pub coloring: Coloring,
    pub provenance: Provenance,
}

impl ConstructionResult {
    fn new(graph: Option<Graph>, coloring: Coloring, provenance: Provenance) -> Self {
        if let Some(g) = &graph {
            debug_assert_eq!(coloring.is_balanced(g), Ok(true), "{provenance:?} postcondition");
        }
        ConstructionResult { graph, coloring, provenance }
    }
}

fn require_balanced(g: &Graph, c: &Coloring, operand: Operand) -> Result<(), ConstructError> {
    if c.is_balanced(g)? {
        Ok(())
    } else {
        Err(ConstructError::InputNotBalanced(operand))
    }
}

fn require_equal_counts(c: &Coloring, operand: Operand) -> Result<(), ConstructError> {
    if c.has_equal_class_sizes() {
        Ok(())
    } else {
        Err(ConstructError::CountsNotEqual { operand, counts: c.class_sizes() })
    }
}

fn require_same_palette(cg: &Coloring, ch: &Coloring) -> Result<(), ConstructError> {
    if cg.palette() == ch.palette() {
        Ok(())
    } else {
        Err(ConstructError::PaletteMismatch(cg.q(), ch.q()))
    }
}
