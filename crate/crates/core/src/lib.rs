//! Neighborhood balanced colorings with an odd prime number of colors.
//!
//! A coloring of a simple graph with `q = 2k + 1` colors (q prime) is
//! *balanced* when every vertex has the same number of neighbors of each
//! color. This crate provides:
//!
//! - [`Graph`], named families ([`FamilySpec`]) and the four standard graph
//!   products plus the join ([`product`]);
//! - [`verify`](verify::verify) with color-class and edge statistics, and the
//!   degree/order/size necessary conditions;
//! - closed-form constructions in [`constructors`];
//! - an exact backtracking [`search`] with a brute-force oracle;
//! - the plain-text file formats in [`io`].

pub mod coloring;
pub mod constructors;
pub mod family;
pub mod graph;
pub mod io;
pub mod product;
pub mod search;
pub mod verify;

pub use coloring::{Coloring, ColoringError, Palette};
pub use family::FamilySpec;
pub use graph::{Graph, GraphError, DEFAULT_VERTEX_LIMIT};
pub use product::{join, product, ProductKind};
pub use verify::{check_necessary, verify, NecessaryReport, VerificationReport};
