//! Colorings of products and joins built from colorings of the factors.
//!
//! The cartesian, strong and lexicographic constructions all use the
//! additive coloring `(u, v) -> cG(u) + cH(v) mod q`: the H-layer over `u`
//! carries `cH` rotated by `cG(u)`, and the G-layer over `v` carries `cG`
//! rotated by `cH(v)`.

use super::{
    require_balanced, require_equal_counts, require_same_palette, ConstructError,
    ConstructionResult, Operand, Provenance,
};
use crate::coloring::Coloring;
use crate::graph::Graph;
use crate::product::{join, product, ProductKind};

fn additive(cg: &Coloring, ch: &Coloring) -> Coloring {
    let q = cg.q();
    let colors = cg
        .colors()
        .iter()
        .flat_map(|&a| ch.colors().iter().map(move |&b| (a + b) % q))
        .collect();
    Coloring::new_unchecked(cg.palette(), colors)
}

fn additive_product(
    kind: ProductKind,
    g: &Graph,
    cg: &Coloring,
    h: &Graph,
    ch: &Coloring,
    provenance: Provenance,
) -> Result<ConstructionResult, ConstructError> {
    require_same_palette(cg, ch)?;
    require_balanced(g, cg, Operand::G)?;
    require_balanced(h, ch, Operand::H)?;
    let graph = product(kind, g, h)?;
    Ok(ConstructionResult::new(Some(graph), additive(cg, ch), provenance))
}

/// `G[H]` from balanced colorings of both factors.
pub fn color_lex_product(
    g: &Graph,
    cg: &Coloring,
    h: &Graph,
    ch: &Coloring,
) -> Result<ConstructionResult, ConstructError> {
    additive_product(ProductKind::Lexicographic, g, cg, h, ch, Provenance::LexicographicProduct)
}

/// `G[H]` for arbitrary `G`, from a balanced coloring of `H` whose color
/// classes all have the same size. Every H-layer gets `cH` unchanged.
pub fn color_lex_product_equal_counts(
    g: &Graph,
    h: &Graph,
    ch: &Coloring,
) -> Result<ConstructionResult, ConstructError> {
    require_balanced(h, ch, Operand::H)?;
    require_equal_counts(ch, Operand::H)?;
    let graph = product(ProductKind::Lexicographic, g, h)?;
    let colors = (0..g.order()).flat_map(|_| ch.colors().iter().copied()).collect();
    let coloring = Coloring::new_unchecked(ch.palette(), colors);
    Ok(ConstructionResult::new(
        Some(graph),
        coloring,
        Provenance::LexicographicProductEqualCounts,
    ))
}

/// `G x H` for arbitrary `H`: every G-layer gets `cG`.
pub fn color_direct_product(
    g: &Graph,
    cg: &Coloring,
    h: &Graph,
) -> Result<ConstructionResult, ConstructError> {
    require_balanced(g, cg, Operand::G)?;
    let graph = product(ProductKind::Direct, g, h)?;
    let colors = cg
        .colors()
        .iter()
        .flat_map(|&a| std::iter::repeat(a).take(h.order()))
        .collect();
    let coloring = Coloring::new_unchecked(cg.palette(), colors);
    Ok(ConstructionResult::new(Some(graph), coloring, Provenance::DirectProduct))
}

pub fn color_cartesian_product(
    g: &Graph,
    cg: &Coloring,
    h: &Graph,
    ch: &Coloring,
) -> Result<ConstructionResult, ConstructError> {
    additive_product(ProductKind::Cartesian, g, cg, h, ch, Provenance::CartesianProduct)
}

pub fn color_strong_product(
    g: &Graph,
    cg: &Coloring,
    h: &Graph,
    ch: &Coloring,
) -> Result<ConstructionResult, ConstructError> {
    additive_product(ProductKind::Strong, g, cg, h, ch, Provenance::StrongProduct)
}

/// `G + H` from balanced colorings whose color classes are equal-sized
/// within each input. The result is `cG` followed by `cH`.
pub fn color_join(
    g: &Graph,
    cg: &Coloring,
    h: &Graph,
    ch: &Coloring,
) -> Result<ConstructionResult, ConstructError> {
    require_same_palette(cg, ch)?;
    require_balanced(g, cg, Operand::G)?;
    require_balanced(h, ch, Operand::H)?;
    require_equal_counts(cg, Operand::G)?;
    require_equal_counts(ch, Operand::H)?;
    let graph = join(g, h)?;
    let colors = cg.colors().iter().chain(ch.colors()).copied().collect();
    let coloring = Coloring::new_unchecked(cg.palette(), colors);
    Ok(ConstructionResult::new(Some(graph), coloring, Provenance::Join))
}

/// True when both graphs are regular of positive degree, in which case any
/// balanced coloring of either already has equal color classes and
/// [`color_join`] cannot fail on class sizes.
pub fn join_counts_follow_from_regularity(g: &Graph, h: &Graph) -> bool {
    let positive = |x: &Graph| matches!(x.regular_degree(), Some(r) if r > 0);
    positive(g) && positive(h)
}
