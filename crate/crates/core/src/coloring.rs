//! Palettes of `q = 2k + 1` colors and total vertex colorings.
//!
//! Colors are 0-based indices; index `i` is the color `R_{i+1}`. The signed
//! view maps indices onto `-k..=k` with index 0 fixed at 0.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("color count {0} is not an odd prime")]
    InvalidPalette(usize),
    #[error("index {index} out of range 0..{bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("coloring has {actual} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("color {color} at vertex {vertex} is not below q = {q}")]
    ColorOutOfRange { vertex: usize, color: usize, q: usize },
    #[error("color map is not a permutation of 0..{0}")]
    NotAPermutation(usize),
}

fn is_prime(q: usize) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The number of colors `q`, always an odd prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Palette {
    q: usize,
}

impl Palette {
    pub fn new(q: usize) -> Result<Self, ColoringError> {
        if q >= 3 && is_prime(q) {
            Ok(Palette { q })
        } else {
            Err(ColoringError::InvalidPalette(q))
        }
    }

    pub fn q(self) -> usize {
        self.q
    }

    /// `k` with `q = 2k + 1`.
    pub fn k(self) -> usize {
        (self.q - 1) / 2
    }

    /// Signed label of a color index: `0 -> 0`, `j -> +j` and `q-j -> -j`
    /// for `1 <= j <= k`.
    pub fn signed_label(self, index: usize) -> Result<i64, ColoringError> {
        if index >= self.q {
            return Err(ColoringError::IndexOutOfRange { index, bound: self.q });
        }
        Ok(if index <= self.k() {
            index as i64
        } else {
            index as i64 - self.q as i64
        })
    }

    /// Inverse of [`Palette::signed_label`], extended to all integers mod q.
    pub fn index_of_signed(self, label: i64) -> usize {
        label.rem_euclid(self.q as i64) as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    palette: Palette,
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(palette: Palette, colors: Vec<usize>) -> Result<Self, ColoringError> {
        if let Some((vertex, &color)) = colors.iter().enumerate().find(|(_, &c)| c >= palette.q) {
            return Err(ColoringError::ColorOutOfRange { vertex, color, q: palette.q });
        }
        Ok(Coloring { palette, colors })
    }

    pub(crate) fn new_unchecked(palette: Palette, colors: Vec<usize>) -> Self {
        debug_assert!(colors.iter().all(|&c| c < palette.q));
        Coloring { palette, colors }
    }

    pub fn palette(&self) -> Palette {
        self.palette
    }

    pub fn q(&self) -> usize {
        self.palette.q
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn into_colors(self) -> Vec<usize> {
        self.colors
    }

    /// Number of vertices of each color, `σ(R_i)`.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.q()];
        for &c in &self.colors {
            sizes[c] += 1;
        }
        sizes
    }

    pub fn has_equal_class_sizes(&self) -> bool {
        let sizes = self.class_sizes();
        sizes.iter().all(|&s| s == sizes[0])
    }

    /// Shifts every color cyclically: `i -> (i + shift) mod q`.
    pub fn rotate(&self, shift: i64) -> Coloring {
        let s = self.palette.index_of_signed(shift);
        let q = self.q();
        Coloring::new_unchecked(self.palette, self.colors.iter().map(|&c| (c + s) % q).collect())
    }

    /// Replaces color `i` by `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Coloring, ColoringError> {
        let q = self.q();
        let mut seen = vec![false; q];
        if perm.len() != q {
            return Err(ColoringError::NotAPermutation(q));
        }
        for &p in perm {
            if p >= q || std::mem::replace(&mut seen[p], true) {
                return Err(ColoringError::NotAPermutation(q));
            }
        }
        Ok(Coloring::new_unchecked(
            self.palette,
            self.colors.iter().map(|&c| perm[c]).collect(),
        ))
    }

    pub(crate) fn check_matches(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.len() != g.order() {
            return Err(ColoringError::LengthMismatch {
                expected: g.order(),
                actual: self.len(),
            });
        }
        Ok(())
    }

    fn check_vertex(&self, g: &Graph, v: usize) -> Result<(), ColoringError> {
        self.check_matches(g)?;
        if v >= g.order() {
            return Err(ColoringError::IndexOutOfRange { index: v, bound: g.order() });
        }
        Ok(())
    }

    /// Sum of the signed labels over the neighborhood of `v`.
    ///
    /// Zero at every vertex is necessary for balance but not sufficient, so
    /// this is a diagnostic only.
    pub fn weight(&self, g: &Graph, v: usize) -> Result<i64, ColoringError> {
        self.check_vertex(g, v)?;
        g.neighbors(v)
            .iter()
            .map(|&u| self.palette.signed_label(self.colors[u]))
            .sum()
    }

    /// How many neighbors of `v` carry each color.
    pub fn neighbor_color_counts(&self, g: &Graph, v: usize) -> Result<Vec<usize>, ColoringError> {
        self.check_vertex(g, v)?;
        Ok(self.counts_unchecked(g, v))
    }

    pub(crate) fn counts_unchecked(&self, g: &Graph, v: usize) -> Vec<usize> {
        let mut counts = vec![0; self.q()];
        for &u in g.neighbors(v) {
            counts[self.colors[u]] += 1;
        }
        counts
    }

    /// True iff every vertex sees each color equally often among its
    /// neighbors.
    pub fn is_balanced(&self, g: &Graph) -> Result<bool, ColoringError> {
        self.check_matches(g)?;
        let q = self.q();
        let mut counts = vec![0usize; q];
        for v in 0..g.order() {
            let deg = g.degree(v);
            if deg % q != 0 {
                return Ok(false);
            }
            counts.iter_mut().for_each(|c| *c = 0);
            for &u in g.neighbors(v) {
                counts[self.colors[u]] += 1;
            }
            if counts.iter().any(|&c| c * q != deg) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
