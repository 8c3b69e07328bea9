use std::fmt;

use super::{ConstructError, ConstructionResult, Provenance};
use crate::coloring::{Coloring, Palette};
use crate::family::FamilySpec;

/// `K_n` has a balanced coloring only for `n = 1`: for `n >= 2` the degree
/// `n - 1` and the order `n` cannot both be multiples of `q`.
pub fn admits_complete(n: usize, _palette: Palette) -> bool {
    n == 1
}

pub fn color_complete(n: usize, palette: Palette) -> Result<ConstructionResult, ConstructError> {
    let graph = FamilySpec::Complete(n).generate()?;
    if !admits_complete(n, palette) {
        return Err(ConstructError::CompleteNotAdmissible(n));
    }
    let coloring = Coloring::new_unchecked(palette, vec![0; n]);
    Ok(ConstructionResult::new(Some(graph), coloring, Provenance::CompleteGraph))
}

/// Colors `K_{n_1, ..., n_p}` when every part size is a multiple of `q`:
/// within each part, consecutive blocks of `n_i / q` vertices take colors
/// `0, 1, ..., q-1`.
pub fn color_complete_multipartite(
    parts: &[usize],
    palette: Palette,
) -> Result<ConstructionResult, ConstructError> {
    let graph = FamilySpec::Multipartite(parts.to_vec()).generate()?;
    let q = palette.q();
    if let Some((i, &size)) = parts.iter().enumerate().find(|(_, &s)| s % q != 0) {
        return Err(ConstructError::NotAdmissible { part: i + 1, size, q });
    }
    let colors = parts
        .iter()
        .flat_map(|&size| (0..size).map(move |i| i / (size / q)))
        .collect();
    let coloring = Coloring::new_unchecked(palette, colors);
    Ok(ConstructionResult::new(Some(graph), coloring, Provenance::CompleteMultipartite))
}

/// `K_{a,b} x K_{c,d}` admits a balanced coloring iff one factor does, i.e.
/// iff `q` divides both parts of one factor.
pub fn admits_bipartite_direct(a: usize, b: usize, c: usize, d: usize, palette: Palette) -> bool {
    let q = palette.q();
    (a % q == 0 && b % q == 0) || (c % q == 0 && d % q == 0)
}

/// The hypothesis of the circulant construction that an input violates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CirculantClause {
    /// The connection set must have exactly `q` elements.
    Count { expected: usize, actual: usize },
    /// `n` must be a multiple of `2q`.
    Order { n: usize, q: usize },
    /// Need `1 <= a_1 < ... < a_q < n/2`.
    Range { n: usize, connections: Vec<usize> },
    /// Consecutive differences must all be congruent to one `p` in `1..q`.
    /// `residues` lists `(a_{i+1} - a_i) mod q` for each consecutive pair.
    DifferencePattern { q: usize, residues: Vec<usize> },
}

impl fmt::Display for CirculantClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CirculantClause::Count { expected, actual } => {
                write!(f, "connection count: need {expected} connections, got {actual}")
            }
            CirculantClause::Order { n, q } => {
                write!(f, "order: n = {n} is not a multiple of {}", 2 * q)
            }
            CirculantClause::Range { n, connections } => write!(
                f,
                "range: connections {connections:?} are not strictly increasing within [1, {n}/2)"
            ),
            CirculantClause::DifferencePattern { q, residues } => {
                if residues.iter().all(|&r| r == residues[0]) {
                    write!(
                        f,
                        "difference pattern p={}: consecutive differences must be a nonzero constant mod {q}",
                        residues[0]
                    )
                } else {
                    write!(
                        f,
                        "difference pattern: consecutive differences mod {q} are {residues:?}, not constant"
                    )
                }
            }
        }
    }
}

fn check_circulant(n: usize, conn: &[usize], q: usize) -> Result<(), CirculantClause> {
    if conn.len() != q {
        return Err(CirculantClause::Count { expected: q, actual: conn.len() });
    }
    if n % (2 * q) != 0 {
        return Err(CirculantClause::Order { n, q });
    }
    let increasing = conn.windows(2).all(|w| w[0] < w[1]);
    if !increasing || conn[0] < 1 || 2 * conn[q - 1] >= n {
        return Err(CirculantClause::Range { n, connections: conn.to_vec() });
    }
    let residues: Vec<usize> = conn.windows(2).map(|w| (w[1] - w[0]) % q).collect();
    if residues[0] == 0 || residues.iter().any(|&r| r != residues[0]) {
        return Err(CirculantClause::DifferencePattern { q, residues });
    }
    Ok(())
}

/// Colors `C_n(a_1, ..., a_q)` when `2q | n`, `1 <= a_1 < ... < a_q < n/2`
/// and all consecutive differences are congruent to one nonzero `p` mod q.
///
/// With the 1-based label `x = v + 1`, the signed color is `0` when
/// `x ≡ 1`, `+j` when `x ≡ 2j` and `-j` when `x ≡ 2j + 1 (mod q)`. The
/// shifts `v + a_i` then run over every residue mod q exactly once, and so do
/// the shifts `v - a_i`.
pub fn color_circulant(
    n: usize,
    connections: &[usize],
    palette: Palette,
) -> Result<ConstructionResult, ConstructError> {
    let q = palette.q();
    check_circulant(n, connections, q).map_err(ConstructError::HypothesisViolation)?;
    let graph = FamilySpec::Circulant { n, connections: connections.to_vec() }.generate()?;
    let colors = (0..n)
        .map(|v| palette.index_of_signed(circulant_signed_label(v + 1, q)))
        .collect();
    let coloring = Coloring::new_unchecked(palette, colors);
    Ok(ConstructionResult::new(Some(graph), coloring, Provenance::Circulant))
}

fn circulant_signed_label(x: usize, q: usize) -> i64 {
    let k = (q - 1) / 2;
    let r = x % q;
    if r == 1 {
        return 0;
    }
    // Residues 2, 4, ..., 2k give +1..+k; residues 3, 5, ..., 2k+1 give -1..-k.
    let r = if r == 0 { q } else { r };
    let j = (r / 2) as i64;
    debug_assert!((1..=k as i64).contains(&j));
    if r % 2 == 0 {
        j
    } else {
        -j
    }
}
