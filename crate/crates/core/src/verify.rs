//! Balance verification, color-class statistics and the degree/order/size
//! necessary conditions.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::coloring::{Coloring, ColoringError, Palette};
use crate::graph::Graph;

/// Non-negative rational in lowest terms. Serialized as `"a"` or `"a/b"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fraction {
    num: u64,
    den: u64,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Fraction {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        let g = gcd(num, den).max(1);
        Fraction { num: num / g, den: den / g }
    }

    pub fn as_integer(self) -> Option<u64> {
        (self.den == 1).then_some(self.num)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub expected: Fraction,
    pub actual: usize,
    pub pass: bool,
}

impl IdentityCheck {
    fn new(name: String, expected: Fraction, actual: usize) -> Self {
        let pass = expected.as_integer() == Some(actual as u64);
        IdentityCheck { name, expected, actual, pass }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub vertex: usize,
    pub counts: Vec<usize>,
}

/// Outcome of [`verify`]. Field order is the JSON key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub balanced: bool,
    pub q: usize,
    pub n: usize,
    pub m: usize,
    /// `sigma_vertex[i]`: vertices colored `i`.
    pub sigma_vertex: Vec<usize>,
    /// `sigma_edge[i][j]`: edges with end colors `{i, j}`; symmetric.
    pub sigma_edge: Vec<Vec<usize>>,
    pub identity_checks: Vec<IdentityCheck>,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn identities_hold(&self) -> bool {
        self.identity_checks.iter().all(|c| c.pass)
    }
}

/// Checks balance by comparing neighbor color counts at every vertex, and
/// collects the color-class and edge statistics.
///
/// The identity checks compare the edge statistics with `2m/q^2` (two
/// distinct colors) and `m/q^2` (one color), and, for regular graphs of
/// positive degree, the class sizes with `n/q`. A balanced coloring satisfies
/// all of them; an unbalanced one may or may not.
pub fn verify(g: &Graph, coloring: &Coloring) -> Result<VerificationReport, ColoringError> {
    coloring.check_matches(g)?;
    let q = coloring.q();
    let (n, m) = (g.order(), g.edge_count());

    let violations: Vec<Violation> = (0..n)
        .filter_map(|v| {
            let counts = coloring.counts_unchecked(g, v);
            (!counts.iter().all(|&c| c == counts[0])).then_some(Violation { vertex: v, counts })
        })
        .collect();

    let sigma_vertex = coloring.class_sizes();
    let mut sigma_edge = vec![vec![0; q]; q];
    for (u, v) in g.edges() {
        let (a, b) = (coloring.color(u), coloring.color(v));
        sigma_edge[a][b] += 1;
        if a != b {
            sigma_edge[b][a] += 1;
        }
    }

    let q2 = (q * q) as u64;
    let mut identity_checks = Vec::new();
    for i in 0..q {
        for j in i..q {
            let (name, expected) = if i == j {
                (format!("sigma_edge[{i}][{i}] = m/q^2"), Fraction::new(m as u64, q2))
            } else {
                (format!("sigma_edge[{i}][{j}] = 2m/q^2"), Fraction::new(2 * m as u64, q2))
            };
            identity_checks.push(IdentityCheck::new(name, expected, sigma_edge[i][j]));
        }
    }
    if matches!(g.regular_degree(), Some(r) if r > 0) {
        for (i, &size) in sigma_vertex.iter().enumerate() {
            identity_checks.push(IdentityCheck::new(
                format!("sigma_vertex[{i}] = n/q"),
                Fraction::new(n as u64, q as u64),
                size,
            ));
        }
    }

    Ok(VerificationReport {
        balanced: violations.is_empty(),
        q,
        n,
        m,
        sigma_vertex,
        sigma_edge,
        identity_checks,
        violations,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NecessaryFailure {
    DegreeNotDivisible { vertex: usize, degree: usize, q: usize },
    OrderNotDivisible { n: usize, q: usize },
    SizeNotDivisible { m: usize, q_squared: usize },
}

impl fmt::Display for NecessaryFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            NecessaryFailure::DegreeNotDivisible { vertex, degree, q } => {
                write!(f, "degree {degree} of vertex {vertex} not divisible by {q}")
            }
            NecessaryFailure::OrderNotDivisible { n, q } => {
                write!(f, "regular graph order {n} not divisible by {q}")
            }
            NecessaryFailure::SizeNotDivisible { m, q_squared } => {
                write!(f, "regular graph size {m} not divisible by {q_squared}")
            }
        }
    }
}

/// Result of [`check_necessary`]. Passing does not imply that a balanced
/// coloring exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NecessaryReport {
    pub q: usize,
    pub degrees_divisible: bool,
    /// Common degree, when the graph is regular.
    pub regular_degree: Option<usize>,
    /// Order and size checks; only evaluated for regular graphs of positive
    /// degree.
    pub order_divisible: Option<bool>,
    pub size_divisible: Option<bool>,
    pub first_failure: Option<NecessaryFailure>,
}

impl NecessaryReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

pub fn check_necessary(g: &Graph, palette: Palette) -> NecessaryReport {
    let q = palette.q();
    let degree_failure = (0..g.order()).find_map(|v| {
        let degree = g.degree(v);
        (degree % q != 0).then_some(NecessaryFailure::DegreeNotDivisible { vertex: v, degree, q })
    });
    let regular_degree = g.regular_degree();
    let (order_divisible, size_divisible) = match regular_degree {
        Some(r) if r > 0 => (
            Some(g.order() % q == 0),
            Some(g.edge_count() % (q * q) == 0),
        ),
        _ => (None, None),
    };
    let first_failure = degree_failure
        .or_else(|| {
            (order_divisible == Some(false))
                .then_some(NecessaryFailure::OrderNotDivisible { n: g.order(), q })
        })
        .or_else(|| {
            (size_divisible == Some(false)).then_some(NecessaryFailure::SizeNotDivisible {
                m: g.edge_count(),
                q_squared: q * q,
            })
        });
    NecessaryReport {
        q,
        degrees_divisible: degree_failure.is_none(),
        regular_degree,
        order_divisible,
        size_divisible,
        first_failure,
    }
}
