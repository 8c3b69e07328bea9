//! Named graph families: cycles, complete graphs, complete multipartite graphs
//! and circulants.

use std::fmt;
use std::str::FromStr;

use crate::graph::{check_order, Graph, GraphError, DEFAULT_VERTEX_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Cycle(usize),
    Complete(usize),
    /// Part sizes in the order they occupy consecutive index blocks.
    Multipartite(Vec<usize>),
    /// `C_n(a_1, ..., a_m)`: vertex `v` is adjacent to `v ± a_i (mod n)`.
    Circulant { n: usize, connections: Vec<usize> },
}

fn invalid(reason: impl Into<String>) -> GraphError {
    GraphError::InvalidFamilyParams(reason.into())
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), GraphError> {
        match self {
            FamilySpec::Cycle(n) if *n < 3 => Err(invalid(format!("cycle needs n >= 3, got {n}"))),
            FamilySpec::Complete(0) => Err(invalid("complete graph needs n >= 1")),
            FamilySpec::Multipartite(parts) => {
                if parts.len() < 2 {
                    return Err(invalid(format!(
                        "multipartite needs at least 2 parts, got {}",
                        parts.len()
                    )));
                }
                if let Some(i) = parts.iter().position(|&s| s == 0) {
                    return Err(invalid(format!("part {} is empty", i + 1)));
                }
                Ok(())
            }
            FamilySpec::Circulant { n, connections } => {
                if *n < 3 {
                    return Err(invalid(format!("circulant needs n >= 3, got {n}")));
                }
                if connections.is_empty() {
                    return Err(invalid("circulant needs a non-empty connection set"));
                }
                if connections.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(invalid("connection set must be strictly increasing"));
                }
                if let Some(&a) = connections.iter().find(|&&a| a == 0 || a > n / 2) {
                    return Err(invalid(format!(
                        "connection {a} outside 1..={}",
                        n / 2
                    )));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// Builds the graph. Multipartite parts keep their given order.
    pub fn generate(&self) -> Result<Graph, GraphError> {
        self.validate()?;
        match self {
            FamilySpec::Cycle(n) => Ok(circulant(*n, &[1])),
            FamilySpec::Complete(n) => {
                check_order(*n as u128, DEFAULT_VERTEX_LIMIT)?;
                let adjacency = (0..*n)
                    .map(|v| (0..*n).filter(|&w| w != v).collect())
                    .collect();
                Ok(Graph::from_adjacency(adjacency))
            }
            FamilySpec::Multipartite(parts) => {
                let total = parts.iter().map(|&s| s as u128).sum();
                let n = check_order(total, DEFAULT_VERTEX_LIMIT)?;
                let mut part_of = Vec::with_capacity(n);
                for (i, &size) in parts.iter().enumerate() {
                    part_of.extend(std::iter::repeat(i).take(size));
                }
                let adjacency = (0..n)
                    .map(|v| (0..n).filter(|&w| part_of[w] != part_of[v]).collect())
                    .collect();
                Ok(Graph::from_adjacency(adjacency))
            }
            FamilySpec::Circulant { n, connections } => {
                check_order(*n as u128, DEFAULT_VERTEX_LIMIT)?;
                Ok(circulant(*n, connections))
            }
        }
    }
}

fn circulant(n: usize, connections: &[usize]) -> Graph {
    let adjacency = (0..n)
        .map(|v| {
            connections
                .iter()
                .flat_map(|&a| [(v + a) % n, (v + n - a) % n])
                .collect()
        })
        .collect();
    Graph::from_adjacency(adjacency)
}

fn parse_list(s: &str) -> Result<Vec<usize>, GraphError> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| invalid(format!("not a non-negative integer: {t:?}")))
        })
        .collect()
}

fn parse_one(s: &str) -> Result<usize, GraphError> {
    s.trim()
        .parse()
        .map_err(|_| invalid(format!("not a non-negative integer: {s:?}")))
}

/// Grammar: `cycle:N`, `complete:N`, `multipartite:N1,N2,...`,
/// `circulant:N:A1,A2,...`. Parsing also validates the parameters.
impl FromStr for FamilySpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut fields = s.splitn(3, ':');
        let kind = fields.next().unwrap_or_default();
        let first = fields.next().ok_or_else(|| invalid(format!("missing parameters in {s:?}")))?;
        let rest = fields.next();
        let spec = match (kind, rest) {
            ("cycle", None) => FamilySpec::Cycle(parse_one(first)?),
            ("complete", None) => FamilySpec::Complete(parse_one(first)?),
            ("multipartite", None) => FamilySpec::Multipartite(parse_list(first)?),
            ("circulant", Some(conn)) => FamilySpec::Circulant {
                n: parse_one(first)?,
                connections: parse_list(conn)?,
            },
            ("circulant", None) => return Err(invalid("circulant needs N:A1,A2,...")),
            _ => return Err(invalid(format!("unrecognised family {s:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn join_list(items: &[usize]) -> String {
    items.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Multipartite(parts) => write!(f, "multipartite:{}", join_list(parts)),
            FamilySpec::Circulant { n, connections } => {
                write!(f, "circulant:{n}:{}", join_list(connections))
            }
        }
    }
}
