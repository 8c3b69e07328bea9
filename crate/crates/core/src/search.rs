//! Exact search for balanced colorings of small graphs.
//!
//! [`decide`] and [`enumerate`] run a pruned backtracking search; the
//! unpruned [`brute_force_oracle`] exists to cross-check them.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::coloring::{Coloring, Palette};
use crate::graph::Graph;
use crate::verify::check_necessary;

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;
/// Largest `q^n` the brute-force oracle will enumerate.
pub const ORACLE_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    palette: Palette,
    node_budget: u64,
    time_budget: Option<Duration>,
    enumerate_limit: usize,
    symmetry_breaking: bool,
}

impl SearchConfig {
    /// Node budget 10^8, no time budget, one solution, symmetry breaking on.
    pub fn new(palette: Palette) -> Self {
        SearchConfig {
            palette,
            node_budget: DEFAULT_NODE_BUDGET,
            time_budget: None,
            enumerate_limit: 1,
            symmetry_breaking: true,
        }
    }

    pub fn palette(&self) -> Palette {
        self.palette
    }

    pub fn node_budget(&self) -> u64 {
        self.node_budget
    }

    /// Clamped to at least 1.
    pub fn with_node_budget(mut self, nodes: u64) -> Self {
        self.node_budget = nodes.max(1);
        self
    }

    /// A wall-clock limit. Searches that hit it report
    /// [`SearchStatus::BudgetExceeded`]; unlike the node budget this makes
    /// the outcome depend on machine speed.
    pub fn with_time_budget(mut self, limit: Duration) -> Self {
        self.time_budget = Some(limit);
        self
    }

    /// Clamped to at least 1; `usize::MAX` means no limit.
    pub fn with_enumerate_limit(mut self, limit: usize) -> Self {
        self.enumerate_limit = limit.max(1);
        self
    }

    pub fn unlimited(self) -> Self {
        self.with_enumerate_limit(usize::MAX)
    }

    pub fn with_symmetry_breaking(mut self, on: bool) -> Self {
        self.symmetry_breaking = on;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchStatus {
    Found,
    /// The whole space was searched and no balanced coloring exists.
    Exhausted,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    /// Solutions in discovery order. With `BudgetExceeded` this holds
    /// whatever was found before the budget ran out.
    pub colorings: Vec<Coloring>,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("{q}^{n} colorings exceeds the oracle cap of {cap}")]
    InstanceTooLarge { q: usize, n: usize, cap: u64 },
}

/// Looks for one balanced coloring.
pub fn decide(g: &Graph, config: &SearchConfig) -> SearchOutcome {
    enumerate(g, &config.clone().with_enumerate_limit(1))
}

/// Collects up to `enumerate_limit` balanced colorings.
///
/// Vertices are colored in order of decreasing degree (ties by index). A
/// branch is cut as soon as some vertex has more than `deg(v)/q` colored
/// neighbors of one color. With symmetry breaking, the k-th distinct color
/// to appear along that order is always `k - 1`, so each class of colorings
/// under color permutation is visited exactly once.
pub fn enumerate(g: &Graph, config: &SearchConfig) -> SearchOutcome {
    if !check_necessary(g, config.palette).degrees_divisible {
        return SearchOutcome {
            status: SearchStatus::Exhausted,
            colorings: Vec::new(),
            nodes_explored: 0,
        };
    }
    let mut search = Backtracker::new(g, config);
    let complete = search.run(0, 0);
    let status = match (complete, search.solutions.is_empty()) {
        (false, _) => SearchStatus::BudgetExceeded,
        (true, true) => SearchStatus::Exhausted,
        (true, false) => SearchStatus::Found,
    };
    let palette = config.palette;
    SearchOutcome {
        status,
        colorings: search
            .solutions
            .into_iter()
            .map(|colors| Coloring::new_unchecked(palette, colors))
            .collect(),
        nodes_explored: search.nodes,
    }
}

struct Backtracker<'a> {
    g: &'a Graph,
    q: usize,
    order: Vec<usize>,
    /// Allowed number of neighbors of each color, `deg(v) / q`.
    cap: Vec<u32>,
    /// `counts[v * q + t]`: colored neighbors of `v` with color `t`.
    counts: Vec<u32>,
    colors: Vec<usize>,
    solutions: Vec<Vec<usize>>,
    limit: usize,
    symmetry_breaking: bool,
    nodes: u64,
    node_budget: u64,
    deadline: Option<Instant>,
}

impl<'a> Backtracker<'a> {
    fn new(g: &'a Graph, config: &SearchConfig) -> Self {
        let n = g.order();
        let q = config.palette.q();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        Backtracker {
            g,
            q,
            order,
            cap: (0..n).map(|v| (g.degree(v) / q) as u32).collect(),
            counts: vec![0; n * q],
            colors: vec![usize::MAX; n],
            solutions: Vec::new(),
            limit: config.enumerate_limit,
            symmetry_breaking: config.symmetry_breaking,
            nodes: 0,
            node_budget: config.node_budget,
            deadline: config.time_budget.map(|d| Instant::now() + d),
        }
    }

    /// Returns false if the search stopped on a budget; true if it finished
    /// the subtree or reached the solution limit.
    fn run(&mut self, depth: usize, used: usize) -> bool {
        if depth == self.order.len() {
            debug_assert!(self.is_balanced_now());
            self.solutions.push(self.colors.clone());
            return true;
        }
        let v = self.order[depth];
        let choices = if self.symmetry_breaking { (used + 1).min(self.q) } else { self.q };
        for t in 0..choices {
            if self.nodes >= self.node_budget || self.deadline_passed() {
                return false;
            }
            self.nodes += 1;
            if self.assign(v, t) {
                let next_used = if t == used { used + 1 } else { used };
                let finished = self.run(depth + 1, next_used);
                self.unassign(v, t);
                if !finished {
                    return false;
                }
                if self.solutions.len() >= self.limit {
                    return true;
                }
            } else {
                self.unassign(v, t);
            }
        }
        true
    }

    fn deadline_passed(&self) -> bool {
        match self.deadline {
            Some(d) if self.nodes % 1024 == 0 => Instant::now() >= d,
            _ => false,
        }
    }

    /// Colors `v` with `t` and updates its neighbors' counts. Returns false
    /// if some neighbor now exceeds its cap for `t`; the caller undoes the
    /// assignment either way.
    ///
    /// Each cap check also covers the deficit condition: a vertex's colored
    /// and uncolored neighbors add up to `q * cap`, so with no color over its
    /// cap the uncolored neighbors exactly fill the remaining deficits.
    fn assign(&mut self, v: usize, t: usize) -> bool {
        self.colors[v] = t;
        let mut ok = true;
        for &w in self.g.neighbors(v) {
            let c = &mut self.counts[w * self.q + t];
            *c += 1;
            if *c > self.cap[w] {
                ok = false;
            }
        }
        ok
    }

    fn unassign(&mut self, v: usize, t: usize) {
        self.colors[v] = usize::MAX;
        for &w in self.g.neighbors(v) {
            self.counts[w * self.q + t] -= 1;
        }
    }

    fn is_balanced_now(&self) -> bool {
        (0..self.g.order()).all(|v| {
            (0..self.q).all(|t| self.counts[v * self.q + t] == self.cap[v])
        })
    }
}

/// Checks all `q^n` colorings, in odometer order with vertex 0 as the least
/// significant digit, and returns every balanced one. No pruning, no
/// symmetry breaking, no degree pre-filter.
pub fn brute_force_oracle(g: &Graph, palette: Palette) -> Result<SearchOutcome, SearchError> {
    let (n, q) = (g.order(), palette.q());
    let total = (q as u64)
        .checked_pow(n as u32)
        .filter(|&t| t <= ORACLE_CAP)
        .ok_or(SearchError::InstanceTooLarge { q, n, cap: ORACLE_CAP })?;
    let mut digits = vec![0usize; n];
    let mut colorings = Vec::new();
    for _ in 0..total {
        let candidate = Coloring::new_unchecked(palette, digits.clone());
        if candidate.is_balanced(g).expect("length matches") {
            colorings.push(candidate);
        }
        for d in digits.iter_mut() {
            *d += 1;
            if *d < q {
                break;
            }
            *d = 0;
        }
    }
    let status = if colorings.is_empty() { SearchStatus::Exhausted } else { SearchStatus::Found };
    Ok(SearchOutcome { status, colorings, nodes_explored: total })
}
