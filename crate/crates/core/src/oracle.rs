//! Independent checks: the raw pairwise radio condition, optimality
//! certificates, and an exact radio-number solver for small trees.
//!
//! Nothing here uses orders, levels or the label recurrence, except that
//! [`certify`] compares a span against `lb(T)` and the solver may stop
//! early once it reaches it.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::labeling::RadioLabeling;
use crate::tree::{Tree, Vertex};
use crate::ErrorName;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("labeling has {got} labels, tree has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
}

impl ErrorName for OracleError {
    fn name(&self) -> &'static str {
        match self {
            OracleError::LengthMismatch { .. } => "LengthMismatch",
        }
    }
}

fn check_length(tree: &Tree, labeling: &RadioLabeling) -> Result<(), OracleError> {
    if labeling.labels().len() == tree.n() {
        Ok(())
    } else {
        Err(OracleError::LengthMismatch {
            expected: tree.n(),
            got: labeling.labels().len(),
        })
    }
}

/// First pair `(u, v)`, `u < v`, with `d(u, v) + |f(u) - f(v)| < diam + 1`.
pub fn first_conflict(
    tree: &Tree,
    labeling: &RadioLabeling,
) -> Result<Option<(Vertex, Vertex)>, OracleError> {
    check_length(tree, labeling)?;
    let reach = u64::from(tree.diam()) + 1;
    let f = labeling.labels();
    for u in tree.vertices() {
        for v in u + 1..tree.n() {
            if u64::from(tree.dist(u, v)) + f[u].abs_diff(f[v]) < reach {
                return Ok(Some((u, v)));
            }
        }
    }
    Ok(None)
}

/// Whether every pair of distinct vertices satisfies the radio condition.
pub fn is_radio_labeling(tree: &Tree, labeling: &RadioLabeling) -> Result<bool, OracleError> {
    Ok(first_conflict(tree, labeling)?.is_none())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certificate {
    /// Valid with span equal to `lb(T)`: the span is the radio number.
    ProvesRn,
    /// Valid, so `rn(T) <= span`.
    ValidUpperBound,
    Invalid,
}

/// Sandwich certificate: a valid labeling at span `lb(T)` proves
/// `rn(T) = lb(T)` without any search.
pub fn certify(tree: &Tree, labeling: &RadioLabeling) -> Result<Certificate, OracleError> {
    if !is_radio_labeling(tree, labeling)? {
        return Ok(Certificate::Invalid);
    }
    let optimal = match tree.lower_bound() {
        Ok(lb) => labeling.span() as i64 == lb,
        Err(_) => labeling.span() == 0,
    };
    Ok(if optimal {
        Certificate::ProvesRn
    } else {
        Certificate::ValidUpperBound
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    Exact,
    BudgetExhausted,
}

/// Outcome of [`exact_rn`]. When the budget runs out, `rn` is the best
/// span found, an upper bound only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub rn: u64,
    pub witness: RadioLabeling,
    pub nodes_explored: u64,
    pub status: SolveStatus,
}

/// Completion bound used to cut partial labelings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pruning {
    /// Each remaining vertex needs at least one more unit of span.
    #[default]
    Basic,
    /// Also uses `d(a, b) <= L(a) + L(b) + 1 - ε`, so consecutive labels
    /// differ by at least `d + ε - L(a) - L(b)`.
    Level,
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Cap on search nodes (one per tentative placement).
    pub budget: u64,
    pub pruning: Pruning,
    /// Threads splitting the choice of the label-0 vertex; `1` is
    /// sequential and fully deterministic.
    pub workers: usize,
    /// Stop as soon as a labeling of span `lb(T)` turns up.
    pub stop_at_lower_bound: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            budget: u64::MAX,
            pruning: Pruning::Basic,
            workers: 1,
            stop_at_lower_bound: true,
        }
    }
}

/// Exact radio number by branch and bound, default options.
pub fn exact_rn(tree: &Tree, budget: u64) -> SolveResult {
    exact_rn_with(
        tree,
        &SolveOptions {
            budget,
            ..SolveOptions::default()
        },
    )
}

/// Exact radio number by branch and bound.
///
/// Vertices are placed in increasing label order, each at the smallest
/// label the radio condition allows against everything already placed.
/// For a fixed placement order that greedy choice is pointwise minimal, so
/// minimizing over orders gives `rn(T)`. The first vertex gets label 0.
pub fn exact_rn_with(tree: &Tree, options: &SolveOptions) -> SolveResult {
    let n = tree.n();
    let (initial_span, initial_labels) = greedy_labels(tree, &bfs_from(tree, 0));
    if n == 1 {
        return SolveResult {
            rn: 0,
            witness: {
                let mut witness = RadioLabeling::new(vec![0]).expect("one label");
                witness.certified_optimal = true;
                witness
            },
            nodes_explored: 0,
            status: SolveStatus::Exact,
        };
    }
    let view = tree.root_view();
    let floor = options
        .stop_at_lower_bound
        .then(|| tree.lower_bound().expect("n >= 2") as u64);

    let shared = Shared {
        tree,
        reach: u64::from(tree.diam()) + 1,
        levels: view.levels().iter().map(|&l| i64::from(l)).collect(),
        level_step: i64::from(tree.diam()) + i64::from(view.epsilon()),
        pruning: options.pruning,
        budget: options.budget,
        floor,
        best: AtomicU64::new(initial_span),
        witness: Mutex::new((initial_span, initial_labels)),
        nodes: AtomicU64::new(0),
        out_of_budget: AtomicBool::new(false),
        done: AtomicBool::new(floor == Some(initial_span)),
        next_start: AtomicUsize::new(0),
    };

    let workers = options.workers.clamp(1, n);
    if workers == 1 {
        shared.work();
    } else {
        std::thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(|| shared.work());
            }
        });
    }

    let (rn, labels) = shared.witness.into_inner().expect("no worker panicked");
    let status = if shared.out_of_budget.load(Ordering::Relaxed) {
        SolveStatus::BudgetExhausted
    } else {
        SolveStatus::Exact
    };
    let mut witness = RadioLabeling::new(labels).expect("non-empty");
    witness.certified_optimal = certify(tree, &witness) == Ok(Certificate::ProvesRn);
    SolveResult {
        rn,
        witness,
        nodes_explored: shared.nodes.load(Ordering::Relaxed).min(options.budget),
        status,
    }
}

fn bfs_from(tree: &Tree, root: Vertex) -> Vec<Vertex> {
    let mut order = vec![root];
    let mut seen = vec![false; tree.n()];
    seen[root] = true;
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &v in tree.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                order.push(v);
            }
        }
    }
    order
}

/// Smallest labels placing `order` left to right.
fn greedy_labels(tree: &Tree, order: &[Vertex]) -> (u64, Vec<u64>) {
    let reach = u64::from(tree.diam()) + 1;
    let mut labels = vec![0u64; tree.n()];
    for (p, &u) in order.iter().enumerate().skip(1) {
        labels[u] = order[..p]
            .iter()
            .map(|&v| (labels[v] + reach).saturating_sub(u64::from(tree.dist(u, v))))
            .max()
            .expect("non-empty prefix")
            .max(labels[order[p - 1]] + 1);
    }
    (labels[order[order.len() - 1]], labels)
}

struct Shared<'a> {
    tree: &'a Tree,
    reach: u64,
    levels: Vec<i64>,
    level_step: i64,
    pruning: Pruning,
    budget: u64,
    floor: Option<u64>,
    best: AtomicU64,
    witness: Mutex<(u64, Vec<u64>)>,
    nodes: AtomicU64,
    out_of_budget: AtomicBool,
    done: AtomicBool,
    next_start: AtomicUsize,
}

struct Partial {
    order: Vec<Vertex>,
    labels: Vec<u64>,
    used: Vec<bool>,
    free_level_sum: i64,
}

impl Shared<'_> {
    fn stopped(&self) -> bool {
        self.done.load(Ordering::Relaxed) || self.out_of_budget.load(Ordering::Relaxed)
    }

    fn work(&self) {
        let n = self.tree.n();
        loop {
            let start = self.next_start.fetch_add(1, Ordering::Relaxed);
            if start >= n || self.stopped() {
                return;
            }
            let mut partial = Partial {
                order: vec![start],
                labels: vec![0; n],
                used: vec![false; n],
                free_level_sum: self.levels.iter().sum::<i64>() - self.levels[start],
            };
            partial.used[start] = true;
            self.descend(&mut partial);
        }
    }

    fn label_for(&self, partial: &Partial, u: Vertex) -> u64 {
        let last = partial.order[partial.order.len() - 1];
        partial
            .order
            .iter()
            .map(|&v| {
                (partial.labels[v] + self.reach).saturating_sub(u64::from(self.tree.dist(u, v)))
            })
            .max()
            .expect("non-empty prefix")
            .max(partial.labels[last] + 1)
    }

    /// Least span any completion can reach after placing `u` at `label`.
    fn completion_bound(&self, partial: &Partial, u: Vertex, label: u64) -> u64 {
        let remaining = (self.tree.n() - partial.order.len() - 1) as u64;
        let basic = label + remaining;
        if self.pruning == Pruning::Basic || remaining == 0 {
            return basic;
        }
        let rest_sum = partial.free_level_sum - self.levels[u];
        let rest_min = (0..self.tree.n())
            .filter(|&v| !partial.used[v] && v != u)
            .map(|v| self.levels[v])
            .min()
            .expect("remaining > 0");
        let gaps = remaining as i64 * self.level_step - self.levels[u] - 2 * rest_sum + rest_min;
        basic.max(label.saturating_add_signed(gaps))
    }

    fn descend(&self, partial: &mut Partial) {
        let n = self.tree.n();
        if partial.order.len() == n {
            let span = partial.labels[partial.order[n - 1]];
            let mut witness = self.witness.lock().expect("no worker panicked");
            if span < witness.0 {
                *witness = (span, partial.labels.clone());
                self.best.fetch_min(span, Ordering::Relaxed);
                if self.floor.is_some_and(|f| span <= f) {
                    self.done.store(true, Ordering::Relaxed);
                }
            }
            return;
        }
        let mut options: Vec<(u64, Vertex)> = (0..n)
            .filter(|&u| !partial.used[u])
            .map(|u| (self.label_for(partial, u), u))
            .collect();
        options.sort_unstable();
        for (label, u) in options {
            if self.stopped() {
                return;
            }
            if self.completion_bound(partial, u, label) >= self.best.load(Ordering::Relaxed) {
                // options are sorted by label and the bound grows with it
                // only in the basic mode
                if self.pruning == Pruning::Basic {
                    return;
                }
                continue;
            }
            if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
                self.out_of_budget.store(true, Ordering::Relaxed);
                return;
            }
            partial.order.push(u);
            partial.labels[u] = label;
            partial.used[u] = true;
            partial.free_level_sum -= self.levels[u];
            self.descend(partial);
            partial.free_level_sum += self.levels[u];
            partial.used[u] = false;
            partial.labels[u] = 0;
            partial.order.pop();
        }
    }
}
