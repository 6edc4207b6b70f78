//! Linear orders, the distance condition on them, and the labels they induce.
//!
//! For a tree with diameter `d`, `ε = ε(T)` and levels `L`, an order
//! `u_0, ..., u_{n-1}` attains the lower bound exactly when
//!
//! * `u_0` is the weight center and `u_{n-1}` one of its neighbors (one
//!   center), or `{u_0, u_{n-1}}` are the two centers (two centers); and
//! * for all `i < j`:
//!   `d(u_i, u_j) >= Σ_{t=i}^{j-1} (L(u_t) + L(u_{t+1})) - (j - i)(d + ε) + (d + 1)`.
//!
//! The labels `f(u_0) = 0`, `f(u_{i+1}) = f(u_i) - L(u_{i+1}) - L(u_i) + (d + ε)`
//! are then an optimal radio labeling. All arithmetic is exact integer.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::compose::{CompositeKind, CompositeSpec};
use crate::oracle;
use crate::tree::{RootedView, Tree, TreeError, Vertex};
use crate::ErrorName;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("label recurrence went negative at position {position}")]
    NegativeLabel { position: usize },
    #[error("order for component {0} does not satisfy the order condition")]
    ComponentOrderInvalid(usize),
    #[error("base order does not satisfy the order condition")]
    BaseOrderInvalid,
    #[error("expected {expected} orders, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("composite is {got}, this ordering needs {expected}")]
    WrongKind {
        expected: CompositeKind,
        got: CompositeKind,
    },
    #[error("search budget of {budget} nodes exhausted")]
    BudgetExhausted { budget: u64 },
    #[error(transparent)]
    Tree(#[from] TreeError),
}

impl ErrorName for LabelingError {
    fn name(&self) -> &'static str {
        match self {
            LabelingError::NotAPermutation(_) => "NotAPermutation",
            LabelingError::NegativeLabel { .. } => "NegativeLabel",
            LabelingError::ComponentOrderInvalid(_) => "ComponentOrderInvalid",
            LabelingError::BaseOrderInvalid => "BaseOrderInvalid",
            LabelingError::ArityMismatch { .. } => "ArityMismatch",
            LabelingError::WrongKind { .. } => "WrongKind",
            LabelingError::BudgetExhausted { .. } => "BudgetExhausted",
            LabelingError::Tree(e) => e.name(),
        }
    }
}

/// A permutation `u_0, ..., u_{n-1}` of `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "OrderJson", into = "OrderJson")]
pub struct LinearOrder(Vec<Vertex>);

/// `{"order": [v0, v1, ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderJson {
    pub order: Vec<Vertex>,
}

impl TryFrom<OrderJson> for LinearOrder {
    type Error = LabelingError;

    fn try_from(json: OrderJson) -> Result<Self, Self::Error> {
        LinearOrder::new(json.order)
    }
}

impl From<LinearOrder> for OrderJson {
    fn from(order: LinearOrder) -> Self {
        OrderJson { order: order.0 }
    }
}

impl LinearOrder {
    pub fn new(seq: Vec<Vertex>) -> Result<LinearOrder, LabelingError> {
        let n = seq.len();
        if n == 0 {
            return Err(LabelingError::NotAPermutation("empty order".into()));
        }
        let mut seen = vec![false; n];
        for &v in &seq {
            if v >= n {
                return Err(LabelingError::NotAPermutation(format!(
                    "vertex {v} out of range for {n} positions"
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(LabelingError::NotAPermutation(format!(
                    "vertex {v} repeats"
                )));
            }
        }
        Ok(LinearOrder(seq))
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    fn for_tree(&self, tree: &Tree) -> Result<&[Vertex], LabelingError> {
        if self.0.len() != tree.n() {
            return Err(LabelingError::NotAPermutation(format!(
                "order has {} entries, tree has {} vertices",
                self.0.len(),
                tree.n()
            )));
        }
        Ok(&self.0)
    }
}

/// A pair `(i, j)` for which the distance condition fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub i: usize,
    pub j: usize,
    /// `d(u_i, u_j)`.
    pub distance: i64,
    /// The right-hand side the distance fell short of.
    pub bound: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderReport {
    /// Whether the first and last vertices are placed as required.
    pub endpoints_ok: bool,
    /// First failing pair in `(i, j)` lexicographic order.
    pub violation: Option<Violation>,
}

impl OrderReport {
    pub fn passes(&self) -> bool {
        self.endpoints_ok && self.violation.is_none()
    }
}

fn endpoints_ok(tree: &Tree, view: &RootedView, seq: &[Vertex]) -> bool {
    let (first, last) = (seq[0], seq[seq.len() - 1]);
    if seq.len() == 1 {
        return true;
    }
    match *view.centers() {
        [w] => first == w && tree.neighbors(w).contains(&last),
        [a, b] => (first, last) == (a, b) || (first, last) == (b, a),
        _ => unreachable!("a tree has one or two weight centers"),
    }
}

/// Signed labels `g_p` from the recurrence along `seq`, before any
/// non-negativity check.
fn recurrence(tree: &Tree, view: &RootedView, seq: &[Vertex]) -> Vec<i64> {
    let step = i64::from(tree.diam()) + i64::from(view.epsilon());
    let mut g = Vec::with_capacity(seq.len());
    g.push(0i64);
    for pair in seq.windows(2) {
        let prev = *g.last().expect("non-empty");
        g.push(prev + step - i64::from(view.level(pair[0])) - i64::from(view.level(pair[1])));
    }
    g
}

/// Checks the endpoint placement and the distance condition for every pair.
///
/// The level sums are taken from prefix sums, so the whole check is
/// `O(n^2)`: the right-hand side for `(i, j)` is `(d + 1) - (g_j - g_i)`
/// where `g` is the label recurrence.
pub fn check_order(
    tree: &Tree,
    view: &RootedView,
    order: &LinearOrder,
) -> Result<OrderReport, LabelingError> {
    let seq = order.for_tree(tree)?;
    let g = recurrence(tree, view, seq);
    let reach = i64::from(tree.diam()) + 1;
    let mut violation = None;
    'outer: for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            let distance = i64::from(tree.dist(seq[i], seq[j]));
            let bound = reach - (g[j] - g[i]);
            if distance < bound {
                violation = Some(Violation {
                    i,
                    j,
                    distance,
                    bound,
                });
                break 'outer;
            }
        }
    }
    Ok(OrderReport {
        endpoints_ok: endpoints_ok(tree, view, seq),
        violation,
    })
}

/// A vertex labeling with its span.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "LabelingJson", into = "LabelingJson")]
pub struct RadioLabeling {
    labels: Vec<u64>,
    span: u64,
    pub(crate) certified_optimal: bool,
}

/// `{"labels": [f(0), f(1), ...], "span": s, "certified_optimal": bool}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingJson {
    pub labels: Vec<u64>,
    pub span: u64,
    #[serde(default)]
    pub certified_optimal: bool,
}

impl TryFrom<LabelingJson> for RadioLabeling {
    type Error = String;

    fn try_from(json: LabelingJson) -> Result<Self, Self::Error> {
        let labeling = RadioLabeling::new(json.labels).ok_or("labels must be non-empty")?;
        if labeling.span != json.span {
            return Err(format!(
                "span {} does not match the largest label {}",
                json.span, labeling.span
            ));
        }
        Ok(RadioLabeling {
            certified_optimal: json.certified_optimal,
            ..labeling
        })
    }
}

impl From<RadioLabeling> for LabelingJson {
    fn from(l: RadioLabeling) -> Self {
        LabelingJson {
            labels: l.labels,
            span: l.span,
            certified_optimal: l.certified_optimal,
        }
    }
}

impl RadioLabeling {
    /// An uncertified labeling; `None` when `labels` is empty.
    pub fn new(labels: Vec<u64>) -> Option<RadioLabeling> {
        let span = *labels.iter().max()?;
        Some(RadioLabeling {
            labels,
            span,
            certified_optimal: false,
        })
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> u64 {
        self.labels[v]
    }

    pub fn span(&self) -> u64 {
        self.span
    }

    /// Set only when the labeling is valid and its span equals `lb(T)`.
    pub fn certified_optimal(&self) -> bool {
        self.certified_optimal
    }
}

/// Labels from the recurrence along `order`.
///
/// The result is flagged certified when the order passes [`check_order`],
/// the labeling passes the independent pairwise check and the span equals
/// the lower bound.
pub fn labels_from_order(
    tree: &Tree,
    view: &RootedView,
    order: &LinearOrder,
) -> Result<RadioLabeling, LabelingError> {
    let seq = order.for_tree(tree)?;
    let g = recurrence(tree, view, seq);
    let mut labels = vec![0u64; tree.n()];
    for (position, (&v, &value)) in seq.iter().zip(&g).enumerate() {
        labels[v] = u64::try_from(value).map_err(|_| LabelingError::NegativeLabel { position })?;
    }
    let mut labeling = RadioLabeling::new(labels).expect("trees are non-empty");
    labeling.certified_optimal = check_order(tree, view, order)?.passes()
        && oracle::is_radio_labeling(tree, &labeling).expect("lengths match")
        && match tree.lower_bound() {
            Ok(lb) => labeling.span as i64 == lb,
            // one vertex: span 0 is trivially optimal
            Err(_) => labeling.span == 0,
        };
    Ok(labeling)
}

fn expect_kind(spec: &CompositeSpec, expected: CompositeKind) -> Result<(), LabelingError> {
    if spec.kind() == expected {
        Ok(())
    } else {
        Err(LabelingError::WrongKind {
            expected,
            got: spec.kind(),
        })
    }
}

fn passes(tree: &Tree, order: &LinearOrder) -> Result<bool, LabelingError> {
    Ok(check_order(tree, &tree.root_view(), order)?.passes())
}

/// Order for a `wk` composite: the center, then each component's order
/// without its center, block after block.
///
/// Component `i`'s block starts at position `1 + Σ_{z<i} (n_z - 1)`.
pub fn order_wk(
    spec: &CompositeSpec,
    component_orders: &[LinearOrder],
) -> Result<LinearOrder, LabelingError> {
    expect_kind(spec, CompositeKind::Wk)?;
    if component_orders.len() != spec.block_count() {
        return Err(LabelingError::ArityMismatch {
            expected: spec.block_count(),
            got: component_orders.len(),
        });
    }
    let mut seq = Vec::with_capacity(spec.composite_n());
    seq.push(0);
    for (i, order) in component_orders.iter().enumerate() {
        let component = spec.block_tree(i);
        if !passes(component, order).map_err(|_| LabelingError::ComponentOrderInvalid(i))? {
            return Err(LabelingError::ComponentOrderInvalid(i));
        }
        seq.extend(order.as_slice()[1..].iter().map(|&v| spec.global(i, v)));
    }
    LinearOrder::new(seq)
}

fn base_order_checked<'a>(
    spec: &CompositeSpec,
    base_order: &'a LinearOrder,
) -> Result<&'a [Vertex], LabelingError> {
    let base = spec.block_tree(0);
    match passes(base, base_order) {
        Ok(true) => Ok(base_order.as_slice()),
        _ => Err(LabelingError::BaseOrderInvalid),
    }
}

/// Round-robin over the copies: every copy's `x_t` for `t = 1..n_0`, then
/// every copy's center `x_0`.
fn interleave_copies(spec: &CompositeSpec, base_seq: &[Vertex], seq: &mut Vec<Vertex>) {
    let copies = spec.block_count();
    for &x in &base_seq[1..] {
        seq.extend((0..copies).map(|s| spec.global(s, x)));
    }
    seq.extend((0..copies).map(|s| spec.global(s, base_seq[0])));
}

/// Order for an `sk` composite: `w`, then the copies interleaved.
pub fn order_sk(
    spec: &CompositeSpec,
    base_order: &LinearOrder,
) -> Result<LinearOrder, LabelingError> {
    expect_kind(spec, CompositeKind::Sk)?;
    let base_seq = base_order_checked(spec, base_order)?;
    let mut seq = Vec::with_capacity(spec.composite_n());
    seq.push(0);
    interleave_copies(spec, base_seq, &mut seq);
    LinearOrder::new(seq)
}

/// Order for a `dk` composite: `w_1`, the copies interleaved, then `w_2`.
pub fn order_dk(
    spec: &CompositeSpec,
    base_order: &LinearOrder,
) -> Result<LinearOrder, LabelingError> {
    expect_kind(spec, CompositeKind::Dk)?;
    let base_seq = base_order_checked(spec, base_order)?;
    let mut seq = Vec::with_capacity(spec.composite_n());
    seq.push(0);
    interleave_copies(spec, base_seq, &mut seq);
    seq.push(1);
    LinearOrder::new(seq)
}

/// Dispatches to the ordering for the composite's kind. `orders` holds one
/// order per `wk` component, or the single base order for `sk`/`dk`.
pub fn order_composite(
    spec: &CompositeSpec,
    orders: &[LinearOrder],
) -> Result<LinearOrder, LabelingError> {
    match spec.kind() {
        CompositeKind::Wk => order_wk(spec, orders),
        CompositeKind::Sk | CompositeKind::Dk => {
            let [base] = orders else {
                return Err(LabelingError::ArityMismatch {
                    expected: 1,
                    got: orders.len(),
                });
            };
            if spec.kind() == CompositeKind::Sk {
                order_sk(spec, base)
            } else {
                order_dk(spec, base)
            }
        }
    }
}

/// Searches for an order that passes [`check_order`].
///
/// Depth-first over prefixes; a prefix is cut as soon as its newest vertex
/// breaks the distance condition against an earlier one or the endpoint
/// rules can no longer be met. Candidates are tried by ascending level,
/// then id.
///
/// `Ok(None)` from an `exhaustive` search proves the tree does not attain
/// its lower bound. If the budget of search nodes runs out, an exhaustive
/// search returns [`LabelingError::BudgetExhausted`] and a non-exhaustive
/// one gives up with `Ok(None)`.
pub fn find_lb_order(
    tree: &Tree,
    view: &RootedView,
    exhaustive: bool,
    node_budget: u64,
) -> Result<Option<LinearOrder>, LabelingError> {
    let n = tree.n();
    if n == 1 {
        return Ok(Some(LinearOrder(vec![0])));
    }
    let mut candidates: Vec<Vertex> = tree.vertices().collect();
    candidates.sort_by_key(|&v| (view.level(v), v));

    let mut search = OrderSearch {
        tree,
        view,
        candidates,
        step: i64::from(tree.diam()) + i64::from(view.epsilon()),
        reach: i64::from(tree.diam()) + 1,
        seq: Vec::with_capacity(n),
        g: Vec::with_capacity(n),
        used: vec![false; n],
        last: None,
        free_center_neighbors: 0,
        nodes: 0,
        budget: node_budget,
    };
    let starts: Vec<(Vertex, Option<Vertex>)> = match *view.centers() {
        [w] => vec![(w, None)],
        [a, b] => vec![(a, Some(b)), (b, Some(a))],
        _ => unreachable!("a tree has one or two weight centers"),
    };
    for (first, last) in starts {
        search.last = last;
        search.free_center_neighbors = match last {
            None => tree.neighbors(first).len(),
            Some(_) => 0,
        };
        search.seq.push(first);
        search.g.push(0);
        search.used[first] = true;
        match search.extend() {
            Some(true) => return Ok(Some(LinearOrder(search.seq))),
            Some(false) => {
                search.seq.pop();
                search.g.pop();
                search.used[first] = false;
            }
            None if exhaustive => {
                return Err(LabelingError::BudgetExhausted {
                    budget: node_budget,
                })
            }
            None => return Ok(None),
        }
    }
    Ok(None)
}

struct OrderSearch<'a> {
    tree: &'a Tree,
    view: &'a RootedView,
    candidates: Vec<Vertex>,
    step: i64,
    reach: i64,
    seq: Vec<Vertex>,
    g: Vec<i64>,
    used: Vec<bool>,
    /// The other center, which must close a two-center order.
    last: Option<Vertex>,
    /// Unplaced neighbors of a single center; one must remain for the end.
    free_center_neighbors: usize,
    nodes: u64,
    budget: u64,
}

impl OrderSearch<'_> {
    /// `Some(true)` when `seq` was completed (and is left in place),
    /// `Some(false)` when this prefix has no completion, `None` when the
    /// budget ran out.
    fn extend(&mut self) -> Option<bool> {
        let n = self.tree.n();
        let p = self.seq.len();
        if p == n {
            return Some(true);
        }
        let closing = p == n - 1;
        let prev = self.seq[p - 1];
        let single_center = self.view.centers()[0];
        for idx in 0..self.candidates.len() {
            let u = self.candidates[idx];
            if self.used[u] {
                continue;
            }
            let is_center_neighbor = self.last.is_none() && self.tree.dist(u, single_center) == 1;
            match self.last {
                Some(other) if closing != (u == other) => continue,
                None if closing && !is_center_neighbor => continue,
                None if !closing && is_center_neighbor && self.free_center_neighbors == 1 => {
                    continue
                }
                _ => {}
            }
            let g_u = self.g[p - 1] + self.step
                - i64::from(self.view.level(prev))
                - i64::from(self.view.level(u));
            let fits = self
                .seq
                .iter()
                .zip(&self.g)
                .all(|(&v, &g_v)| i64::from(self.tree.dist(u, v)) + g_u - g_v >= self.reach);
            if !fits {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            self.seq.push(u);
            self.g.push(g_u);
            self.used[u] = true;
            if is_center_neighbor {
                self.free_center_neighbors -= 1;
            }
            match self.extend() {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            self.seq.pop();
            self.g.pop();
            self.used[u] = false;
            if is_center_neighbor {
                self.free_center_neighbors += 1;
            }
        }
        Some(false)
    }
}
