//! Trees, distances and the weight-center machinery behind `lb(T)`.
//!
//! Distances are stored as a dense `n × n` table. Composites of a few
//! thousand vertices fit comfortably; the table is quadratic in memory, so
//! trees far beyond `10^4` vertices are not a target.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ErrorName;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for a tree on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("the lower bound needs at least two vertices, got {0}")]
    TooSmall(usize),
    #[error("branch relation needs two distinct vertices, got {0} twice")]
    SameVertex(Vertex),
}

impl ErrorName for TreeError {
    fn name(&self) -> &'static str {
        match self {
            TreeError::NotATree(_) => "NotATree",
            TreeError::DuplicateEdge(..) => "DuplicateEdge",
            TreeError::VertexOutOfRange { .. } => "VertexOutOfRange",
            TreeError::TooSmall(_) => "TooSmall",
            TreeError::SameVertex(_) => "SameVertex",
        }
    }
}

/// An immutable undirected tree on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TreeJson", into = "TreeJson")]
pub struct Tree {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
    dist: Vec<u32>,
    diam: u32,
}

/// Interchange form: `{"n": <int>, "edges": [[u, v], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
}

impl TryFrom<TreeJson> for Tree {
    type Error = TreeError;

    fn try_from(json: TreeJson) -> Result<Self, Self::Error> {
        Tree::new(json.n, json.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<Tree> for TreeJson {
    fn from(tree: Tree) -> Self {
        TreeJson {
            n: tree.n,
            edges: tree.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl Tree {
    /// Validates the edge list and caches all-pairs distances.
    ///
    /// Edges keep the order and orientation they were given in.
    pub fn new<I>(n: usize, edges: I) -> Result<Tree, TreeError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n == 0 {
            return Err(TreeError::NotATree(
                "a tree needs at least one vertex".into(),
            ));
        }
        let edges: Vec<(Vertex, Vertex)> = edges.into_iter().collect();
        let mut seen = BTreeSet::new();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            for x in [u, v] {
                if x >= n {
                    return Err(TreeError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(TreeError::NotATree(format!("self-loop at vertex {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(TreeError::DuplicateEdge(u, v));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        if edges.len() != n - 1 {
            return Err(TreeError::NotATree(format!(
                "expected {} edges for {} vertices, got {}",
                n - 1,
                n,
                edges.len()
            )));
        }
        for list in &mut adj {
            list.sort_unstable();
        }

        let mut dist = vec![u32::MAX; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for source in 0..n {
            let row = &mut dist[source * n..(source + 1) * n];
            row[source] = 0;
            queue.push_back(source);
            let mut reached = 1;
            while let Some(u) = queue.pop_front() {
                for &v in &adj[u] {
                    if row[v] == u32::MAX {
                        row[v] = row[u] + 1;
                        reached += 1;
                        queue.push_back(v);
                    }
                }
            }
            if reached != n {
                // n - 1 edges and disconnected means a cycle somewhere
                return Err(TreeError::NotATree(format!(
                    "vertex {source} reaches only {reached} of {n} vertices"
                )));
            }
        }
        let diam = dist.iter().copied().max().unwrap_or(0);

        Ok(Tree {
            n,
            edges,
            adj,
            dist,
            diam,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn dist(&self, u: Vertex, v: Vertex) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn diam(&self) -> u32 {
        self.diam
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), TreeError> {
        if v < self.n {
            Ok(())
        } else {
            Err(TreeError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// `w_T(v)`: the sum of distances from `v` to every vertex.
    pub fn vertex_weight(&self, v: Vertex) -> Result<u64, TreeError> {
        self.check_vertex(v)?;
        Ok(self.dist[v * self.n..(v + 1) * self.n]
            .iter()
            .map(|&d| u64::from(d))
            .sum())
    }

    pub fn root_view(&self) -> RootedView {
        RootedView::new(self)
    }

    /// `lb(T) = (n - 1)(d + ε) - 2 L(T) + ε`.
    ///
    /// Also evaluates the weight form `(n - 1)(d + 1) + 1 - 2 w(T)` and
    /// panics if the two disagree. A single edge (`d = 1`) is accepted and
    /// yields `1`.
    pub fn lower_bound(&self) -> Result<i64, TreeError> {
        if self.n < 2 {
            return Err(TreeError::TooSmall(self.n));
        }
        let view = self.root_view();
        let lb = view.bound_expression(self);
        let weight_form = view.weight_bound_expression(self);
        assert_eq!(
            lb, weight_form,
            "level and weight forms of the lower bound disagree"
        );
        Ok(lb)
    }
}

/// How two distinct vertices sit relative to the weight center(s).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BranchRelation {
    /// Both in the branch rooted at the same neighbor of a center.
    Same,
    /// Branches rooted at two neighbors of the same center.
    Different,
    /// Branches hanging off the two distinct centers (two-center trees only).
    Opposite,
    /// At least one of the vertices is a weight center.
    InvolvesCenter,
}

/// A tree viewed from its weight center set `W(T)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedView {
    centers: Vec<Vertex>,
    level: Vec<u32>,
    total_level: u64,
    weight_min: u64,
    branch: Vec<Option<Vertex>>,
    home: Vec<Vertex>,
}

impl RootedView {
    fn new(tree: &Tree) -> RootedView {
        let n = tree.n();
        let weights: Vec<u64> = tree
            .vertices()
            .map(|v| tree.vertex_weight(v).expect("vertex in range"))
            .collect();
        let weight_min = *weights.iter().min().expect("non-empty tree");
        let centers: Vec<Vertex> = tree
            .vertices()
            .filter(|&v| weights[v] == weight_min)
            .collect();
        debug_assert!(matches!(centers.len(), 1 | 2));

        // multi-source BFS from the centers, carrying branch root and home center
        let mut level = vec![u32::MAX; n];
        let mut branch = vec![None; n];
        let mut home = vec![0; n];
        let mut queue = VecDeque::new();
        for &c in &centers {
            level[c] = 0;
            home[c] = c;
            queue.push_back(c);
        }
        while let Some(u) = queue.pop_front() {
            for &v in tree.neighbors(u) {
                if level[v] == u32::MAX {
                    level[v] = level[u] + 1;
                    home[v] = home[u];
                    branch[v] = branch[u].or(Some(v));
                    queue.push_back(v);
                }
            }
        }
        let total_level = level.iter().map(|&l| u64::from(l)).sum();

        RootedView {
            centers,
            level,
            total_level,
            weight_min,
            branch,
            home,
        }
    }

    /// Weight centers in ascending order (one, or two adjacent vertices).
    pub fn centers(&self) -> &[Vertex] {
        &self.centers
    }

    pub fn is_center(&self, v: Vertex) -> bool {
        self.centers.contains(&v)
    }

    /// `ε(T)`: 1 for a single weight center, 0 for two.
    pub fn epsilon(&self) -> u32 {
        u32::from(self.centers.len() == 1)
    }

    /// `L_T(u)`, the distance to the nearest weight center.
    pub fn level(&self, u: Vertex) -> u32 {
        self.level[u]
    }

    pub fn levels(&self) -> &[u32] {
        &self.level
    }

    /// `L(T)`.
    pub fn total_level(&self) -> u64 {
        self.total_level
    }

    /// `w(T)`, the minimum vertex weight.
    pub fn weight_min(&self) -> u64 {
        self.weight_min
    }

    /// Root of the branch containing `u`, `None` for the centers.
    pub fn branch(&self, u: Vertex) -> Option<Vertex> {
        self.branch[u]
    }

    /// The weight center nearest to `u`.
    pub fn home_center(&self, u: Vertex) -> Vertex {
        self.home[u]
    }

    pub fn branch_relation(&self, u: Vertex, v: Vertex) -> Result<BranchRelation, TreeError> {
        let n = self.level.len();
        for x in [u, v] {
            if x >= n {
                return Err(TreeError::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(TreeError::SameVertex(u));
        }
        Ok(match (self.branch[u], self.branch[v]) {
            (None, _) | (_, None) => BranchRelation::InvolvesCenter,
            (Some(a), Some(b)) if a == b => BranchRelation::Same,
            _ if self.home[u] != self.home[v] => BranchRelation::Opposite,
            _ => BranchRelation::Different,
        })
    }

    /// Evaluates `(n - 1)(d + ε) - 2 L(T) + ε` without any size check.
    ///
    /// On a single vertex this gives `1`, the value the composite
    /// radio-number formulas expect for a one-vertex base.
    pub fn bound_expression(&self, tree: &Tree) -> i64 {
        let n = tree.n() as i64;
        let d = i64::from(tree.diam());
        let eps = i64::from(self.epsilon());
        (n - 1) * (d + eps) - 2 * self.total_level as i64 + eps
    }

    /// Evaluates `(n - 1)(d + 1) + 1 - 2 w(T)`.
    pub fn weight_bound_expression(&self, tree: &Tree) -> i64 {
        let n = tree.n() as i64;
        let d = i64::from(tree.diam());
        (n - 1) * (d + 1) + 1 - 2 * self.weight_min as i64
    }
}
