//! Radio labelings of trees: the tree lower bound `lb(T)`, generators for
//! trees known to attain it, constructions that glue such trees into larger
//! ones, and certified optimal labelings built from linear vertex orders.
//!
//! A radio labeling of a graph `G` assigns non-negative integers `f(v)` so
//! that `d(u, v) + |f(u) - f(v)| >= diam(G) + 1` for every pair of distinct
//! vertices. For a tree with `n` vertices, diameter `d`, `ε = 1` when it has
//! one weight center (`0` when it has two) and total level `L(T)`, every
//! radio labeling has span at least
//!
//! ```text
//! lb(T) = (n - 1)(d + ε) - 2 L(T) + ε
//! ```
//!
//! A labeling whose span equals that value is a certificate of optimality.
//!
//! Module map:
//!
//! * [`tree`]: validated trees, all-pairs distances, weight centers, levels
//!   and the lower bound.
//! * [`families`]: the classical lower-bound tree families and their known
//!   radio numbers.
//! * [`compose`]: gluing lower-bound trees at their weight centers.
//! * [`labeling`]: linear orders, the order condition, the label recurrence
//!   and the ordering algorithms for composites.
//! * [`oracle`]: independent validity checks, certificates and an exact
//!   branch-and-bound radio number solver.

pub mod compose;
pub mod families;
pub mod labeling;
pub mod oracle;
pub mod tree;

pub use compose::{CompositeKind, CompositeSpec};
pub use families::FamilySpec;
pub use labeling::{LinearOrder, RadioLabeling};
pub use oracle::{Certificate, SolveResult, SolveStatus};

pub use tree::{BranchRelation, RootedView, Tree, Vertex};

/// Stable machine-readable name of an error variant.
///
/// The CLI reports these verbatim in its error JSON.
pub trait ErrorName {
    fn name(&self) -> &'static str;
}
