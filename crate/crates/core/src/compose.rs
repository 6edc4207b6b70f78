//! Gluing trees at their weight centers.
//!
//! Three composites are supported:
//!
//! * `wk`: trees `T_1..T_k`, each with a single weight center, glued by
//!   identifying all of their centers into one vertex `w`.
//! * `sk`: a copy of a base tree `T` hung by its weight center on each leaf
//!   of the star `S_k` (`k >= 3`).
//! * `dk`: a copy of `T` hung by its weight center on each of the `2k`
//!   leaves of the double star `D_k` (`k >= 2`).
//!
//! Composite ids are assigned frame first (`w`, or `w_1, w_2`), then one
//! block per component or copy in order, each block listing its vertices
//! breadth-first from the component's weight center. In `wk` the shared
//! center is global `0` and is omitted from the blocks' id ranges.
//!
//! In `dk` copy `c` (0-based) hangs off `w_1 = 0` when `c` is odd and off
//! `w_2 = 1` when `c` is even, so consecutive copies sit on opposite sides.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tree::{Tree, Vertex};
use crate::ErrorName;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComposeError {
    #[error("need at least two components, got {0}")]
    TooFewComponents(usize),
    #[error("component {0} has two weight centers")]
    TwoCenterComponent(usize),
    #[error("base tree has two weight centers")]
    TwoCenterBase,
    #[error("{kind} needs k >= {min}, got {k}")]
    BadK {
        kind: CompositeKind,
        k: usize,
        min: usize,
    },
    #[error("expected {expected} radio numbers, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("composite spec does not match the tree: {0}")]
    BadLayout(String),
}

impl ErrorName for ComposeError {
    fn name(&self) -> &'static str {
        match self {
            ComposeError::TooFewComponents(_) => "TooFewComponents",
            ComposeError::TwoCenterComponent(_) => "TwoCenterComponent",
            ComposeError::TwoCenterBase => "TwoCenterBase",
            ComposeError::BadK { .. } => "BadK",
            ComposeError::ArityMismatch { .. } => "ArityMismatch",
            ComposeError::BadLayout(_) => "BadLayout",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CompositeKind {
    Wk,
    Sk,
    Dk,
}

impl std::fmt::Display for CompositeKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CompositeKind::Wk => "wk",
            CompositeKind::Sk => "sk",
            CompositeKind::Dk => "dk",
        })
    }
}

/// How a composite was assembled, with the id map from each block's local
/// vertex to its composite vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositeSpec {
    kind: CompositeKind,
    k: usize,
    components: Vec<Tree>,
    blocks: Vec<Vec<Vertex>>,
}

/// `{"kind": "sk", "k": 3, "layout": [[block, local, global], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositeSpecJson {
    pub kind: CompositeKind,
    pub k: usize,
    pub layout: Vec<[usize; 3]>,
}

impl CompositeSpec {
    pub fn kind(&self) -> CompositeKind {
        self.kind
    }

    /// Component count for `wk`, the star/double-star parameter otherwise.
    pub fn k(&self) -> usize {
        self.k
    }

    /// The `k` components (`wk`) or the single base tree (`sk`, `dk`).
    pub fn components(&self) -> &[Tree] {
        &self.components
    }

    /// Number of blocks: `k` for `wk` and `sk`, `2k` for `dk`.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// The tree a block is a copy of.
    pub fn block_tree(&self, block: usize) -> &Tree {
        match self.kind {
            CompositeKind::Wk => &self.components[block],
            CompositeKind::Sk | CompositeKind::Dk => &self.components[0],
        }
    }

    /// Composite id of `local` in `block`.
    pub fn global(&self, block: usize, local: Vertex) -> Vertex {
        self.blocks[block][local]
    }

    /// Composite vertex count, per the layout.
    pub fn composite_n(&self) -> usize {
        match self.kind {
            CompositeKind::Wk => 1 + self.components.iter().map(|t| t.n() - 1).sum::<usize>(),
            CompositeKind::Sk => 1 + self.k * self.components[0].n(),
            CompositeKind::Dk => 2 * (self.k * self.components[0].n() + 1),
        }
    }

    /// `(block, local, global)` triples, block-major.
    pub fn layout(&self) -> Vec<[usize; 3]> {
        self.blocks
            .iter()
            .enumerate()
            .flat_map(|(b, map)| map.iter().enumerate().map(move |(l, &g)| [b, l, g]))
            .collect()
    }

    pub fn to_json(&self) -> CompositeSpecJson {
        CompositeSpecJson {
            kind: self.kind,
            k: self.k,
            layout: self.layout(),
        }
    }

    /// Rebuilds a spec from its JSON form and the composite it describes.
    ///
    /// Component trees are recovered as the subtrees the layout induces;
    /// the composite is then rebuilt from them and must match `composite`
    /// edge for edge.
    pub fn from_json(
        json: &CompositeSpecJson,
        composite: &Tree,
    ) -> Result<CompositeSpec, ComposeError> {
        let bad = |msg: String| ComposeError::BadLayout(msg);
        let n = composite.n();
        let mut blocks: Vec<Vec<Option<Vertex>>> = Vec::new();
        for &[b, l, g] in &json.layout {
            if g >= n {
                return Err(bad(format!("global id {g} out of range for {n} vertices")));
            }
            if blocks.len() <= b {
                blocks.resize(b + 1, Vec::new());
            }
            if blocks[b].len() <= l {
                blocks[b].resize(l + 1, None);
            }
            if blocks[b][l].replace(g).is_some() {
                return Err(bad(format!("block {b} lists local vertex {l} twice")));
            }
        }
        let blocks: Vec<Vec<Vertex>> = blocks
            .into_iter()
            .enumerate()
            .map(|(b, map)| {
                map.into_iter()
                    .collect::<Option<Vec<_>>>()
                    .filter(|m| !m.is_empty())
                    .ok_or_else(|| bad(format!("block {b} has gaps in its local ids")))
            })
            .collect::<Result<_, _>>()?;

        let induced = |map: &[Vertex]| -> Result<Tree, ComposeError> {
            let mut local_of = vec![usize::MAX; n];
            for (l, &g) in map.iter().enumerate() {
                local_of[g] = l;
            }
            let edges = composite
                .edges()
                .iter()
                .filter(|&&(u, v)| local_of[u] != usize::MAX && local_of[v] != usize::MAX)
                .map(|&(u, v)| (local_of[u], local_of[v]));
            Tree::new(map.len(), edges).map_err(|e| bad(format!("block is not a subtree: {e}")))
        };

        let rebuilt = match json.kind {
            CompositeKind::Wk => {
                let components = blocks
                    .iter()
                    .map(|map| induced(map))
                    .collect::<Result<Vec<_>, _>>()?;
                compose_wk(&components)
            }
            CompositeKind::Sk | CompositeKind::Dk => {
                let base = induced(blocks.first().ok_or_else(|| bad("no blocks".into()))?)?;
                if json.kind == CompositeKind::Sk {
                    compose_sk(&base, json.k)
                } else {
                    compose_dk(&base, json.k)
                }
            }
        }
        .map_err(|e| bad(format!("components do not compose: {e}")))?;

        let (tree, spec) = rebuilt;
        let edge_set = |t: &Tree| -> BTreeSet<(Vertex, Vertex)> {
            t.edges()
                .iter()
                .map(|&(u, v)| (u.min(v), u.max(v)))
                .collect()
        };
        if spec.k != json.k {
            return Err(bad(format!(
                "k is {} but the layout implies {}",
                json.k, spec.k
            )));
        }
        if spec.blocks != blocks || tree.n() != n || edge_set(&tree) != edge_set(composite) {
            return Err(bad("layout does not reproduce the composite".into()));
        }
        Ok(spec)
    }
}

/// Vertices of `tree` in breadth-first order from `root`.
fn bfs_order(tree: &Tree, root: Vertex) -> Vec<Vertex> {
    let mut seen = vec![false; tree.n()];
    let mut order = Vec::with_capacity(tree.n());
    let mut queue = VecDeque::from([root]);
    seen[root] = true;
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &v in tree.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    order
}

fn single_center(tree: &Tree) -> Option<Vertex> {
    let view = tree.root_view();
    (view.epsilon() == 1).then(|| view.centers()[0])
}

/// Local-to-global map for a copy of `tree` whose center lands on `first`
/// and whose remaining vertices take consecutive ids after it.
fn place_copy(tree: &Tree, center: Vertex, first: Vertex) -> Vec<Vertex> {
    let mut map = vec![0; tree.n()];
    for (pos, v) in bfs_order(tree, center).into_iter().enumerate() {
        map[v] = first + pos;
    }
    map
}

fn mapped_edges<'a>(
    tree: &'a Tree,
    map: &'a [Vertex],
) -> impl Iterator<Item = (Vertex, Vertex)> + 'a {
    tree.edges().iter().map(move |&(u, v)| (map[u], map[v]))
}

/// Identifies the weight centers of all `components` into vertex `0`.
pub fn compose_wk(components: &[Tree]) -> Result<(Tree, CompositeSpec), ComposeError> {
    if components.len() < 2 {
        return Err(ComposeError::TooFewComponents(components.len()));
    }
    let mut blocks = Vec::with_capacity(components.len());
    let mut edges = Vec::new();
    let mut next = 1;
    for (i, tree) in components.iter().enumerate() {
        let center = single_center(tree).ok_or(ComposeError::TwoCenterComponent(i))?;
        // the center is placed at `next - 1` and then redirected to 0
        let mut map = place_copy(tree, center, next - 1);
        map[center] = 0;
        next += tree.n() - 1;
        edges.extend(mapped_edges(tree, &map));
        blocks.push(map);
    }
    let tree = Tree::new(next, edges).expect("gluing trees at one vertex gives a tree");
    let spec = CompositeSpec {
        kind: CompositeKind::Wk,
        k: components.len(),
        components: components.to_vec(),
        blocks,
    };
    Ok((tree, spec))
}

/// Hangs a copy of `base` by its weight center on every leaf of `S_k`.
pub fn compose_sk(base: &Tree, k: usize) -> Result<(Tree, CompositeSpec), ComposeError> {
    if k < 3 {
        return Err(ComposeError::BadK {
            kind: CompositeKind::Sk,
            k,
            min: 3,
        });
    }
    let center = single_center(base).ok_or(ComposeError::TwoCenterBase)?;
    let n0 = base.n();
    let mut blocks = Vec::with_capacity(k);
    let mut edges = Vec::new();
    for s in 0..k {
        let map = place_copy(base, center, 1 + s * n0);
        edges.push((0, map[center]));
        edges.extend(mapped_edges(base, &map));
        blocks.push(map);
    }
    let tree = Tree::new(1 + k * n0, edges).expect("star of trees is a tree");
    let spec = CompositeSpec {
        kind: CompositeKind::Sk,
        k,
        components: vec![base.clone()],
        blocks,
    };
    Ok((tree, spec))
}

/// Hangs a copy of `base` by its weight center on every leaf of `D_k`.
pub fn compose_dk(base: &Tree, k: usize) -> Result<(Tree, CompositeSpec), ComposeError> {
    if k < 2 {
        return Err(ComposeError::BadK {
            kind: CompositeKind::Dk,
            k,
            min: 2,
        });
    }
    let center = single_center(base).ok_or(ComposeError::TwoCenterBase)?;
    let n0 = base.n();
    let mut blocks = Vec::with_capacity(2 * k);
    let mut edges = vec![(0, 1)];
    for c in 0..2 * k {
        let map = place_copy(base, center, 2 + c * n0);
        edges.push((dk_attachment(c), map[center]));
        edges.extend(mapped_edges(base, &map));
        blocks.push(map);
    }
    let tree = Tree::new(2 * (k * n0 + 1), edges).expect("double star of trees is a tree");
    let spec = CompositeSpec {
        kind: CompositeKind::Dk,
        k,
        components: vec![base.clone()],
        blocks,
    };
    Ok((tree, spec))
}

/// Frame vertex that copy `c` of a `dk` composite hangs from.
pub fn dk_attachment(copy: usize) -> Vertex {
    // 1-based copy s = c + 1: even s on w_1, odd s on w_2
    if (copy + 1).is_multiple_of(2) {
        0
    } else {
        1
    }
}

/// Radio number the composite attains when every component attains its
/// lower bound.
///
/// `component_rns` holds `rn(T_i)` for each `wk` component, or the single
/// `rn(T)` of the base for `sk` and `dk`. For a one-vertex base pass `1`,
/// the value of the lower-bound expression there, since the formulas are
/// derived from it. `composite` supplies the diameter `d`.
pub fn predicted_rn(
    spec: &CompositeSpec,
    composite: &Tree,
    component_rns: &[i64],
) -> Result<i64, ComposeError> {
    let expected = match spec.kind {
        CompositeKind::Wk => spec.components.len(),
        CompositeKind::Sk | CompositeKind::Dk => 1,
    };
    if component_rns.len() != expected {
        return Err(ComposeError::ArityMismatch {
            expected,
            got: component_rns.len(),
        });
    }
    let d = i64::from(composite.diam());
    let k = spec.k as i64;
    let value = match spec.kind {
        CompositeKind::Wk => {
            spec.components
                .iter()
                .zip(component_rns)
                .map(|(t, &rn)| rn + (t.n() as i64 - 1) * (d - i64::from(t.diam())))
                .sum::<i64>()
                - k
                + 1
        }
        CompositeKind::Sk => {
            let base = &spec.components[0];
            let (n0, d0) = (base.n() as i64, i64::from(base.diam()));
            k * (component_rns[0] + n0 * (d - d0 - 2) + d0) + 1
        }
        CompositeKind::Dk => {
            let base = &spec.components[0];
            let (n0, d0) = (base.n() as i64, i64::from(base.diam()));
            2 * k * (component_rns[0] + n0 * (d - d0 - 3) + d0) + d
        }
    };
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    fn star(k: usize) -> Tree {
        generate(&FamilySpec::Star { k }).unwrap()
    }

    fn path(n: usize) -> Tree {
        generate(&FamilySpec::Path { n }).unwrap()
    }

    fn single() -> Tree {
        Tree::new(1, []).unwrap()
    }

    fn degree_sequence(t: &Tree) -> Vec<usize> {
        let mut d: Vec<usize> = t.vertices().map(|v| t.degree(v)).collect();
        d.sort_unstable();
        d
    }

    #[test]
    fn wk_examples() {
        let (t, spec) = compose_wk(&[star(2), star(2)]).unwrap();
        assert_eq!(t.n(), 5);
        assert_eq!(t.degree(0), 4);
        assert_eq!(degree_sequence(&t), degree_sequence(&star(4)));
        assert_eq!(spec.layout()[..3], [[0, 0, 0], [0, 1, 1], [0, 2, 2]]);

        assert_eq!(
            compose_wk(&[path(4), star(2)]).unwrap_err(),
            ComposeError::TwoCenterComponent(0)
        );
        assert_eq!(
            compose_wk(&[star(2)]).unwrap_err(),
            ComposeError::TooFewComponents(1)
        );

        let (t, _) = compose_wk(&[star(3), star(3), star(3)]).unwrap();
        assert_eq!(t.n(), 3 * 4 - 3 + 1);
        assert_eq!(t.degree(0), 9);
    }

    #[test]
    fn sk_examples() {
        let (t, spec) = compose_sk(&star(2), 3).unwrap();
        assert_eq!(t.n(), 10);
        assert_eq!(t.diam(), 4);
        assert_eq!(spec.composite_n(), 10);

        let (t, _) = compose_sk(&single(), 3).unwrap();
        assert_eq!(degree_sequence(&t), degree_sequence(&star(3)));

        assert!(matches!(
            compose_sk(&star(2), 2),
            Err(ComposeError::BadK { k: 2, min: 3, .. })
        ));
        assert_eq!(
            compose_sk(&path(4), 3).unwrap_err(),
            ComposeError::TwoCenterBase
        );
    }

    #[test]
    fn dk_examples() {
        let (t, _) = compose_dk(&star(2), 2).unwrap();
        assert_eq!(t.n(), 14);
        assert_eq!(t.diam(), 5);
        assert_eq!(t.root_view().centers(), &[0, 1]);

        let (t, _) = compose_dk(&single(), 2).unwrap();
        assert_eq!(t.n(), 6);
        assert_eq!(
            degree_sequence(&t),
            degree_sequence(&generate(&FamilySpec::DoubleStar { k: 2 }).unwrap())
        );

        assert!(matches!(
            compose_dk(&star(2), 1),
            Err(ComposeError::BadK { .. })
        ));
        assert_eq!(
            compose_dk(&path(4), 2).unwrap_err(),
            ComposeError::TwoCenterBase
        );
    }

    #[test]
    fn dk_copies_alternate_sides() {
        let (t, spec) = compose_dk(&star(3), 3).unwrap();
        for c in 0..6 {
            let x = spec.global(c, 0);
            let side = if c % 2 == 1 { 0 } else { 1 };
            assert!(t.neighbors(side).contains(&x), "copy {c}");
        }
    }

    #[test]
    fn predicted_examples() {
        let (t, spec) = compose_wk(&[star(2), star(2)]).unwrap();
        assert_eq!(predicted_rn(&spec, &t, &[3, 3]).unwrap(), 5);
        assert_eq!(
            predicted_rn(&spec, &t, &[3]).unwrap_err(),
            ComposeError::ArityMismatch {
                expected: 2,
                got: 1
            }
        );
        let (t, spec) = compose_sk(&star(2), 3).unwrap();
        assert_eq!(predicted_rn(&spec, &t, &[3]).unwrap(), 16);
        let (t, spec) = compose_dk(&star(2), 2).unwrap();
        assert_eq!(predicted_rn(&spec, &t, &[3]).unwrap(), 25);
        // one-vertex bases fall back to S_k and D_k
        let (t, spec) = compose_sk(&single(), 4).unwrap();
        assert_eq!(predicted_rn(&spec, &t, &[1]).unwrap(), 5);
        let (t, spec) = compose_dk(&single(), 2).unwrap();
        assert_eq!(predicted_rn(&spec, &t, &[1]).unwrap(), 7);
    }

    #[test]
    fn observation_levels() {
        let base = generate(&FamilySpec::Banana { m: 2, k: 3 }).unwrap();
        let base_view = base.root_view();
        for (t, spec) in [compose_sk(&base, 4).unwrap(), compose_dk(&base, 2).unwrap()] {
            let view = t.root_view();
            for b in 0..spec.block_count() {
                for v in base.vertices() {
                    assert_eq!(view.level(spec.global(b, v)), base_view.level(v) + 1);
                }
            }
        }
        let parts = [star(3), base.clone()];
        let (t, spec) = compose_wk(&parts).unwrap();
        let view = t.root_view();
        assert_eq!(view.centers(), &[0]);
        for (b, part) in parts.iter().enumerate() {
            let pv = part.root_view();
            for v in part.vertices() {
                assert_eq!(view.level(spec.global(b, v)), pv.level(v));
            }
        }
    }

    #[test]
    fn spec_json_round_trip() {
        let (t, spec) = compose_dk(&star(3), 2).unwrap();
        let json = spec.to_json();
        let text = serde_json::to_string(&json).unwrap();
        assert!(text.starts_with(r#"{"kind":"dk","k":2,"layout":[[0,0,2],"#));
        let parsed: CompositeSpecJson = serde_json::from_str(&text).unwrap();
        assert_eq!(CompositeSpec::from_json(&parsed, &t).unwrap(), spec);

        let (t, spec) = compose_wk(&[star(2), star(4), star(3)]).unwrap();
        assert_eq!(CompositeSpec::from_json(&spec.to_json(), &t).unwrap(), spec);

        let mut broken = spec.to_json();
        broken.layout.swap(1, 2);
        broken.layout[1][1] = 1;
        broken.layout[2][1] = 2;
        assert!(CompositeSpec::from_json(&broken, &t).is_err());
        let mut broken = spec.to_json();
        broken.k = 5;
        assert!(CompositeSpec::from_json(&broken, &t).is_err());
        let other = star(7);
        assert!(CompositeSpec::from_json(&spec.to_json(), &other).is_err());
    }
}
