//! Generators for the classical lower-bound tree families, and the closed
//! forms of their radio numbers.
//!
//! Every generator builds the tree under construction ids and then
//! renumbers it breadth-first from its root(s) or spine, visiting neighbors
//! in construction order. The resulting id layouts are:
//!
//! * path `P_n`: `0 - 1 - ... - n-1`.
//! * star `S_k`: center `0`, leaves `1..=k`.
//! * double star `D_k`: centers `0, 1`; leaves of `0` are `2..k+2`, leaves
//!   of `1` follow.
//! * complete m-ary `T_{h,m}` and level-wise regular trees: root(s) first,
//!   then level by level.
//! * banana `B(m,k)`: root `0`, the `m` star leaves joined to it, then the
//!   star centers, then the remaining leaves.
//! * firecracker `F(m,k)`: spine path `0..m`, the star centers, then the
//!   remaining leaves.
//! * caterpillar `C(m,k)`: spine `0..m-2`, then the leaves in spine order.

use std::collections::VecDeque;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tree::{Tree, Vertex};
use crate::ErrorName;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("bad parameters for {family}: {reason}")]
    BadParams {
        family: &'static str,
        reason: String,
    },
}

impl ErrorName for FamilyError {
    fn name(&self) -> &'static str {
        match self {
            FamilyError::BadParams { .. } => "BadParams",
        }
    }
}

/// A member of one of the named tree families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilySpec {
    /// `P_n` on `n` vertices.
    Path { n: usize },
    /// `S_k`: a center joined to `k` leaves.
    Star { k: usize },
    /// `D_k`: `k` leaves on each end of an edge.
    DoubleStar { k: usize },
    /// `T_{h,m}`: every non-leaf has `m` children, leaves at depth `h`.
    CompleteMary { h: usize, m: usize },
    /// `T^1`: one root; vertices at depth `i < h` have degree `degrees[i]`.
    #[serde(rename = "levelwise_regular_1root")]
    LevelwiseOneRoot { degrees: Vec<usize> },
    /// `T^2`: two adjacent roots; depth measured to the nearer root.
    #[serde(rename = "levelwise_regular_2root")]
    LevelwiseTwoRoot { degrees: Vec<usize> },
    /// `B(m,k)`: one leaf of each of `m` copies of `S_{k-1}` joined to a root.
    Banana { m: usize, k: usize },
    /// `F(m,k)`: a leaf of the `s`-th copy of `S_{k-1}` identified with the
    /// `s`-th vertex of `P_m`.
    Firecracker { m: usize, k: usize },
    /// `C(m,k)`: spine of length `m - 3`, every spine vertex of degree `k`.
    Caterpillar { m: usize, k: usize },
}

pub const FAMILY_KINDS: &[&str] = &[
    "path",
    "star",
    "double_star",
    "complete_mary",
    "levelwise_regular_1root",
    "levelwise_regular_2root",
    "banana",
    "firecracker",
    "caterpillar",
];

fn bad(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::BadParams {
        family,
        reason: reason.into(),
    }
}

impl FamilySpec {
    pub fn kind(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Star { .. } => "star",
            FamilySpec::DoubleStar { .. } => "double_star",
            FamilySpec::CompleteMary { .. } => "complete_mary",
            FamilySpec::LevelwiseOneRoot { .. } => "levelwise_regular_1root",
            FamilySpec::LevelwiseTwoRoot { .. } => "levelwise_regular_2root",
            FamilySpec::Banana { .. } => "banana",
            FamilySpec::Firecracker { .. } => "firecracker",
            FamilySpec::Caterpillar { .. } => "caterpillar",
        }
    }

    /// Builds a spec from a kind name and `key=value` pairs.
    ///
    /// Integer parameters are `n`, `k`, `h`, `m`; level-wise regular trees
    /// take `degrees` as a colon-separated list such as `3:4:3`.
    pub fn from_params<'a, I>(kind: &str, params: I) -> Result<FamilySpec, FamilyError>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let family: &'static str = FAMILY_KINDS
            .iter()
            .copied()
            .find(|&k| k == kind)
            .ok_or_else(|| bad("family", format!("unknown family `{kind}`")))?;
        let mut ints = std::collections::BTreeMap::new();
        let mut degrees = None;
        for (key, value) in params {
            if key == "degrees" {
                let list = value
                    .split(':')
                    .map(|x| x.trim().parse::<usize>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| bad(family, format!("cannot parse degrees `{value}`")))?;
                degrees = Some(list);
            } else {
                let parsed = value
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| bad(family, format!("cannot parse {key}=`{value}`")))?;
                ints.insert(key.to_string(), parsed);
            }
        }
        let mut take = |key: &str| {
            ints.remove(key)
                .ok_or_else(|| bad(family, format!("missing parameter `{key}`")))
        };
        let spec = match family {
            "path" => FamilySpec::Path { n: take("n")? },
            "star" => FamilySpec::Star { k: take("k")? },
            "double_star" => FamilySpec::DoubleStar { k: take("k")? },
            "complete_mary" => FamilySpec::CompleteMary {
                h: take("h")?,
                m: take("m")?,
            },
            "levelwise_regular_1root" | "levelwise_regular_2root" => {
                let degrees = degrees
                    .take()
                    .ok_or_else(|| bad(family, "missing parameter `degrees`"))?;
                if family == "levelwise_regular_1root" {
                    FamilySpec::LevelwiseOneRoot { degrees }
                } else {
                    FamilySpec::LevelwiseTwoRoot { degrees }
                }
            }
            "banana" => FamilySpec::Banana {
                m: take("m")?,
                k: take("k")?,
            },
            "firecracker" => FamilySpec::Firecracker {
                m: take("m")?,
                k: take("k")?,
            },
            "caterpillar" => FamilySpec::Caterpillar {
                m: take("m")?,
                k: take("k")?,
            },
            _ => unreachable!("kind list and match arms agree"),
        };
        if let Some(key) = ints.keys().next() {
            return Err(bad(family, format!("unexpected parameter `{key}`")));
        }
        if degrees.is_some() {
            return Err(bad(family, "unexpected parameter `degrees`"));
        }
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let family = self.kind();
        let need = |ok: bool, what: &str| if ok { Ok(()) } else { Err(bad(family, what)) };
        match self {
            FamilySpec::Path { n } => need(*n >= 1, "need n >= 1"),
            FamilySpec::Star { k } => need(*k >= 2, "need k >= 2"),
            FamilySpec::DoubleStar { k } => need(*k >= 1, "need k >= 1"),
            FamilySpec::CompleteMary { h, m } => need(*h >= 1 && *m >= 2, "need h >= 1 and m >= 2"),
            FamilySpec::LevelwiseOneRoot { degrees } => {
                need(
                    !degrees.is_empty(),
                    "need at least one degree (height >= 1)",
                )?;
                need(degrees[0] >= 1, "need root degree m_0 >= 1")?;
                need(
                    degrees[1..].iter().all(|&m| m >= 2),
                    "need m_i >= 2 for 0 < i < h so every leaf sits at depth h",
                )
            }
            FamilySpec::LevelwiseTwoRoot { degrees } => {
                need(
                    !degrees.is_empty(),
                    "need at least one degree (height >= 1)",
                )?;
                need(
                    degrees.iter().all(|&m| m >= 2),
                    "need every m_i >= 2 so every leaf sits at depth h",
                )
            }
            FamilySpec::Banana { m, k } => need(*m >= 2 && *k >= 3, "need m >= 2 and k >= 3"),
            FamilySpec::Firecracker { m, k } => need(*m >= 2 && *k >= 3, "need m >= 2 and k >= 3"),
            FamilySpec::Caterpillar { m, k } => need(*m >= 3 && *k >= 3, "need m >= 3 and k >= 3"),
        }
    }
}

/// Edge list under construction ids.
#[derive(Default)]
struct Builder {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl Builder {
    fn vertex(&mut self) -> Vertex {
        self.n += 1;
        self.n - 1
    }

    fn child(&mut self, parent: Vertex) -> Vertex {
        let v = self.vertex();
        self.edges.push((parent, v));
        v
    }

    /// Renumbers breadth-first from `seeds` and validates.
    fn finish(self, seeds: &[Vertex]) -> Tree {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut new_id = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for &s in seeds {
            new_id[s] = next;
            next += 1;
            queue.push_back(s);
        }
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if new_id[v] == usize::MAX {
                    new_id[v] = next;
                    next += 1;
                    queue.push_back(v);
                }
            }
        }
        let mut edges: Vec<(Vertex, Vertex)> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (new_id[u], new_id[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        Tree::new(self.n, edges).expect("family generators build trees")
    }
}

/// Builds the tree described by `spec`.
pub fn generate(spec: &FamilySpec) -> Result<Tree, FamilyError> {
    spec.validate()?;
    let mut b = Builder::default();
    let tree = match spec {
        FamilySpec::Path { n } => {
            let mut prev = b.vertex();
            for _ in 1..*n {
                prev = b.child(prev);
            }
            b.finish(&[0])
        }
        FamilySpec::Star { k } => {
            let c = b.vertex();
            for _ in 0..*k {
                b.child(c);
            }
            b.finish(&[c])
        }
        FamilySpec::DoubleStar { k } => {
            let w1 = b.vertex();
            let w2 = b.child(w1);
            for _ in 0..*k {
                b.child(w1);
            }
            for _ in 0..*k {
                b.child(w2);
            }
            b.finish(&[w1, w2])
        }
        FamilySpec::CompleteMary { h, m } => {
            let root = b.vertex();
            // root degree m, everything else below the leaves degree m + 1
            let mut degrees = vec![m + 1; *h];
            degrees[0] = *m;
            grow_levels(&mut b, vec![root], &degrees, true);
            b.finish(&[root])
        }
        FamilySpec::LevelwiseOneRoot { degrees } => {
            let root = b.vertex();
            grow_levels(&mut b, vec![root], degrees, true);
            b.finish(&[root])
        }
        FamilySpec::LevelwiseTwoRoot { degrees } => {
            let w1 = b.vertex();
            let w2 = b.child(w1);
            grow_levels(&mut b, vec![w1, w2], degrees, false);
            b.finish(&[w1, w2])
        }
        FamilySpec::Banana { m, k } => {
            let root = b.vertex();
            for _ in 0..*m {
                // a copy of S_{k-1}: one of its leaves is joined to the root
                let joined = b.child(root);
                let center = b.child(joined);
                for _ in 0..k - 2 {
                    b.child(center);
                }
            }
            b.finish(&[root])
        }
        FamilySpec::Firecracker { m, k } => {
            let spine: Vec<Vertex> = (0..*m).map(|_| b.vertex()).collect();
            for pair in spine.windows(2) {
                b.edges.push((pair[0], pair[1]));
            }
            for &s in &spine {
                // s doubles as one leaf of its S_{k-1}
                let center = b.child(s);
                for _ in 0..k - 2 {
                    b.child(center);
                }
            }
            b.finish(&spine)
        }
        FamilySpec::Caterpillar { m, k } => {
            let len = m - 2;
            let spine: Vec<Vertex> = (0..len).map(|_| b.vertex()).collect();
            for pair in spine.windows(2) {
                b.edges.push((pair[0], pair[1]));
            }
            for (i, &s) in spine.iter().enumerate() {
                let spine_degree = usize::from(i > 0) + usize::from(i + 1 < len);
                for _ in spine_degree..*k {
                    b.child(s);
                }
            }
            b.finish(&spine)
        }
    };
    Ok(tree)
}

fn grow_levels(b: &mut Builder, roots: Vec<Vertex>, degrees: &[usize], single_root: bool) {
    let mut frontier = roots;
    for (depth, &degree) in degrees.iter().enumerate() {
        // every vertex but a lone root already has one edge toward the root(s)
        let children = if depth == 0 && single_root {
            degree
        } else {
            degree - 1
        };
        let mut next = Vec::with_capacity(frontier.len() * children);
        for &u in &frontier {
            for _ in 0..children {
                next.push(b.child(u));
            }
        }
        frontier = next;
    }
}

/// Radio number of `spec` from the closed form for its family, when the
/// family and parameters are one of the known lower-bound cases.
///
/// Returns `None` for odd paths, binary complete trees, level-wise regular
/// trees with a vertex of degree below three, `S_2` and caterpillars with
/// odd `m`.
///
/// The banana and firecracker forms are returned for every valid `(m, k)`,
/// but with `m = 2` they only match the radio number for `F(2,3)`. Other
/// `m = 2` members sit strictly above the value given here, so treat it
/// as the lower bound there.
pub fn known_rn(spec: &FamilySpec) -> Result<Option<i64>, FamilyError> {
    spec.validate()?;
    let value = match *spec {
        FamilySpec::Path { n } => (n % 2 == 0).then(|| {
            let k = (n / 2) as i64;
            2 * k * (k - 1) + 1
        }),
        FamilySpec::Star { k } => levelwise_one_root_rn(&[k]),
        FamilySpec::DoubleStar { k: 1 } => Some(5),
        FamilySpec::DoubleStar { k } => levelwise_two_root_rn(&[k + 1]),
        FamilySpec::CompleteMary { h, m } => (m >= 3).then(|| {
            let (h, m) = (h as i128, m as i128);
            let num =
                m.pow(h as u32 + 2) + m.pow(h as u32 + 1) - 2 * h * m * m + (2 * h - 3) * m + 1;
            let den = (m - 1) * (m - 1);
            debug_assert_eq!(num % den, 0);
            (num / den) as i64
        }),
        FamilySpec::LevelwiseOneRoot { ref degrees } => levelwise_one_root_rn(degrees),
        FamilySpec::LevelwiseTwoRoot { ref degrees } => levelwise_two_root_rn(degrees),
        FamilySpec::Banana { m, k } => Some((m * (k + 6) + 1) as i64),
        FamilySpec::Firecracker { m, k } => {
            let eps = generate(spec)?.root_view().epsilon() as i64;
            let (m, k) = (m as i64, k as i64);
            let twice = (m * m + eps) * k;
            debug_assert_eq!(twice % 2, 0);
            Some(twice / 2 + 5 * m - 3)
        }
        FamilySpec::Caterpillar { m, k } => (m % 2 == 0).then(|| {
            let (half, k) = ((m / 2) as i64, k as i64);
            2 * (half - 1) * (half - 1) * (k - 1) + 2 * half - 1
        }),
    };
    Ok(value)
}

/// `(n-1)(d+1) + 1 - 2 Σ_i i·m_0·Π_{0<j<i}(m_j - 1)`, `d = 2h`.
///
/// The sum counts each depth-`i` vertex `i` times, so it is the total level.
fn levelwise_one_root_rn(degrees: &[usize]) -> Option<i64> {
    if degrees.iter().any(|&m| m < 3) {
        return None;
    }
    let h = degrees.len() as i64;
    let mut at_depth = degrees[0] as i64;
    let (mut n, mut total_level) = (1i64, 0i64);
    for i in 1..=h {
        if i > 1 {
            at_depth *= degrees[i as usize - 1] as i64 - 1;
        }
        n += at_depth;
        total_level += i * at_depth;
    }
    let d = 2 * h;
    Some((n - 1) * (d + 1) + 1 - 2 * total_level)
}

/// `(n-1)d - 4 Σ_i i·Π_{j<i}(m_j - 1)`, `d = 2h + 1`.
fn levelwise_two_root_rn(degrees: &[usize]) -> Option<i64> {
    if degrees.iter().any(|&m| m < 3) {
        return None;
    }
    let h = degrees.len() as i64;
    let mut per_side = 1i64;
    let (mut n, mut weighted) = (2i64, 0i64);
    for i in 1..=h {
        per_side *= degrees[i as usize - 1] as i64 - 1;
        n += 2 * per_side;
        weighted += i * per_side;
    }
    let d = 2 * h + 1;
    Some((n - 1) * d - 4 * weighted)
}

/// A uniformly random labeled tree on `n` vertices (Prüfer decoding).
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Tree {
    assert!(n >= 1, "a tree needs at least one vertex");
    if n <= 2 {
        return Tree::new(n, (1..n).map(|v| (0, v))).expect("tiny tree");
    }
    let code: Vec<Vertex> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Tree::new(n, prufer_edges(n, &code)).expect("Prüfer decoding yields a tree")
}

/// Decodes a Prüfer sequence of length `n - 2` into `n - 1` edges.
pub fn prufer_edges(n: usize, code: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    debug_assert_eq!(code.len() + 2, n);
    let mut degree = vec![1usize; n];
    for &v in code {
        degree[v] += 1;
    }
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<Vertex>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in code {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("a leaf always exists");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(std::cmp::Reverse(v));
        }
    }
    let std::cmp::Reverse(a) = leaves.pop().expect("two leaves remain");
    let std::cmp::Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn gen(spec: FamilySpec) -> Tree {
        generate(&spec).unwrap()
    }

    #[test]
    fn path_and_star_examples() {
        let p4 = gen(FamilySpec::Path { n: 4 });
        assert_eq!(p4.edges(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(p4.diam(), 3);
        let s3 = gen(FamilySpec::Star { k: 3 });
        assert_eq!(s3.n(), 4);
        assert_eq!(s3.degree(0), 3);
    }

    #[test]
    fn vertex_counts_match_definitions() {
        // banana: m copies of a k-vertex star plus the root
        assert_eq!(gen(FamilySpec::Banana { m: 2, k: 4 }).n(), 9);
        // firecracker: the star leaf is the path vertex, so m·k exactly
        assert_eq!(gen(FamilySpec::Firecracker { m: 3, k: 4 }).n(), 12);
        // caterpillar: m-2 spine vertices, (m-2)(k-2) + 2 leaves
        assert_eq!(gen(FamilySpec::Caterpillar { m: 6, k: 3 }).n(), 4 + 4 + 2);
        assert_eq!(gen(FamilySpec::Caterpillar { m: 3, k: 4 }).n(), 5);
        // complete m-ary: (m^{h+1} - 1)/(m - 1)
        assert_eq!(gen(FamilySpec::CompleteMary { h: 2, m: 3 }).n(), 13);
        assert_eq!(gen(FamilySpec::DoubleStar { k: 3 }).n(), 8);
        // 1 + 3 + 3·2 + 3·2·3
        assert_eq!(
            gen(FamilySpec::LevelwiseOneRoot {
                degrees: vec![3, 3, 4]
            })
            .n(),
            28
        );
        // 2 + 2·2 + 2·2·3
        assert_eq!(
            gen(FamilySpec::LevelwiseTwoRoot {
                degrees: vec![3, 4]
            })
            .n(),
            18
        );
    }

    #[test]
    fn shapes() {
        let cat = gen(FamilySpec::Caterpillar { m: 8, k: 4 });
        assert_eq!(cat.diam(), 7);
        for s in 0..6 {
            assert_eq!(cat.degree(s), 4, "spine vertex {s}");
        }
        let fire = gen(FamilySpec::Firecracker { m: 4, k: 5 });
        for s in 4..8 {
            assert_eq!(fire.degree(s), 4, "star center {s}");
        }
        let t2 = gen(FamilySpec::LevelwiseTwoRoot {
            degrees: vec![3, 4],
        });
        assert_eq!(t2.root_view().centers(), &[0, 1]);
        assert_eq!(t2.diam(), 5);
        let mary = gen(FamilySpec::CompleteMary { h: 3, m: 2 });
        assert_eq!(mary.diam(), 6);
        assert!(mary
            .vertices()
            .all(|v| mary.degree(v) == 1 || mary.degree(v) >= 2));
    }

    #[test]
    fn generation_is_deterministic() {
        let spec = FamilySpec::Banana { m: 3, k: 5 };
        assert_eq!(gen(spec.clone()).edges(), gen(spec).edges());
    }

    #[test]
    fn bad_params() {
        for spec in [
            FamilySpec::Path { n: 0 },
            FamilySpec::Star { k: 1 },
            FamilySpec::DoubleStar { k: 0 },
            FamilySpec::CompleteMary { h: 1, m: 1 },
            FamilySpec::LevelwiseOneRoot { degrees: vec![] },
            FamilySpec::LevelwiseOneRoot {
                degrees: vec![3, 1],
            },
            FamilySpec::LevelwiseTwoRoot { degrees: vec![1] },
            FamilySpec::Banana { m: 1, k: 3 },
            FamilySpec::Firecracker { m: 2, k: 2 },
            FamilySpec::Caterpillar { m: 2, k: 3 },
        ] {
            assert!(
                matches!(generate(&spec), Err(FamilyError::BadParams { .. })),
                "{spec:?}"
            );
            assert!(known_rn(&spec).is_err());
        }
    }

    #[test]
    fn known_rn_examples() {
        assert_eq!(known_rn(&FamilySpec::Path { n: 6 }).unwrap(), Some(13));
        assert_eq!(
            known_rn(&FamilySpec::Banana { m: 3, k: 4 }).unwrap(),
            Some(31)
        );
        assert_eq!(known_rn(&FamilySpec::Path { n: 5 }).unwrap(), None);
        assert_eq!(
            known_rn(&FamilySpec::CompleteMary { h: 2, m: 2 }).unwrap(),
            None
        );
        assert_eq!(
            known_rn(&FamilySpec::Caterpillar { m: 7, k: 3 }).unwrap(),
            None
        );
        // T_{1,3} is S_3
        assert_eq!(
            known_rn(&FamilySpec::CompleteMary { h: 1, m: 3 }).unwrap(),
            Some(4)
        );
        assert_eq!(known_rn(&FamilySpec::Star { k: 5 }).unwrap(), Some(6));
    }

    #[test]
    fn params_parsing() {
        let spec = FamilySpec::from_params("banana", [("m", "3"), ("k", "4")]).unwrap();
        assert_eq!(spec, FamilySpec::Banana { m: 3, k: 4 });
        let spec =
            FamilySpec::from_params("levelwise_regular_2root", [("degrees", "3:4")]).unwrap();
        assert_eq!(
            spec,
            FamilySpec::LevelwiseTwoRoot {
                degrees: vec![3, 4]
            }
        );
        assert!(FamilySpec::from_params("tadpole", [("n", "3")]).is_err());
        assert!(FamilySpec::from_params("path", [("k", "3")]).is_err());
        assert!(FamilySpec::from_params("path", [("n", "3"), ("k", "3")]).is_err());
        assert!(FamilySpec::from_params("path", [("n", "x")]).is_err());
        assert!(FamilySpec::from_params("star", [("k", "1")]).is_err());
    }

    #[test]
    fn random_trees_are_trees() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for n in 1..20 {
            let t = random_tree(n, &mut rng);
            assert_eq!(t.n(), n);
            assert_eq!(t.edges().len(), n - 1);
        }
    }
}
