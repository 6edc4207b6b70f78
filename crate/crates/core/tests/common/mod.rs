//! Test-only oracles: brute-force evaluators kept apart from the library's
//! own code paths, plus enumeration of small unlabeled trees.

#![allow(dead_code)]

use std::collections::BTreeSet;

use radiolb::families::prufer_edges;
use radiolb::{Tree, Vertex};

/// The distance condition on `seq`, evaluated as the literal double sum.
/// Returns the first failing `(i, j)` in lexicographic order.
pub fn naive_first_violation(tree: &Tree, seq: &[Vertex]) -> Option<(usize, usize)> {
    let view = tree.root_view();
    let d = i64::from(tree.diam());
    let eps = i64::from(view.epsilon());
    let level = |v: Vertex| i64::from(view.level(v));
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            let mut sum = 0;
            for t in i..j {
                sum += level(seq[t]) + level(seq[t + 1]);
            }
            let rhs = sum - (j - i) as i64 * (d + eps) + (d + 1);
            if i64::from(tree.dist(seq[i], seq[j])) < rhs {
                return Some((i, j));
            }
        }
    }
    None
}

/// Endpoint rule checked from the weights directly.
pub fn naive_endpoints_ok(tree: &Tree, seq: &[Vertex]) -> bool {
    let weights: Vec<u64> = tree
        .vertices()
        .map(|v| tree.vertex_weight(v).unwrap())
        .collect();
    let min = *weights.iter().min().unwrap();
    let centers: Vec<Vertex> = tree.vertices().filter(|&v| weights[v] == min).collect();
    let (first, last) = (seq[0], seq[seq.len() - 1]);
    match centers.as_slice() {
        [w] => seq.len() == 1 || (first == *w && tree.dist(*w, last) == 1),
        [a, b] => (first == *a && last == *b) || (first == *b && last == *a),
        _ => unreachable!(),
    }
}

/// Radio number by trying every placement order with no pruning at all.
pub fn reference_rn(tree: &Tree) -> u64 {
    let n = tree.n();
    let reach = u64::from(tree.diam()) + 1;
    let mut best = u64::MAX;
    let mut perm: Vec<Vertex> = (0..n).collect();
    permute(&mut perm, 0, &mut |order| {
        let mut labels = vec![0u64; n];
        for p in 1..n {
            let u = order[p];
            let mut f = labels[order[p - 1]] + 1;
            for &v in &order[..p] {
                f = f.max((labels[v] + reach).saturating_sub(u64::from(tree.dist(u, v))));
            }
            labels[u] = f;
        }
        best = best.min(labels[order[n - 1]]);
    });
    best
}

fn permute(items: &mut Vec<Vertex>, k: usize, visit: &mut dyn FnMut(&[Vertex])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// AHU encoding of the tree rooted at `root`.
fn encode(adj: &[Vec<Vertex>], root: Vertex, parent: Option<Vertex>) -> String {
    let mut children: Vec<String> = adj[root]
        .iter()
        .filter(|&&c| Some(c) != parent)
        .map(|&c| encode(adj, c, Some(root)))
        .collect();
    children.sort();
    format!("({})", children.concat())
}

/// Canonical form: the smallest encoding over the weight centers.
pub fn canonical(n: usize, edges: &[(Vertex, Vertex)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    // subtree sizes from vertex 0 to find the centroid(s)
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![0];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                parent[v] = u;
                order.push(v);
            }
        }
    }
    let mut size = vec![1usize; n];
    for &u in order.iter().rev().take(n - 1) {
        size[parent[u]] += size[u];
    }
    let heaviest = |u: Vertex| -> usize {
        let mut worst = n - size[u];
        for &v in &adj[u] {
            if v != parent[u] {
                worst = worst.max(size[v]);
            }
        }
        worst
    };
    let best = (0..n).map(heaviest).min().unwrap();
    (0..n)
        .filter(|&u| heaviest(u) == best)
        .map(|c| encode(&adj, c, None))
        .min()
        .unwrap()
}

/// One representative of every unlabeled tree on `n` vertices.
pub fn nonisomorphic_trees(n: usize) -> Vec<Tree> {
    if n <= 2 {
        return vec![Tree::new(n, (1..n).map(|v| (0, v))).unwrap()];
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut code = vec![0; n - 2];
    loop {
        let edges = prufer_edges(n, &code);
        if seen.insert(canonical(n, &edges)) {
            out.push(Tree::new(n, edges).unwrap());
        }
        // odometer over 0..n
        let mut i = 0;
        loop {
            if i == code.len() {
                return out;
            }
            code[i] += 1;
            if code[i] < n {
                break;
            }
            code[i] = 0;
            i += 1;
        }
    }
}
