//! Slow, obviously-correct reference implementations.
#![allow(dead_code)]

use std::collections::BTreeSet;

use twglue::{Graph, Permutation};

pub fn edge_set(g: &Graph) -> BTreeSet<(usize, usize)> {
    g.edges().iter().copied().collect()
}

/// `phi(E1) ∪ E2` as a set of normalized pairs.
pub fn union_oracle(g1: &Graph, g2: &Graph, phi: &Permutation) -> BTreeSet<(usize, usize)> {
    let mut out = edge_set(g2);
    for &(u, v) in g1.edges() {
        let (a, b) = (phi.apply(u), phi.apply(v));
        out.insert((a.min(b), a.max(b)));
    }
    out
}

/// Calls `f` on every permutation of `items` (Heap's algorithm).
pub fn for_each_permutation(items: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    fn go(k: usize, items: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if k <= 1 {
            f(items);
            return;
        }
        for i in 0..k - 1 {
            go(k - 1, items, f);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
        go(k - 1, items, f);
    }
    let k = items.len();
    go(k, items, f);
}

fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut adj = vec![vec![false; n + 1]; n + 1];
    for &(u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

/// Minimum over all elimination orderings of the largest later-neighborhood
/// in the filled graph.
pub fn brute_treewidth(g: &Graph) -> usize {
    let n = g.n();
    let base = adjacency(g);
    let mut best = usize::MAX;
    let mut order: Vec<usize> = (1..=n).collect();
    for_each_permutation(&mut order, &mut |o| {
        let mut adj = base.clone();
        let mut gone = vec![false; n + 1];
        let mut width = 0;
        for &v in o {
            let later: Vec<usize> = (1..=n).filter(|&w| !gone[w] && w != v && adj[v][w]).collect();
            width = width.max(later.len());
            for &a in &later {
                for &b in &later {
                    if a != b {
                        adj[a][b] = true;
                    }
                }
            }
            gone[v] = true;
            if width >= best {
                break;
            }
        }
        best = best.min(width);
    });
    best
}

/// `max_v |{w : pos(w) < pos(v) <= pos(x) for some neighbor x of w}|`,
/// straight from the definition.
pub fn vs_direct(g: &Graph, order: &[usize]) -> usize {
    let n = g.n();
    let mut pos = vec![0; n + 1];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i + 1;
    }
    let adj = adjacency(g);
    (1..=n)
        .map(|v| {
            (1..=n)
                .filter(|&w| pos[w] < pos[v] && (1..=n).any(|x| adj[w][x] && pos[v] <= pos[x]))
                .count()
        })
        .max()
        .unwrap_or(0)
}

pub fn brute_pathwidth(g: &Graph) -> usize {
    let mut best = usize::MAX;
    let mut order: Vec<usize> = (1..=g.n()).collect();
    for_each_permutation(&mut order, &mut |o| best = best.min(vs_direct(g, o)));
    best
}

pub fn brute_vertex_cover_size(g: &Graph) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .filter(|mask| g.edges().iter().all(|&(u, v)| mask >> (u - 1) & 1 == 1 || mask >> (v - 1) & 1 == 1))
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap()
}

/// Number of distinct outside-neighborhoods over members of `u`.
pub fn mu_direct(g: &Graph, u: &[bool]) -> usize {
    let classes: BTreeSet<Vec<usize>> = (1..=g.n())
        .filter(|&x| u[x - 1])
        .map(|x| g.neighbors(x).iter().copied().filter(|&y| !u[y - 1]).collect())
        .collect();
    classes.len()
}
