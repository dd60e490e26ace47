use crate::decomposition::{from_elimination_order, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{glue, Graph, Layout};
use crate::perm::Permutation;
use crate::tree::{classify_tree_kind, RootedTree};

use super::{GluingKind, GluingResult};

/// Glues a path `p` and a tree `t` into an outerplanar graph: the path is
/// laid along a DFS preorder of `t` rooted at 1, so its edges join
/// consecutive vertices of the spine and the tree edges nest.
///
/// The witness comes from eliminating vertices of degree at most 2, which
/// always exist in an outerplanar graph, so the width is at most 2.
pub fn glue_path_tree(p: &Graph, t: &Graph) -> Result<GluingResult> {
    if p.n() != t.n() {
        return Err(Error::SizeMismatch { expected: p.n(), actual: t.n() });
    }
    if !classify_tree_kind(p).path {
        return Err(Error::InvalidParams("first graph is not a path".into()));
    }
    let sigma = RootedTree::new(t, 1)?.dfs_preorder();
    let walk = path_order(p);
    let mut images = vec![0; p.n()];
    for (i, &v) in walk.iter().enumerate() {
        images[v - 1] = sigma.at(i + 1);
    }
    let phi = Permutation::from_images(images)?;
    let glued = glue(p, t, &phi)?;
    debug_assert_eq!(spine_crossings(&glued, &sigma), 0);
    let witness = low_degree_elimination(&glued)?;
    GluingResult { phi, glued, witness, claimed_bound: 2, kind: GluingKind::PathTree }.certified(p, t)
}

/// Vertices of a path graph from its smaller end to the other.
fn path_order(p: &Graph) -> Vec<usize> {
    let start = p.vertices().find(|&v| p.degree(v) <= 1).expect("a path has an end");
    let mut order = vec![start];
    let mut prev = 0;
    let mut cur = start;
    while let Some(&next) = p.neighbors(cur).iter().find(|&&w| w != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

fn low_degree_elimination(g: &Graph) -> Result<TreeDecomposition> {
    let n = g.n();
    let mut nbrs: Vec<std::collections::BTreeSet<usize>> =
        g.vertices().map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (1..=n)
            .find(|&v| alive[v - 1] && nbrs[v - 1].len() <= 2)
            .ok_or_else(|| Error::Invariant("no vertex of degree at most 2 left".into()))?;
        let around: Vec<usize> = nbrs[v - 1].iter().copied().collect();
        for &x in &around {
            nbrs[x - 1].remove(&v);
        }
        if let [x, y] = around[..] {
            nbrs[x - 1].insert(y);
            nbrs[y - 1].insert(x);
        }
        alive[v - 1] = false;
        order.push(v);
    }
    from_elimination_order(g, &order)
}

/// Number of pairs of edges that cross when the vertices are placed on a
/// circle in the order `sigma`.
pub fn spine_crossings(g: &Graph, sigma: &Layout) -> usize {
    let chords: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (sigma.position(u), sigma.position(v));
            (a.min(b), a.max(b))
        })
        .collect();
    let mut count = 0;
    for (i, &(a, b)) in chords.iter().enumerate() {
        for &(c, d) in &chords[i + 1..] {
            if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                count += 1;
            }
        }
    }
    count
}

/// Whether `g` has a drawing with every vertex on the outer face, decided
/// by searching for a circular vertex order without crossing edges.
/// Exponential; meant for small graphs.
pub fn is_outerplanar(g: &Graph) -> bool {
    let n = g.n();
    if n <= 3 {
        return true;
    }
    if g.edge_count() > 2 * n - 3 {
        return false;
    }
    let mut pos = vec![0usize; n + 1];
    let mut placed = vec![1usize];
    pos[1] = 1;
    circle_search(g, &mut pos, &mut placed)
}

fn circle_search(g: &Graph, pos: &mut [usize], placed: &mut Vec<usize>) -> bool {
    let n = g.n();
    if placed.len() == n {
        return true;
    }
    let p = placed.len() + 1;
    for v in 1..=n {
        if pos[v] != 0 {
            continue;
        }
        pos[v] = p;
        if !crosses_placed(g, pos, placed, v) {
            placed.push(v);
            if circle_search(g, pos, placed) {
                return true;
            }
            placed.pop();
        }
        pos[v] = 0;
    }
    false
}

/// Whether a chord from the newest vertex `v` to an earlier vertex crosses
/// a chord between two earlier vertices.
fn crosses_placed(g: &Graph, pos: &[usize], placed: &[usize], v: usize) -> bool {
    for &u in g.neighbors(v) {
        let q = pos[u];
        if q == 0 {
            continue;
        }
        for &x in placed {
            if pos[x] <= q {
                continue;
            }
            // x lies strictly between q and p; a chord to anything before q crosses
            if g.neighbors(x).iter().any(|&y| pos[y] != 0 && pos[y] < q && y != v) {
                return true;
            }
        }
    }
    false
}
