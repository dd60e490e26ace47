//! Vertex separation of layouts and exact pathwidth.

use rustc_hash::FxHashSet;

use crate::decomposition::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::{Graph, Layout};
use crate::treewidth::minor_min_width;

/// `S(v)` for every vertex: the vertices `w` placed before `v` that have a
/// neighbor placed at or after `v`. Indexed by `v - 1`, each set sorted.
pub fn separation_profile(g: &Graph, layout: &Layout) -> Result<Vec<Vec<usize>>> {
    if layout.len() != g.n() {
        return Err(Error::SizeMismatch { expected: g.n(), actual: layout.len() });
    }
    // last[w] = position of the furthest neighbor of w
    let last: Vec<usize> = g
        .vertices()
        .map(|w| g.neighbors(w).iter().map(|&x| layout.position(x)).max().unwrap_or(0))
        .collect();
    let mut out = vec![Vec::new(); g.n()];
    for v in g.vertices() {
        let p = layout.position(v);
        let mut s: Vec<usize> = layout.order()[..p - 1]
            .iter()
            .copied()
            .filter(|&w| last[w - 1] >= p)
            .collect();
        s.sort_unstable();
        out[v - 1] = s;
    }
    Ok(out)
}

/// `vs_π(G) = max_v |S(v)|`.
pub fn vs_of_layout(g: &Graph, layout: &Layout) -> Result<usize> {
    Ok(separation_profile(g, layout)?.iter().map(Vec::len).max().unwrap_or(0))
}

/// Path decomposition with bags `{v} ∪ S(v)` in layout order; its width is
/// `vs_π(G)`.
pub fn path_decomposition_from_layout(g: &Graph, layout: &Layout) -> Result<TreeDecomposition> {
    let profile = separation_profile(g, layout)?;
    let bags = layout
        .order()
        .iter()
        .map(|&v| {
            let mut b = profile[v - 1].clone();
            b.push(v);
            b
        })
        .collect();
    TreeDecomposition::path(g.n(), bags)
}

/// Layout of vertex separation at most 1 for a caterpillar: the spine in
/// order, each spine vertex followed by its leaves.
pub fn caterpillar_layout(g: &Graph) -> Result<Layout> {
    if !crate::tree::classify_tree_kind(g).caterpillar {
        return Err(Error::InvalidParams("graph is not a caterpillar".into()));
    }
    let inner = |v: usize| g.degree(v) > 1;
    let Some(start) = g
        .vertices()
        .find(|&v| inner(v) && g.neighbors(v).iter().filter(|&&w| inner(w)).count() <= 1)
    else {
        return Ok(Layout::identity(g.n()));
    };
    let mut order = Vec::with_capacity(g.n());
    let (mut prev, mut cur) = (0, start);
    loop {
        order.push(cur);
        order.extend(g.neighbors(cur).iter().copied().filter(|&w| !inner(w)));
        match g.neighbors(cur).iter().copied().find(|&w| w != prev && inner(w)) {
            Some(next) => (prev, cur) = (cur, next),
            None => break,
        }
    }
    Layout::new(order)
}

#[derive(Clone, Debug)]
pub struct PathwidthResult {
    pub width: usize,
    /// Lexicographically smallest layout of optimal vertex separation.
    pub layout: Layout,
    pub decomposition: TreeDecomposition,
}

/// Vertices of `placed` with a neighbor outside it.
#[inline]
fn boundary(adj: &[u64], placed: u64) -> u32 {
    let mut count = 0;
    let mut p = placed;
    while p != 0 {
        let w = p.trailing_zeros() as usize;
        p &= p - 1;
        if adj[w] & !placed != 0 {
            count += 1;
        }
    }
    count
}

struct Search<'a> {
    adj: &'a [u64],
    all: u64,
    k: u32,
    dead: FxHashSet<u64>,
    order: Vec<usize>,
}

impl Search<'_> {
    // Every proper prefix must have at most k boundary vertices.
    fn run(&mut self, placed: u64) -> bool {
        let rest = self.all & !placed;
        if rest.count_ones() <= 1 {
            if rest != 0 {
                self.order.push(rest.trailing_zeros() as usize);
            }
            return true;
        }
        let mut r = rest;
        while r != 0 {
            let v = r.trailing_zeros() as usize;
            r &= r - 1;
            let next = placed | 1 << v;
            if self.dead.contains(&next) || boundary(self.adj, next) > self.k {
                continue;
            }
            self.order.push(v);
            if self.run(next) {
                return true;
            }
            self.order.pop();
            self.dead.insert(next);
        }
        false
    }
}

pub(crate) fn pathwidth(g: &Graph) -> PathwidthResult {
    let n = g.n();
    let adj = g.masks();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let lower = if g.edge_count() == 0 { 0 } else { minor_min_width(g).max(1) };
    let (width, order) = (lower..=n)
        .find_map(|k| {
            let mut s =
                Search { adj: &adj, all, k: k as u32, dead: FxHashSet::default(), order: Vec::new() };
            s.run(0).then_some((k, s.order))
        })
        .expect("width n - 1 is always feasible");
    let layout = Layout::new(order.into_iter().map(|v| v + 1).collect()).expect("search places each vertex once");
    let decomposition = path_decomposition_from_layout(g, &layout).expect("sizes agree");
    PathwidthResult { width, layout, decomposition }
}
