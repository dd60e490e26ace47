//! Exact treewidth by search over sets of eliminated vertices, plus the
//! bounds that bracket the search.

use rustc_hash::FxHashSet;

use crate::decomposition::{from_elimination_order, TreeDecomposition};
use crate::graph::Graph;

/// Optimal width together with a witnessing decomposition.
#[derive(Clone, Debug)]
pub struct TreewidthResult {
    pub width: usize,
    /// Lexicographically smallest elimination ordering of optimal width.
    pub elimination_order: Vec<usize>,
    pub decomposition: TreeDecomposition,
}

/// Vertices outside `eliminated ∪ {v}` reachable from `v` through
/// eliminated vertices; these are `v`'s neighbors in the filled graph once
/// `eliminated` is gone.
#[inline]
pub(crate) fn later_neighbors(adj: &[u64], eliminated: u64, v: usize) -> u64 {
    let vbit = 1u64 << v;
    let mut comp = vbit;
    let mut frontier = vbit;
    let mut reach = 0u64;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let u = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[u];
        }
        reach |= next;
        frontier = next & eliminated & !comp;
        comp |= frontier;
    }
    reach & !eliminated & !vbit
}

struct Search<'a> {
    adj: &'a [u64],
    all: u64,
    k: u32,
    dead: FxHashSet<u64>,
    order: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, eliminated: u64) -> bool {
        let rest = self.all & !eliminated;
        if rest.count_ones() <= self.k + 1 {
            let mut r = rest;
            while r != 0 {
                self.order.push(r.trailing_zeros() as usize);
                r &= r - 1;
            }
            return true;
        }
        let mut r = rest;
        while r != 0 {
            let v = r.trailing_zeros() as usize;
            r &= r - 1;
            let next = eliminated | 1 << v;
            if self.dead.contains(&next) {
                continue;
            }
            if later_neighbors(self.adj, eliminated, v).count_ones() <= self.k {
                self.order.push(v);
                if self.run(next) {
                    return true;
                }
                self.order.pop();
                self.dead.insert(next);
            }
        }
        false
    }
}

/// Lexicographically smallest elimination ordering (0-based vertices) of
/// width at most `k`, if one exists.
fn decide(adj: &[u64], k: usize) -> Option<Vec<usize>> {
    let n = adj.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut s = Search { adj, all, k: k as u32, dead: FxHashSet::default(), order: Vec::with_capacity(n) };
    s.run(0).then_some(s.order)
}

/// Minor-min-width lower bound: repeatedly record the minimum degree and
/// contract a minimum-degree vertex into its lowest-degree neighbor.
pub fn minor_min_width(g: &Graph) -> usize {
    let n = g.n();
    let mut nbrs: Vec<FxHashSet<usize>> =
        g.vertices().map(|v| g.neighbors(v).iter().map(|&w| w - 1).collect()).collect();
    let mut alive: Vec<bool> = vec![true; n];
    let mut best = 0;
    for _ in 0..n {
        let v = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (nbrs[v].len(), v)).unwrap();
        best = best.max(nbrs[v].len());
        let target = nbrs[v].iter().copied().min_by_key(|&w| (nbrs[w].len(), w));
        let vn: Vec<usize> = nbrs[v].iter().copied().collect();
        for &w in &vn {
            nbrs[w].remove(&v);
        }
        if let Some(t) = target {
            for &w in &vn {
                if w != t {
                    nbrs[w].insert(t);
                    nbrs[t].insert(w);
                }
            }
        }
        nbrs[v].clear();
        alive[v] = false;
    }
    best
}

/// Greedy min-fill elimination: an upper bound and its ordering (1-based).
/// Ties go to the smaller label.
pub fn greedy_fill_in(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.n();
    let mut nbrs: Vec<FxHashSet<usize>> =
        g.vertices().map(|v| g.neighbors(v).iter().map(|&w| w - 1).collect()).collect();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    let mut width = 0;
    for _ in 0..n {
        let fill = |v: usize| {
            let ns: Vec<usize> = nbrs[v].iter().copied().collect();
            let mut missing = 0;
            for (i, &a) in ns.iter().enumerate() {
                for &b in &ns[i + 1..] {
                    if !nbrs[a].contains(&b) {
                        missing += 1;
                    }
                }
            }
            missing
        };
        let v = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (fill(v), nbrs[v].len(), v)).unwrap();
        let ns: Vec<usize> = nbrs[v].iter().copied().collect();
        width = width.max(ns.len());
        for (i, &a) in ns.iter().enumerate() {
            nbrs[a].remove(&v);
            for &b in &ns[i + 1..] {
                nbrs[a].insert(b);
                nbrs[b].insert(a);
            }
        }
        nbrs[v].clear();
        alive[v] = false;
        order.push(v + 1);
    }
    (width, order)
}

fn value_and_order(g: &Graph, need_order: bool) -> (usize, Option<Vec<usize>>) {
    if g.edge_count() == 0 {
        return (0, need_order.then(|| g.vertices().collect()));
    }
    let adj = g.masks();
    let lower = minor_min_width(g).max(1);
    let (upper, _) = greedy_fill_in(g);
    for k in lower..upper {
        if let Some(order) = decide(&adj, k) {
            return (k, Some(order.into_iter().map(|v| v + 1).collect()));
        }
    }
    if !need_order {
        return (upper, None);
    }
    let order = decide(&adj, upper).expect("greedy ordering attains the upper bound");
    (upper, Some(order.into_iter().map(|v| v + 1).collect()))
}

/// Exact treewidth without building a witness. Requires `n <= 64`.
pub(crate) fn treewidth_value(g: &Graph) -> usize {
    value_and_order(g, false).0
}

pub(crate) fn treewidth(g: &Graph) -> TreewidthResult {
    let (width, order) = value_and_order(g, true);
    let order = order.expect("order requested");
    let decomposition = from_elimination_order(g, &order).expect("order is a permutation");
    debug_assert_eq!(decomposition.width(), width);
    TreewidthResult { width, elimination_order: order, decomposition }
}

#[cfg(test)]
pub(crate) mod oracle {
    use crate::graph::Graph;

    /// Width of the filled graph for one ordering (0-based).
    pub fn order_width(g: &Graph, order: &[usize]) -> usize {
        let n = g.n();
        let mut adj = vec![vec![false; n]; n];
        for &(u, v) in g.edges() {
            adj[u - 1][v - 1] = true;
            adj[v - 1][u - 1] = true;
        }
        let mut gone = vec![false; n];
        let mut width = 0;
        for &v in order {
            let later: Vec<usize> = (0..n).filter(|&w| !gone[w] && w != v && adj[v][w]).collect();
            width = width.max(later.len());
            for &a in &later {
                for &b in &later {
                    if a != b {
                        adj[a][b] = true;
                    }
                }
            }
            gone[v] = true;
        }
        width
    }

    /// Minimum over all n! elimination orderings.
    pub fn brute_force_treewidth(g: &Graph) -> usize {
        let mut order: Vec<usize> = (0..g.n()).collect();
        let mut best = usize::MAX;
        permute(&mut order, 0, &mut |o| best = best.min(order_width(g, o)));
        best
    }

    pub fn permute(items: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == items.len() {
            f(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permute(items, k + 1, f);
            items.swap(k, i);
        }
    }
}
