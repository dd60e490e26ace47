//! Conversion of a tree decomposition into a smooth one of the same width.
//!
//! A width-k decomposition is smooth when every bag has exactly `k + 1`
//! vertices and adjacent bags share exactly `k`. Such a decomposition of an
//! n-vertex graph has exactly `n - k` nodes.
//!
//! The conversion runs three local rewrites until none applies:
//! 1. contract a decomposition edge whose one bag is contained in the other;
//! 2. grow each undersized bag with vertices borrowed from a full neighbor,
//!    sweeping outward from a full bag;
//! 3. subdivide each edge whose bags differ in `d >= 2` vertices per side by
//!    `d - 1` interpolating bags that swap one vertex at a time.

use std::collections::{BTreeSet, VecDeque};

use crate::decomposition::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;

struct Work {
    bags: Vec<BTreeSet<usize>>,
    adj: Vec<BTreeSet<usize>>,
    alive: Vec<bool>,
}

impl Work {
    fn contract_once(&mut self) -> bool {
        for i in 0..self.bags.len() {
            if !self.alive[i] {
                continue;
            }
            let target = self.adj[i].iter().copied().find(|&j| self.bags[i].is_subset(&self.bags[j]));
            if let Some(j) = target {
                let moved: Vec<usize> = std::mem::take(&mut self.adj[i]).into_iter().collect();
                for x in moved {
                    self.adj[x].remove(&i);
                    if x != j {
                        self.adj[x].insert(j);
                        self.adj[j].insert(x);
                    }
                }
                self.alive[i] = false;
                self.bags[i].clear();
                return true;
            }
        }
        false
    }

    fn grow(&mut self, size: usize) {
        let Some(start) = (0..self.bags.len()).find(|&i| self.alive[i] && self.bags[i].len() == size) else {
            return;
        };
        let mut seen = vec![false; self.bags.len()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let kids: Vec<usize> = self.adj[u].iter().copied().filter(|&c| !seen[c]).collect();
            for c in kids {
                seen[c] = true;
                let need = size - self.bags[c].len();
                let extra: Vec<usize> =
                    self.bags[u].difference(&self.bags[c]).copied().take(need).collect();
                self.bags[c].extend(extra);
                queue.push_back(c);
            }
        }
    }
}

/// Smooth decomposition of the same width as `d`.
pub fn smoothify(g: &Graph, d: &TreeDecomposition) -> Result<TreeDecomposition> {
    d.check(g)?;
    let n = g.n();
    let k = d.width();
    let size = k + 1;
    let m = d.bag_count();
    let mut w = Work {
        bags: d.bags().iter().map(|b| b.iter().copied().collect()).collect(),
        adj: vec![BTreeSet::new(); m],
        alive: vec![true; m],
    };
    for &(a, b) in d.tree_edges() {
        w.adj[a - 1].insert(b - 1);
        w.adj[b - 1].insert(a - 1);
    }
    loop {
        while w.contract_once() {}
        if (0..m).filter(|&i| w.alive[i]).all(|i| w.bags[i].len() == size) {
            break;
        }
        w.grow(size);
    }

    let ids: Vec<usize> = (0..m).filter(|&i| w.alive[i]).collect();
    let mut index = vec![usize::MAX; m];
    for (new, &old) in ids.iter().enumerate() {
        index[old] = new + 1;
    }
    let mut bags: Vec<Vec<usize>> = ids.iter().map(|&i| w.bags[i].iter().copied().collect()).collect();
    let mut edges = Vec::new();
    for &i in &ids {
        for &j in w.adj[i].iter().filter(|&&j| j > i) {
            let (a, b) = (&w.bags[i], &w.bags[j]);
            let out: Vec<usize> = a.difference(b).copied().collect();
            let inn: Vec<usize> = b.difference(a).copied().collect();
            let common: Vec<usize> = a.intersection(b).copied().collect();
            let mut prev = index[i];
            // step t swaps in the first t vertices of `inn` and drops the
            // first t of `out`
            for t in 1..out.len() {
                let mut bag = common.clone();
                bag.extend_from_slice(&out[t..]);
                bag.extend_from_slice(&inn[..t]);
                bags.push(bag);
                edges.push((prev, bags.len()));
                prev = bags.len();
            }
            edges.push((prev, index[j]));
        }
    }
    let smooth = TreeDecomposition::new(n, bags, edges)?;
    smooth.check(g)?;
    if !is_smooth(&smooth) || smooth.bag_count() != n - k {
        return Err(Error::Invariant(format!(
            "smoothing produced {} nodes for n={n}, k={k}",
            smooth.bag_count()
        )));
    }
    Ok(smooth)
}

/// All bags of size `width + 1`, adjacent bags sharing exactly `width`.
pub fn is_smooth(d: &TreeDecomposition) -> bool {
    let k = d.width();
    d.bags().iter().all(|b| b.len() == k + 1)
        && d.tree_edges().iter().all(|&(a, b)| {
            let (x, y) = (d.bag(a), d.bag(b));
            x.iter().filter(|v| y.binary_search(v).is_ok()).count() == k
        })
}
