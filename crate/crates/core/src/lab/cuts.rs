use std::collections::BTreeSet;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{glue, Graph};
use crate::perm::Permutation;
use crate::tree::RootedTree;

/// Largest graph the exhaustive balanced-cut scan accepts.
pub const EXHAUSTIVE_SCAN_LIMIT: usize = 24;

/// A vertex subset `U` of `1..=n`; the complement is implicit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cut {
    n: usize,
    inside: Vec<bool>,
}

impl Cut {
    pub fn new(n: usize, members: &[usize]) -> Result<Self> {
        let mut inside = vec![false; n];
        for &v in members {
            if v == 0 || v > n {
                return Err(Error::LabelOutOfRange { label: v, n });
            }
            inside[v - 1] = true;
        }
        Ok(Cut { n, inside })
    }

    /// Bit `v - 1` of `mask` marks `v`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        Cut { n, inside: (0..n).map(|i| mask >> i & 1 == 1).collect() }
    }

    pub fn full(n: usize) -> Self {
        Cut { n, inside: vec![true; n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.inside.iter().filter(|&&x| x).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.inside[v - 1]
    }

    pub fn members(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.contains(v)).collect()
    }

    pub fn complement(&self) -> Cut {
        Cut { n: self.n, inside: self.inside.iter().map(|&x| !x).collect() }
    }

    /// Image of the cut under a permutation of the vertices.
    pub fn mapped(&self, phi: &Permutation) -> Cut {
        let mut inside = vec![false; self.n];
        for v in self.members() {
            inside[phi.apply(v) - 1] = true;
        }
        Cut { n: self.n, inside }
    }

    /// `n/3 <= |U| <= 2n/3`.
    pub fn is_balanced(&self) -> bool {
        let (lo, hi) = balanced_band(self.n);
        (lo..=hi).contains(&self.len())
    }
}

/// Smallest and largest size of a balanced cut of an `n`-vertex graph.
pub fn balanced_band(n: usize) -> (usize, usize) {
    (n.div_ceil(3), 2 * n / 3)
}

fn check_size(g: &Graph, u: &Cut) -> Result<()> {
    if g.n() != u.n() {
        return Err(Error::SizeMismatch { expected: g.n(), actual: u.n() });
    }
    Ok(())
}

/// Edges with exactly one endpoint in `U`.
pub fn crossing_edges(g: &Graph, u: &Cut) -> Result<Vec<(usize, usize)>> {
    check_size(g, u)?;
    Ok(g.edges().iter().copied().filter(|&(a, b)| u.contains(a) != u.contains(b)).collect())
}

/// Evaluates `1_U(r) n + Σ (-1)^{1_U(u)} n_v` over the crossing tree edges
/// `(u, v)`, parent first. The value always equals `|U|`.
pub fn cut_size_formula(t: &RootedTree, u: &Cut) -> Result<i64> {
    check_size(t.underlying(), u)?;
    let sizes = t.subtree_sizes();
    let mut total = if u.contains(t.root()) { t.n() as i64 } else { 0 };
    for (p, c) in t.oriented_edges() {
        if u.contains(p) != u.contains(c) {
            let nv = sizes[c - 1] as i64;
            total += if u.contains(p) { -nv } else { nv };
        }
    }
    Ok(total)
}

/// Number of classes of vertices of `U` with equal neighborhoods outside `U`.
pub fn similarity_mu(g: &Graph, u: &Cut) -> Result<usize> {
    check_size(g, u)?;
    let classes: BTreeSet<Vec<usize>> = u
        .members()
        .into_iter()
        .map(|x| g.neighbors(x).iter().copied().filter(|&y| !u.contains(y)).collect())
        .collect();
    Ok(classes.len())
}

fn mu_of_mask(adj: &[u64], mask: u64) -> usize {
    let mut outside: Vec<u64> = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        outside.push(adj[v] & !mask);
    }
    outside.sort_unstable();
    outside.dedup();
    outside.len()
}

fn e_of_mask(adj: &[u64], mask: u64) -> usize {
    let mut m = mask;
    let mut e = 0;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        e += (adj[v] & !mask).count_ones() as usize;
    }
    e
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanMode {
    /// Every balanced cut; exact minima.
    Exhaustive,
    /// `count` random balanced cuts; the minima are only upper bounds.
    Sampled { count: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanResult {
    /// Fewest crossing edges found, `e(G)` when exact.
    pub min_e: usize,
    pub argmin_e: Cut,
    /// Fewest similarity classes found, `mu(G)` when exact.
    pub min_mu: Option<usize>,
    pub argmin_mu: Option<Cut>,
    pub cuts_examined: u64,
    /// False for sampled scans, whose minima are upper bounds.
    pub exact: bool,
}

/// Minimum of `e_G(U)` (and of `mu_G(U)` when `with_mu`) over balanced
/// cuts. Ties go to the cut with the smallest bitmask.
pub fn balanced_cut_scan(g: &Graph, mode: ScanMode, with_mu: bool) -> Result<ScanResult> {
    let n = g.n();
    let (lo, hi) = balanced_band(n);
    if lo > hi {
        return Err(Error::InvalidParams(format!("a graph on {n} vertices has no balanced cut")));
    }
    let adj = g.masks();
    let best = |a: (usize, u64), b: (usize, u64)| a.min(b);
    let none = (usize::MAX, u64::MAX);

    let (masks, exact): (Vec<u64>, bool) = match mode {
        ScanMode::Exhaustive => {
            if n > EXHAUSTIVE_SCAN_LIMIT {
                return Err(Error::SolverLimitExceeded { n, limit: EXHAUSTIVE_SCAN_LIMIT });
            }
            (Vec::new(), true)
        }
        ScanMode::Sampled { count, seed } => {
            if n > 64 {
                return Err(Error::SolverLimitExceeded { n, limit: 64 });
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let masks = (0..count.max(1))
                .map(|_| {
                    let size = rng.gen_range(lo..=hi);
                    sample(&mut rng, n, size).into_iter().fold(0u64, |m, i| m | 1 << i)
                })
                .collect();
            (masks, false)
        }
    };

    let eval = |mask: u64| {
        let e = (e_of_mask(&adj, mask), mask);
        let mu = if with_mu { (mu_of_mask(&adj, mask), mask) } else { none };
        (e, mu)
    };
    let fold = |acc: ((usize, u64), (usize, u64)), x: ((usize, u64), (usize, u64))| (best(acc.0, x.0), best(acc.1, x.1));

    let (e, mu, examined) = if exact {
        let total = 1u64 << n;
        let chunk = 1u64 << n.saturating_sub(6).min(16);
        let starts: Vec<u64> = (0..total).step_by(chunk as usize).collect();
        let (e, mu, count) = starts
            .into_par_iter()
            .map(|start| {
                let mut acc = (none, none);
                let mut count = 0u64;
                for mask in start..(start + chunk).min(total) {
                    let size = mask.count_ones() as usize;
                    if size < lo || size > hi {
                        continue;
                    }
                    count += 1;
                    acc = fold(acc, eval(mask));
                }
                (acc.0, acc.1, count)
            })
            .reduce(|| (none, none, 0), |a, b| (best(a.0, b.0), best(a.1, b.1), a.2 + b.2));
        (e, mu, count)
    } else {
        let (e, mu) = masks.par_iter().map(|&m| eval(m)).reduce(|| (none, none), fold);
        (e, mu, masks.len() as u64)
    };
    Ok(ScanResult {
        min_e: e.0,
        argmin_e: Cut::from_mask(n, e.1),
        min_mu: with_mu.then_some(mu.0),
        argmin_mu: with_mu.then(|| Cut::from_mask(n, mu.1)),
        cuts_examined: examined,
        exact,
    })
}

/// Layers touched by the crossing edges of `U` in `glue(t2, t3, phi)`:
/// for a crossing edge `e`, the layer of `phi^{-1}(e)` in `t2` when that is
/// a `t2` edge, and the layer of `e` in `t3` when `e` is a `t3` edge.
pub fn layer_profile(t2: &RootedTree, t3: &RootedTree, phi: &Permutation, u: &Cut) -> Result<BTreeSet<usize>> {
    let g = glue(t2.underlying(), t3.underlying(), phi)?;
    let inv = phi.inverse();
    let mut out = BTreeSet::new();
    for (a, b) in crossing_edges(&g, u)? {
        if let Some(layer) = t2.layer_of_edge(inv.apply(a), inv.apply(b)) {
            out.insert(layer);
        }
        if let Some(layer) = t3.layer_of_edge(a, b) {
            out.insert(layer);
        }
    }
    Ok(out)
}
