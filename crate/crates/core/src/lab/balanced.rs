use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tree::RootedTree;

/// A balanced `b`-ary tree on `1..=n`, labeled in BFS order (root 1).
#[derive(Clone, Debug)]
pub struct BalancedTree {
    pub tree: RootedTree,
    pub b: usize,
}

impl BalancedTree {
    pub fn n(&self) -> usize {
        self.tree.n()
    }

    pub fn graph(&self) -> &Graph {
        self.tree.underlying()
    }

    /// Number of filled levels.
    pub fn full_levels(&self) -> usize {
        full_levels(self.b, self.n())
    }
}

/// Number of levels of a balanced `b`-ary tree on `n` vertices that are
/// completely filled.
fn full_levels(b: usize, n: usize) -> usize {
    let (mut levels, mut total, mut width) = (0, 0, 1);
    while total + width <= n {
        total += width;
        width *= b;
        levels += 1;
    }
    levels
}

/// How the descent picks among children with equally few descendants.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TieBreak {
    #[default]
    SmallestLabel,
    LargestLabel,
}

/// Grows a balanced tree one leaf at a time: descend from the root to the
/// lowest filled level, always into a child with the fewest descendants, and
/// attach the new leaf there. Vertices are labeled in insertion order.
#[derive(Clone, Debug)]
pub struct BalancedBuilder {
    b: usize,
    tie: TieBreak,
    children: Vec<Vec<usize>>,
    size: Vec<usize>,
    parent: Vec<usize>,
}

impl BalancedBuilder {
    pub fn new(b: usize, tie: TieBreak) -> Result<Self> {
        if b < 2 {
            return Err(Error::InvalidParams(format!("arity must be at least 2, got {b}")));
        }
        Ok(BalancedBuilder { b, tie, children: vec![Vec::new()], size: vec![1], parent: vec![0] })
    }

    pub fn len(&self) -> usize {
        self.size.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Adds one leaf and returns its label.
    pub fn push(&mut self) -> usize {
        let depth = full_levels(self.b, self.len()) - 1;
        let mut x = 1;
        for _ in 0..depth {
            let kids = &self.children[x - 1];
            let best = kids.iter().map(|&c| self.size[c - 1]).min().expect("filled level has children");
            let mut ties = kids.iter().copied().filter(|&c| self.size[c - 1] == best);
            x = match self.tie {
                TieBreak::SmallestLabel => ties.next(),
                TieBreak::LargestLabel => ties.next_back(),
            }
            .expect("minimum is attained");
        }
        let v = self.len() + 1;
        self.children[x - 1].push(v);
        self.children.push(Vec::new());
        self.size.push(1);
        self.parent.push(x);
        let mut up = x;
        while up != 0 {
            self.size[up - 1] += 1;
            up = self.parent[up - 1];
        }
        v
    }

    /// The current tree, labeled in insertion order.
    pub fn current(&self) -> RootedTree {
        RootedTree::from_children(1, self.children.clone()).expect("builder keeps a tree")
    }

    /// The current tree relabeled in BFS order.
    pub fn finish(&self) -> BalancedTree {
        let t = self.current();
        let bfs: Vec<usize> = t.levels().concat();
        let mut label = vec![0; bfs.len()];
        for (i, &v) in bfs.iter().enumerate() {
            label[v - 1] = i + 1;
        }
        let mut children = vec![Vec::new(); bfs.len()];
        for &v in &bfs {
            children[label[v - 1] - 1] = t.children(v).iter().map(|&c| label[c - 1]).collect();
        }
        let tree = RootedTree::from_children(1, children).expect("relabeling keeps a tree");
        BalancedTree { tree, b: self.b }
    }
}

/// The balanced `b`-ary tree `T_b(n)` with BFS labels.
pub fn balanced_tree(b: usize, n: usize) -> Result<BalancedTree> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut builder = BalancedBuilder::new(b, TieBreak::SmallestLabel)?;
    while builder.len() < n {
        builder.push();
    }
    Ok(builder.finish())
}

/// Whether `t` is a balanced `b`-ary tree: at most `b` children per vertex,
/// every level but the last filled, and subtree sizes on a level within 1.
pub fn is_balanced(t: &RootedTree, b: usize) -> bool {
    if (1..=t.n()).any(|v| t.children(v).len() > b) {
        return false;
    }
    let levels = t.levels();
    let last = levels.len() - 1;
    let mut width = 1;
    for (i, level) in levels.iter().enumerate() {
        if i < last && level.len() != width {
            return false;
        }
        width *= b;
    }
    let sizes = t.subtree_sizes();
    levels.iter().all(|level| {
        let lo = level.iter().map(|&v| sizes[v - 1]).min().unwrap_or(0);
        let hi = level.iter().map(|&v| sizes[v - 1]).max().unwrap_or(0);
        hi - lo <= 1
    })
}

/// Subtree size of a vertex against its level-only prediction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileEntry {
    pub v: usize,
    pub level: usize,
    pub size: usize,
    /// `(n - (b^lev - 1)/(b - 1)) / b^lev`
    pub predicted: Rational64,
    /// `size - predicted`
    pub beta: Rational64,
}

pub fn subtree_profile(t: &BalancedTree) -> Vec<ProfileEntry> {
    let n = t.n() as i64;
    let b = t.b as i64;
    let sizes = t.tree.subtree_sizes();
    (1..=t.n())
        .map(|v| {
            let level = t.tree.level(v);
            let pow = b.pow(level as u32);
            let above = (pow - 1) / (b - 1);
            let predicted = Rational64::new(n - above, pow);
            let size = sizes[v - 1];
            ProfileEntry { v, level, size, predicted, beta: Rational64::from_integer(size as i64) - predicted }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn binary_twenty_matches_figure() {
        let t = balanced_tree(2, 20).unwrap();
        let sizes = t.tree.subtree_sizes();
        let level1: Vec<usize> = t.tree.children(1).iter().map(|&c| sizes[c - 1]).collect();
        assert_eq!(level1, vec![10, 9]);
        assert_eq!(t.full_levels(), 4);
        assert!(is_balanced(&t.tree, 2));
    }

    #[test]
    fn insertion_order_of_figure() {
        // Leaves 1..5 of the binary figure hang below the level-3 vertices
        // in left-to-right positions 1, 5, 3, 7, 2; the ternary figure's
        // seven leaves go to positions 1, 4, 7, 2, 5, 8, 3.
        for (b, n, expected) in [(2, 20, vec![1, 5, 3, 7, 2]), (3, 20, vec![1, 4, 7, 2, 5, 8, 3])] {
            let mut builder = BalancedBuilder::new(b, TieBreak::SmallestLabel).unwrap();
            let core = (b.pow(full_levels(b, n) as u32) - 1) / (b - 1);
            while builder.len() < core {
                builder.push();
            }
            let t = builder.current();
            let bottom = t.levels().last().unwrap().clone();
            let mut got = Vec::new();
            while builder.len() < n {
                let v = builder.push();
                let p = builder.current().parent(v).unwrap();
                got.push(bottom.iter().position(|&x| x == p).unwrap() + 1);
            }
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn perfect_ternary() {
        let t = balanced_tree(3, 13).unwrap();
        assert_eq!(t.tree.height(), 2);
        assert!(subtree_profile(&t).iter().all(|e| e.beta == Rational64::from_integer(0)));
    }

    #[test]
    fn profile_examples() {
        let t = balanced_tree(2, 20).unwrap();
        let profile = subtree_profile(&t);
        assert_eq!(profile[0].size, 20);
        assert_eq!(profile[0].beta, Rational64::from_integer(0));
        for e in profile.iter().filter(|e| e.level == 1) {
            assert_eq!(e.predicted, Rational64::new(19, 2));
            assert_eq!(e.beta.abs(), Rational64::new(1, 2));
        }
    }

    #[test]
    fn every_step_stays_balanced() {
        for b in [2, 3, 4] {
            for tie in [TieBreak::SmallestLabel, TieBreak::LargestLabel] {
                let mut builder = BalancedBuilder::new(b, tie).unwrap();
                for _ in 0..200 {
                    builder.push();
                    assert!(is_balanced(&builder.current(), b));
                }
            }
        }
    }

    #[test]
    fn tie_break_does_not_change_shape() {
        for b in [2, 3] {
            let mut left = BalancedBuilder::new(b, TieBreak::SmallestLabel).unwrap();
            let mut right = BalancedBuilder::new(b, TieBreak::LargestLabel).unwrap();
            for _ in 0..120 {
                left.push();
                right.push();
                assert_eq!(left.current().canonical_form(), right.current().canonical_form());
            }
        }
    }

    #[test]
    fn bfs_labels() {
        let t = balanced_tree(3, 20).unwrap();
        assert_eq!(t.tree.levels().concat(), (1..=20).collect::<Vec<_>>());
        assert_eq!(t.tree.children(1), &[2, 3, 4]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(balanced_tree(1, 5).is_err());
        assert!(balanced_tree(2, 0).is_err());
    }

    #[test]
    fn unbalanced_tree_is_detected() {
        let g = crate::generate::path(4);
        assert!(!is_balanced(&RootedTree::new(&g, 1).unwrap(), 2));
        let g = crate::graph::make_graph(5, &[(1, 2), (1, 3), (2, 4), (4, 5)]).unwrap();
        assert!(!is_balanced(&RootedTree::new(&g, 1).unwrap(), 2));
    }
}
