//! Rooted trees, DFS orderings and tree classification.

use crate::error::{Error, Result};
use crate::graph::{Graph, Layout};

/// A tree with a distinguished root and an ordered child list per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    underlying: Graph,
    root: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    level: Vec<usize>,
}

impl RootedTree {
    /// Roots `tree` at `root`, ordering children by ascending label.
    pub fn new(tree: &Graph, root: usize) -> Result<Self> {
        Self::with_child_rank(tree, root, |v| v)
    }

    /// Roots `tree` at `root`, ordering each child list by `rank`.
    pub fn with_child_rank<F, K>(tree: &Graph, root: usize, rank: F) -> Result<Self>
    where
        F: Fn(usize) -> K,
        K: Ord,
    {
        if !tree.contains(root) {
            return Err(Error::LabelOutOfRange { label: root, n: tree.n() });
        }
        if !tree.is_tree() {
            return Err(Error::NotATree(format!(
                "{} vertices, {} edges, {} components",
                tree.n(),
                tree.edge_count(),
                tree.components().len()
            )));
        }
        let n = tree.n();
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut level = vec![0; n];
        let mut seen = vec![false; n];
        seen[root - 1] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in tree.neighbors(u) {
                if !seen[w - 1] {
                    seen[w - 1] = true;
                    parent[w - 1] = Some(u);
                    level[w - 1] = level[u - 1] + 1;
                    children[u - 1].push(w);
                    queue.push_back(w);
                }
            }
        }
        for list in &mut children {
            list.sort_by_key(|&c| rank(c));
        }
        Ok(RootedTree { underlying: tree.clone(), root, parent, children, level })
    }

    /// Builds a rooted tree from explicit ordered child lists
    /// (`children[v - 1]` lists the children of `v`).
    pub fn from_children(root: usize, children: Vec<Vec<usize>>) -> Result<Self> {
        let n = children.len();
        let edges: Vec<(usize, usize)> = children
            .iter()
            .enumerate()
            .flat_map(|(i, cs)| cs.iter().map(move |&c| (i + 1, c)))
            .collect();
        let underlying = Graph::new(n, edges.iter().copied())?;
        let base = Self::new(&underlying, root)?;
        // Every listed child must really be a child of its list owner.
        for (i, cs) in children.iter().enumerate() {
            for &c in cs {
                if base.parent(c) != Some(i + 1) {
                    return Err(Error::NotATree(format!(
                        "{c} listed as child of {} but hangs below {:?}",
                        i + 1,
                        base.parent(c)
                    )));
                }
            }
        }
        Ok(RootedTree { children, ..base })
    }

    pub fn n(&self) -> usize {
        self.underlying.n()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn underlying(&self) -> &Graph {
        &self.underlying
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v - 1]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v - 1]
    }

    /// Distance from the root.
    pub fn level(&self, v: usize) -> usize {
        self.level[v - 1]
    }

    pub fn height(&self) -> usize {
        self.level.iter().copied().max().unwrap_or(0)
    }

    /// Vertices grouped by level, each group in BFS order.
    pub fn levels(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.height() + 1];
        let mut queue = std::collections::VecDeque::from([self.root]);
        while let Some(u) = queue.pop_front() {
            out[self.level(u)].push(u);
            queue.extend(self.children(u).iter().copied());
        }
        out
    }

    /// Tree edges oriented parent first, `(u, v)` with `level(u) = level(v) - 1`.
    pub fn oriented_edges(&self) -> Vec<(usize, usize)> {
        (1..=self.n()).filter_map(|v| self.parent(v).map(|p| (p, v))).collect()
    }

    /// The layer of a tree edge: the level of its deeper endpoint.
    pub fn layer_of_edge(&self, a: usize, b: usize) -> Option<usize> {
        if self.parent(b) == Some(a) {
            Some(self.level(b))
        } else if self.parent(a) == Some(b) {
            Some(self.level(a))
        } else {
            None
        }
    }

    /// Subtree sizes `n_v`, indexed by `v - 1`.
    pub fn subtree_sizes(&self) -> Vec<usize> {
        let mut size = vec![1; self.n()];
        let order = self.dfs_preorder();
        for &v in order.order().iter().rev() {
            if let Some(p) = self.parent(v) {
                size[p - 1] += size[v - 1];
            }
        }
        size
    }

    /// Order of first visits of a depth-first search from the root that
    /// follows each child list in order.
    pub fn dfs_preorder(&self) -> Layout {
        let mut order = Vec::with_capacity(self.n());
        let mut stack = vec![self.root];
        while let Some(u) = stack.pop() {
            order.push(u);
            stack.extend(self.children(u).iter().rev());
        }
        Layout::new(order).expect("DFS visits every vertex once")
    }

    /// The closed DFS walk from the root, with repetitions; it has
    /// `2(n - 1) + 1` entries.
    pub fn dfs_walk(&self) -> Vec<usize> {
        let mut walk = vec![self.root];
        // (vertex, index of the next child to descend into)
        let mut stack = vec![(self.root, 0usize)];
        while let Some((u, next)) = stack.last_mut() {
            let u = *u;
            if let Some(&c) = self.children(u).get(*next) {
                *next += 1;
                walk.push(c);
                stack.push((c, 0));
            } else {
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    walk.push(p);
                }
            }
        }
        walk
    }

    /// Whether `sigma` is the first-visit order of some depth-first search of
    /// the underlying tree started at the root.
    pub fn is_dfs_preorder(&self, sigma: &Layout) -> bool {
        if sigma.len() != self.n() || sigma.at(1) != self.root {
            return false;
        }
        let reordered = RootedTree::with_child_rank(&self.underlying, self.root, |v| sigma.position(v))
            .expect("underlying graph is a tree");
        reordered.dfs_preorder() == *sigma
    }

    /// Same tree with child lists re-sorted by `rank`.
    pub fn reordered<F, K>(&self, rank: F) -> RootedTree
    where
        F: Fn(usize) -> K,
        K: Ord,
    {
        let mut out = self.clone();
        for list in &mut out.children {
            list.sort_by_key(|&c| rank(c));
        }
        out
    }

    /// AHU canonical string of the rooted, unordered shape. Two rooted trees
    /// are isomorphic iff their canonical forms are equal.
    pub fn canonical_form(&self) -> String {
        let mut code: Vec<String> = vec![String::new(); self.n()];
        let order = self.dfs_preorder();
        for &v in order.order().iter().rev() {
            let mut parts: Vec<&str> = self.children(v).iter().map(|&c| code[c - 1].as_str()).collect();
            parts.sort_unstable();
            code[v - 1] = format!("({})", parts.concat());
        }
        std::mem::take(&mut code[self.root - 1])
    }
}

/// Most specific tree family a graph belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeKind {
    NotTree,
    Tree,
    Caterpillar,
    Path,
    Star,
}

/// Cumulative family flags: every star and every path is a caterpillar,
/// and every caterpillar is a tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TreeClass {
    pub tree: bool,
    pub caterpillar: bool,
    pub path: bool,
    pub star: bool,
}

impl TreeClass {
    pub fn kind(&self) -> TreeKind {
        match *self {
            TreeClass { tree: false, .. } => TreeKind::NotTree,
            TreeClass { star: true, .. } => TreeKind::Star,
            TreeClass { path: true, .. } => TreeKind::Path,
            TreeClass { caterpillar: true, .. } => TreeKind::Caterpillar,
            _ => TreeKind::Tree,
        }
    }
}

pub fn classify_tree_kind(g: &Graph) -> TreeClass {
    if !g.is_tree() {
        return TreeClass { tree: false, caterpillar: false, path: false, star: false };
    }
    let n = g.n();
    let path = g.max_degree() <= 2;
    let star = n == 1 || g.max_degree() == n - 1;
    // Non-leaf vertices of a tree span a subtree; it is a path iff no
    // vertex has three or more non-leaf neighbors.
    let spine_ok = g.vertices().filter(|&v| g.degree(v) > 1).all(|v| {
        g.neighbors(v).iter().filter(|&&w| g.degree(w) > 1).count() <= 2
    });
    TreeClass { tree: true, caterpillar: spine_ok, path, star }
}
