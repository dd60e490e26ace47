//! Tree decompositions and their validation.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tree::RootedTree;

/// A tree of bags over the vertices `1..=n` of some graph.
///
/// Node ids are `1..=bag_count()`; bags are kept sorted. The node tree is
/// checked to be a tree at construction, so only the three decomposition
/// properties are left to [`validate_td`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    n: usize,
    bags: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn new(n: usize, bags: Vec<Vec<usize>>, edges: Vec<(usize, usize)>) -> Result<Self> {
        if bags.is_empty() {
            return Err(Error::InvalidDecomposition("no bags".into()));
        }
        let bags: Vec<Vec<usize>> = bags
            .into_iter()
            .map(|b| {
                let set: BTreeSet<usize> = b.into_iter().collect();
                set.into_iter().collect::<Vec<_>>()
            })
            .collect();
        for (i, b) in bags.iter().enumerate() {
            if let Some(&v) = b.iter().find(|&&v| v == 0 || v > n) {
                return Err(Error::InvalidDecomposition(format!(
                    "bag {} holds vertex {v} outside 1..={n}",
                    i + 1
                )));
            }
        }
        let node_tree = Graph::new(bags.len(), edges.iter().copied())
            .map_err(|e| Error::InvalidDecomposition(format!("node tree: {e}")))?;
        if !node_tree.is_tree() {
            return Err(Error::InvalidDecomposition(format!(
                "{} nodes joined by {} edges do not form a tree",
                bags.len(),
                node_tree.edge_count()
            )));
        }
        Ok(TreeDecomposition { n, bags, edges: node_tree.edges().to_vec() })
    }

    /// A path decomposition whose nodes are joined in bag order.
    pub fn path(n: usize, bags: Vec<Vec<usize>>) -> Result<Self> {
        let edges = (1..bags.len()).map(|i| (i, i + 1)).collect();
        Self::new(n, bags, edges)
    }

    /// The single-bag decomposition `{1, ..., n}`.
    pub fn trivial(n: usize) -> Self {
        TreeDecomposition { n, bags: vec![(1..=n).collect()], edges: Vec::new() }
    }

    /// Size of the decomposed graph.
    pub fn target_n(&self) -> usize {
        self.n
    }

    pub fn bag_count(&self) -> usize {
        self.bags.len()
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    /// Bag of node `id` (1-based).
    pub fn bag(&self, id: usize) -> &[usize] {
        &self.bags[id - 1]
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn node_tree(&self) -> Graph {
        Graph::new(self.bags.len(), self.edges.iter().copied()).expect("validated at construction")
    }

    pub fn rooted(&self, root: usize) -> Result<RootedTree> {
        RootedTree::new(&self.node_tree(), root)
    }

    /// Width-1 decomposition of a tree with one bag per edge (a single bag
    /// when the tree has one vertex).
    pub fn of_tree(tree: &Graph) -> Result<Self> {
        let rooted = RootedTree::new(tree, 1)?;
        let mut order = rooted.dfs_preorder().order().to_vec();
        order.reverse();
        from_elimination_order(tree, &order)
    }

    /// Largest bag size minus one.
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }

    pub fn is_path(&self) -> bool {
        self.node_tree().max_degree() <= 2
    }

    /// Renames every vertex in every bag through `f`.
    pub fn map_vertices<F: Fn(usize) -> usize>(&self, f: F) -> Self {
        let bags = self.bags.iter().map(|b| b.iter().map(|&v| f(v)).collect()).collect();
        Self::new(self.n, bags, self.edges.clone()).expect("relabeling preserves structure")
    }

    /// Returns `Ok` iff the decomposition is valid for `g`.
    pub fn check(&self, g: &Graph) -> Result<()> {
        let violations = validate_td(g, self);
        if violations.is_empty() {
            Ok(())
        } else {
            let shown: Vec<String> = violations.iter().take(5).map(|v| v.to_string()).collect();
            Err(Error::InvalidDecomposition(shown.join("; ")))
        }
    }
}

/// A failed decomposition property, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    SizeMismatch { graph_n: usize, decomposition_n: usize },
    /// Property (I): the vertex is in no bag.
    UncoveredVertex(usize),
    /// Property (II): no bag holds both endpoints.
    UncoveredEdge(usize, usize),
    /// Property (III): the nodes holding the vertex split into several
    /// subtrees; `nodes` lists them.
    Disconnected { vertex: usize, nodes: Vec<usize>, pieces: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SizeMismatch { graph_n, decomposition_n } => {
                write!(f, "graph has {graph_n} vertices, decomposition targets {decomposition_n}")
            }
            Violation::UncoveredVertex(v) => write!(f, "vertex {v} is in no bag"),
            Violation::UncoveredEdge(u, v) => write!(f, "edge {{{u}, {v}}} is in no bag"),
            Violation::Disconnected { vertex, nodes, pieces } => {
                write!(f, "nodes {nodes:?} holding vertex {vertex} form {pieces} pieces")
            }
        }
    }
}

/// Checks the three tree-decomposition properties and reports every
/// violation found. An empty result means `d` is a valid decomposition.
pub fn validate_td(g: &Graph, d: &TreeDecomposition) -> Vec<Violation> {
    if g.n() != d.n {
        return vec![Violation::SizeMismatch { graph_n: g.n(), decomposition_n: d.n }];
    }
    let n = g.n();
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, bag) in d.bags.iter().enumerate() {
        for &v in bag {
            holders[v - 1].push(i + 1);
        }
    }
    let mut out = Vec::new();
    for v in 1..=n {
        if holders[v - 1].is_empty() {
            out.push(Violation::UncoveredVertex(v));
        }
    }
    for &(u, v) in g.edges() {
        let hu = &holders[u - 1];
        if !hu.iter().any(|&i| d.bags[i - 1].binary_search(&v).is_ok()) {
            out.push(Violation::UncoveredEdge(u, v));
        }
    }
    // A node set of a tree is connected iff it induces |set| - 1 edges.
    let mut member = vec![false; d.bags.len() + 1];
    for v in 1..=n {
        let nodes = &holders[v - 1];
        if nodes.len() <= 1 {
            continue;
        }
        for &i in nodes {
            member[i] = true;
        }
        let inside = d.edges.iter().filter(|&&(a, b)| member[a] && member[b]).count();
        for &i in nodes {
            member[i] = false;
        }
        if inside + 1 != nodes.len() {
            out.push(Violation::Disconnected {
                vertex: v,
                nodes: nodes.clone(),
                pieces: nodes.len() - inside,
            });
        }
    }
    out
}

/// Decomposition induced by an elimination ordering: the bag of `v` is `v`
/// plus its later neighbors in the filled graph, hung below the earliest
/// eliminated of those neighbors. Components are chained through their last
/// bags.
pub fn from_elimination_order(g: &Graph, order: &[usize]) -> Result<TreeDecomposition> {
    let n = g.n();
    if order.len() != n {
        return Err(Error::SizeMismatch { expected: n, actual: order.len() });
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v == 0 || v > n || pos[v - 1] != usize::MAX {
            return Err(Error::NotAPermutation(format!("bad elimination order entry {v}")));
        }
        pos[v - 1] = i;
    }
    let mut nbrs: Vec<BTreeSet<usize>> =
        g.vertices().map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut bags = Vec::with_capacity(n);
    let mut edges = Vec::new();
    let mut roots = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let later: Vec<usize> = nbrs[v - 1].iter().copied().filter(|&w| pos[w - 1] > i).collect();
        for (a, &x) in later.iter().enumerate() {
            for &y in &later[a + 1..] {
                nbrs[x - 1].insert(y);
                nbrs[y - 1].insert(x);
            }
        }
        match later.iter().min_by_key(|&&w| pos[w - 1]) {
            Some(&p) => edges.push((i + 1, pos[p - 1] + 1)),
            None => roots.push(i + 1),
        }
        let mut bag = later;
        bag.push(v);
        bags.push(bag);
    }
    let last = *roots.last().expect("final vertex is always a root");
    for &r in &roots[..roots.len() - 1] {
        edges.push((r, last));
    }
    TreeDecomposition::new(n, bags, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_graph;

    #[test]
    fn path_decomposition_of_path() {
        let g = make_graph(3, &[(1, 2), (2, 3)]).unwrap();
        let d = TreeDecomposition::path(3, vec![vec![1, 2], vec![2, 3]]).unwrap();
        assert!(validate_td(&g, &d).is_empty());
        assert_eq!(d.width(), 1);
    }

    #[test]
    fn missing_edge_is_reported() {
        let g = make_graph(3, &[(1, 2), (2, 3)]).unwrap();
        let d = TreeDecomposition::path(3, vec![vec![1, 2], vec![3]]).unwrap();
        assert_eq!(validate_td(&g, &d), vec![Violation::UncoveredEdge(2, 3)]);
    }

    #[test]
    fn star_bags_on_a_path() {
        let g = make_graph(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        let d = TreeDecomposition::path(4, vec![vec![1, 2], vec![1, 3], vec![1, 4]]).unwrap();
        assert!(validate_td(&g, &d).is_empty());
        assert_eq!(d.width(), 1);
    }

    #[test]
    fn disconnected_occurrence_and_uncovered_vertex() {
        let g = make_graph(4, &[(1, 2), (2, 3)]).unwrap();
        let d = TreeDecomposition::path(4, vec![vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap();
        let v = validate_td(&g, &d);
        assert!(v.contains(&Violation::UncoveredVertex(4)));
        assert!(v.iter().any(|x| matches!(x, Violation::Disconnected { vertex: 1, pieces: 2, .. })));
    }

    #[test]
    fn node_tree_must_be_a_tree() {
        assert!(TreeDecomposition::new(2, vec![vec![1], vec![2]], vec![]).is_err());
        assert!(TreeDecomposition::new(2, vec![vec![1], vec![3]], vec![(1, 2)]).is_err());
        assert!(
            TreeDecomposition::new(3, vec![vec![1], vec![2], vec![3]], vec![(1, 2), (2, 3), (1, 3)])
                .is_err()
        );
    }

    #[test]
    fn elimination_order_decomposition_covers_forest() {
        let g = make_graph(6, &[(1, 2), (2, 3), (3, 1), (4, 5)]).unwrap();
        let d = from_elimination_order(&g, &[6, 1, 4, 2, 3, 5]).unwrap();
        assert!(validate_td(&g, &d).is_empty());
        assert_eq!(d.width(), 2);
    }
}
