//! Undirected simple graphs on the vertex set `1..=n`, linear layouts, and
//! the gluing operation.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// An undirected simple graph on the labels `1..=n`.
///
/// Edges are stored normalized as `(u, v)` with `u < v`, sorted and
/// deduplicated. Graphs are immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, normalizing orientation and
    /// dropping duplicates.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x == 0 || x > n {
                    return Err(Error::LabelOutOfRange { label: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Self::from_normalized(n, set.into_iter().collect()))
    }

    fn from_normalized(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u - 1].push(v);
            adj[v - 1].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn edgeless(n: usize) -> Result<Self> {
        Self::new(n, std::iter::empty())
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::new(n, (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))))
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Normalized edges, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u >= 1 && u <= self.n && self.adj[u - 1].binary_search(&v).is_ok()
    }

    pub fn contains(&self, v: usize) -> bool {
        v >= 1 && v <= self.n
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n + 1];
        let mut out = Vec::new();
        for s in 1..=self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.n && self.is_connected()
    }

    /// The graph `([n], phi(E))`.
    pub fn relabel(&self, phi: &Permutation) -> Result<Graph> {
        if phi.len() != self.n {
            return Err(Error::SizeMismatch { expected: self.n, actual: phi.len() });
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (phi.apply(u), phi.apply(v))))
    }

    /// Edge union of two graphs on the same vertex set.
    pub fn union(&self, other: &Graph) -> Result<Graph> {
        if other.n != self.n {
            return Err(Error::SizeMismatch { expected: self.n, actual: other.n });
        }
        let mut edges: Vec<_> = self.edges.iter().chain(other.edges.iter()).copied().collect();
        edges.sort_unstable();
        edges.dedup();
        Ok(Self::from_normalized(self.n, edges))
    }

    /// Adjacency as bitmasks, bit `v-1` standing for vertex `v`.
    ///
    /// Only defined for `n <= 64`; callers enforce the limit.
    pub(crate) fn masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask adjacency needs n <= 64");
        self.adj
            .iter()
            .map(|list| list.iter().fold(0u64, |m, &w| m | 1 << (w - 1)))
            .collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, ", self.n)?;
        f.debug_list().entries(self.edges.iter().map(|(u, v)| format!("{u}-{v}"))).finish()?;
        write!(f, ")")
    }
}

/// Builds a graph, rejecting out-of-range labels and self-loops.
pub fn make_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::new(n, edges.iter().copied())
}

/// Renames the vertices of `g` according to `phi`.
pub fn apply_permutation(g: &Graph, phi: &Permutation) -> Result<Graph> {
    g.relabel(phi)
}

/// The union of `g1` and `g2` along `phi`: `([n], phi(E1) ∪ E2)`.
pub fn glue(g1: &Graph, g2: &Graph, phi: &Permutation) -> Result<Graph> {
    if g1.n() != g2.n() {
        return Err(Error::SizeMismatch { expected: g2.n(), actual: g1.n() });
    }
    g1.relabel(phi)?.union(g2)
}

/// A linear ordering of the vertices `1..=n`.
///
/// `order()[p]` is the vertex at position `p + 1`; positions are 1-based
/// to match vertex labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Layout {
    order: Vec<usize>,
    pos: Vec<usize>,
}

impl Layout {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::LabelOutOfRange { label: v, n });
            }
            if pos[v - 1] != 0 {
                return Err(Error::NotAPermutation(format!("vertex {v} appears twice in layout")));
            }
            pos[v - 1] = i + 1;
        }
        Ok(Layout { order, pos })
    }

    pub fn identity(n: usize) -> Self {
        Layout { order: (1..=n).collect(), pos: (1..=n).collect() }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// 1-based position of vertex `v`.
    pub fn position(&self, v: usize) -> usize {
        self.pos[v - 1]
    }

    /// The vertex at 1-based position `p`.
    pub fn at(&self, p: usize) -> usize {
        self.order[p - 1]
    }

    /// The relabeling sending each vertex to its position.
    pub fn to_position_permutation(&self) -> Permutation {
        Permutation::from_images_unchecked(self.pos.clone())
    }
}
