//! Generators for the graph families used in experiments.

use rand::Rng;

use crate::decomposition::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Permutation;

/// `K_{1,n-1}` centered at vertex 1.
pub fn star(n: usize) -> Graph {
    Graph::new(n.max(1), (2..=n).map(|v| (1, v))).expect("valid star")
}

/// The path `1 - 2 - ... - n`.
pub fn path(n: usize) -> Graph {
    Graph::new(n.max(1), (1..n).map(|v| (v, v + 1))).expect("valid path")
}

/// Caterpillar with spine `1 - ... - s` (`s = leaves.len()`), where spine
/// vertex `i` carries `leaves[i - 1]` pendant vertices. Leaves are numbered
/// after the spine, in spine order.
pub fn caterpillar(leaves: &[usize]) -> Result<Graph> {
    if leaves.is_empty() {
        return Err(Error::InvalidParams("caterpillar needs a non-empty spine".into()));
    }
    let s = leaves.len();
    let n = s + leaves.iter().sum::<usize>();
    let mut edges: Vec<(usize, usize)> = (1..s).map(|v| (v, v + 1)).collect();
    let mut next = s + 1;
    for (i, &c) in leaves.iter().enumerate() {
        for _ in 0..c {
            edges.push((i + 1, next));
            next += 1;
        }
    }
    Graph::new(n, edges)
}

/// Uniformly random labeled tree, decoded from a uniform Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    if n <= 2 {
        return path(n);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(1..=n)).collect();
    prufer_decode(n, &seq).expect("sequence entries are in range")
}

/// Decodes a Prüfer sequence of length `n - 2` over `1..=n`.
pub fn prufer_decode(n: usize, seq: &[usize]) -> Result<Graph> {
    if n < 2 || seq.len() != n - 2 {
        return Err(Error::InvalidParams(format!("Prüfer sequence for n={n} must have length n-2")));
    }
    if let Some(&x) = seq.iter().find(|&&x| x == 0 || x > n) {
        return Err(Error::LabelOutOfRange { label: x, n });
    }
    let mut degree = vec![1usize; n + 1];
    for &x in seq {
        degree[x] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> = (1..=n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = leaves.pop_first().expect("a leaf always exists");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let a = leaves.pop_first().expect("two vertices remain");
    let b = leaves.pop_first().expect("two vertices remain");
    edges.push((a, b));
    Graph::new(n, edges)
}

/// Random caterpillar on `n` vertices with uniformly random labels: spine
/// length uniform in `1..=n`, leaves dropped on uniformly chosen spine
/// vertices.
pub fn random_caterpillar<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let s = rng.gen_range(1..=n);
    let mut leaves = vec![0; s];
    for _ in 0..n - s {
        leaves[rng.gen_range(0..s)] += 1;
    }
    let g = caterpillar(&leaves).expect("non-empty spine");
    g.relabel(&Permutation::random(n, rng)).expect("same size")
}

/// A random partial k-tree with its width-k witness.
///
/// A k-tree is grown by attaching each new vertex to a random k-clique of an
/// existing bag; every edge is then kept independently with probability
/// `keep`. Labels are shuffled uniformly.
pub fn partial_ktree<R: Rng + ?Sized>(
    n: usize,
    k: usize,
    keep: f64,
    rng: &mut R,
) -> Result<(Graph, TreeDecomposition)> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if !(0.0..=1.0).contains(&keep) {
        return Err(Error::InvalidParams(format!("edge retention probability {keep} not in [0, 1]")));
    }
    let base = (k + 1).min(n);
    let mut bags: Vec<Vec<usize>> = vec![(1..=base).collect()];
    let mut tree_edges = Vec::new();
    let mut edges: Vec<(usize, usize)> =
        (1..=base).flat_map(|u| (u + 1..=base).map(move |v| (u, v))).collect();
    for v in base + 1..=n {
        let host = rng.gen_range(0..bags.len());
        let mut clique = bags[host].clone();
        clique.remove(rng.gen_range(0..clique.len()));
        edges.extend(clique.iter().map(|&u| (u, v)));
        clique.push(v);
        bags.push(clique);
        tree_edges.push((host + 1, bags.len()));
    }
    edges.retain(|_| rng.gen_bool(keep));
    let relabel = Permutation::random(n, rng);
    let graph = Graph::new(n, edges)?.relabel(&relabel)?;
    let decomposition = TreeDecomposition::new(n, bags, tree_edges)?.map_vertices(|v| relabel.apply(v));
    Ok((graph, decomposition))
}

/// Parameterized family request.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Star,
    Path,
    /// Explicit per-spine-vertex leaf counts; the spine length is the list length.
    Caterpillar { leaves: Vec<usize> },
    RandomCaterpillar,
    RandomTree,
    PartialKTree { k: usize, keep: f64 },
}

/// A generated graph, with a width witness when the family provides one.
#[derive(Clone, Debug)]
pub struct Generated {
    pub graph: Graph,
    pub decomposition: Option<TreeDecomposition>,
}

pub fn generate_family<R: Rng + ?Sized>(family: &Family, n: usize, rng: &mut R) -> Result<Generated> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let graph = match family {
        Family::Star => star(n),
        Family::Path => path(n),
        Family::Caterpillar { leaves } => {
            let total = leaves.len() + leaves.iter().sum::<usize>();
            if total != n {
                return Err(Error::InvalidParams(format!(
                    "spine of {} plus {} leaves is {total}, not n={n}",
                    leaves.len(),
                    total - leaves.len()
                )));
            }
            caterpillar(leaves)?
        }
        Family::RandomCaterpillar => random_caterpillar(n, rng),
        Family::RandomTree => random_tree(n, rng),
        Family::PartialKTree { k, keep } => {
            let (graph, d) = partial_ktree(n, *k, *keep, rng)?;
            return Ok(Generated { graph, decomposition: Some(d) });
        }
    };
    Ok(Generated { graph, decomposition: None })
}

/// Shuffles labels uniformly.
pub fn shuffle_labels<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Graph {
    g.relabel(&Permutation::random(g.n(), rng)).expect("same size")
}

/// Random graph with independent edge probability `p`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("valid labels")
}

/// Random graph in which each vertex `v` is joined to each of
/// `v - 1, ..., v - band` with probability `p`. The identity layout has
/// vertex separation at most `band`.
pub fn random_banded<R: Rng + ?Sized>(n: usize, band: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for v in 2..=n {
        for u in v.saturating_sub(band).max(1)..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n.max(1), edges).expect("valid labels")
}

/// Permutation `phi` with `glue(path(s*s), path(s*s), phi)` equal to the
/// `s x s` grid: the path is read as a row-by-row snake through the grid and
/// `phi` maps it onto the column-by-column snake.
pub fn snake_grid_permutation(s: usize) -> Permutation {
    let label = |r: usize, c: usize| r * s + if r.is_multiple_of(2) { c } else { s - 1 - c } + 1;
    let images = (0..s * s)
        .map(|i| {
            let (c, t) = (i / s, i % s);
            let r = if c % 2 == 0 { t } else { s - 1 - t };
            label(r, c)
        })
        .collect();
    Permutation::from_images_unchecked(images)
}
