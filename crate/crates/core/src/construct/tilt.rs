use crate::error::{Error, Result};
use crate::graph::{Graph, Layout};
use crate::tree::RootedTree;

/// The tilt of a rooted tree about one of its DFS preorderings: every child
/// that is not the first of its siblings (in preorder) is reattached to the
/// sibling just before it.
#[derive(Clone, Debug)]
pub struct TiltTree {
    pub tree: RootedTree,
    pub source: RootedTree,
    pub sigma: Layout,
}

/// Tilts `t` about `sigma`, then checks the three structural properties:
/// maximum degree at most 3, each vertex with its children spans a path, and
/// `sigma` is still a DFS preorder.
pub fn tilt(t: &RootedTree, sigma: &Layout) -> Result<TiltTree> {
    if !t.is_dfs_preorder(sigma) {
        return Err(Error::NotDfsPreorder(format!("{:?} is not a DFS preorder from the root", sigma.order())));
    }
    let source = t.reordered(|v| sigma.position(v));
    let n = source.n();
    let mut children = vec![Vec::new(); n];
    for v in 1..=n {
        let kids = source.children(v);
        if let Some(&first) = kids.first() {
            children[v - 1].push(first);
        }
        for pair in kids.windows(2) {
            children[pair[0] - 1].push(pair[1]);
        }
    }
    for list in &mut children {
        list.sort_by_key(|&c| sigma.position(c));
    }
    let tree = RootedTree::from_children(source.root(), children)?;

    let g = tree.underlying();
    if g.max_degree() > 3 {
        return Err(Error::Invariant(format!("tilt has a vertex of degree {}", g.max_degree())));
    }
    for v in 1..=n {
        let mut span: Vec<usize> = source.children(v).to_vec();
        span.push(v);
        if !induces_path(g, &span) {
            return Err(Error::Invariant(format!("children of {v} do not induce a path in the tilt")));
        }
    }
    if tree.dfs_preorder() != *sigma {
        return Err(Error::Invariant("sigma is not a DFS preorder of the tilt".into()));
    }
    Ok(TiltTree { tree, source, sigma: sigma.clone() })
}

fn induces_path(g: &Graph, vs: &[usize]) -> bool {
    let inside = |x: usize| vs.contains(&x);
    let degs: Vec<usize> = vs.iter().map(|&v| g.neighbors(v).iter().filter(|&&x| inside(x)).count()).collect();
    let edges: usize = degs.iter().sum::<usize>() / 2;
    // a forest with |vs| - 1 edges and max degree 2 is a path
    edges + 1 == vs.len() && degs.iter().all(|&d| d <= 2)
}

/// Vertices on the tree path from `u` to `v`, both ends included.
pub(crate) fn tree_path(t: &RootedTree, mut u: usize, mut v: usize) -> Vec<usize> {
    let mut front = Vec::new();
    let mut back = Vec::new();
    while t.level(u) > t.level(v) {
        front.push(u);
        u = t.parent(u).expect("deeper vertex has a parent");
    }
    while t.level(v) > t.level(u) {
        back.push(v);
        v = t.parent(v).expect("deeper vertex has a parent");
    }
    while u != v {
        front.push(u);
        back.push(v);
        u = t.parent(u).expect("not yet at the root");
        v = t.parent(v).expect("not yet at the root");
    }
    front.push(u);
    front.extend(back.into_iter().rev());
    front
}
