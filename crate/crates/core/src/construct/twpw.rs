use std::collections::BTreeSet;

use crate::decomposition::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::{glue, Graph, Layout};
use crate::pathwidth::{separation_profile, vs_of_layout};
use crate::perm::Permutation;
use crate::smooth::smoothify;
use crate::solver::Solver;

use super::tilt::{tilt, tree_path};
use super::{GluingKind, GluingResult};

/// Quantities observed while running [`glue_tw_pw_traced`]. Every check
/// listed here has already passed when the trace is returned.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwPwTrace {
    /// Width of the decomposition of the first graph.
    pub k: usize,
    /// Vertex separation of the layout of the second graph.
    pub ell: usize,
    /// Nodes of the smooth decomposition (always `n - k`).
    pub smooth_nodes: usize,
    pub tilt_max_degree: usize,
    /// Number of consecutive pairs checked for `S(v + 1) ⊆ {v} ∪ S(v)`.
    pub nesting_checks: usize,
    /// Width of the tilted decomposition of the relabeled first graph (at most `k + 1`).
    pub tilted_width: usize,
    /// Number of leading bags prefilled with `1..=k + r`.
    pub prefilled: usize,
    /// Largest number of times a single bag received new separator vertices (at most 3).
    pub max_extensions: usize,
    pub final_width: usize,
}

/// Glues a graph of treewidth `k` with a graph of vertex separation `ell`
/// into a graph of treewidth at most `k + 3 ell + 1`.
///
/// `d1` is a width-`k` decomposition of `g1` and `pi2` a layout of `g2`;
/// either is computed exactly with `solver` when absent.
pub fn glue_tw_pw(
    g1: &Graph,
    g2: &Graph,
    d1: Option<&TreeDecomposition>,
    pi2: Option<&Layout>,
    solver: &Solver,
) -> Result<GluingResult> {
    glue_tw_pw_traced(g1, g2, d1, pi2, solver).map(|(r, _)| r)
}

pub fn glue_tw_pw_traced(
    g1: &Graph,
    g2: &Graph,
    d1: Option<&TreeDecomposition>,
    pi2: Option<&Layout>,
    solver: &Solver,
) -> Result<(GluingResult, TwPwTrace)> {
    let n = g1.n();
    if g2.n() != n {
        return Err(Error::SizeMismatch { expected: n, actual: g2.n() });
    }
    let d1 = match d1 {
        Some(d) => {
            d.check(g1)?;
            d.clone()
        }
        None => solver.treewidth(g1)?.decomposition,
    };
    let pi2 = match pi2 {
        Some(p) => p.clone(),
        None => solver.pathwidth(g2)?.layout,
    };
    let k = d1.width();
    let ell = vs_of_layout(g2, &pi2)?;
    let bound = k + 3 * ell + 1;
    let mut trace = TwPwTrace { k, ell, ..TwPwTrace::default() };

    if n <= k + 1 {
        let phi = Permutation::identity(n);
        let glued = glue(g1, g2, &phi)?;
        let witness = TreeDecomposition::trivial(n);
        trace.smooth_nodes = 1;
        trace.final_width = witness.width();
        let r = GluingResult { phi, glued, witness, claimed_bound: bound, kind: GluingKind::TwPw };
        return Ok((r.certified(g1, g2)?, trace));
    }

    // Smooth decomposition, rooted at node 1, nodes a_1..a_m in DFS preorder.
    let smooth = smoothify(g1, &d1)?;
    let m = smooth.bag_count();
    if m != n - k {
        return Err(Error::Invariant(format!("smooth decomposition has {m} nodes, expected {}", n - k)));
    }
    trace.smooth_nodes = m;
    let rooted = smooth.rooted(1)?;
    let sigma = rooted.dfs_preorder();
    let a = sigma.order();

    // relabel1: the first bag gets 1..=k+1, the vertex introduced at a_i gets k+i.
    let mut relabel1 = vec![0usize; n];
    for (j, &v) in smooth.bag(a[0]).iter().enumerate() {
        relabel1[v - 1] = j + 1;
    }
    for (i, &node) in a.iter().enumerate().skip(1) {
        let parent = rooted.parent(node).expect("non-root node");
        let fresh: Vec<usize> =
            smooth.bag(node).iter().copied().filter(|v| !smooth.bag(parent).contains(v)).collect();
        if fresh.len() != 1 || relabel1[fresh[0] - 1] != 0 {
            return Err(Error::Invariant(format!("node {node} does not introduce exactly one new vertex")));
        }
        relabel1[fresh[0] - 1] = k + i + 1;
    }
    let relabel1 = Permutation::from_images(relabel1)?;
    // relabel2: position in pi2.
    let relabel2 = pi2.to_position_permutation();
    let g1r = g1.relabel(&relabel1)?;
    let g2r = g2.relabel(&relabel2)?;

    let profile = separation_profile(&g2r, &Layout::identity(n))?;
    for v in 1..n {
        let (now, next) = (&profile[v - 1], &profile[v]);
        if !next.iter().all(|w| *w == v || now.contains(w)) {
            return Err(Error::Invariant(format!("S({}) is not inside {{{v}}} ∪ S({v})", v + 1)));
        }
        trace.nesting_checks += 1;
    }

    // Tilted decomposition: Z_{a_1} = X_{a_1}, Z_{a_i} = X_{a_i} ∪ X_{p_i}.
    let tilted = tilt(&rooted, &sigma)?;
    trace.tilt_max_degree = tilted.tree.underlying().max_degree();
    let relabeled = smooth.map_vertices(|v| relabel1.apply(v));
    let mut bags: Vec<BTreeSet<usize>> = (1..=m)
        .map(|node| {
            let mut z: BTreeSet<usize> = relabeled.bag(node).iter().copied().collect();
            if let Some(p) = rooted.parent(node) {
                z.extend(relabeled.bag(p).iter().copied());
            }
            z
        })
        .collect();
    let tree_edges = tilted.tree.oriented_edges();
    let as_td = |bags: &[BTreeSet<usize>]| {
        TreeDecomposition::new(n, bags.iter().map(|b| b.iter().copied().collect()).collect(), tree_edges.clone())
    };
    let tilted_td = as_td(&bags)?;
    tilted_td.check(&g1r)?;
    if tilted_td.width() > k + 1 {
        return Err(Error::Invariant(format!("tilted decomposition has width {} > k + 1", tilted_td.width())));
    }
    trace.tilted_width = tilted_td.width();

    if ell > 0 {
        let r = if k + 1 < ell { ell - k } else { 1 };
        for &node in &a[..r] {
            bags[node - 1].extend(1..=k + r);
        }
        trace.prefilled = r;
        let mut extensions = vec![0usize; m];
        for i in r..m {
            let additions = &profile[k + i];
            for node in tree_path(&tilted.tree, a[i - 1], a[i]).into_iter().skip(1) {
                extensions[node - 1] += 1;
                bags[node - 1].extend(additions.iter().copied());
            }
        }
        trace.max_extensions = extensions.into_iter().max().unwrap_or(0);
        if trace.max_extensions > 3 {
            return Err(Error::Invariant(format!("a bag was extended {} times", trace.max_extensions)));
        }
    }

    let back = relabel2.inverse();
    let witness = as_td(&bags)?.map_vertices(|v| back.apply(v));
    trace.final_width = witness.width();
    if trace.final_width > k + 1 + 3 * ell {
        return Err(Error::Invariant(format!("final width {} exceeds k + 1 + 3 ell", trace.final_width)));
    }
    let phi = back.compose(&relabel1)?;
    let glued = glue(g1, g2, &phi)?;
    let r = GluingResult { phi, glued, witness, claimed_bound: bound, kind: GluingKind::TwPw };
    Ok((r.certified(g1, g2)?, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pathwidth::caterpillar_layout;
    use crate::generate::{partial_ktree, path, random_banded, random_caterpillar, random_tree};
    use crate::solver::exact_treewidth;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn tree_and_caterpillar() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let t = random_tree(30, &mut rng);
        let c = random_caterpillar(30, &mut rng);
        let pi = caterpillar_layout(&c).unwrap();
        assert_eq!(vs_of_layout(&c, &pi).unwrap(), 1);
        let (r, trace) =
            glue_tw_pw_traced(&t, &c, Some(&TreeDecomposition::of_tree(&t).unwrap()), Some(&pi), &Solver::default()).unwrap();
        assert_eq!(r.claimed_bound, 5);
        assert!(r.witness.width() <= 5);
        assert_eq!(trace.smooth_nodes, 29);
        assert!(trace.tilt_max_degree <= 3);
        assert!(trace.tilted_width <= 2);
        assert!(trace.max_extensions <= 3);
    }

    #[test]
    fn clique_with_edgeless() {
        let k3 = Graph::complete(3).unwrap();
        let empty = Graph::edgeless(3).unwrap();
        let r = glue_tw_pw(&k3, &empty, None, None, &Solver::default()).unwrap();
        assert_eq!(r.glued, k3);
        assert!(r.witness.width() <= 2);
        assert_eq!(r.claimed_bound, 3);
    }

    #[test]
    fn partial_two_tree_with_path() {
        let mut rng = ChaCha8Rng::seed_from_u64(16);
        let (g1, d1) = partial_ktree(16, 2, 0.8, &mut rng).unwrap();
        let r = glue_tw_pw(&g1, &path(16), Some(&d1), None, &Solver::default()).unwrap();
        assert!(r.witness.width() <= 6);
        assert!(exact_treewidth(&r.glued).unwrap().width <= r.witness.width());
    }

    #[test]
    fn solver_fills_in_missing_witnesses() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let g1 = random_tree(12, &mut rng);
        let g2 = random_banded(12, 2, 0.7, &mut rng);
        let (r, trace) = glue_tw_pw_traced(&g1, &g2, None, None, &Solver::default()).unwrap();
        assert_eq!(trace.k, 1);
        assert!(r.witness.width() <= 1 + 3 * trace.ell + 1);
    }

    #[test]
    fn large_ell_prefills() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let g1 = random_tree(20, &mut rng);
        let g2 = random_banded(20, 5, 0.9, &mut rng);
        let pi = Layout::identity(20);
        let (_, trace) =
            glue_tw_pw_traced(&g1, &g2, Some(&TreeDecomposition::of_tree(&g1).unwrap()), Some(&pi), &Solver::default()).unwrap();
        assert!(trace.ell >= 3);
        assert_eq!(trace.prefilled, trace.ell - 1);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn bound_holds(n in 2usize..40, k in 1usize..4, band in 0usize..4, seed: u64) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let k = k.min(n - 1);
            let (g1, d1) = partial_ktree(n, k, 0.7, &mut rng).unwrap();
            let g2 = random_banded(n, band, 0.6, &mut rng);
            let pi = Layout::identity(n);
            let (r, trace) = glue_tw_pw_traced(&g1, &g2, Some(&d1), Some(&pi), &Solver::default()).unwrap();
            prop_assert!(r.witness.width() <= trace.k + 3 * trace.ell + 1);
            prop_assert!(trace.max_extensions <= 3);
        }
    }
}
