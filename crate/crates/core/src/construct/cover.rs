use crate::decomposition::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::{glue, Graph};
use crate::perm::Permutation;

use super::{GluingKind, GluingResult};

/// Gluing of a graph with vertex cover `cover` and a graph with
/// decomposition `d2`, along any `phi`: adding `phi(cover)` to every bag of
/// `d2` decomposes the union, so the width is at most `|cover| + width(d2)`.
pub fn glue_via_cover(
    g1: &Graph,
    cover: &[usize],
    g2: &Graph,
    d2: &TreeDecomposition,
    phi: &Permutation,
) -> Result<GluingResult> {
    if let Some(&(a, b)) = g1.edges().iter().find(|(a, b)| !cover.contains(a) && !cover.contains(b)) {
        return Err(Error::NotACover(a, b));
    }
    if let Some(&v) = cover.iter().find(|&&v| !g1.contains(v)) {
        return Err(Error::LabelOutOfRange { label: v, n: g1.n() });
    }
    d2.check(g2)?;
    let glued = glue(g1, g2, phi)?;
    let extra: Vec<usize> = cover.iter().map(|&c| phi.apply(c)).collect();
    let bags = d2
        .bags()
        .iter()
        .map(|b| b.iter().chain(extra.iter()).copied().collect())
        .collect();
    let witness = TreeDecomposition::new(g2.n(), bags, d2.tree_edges().to_vec())?;
    let mut distinct = cover.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    GluingResult { phi: phi.clone(), glued, witness, claimed_bound: distinct.len() + d2.width(), kind: GluingKind::Cover }
        .certified(g1, g2)
}
