use crate::error::{Error, Result};
use crate::graph::{glue, Graph, Layout};
use crate::pathwidth::{path_decomposition_from_layout, vs_of_layout};
use crate::perm::Permutation;
use crate::solver::Solver;

use super::{GluingKind, GluingResult};

/// Gluing that identifies the `p`-th vertex of `pi1` with the `p`-th vertex
/// of `pi2`. The layout `pi2` then has vertex separation at most
/// `vs(pi1) + vs(pi2)` on the glued graph, and its path decomposition is
/// the witness.
///
/// Missing layouts are computed with `solver`, which fails on graphs above
/// its size limit.
pub fn glue_via_layouts(
    g1: &Graph,
    g2: &Graph,
    pi1: Option<&Layout>,
    pi2: Option<&Layout>,
    solver: &Solver,
) -> Result<GluingResult> {
    if g1.n() != g2.n() {
        return Err(Error::SizeMismatch { expected: g1.n(), actual: g2.n() });
    }
    let pi1 = match pi1 {
        Some(p) => p.clone(),
        None => solver.pathwidth(g1)?.layout,
    };
    let pi2 = match pi2 {
        Some(p) => p.clone(),
        None => solver.pathwidth(g2)?.layout,
    };
    let vs1 = vs_of_layout(g1, &pi1)?;
    let vs2 = vs_of_layout(g2, &pi2)?;
    let images = g1.vertices().map(|v| pi2.at(pi1.position(v))).collect();
    let phi = Permutation::from_images(images)?;
    let glued = glue(g1, g2, &phi)?;
    let witness = path_decomposition_from_layout(&glued, &pi2)?;
    GluingResult { phi, glued, witness, claimed_bound: vs1 + vs2, kind: GluingKind::Layouts }.certified(g1, g2)
}
