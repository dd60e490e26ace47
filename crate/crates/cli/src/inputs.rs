//! Width certificates for input graphs, preferring linear-time ones.

use anyhow::Result;
use twglue::pathwidth::caterpillar_layout;
use twglue::{classify_tree_kind, Graph, Layout, Solver, TreeDecomposition};

/// Optimal decomposition: one bag per edge for forests that are trees,
/// the exact solver otherwise.
pub fn decomposition_for(g: &Graph, solver: &Solver) -> Result<TreeDecomposition> {
    if g.is_tree() {
        return Ok(TreeDecomposition::of_tree(g)?);
    }
    Ok(solver.treewidth(g)?.decomposition)
}

/// Optimal layout: spine order for caterpillars, the exact solver otherwise.
pub fn layout_for(g: &Graph, solver: &Solver) -> Result<Layout> {
    if classify_tree_kind(g).caterpillar {
        return Ok(caterpillar_layout(g)?);
    }
    Ok(solver.pathwidth(g)?.layout)
}
