use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pathwidth::{self, PathwidthResult};
use crate::treewidth::{self, TreewidthResult};
use crate::{cover, DEFAULT_SOLVER_LIMIT};

/// Largest size the bitset solvers can represent at all.
pub const MAX_SOLVER_LIMIT: usize = 64;

/// Entry point for the exponential exact solvers, with a size cap that
/// rejects instances up front instead of running for hours.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Solver {
    limit: usize,
}

impl Default for Solver {
    fn default() -> Self {
        Solver { limit: DEFAULT_SOLVER_LIMIT }
    }
}

impl Solver {
    pub fn with_limit(limit: usize) -> Result<Self> {
        if limit == 0 || limit > MAX_SOLVER_LIMIT {
            return Err(Error::InvalidParams(format!(
                "solver limit must be in 1..={MAX_SOLVER_LIMIT}, got {limit}"
            )));
        }
        Ok(Solver { limit })
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    pub fn admits(&self, g: &Graph) -> bool {
        g.n() <= self.limit
    }

    fn guard(&self, g: &Graph) -> Result<()> {
        if self.admits(g) {
            Ok(())
        } else {
            Err(Error::SolverLimitExceeded { n: g.n(), limit: self.limit })
        }
    }

    pub fn treewidth(&self, g: &Graph) -> Result<TreewidthResult> {
        self.guard(g)?;
        Ok(treewidth::treewidth(g))
    }

    /// Treewidth without a witness; cheaper when only the number matters.
    pub fn treewidth_value(&self, g: &Graph) -> Result<usize> {
        self.guard(g)?;
        Ok(treewidth::treewidth_value(g))
    }

    pub fn pathwidth(&self, g: &Graph) -> Result<PathwidthResult> {
        self.guard(g)?;
        Ok(pathwidth::pathwidth(g))
    }

    pub fn vertex_cover(&self, g: &Graph) -> Result<Vec<usize>> {
        self.guard(g)?;
        Ok(cover::min_vertex_cover(g))
    }
}

/// Exact treewidth with the default size limit.
pub fn exact_treewidth(g: &Graph) -> Result<TreewidthResult> {
    Solver::default().treewidth(g)
}

/// Exact pathwidth (minimum vertex separation) with the default size limit.
pub fn exact_pathwidth(g: &Graph) -> Result<PathwidthResult> {
    Solver::default().pathwidth(g)
}

/// Lexicographically smallest minimum vertex cover, default size limit.
pub fn min_vertex_cover(g: &Graph) -> Result<Vec<usize>> {
    Solver::default().vertex_cover(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::path;

    #[test]
    fn limit_is_enforced() {
        let g = path(21);
        assert_eq!(
            exact_treewidth(&g).unwrap_err(),
            Error::SolverLimitExceeded { n: 21, limit: 20 }
        );
        assert!(exact_pathwidth(&g).is_err());
        assert!(min_vertex_cover(&g).is_err());
        let wide = Solver::with_limit(30).unwrap();
        assert_eq!(wide.treewidth(&g).unwrap().width, 1);
        assert!(Solver::with_limit(65).is_err());
        assert!(Solver::with_limit(0).is_err());
    }
}
