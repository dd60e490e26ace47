//! Gluing constructions with certified width bounds.
//!
//! Each construction picks a permutation `phi`, forms the glued graph
//! `glue(g1, g2, phi)` and returns a tree decomposition of it whose width
//! is at most the bound the construction guarantees. The decomposition is
//! validated before it is returned.

use std::fmt;

use crate::decomposition::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::{glue, Graph};
use crate::perm::Permutation;

mod cover;
mod layouts;
mod path_tree;
mod tilt;
mod twpw;

pub use cover::glue_via_cover;
pub use layouts::glue_via_layouts;
pub use path_tree::{glue_path_tree, is_outerplanar, spine_crossings};
pub use tilt::{tilt, TiltTree};
pub use twpw::{glue_tw_pw, glue_tw_pw_traced, TwPwTrace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GluingKind {
    /// Cover of the first graph added to every bag of the second's decomposition.
    Cover,
    /// Both graphs relabeled along optimal layouts, glued along the identity.
    Layouts,
    /// Bounded treewidth with bounded pathwidth, through smooth decompositions and tilts.
    TwPw,
    /// A path laid along a DFS preordering of a tree.
    PathTree,
}

impl GluingKind {
    pub fn name(&self) -> &'static str {
        match self {
            GluingKind::Cover => "cover",
            GluingKind::Layouts => "layouts",
            GluingKind::TwPw => "tw-pw",
            GluingKind::PathTree => "path-tree",
        }
    }
}

impl fmt::Display for GluingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A gluing together with a width certificate.
#[derive(Clone, Debug)]
pub struct GluingResult {
    pub phi: Permutation,
    pub glued: Graph,
    pub witness: TreeDecomposition,
    pub claimed_bound: usize,
    pub kind: GluingKind,
}

impl GluingResult {
    /// Checks `glued = glue(g1, g2, phi)`, witness validity, and the bound.
    pub fn verify(&self, g1: &Graph, g2: &Graph) -> Result<()> {
        if glue(g1, g2, &self.phi)? != self.glued {
            return Err(Error::Invariant("glued graph differs from glue(g1, g2, phi)".into()));
        }
        self.witness.check(&self.glued)?;
        if self.witness.width() > self.claimed_bound {
            return Err(Error::Invariant(format!(
                "witness width {} exceeds bound {}",
                self.witness.width(),
                self.claimed_bound
            )));
        }
        Ok(())
    }

    fn certified(self, g1: &Graph, g2: &Graph) -> Result<Self> {
        self.verify(g1, g2)?;
        Ok(self)
    }
}
