//! Graph gluing along permutations.
//!
//! Two graphs on the same vertex set `1..=n` are glued along a permutation
//! `phi` by relabeling the first through `phi` and taking the edge union
//! with the second. This crate provides
//!
//! * the basic objects ([`Graph`], [`Permutation`], [`RootedTree`],
//!   [`Layout`], [`TreeDecomposition`]) and the PACE-style text formats;
//! * exact treewidth, pathwidth and vertex cover solvers for small graphs,
//!   a decomposition validator and a smoothing transformation;
//! * constructions that choose a permutation and return a validated
//!   decomposition of the glued graph within a proven width bound
//!   ([`construct`]);
//! * the cut-counting and balanced-tree machinery behind the lower bound for
//!   gluings of balanced binary and ternary trees ([`lab`]).

pub mod construct;
pub mod cover;
pub mod decomposition;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod lab;
pub mod pathwidth;
pub mod perm;
pub mod smooth;
pub mod solver;
pub mod tree;
pub mod treewidth;

/// Default vertex-count cap for the exact solvers.
pub const DEFAULT_SOLVER_LIMIT: usize = 20;

pub use construct::{GluingKind, GluingResult};
pub use decomposition::{validate_td, TreeDecomposition, Violation};
pub use error::{Error, Result};
pub use graph::{apply_permutation, glue, make_graph, Graph, Layout};
pub use pathwidth::{separation_profile, vs_of_layout, PathwidthResult};
pub use perm::Permutation;
pub use smooth::smoothify;
pub use solver::{exact_pathwidth, exact_treewidth, min_vertex_cover, Solver};
pub use tree::{classify_tree_kind, RootedTree, TreeClass, TreeKind};
pub use treewidth::TreewidthResult;
