//! Machinery behind the lower bound for gluings of balanced binary and
//! ternary trees: balanced trees, cut counting, similarity classes, b-adic
//! rationals, the gap lemma, and an experimental probe over permutations.

mod badic;
mod balanced;
mod cuts;
mod gap;
mod probe;

pub use badic::{badic_distance, in_ball, BAdicSet, BadicReport};
pub use balanced::{balanced_tree, is_balanced, subtree_profile, BalancedBuilder, BalancedTree, ProfileEntry, TieBreak};
pub use cuts::{
    balanced_band, balanced_cut_scan, crossing_edges, cut_size_formula, layer_profile, similarity_mu, Cut,
    ScanMode, ScanResult, EXHAUSTIVE_SCAN_LIMIT,
};
pub use gap::{big_gap, check_cut_ratio_estimate, gap_windows, EstimateCheck, GapWindows};
pub use probe::{derive_seed, impossibility_probe, ProbeConfig, ProbeReport, TryRecord};
