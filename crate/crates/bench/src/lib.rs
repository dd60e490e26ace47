//! Deterministic benchmark inputs.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twglue::generate::{partial_ktree, random_caterpillar, random_tree};
use twglue::lab::balanced_tree;
use twglue::{glue, Graph, Permutation, TreeDecomposition};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `glue(T_2(n), T_3(n), phi)` for a uniform `phi`.
pub fn balanced_gluing(n: usize, seed: u64) -> Graph {
    let phi = Permutation::random(n, &mut rng(seed));
    let t2 = balanced_tree(2, n).expect("valid size");
    let t3 = balanced_tree(3, n).expect("valid size");
    glue(t2.graph(), t3.graph(), &phi).expect("same size")
}

/// A partial 3-tree with its witness.
pub fn ktree(n: usize, seed: u64) -> (Graph, TreeDecomposition) {
    partial_ktree(n, 3, 0.7, &mut rng(seed)).expect("valid parameters")
}

/// A random tree and a random caterpillar on the same vertex count.
pub fn tree_and_caterpillar(n: usize, seed: u64) -> (Graph, Graph) {
    let mut r = rng(seed);
    (random_tree(n, &mut r), random_caterpillar(n, &mut r))
}
