mod common;

use std::collections::BTreeSet;

use num_rational::Rational64;
use num_traits::Signed;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twglue::generate::random_tree;
use twglue::lab::{
    badic_distance, balanced_cut_scan, balanced_tree, cut_size_formula, is_balanced, layer_profile, similarity_mu,
    subtree_profile, Cut, ScanMode,
};
use twglue::{exact_treewidth, glue, Permutation, RootedTree};

#[test]
fn balanced_trees_up_to_500() {
    for b in [2, 3] {
        for n in 1..=500 {
            let t = balanced_tree(b, n).unwrap();
            assert!(is_balanced(&t.tree, b), "b={b} n={n}");
        }
    }
}

#[test]
fn beta_within_one() {
    for b in [2, 3] {
        for n in (1..=2000).step_by(7).chain([2000]) {
            let t = balanced_tree(b, n).unwrap();
            let worst = subtree_profile(&t).into_iter().map(|e| e.beta.abs()).max().unwrap();
            assert!(worst <= Rational64::from_integer(1), "b={b} n={n}");
        }
    }
}

#[test]
fn badic_bound_for_all_small_exponents() {
    for i in 0..=8 {
        for j in 0..=8 {
            let r = badic_distance(i, j);
            assert!(r.disjoint && r.holds, "i={i} j={j}");
        }
    }
}

#[test]
fn formula_on_twenty_random_trees() {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for i in 0..20 {
        let n = 1 + i % 10;
        let t = RootedTree::new(&random_tree(n, &mut rng), 1 + i % n).unwrap();
        for mask in 0..1u64 << n {
            let u = Cut::from_mask(n, mask);
            assert_eq!(cut_size_formula(&t, &u).unwrap(), u.len() as i64);
        }
    }
}

fn tree_gluing(n: usize, seed: u64) -> (twglue::Graph, Permutation) {
    let phi = Permutation::random(n, &mut ChaCha8Rng::seed_from_u64(seed));
    let t2 = balanced_tree(2, n).unwrap();
    let t3 = balanced_tree(3, n).unwrap();
    (glue(t2.graph(), t3.graph(), &phi).unwrap(), phi)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn sandwich_on_every_cut(n in 2usize..=12, seed: u64) {
        let (g, _) = tree_gluing(n, seed);
        prop_assert!(g.max_degree() <= 7);
        for mask in 1..(1u64 << n) - 1 {
            let u = Cut::from_mask(n, mask);
            let e = g.edges().iter().filter(|&&(a, b)| u.contains(a) != u.contains(b)).count();
            let mu = similarity_mu(&g, &u).unwrap();
            prop_assert!(e <= 49 * mu && mu <= e + 1);
        }
    }

    #[test]
    fn mu_matches_direct_count(n in 2usize..=12, seed: u64, mask: u64) {
        let (g, _) = tree_gluing(n, seed);
        let u = Cut::from_mask(n, mask & ((1 << n) - 1));
        let inside: Vec<bool> = (1..=n).map(|v| u.contains(v)).collect();
        prop_assert_eq!(similarity_mu(&g, &u).unwrap(), common::mu_direct(&g, &inside));
    }

    #[test]
    fn mu_below_treewidth_bound(n in 3usize..=14, seed: u64) {
        let (g, _) = tree_gluing(n, seed);
        let tw = exact_treewidth(&g).unwrap().width as u32;
        let mu = balanced_cut_scan(&g, ScanMode::Exhaustive, true).unwrap().min_mu.unwrap();
        prop_assert!(mu <= 3 * 2usize.pow(tw.saturating_sub(1)));
    }

    #[test]
    fn layer_profile_is_small(n in 4usize..=14, seed: u64, mask: u64) {
        let t2 = balanced_tree(2, n).unwrap();
        let t3 = balanced_tree(3, n).unwrap();
        let (g, phi) = tree_gluing(n, seed);
        let u = Cut::from_mask(n, mask & ((1 << n) - 1));
        let r = layer_profile(&t2.tree, &t3.tree, &phi, &u).unwrap();
        let e = g.edges().iter().filter(|&&(a, b)| u.contains(a) != u.contains(b)).count();
        prop_assert!(r.len() <= 2 * e);
        prop_assert!(r.iter().all(|&l| l >= 1));
    }
}

#[test]
fn exhaustive_scan_matches_naive_minimum() {
    for seed in 0..5 {
        let (g, _) = tree_gluing(11, seed);
        let scan = balanced_cut_scan(&g, ScanMode::Exhaustive, true).unwrap();
        let mut best_e = usize::MAX;
        let mut best_mu = usize::MAX;
        for mask in 0..1u64 << 11 {
            let u = Cut::from_mask(11, mask);
            if !u.is_balanced() {
                continue;
            }
            best_e = best_e.min(g.edges().iter().filter(|&&(a, b)| u.contains(a) != u.contains(b)).count());
            let inside: Vec<bool> = (1..=11).map(|v| u.contains(v)).collect();
            best_mu = best_mu.min(common::mu_direct(&g, &inside));
        }
        assert_eq!(scan.min_e, best_e);
        assert_eq!(scan.min_mu, Some(best_mu));
    }
}

#[test]
fn layer_profile_of_a_leaf() {
    let n = 12;
    let t2 = balanced_tree(2, n).unwrap();
    let t3 = balanced_tree(3, n).unwrap();
    let phi = Permutation::random(n, &mut ChaCha8Rng::seed_from_u64(3));
    let leaf = 12;
    let u = Cut::new(n, &[leaf]).unwrap();
    let r = layer_profile(&t2.tree, &t3.tree, &phi, &u).unwrap();
    let mut expected = BTreeSet::from([t3.tree.level(leaf)]);
    // the T2 edges at phi^{-1}(leaf)
    let pre = phi.inverse().apply(leaf);
    for &w in t2.graph().neighbors(pre) {
        expected.insert(t2.tree.level(pre).max(t2.tree.level(w)));
    }
    assert_eq!(r, expected);
}
