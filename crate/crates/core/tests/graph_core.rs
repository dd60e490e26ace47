mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twglue::generate::{caterpillar, path, random_caterpillar, random_graph, random_tree, star};
use twglue::io::{parse_gr, parse_perm, parse_td, write_gr, write_perm, write_td};
use twglue::{apply_permutation, classify_tree_kind, glue, make_graph, Graph, Permutation, RootedTree, TreeKind};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>(), 0.0f64..0.6).prop_map(|(n, seed, p)| {
        random_graph(n, p, &mut ChaCha8Rng::seed_from_u64(seed))
    })
}

fn pair_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Graph, Permutation)> {
    (1..=max_n, any::<u64>(), 0.0f64..0.6).prop_map(|(n, seed, p)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g1 = random_graph(n, p, &mut rng);
        let g2 = random_graph(n, p, &mut rng);
        (g1, g2, Permutation::random(n, &mut rng))
    })
}

proptest! {
    #[test]
    fn glue_matches_set_union((g1, g2, phi) in pair_with_perm(20)) {
        let h = glue(&g1, &g2, &phi).unwrap();
        let expected = common::union_oracle(&g1, &g2, &phi);
        prop_assert_eq!(common::edge_set(&h), expected);
        prop_assert!(h.edge_count() <= g1.edge_count() + g2.edge_count());
    }

    #[test]
    fn glue_with_edgeless_is_relabeling((g1, _g2, phi) in pair_with_perm(20)) {
        let empty = Graph::edgeless(g1.n()).unwrap();
        prop_assert_eq!(glue(&g1, &empty, &phi).unwrap(), apply_permutation(&g1, &phi).unwrap());
        prop_assert_eq!(glue(&empty, &g1, &phi).unwrap(), g1.clone());
    }

    #[test]
    fn identity_glue_is_plain_union((g1, g2, _phi) in pair_with_perm(20)) {
        let id = Permutation::identity(g1.n());
        let h = glue(&g1, &g2, &id).unwrap();
        let mut expected = common::edge_set(&g1);
        expected.extend(common::edge_set(&g2));
        prop_assert_eq!(common::edge_set(&h), expected);
    }

    #[test]
    fn relabeling_preserves_degrees((g, _g2, phi) in pair_with_perm(25)) {
        let h = apply_permutation(&g, &phi).unwrap();
        prop_assert_eq!(h.degree_multiset(), g.degree_multiset());
        prop_assert_eq!(h.edge_count(), g.edge_count());
    }

    #[test]
    fn permutation_algebra(n in 1usize..30, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (Permutation::random(n, &mut rng), Permutation::random(n, &mut rng));
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
        let ab = a.compose(&b).unwrap();
        for x in 1..=n {
            prop_assert_eq!(ab.apply(x), a.apply(b.apply(x)));
        }
    }

    #[test]
    fn dfs_walk_visit_counts(n in 1usize..40, seed: u64, root in 0usize..40) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_tree(n, &mut rng);
        let root = 1 + root % n;
        let rt = RootedTree::new(&t, root).unwrap();
        let walk = rt.dfs_walk();
        prop_assert_eq!(walk.len(), 2 * (n - 1) + 1);
        prop_assert_eq!(walk[0], root);
        prop_assert_eq!(*walk.last().unwrap(), root);
        for v in 1..=n {
            let visits = walk.iter().filter(|&&x| x == v).count();
            let expected = if v == root { t.degree(v) + 1 } else { t.degree(v) };
            prop_assert_eq!(visits, expected);
            prop_assert!(visits <= t.max_degree() + 1);
        }
        let pre = rt.dfs_preorder();
        prop_assert_eq!(pre.at(1), root);
        prop_assert!(rt.is_dfs_preorder(&pre));
    }

    #[test]
    fn classification_is_cumulative(g in graph_strategy(12)) {
        let c = classify_tree_kind(&g);
        prop_assert!(!c.star || c.caterpillar);
        prop_assert!(!c.path || c.caterpillar);
        prop_assert!(!c.caterpillar || c.tree);
        prop_assert_eq!(c.tree, g.is_connected() && g.edge_count() + 1 == g.n());
    }

    #[test]
    fn random_caterpillars_are_caterpillars(n in 1usize..40, seed: u64) {
        let c = random_caterpillar(n, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert!(classify_tree_kind(&c).caterpillar);
        prop_assert_eq!(c.n(), n);
    }

    #[test]
    fn gr_round_trip(g in graph_strategy(30)) {
        prop_assert_eq!(parse_gr(&write_gr(&g, &["c x".into()])).unwrap(), g);
    }

    #[test]
    fn perm_round_trip(n in 1usize..40, seed: u64) {
        let p = Permutation::random(n, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(parse_perm(&write_perm(&p, &[])).unwrap(), p);
    }
}

#[test]
fn figure_one_trees() {
    let a = make_graph(9, &[(1, 2), (1, 3), (1, 4), (1, 5), (3, 6), (3, 7), (4, 8), (4, 9)]).unwrap();
    let b = make_graph(9, &[(1, 3), (2, 4), (3, 5), (4, 5), (5, 6), (6, 7), (6, 8), (8, 9)]).unwrap();
    assert_eq!(classify_tree_kind(&a).kind(), TreeKind::Caterpillar);
    assert_eq!(classify_tree_kind(&b).kind(), TreeKind::Tree);
    assert_eq!(glue(&a, &b, &Permutation::identity(9)).unwrap().edge_count(), 15);
    let phi = parse_perm("6 7 5 8 3 1 2 9 4\n").unwrap();
    assert_eq!(glue(&a, &b, &phi).unwrap().edge_count(), 12);
}

#[test]
fn small_families() {
    assert_eq!(star(4).edges(), &[(1, 2), (1, 3), (1, 4)]);
    assert_eq!(path(3).edges(), &[(1, 2), (2, 3)]);
    assert_eq!(classify_tree_kind(&Graph::complete(3).unwrap()).kind(), TreeKind::NotTree);
    assert_eq!(classify_tree_kind(&star(5)).kind(), TreeKind::Star);
    assert_eq!(classify_tree_kind(&path(5)).kind(), TreeKind::Path);
    assert_eq!(classify_tree_kind(&caterpillar(&[1, 2]).unwrap()).kind(), TreeKind::Caterpillar);
}

#[test]
fn rooted_examples() {
    let t = RootedTree::new(&path(3), 2).unwrap();
    assert_eq!(t.dfs_preorder().order(), &[2, 1, 3]);
    assert_eq!(t.dfs_walk(), vec![2, 1, 2, 3, 2]);
    let single = RootedTree::new(&Graph::edgeless(1).unwrap(), 1).unwrap();
    assert_eq!(single.dfs_walk(), vec![1]);
    assert!(RootedTree::new(&Graph::complete(3).unwrap(), 1).is_err());
}

#[test]
fn td_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..20 {
        let (_, d) = twglue::generate::partial_ktree(15, 3, 0.5, &mut rng).unwrap();
        assert_eq!(parse_td(&write_td(&d, &[])).unwrap(), d);
    }
}
