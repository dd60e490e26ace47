mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twglue::decomposition::from_elimination_order;
use twglue::generate::{partial_ktree, path, random_graph, random_tree, star};
use twglue::smooth::is_smooth;
use twglue::{
    exact_pathwidth, exact_treewidth, make_graph, min_vertex_cover, smoothify, validate_td, vs_of_layout, Graph,
    Layout, Solver, TreeDecomposition, Violation,
};

fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>(), 0.1f64..0.7).prop_map(|(n, seed, p)| random_graph(n, p, &mut ChaCha8Rng::seed_from_u64(seed)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn treewidth_matches_brute_force(g in small_graph(8)) {
        let r = exact_treewidth(&g).unwrap();
        prop_assert_eq!(r.width, common::brute_treewidth(&g));
        prop_assert!(validate_td(&g, &r.decomposition).is_empty());
        prop_assert_eq!(r.decomposition.width(), r.width);
    }

    #[test]
    fn pathwidth_matches_brute_force(g in small_graph(7)) {
        let r = exact_pathwidth(&g).unwrap();
        prop_assert_eq!(r.width, common::brute_pathwidth(&g));
        prop_assert_eq!(common::vs_direct(&g, r.layout.order()), r.width);
        prop_assert!(validate_td(&g, &r.decomposition).is_empty());
        prop_assert!(r.decomposition.is_path());
        prop_assert_eq!(r.decomposition.width(), r.width);
    }

    #[test]
    fn vs_matches_definition(g in small_graph(12), seed: u64) {
        let mut order: Vec<usize> = (1..=g.n()).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for i in (1..order.len()).rev() {
            order.swap(i, rng.gen_range(0..=i));
        }
        let layout = Layout::new(order.clone()).unwrap();
        prop_assert_eq!(vs_of_layout(&g, &layout).unwrap(), common::vs_direct(&g, &order));
    }

    #[test]
    fn treewidth_at_most_pathwidth(g in small_graph(14)) {
        prop_assert!(exact_treewidth(&g).unwrap().width <= exact_pathwidth(&g).unwrap().width);
    }

    #[test]
    fn vertex_cover_is_minimum(g in small_graph(12)) {
        let c = min_vertex_cover(&g).unwrap();
        prop_assert!(g.edges().iter().all(|(u, v)| c.contains(u) || c.contains(v)));
        prop_assert_eq!(c.len(), common::brute_vertex_cover_size(&g));
    }

    #[test]
    fn smoothify_properties(n in 2usize..30, k in 1usize..5, keep in 0.3f64..1.0, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = k.min(n - 1);
        let (g, d) = partial_ktree(n, k, keep, &mut rng).unwrap();
        let s = smoothify(&g, &d).unwrap();
        prop_assert!(is_smooth(&s));
        prop_assert_eq!(s.width(), d.width());
        prop_assert_eq!(s.bag_count(), n - d.width());
        prop_assert!(s.bags().iter().all(|b| b.len() == d.width() + 1));
        prop_assert!(validate_td(&g, &s).is_empty());
    }

    #[test]
    fn solvers_are_deterministic(g in small_graph(14)) {
        let (a, b) = (exact_treewidth(&g).unwrap(), exact_treewidth(&g).unwrap());
        prop_assert_eq!(a.elimination_order, b.elimination_order);
        let (a, b) = (exact_pathwidth(&g).unwrap(), exact_pathwidth(&g).unwrap());
        prop_assert_eq!(a.layout, b.layout);
    }
}

#[test]
fn validator_examples() {
    let p3 = path(3);
    let good = TreeDecomposition::path(3, vec![vec![1, 2], vec![2, 3]]).unwrap();
    assert!(validate_td(&p3, &good).is_empty());
    assert_eq!(good.width(), 1);
    let bad = TreeDecomposition::path(3, vec![vec![1, 2], vec![3]]).unwrap();
    assert_eq!(validate_td(&p3, &bad), vec![Violation::UncoveredEdge(2, 3)]);
    let s = star(4);
    let fan = TreeDecomposition::path(4, vec![vec![1, 2], vec![1, 3], vec![1, 4]]).unwrap();
    assert!(validate_td(&s, &fan).is_empty());
    assert_eq!(fan.width(), 1);
}

#[test]
fn solver_examples() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for n in 2..20 {
        assert_eq!(exact_treewidth(&random_tree(n, &mut rng)).unwrap().width, 1);
    }
    assert_eq!(exact_treewidth(&Graph::complete(4).unwrap()).unwrap().width, 3);
    let grid = make_graph(
        9,
        &[(1, 2), (2, 3), (4, 5), (5, 6), (7, 8), (8, 9), (1, 4), (4, 7), (2, 5), (5, 8), (3, 6), (6, 9)],
    )
    .unwrap();
    assert_eq!(exact_treewidth(&grid).unwrap().width, 3);
    assert_eq!(common::brute_treewidth(&grid), 3);
    assert_eq!(exact_pathwidth(&path(12)).unwrap().width, 1);
    assert_eq!(exact_pathwidth(&Graph::complete(4).unwrap()).unwrap().width, 3);
    assert_eq!(min_vertex_cover(&star(7)).unwrap(), vec![1]);
    assert_eq!(min_vertex_cover(&path(5)).unwrap().len(), 2);
    assert!(min_vertex_cover(&Graph::edgeless(5).unwrap()).unwrap().is_empty());
}

#[test]
fn smoothify_examples() {
    let p4 = path(4);
    let d = TreeDecomposition::path(4, vec![vec![1, 2], vec![2, 3], vec![3, 4]]).unwrap();
    assert_eq!(smoothify(&p4, &d).unwrap().bag_count(), 3);
    let dup = TreeDecomposition::path(4, vec![vec![1, 2], vec![2, 3], vec![2, 3], vec![3, 4]]).unwrap();
    let s = smoothify(&p4, &dup).unwrap();
    assert_eq!(s.bag_count(), 3);
    assert!(is_smooth(&s));
    let k3 = Graph::complete(3).unwrap();
    assert_eq!(smoothify(&k3, &TreeDecomposition::trivial(3)).unwrap(), TreeDecomposition::trivial(3));
}

#[test]
fn solver_limit_is_echoed() {
    let g = path(25);
    let err = Solver::default().treewidth(&g).unwrap_err();
    assert!(err.to_string().contains("20"), "{err}");
    assert_eq!(Solver::with_limit(25).unwrap().treewidth(&g).unwrap().width, 1);
}

#[test]
fn elimination_order_decomposition_width() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..50 {
        let g = random_graph(10, 0.3, &mut rng);
        let order: Vec<usize> = (1..=10).rev().collect();
        let d = from_elimination_order(&g, &order).unwrap();
        assert!(validate_td(&g, &d).is_empty());
    }
}
