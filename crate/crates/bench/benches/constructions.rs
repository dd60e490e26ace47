use std::hint::black_box;

use criterion::{BenchmarkId, Criterion};
use twglue::construct::{glue_path_tree, glue_tw_pw};
use twglue::generate::path;
use twglue::pathwidth::caterpillar_layout;
use twglue::{Solver, TreeDecomposition};
use twglue_bench::tree_and_caterpillar;

pub fn bench(c: &mut Criterion) {
    let mut group = c.benchmark_group("tw-pw");
    for n in [100, 1000] {
        let (t, cat) = tree_and_caterpillar(n, 4);
        let d = TreeDecomposition::of_tree(&t).unwrap();
        let pi = caterpillar_layout(&cat).unwrap();
        group.bench_with_input(BenchmarkId::new("tree-caterpillar", n), &n, |b, _| {
            b.iter(|| glue_tw_pw(black_box(&t), black_box(&cat), Some(&d), Some(&pi), &Solver::default()).unwrap())
        });
    }
    group.finish();

    let (t, _) = tree_and_caterpillar(1000, 5);
    let p = path(1000);
    c.bench_function("path-tree/1000", |b| b.iter(|| glue_path_tree(black_box(&p), black_box(&t)).unwrap()));
}
