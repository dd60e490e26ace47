mod constructions;

use criterion::{criterion_group, criterion_main};

criterion_group!(benches, solvers::bench, constructions::bench, lab::bench);
criterion_main!(benches);
