//! The acceptance criteria as runnable checks.
//!
//! Every criterion is a function of a seed. Instance distributions, sizes,
//! tolerances and time limits are fixed here, so a given seed always runs
//! the same instances.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use twglue::construct::{glue_path_tree, glue_tw_pw_traced, glue_via_cover, glue_via_layouts};
use twglue::generate::{
    partial_ktree, path, random_banded, random_caterpillar, random_graph, random_tree, snake_grid_permutation, star,
};
use twglue::lab::{
    badic_distance, balanced_band, balanced_tree, big_gap, cut_size_formula, gap_windows, impossibility_probe,
    is_balanced, similarity_mu, subtree_profile, Cut, ProbeConfig, ProbeReport,
};
use twglue::pathwidth::caterpillar_layout;
use twglue::{glue, Graph, Layout, Permutation, RootedTree, Solver, TreeDecomposition};

/// Seed used by the acceptance target and by `reproduce` unless overridden.
pub const DEFAULT_SEED: u64 = 0;

/// Sizes, try count and per-try budget of the impossibility probe.
pub const PROBE_NS: [usize; 3] = [10, 15, 20];
pub const PROBE_TRIES: usize = 500;
pub const PROBE_BUDGET: usize = 400;

/// Outcome of one criterion.
#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: u8,
    pub name: &'static str,
    pub checks: usize,
    pub failures: usize,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl CriterionReport {
    pub fn within_time(&self) -> bool {
        self.elapsed <= self.limit
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.checks > 0 && self.within_time()
    }
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{:>2}] {:<18} {}/{} checks passed; {:.2} s (limit {} s)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.checks - self.failures,
            self.checks,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs(),
        )?;
        if !self.detail.is_empty() {
            write!(f, "; {}", self.detail)?;
        }
        Ok(())
    }
}

/// Counts checks and remembers the first failure.
struct Tally {
    checks: usize,
    failures: usize,
    first: Option<String>,
    start: Instant,
}

impl Tally {
    fn new() -> Self {
        Tally { checks: 0, failures: 0, first: None, start: Instant::now() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(what());
            }
        }
    }

    fn absorb(&mut self, other: Tally) {
        self.checks += other.checks;
        self.failures += other.failures;
        if self.first.is_none() {
            self.first = other.first;
        }
    }

    fn finish(self, id: u8, name: &'static str, limit_secs: u64, note: String) -> CriterionReport {
        let mut detail = note;
        if let Some(f) = self.first {
            if !detail.is_empty() {
                detail.push_str("; ");
            }
            detail.push_str("first failure: ");
            detail.push_str(&f);
        }
        CriterionReport {
            id,
            name,
            checks: self.checks,
            failures: self.failures,
            detail,
            elapsed: self.start.elapsed(),
            limit: Duration::from_secs(limit_secs),
        }
    }
}

fn rng_for(seed: u64, criterion: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(criterion);
    rng
}

/// Graph whose edges all touch the first `c` labels, shuffled.
fn planted_cover_graph(n: usize, c: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=c {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::new(n, edges).expect("labels in range");
    g.relabel(&Permutation::random(n, rng)).expect("same size")
}

pub fn cover_bound(seed: u64) -> CriterionReport {
    let mut rng = rng_for(seed, 1);
    let cover_solver = Solver::with_limit(64).expect("valid limit");
    let mut t = Tally::new();
    for instance in 0..30 {
        let n = rng.gen_range(10..=40);
        let g1 = if instance % 2 == 0 { star(n) } else { planted_cover_graph(n, rng.gen_range(1..=3), 0.4, &mut rng) };
        let g2 = random_tree(n, &mut rng);
        let cover = cover_solver.vertex_cover(&g1).expect("within limit");
        let d2 = TreeDecomposition::of_tree(&g2).expect("tree");
        let bound = cover.len() + d2.width();
        for _ in 0..100 {
            let phi = Permutation::random(n, &mut rng);
            let outcome = glue_via_cover(&g1, &cover, &g2, &d2, &phi);
            let ok = matches!(&outcome, Ok(r) if r.verify(&g1, &g2).is_ok() && r.witness.width() <= bound);
            t.check(ok, || format!("instance {instance}, n={n}: {:?}", outcome.err()));
        }
    }
    t.finish(1, "cover-bound", 60, String::new())
}

pub fn caterpillar_layouts(seed: u64) -> CriterionReport {
    let mut rng = rng_for(seed, 2);
    let solver = Solver::default();
    let mut t = Tally::new();
    let mut exact = 0;
    for pair in 0..30 {
        // every third pair small enough for an exact pathwidth check
        let n = if pair % 3 == 0 { rng.gen_range(2..=16) } else { rng.gen_range(2..=40) };
        let c1 = random_caterpillar(n, &mut rng);
        let c2 = random_caterpillar(n, &mut rng);
        let (p1, p2) = (caterpillar_layout(&c1).expect("caterpillar"), caterpillar_layout(&c2).expect("caterpillar"));
        let r = glue_via_layouts(&c1, &c2, Some(&p1), Some(&p2), &solver);
        let ok = matches!(&r, Ok(r) if r.verify(&c1, &c2).is_ok() && r.witness.is_path() && r.witness.width() <= 2);
        t.check(ok, || format!("pair {pair}, n={n}"));
        if let (Ok(r), true) = (&r, n <= 16) {
            exact += 1;
            let pw = solver.pathwidth(&r.glued).expect("within limit").width;
            t.check(pw <= 2, || format!("pair {pair}: exact pathwidth {pw}"));
        }
    }
    t.finish(2, "caterpillar-layouts", 60, format!("{exact} exact pathwidth checks"))
}

pub fn tree_caterpillar(seed: u64) -> CriterionReport {
    let mut rng = rng_for(seed, 3);
    let solver = Solver::default();
    let mut t = Tally::new();
    for pair in 0..30 {
        let n = rng.gen_range(2..=40);
        let tree = random_tree(n, &mut rng);
        let cat = random_caterpillar(n, &mut rng);
        let d1 = TreeDecomposition::of_tree(&tree).expect("tree");
        let pi2 = caterpillar_layout(&cat).expect("caterpillar");
        match glue_tw_pw_traced(&tree, &cat, Some(&d1), Some(&pi2), &solver) {
            Ok((r, trace)) => {
                let ok = r.verify(&tree, &cat).is_ok()
                    && r.witness.width() <= 5
                    && trace.tilt_max_degree <= 3
                    && trace.max_extensions <= 3
                    && (n <= trace.k + 1 || trace.smooth_nodes == n - trace.k);
                t.check(ok, || format!("tree pair {pair}, n={n}: {trace:?}"));
            }
            Err(e) => t.check(false, || format!("tree pair {pair}, n={n}: {e}")),
        }
    }
    for pair in 0..20 {
        let n = rng.gen_range(4..=25);
        let k = rng.gen_range(1..=3);
        let band = rng.gen_range(1..=2);
        let (g1, d1) = partial_ktree(n, k, 0.8, &mut rng).expect("valid parameters");
        let g2 = random_banded(n, band, 0.8, &mut rng);
        let pi2 = Layout::identity(n);
        match glue_tw_pw_traced(&g1, &g2, Some(&d1), Some(&pi2), &solver) {
            Ok((r, trace)) => {
                let ok = r.verify(&g1, &g2).is_ok()
                    && trace.k <= k
                    && trace.ell <= band
                    && r.witness.width() <= trace.k + 3 * trace.ell + 1
                    && trace.tilt_max_degree <= 3
                    && trace.max_extensions <= 3
                    && (n <= trace.k + 1 || trace.smooth_nodes == n - trace.k);
                t.check(ok, || format!("k-tree pair {pair}, n={n}, k={k}: {trace:?}"));
            }
            Err(e) => t.check(false, || format!("k-tree pair {pair}, n={n}, k={k}: {e}")),
        }
    }
    t.finish(3, "tree-caterpillar", 300, String::new())
}

pub fn path_tree(seed: u64) -> CriterionReport {
    let mut rng = rng_for(seed, 4);
    let mut t = Tally::new();
    for i in 0..50 {
        let n = rng.gen_range(1..=14);
        let tree = random_tree(n, &mut rng);
        let tw = glue_path_tree(&path(n), &tree)
            .and_then(|r| Solver::default().treewidth_value(&r.glued))
            .map_err(|e| e.to_string());
        t.check(matches!(tw, Ok(w) if w <= 2), || format!("tree {i}, n={n}: {tw:?}"));
    }
    t.finish(4, "path-tree", 120, String::new())
}

pub fn grid_contrast(_seed: u64) -> CriterionReport {
    let mut t = Tally::new();
    let p = path(9);
    let grid = glue(&p, &p, &snake_grid_permutation(3)).expect("same size");
    let tw = Solver::default().treewidth_value(&grid).expect("within limit");
    t.check(tw == 3, || format!("grid treewidth {tw}"));
    let r = glue_via_layouts(&p, &p, None, None, &Solver::default());
    let bound = r.as_ref().map(|r| (r.claimed_bound, r.witness.width()));
    t.check(matches!(bound, Ok((2, w)) if w <= 2), || format!("layouts gluing: {bound:?}"));
    t.finish(5, "grid-contrast", 10, format!("grid tw {tw}, layouts bound {:?}", bound.map(|b| b.0)))
}

pub fn cut_formula(seed: u64) -> CriterionReport {
    let mut rng = rng_for(seed, 6);
    let mut t = Tally::new();
    for i in 0..20 {
        let n = rng.gen_range(1..=10);
        let root = rng.gen_range(1..=n);
        let tree = RootedTree::new(&random_tree(n, &mut rng), root).expect("tree");
        for mask in 0..1u64 << n {
            let u = Cut::from_mask(n, mask);
            let value = cut_size_formula(&tree, &u).expect("sizes agree");
            t.check(value == u.len() as i64, || format!("tree {i}, n={n}, mask {mask:#b}: {value}"));
        }
    }
    t.finish(6, "cut-formula", 10, String::new())
}

pub fn balanced_trees(_seed: u64) -> CriterionReport {
    let mut t = Tally::new();
    for b in [2, 3] {
        for n in 1..=500 {
            let tree = balanced_tree(b, n).expect("valid parameters");
            t.check(is_balanced(&tree.tree, b), || format!("T_{b}({n}) unbalanced"));
            let profile = subtree_profile(&tree);
            let bad = profile.iter().find(|e| e.beta.numer().abs() > *e.beta.denom());
            t.check(bad.is_none(), || format!("T_{b}({n}): beta {:?}", bad.map(|e| e.beta)));
        }
    }
    let t20 = balanced_tree(2, 20).expect("valid parameters");
    let sizes = t20.tree.subtree_sizes();
    let level1: BTreeSet<usize> = t20.tree.children(t20.tree.root()).iter().map(|&c| sizes[c - 1]).collect();
    t.check(level1 == BTreeSet::from([9, 10]), || format!("T_2(20) level-1 sizes {level1:?}"));
    t.finish(7, "balanced-trees", 10, format!("T_2(20) level-1 sizes {level1:?}"))
}

pub fn badic(_seed: u64) -> CriterionReport {
    let mut t = Tally::new();
    for i in 1..=8 {
        for j in 1..=8 {
            let r = badic_distance(i, j);
            t.check(r.disjoint && r.holds, || format!("i={i}, j={j}: {:?}", r.distance));
        }
    }
    t.finish(8, "badic", 5, String::new())
}

/// `e_G(U)` for every balanced `U` of a glued graph, with `mu_G(U)`.
fn sandwich_checks(g: &Graph) -> Tally {
    let n = g.n();
    let (lo, hi) = balanced_band(n);
    let mut t = Tally::new();
    for mask in 0..1u64 << n {
        let size = mask.count_ones() as usize;
        if size < lo || size > hi {
            continue;
        }
        let u = Cut::from_mask(n, mask);
        let e = g.edges().iter().filter(|&&(a, b)| u.contains(a) != u.contains(b)).count();
        let mu = similarity_mu(g, &u).expect("sizes agree");
        t.check(e <= 49 * mu && mu <= e + 1, || format!("n={n}, mask {mask:#b}: e={e}, mu={mu}"));
    }
    t
}

pub fn sandwich(seed: u64) -> CriterionReport {
    let mut rng = rng_for(seed, 9);
    let mut jobs = Vec::new();
    for n in 9..=15 {
        for _ in 0..20 {
            jobs.push((n, Permutation::random(n, &mut rng)));
        }
    }
    let mut t = Tally::new();
    let graphs: Vec<Graph> = jobs
        .iter()
        .map(|(n, phi)| {
            let t2 = balanced_tree(2, *n).expect("valid parameters");
            let t3 = balanced_tree(3, *n).expect("valid parameters");
            glue(t2.graph(), t3.graph(), phi).expect("same size")
        })
        .collect();
    for g in &graphs {
        let d = g.max_degree();
        t.check(d <= 7, || format!("n={}: max degree {d}", g.n()));
    }
    let parts: Vec<Tally> = graphs.par_iter().map(sandwich_checks).collect();
    for p in parts {
        t.absorb(p);
    }
    t.finish(9, "sandwich", 300, format!("{} glued graphs", graphs.len()))
}

/// One gap-lemma instance drawn from the fixed distribution.
pub fn gap_instance(rng: &mut ChaCha8Rng) -> (u64, u64, u64, u64, BTreeSet<u64>) {
    let a = rng.gen_range(1..=10u64);
    let m = rng.gen_range(2..=6u64);
    let k = rng.gen_range(1..=4u64);
    let top = a * m.pow(k as u32 + 2);
    let l = top + 1 + rng.gen_range(0..=top);
    let count = rng.gen_range(0..=k);
    let reds = (0..count).map(|_| rng.gen_range(1..=l)).collect();
    (a, m, k, l, reds)
}

pub fn big_gap_windows(seed: u64) -> CriterionReport {
    let mut rng = rng_for(seed, 10);
    let mut t = Tally::new();
    let mut interval_ok = 0;
    let mut alternative = 0;
    for i in 0..1000 {
        let (a, m, k, l, reds) = gap_instance(&mut rng);
        match big_gap(a, m, k, l, &reds) {
            Ok(c) => {
                let w = gap_windows(a, m, l, &reds, c);
                interval_ok += usize::from(w.interval_argument_holds());
                alternative += usize::from(w.long_window_exists);
                t.check(w.statement_holds(), || format!("instance {i}: a={a} m={m} k={k} l={l} reds={reds:?} C={c}"));
            }
            Err(e) => t.check(false, || format!("instance {i}: {e}")),
        }
    }
    let note = format!(
        "window C+1..mC black in {interval_ok}/1000; some admissible C' has its mC following elements black in {alternative}/1000"
    );
    t.finish(10, "big-gap", 5, note)
}

/// Width of one elimination ordering, on plain adjacency bitmasks.
fn ordering_width(adj: &[u16], order: &[usize]) -> usize {
    let mut adj = adj.to_vec();
    let mut gone = 0u16;
    let mut width = 0;
    for &v in order {
        let later = adj[v] & !gone & !(1 << v);
        width = width.max(later.count_ones() as usize);
        for (w, row) in adj.iter_mut().enumerate() {
            if later >> w & 1 == 1 {
                *row |= later & !(1 << w);
            }
        }
        gone |= 1 << v;
    }
    width
}

/// Vertex separation of one layout, straight from the definition.
fn layout_separation(adj: &[u16], order: &[usize]) -> usize {
    let n = order.len();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    (0..n)
        .map(|p| {
            order[..p]
                .iter()
                .filter(|&&w| (0..n).any(|x| adj[w] >> x & 1 == 1 && pos[x] >= p))
                .count()
        })
        .max()
        .unwrap_or(0)
}

fn for_each_ordering(n: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(items: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == items.len() {
            f(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            go(items, k + 1, f);
            items.swap(k, i);
        }
    }
    go(&mut (0..n).collect(), 0, f);
}

fn brute_force_widths(g: &Graph, with_pathwidth: bool) -> (usize, Option<usize>) {
    let n = g.n();
    let mut adj = vec![0u16; n];
    for &(u, v) in g.edges() {
        adj[u - 1] |= 1 << (v - 1);
        adj[v - 1] |= 1 << (u - 1);
    }
    let (mut tw, mut pw) = (usize::MAX, usize::MAX);
    for_each_ordering(n, &mut |o| {
        tw = tw.min(ordering_width(&adj, o));
        if with_pathwidth {
            pw = pw.min(layout_separation(&adj, o));
        }
    });
    (tw, with_pathwidth.then_some(pw))
}

pub fn oracle_equivalence(seed: u64) -> CriterionReport {
    let mut rng = rng_for(seed, 11);
    let graphs: Vec<Graph> = (0..200)
        .map(|_| {
            let n = rng.gen_range(1..=8);
            let p = rng.gen_range(0.1..0.8);
            random_graph(n, p, &mut rng)
        })
        .collect();
    let solver = Solver::default();
    let mut t = Tally::new();
    let results: Vec<(usize, Option<usize>)> =
        graphs.par_iter().map(|g| brute_force_widths(g, g.n() <= 7)).collect();
    let mut pw_checks = 0;
    for (i, (g, (tw, pw))) in graphs.iter().zip(results).enumerate() {
        let exact = solver.treewidth(g).expect("within limit");
        let valid = exact.decomposition.check(g).is_ok() && exact.decomposition.width() == exact.width;
        t.check(exact.width == tw && valid, || format!("graph {i}: solver tw {} vs {tw}", exact.width));
        if let Some(pw) = pw {
            pw_checks += 1;
            let exact = solver.pathwidth(g).expect("within limit").width;
            t.check(exact == pw, || format!("graph {i}: solver pw {exact} vs {pw}"));
        }
    }
    t.finish(11, "oracle-equivalence", 300, format!("{pw_checks} pathwidth comparisons"))
}

/// Runs the probe for each `n` and checks the trend and each reported value.
pub fn probe_trend(seed: u64, ns: &[usize], tries: usize, budget: usize, solver: Solver) -> (CriterionReport, Vec<ProbeReport>) {
    let mut t = Tally::new();
    let mut reports = Vec::new();
    for &n in ns {
        let config = ProbeConfig { tries, seed, budget, solver };
        match impossibility_probe(n, &config) {
            Ok(r) => reports.push(r),
            Err(e) => t.check(false, || format!("n={n}: {e}")),
        }
    }
    for r in &reports {
        let best = r.best_try();
        let t2 = balanced_tree(2, r.n).expect("valid parameters");
        let t3 = balanced_tree(3, r.n).expect("valid parameters");
        let g = glue(t2.graph(), t3.graph(), &best.phi).expect("same size");
        let exact = solver.treewidth_value(&g).map_err(|e| e.to_string());
        t.check(r.certified() && exact == Ok(best.tw), || format!("n={}: reported {} but exact {exact:?}", r.n, best.tw));
    }
    for w in reports.windows(2) {
        t.check(w[0].min_tw() <= w[1].min_tw(), || format!("min tw drops from n={} to n={}", w[0].n, w[1].n));
    }
    let trend: Vec<String> = reports.iter().map(|r| format!("n={}: {}", r.n, r.min_tw())).collect();
    (t.finish(12, "probe-trend", 1800, format!("min tw {}", trend.join(", "))), reports)
}

pub fn probe_default(seed: u64) -> CriterionReport {
    probe_trend(seed, &PROBE_NS, PROBE_TRIES, PROBE_BUDGET, Solver::default()).0
}

/// Runs one criterion with the given seed.
pub type Runner = fn(u64) -> CriterionReport;

/// Criteria in order, as `(id, runner)`.
pub const CRITERIA: [(u8, Runner); 12] = [
    (1, cover_bound),
    (2, caterpillar_layouts),
    (3, tree_caterpillar),
    (4, path_tree),
    (5, grid_contrast),
    (6, cut_formula),
    (7, balanced_trees),
    (8, badic),
    (9, sandwich),
    (10, big_gap_windows),
    (11, oracle_equivalence),
    (12, probe_default),
];

/// Criterion ids grouped under a `reproduce` suite name.
pub fn suite_criteria(name: &str) -> Option<&'static [u8]> {
    Some(match name {
        "constructions" => &[1, 2, 3, 4, 5],
        "cut-formula" => &[6],
        "balanced-trees" => &[7],
        "badic" => &[8],
        "sandwich" => &[9],
        "gap" => &[10],
        "oracles" => &[11],
        "probe" => &[12],
        "all" => &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12],
        _ => return None,
    })
}

pub const SUITE_NAMES: [&str; 9] =
    ["constructions", "cut-formula", "balanced-trees", "badic", "sandwich", "gap", "oracles", "probe", "all"];

pub fn run_criterion(id: u8, seed: u64) -> CriterionReport {
    let (_, f) = CRITERIA.iter().find(|(i, _)| *i == id).expect("known criterion");
    f(seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_widths_on_known_graphs() {
        let c4 = Graph::new(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        assert_eq!(brute_force_widths(&c4, true), (2, Some(2)));
        let star = star(5);
        assert_eq!(brute_force_widths(&star, true), (1, Some(1)));
        assert_eq!(brute_force_widths(&Graph::complete(5).unwrap(), false), (4, None));
    }

    #[test]
    fn gap_distribution_meets_preconditions() {
        let mut rng = rng_for(3, 10);
        for _ in 0..200 {
            let (a, m, k, l, reds) = gap_instance(&mut rng);
            assert!(l > a * m.pow(k as u32 + 2));
            assert!(reds.len() as u64 <= k);
            assert!(big_gap(a, m, k, l, &reds).is_ok());
        }
    }

    #[test]
    fn suites_cover_every_criterion() {
        let all: BTreeSet<u8> = SUITE_NAMES
            .iter()
            .filter(|&&s| s != "all")
            .flat_map(|s| suite_criteria(s).unwrap().iter().copied())
            .collect();
        assert_eq!(all, (1..=12).collect());
        assert!(suite_criteria("nope").is_none());
    }

    #[test]
    fn fast_criteria_pass() {
        for id in [5, 6, 7, 8] {
            let r = run_criterion(id, DEFAULT_SEED);
            assert!(r.passed(), "{r}");
        }
    }
}
