use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{glue, Graph};
use crate::lab::balanced::balanced_tree;
use crate::lab::cuts::{balanced_cut_scan, ScanMode};
use crate::perm::Permutation;
use crate::solver::Solver;
use crate::treewidth::greedy_fill_in;

/// Largest `n` for which the probe adds an exhaustive balanced-cut scan.
const PROBE_SCAN_LIMIT: usize = 18;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProbeConfig {
    pub tries: usize,
    pub seed: u64,
    /// Width evaluations allowed per try, including the starting point.
    pub budget: usize,
    pub solver: Solver,
}

impl ProbeConfig {
    pub fn new(tries: usize, seed: u64) -> Self {
        ProbeConfig { tries, seed, budget: 400, solver: Solver::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TryRecord {
    pub index: usize,
    pub seed: u64,
    pub phi: Permutation,
    /// Exact treewidth when `certified`, otherwise a greedy upper bound.
    pub tw: usize,
    pub edges: usize,
    pub certified: bool,
    pub evaluations: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeReport {
    pub n: usize,
    pub budget: usize,
    pub tries: Vec<TryRecord>,
    /// Index into `tries` of the best gluing: least width, then fewest edges,
    /// then lowest try index.
    pub best: usize,
    /// `e(G)` of the best gluing, when small enough for an exhaustive scan.
    pub min_balanced_e: Option<usize>,
}

impl ProbeReport {
    pub fn best_try(&self) -> &TryRecord {
        &self.tries[self.best]
    }

    pub fn min_tw(&self) -> usize {
        self.best_try().tw
    }

    pub fn certified(&self) -> bool {
        self.tries.iter().all(|t| t.certified)
    }
}

/// Seed of try `index` in a run seeded with `seed` (SplitMix64 step).
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

struct Objective<'a> {
    t2: &'a Graph,
    t3: &'a Graph,
    solver: Solver,
    exact: bool,
}

impl Objective<'_> {
    fn eval(&self, phi: &Permutation) -> (usize, usize) {
        let g = glue(self.t2, self.t3, phi).expect("sizes agree");
        let tw = if self.exact {
            self.solver.treewidth_value(&g).expect("within the solver limit")
        } else {
            greedy_fill_in(&g).0
        };
        (tw, g.edge_count())
    }
}

/// Searches for gluings of `T_2(n)` and `T_3(n)` of small treewidth.
///
/// Each try starts from a uniform permutation and runs steepest descent over
/// transpositions on `(width, edge count)`, restarting from a fresh uniform
/// permutation at local minima, until its evaluation budget is spent. Widths
/// are exact when `n` is within the solver limit and greedy upper bounds
/// otherwise. Tries run in parallel; the report does not depend on the
/// thread count.
pub fn impossibility_probe(n: usize, config: &ProbeConfig) -> Result<ProbeReport> {
    if n < 2 {
        return Err(Error::InvalidParams(format!("probe needs n >= 2, got {n}")));
    }
    if config.tries == 0 || config.budget == 0 {
        return Err(Error::InvalidParams("probe needs at least one try and one evaluation".into()));
    }
    let t2 = balanced_tree(2, n)?;
    let t3 = balanced_tree(3, n)?;
    let objective =
        Objective { t2: t2.graph(), t3: t3.graph(), solver: config.solver, exact: config.solver.admits(t2.graph()) };

    let tries: Vec<TryRecord> = (0..config.tries)
        .into_par_iter()
        .map(|index| {
            let seed = derive_seed(config.seed, index as u64);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut evaluations = 0;
            let mut current = Permutation::random(n, &mut rng);
            let mut value = objective.eval(&current);
            evaluations += 1;
            let (mut best, mut best_value) = (current.clone(), value);
            'search: while evaluations < config.budget {
                let mut step: Option<(Permutation, (usize, usize))> = None;
                for i in 1..=n {
                    for j in i + 1..=n {
                        if evaluations >= config.budget {
                            break 'search;
                        }
                        let cand = current.swapped(i, j);
                        let v = objective.eval(&cand);
                        evaluations += 1;
                        if v < step.as_ref().map_or(value, |s| s.1) {
                            step = Some((cand, v));
                        }
                    }
                }
                match step {
                    Some((p, v)) => (current, value) = (p, v),
                    None => {
                        current = Permutation::random(n, &mut rng);
                        value = objective.eval(&current);
                        evaluations += 1;
                    }
                }
                if value < best_value {
                    (best, best_value) = (current.clone(), value);
                }
            }
            if value < best_value {
                (best, best_value) = (current, value);
            }
            TryRecord {
                index,
                seed,
                phi: best,
                tw: best_value.0,
                edges: best_value.1,
                certified: objective.exact,
                evaluations,
            }
        })
        .collect();

    let best = tries.iter().min_by_key(|t| (t.tw, t.edges, t.index)).map(|t| t.index).expect("at least one try");
    let min_balanced_e = if n <= PROBE_SCAN_LIMIT {
        let g = glue(t2.graph(), t3.graph(), &tries[best].phi)?;
        Some(balanced_cut_scan(&g, ScanMode::Exhaustive, false)?.min_e)
    } else {
        None
    };
    Ok(ProbeReport { n, budget: config.budget, tries, best, min_balanced_e })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::exact_treewidth;

    #[test]
    fn two_vertices() {
        let r = impossibility_probe(2, &ProbeConfig::new(3, 0)).unwrap();
        assert_eq!(r.min_tw(), 1);
        assert!(r.certified());
    }

    #[test]
    fn reported_value_resolves() {
        let config = ProbeConfig { budget: 60, ..ProbeConfig::new(12, 5) };
        let r = impossibility_probe(9, &config).unwrap();
        assert!(r.min_tw() >= 1);
        let t2 = balanced_tree(2, 9).unwrap();
        let t3 = balanced_tree(3, 9).unwrap();
        let g = glue(t2.graph(), t3.graph(), &r.best_try().phi).unwrap();
        assert_eq!(exact_treewidth(&g).unwrap().width, r.min_tw());
        assert!(r.min_balanced_e.is_some());
        assert!(r.tries.iter().all(|t| t.evaluations <= 60));
    }

    #[test]
    fn deterministic() {
        let config = ProbeConfig { budget: 30, ..ProbeConfig::new(6, 9) };
        assert_eq!(impossibility_probe(10, &config).unwrap(), impossibility_probe(10, &config).unwrap());
    }

    #[test]
    fn heuristic_beyond_limit() {
        let config = ProbeConfig { budget: 5, solver: Solver::with_limit(10).unwrap(), ..ProbeConfig::new(2, 1) };
        let r = impossibility_probe(24, &config).unwrap();
        assert!(!r.certified());
        assert_eq!(r.min_balanced_e, None);
    }

    #[test]
    fn seeds_differ() {
        assert_ne!(derive_seed(0, 0), derive_seed(0, 1));
        assert_ne!(derive_seed(0, 0), derive_seed(1, 0));
    }
}
