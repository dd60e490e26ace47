//! Exact minimum vertex cover by branching on a maximum-degree vertex.

use crate::graph::Graph;

/// Can the edges of `G[rem]` be covered by at most `budget` vertices?
fn coverable(adj: &[u64], rem: u64, budget: u32) -> bool {
    // highest-degree vertex inside rem
    let mut best = (0u32, usize::MAX);
    let mut edges_twice = 0u32;
    let mut r = rem;
    while r != 0 {
        let v = r.trailing_zeros() as usize;
        r &= r - 1;
        let d = (adj[v] & rem).count_ones();
        edges_twice += d;
        if d > best.0 {
            best = (d, v);
        }
    }
    let (deg, v) = best;
    if deg == 0 {
        return true;
    }
    if budget == 0 {
        return false;
    }
    // each chosen vertex covers at most `deg` edges
    if edges_twice / 2 > budget * deg {
        return false;
    }
    let without_v = rem & !(1u64 << v);
    if coverable(adj, without_v, budget - 1) {
        return true;
    }
    deg <= budget && coverable(adj, without_v & !adj[v], budget - deg)
}

pub(crate) fn min_vertex_cover(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let adj = g.masks();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let size = (0..=n as u32).find(|&c| coverable(&adj, all, c)).expect("all vertices cover");
    // Lexicographically smallest optimum: take each vertex in turn whenever
    // an optimal cover containing it still exists.
    let mut rem = all;
    let mut used = 0u32;
    let mut cover = Vec::with_capacity(size as usize);
    for v in 0..n {
        if rem & (1u64 << v) == 0 {
            continue;
        }
        let without = rem & !(1u64 << v);
        if used < size && coverable(&adj, without, size - used - 1) {
            cover.push(v + 1);
            used += 1;
            rem = without;
        } else {
            let forced = adj[v] & rem;
            cover.extend((0..n).filter(|&w| forced & (1u64 << w) != 0).map(|w| w + 1));
            used += forced.count_ones();
            rem = without & !forced;
        }
    }
    cover.sort_unstable();
    debug_assert_eq!(cover.len(), size as usize);
    cover
}

/// Whether `cover` touches every edge of `g`.
pub fn is_vertex_cover(g: &Graph, cover: &[usize]) -> bool {
    let mut inside = vec![false; g.n() + 1];
    for &v in cover {
        if v >= 1 && v <= g.n() {
            inside[v] = true;
        }
    }
    g.edges().iter().all(|&(u, v)| inside[u] || inside[v])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{path, random_graph, star};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn brute_force_size(g: &Graph) -> usize {
        let n = g.n();
        (0u64..1 << n)
            .filter(|&m| g.edges().iter().all(|&(u, v)| m >> (u - 1) & 1 == 1 || m >> (v - 1) & 1 == 1))
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(min_vertex_cover(&star(9)), vec![1]);
        let p = path(5);
        assert_eq!(brute_force_size(&p), 2);
        assert_eq!(min_vertex_cover(&p), vec![2, 4]);
        assert!(min_vertex_cover(&Graph::edgeless(4).unwrap()).is_empty());
    }

    #[test]
    fn matches_exhaustive_search() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..150 {
            let n = rng.gen_range(1..=12);
            let g = random_graph(n, rng.gen_range(0.1..0.7), &mut rng);
            let c = min_vertex_cover(&g);
            assert!(is_vertex_cover(&g, &c));
            assert_eq!(c.len(), brute_force_size(&g));
        }
    }
}
