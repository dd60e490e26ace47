use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::lab::badic::BAdicSet;
use crate::lab::balanced::BalancedTree;
use crate::lab::cuts::{crossing_edges, Cut};

/// Finds `C` for at most `k` red elements of `[l]`, with `l > a m^{k+2}`:
/// with `X_i = {a m^i + 1, ..., a m^{i+1}}`, `j >= 1` is the first index
/// whose `X_j` holds no red element and `C = a m^j`, the largest element of
/// `X_{j-1}`. Then `a < C < l/m` and `C+1, ..., mC` are all black.
pub fn big_gap(a: u64, m: u64, k: u64, l: u64, reds: &BTreeSet<u64>) -> Result<u64> {
    if a == 0 || k == 0 || m < 2 {
        return Err(Error::InvalidParams(format!("need a, k >= 1 and m >= 2, got a={a}, m={m}, k={k}")));
    }
    let overflow = || Error::InvalidParams("a * m^(k+2) overflows".into());
    let top = u32::try_from(k + 2).ok().and_then(|e| m.checked_pow(e)).and_then(|p| p.checked_mul(a));
    let top = top.ok_or_else(overflow)?;
    if l <= top {
        return Err(Error::InvalidParams(format!("need l > a m^(k+2) = {top}, got l = {l}")));
    }
    if reds.len() as u64 > k {
        return Err(Error::InvalidParams(format!("{} red elements, at most {k} allowed", reds.len())));
    }
    if let Some(&r) = reds.iter().find(|&&r| r == 0 || r > l) {
        return Err(Error::InvalidParams(format!("red element {r} outside 1..={l}")));
    }
    let mut lo = a * m; // a m^j, the largest element of X_{j-1}
    for _ in 1..=k + 1 {
        let hi = lo * m;
        if reds.range(lo + 1..=hi).next().is_none() {
            return Ok(lo);
        }
        lo = hi;
    }
    Err(Error::Invariant("every interval X_1..X_{k+1} holds a red element".into()))
}

/// Properties of a candidate `C` for the gap lemma.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GapWindows {
    pub above_a: bool,
    /// `C < l/m`, i.e. `m C < l`.
    pub below_l_over_m: bool,
    /// `C+1, ..., mC` are black.
    pub short_window_black: bool,
    /// The `mC` elements after `C` that lie in `[l]` are black.
    pub long_window_black: bool,
    /// Some `C'` with `a < C' < l/m` has its `mC'` following elements black.
    pub long_window_exists: bool,
}

impl GapWindows {
    /// The full statement: `a < C < l/m` with the `mC` elements after `C` black.
    pub fn statement_holds(&self) -> bool {
        self.above_a && self.below_l_over_m && self.long_window_black
    }

    /// What the interval argument establishes: `a < C < l/m`, `C+1..=mC` black.
    pub fn interval_argument_holds(&self) -> bool {
        self.above_a && self.below_l_over_m && self.short_window_black
    }
}

fn black(reds: &BTreeSet<u64>, from: u64, to: u64) -> bool {
    from > to || reds.range(from..=to).next().is_none()
}

pub fn gap_windows(a: u64, m: u64, l: u64, reds: &BTreeSet<u64>, c: u64) -> GapWindows {
    let long_end = |c: u64| c.saturating_mul(m + 1).min(l);
    // Only the smallest admissible C' between consecutive reds can work,
    // since the window grows with C'.
    let mut starts: Vec<u64> = vec![a + 1];
    starts.extend(reds.iter().copied().filter(|&r| r > a));
    let long_window_exists = starts
        .into_iter()
        .any(|s| s.saturating_mul(m) < l && black(reds, s + 1, long_end(s)));
    GapWindows {
        above_a: a < c,
        below_l_over_m: c.saturating_mul(m) < l,
        short_window_black: black(reds, c + 1, c.saturating_mul(m)),
        long_window_black: black(reds, c + 1, long_end(c)),
        long_window_exists,
    }
}

/// One evaluation of the cut-ratio estimate for a balanced tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EstimateCheck {
    /// Number of crossing edges.
    pub k: usize,
    pub ratio: BigRational,
    /// `k (b^{-(c+d+1)} + 4/n)`
    pub radius: BigRational,
    /// Distance from `ratio` to `R_{b,c}`.
    pub distance: Option<BigRational>,
    pub holds: bool,
}

/// Checks `r(U) ∈ B(R_{b,c}, k (b^{-(c+d+1)} + 4/n))` for a balanced cut `U`
/// of `T_b(n)` with `k` crossing edges, none in layers `c+1..=c+d`, when
/// the tree has at least `c + d` full levels. Returns `None` when these
/// hypotheses fail or `c = 0`.
pub fn check_cut_ratio_estimate(t: &BalancedTree, u: &Cut, c: usize, d: usize) -> Option<EstimateCheck> {
    if c == 0 || t.full_levels() < c + d || !u.is_balanced() {
        return None;
    }
    let crossing = crossing_edges(t.graph(), u).ok()?;
    let k = crossing.len();
    let layer = |(a, b): (usize, usize)| t.tree.layer_of_edge(a, b).expect("tree edge");
    if k == 0 || crossing.iter().any(|&e| (c + 1..=c + d).contains(&layer(e))) {
        return None;
    }
    let n = t.n() as i64;
    let ratio = BigRational::new(BigInt::from(u.len()), BigInt::from(n));
    let b_pow = num_traits::pow(BigInt::from(t.b), c + d + 1);
    let radius = BigRational::from_integer(BigInt::from(k))
        * (BigRational::new(BigInt::from(1), b_pow) + BigRational::new(BigInt::from(4), BigInt::from(n)));
    let set = BAdicSet::new(t.b as u32, c as u32);
    let distance = set.distance_to(&ratio);
    let holds = distance.as_ref().is_some_and(|dist| *dist < radius);
    Some(EstimateCheck { k, ratio, radius, distance, holds })
}
