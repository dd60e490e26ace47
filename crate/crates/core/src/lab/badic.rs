use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `R_{b,c}`: the rationals `a / b^c` with `1/3 <= a / b^c <= 2/3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BAdicSet {
    pub b: u32,
    pub c: u32,
    /// Sorted numerators over the denominator `b^c`.
    pub numerators: Vec<BigInt>,
}

impl BAdicSet {
    pub fn new(b: u32, c: u32) -> Self {
        let den = Self::den_of(b, c);
        // ceil(den / 3) ..= floor(2 den / 3)
        let lo = (&den + BigInt::from(2)).div_floor(&BigInt::from(3));
        let hi = (&den * BigInt::from(2)).div_floor(&BigInt::from(3));
        let mut numerators = Vec::new();
        let mut a = lo;
        while a <= hi {
            numerators.push(a.clone());
            a += 1;
        }
        BAdicSet { b, c, numerators }
    }

    fn den_of(b: u32, c: u32) -> BigInt {
        num_traits::pow(BigInt::from(b), c as usize)
    }

    pub fn denominator(&self) -> BigInt {
        Self::den_of(self.b, self.c)
    }

    pub fn len(&self) -> usize {
        self.numerators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numerators.is_empty()
    }

    pub fn elements(&self) -> Vec<BigRational> {
        let den = self.denominator();
        self.numerators.iter().map(|a| BigRational::new(a.clone(), den.clone())).collect()
    }

    /// Infimum of `|x - y|` over `x` in `self`, `y` in `other`; `None` stands
    /// for `+inf` when either set is empty.
    pub fn distance(&self, other: &BAdicSet) -> Option<BigRational> {
        if self.is_empty() || other.is_empty() {
            return None;
        }
        let (d1, d2) = (self.denominator(), other.denominator());
        let common = d1.lcm(&d2);
        let (s1, s2) = (&common / &d1, &common / &d2);
        let xs: Vec<BigInt> = self.numerators.iter().map(|a| a * &s1).collect();
        let ys: Vec<BigInt> = other.numerators.iter().map(|a| a * &s2).collect();
        let (mut i, mut j) = (0, 0);
        let mut best: Option<BigInt> = None;
        while i < xs.len() && j < ys.len() {
            let gap = (&xs[i] - &ys[j]).abs();
            if best.as_ref().is_none_or(|b| gap < *b) {
                best = Some(gap);
            }
            if xs[i] < ys[j] {
                i += 1;
            } else {
                j += 1;
            }
        }
        best.map(|g| BigRational::new(g, common))
    }

    /// Distance from a point; `None` when the set is empty.
    pub fn distance_to(&self, r: &BigRational) -> Option<BigRational> {
        let den = BigRational::from_integer(self.denominator());
        self.numerators.iter().map(|a| (BigRational::from_integer(a.clone()) / &den - r).abs()).min()
    }

    pub fn intersects(&self, other: &BAdicSet) -> bool {
        self.distance(other).is_some_and(|d| d.is_zero())
    }
}

/// Whether `r` lies in the open ball `B(X, radius)`: some point of `X` is
/// closer than `radius`. The ball around the empty set is empty.
pub fn in_ball(r: &BigRational, x: &BAdicSet, radius: &BigRational) -> bool {
    x.distance_to(r).is_some_and(|d| d < *radius)
}

/// Exact comparison of `d(R_{2,i}, R_{3,j})` with `3^{-(i+j)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BadicReport {
    pub i: u32,
    pub j: u32,
    /// `None` means `+inf` (an empty set).
    pub distance: Option<BigRational>,
    pub bound: BigRational,
    pub disjoint: bool,
    pub holds: bool,
}

pub fn badic_distance(i: u32, j: u32) -> BadicReport {
    let x = BAdicSet::new(2, i);
    let y = BAdicSet::new(3, j);
    let distance = x.distance(&y);
    let bound = BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(3), (i + j) as usize));
    let disjoint = !x.intersects(&y);
    let holds = disjoint && distance.as_ref().is_none_or(|d| *d >= bound);
    BadicReport { i, j, distance, bound, disjoint, holds }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn small_sets() {
        assert_eq!(BAdicSet::new(2, 1).elements(), vec![q(1, 2)]);
        assert_eq!(BAdicSet::new(3, 1).elements(), vec![q(1, 3), q(2, 3)]);
        assert!(BAdicSet::new(2, 0).is_empty());
        assert!(BAdicSet::new(3, 0).is_empty());
        assert_eq!(BAdicSet::new(2, 3).elements(), vec![q(3, 8), q(4, 8), q(5, 8)]);
    }

    #[test]
    fn distance_examples() {
        let r = badic_distance(1, 1);
        assert_eq!(r.distance, Some(q(1, 6)));
        assert_eq!(r.bound, q(1, 9));
        assert!(r.holds);
        let r = badic_distance(0, 0);
        assert_eq!(r.distance, None);
        assert!(r.holds);
        let r = badic_distance(4, 4);
        assert!(r.holds && r.disjoint);
        assert!(r.distance.unwrap() >= q(1, 6561));
    }

    #[test]
    fn all_small_pairs() {
        for i in 0..=8 {
            for j in 0..=8 {
                let r = badic_distance(i, j);
                assert!(r.holds, "i={i} j={j}");
                if let Some(d) = r.distance {
                    // all points are distinct multiples of 1/(2^i 3^j)
                    let unit = q(1, 2i64.pow(i) * 3i64.pow(j));
                    assert!(d >= unit);
                }
            }
        }
    }

    #[test]
    fn distance_against_brute_force() {
        for (i, j) in [(2, 1), (3, 2), (5, 3)] {
            let (x, y) = (BAdicSet::new(2, i), BAdicSet::new(3, j));
            let brute = x
                .elements()
                .iter()
                .flat_map(|a| y.elements().into_iter().map(move |b| (a - b).abs()))
                .min();
            assert_eq!(x.distance(&y), brute);
        }
    }

    #[test]
    fn same_base_sets_intersect() {
        assert!(BAdicSet::new(2, 2).intersects(&BAdicSet::new(2, 3)));
    }

    #[test]
    fn balls() {
        let x = BAdicSet::new(3, 1);
        assert!(in_ball(&q(2, 5), &x, &q(1, 10)));
        assert!(!in_ball(&q(1, 2), &x, &q(1, 6)));
        assert!(!in_ball(&q(1, 2), &BAdicSet::new(2, 0), &q(10, 1)));
    }
}
