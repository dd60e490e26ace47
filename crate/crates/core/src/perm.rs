use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

/// A bijection of `1..=n`, stored as its image sequence `phi(1), ..., phi(n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n {
                return Err(Error::NotAPermutation(format!("image {x} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::NotAPermutation(format!("image {x} repeated")));
            }
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// Uniformly random permutation.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut images: Vec<usize> = (1..=n).collect();
        images.shuffle(rng);
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch { expected: self.len(), actual: other.len() });
        }
        Ok(Permutation { images: other.images.iter().map(|&x| self.apply(x)).collect() })
    }

    /// Copy with the images of `i` and `j` exchanged.
    pub fn swapped(&self, i: usize, j: usize) -> Self {
        let mut images = self.images.clone();
        images.swap(i - 1, j - 1);
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in &self.images {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![1, 1, 3]).is_err());
        assert!(Permutation::from_images(vec![0, 1, 2]).is_err());
        assert!(Permutation::from_images(vec![1, 2, 4]).is_err());
    }

    #[test]
    fn compose_order() {
        let a = Permutation::from_images(vec![2, 3, 1]).unwrap();
        let b = Permutation::from_images(vec![1, 3, 2]).unwrap();
        // a(b(2)) = a(3) = 1
        assert_eq!(a.compose(&b).unwrap().apply(2), 1);
    }

    proptest! {
        #[test]
        fn inverse_composes_to_identity(n in 1usize..40, seed: u64) {
            let p = Permutation::random(n, &mut ChaCha8Rng::seed_from_u64(seed));
            prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
            prop_assert!(p.inverse().compose(&p).unwrap().is_identity());
        }
    }
}
