use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection of `{0, …, degree−1}` stored by its image sequence.
///
/// Composition follows function notation: `p.compose(&q)` is `p ∘ q`, so `q`
/// acts first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Validating constructor.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::NotAPermutation(images));
            }
            seen[i] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i as u16).collect(),
        })
    }

    pub fn transposition(degree: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(degree);
        p.images.swap(a, b);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "composing permutations of different degree");
        Permutation {
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u16;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other ∘ self⁻¹`.
    pub fn conjugate(&self, other: &Permutation) -> Permutation {
        self.compose(other).compose(&self.inverse())
    }

    /// Acts as `self` on the first block and `other` on the second.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let shift = self.images.len() as u16;
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&i| i + shift));
        Permutation { images }
    }

    /// Splits a permutation that preserves `[0, at)` into its two blocks.
    pub fn split(&self, at: usize) -> (Permutation, Permutation) {
        let left = self.images[..at].to_vec();
        let right = self.images[at..].iter().map(|&i| i - at as u16).collect();
        (Permutation { images: left }, Permutation { images: right })
    }

    /// Restriction to the block `[start, start + len)`, which must be invariant.
    pub fn block(&self, start: usize, len: usize) -> Permutation {
        Permutation {
            images: self.images[start..start + len]
                .iter()
                .map(|&i| i - start as u16)
                .collect(),
        }
    }

    /// Inserts a new fixed point at position `at`, shifting later points up.
    pub fn insert_fixed(&self, at: usize) -> Permutation {
        let shift = |i: u16| if (i as usize) >= at { i + 1 } else { i };
        let mut images: Vec<u16> = self.images.iter().map(|&i| shift(i)).collect();
        images.insert(at, at as u16);
        Permutation { images }
    }

    /// Extends by fixed points up to `degree`.
    pub fn extend(&self, degree: usize) -> Permutation {
        let mut images = self.images.clone();
        images.extend(self.images.len() as u16..degree as u16);
        Permutation { images }
    }

    /// Number of fixed points.
    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|(i, &j)| *i == j as usize).count()
    }

    pub fn order(&self) -> usize {
        self.cycle_type().into_iter().fold(1, num_integer::lcm)
    }

    /// Cycle lengths in weakly decreasing order (fixed points included).
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    pub fn sign(&self) -> i64 {
        let odd = self.cycle_type().iter().filter(|&&l| l % 2 == 0).count();
        if odd % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, i) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "]")
    }
}
