//! Partitions, Young's lattice and symmetric-group characters.

mod character;
mod specht;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};

pub use character::{
    classes_of, decompose_character, inner_product, irreducible_character, mn_character, skew_character,
    tensor_with_permutation_rep, centralizer_order, CharacterVector, Multiplicities,
};
pub use specht::{class_representative, mat_mul, specht_generators, to_qmatrix, IntMatrix, SpechtGenerators, SPECHT_BOUND};

/// A partition, stored as weakly decreasing positive rows.
///
/// The order is descending lexicographic: `(4) < (3,1) < (2,2) < …`, the
/// order rows and columns of every block use.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Default)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Partition {
    /// Trailing zeros are dropped; rows must be weakly decreasing.
    pub fn new(mut rows: Vec<usize>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0] < w[1]) || rows.contains(&0) {
            return Err(Error::InvalidParameter(format!("{rows:?} is not a partition")));
        }
        Ok(Partition(rows))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Row `i`, zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Rowwise containment of diagrams.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.row(0);
        Partition((0..cols).map(|c| self.0.iter().filter(|&&r| r > c).count()).collect())
    }

    /// Multiplicities `m_i` of each part `i ≥ 1`.
    pub fn part_counts(&self) -> Vec<usize> {
        let mut m = vec![0; self.row(0) + 1];
        for &r in &self.0 {
            m[r] += 1;
        }
        m
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Shorthand for literal partitions; panics on invalid input.
pub fn part(rows: &[usize]) -> Partition {
    Partition::new(rows.to_vec()).expect("literal partition")
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidParameter(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Number of standard fillings, the dimension of the skew module.
    pub fn dimension(&self) -> u64 {
        path_count(&self.inner, &self.outer)
    }

    /// No two boxes in one column.
    pub fn is_horizontal_strip(&self) -> bool {
        (0..self.outer.len()).all(|i| i + 1 >= self.outer.len() || self.outer.row(i + 1) <= self.inner.row(i))
    }

    /// No two boxes in one row.
    pub fn is_vertical_strip(&self) -> bool {
        (0..self.outer.len()).all(|i| self.outer.row(i) - self.inner.row(i) <= 1)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// Partitions of `n` in descending lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for first in (1..=n.min(max)).rev() {
            prefix.push(first);
            go(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Single-box removals, in descending lexicographic order.
pub fn branch_down(lambda: &Partition) -> Vec<Partition> {
    let rows = lambda.rows();
    let mut out: Vec<Partition> = (0..rows.len())
        .filter(|&i| i + 1 == rows.len() || rows[i] > rows[i + 1])
        .map(|i| {
            let mut r = rows.to_vec();
            r[i] -= 1;
            Partition::new(r).expect("removing a corner keeps a partition")
        })
        .collect();
    out.sort();
    out
}

/// Single-box additions, in descending lexicographic order.
pub fn branch_up(lambda: &Partition) -> Vec<Partition> {
    let rows = lambda.rows();
    let mut out: Vec<Partition> = (0..=rows.len())
        .filter(|&i| i == 0 || lambda.row(i) < rows[i - 1])
        .map(|i| {
            let mut r = rows.to_vec();
            if i == r.len() {
                r.push(1);
            } else {
                r[i] += 1;
            }
            Partition(r)
        })
        .collect();
    out.sort();
    out
}

/// Saturated chains `mu = λ⁰ ⊂ λ¹ ⊂ … ⊂ λ` in Young's lattice.
pub fn path_count(mu: &Partition, lambda: &Partition) -> u64 {
    static MEMO: OnceLock<Mutex<HashMap<(Partition, Partition), u64>>> = OnceLock::new();
    if !lambda.contains(mu) {
        return 0;
    }
    if lambda == mu {
        return 1;
    }
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (mu.clone(), lambda.clone());
    if let Some(&v) = memo.lock().unwrap_or_else(|e| e.into_inner()).get(&key) {
        return v;
    }
    let v = branch_down(lambda).iter().map(|nu| path_count(mu, nu)).sum();
    memo.lock().unwrap_or_else(|e| e.into_inner()).insert(key, v);
    v
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strip {
    Horizontal,
    Vertical,
}

/// All `λ ⊇ mu` with `|λ/mu| = k` forming a strip of the given direction.
pub fn pieri_strips(mu: &Partition, k: usize, direction: Strip) -> Vec<Partition> {
    partitions_of(mu.size() + k)
        .into_iter()
        .filter(|lambda| {
            lambda.contains(mu) && {
                let s = SkewShape {
                    outer: lambda.clone(),
                    inner: mu.clone(),
                };
                match direction {
                    Strip::Horizontal => s.is_horizontal_strip(),
                    Strip::Vertical => s.is_vertical_strip(),
                }
            }
        })
        .collect()
}

/// Young's lattice up to `max` boxes.
#[derive(Clone, Debug, Serialize)]
pub struct YoungLattice {
    pub nodes: Vec<Partition>,
    /// Box additions `(from, to)`.
    pub edges: Vec<(Partition, Partition)>,
}

pub fn young_lattice(max: usize) -> YoungLattice {
    let nodes: Vec<Partition> = (0..=max).flat_map(partitions_of).collect();
    let edges = nodes
        .iter()
        .filter(|p| p.size() < max)
        .flat_map(|p| branch_up(p).into_iter().map(move |q| (p.clone(), q)))
        .collect();
    YoungLattice { nodes, edges }
}
