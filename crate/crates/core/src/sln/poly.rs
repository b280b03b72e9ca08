use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{int, QMatrix};
use crate::span::fs_shared;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PolyLetter {
    /// `z_{i+1} ∂_i`
    E,
    /// `z_i ∂_{i+1}`
    F,
    /// `z_i ∂_i`
    N,
    /// `n_{i+1} − n_i`
    H,
}

/// A generator of the polynomial representation of `U(sl_n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PolyOp {
    pub letter: PolyLetter,
    pub index: usize,
}

impl PolyOp {
    pub fn new(letter: PolyLetter, index: usize) -> Self {
        PolyOp { letter, index }
    }

    fn check(&self, n: usize) -> Result<()> {
        let max = if self.letter == PolyLetter::N { n } else { n.saturating_sub(1) };
        if self.index == 0 || self.index > max {
            return Err(Error::ColourOutOfRange { index: self.index, max });
        }
        Ok(())
    }

    /// Image of a monomial as (exponent, coefficient) pairs.
    fn apply(&self, k: &[usize]) -> Vec<(Vec<usize>, i64)> {
        let i = self.index - 1;
        let shift = |from: usize, to: usize| -> Vec<(Vec<usize>, i64)> {
            if k[from] == 0 {
                return Vec::new();
            }
            let mut out = k.to_vec();
            out[from] -= 1;
            out[to] += 1;
            vec![(out, k[from] as i64)]
        };
        match self.letter {
            PolyLetter::E => shift(i, i + 1),
            PolyLetter::F => shift(i + 1, i),
            PolyLetter::N => vec![(k.to_vec(), k[i] as i64)],
            PolyLetter::H => vec![(k.to_vec(), k[i + 1] as i64 - k[i] as i64)],
        }
    }
}

impl fmt::Display for PolyOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.letter {
            PolyLetter::E => 'e',
            PolyLetter::F => 'f',
            PolyLetter::N => 'n',
            PolyLetter::H => 'h',
        };
        write!(f, "{c}{}", self.index)
    }
}

impl FromStr for PolyOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownGenerator(s.to_string());
        let mut chars = s.chars();
        let letter = match chars.next().ok_or_else(bad)? {
            'e' | 'E' => PolyLetter::E,
            'f' | 'F' => PolyLetter::F,
            'n' | 'N' => PolyLetter::N,
            'h' | 'H' => PolyLetter::H,
            _ => return Err(bad()),
        };
        let index = chars.as_str().trim_start_matches('_').parse().map_err(|_| bad())?;
        Ok(PolyOp { letter, index })
    }
}

/// An operator on polynomials of degree at most `max_degree` in `n`
/// variables. Rows and columns are exponent vectors, graded and then in
/// descending lex order.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    pub monomials: Vec<Vec<usize>>,
    pub matrix: QMatrix,
    /// Some image left the degree bound and was dropped.
    pub overflow: bool,
}

/// Matrix of the product `word[0] · word[1] · …`, rightmost factor first.
pub fn poly_operator_matrix(word: &[PolyOp], n: usize, max_degree: usize) -> Result<PolyMatrix> {
    for op in word {
        op.check(n)?;
    }
    let fs = fs_shared(max_degree, n);
    let monomials: Vec<Vec<usize>> = (0..fs.len()).map(|i| fs.profile(i).to_vec()).collect();
    let index: BTreeMap<&[usize], usize> = monomials.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
    let mut matrix = QMatrix::zeros(monomials.len(), monomials.len());
    let mut overflow = false;
    for (col, m) in monomials.iter().enumerate() {
        let mut v: BTreeMap<Vec<usize>, i64> = BTreeMap::from([(m.clone(), 1)]);
        for op in word.iter().rev() {
            let mut next = BTreeMap::new();
            for (k, c) in &v {
                for (k2, c2) in op.apply(k) {
                    if c2 != 0 {
                        *next.entry(k2).or_insert(0) += c * c2;
                    }
                }
            }
            next.retain(|_, c| *c != 0);
            v = next;
        }
        for (k, c) in v {
            match index.get(k.as_slice()) {
                Some(&row) => matrix.set(row, col, int(c)),
                None => overflow = true,
            }
        }
    }
    Ok(PolyMatrix {
        monomials,
        matrix,
        overflow,
    })
}
