use serde::Serialize;

use super::{CharacterVector, Partition};
use crate::error::{Error, Result};
use crate::groupoid::Permutation;
use crate::matrix::{int, QMatrix};

/// Default bound on `|λ|` for explicit modules.
pub const SPECHT_BOUND: usize = 6;

pub type IntMatrix = Vec<Vec<i64>>;

/// Young's natural representation of `S_n` on the standard polytabloids
/// of shape `λ`. Entries `0..n` fill the tableaux; `matrices[i]` is the
/// image of the transposition `(i, i+1)`.
#[derive(Clone, Debug, Serialize)]
pub struct SpechtGenerators {
    pub shape: Partition,
    /// Standard tableaux indexing the basis, as rows of entries.
    pub tableaux: Vec<Vec<Vec<usize>>>,
    pub matrices: Vec<IntMatrix>,
    #[serde(skip)]
    basis_inverse: QMatrix,
}

pub fn specht_generators(shape: &Partition, bound: usize) -> Result<SpechtGenerators> {
    let n = shape.size();
    if n > bound {
        return Err(Error::SizeBound { size: n, bound });
    }
    let tableaux = standard_tableaux(shape);
    let mut module = SpechtGenerators {
        shape: shape.clone(),
        tableaux,
        matrices: Vec::new(),
        basis_inverse: QMatrix::zeros(0, 0),
    };
    let d = module.tableaux.len();
    let basis = QMatrix::from_fn(d, d, |i, j| int(module.coefficient(&module.tableaux[j], i)));
    module.basis_inverse = basis.solve(&QMatrix::identity(d))?;
    module.matrices = (0..n.saturating_sub(1))
        .map(|i| module.matrix_of(&Permutation::transposition(n, i, i + 1)))
        .collect::<Result<_>>()?;
    Ok(module)
}

impl SpechtGenerators {
    pub fn dimension(&self) -> usize {
        self.tableaux.len()
    }

    pub fn degree(&self) -> usize {
        self.shape.size()
    }

    /// Coefficient of the tabloid of basis tableau `i` in the polytabloid
    /// of `t`.
    fn coefficient(&self, t: &[Vec<usize>], i: usize) -> i64 {
        let target = row_of(&self.tableaux[i], self.degree());
        let width = self.shape.row(0);
        // Each column must be permuted so that its entries land in the rows
        // the target tabloid prescribes; the permutation is forced if it exists.
        let mut sign = 1;
        for c in 0..width {
            let col: Vec<usize> = t.iter().take_while(|row| row.len() > c).map(|row| row[c]).collect();
            let mut images = vec![0; col.len()];
            let mut used = vec![false; col.len()];
            for (r, &x) in col.iter().enumerate() {
                let dest = target[x];
                if dest >= col.len() || used[dest] {
                    return 0;
                }
                used[dest] = true;
                images[r] = dest;
            }
            sign *= Permutation::from_images(images).expect("images form a bijection").sign();
        }
        sign
    }

    /// `ρ(σ)` on the standard basis, from `σ·e_T = e_{σT}`.
    pub fn matrix_of(&self, sigma: &Permutation) -> Result<IntMatrix> {
        let n = self.degree();
        if sigma.degree() != n {
            return Err(Error::DegreeMismatch {
                expected: n,
                found: sigma.degree(),
            });
        }
        let d = self.dimension();
        let images = QMatrix::from_fn(d, d, |i, j| {
            let moved: Vec<Vec<usize>> = self.tableaux[j]
                .iter()
                .map(|row| row.iter().map(|&x| sigma.apply(x)).collect())
                .collect();
            int(self.coefficient(&moved, i))
        });
        let coords = &self.basis_inverse * &images;
        coords
            .to_integers()
            .ok_or_else(|| Error::InvalidParameter("non-integral straightening".into()))
    }

    pub fn character(&self) -> Result<CharacterVector> {
        let n = self.degree();
        let mut out = Vec::new();
        for class in super::classes_of(n) {
            let m = self.matrix_of(&class_representative(&class))?;
            out.push((0..m.len()).map(|i| m[i][i]).sum());
        }
        Ok(CharacterVector {
            degree: n,
            classes: super::classes_of(n),
            values: out,
        })
    }

    /// Coxeter relations on the generator matrices.
    pub fn satisfies_coxeter(&self) -> bool {
        let d = self.dimension();
        let id: IntMatrix = (0..d).map(|i| (0..d).map(|j| i64::from(i == j)).collect()).collect();
        let s = &self.matrices;
        (0..s.len()).all(|i| {
            mat_mul(&s[i], &s[i]) == id
                && (i + 1 >= s.len() || {
                    let p = mat_mul(&s[i], &s[i + 1]);
                    mat_mul(&mat_mul(&p, &p), &p) == id
                })
                && (i + 2..s.len()).all(|j| mat_mul(&s[i], &s[j]) == mat_mul(&s[j], &s[i]))
        })
    }
}

/// A permutation with the given cycle type, cycles on consecutive points.
pub fn class_representative(class: &Partition) -> Permutation {
    let n = class.size();
    let mut images: Vec<usize> = (0..n).collect();
    let mut start = 0;
    for &len in class.rows() {
        for i in 0..len {
            images[start + i] = start + (i + 1) % len;
        }
        start += len;
    }
    Permutation::from_images(images).expect("cycles give a permutation")
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| row.iter().zip(b).map(|(x, brow)| x * brow[j]).sum())
                .collect()
        })
        .collect()
}

pub fn to_qmatrix(a: &IntMatrix) -> QMatrix {
    let cols = a.first().map_or(0, Vec::len);
    QMatrix::from_fn(a.len(), cols, |i, j| int(a[i][j]))
}

fn row_of(t: &[Vec<usize>], n: usize) -> Vec<usize> {
    let mut rows = vec![0; n];
    for (r, row) in t.iter().enumerate() {
        for &x in row {
            rows[x] = r;
        }
    }
    rows
}

/// Standard tableaux, generated by placing `0, 1, …` along paths in
/// Young's lattice; earlier rows are tried first.
fn standard_tableaux(shape: &Partition) -> Vec<Vec<Vec<usize>>> {
    fn go(shape: &Partition, next: usize, t: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if next == shape.size() {
            out.push(t.clone());
            return;
        }
        for i in 0..shape.len() {
            let len = t[i].len();
            if len < shape.row(i) && (i == 0 || t[i - 1].len() > len) {
                t[i].push(next);
                go(shape, next + 1, t, out);
                t[i].pop();
            }
        }
    }
    let mut out = Vec::new();
    go(shape, 0, &mut vec![Vec::new(); shape.len()], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::super::{irreducible_character, part, partitions_of};
    use super::*;
    use crate::groupoid::PermutationGroup;

    #[test]
    fn small_modules() {
        let sign = specht_generators(&part(&[1, 1]), SPECHT_BOUND).unwrap();
        assert_eq!(sign.matrices, vec![vec![vec![-1]]]);
        let triv = specht_generators(&part(&[3]), SPECHT_BOUND).unwrap();
        assert!(triv.matrices.iter().all(|m| m == &vec![vec![1]]));
        let std = specht_generators(&part(&[2, 1]), SPECHT_BOUND).unwrap();
        assert_eq!(std.dimension(), 2);
        assert_eq!(std.character().unwrap().values, vec![2, 0, -1]);
        assert!(matches!(
            specht_generators(&part(&[4, 3]), SPECHT_BOUND),
            Err(Error::SizeBound { size: 7, bound: 6 })
        ));
        let empty = specht_generators(&Partition::empty(), SPECHT_BOUND).unwrap();
        assert_eq!(empty.dimension(), 1);
    }

    #[test]
    fn coxeter_and_traces_up_to_five() {
        for n in 1..=5 {
            for lambda in partitions_of(n) {
                let m = specht_generators(&lambda, SPECHT_BOUND).unwrap();
                assert!(m.satisfies_coxeter(), "{lambda}");
                assert_eq!(m.character().unwrap(), irreducible_character(&lambda), "{lambda}");
            }
        }
    }

    #[test]
    fn matrix_of_is_multiplicative() {
        let m = specht_generators(&part(&[3, 2]), SPECHT_BOUND).unwrap();
        let s = PermutationGroup::symmetric(5);
        for a in s.elements().iter().step_by(7) {
            for b in s.elements().iter().step_by(11) {
                let ab = m.matrix_of(&a.compose(b)).unwrap();
                assert_eq!(ab, mat_mul(&m.matrix_of(a).unwrap(), &m.matrix_of(b).unwrap()));
            }
        }
    }
}
