use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::young::{
    branch_down, inner_product, irreducible_character, partitions_of, path_count, skew_character,
    tensor_with_permutation_rep, CharacterVector, Partition, SkewShape,
};

/// A block of nonnegative integers with partitions labelling rows and
/// columns. A block from stage `i` to stage `j` has the partitions of `i`
/// as rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimBlock {
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    pub entries: Vec<Vec<u64>>,
}

impl DimBlock {
    pub fn from_fn(rows: Vec<Partition>, cols: Vec<Partition>, mut f: impl FnMut(&Partition, &Partition) -> u64) -> Self {
        let entries = rows.iter().map(|r| cols.iter().map(|c| f(r, c)).collect()).collect();
        DimBlock { rows, cols, entries }
    }

    pub fn identity(n: usize) -> Self {
        let p = partitions_of(n);
        Self::from_fn(p.clone(), p, |a, b| u64::from(a == b))
    }

    pub fn zero(rows: Vec<Partition>, cols: Vec<Partition>) -> Self {
        Self::from_fn(rows, cols, |_, _| 0)
    }

    pub fn get(&self, row: &Partition, col: &Partition) -> Option<u64> {
        let i = self.rows.iter().position(|r| r == row)?;
        let j = self.cols.iter().position(|c| c == col)?;
        Some(self.entries[i][j])
    }

    /// `self` followed by `next`: sums over the shared middle stage.
    pub fn then(&self, next: &DimBlock) -> Result<DimBlock> {
        if self.cols != next.rows {
            return Err(Error::InvalidParameter("blocks do not share a middle stage".into()));
        }
        Ok(DimBlock {
            rows: self.rows.clone(),
            cols: next.cols.clone(),
            entries: self
                .entries
                .iter()
                .map(|row| {
                    (0..next.cols.len())
                        .map(|j| row.iter().zip(&next.entries).map(|(a, nrow)| a * nrow[j]).sum())
                        .collect()
                })
                .collect(),
        })
    }

    pub fn plus(&self, other: &DimBlock) -> Result<DimBlock> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::InvalidParameter("blocks have different labels".into()));
        }
        Ok(DimBlock {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
                .collect(),
        })
    }

    pub fn transpose(&self) -> DimBlock {
        DimBlock::from_fn(self.cols.clone(), self.rows.clone(), |r, c| self.get(c, r).unwrap_or(0))
    }
}

impl fmt::Display for DimBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.cols.iter().map(Partition::to_string).collect();
        writeln!(f, "{:>12} {}", "", labels.join(" "))?;
        for (r, row) in self.rows.iter().zip(&self.entries) {
            let cells: Vec<String> = row
                .iter()
                .zip(&labels)
                .map(|(v, l)| format!("{v:>width$}", width = l.len()))
                .collect();
            writeln!(f, "{:>12} {}", r.to_string(), cells.join(" "))?;
        }
        Ok(())
    }
}

/// `M_{i,j}`: entry `(μ, λ)` counts paths `μ → λ` in Young's lattice.
pub fn path_block(i: usize, j: usize) -> Result<DimBlock> {
    if j < i {
        return Err(Error::InvalidParameter(format!("path block needs from ≤ to, got {i} > {j}")));
    }
    Ok(DimBlock::from_fn(partitions_of(i), partitions_of(j), path_count))
}

/// `N_n`: entry `(λ, μ)` counts the shared lower neighbours of λ and μ.
pub fn number_block(n: usize) -> DimBlock {
    let p = partitions_of(n);
    DimBlock::from_fn(p.clone(), p, |l, m| {
        let below = branch_down(m);
        branch_down(l).iter().filter(|nu| below.contains(nu)).count() as u64
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RegularEquivalenceReport {
    pub n: usize,
    pub number_block: DimBlock,
    /// Entry `(λ, μ)` is the multiplicity of `μ` in `λ ⊗ C^n`.
    pub tensor_block: DimBlock,
    pub passed: bool,
}

/// Compares `N_n` with tensoring by the permutation representation.
pub fn regular_equivalence_check(n: usize) -> Result<RegularEquivalenceReport> {
    if !(1..=6).contains(&n) {
        return Err(Error::InvalidParameter(format!("regular equivalence check needs 1 ≤ n ≤ 6, got {n}")));
    }
    let number = number_block(n);
    let p = partitions_of(n);
    let mut tensors = Vec::with_capacity(p.len());
    for l in &p {
        tensors.push(tensor_with_permutation_rep(l)?);
    }
    let tensor = DimBlock::from_fn(p.clone(), p.clone(), |l, m| {
        let i = p.iter().position(|q| q == l).expect("row label");
        tensors[i].get(m)
    });
    Ok(RegularEquivalenceReport {
        n,
        passed: number == tensor,
        number_block: number,
        tensor_block: tensor,
    })
}

/// `M_{i,i+k}` with the `S_k`-character carried by each multiplicity space.
#[derive(Clone, Debug, Serialize)]
pub struct ModuleBlock {
    pub k: usize,
    pub block: DimBlock,
    pub characters: Vec<Vec<CharacterVector>>,
}

impl ModuleBlock {
    pub fn character(&self, row: &Partition, col: &Partition) -> Option<&CharacterVector> {
        let i = self.block.rows.iter().position(|r| r == row)?;
        let j = self.block.cols.iter().position(|c| c == col)?;
        Some(&self.characters[i][j])
    }
}

/// The multiplicity space at `(μ, λ)` is the skew module of `λ/μ`, with
/// `S_k` reordering the added boxes.
pub fn module_block(k: usize, i: usize) -> Result<ModuleBlock> {
    let block = path_block(i, i + k)?;
    let characters = block
        .rows
        .iter()
        .map(|mu| {
            block
                .cols
                .iter()
                .map(|lambda| match SkewShape::new(lambda.clone(), mu.clone()) {
                    Ok(s) => skew_character(&s),
                    Err(_) => CharacterVector::from_fn(k, |_| 0),
                })
                .collect()
        })
        .collect();
    Ok(ModuleBlock { k, block, characters })
}

/// How `S_k` acts on one-dimensional multiplicity spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SymConvention {
    /// Skew Specht modules throughout; a vertical strip carries the sign.
    SkewModule,
    /// Every one-dimensional space is trivial; larger spaces as in
    /// `SkewModule`.
    OneDimensionalTrivial,
}

fn isotypic_block(k: usize, i: usize, convention: SymConvention, sign: bool) -> Result<DimBlock> {
    let mb = module_block(k, i)?;
    let target = if sign {
        irreducible_character(&Partition::new(vec![1; k])?)
    } else {
        irreducible_character(&Partition::new(vec![k])?)
    };
    let mut entries = Vec::with_capacity(mb.block.rows.len());
    for (drow, crow) in mb.block.entries.iter().zip(&mb.characters) {
        let mut out = Vec::with_capacity(drow.len());
        for (&d, chi) in drow.iter().zip(crow) {
            let m = match convention {
                SymConvention::OneDimensionalTrivial if d == 1 => u64::from(!sign),
                _ => inner_product(chi, &target)? as u64,
            };
            out.push(m);
        }
        entries.push(out);
    }
    Ok(DimBlock {
        rows: mb.block.rows,
        cols: mb.block.cols,
        entries,
    })
}

/// Multiplicity of the trivial `S_k`-representation in each entry of
/// [`module_block`], the image of the symmetrizer.
pub fn symmetrized_block(k: usize, i: usize, convention: SymConvention) -> Result<DimBlock> {
    isotypic_block(k, i, convention, false)
}

/// Multiplicity of the sign representation, the image of the antisymmetrizer.
pub fn antisymmetrized_block(k: usize, i: usize, convention: SymConvention) -> Result<DimBlock> {
    isotypic_block(k, i, convention, true)
}

/// Strip indicators from stage `i` to `i + k`.
pub fn strip_block(k: usize, i: usize, direction: crate::young::Strip) -> DimBlock {
    let strips: Vec<(Partition, Vec<Partition>)> = partitions_of(i)
        .into_iter()
        .map(|mu| {
            let s = crate::young::pieri_strips(&mu, k, direction);
            (mu, s)
        })
        .collect();
    DimBlock::from_fn(partitions_of(i), partitions_of(i + k), |mu, lambda| {
        let list = &strips.iter().find(|(m, _)| m == mu).expect("row label").1;
        u64::from(list.contains(lambda))
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct KhovanovStage {
    pub stage: usize,
    pub lhs: DimBlock,
    pub rhs: DimBlock,
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct KhovanovReport {
    pub n: usize,
    pub m: usize,
    pub stage_max: usize,
    pub stages: Vec<KhovanovStage>,
    pub passed: bool,
}

/// Symmetrized raising by `k` from stage `s`; identity when `k = 0`.
fn raise_sym(k: usize, s: usize, sign: bool) -> Result<DimBlock> {
    if k == 0 {
        return Ok(DimBlock::identity(s));
    }
    if sign {
        antisymmetrized_block(k, s, SymConvention::SkewModule)
    } else {
        symmetrized_block(k, s, SymConvention::SkewModule)
    }
}

/// Symmetrized lowering by `k` from stage `s`, the transpose of raising;
/// `None` when it would leave the lattice.
fn lower_sym(k: usize, s: usize) -> Result<Option<DimBlock>> {
    if k > s {
        return Ok(None);
    }
    Ok(Some(raise_sym(k, s - k, false)?.transpose()))
}

/// Checks `S^n_- Λ^m_+ ≅ Λ^m_+ S^n_- ⊕ Λ^{m-1}_+ S^{n-1}_-` blockwise on every
/// source stage `s` with `s + m ≤ stage_max`, where `Λ^m_+` raises by a
/// vertical strip and `S^n_-` lowers by a horizontal strip (operators act
/// right to left).
pub fn khovanov_iso_check(n: usize, m: usize, stage_max: usize) -> Result<KhovanovReport> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidParameter("n and m must be at least 1".into()));
    }
    let mut stages = Vec::new();
    for s in 0..=stage_max.saturating_sub(m) {
        if s + m < n {
            continue;
        }
        let end = s + m - n;
        let zero = || DimBlock::zero(partitions_of(s), partitions_of(end));
        let lhs = match lower_sym(n, s + m)? {
            Some(down) => raise_sym(m, s, true)?.then(&down)?,
            None => zero(),
        };
        let first = match lower_sym(n, s)? {
            Some(down) => down.then(&raise_sym(m, s - n, true)?)?,
            None => zero(),
        };
        let second = match lower_sym(n - 1, s)? {
            Some(down) => down.then(&raise_sym(m - 1, s + 1 - n, true)?)?,
            None => zero(),
        };
        let rhs = first.plus(&second)?;
        stages.push(KhovanovStage {
            stage: s,
            equal: lhs == rhs,
            lhs,
            rhs,
        });
    }
    Ok(KhovanovReport {
        n,
        m,
        stage_max,
        passed: stages.iter().all(|s| s.equal),
        stages,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::young::{decompose_character, part, Strip};

    fn rows(b: &DimBlock) -> Vec<Vec<u64>> {
        b.entries.clone()
    }

    #[test]
    fn printed_path_blocks() {
        assert_eq!(rows(&path_block(2, 3).unwrap()), vec![vec![1, 1, 0], vec![0, 1, 1]]);
        assert_eq!(rows(&path_block(2, 4).unwrap()), vec![vec![1, 2, 1, 1, 0], vec![0, 1, 1, 2, 1]]);
        let m36 = path_block(3, 6).unwrap();
        assert_eq!((m36.rows.len(), m36.cols.len()), (3, 11));
        assert_eq!(m36.get(&part(&[2, 1]), &part(&[3, 2, 1])), Some(6));
        assert!(path_block(3, 2).is_err());
    }

    #[test]
    fn blocks_compose_stagewise() {
        for i in 0..4 {
            for j in i..=6 {
                let mut acc = DimBlock::identity(i);
                for s in i..j {
                    acc = acc.then(&path_block(s, s + 1).unwrap()).unwrap();
                }
                assert_eq!(acc, path_block(i, j).unwrap());
            }
        }
    }

    #[test]
    fn number_blocks() {
        assert_eq!(rows(&number_block(0)), vec![vec![0]]);
        assert_eq!(rows(&number_block(1)), vec![vec![1]]);
        let n4 = number_block(4);
        let diag: Vec<u64> = (0..5).map(|i| n4.entries[i][i]).collect();
        assert_eq!(diag, vec![1, 2, 1, 2, 1]);
        assert_eq!(n4, n4.transpose());
        for n in 1..=5 {
            // A·A† = A†·A + 1 at the level of blocks.
            let up_down = path_block(n, n + 1).unwrap().then(&path_block(n, n + 1).unwrap().transpose()).unwrap();
            assert_eq!(up_down, number_block(n).plus(&DimBlock::identity(n)).unwrap());
        }
    }

    #[test]
    fn regular_equivalence() {
        for n in 1..=5 {
            assert!(regular_equivalence_check(n).unwrap().passed);
        }
        assert!(regular_equivalence_check(0).is_err());
    }

    #[test]
    fn module_block_characters() {
        let mb = module_block(2, 2).unwrap();
        let chi = mb.character(&part(&[2]), &part(&[3, 1])).unwrap();
        assert_eq!(chi.values, vec![2, 0]);
        assert_eq!(decompose_character(chi).unwrap().0, vec![(part(&[2]), 1), (part(&[1, 1]), 1)]);
        let mb3 = module_block(3, 3).unwrap();
        let chi = mb3.character(&part(&[2, 1]), &part(&[3, 2, 1])).unwrap();
        assert_eq!(chi.values, vec![6, 0, 0]);
        let mb0 = module_block(0, 3).unwrap();
        assert_eq!(mb0.character(&part(&[2, 1]), &part(&[2, 1])).unwrap().values, vec![1]);
    }

    #[test]
    fn symmetrizer_blocks() {
        let s = symmetrized_block(2, 2, SymConvention::SkewModule).unwrap();
        assert_eq!(rows(&s), vec![vec![1, 1, 1, 0, 0], vec![0, 1, 0, 1, 0]]);
        let a = antisymmetrized_block(2, 2, SymConvention::SkewModule).unwrap();
        assert_eq!(rows(&a), vec![vec![0, 1, 0, 1, 0], vec![0, 0, 1, 1, 1]]);
        let s_alt = symmetrized_block(2, 2, SymConvention::OneDimensionalTrivial).unwrap();
        assert_eq!(rows(&s_alt), vec![vec![1, 1, 1, 1, 0], vec![0, 1, 1, 1, 1]]);
        let a_alt = antisymmetrized_block(2, 2, SymConvention::OneDimensionalTrivial).unwrap();
        assert_eq!(rows(&a_alt), vec![vec![0, 1, 0, 0, 0], vec![0, 0, 0, 1, 0]]);
        for i in 0..=4 {
            assert_eq!(symmetrized_block(1, i, SymConvention::SkewModule).unwrap(), path_block(i, i + 1).unwrap());
            assert_eq!(antisymmetrized_block(1, i, SymConvention::SkewModule).unwrap(), path_block(i, i + 1).unwrap());
            for k in 0..=3 {
                let conv = SymConvention::SkewModule;
                assert_eq!(symmetrized_block(k, i, conv).unwrap(), strip_block(k, i, Strip::Horizontal));
                assert_eq!(antisymmetrized_block(k, i, conv).unwrap(), strip_block(k, i, Strip::Vertical));
            }
        }
    }

    #[test]
    fn khovanov_blocks() {
        for (n, m) in [(1, 1), (1, 2), (2, 1), (2, 2), (3, 2)] {
            let r = khovanov_iso_check(n, m, 6).unwrap();
            assert!(r.passed, "({n},{m})");
            assert!(!r.stages.is_empty());
        }
    }
}
