use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::blocks::SymConvention;
use crate::error::{Error, Result};
use crate::groupoid::Permutation;
use crate::matrix::QMatrix;
use crate::young::{
    class_representative, classes_of, decompose_character, part, specht_generators, to_qmatrix, CharacterVector,
    Multiplicities, Partition, SpechtGenerators, SPECHT_BOUND,
};

/// The `S_k`-action on the multiplicity space `Hom_{S_m}(S^μ, Res S^λ)`,
/// where `S_k` permutes the `k = |λ| − |μ|` added points.
#[derive(Clone, Debug, Serialize)]
pub struct MuAction {
    pub k: usize,
    pub mu: Partition,
    pub lambda: Partition,
    pub dimension: usize,
    /// Images of the adjacent transpositions of `S_k`, as rational matrices
    /// rendered `"p/q"`.
    pub generators: Vec<Vec<Vec<String>>>,
    pub character: CharacterVector,
    pub decomposition: Multiplicities,
    /// The eigenvalue of a transposition on a one-dimensional space.
    pub transposition_scalar: Option<i64>,
}

/// Computes the action by solving for intertwiners `φ` with
/// `ρ_λ(g) φ = φ ρ_μ(g)` for `g ∈ S_m`, then letting `S_k` act by `ρ_λ`.
pub fn explicit_mu_action(k: usize, mu: &Partition, lambda: &Partition) -> Result<MuAction> {
    let n = lambda.size();
    let m = mu.size();
    if m + k != n {
        return Err(Error::SizeMismatch { shape: n, class: m + k });
    }
    if n > SPECHT_BOUND {
        return Err(Error::SizeBound {
            size: n,
            bound: SPECHT_BOUND,
        });
    }
    let rl = specht_generators(lambda, SPECHT_BOUND)?;
    let rm = specht_generators(mu, SPECHT_BOUND)?;
    let (dl, dm) = (rl.dimension(), rm.dimension());
    let unknowns = dl * dm;
    // vec(φ) is row-major: φ[a][b] sits at a·dm + b.
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for g in 0..m.saturating_sub(1) {
        let a = to_qmatrix(&rl.matrices[g]);
        let b = to_qmatrix(&rm.matrices[g]);
        for i in 0..dl {
            for j in 0..dm {
                let mut row = vec![BigRational::from_integer(0.into()); unknowns];
                for t in 0..dl {
                    row[t * dm + j] += a.get(i, t);
                }
                for t in 0..dm {
                    row[i * dm + t] -= b.get(t, j);
                }
                rows.push(row);
            }
        }
    }
    let system = QMatrix::from_fn(rows.len(), unknowns, |i, j| rows[i][j].clone());
    let basis = if rows.is_empty() { QMatrix::identity(unknowns) } else { system.nullspace() };
    let dimension = basis.cols();
    let act = |tau: &Permutation| -> Result<QMatrix> { action_matrix(&rl, dm, &basis, &embed(tau, m)) };
    let generators = (0..k.saturating_sub(1))
        .map(|i| act(&Permutation::transposition(k, i, i + 1)))
        .collect::<Result<Vec<_>>>()?;
    let mut values = Vec::new();
    for class in classes_of(k) {
        let tr = act(&class_representative(&class))?.trace();
        values.push(
            tr.is_integer()
                .then(|| tr.numer().to_i64())
                .flatten()
                .ok_or_else(|| Error::NotGenuineCharacter(format!("trace {tr} is not an integer")))?,
        );
    }
    let character = CharacterVector {
        degree: k,
        classes: classes_of(k),
        values,
    };
    let decomposition = decompose_character(&character)?;
    let transposition_scalar = (dimension == 1 && k >= 2)
        .then(|| generators[0].get(0, 0).numer().to_i64())
        .flatten();
    Ok(MuAction {
        k,
        mu: mu.clone(),
        lambda: lambda.clone(),
        dimension,
        generators: generators
            .iter()
            .map(|g| (0..g.rows()).map(|i| g.row(i).iter().map(crate::report::rational_string).collect()).collect())
            .collect(),
        character,
        decomposition,
        transposition_scalar,
    })
}

/// `τ ∈ S_k` acting on the points `m..m+k`.
fn embed(tau: &Permutation, m: usize) -> Permutation {
    Permutation::identity(m).direct_sum(tau)
}

/// Matrix of `φ ↦ ρ_λ(σ) φ` in the intertwiner basis.
fn action_matrix(rl: &SpechtGenerators, dm: usize, basis: &QMatrix, sigma: &Permutation) -> Result<QMatrix> {
    let r = to_qmatrix(&rl.matrix_of(sigma)?);
    let dl = rl.dimension();
    let images = QMatrix::from_fn(basis.rows(), basis.cols(), |idx, c| {
        let (a, b) = (idx / dm, idx % dm);
        (0..dl).map(|t| r.get(a, t) * basis.get(t * dm + b, c)).sum()
    });
    basis.solve(&images)
}

/// The outcome of computing the action at `(k = 2, (2) → (2,1,1))`, where the
/// two conventions disagree.
#[derive(Clone, Debug, Serialize)]
pub struct ConventionResolution {
    pub scalar: i64,
    pub convention: SymConvention,
}

pub fn resolve_convention() -> Result<ConventionResolution> {
    let action = explicit_mu_action(2, &part(&[2]), &part(&[2, 1, 1]))?;
    let scalar = action
        .transposition_scalar
        .ok_or_else(|| Error::InvalidParameter("expected a one-dimensional space".into()))?;
    let convention = if scalar == -1 {
        SymConvention::SkewModule
    } else {
        SymConvention::OneDimensionalTrivial
    };
    Ok(ConventionResolution { scalar, convention })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linearize::module_block;
    use crate::young::partitions_of;

    #[test]
    fn decisive_entry() {
        let r = resolve_convention().unwrap();
        assert_eq!(r.scalar, -1);
        assert_eq!(r.convention, SymConvention::SkewModule);
    }

    #[test]
    fn two_dimensional_and_regular_entries() {
        let a = explicit_mu_action(2, &part(&[2]), &part(&[3, 1])).unwrap();
        assert_eq!(a.dimension, 2);
        assert_eq!(a.decomposition.0, vec![(part(&[2]), 1), (part(&[1, 1]), 1)]);
        let b = explicit_mu_action(3, &part(&[2, 1]), &part(&[3, 2, 1])).unwrap();
        assert_eq!(b.character.values, vec![6, 0, 0]);
        assert!(explicit_mu_action(2, &part(&[2]), &part(&[3, 2, 1, 1])).is_err());
    }

    #[test]
    fn agrees_with_skew_characters() {
        for (k, i) in [(1, 3), (2, 2), (2, 3), (3, 1), (3, 2)] {
            let mb = module_block(k, i).unwrap();
            for mu in partitions_of(i) {
                for lambda in partitions_of(i + k).into_iter().filter(|l| l.contains(&mu)) {
                    let a = explicit_mu_action(k, &mu, &lambda).unwrap();
                    assert_eq!(&a.character, mb.character(&mu, &lambda).unwrap(), "{mu} -> {lambda}");
                }
            }
        }
    }
}
