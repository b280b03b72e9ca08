use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use super::{partitions_of, Partition, SkewShape};
use crate::error::{Error, Result};

/// Conjugacy classes of `S_k`, from the identity class `(1^k)` up to the
/// `k`-cycle (ascending lexicographic).
pub fn classes_of(k: usize) -> Vec<Partition> {
    let mut c = partitions_of(k);
    c.reverse();
    c
}

/// `z_ρ = Π i^{m_i} m_i!`, the order of the centralizer of a permutation of
/// cycle type `ρ`.
pub fn centralizer_order(rho: &Partition) -> u128 {
    rho.part_counts()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &m)| (i as u128).pow(m as u32) * (1..=m as u128).product::<u128>())
        .product()
}

/// A class function on `S_k` with integer values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterVector {
    pub degree: usize,
    pub classes: Vec<Partition>,
    pub values: Vec<i64>,
}

impl CharacterVector {
    pub fn from_fn(degree: usize, mut f: impl FnMut(&Partition) -> i64) -> Self {
        let classes = classes_of(degree);
        let values = classes.iter().map(&mut f).collect();
        CharacterVector { degree, classes, values }
    }

    pub fn value(&self, class: &Partition) -> Option<i64> {
        self.classes.iter().position(|c| c == class).map(|i| self.values[i])
    }

    /// Value at the identity class.
    pub fn dimension(&self) -> i64 {
        self.values[0]
    }
}

impl fmt::Display for CharacterVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.values.iter().map(i64::to_string).collect();
        write!(f, "({})", v.join(","))
    }
}

/// Nonzero multiplicities, in descending lexicographic order of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Default)]
pub struct Multiplicities(pub Vec<(Partition, u64)>);

impl Multiplicities {
    pub fn get(&self, p: &Partition) -> u64 {
        self.0.iter().find(|(q, _)| q == p).map_or(0, |(_, m)| *m)
    }
}

impl fmt::Display for Multiplicities {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(p, m)| format!("{p}:{m}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

type MnKey = (Partition, Partition, Partition);

/// Murnaghan–Nakayama value `χ^{outer/inner}(class)`.
pub fn mn_character(shape: &SkewShape, class: &Partition) -> Result<i64> {
    if shape.size() != class.size() {
        return Err(Error::SizeMismatch {
            shape: shape.size(),
            class: class.size(),
        });
    }
    static MEMO: OnceLock<Mutex<HashMap<MnKey, i64>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    Ok(mn(&shape.outer, &shape.inner, class.rows(), memo))
}

fn mn(outer: &Partition, inner: &Partition, class: &[usize], memo: &Mutex<HashMap<MnKey, i64>>) -> i64 {
    let Some((&r, rest)) = class.split_first() else {
        return i64::from(outer == inner);
    };
    let key = (outer.clone(), inner.clone(), Partition(class.to_vec()));
    if let Some(&v) = memo.lock().unwrap_or_else(|e| e.into_inner()).get(&key) {
        return v;
    }
    let mut total = 0;
    for (smaller, height) in rim_hooks(outer, r) {
        if smaller.contains(inner) {
            let sign = if height % 2 == 0 { 1 } else { -1 };
            total += sign * mn(&smaller, inner, rest, memo);
        }
    }
    memo.lock().unwrap_or_else(|e| e.into_inner()).insert(key, total);
    total
}

/// Every way to remove a rim hook of length `r`, with its height (rows
/// spanned minus one). Uses beta-numbers: a hook removal moves one bead
/// from `b` to an empty position `b − r`.
fn rim_hooks(lambda: &Partition, r: usize) -> Vec<(Partition, usize)> {
    let len = lambda.len();
    let beta: Vec<usize> = (0..len).map(|i| lambda.row(i) + len - 1 - i).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let height = beta.iter().filter(|&&c| c > b - r && c < b).count();
        let mut next = beta.clone();
        next[i] = b - r;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let rows = next.iter().enumerate().map(|(j, &c)| c - (len - 1 - j)).collect();
        out.push((Partition::new(rows).expect("beta-numbers give a partition"), height));
    }
    out
}

pub fn irreducible_character(lambda: &Partition) -> CharacterVector {
    skew_character(&SkewShape::straight(lambda.clone()))
}

pub fn skew_character(shape: &SkewShape) -> CharacterVector {
    CharacterVector::from_fn(shape.size(), |c| mn_character(shape, c).expect("sizes agree by construction"))
}

/// `⟨χ, ψ⟩ = (1/k!) Σ_ρ |C_ρ| χ(ρ) ψ(ρ)`, if it is an integer.
pub fn inner_product(chi: &CharacterVector, psi: &CharacterVector) -> Result<i64> {
    if chi.degree != psi.degree {
        return Err(Error::SizeMismatch {
            shape: chi.degree,
            class: psi.degree,
        });
    }
    let order: u128 = (1..=chi.degree as u128).product();
    let mut sum: i128 = 0;
    for (i, c) in chi.classes.iter().enumerate() {
        let size = (order / centralizer_order(c)) as i128;
        sum += size * i128::from(chi.values[i]) * i128::from(psi.values[i]);
    }
    let order = order as i128;
    if sum % order != 0 {
        return Err(Error::NotGenuineCharacter(format!("inner product {sum}/{order} is not an integer")));
    }
    Ok((sum / order) as i64)
}

/// Irreducible multiplicities of `chi`.
pub fn decompose_character(chi: &CharacterVector) -> Result<Multiplicities> {
    let mut out = Vec::new();
    let mut rebuilt = vec![0i64; chi.values.len()];
    for nu in partitions_of(chi.degree) {
        let irr = irreducible_character(&nu);
        let m = inner_product(chi, &irr)?;
        if m < 0 {
            return Err(Error::NotGenuineCharacter(format!("multiplicity {m} of {nu}")));
        }
        if m > 0 {
            for (acc, v) in rebuilt.iter_mut().zip(&irr.values) {
                *acc += m * v;
            }
            out.push((nu, m as u64));
        }
    }
    if rebuilt != chi.values {
        return Err(Error::NotGenuineCharacter("not a combination of irreducible characters".into()));
    }
    Ok(Multiplicities(out))
}

/// Decomposition of `S^λ ⊗ C^n`, with `S_n` permuting the basis of `C^n`.
pub fn tensor_with_permutation_rep(lambda: &Partition) -> Result<Multiplicities> {
    let n = lambda.size();
    if n == 0 {
        return Err(Error::InvalidParameter("the permutation representation needs n ≥ 1".into()));
    }
    let chi = irreducible_character(lambda);
    let product = CharacterVector::from_fn(n, |c| {
        let fixed = c.rows().iter().filter(|&&r| r == 1).count() as i64;
        chi.value(c).expect("same degree") * fixed
    });
    decompose_character(&product)
}

#[cfg(test)]
mod tests {
    use super::super::{part, path_count};
    use super::*;

    #[test]
    fn small_values() {
        for k in 1..=5 {
            for c in classes_of(k) {
                assert_eq!(mn_character(&SkewShape::straight(part(&[k])), &c).unwrap(), 1);
            }
        }
        assert_eq!(mn_character(&SkewShape::straight(part(&[1, 1])), &part(&[2])).unwrap(), -1);
        assert_eq!(irreducible_character(&part(&[2, 1])).values, vec![2, 0, -1]);
        assert!(matches!(
            mn_character(&SkewShape::straight(part(&[2, 1])), &part(&[2])),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn orthogonality() {
        for k in 0..=6 {
            let irr: Vec<CharacterVector> = partitions_of(k).iter().map(irreducible_character).collect();
            for (i, a) in irr.iter().enumerate() {
                for (j, b) in irr.iter().enumerate() {
                    assert_eq!(inner_product(a, b).unwrap(), i64::from(i == j));
                }
            }
        }
    }

    #[test]
    fn skew_dimensions_are_path_counts() {
        for n in 0..=6 {
            for lambda in partitions_of(n) {
                for m in 0..=n {
                    for mu in partitions_of(m).into_iter().filter(|mu| lambda.contains(mu)) {
                        let s = SkewShape::new(lambda.clone(), mu.clone()).unwrap();
                        assert_eq!(skew_character(&s).dimension() as u64, path_count(&mu, &lambda));
                    }
                }
            }
        }
    }

    #[test]
    fn decompositions() {
        let regular = CharacterVector {
            degree: 3,
            classes: classes_of(3),
            values: vec![6, 0, 0],
        };
        let d = decompose_character(&regular).unwrap();
        assert_eq!(d.0, vec![(part(&[3]), 1), (part(&[2, 1]), 2), (part(&[1, 1, 1]), 1)]);
        let perm2 = CharacterVector {
            degree: 2,
            classes: classes_of(2),
            values: vec![2, 0],
        };
        assert_eq!(decompose_character(&perm2).unwrap().0, vec![(part(&[2]), 1), (part(&[1, 1]), 1)]);
        let bad = CharacterVector {
            degree: 2,
            classes: classes_of(2),
            values: vec![1, 0],
        };
        assert!(matches!(decompose_character(&bad), Err(Error::NotGenuineCharacter(_))));
        let minus = CharacterVector {
            degree: 2,
            classes: classes_of(2),
            values: vec![0, 2],
        };
        assert!(decompose_character(&minus).is_err());
    }

    #[test]
    fn permutation_tensor() {
        let t = tensor_with_permutation_rep(&part(&[3, 1])).unwrap();
        assert_eq!(t.get(&part(&[3, 1])), 2);
        let t = tensor_with_permutation_rep(&part(&[4])).unwrap();
        assert_eq!(t.get(&part(&[2, 2])), 0);
        assert_eq!(t.get(&part(&[3, 1])), 1);
    }
}
