//! Bipartite perfect matching (Kuhn's augmenting paths).

/// Returns `m` with `m[i]` the right vertex matched to left vertex `i`, or
/// `None` when no perfect matching exists. Left vertices are tried in order
/// and right candidates in increasing index, so the result is deterministic.
pub fn perfect_matching(
    n_left: usize,
    n_right: usize,
    compatible: impl Fn(usize, usize) -> bool,
) -> Option<Vec<usize>> {
    if n_left != n_right {
        return None;
    }
    let adj: Vec<Vec<usize>> = (0..n_left)
        .map(|i| (0..n_right).filter(|&j| compatible(i, j)).collect())
        .collect();
    let mut owner: Vec<Option<usize>> = vec![None; n_right];
    fn augment(i: usize, adj: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
        for &j in &adj[i] {
            if seen[j] {
                continue;
            }
            seen[j] = true;
            if owner[j].is_none() || augment(owner[j].unwrap(), adj, owner, seen) {
                owner[j] = Some(i);
                return true;
            }
        }
        false
    }
    for i in 0..n_left {
        let mut seen = vec![false; n_right];
        if !augment(i, &adj, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut result = vec![0; n_left];
    for (j, o) in owner.iter().enumerate() {
        result[o.expect("perfect matching covers every right vertex")] = j;
    }
    Some(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_matching_needing_augmentation() {
        // 0 - {0, 1}, 1 - {0}
        let m = perfect_matching(2, 2, |i, j| (i, j) != (1, 1)).unwrap();
        assert_eq!(m, vec![1, 0]);
        assert!(perfect_matching(2, 2, |_, j| j == 0).is_none());
        assert_eq!(perfect_matching(0, 0, |_, _| true), Some(vec![]));
    }
}
