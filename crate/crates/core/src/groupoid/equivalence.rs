use std::sync::Arc;

use super::group::{extend_to_hom, GroupHom, PermutationGroup};
use super::perm::Permutation;
use super::skeletal::SkeletalGroupoid;
use crate::matching::perfect_matching;

/// An equivalence of skeletal groupoids: a bijection of components together
/// with an isomorphism of automorphism groups for each matched pair.
#[derive(Clone, Debug)]
pub struct GroupoidEquivalence {
    pub component_map: Vec<usize>,
    pub group_isos: Vec<GroupHom>,
}

/// Brute-force isomorphism search between two permutation groups, pruned by
/// order, element-order multiset and the orders of pairwise generator
/// products.
pub fn find_group_isomorphism(g: &Arc<PermutationGroup>, h: &Arc<PermutationGroup>) -> Option<GroupHom> {
    if g.order() != h.order() || g.order_profile() != h.order_profile() {
        return None;
    }
    let gens = g.generators();
    let gen_orders: Vec<usize> = gens.iter().map(Permutation::order).collect();
    let mut chosen: Vec<Permutation> = Vec::with_capacity(gens.len());
    fn search(
        k: usize,
        g: &Arc<PermutationGroup>,
        h: &Arc<PermutationGroup>,
        gen_orders: &[usize],
        chosen: &mut Vec<Permutation>,
    ) -> Option<GroupHom> {
        let gens = g.generators();
        if k == gens.len() {
            let hom = extend_to_hom(g, h, chosen)?;
            return hom.is_injective().then_some(hom);
        }
        for cand in h.elements() {
            if cand.order() != gen_orders[k] {
                continue;
            }
            let consistent = (0..k).all(|i| {
                gens[i].compose(&gens[k]).order() == chosen[i].compose(cand).order()
            });
            if !consistent {
                continue;
            }
            chosen.push(cand.clone());
            if let Some(found) = search(k + 1, g, h, gen_orders, chosen) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }
    search(0, g, h, &gen_orders, &mut chosen)
}

/// Searches for an equivalence matching components with equal cardinality
/// profiles and isomorphic automorphism groups.
pub fn groupoids_equivalent(g: &SkeletalGroupoid, h: &SkeletalGroupoid) -> Option<GroupoidEquivalence> {
    if g.len() != h.len() {
        return None;
    }
    let n = g.len();
    let mut isos: Vec<Vec<Option<GroupHom>>> = vec![vec![None; n]; n];
    for (i, row) in isos.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            if g.profile(i) == h.profile(j) {
                *slot = find_group_isomorphism(g.aut(i), h.aut(j));
            }
        }
    }
    let matching = perfect_matching(n, n, |i, j| isos[i][j].is_some())?;
    let group_isos = matching
        .iter()
        .enumerate()
        .map(|(i, &j)| isos[i][j].clone().expect("matched pairs carry an isomorphism"))
        .collect();
    Some(GroupoidEquivalence {
        component_map: matching,
        group_isos,
    })
}

/// One leg constraint for [`conjugate_iso_search`]: the matched components
/// map into `group` via `src_leg` and `tgt_leg`.
pub(crate) struct LegConstraint<'a> {
    pub src_leg: &'a GroupHom,
    pub tgt_leg: &'a GroupHom,
    pub group: &'a Arc<PermutationGroup>,
}

/// Searches for an isomorphism `ψ: src → tgt` and conjugators `c_l` with
/// `tgt_leg_l(ψ(g)) = c_l · src_leg_l(g) · c_l⁻¹` for every leg, such that
/// `accept(conjugators)` holds. Conjugators are tried in element order, so the
/// identity comes first.
pub(crate) fn conjugate_iso_search(
    src: &Arc<PermutationGroup>,
    tgt: &Arc<PermutationGroup>,
    legs: &[LegConstraint<'_>],
    accept: &dyn Fn(&[Permutation]) -> bool,
) -> Option<(GroupHom, Vec<Permutation>)> {
    if src.order() != tgt.order() {
        return None;
    }
    let preimages: Vec<_> = legs.iter().map(|l| l.tgt_leg.preimages()).collect();
    let all: Vec<usize> = (0..tgt.order()).collect();
    let start: Vec<Vec<usize>> = src.generators().iter().map(|_| all.clone()).collect();
    let mut conj = Vec::with_capacity(legs.len());
    search_legs(src, tgt, legs, &preimages, accept, 0, start, &mut conj)
}

#[allow(clippy::too_many_arguments)]
fn search_legs(
    src: &Arc<PermutationGroup>,
    tgt: &Arc<PermutationGroup>,
    legs: &[LegConstraint<'_>],
    preimages: &[std::collections::HashMap<Permutation, Vec<usize>>],
    accept: &dyn Fn(&[Permutation]) -> bool,
    l: usize,
    candidates: Vec<Vec<usize>>,
    conj: &mut Vec<Permutation>,
) -> Option<(GroupHom, Vec<Permutation>)> {
    if l == legs.len() {
        if !accept(conj) {
            return None;
        }
        let mut chosen = Vec::with_capacity(candidates.len());
        return pick_images(src, tgt, &candidates, &mut chosen).map(|h| (h, conj.clone()));
    }
    let leg = &legs[l];
    for c in leg.group.elements() {
        let ci = c.inverse();
        let mut refined = Vec::with_capacity(candidates.len());
        let mut ok = true;
        for (g, cands) in src.generators().iter().zip(&candidates) {
            let want = c.compose(leg.src_leg.apply(g)).compose(&ci);
            let allowed = preimages[l].get(&want);
            let next: Vec<usize> = match allowed {
                Some(list) => cands.iter().copied().filter(|i| list.contains(i)).collect(),
                None => Vec::new(),
            };
            if next.is_empty() {
                ok = false;
                break;
            }
            refined.push(next);
        }
        if !ok {
            continue;
        }
        conj.push(c.clone());
        if let Some(found) = search_legs(src, tgt, legs, preimages, accept, l + 1, refined, conj) {
            return Some(found);
        }
        conj.pop();
    }
    None
}

fn pick_images(
    src: &Arc<PermutationGroup>,
    tgt: &Arc<PermutationGroup>,
    candidates: &[Vec<usize>],
    chosen: &mut Vec<Permutation>,
) -> Option<GroupHom> {
    let k = chosen.len();
    if k == candidates.len() {
        let hom = extend_to_hom(src, tgt, chosen)?;
        return hom.is_injective().then_some(hom);
    }
    for &i in &candidates[k] {
        chosen.push(tgt.elements()[i].clone());
        if let Some(h) = pick_images(src, tgt, candidates, chosen) {
            return Some(h);
        }
        chosen.pop();
    }
    None
}
