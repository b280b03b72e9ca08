use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::Span;
use crate::groupoid::{conjugate_iso_search, same_groupoid, GroupHom, LegConstraint, Permutation};
use crate::matching::perfect_matching;

/// An isomorphism of spans `S ≅ T`: apex class `i` of `S` goes to
/// `component_map[i]` of `T` via `group_isos[i]`, and the conjugators are the
/// components of the natural isomorphisms `S.left ⇒ T.left ∘ U` and
/// `S.right ⇒ T.right ∘ U`.
#[derive(Clone, Debug)]
pub struct SpanIsoWitness {
    pub component_map: Vec<usize>,
    pub group_isos: Vec<GroupHom>,
    pub left_components: Vec<Permutation>,
    pub right_components: Vec<Permutation>,
}

impl SpanIsoWitness {
    /// Re-checks every naturality square on generators.
    pub fn verify(&self, s: &Span, t: &Span) -> bool {
        self.component_map.iter().enumerate().all(|(i, &j)| {
            let psi = &self.group_isos[i];
            s.left.object(i) == t.left.object(j)
                && s.right.object(i) == t.right.object(j)
                && psi.is_injective()
                && s.apex.aut(i).generators().iter().all(|g| {
                    let (c, d) = (&self.left_components[i], &self.right_components[i]);
                    t.left.map(j, psi.apply(g)).compose(c) == c.compose(s.left.map(i, g))
                        && t.right.map(j, psi.apply(g)).compose(d) == d.compose(s.right.map(i, g))
                })
        })
    }
}

type Signature = (usize, usize, usize, Vec<usize>);

fn signature(s: &Span, i: usize) -> Signature {
    (
        s.left.object(i),
        s.right.object(i),
        s.apex.aut(i).order(),
        s.apex.aut(i).order_profile(),
    )
}

/// A group isomorphism between matched components and the conjugators
/// that make the legs agree.
type Candidate = (GroupHom, Vec<Permutation>);

/// Searches for an equivalence of apexes commuting with both legs up to
/// natural isomorphism.
pub fn spans_isomorphic(s: &Span, t: &Span) -> Option<SpanIsoWitness> {
    if !same_groupoid(s.source(), t.source()) || !same_groupoid(s.target(), t.target()) {
        return None;
    }
    let n = s.apex.len();
    if n != t.apex.len() {
        return None;
    }
    let sig_t: Vec<Signature> = (0..n).map(|j| signature(t, j)).collect();
    let mut found: Vec<Vec<Option<Candidate>>> = vec![vec![None; n]; n];
    for i in 0..n {
        let sig = signature(s, i);
        for j in (0..n).filter(|&j| sig_t[j] == sig) {
            let (bl, br) = (s.left.object(i), s.right.object(i));
            let legs = [
                LegConstraint {
                    src_leg: &s.left.morphism_map[i],
                    tgt_leg: &t.left.morphism_map[j],
                    group: s.target().aut(bl),
                },
                LegConstraint {
                    src_leg: &s.right.morphism_map[i],
                    tgt_leg: &t.right.morphism_map[j],
                    group: s.source().aut(br),
                },
            ];
            found[i][j] = conjugate_iso_search(s.apex.aut(i), t.apex.aut(j), &legs, &|_| true);
        }
    }
    let matching = perfect_matching(n, n, |i, j| found[i][j].is_some())?;
    let mut group_isos = Vec::with_capacity(n);
    let mut left_components = Vec::with_capacity(n);
    let mut right_components = Vec::with_capacity(n);
    for (i, &j) in matching.iter().enumerate() {
        let (psi, conj) = found[i][j].take().expect("matched pairs carry a witness");
        group_isos.push(psi);
        left_components.push(conj[0].clone());
        right_components.push(conj[1].clone());
    }
    Some(SpanIsoWitness {
        component_map: matching,
        group_isos,
        left_components,
        right_components,
    })
}

/// Joint-preimage statistics over one pair of boundary classes.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TamenessEntry {
    pub target_class: usize,
    pub source_class: usize,
    pub classes: usize,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub cardinality: BigRational,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TamenessReport {
    pub entries: Vec<TamenessEntry>,
    pub apex_classes: usize,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub apex_cardinality: BigRational,
    /// Largest number of apex classes over one boundary pair.
    pub max_joint_preimage: usize,
}

/// Joint preimage of every boundary pair that is hit at all. At a fixed
/// truncation every preimage is finite.
pub fn tameness_report(s: &Span) -> TamenessReport {
    let mut table: BTreeMap<(usize, usize), (usize, BigRational)> = BTreeMap::new();
    let mut total = BigRational::zero();
    for i in 0..s.apex.len() {
        let w = BigRational::new(BigInt::from(1), BigInt::from(s.apex.aut(i).order()));
        total += &w;
        let e = table
            .entry((s.left.object(i), s.right.object(i)))
            .or_insert_with(|| (0, BigRational::zero()));
        e.0 += 1;
        e.1 += w;
    }
    let entries: Vec<TamenessEntry> = table
        .into_iter()
        .map(|((b, a), (classes, cardinality))| TamenessEntry {
            target_class: b,
            source_class: a,
            classes,
            cardinality,
        })
        .collect();
    TamenessReport {
        max_joint_preimage: entries.iter().map(|e| e.classes).max().unwrap_or(0),
        entries,
        apex_classes: s.apex.len(),
        apex_cardinality: total,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::span::{annihilation_span, compose, creation_span, dagger, direct_sum, fs_shared, identity_span, zero_span};

    #[test]
    fn commutation_witness() {
        let m = 5;
        let (a, ad) = (annihilation_span(m), creation_span(m));
        let lhs = compose(&a, &ad).unwrap();
        let rhs = direct_sum(&compose(&ad, &a).unwrap(), &identity_span(&fs_shared(m, 1), m)).unwrap();
        // The identity summand is not truncated, so compare inside the safe window.
        let bound = m - 2;
        let (l, r) = (crate::span::restrict_to_bound(&lhs, bound), crate::span::restrict_to_bound(&rhs, bound));
        let w = spans_isomorphic(&l, &r).unwrap();
        assert!(w.verify(&l, &r));
    }

    #[test]
    fn creation_is_not_annihilation() {
        assert!(spans_isomorphic(&annihilation_span(3), &creation_span(3)).is_none());
        let a = annihilation_span(3);
        let w = spans_isomorphic(&a, &a).unwrap();
        assert_eq!(w.component_map, vec![0, 1, 2]);
        assert!(w.left_components.iter().all(Permutation::is_identity));
    }

    #[test]
    fn dagger_reverses_composition() {
        let m = 4;
        let (a, ad) = (annihilation_span(m), creation_span(m));
        let lhs = dagger(&compose(&a, &a).unwrap());
        let rhs = compose(&dagger(&a), &dagger(&a)).unwrap();
        assert!(spans_isomorphic(&lhs, &rhs).is_some());
        let lhs = dagger(&compose(&ad, &a).unwrap());
        let rhs = compose(&dagger(&a), &dagger(&ad)).unwrap();
        assert!(spans_isomorphic(&lhs, &rhs).is_some());
    }

    #[test]
    fn tameness() {
        let r = tameness_report(&annihilation_span(5));
        assert_eq!(r.max_joint_preimage, 1);
        let m = 5;
        let s = compose(&annihilation_span(m), &creation_span(m)).unwrap();
        let r = tameness_report(&s);
        let diag: Vec<usize> = r.entries.iter().filter(|e| e.source_class == e.target_class).map(|e| e.classes).collect();
        assert_eq!(diag, vec![1, 2, 2, 2, 2]);
        let fs = fs_shared(m, 1);
        let z = tameness_report(&zero_span(&fs, &fs, s.window));
        assert!(z.entries.is_empty());
    }
}
