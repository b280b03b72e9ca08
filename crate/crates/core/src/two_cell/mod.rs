//! Spans of spans: 2-morphisms between spans with a common boundary.
//!
//! A 2-cell `α: S ⇒ T` has an apex `Z` with functors `P: Z → X` and
//! `Q: Z → Y` into the apexes of `S` and `T`, together with
//! `μ: S.left ∘ P ⇒ T.left ∘ Q` and `ν: S.right ∘ P ⇒ T.right ∘ Q`.

mod equivalence;
mod generators;
mod whisker;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groupoid::{same_groupoid, GroupoidFunctor, NaturalIso, Permutation, SkeletalGroupoid, WeakPullback};
use crate::span::Span;

pub use equivalence::{equivalent_two_cells, TwoCellEquivalenceWitness};
pub use generators::{generator_two_cell, Generator};
pub use whisker::{associator, horizontal_compose, left_unitor, right_unitor, whisker_left, whisker_right};
pub(crate) use whisker::{associator_with, left_unitor_with, right_unitor_with, whisker_left_with, whisker_right_with};

#[derive(Clone, Debug)]
pub struct TwoCell {
    pub source: Arc<Span>,
    pub target: Arc<Span>,
    pub apex: Arc<SkeletalGroupoid>,
    /// `P: Z → apex(source)`.
    pub to_source: GroupoidFunctor,
    /// `Q: Z → apex(target)`.
    pub to_target: GroupoidFunctor,
    /// `source.left ∘ P ⇒ target.left ∘ Q`.
    pub mu: NaturalIso,
    /// `source.right ∘ P ⇒ target.right ∘ Q`.
    pub nu: NaturalIso,
}

impl TwoCell {
    /// Checks functoriality of both legs and naturality of `μ` and `ν`.
    pub fn validate(&self) -> Result<()> {
        if !same_groupoid(&self.to_source.source, &self.apex) || !same_groupoid(&self.to_target.source, &self.apex) {
            return Err(Error::InvalidFunctor("2-cell legs do not start at its apex".into()));
        }
        if !same_groupoid(&self.to_source.target, &self.source.apex)
            || !same_groupoid(&self.to_target.target, &self.target.apex)
        {
            return Err(Error::InvalidFunctor("2-cell legs miss the span apexes".into()));
        }
        self.to_source.validate()?;
        self.to_target.validate()?;
        let sl = self.source.left.after(&self.to_source);
        let tl = self.target.left.after(&self.to_target);
        let sr = self.source.right.after(&self.to_source);
        let tr = self.target.right.after(&self.to_target);
        if !self.mu.is_natural(&sl, &tl) {
            return Err(Error::InvalidFunctor("μ is not natural".into()));
        }
        if !self.nu.is_natural(&sr, &tr) {
            return Err(Error::InvalidFunctor("ν is not natural".into()));
        }
        Ok(())
    }

    pub fn class_count(&self) -> usize {
        self.apex.len()
    }

    /// Cardinality of the starting set of the histories in class `z`.
    pub fn source_cardinality(&self, z: usize) -> usize {
        let x = self.to_source.object(z);
        self.source.source().cardinality_of(self.source.right.object(x))
    }
}

fn check_boundaries(s: &Span, t: &Span) -> Result<()> {
    if same_groupoid(s.source(), t.source()) && same_groupoid(s.target(), t.target()) {
        Ok(())
    } else {
        Err(Error::BoundaryMismatch("2-cell between spans with different boundaries".into()))
    }
}

/// The identity 2-cell on `s`.
pub fn identity_two_cell(s: &Arc<Span>) -> TwoCell {
    let id = GroupoidFunctor::identity(&s.apex);
    TwoCell {
        source: s.clone(),
        target: s.clone(),
        apex: s.apex.clone(),
        mu: NaturalIso::identity(&s.left),
        nu: NaturalIso::identity(&s.right),
        to_source: id.clone(),
        to_target: id,
    }
}

/// The 2-cell with empty apex.
pub fn zero_two_cell(s: &Arc<Span>, t: &Arc<Span>) -> Result<TwoCell> {
    check_boundaries(s, t)?;
    let apex = Arc::new(SkeletalGroupoid::empty());
    let empty = |target: &Arc<SkeletalGroupoid>| GroupoidFunctor {
        source: apex.clone(),
        target: target.clone(),
        object_map: Vec::new(),
        morphism_map: Vec::new(),
    };
    let none = NaturalIso {
        objects: Vec::new(),
        components: Vec::new(),
    };
    Ok(TwoCell {
        source: s.clone(),
        target: t.clone(),
        to_source: empty(&s.apex),
        to_target: empty(&t.apex),
        apex,
        mu: none.clone(),
        nu: none,
    })
}

/// Swaps the legs and inverts `μ`, `ν`.
pub fn converse_two_cell(alpha: &TwoCell) -> TwoCell {
    TwoCell {
        source: alpha.target.clone(),
        target: alpha.source.clone(),
        apex: alpha.apex.clone(),
        to_source: alpha.to_target.clone(),
        to_target: alpha.to_source.clone(),
        mu: alpha.mu.inverse(),
        nu: alpha.nu.inverse(),
    }
}

/// `β · α`: first `α: S ⇒ T`, then `β: T ⇒ R`.
pub fn vertical_compose(beta: &TwoCell, alpha: &TwoCell) -> Result<TwoCell> {
    if !same_groupoid(&alpha.target.apex, &beta.source.apex) {
        return Err(Error::BoundaryMismatch("vertical composite of non-adjacent 2-cells".into()));
    }
    let middle = &alpha.target;
    let pb = WeakPullback::new(&alpha.to_target, &beta.to_source)?;
    let to_source = alpha.to_source.after(&pb.proj_first);
    let to_target = beta.to_target.after(&pb.proj_second);
    let mut mu = Vec::with_capacity(pb.classes.len());
    let mut nu = Vec::with_capacity(pb.classes.len());
    for c in &pb.classes {
        let y = alpha.to_target.object(c.first);
        let (z, w) = (c.first, c.second);
        mu.push(
            beta.mu.components[w]
                .compose(middle.left.map(y, &c.map))
                .compose(&alpha.mu.components[z]),
        );
        nu.push(
            beta.nu.components[w]
                .compose(middle.right.map(y, &c.map))
                .compose(&alpha.nu.components[z]),
        );
    }
    let mu_objects = pb.classes.iter().map(|c| alpha.mu.objects[c.first]).collect();
    let nu_objects = pb.classes.iter().map(|c| alpha.nu.objects[c.first]).collect();
    Ok(TwoCell {
        source: alpha.source.clone(),
        target: beta.target.clone(),
        apex: pb.groupoid.clone(),
        to_source,
        to_target,
        mu: NaturalIso {
            objects: mu_objects,
            components: mu,
        },
        nu: NaturalIso {
            objects: nu_objects,
            components: nu,
        },
    })
}

/// Disjoint union of apexes.
pub fn two_cell_sum(alpha: &TwoCell, beta: &TwoCell) -> Result<TwoCell> {
    if !same_groupoid(&alpha.source.apex, &beta.source.apex) || !same_groupoid(&alpha.target.apex, &beta.target.apex) {
        return Err(Error::BoundaryMismatch("sum of 2-cells between different spans".into()));
    }
    let apex = Arc::new(SkeletalGroupoid::disjoint_union(&[&alpha.apex, &beta.apex]));
    let n = alpha.apex.len();
    let leg = |a: &GroupoidFunctor, b: &GroupoidFunctor| {
        GroupoidFunctor::from_rule(&apex, &a.target, |i| {
            let (f, k) = if i < n { (a, i) } else { (b, i - n) };
            (f.object(k), Box::new(move |g: &Permutation| f.map(k, g).clone()))
        })
    };
    let join = |a: &NaturalIso, b: &NaturalIso| NaturalIso {
        objects: a.objects.iter().chain(&b.objects).copied().collect(),
        components: a.components.iter().chain(&b.components).cloned().collect(),
    };
    Ok(TwoCell {
        source: alpha.source.clone(),
        target: alpha.target.clone(),
        to_source: leg(&alpha.to_source, &beta.to_source),
        to_target: leg(&alpha.to_target, &beta.to_target),
        apex,
        mu: join(&alpha.mu, &beta.mu),
        nu: join(&alpha.nu, &beta.nu),
    })
}

/// Keeps the apex classes whose histories start from a set of cardinality at
/// most `bound`. The source and target spans are left untouched.
pub fn restrict_two_cell(alpha: &TwoCell, bound: usize) -> TwoCell {
    let keep: Vec<usize> = (0..alpha.apex.len())
        .filter(|&z| alpha.source_cardinality(z) <= bound)
        .collect();
    restrict_classes(alpha, &keep)
}

pub(crate) fn restrict_classes(alpha: &TwoCell, keep: &[usize]) -> TwoCell {
    if keep.len() == alpha.apex.len() {
        return alpha.clone();
    }
    let apex = Arc::new(alpha.apex.restrict(keep));
    TwoCell {
        source: alpha.source.clone(),
        target: alpha.target.clone(),
        to_source: alpha.to_source.restrict(keep, &apex),
        to_target: alpha.to_target.restrict(keep, &apex),
        apex,
        mu: alpha.mu.restrict(keep),
        nu: alpha.nu.restrict(keep),
    }
}
