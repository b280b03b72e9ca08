use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::group::PermutationGroup;
use super::perm::Permutation;
use crate::error::{Error, Result};

/// Payload of an object.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Label {
    /// The single object of the terminal groupoid.
    Point,
    /// A (coloured) finite set, given by its cardinality per colour.
    Set(Vec<usize>),
    /// A class `(x, y, f)` of a weak pullback: component indices of the two
    /// factors and the chosen representative `f`.
    Triple {
        first: usize,
        second: usize,
        map: Permutation,
    },
    /// A summand of a disjoint union.
    Tagged { tag: usize, inner: Box<Label> },
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Point => write!(f, "*"),
            Label::Set(p) if p.len() == 1 => write!(f, "{}", p[0]),
            Label::Set(p) => write!(f, "{p:?}"),
            Label::Triple { first, second, map } => write!(f, "({first}, {second}, {map})"),
            Label::Tagged { tag, inner } => write!(f, "{tag}:{inner}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupoidObject {
    pub label: Label,
    /// Underlying cardinality per colour.
    pub profile: Vec<usize>,
}

impl GroupoidObject {
    pub fn cardinality(&self) -> usize {
        self.profile.iter().sum()
    }
}

/// A connected groupoid stored as one base object, its automorphism group,
/// and the members reachable from it.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupoidComponent {
    pub base: GroupoidObject,
    pub aut: Arc<PermutationGroup>,
    /// `(object, connecting isomorphism from the base)`; entry 0 is the base
    /// itself with the identity.
    pub members: Vec<(GroupoidObject, Permutation)>,
}

impl GroupoidComponent {
    pub fn new(base: GroupoidObject, aut: Arc<PermutationGroup>) -> Self {
        let id = aut.identity().clone();
        GroupoidComponent {
            members: vec![(base.clone(), id)],
            base,
            aut,
        }
    }

    pub fn order(&self) -> usize {
        self.aut.order()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MorphismKind {
    /// Bijections of finite sets.
    SetBijection,
    /// Colour-preserving bijections.
    ColouredBijection,
    /// Compatible pairs of morphisms in a weak pullback apex.
    PairOfMorphisms,
    /// Anything built by disjoint unions or restriction of the above.
    Mixed,
}

/// A finite groupoid in skeletal presentation.
#[derive(Clone, Debug, PartialEq)]
pub struct SkeletalGroupoid {
    pub components: Vec<GroupoidComponent>,
    pub kind: MorphismKind,
}

/// A reference to a member object of a component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ObjectRef {
    pub component: usize,
    pub member: usize,
}

impl ObjectRef {
    pub fn base(component: usize) -> Self {
        ObjectRef { component, member: 0 }
    }
}

impl SkeletalGroupoid {
    pub fn empty() -> Self {
        SkeletalGroupoid {
            components: Vec::new(),
            kind: MorphismKind::Mixed,
        }
    }

    /// One object with only its identity.
    pub fn terminal() -> Self {
        let base = GroupoidObject {
            label: Label::Point,
            profile: Vec::new(),
        };
        SkeletalGroupoid {
            components: vec![GroupoidComponent::new(base, Arc::new(PermutationGroup::trivial(0)))],
            kind: MorphismKind::SetBijection,
        }
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component(&self, i: usize) -> &GroupoidComponent {
        &self.components[i]
    }

    pub fn aut(&self, i: usize) -> &Arc<PermutationGroup> {
        &self.components[i].aut
    }

    pub fn profile(&self, i: usize) -> &[usize] {
        &self.components[i].base.profile
    }

    pub fn cardinality_of(&self, i: usize) -> usize {
        self.components[i].base.cardinality()
    }

    /// Component whose base has the given profile, for set groupoids.
    pub fn find_profile(&self, profile: &[usize]) -> Option<usize> {
        self.components
            .iter()
            .position(|c| c.base.profile == profile && matches!(c.base.label, Label::Set(_)))
    }

    /// Components kept in the given order; returns the new groupoid.
    pub fn restrict(&self, keep: &[usize]) -> SkeletalGroupoid {
        SkeletalGroupoid {
            components: keep.iter().map(|&i| self.components[i].clone()).collect(),
            kind: self.kind,
        }
    }

    /// Disjoint union; component `j` of summand `t` gets label `Tagged{t, ..}`.
    pub fn disjoint_union(parts: &[&SkeletalGroupoid]) -> SkeletalGroupoid {
        let mut components = Vec::new();
        for (tag, g) in parts.iter().enumerate() {
            for c in &g.components {
                let wrap = |o: &GroupoidObject| GroupoidObject {
                    label: Label::Tagged {
                        tag,
                        inner: Box::new(o.label.clone()),
                    },
                    profile: o.profile.clone(),
                };
                components.push(GroupoidComponent {
                    base: wrap(&c.base),
                    aut: c.aut.clone(),
                    members: c.members.iter().map(|(o, p)| (wrap(o), p.clone())).collect(),
                });
            }
        }
        SkeletalGroupoid {
            components,
            kind: MorphismKind::Mixed,
        }
    }
}

/// Finite sets (with `colors` colours) of total cardinality at most `max_card`.
///
/// Components are ordered by total cardinality, then by profile in
/// descending lexicographic order.
pub fn fs_truncated(max_card: usize, colors: usize) -> SkeletalGroupoid {
    assert!(colors >= 1, "at least one colour");
    let mut components = Vec::new();
    for total in 0..=max_card {
        for profile in compositions(total, colors) {
            let aut = Arc::new(PermutationGroup::young_subgroup(&profile));
            let base = GroupoidObject {
                label: Label::Set(profile.clone()),
                profile,
            };
            components.push(GroupoidComponent::new(base, aut));
        }
    }
    SkeletalGroupoid {
        components,
        kind: if colors == 1 {
            MorphismKind::SetBijection
        } else {
            MorphismKind::ColouredBijection
        },
    }
}

/// Weak compositions of `total` into `parts` parts, descending lexicographic.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `Σ_components 1/|Aut|`.
pub fn groupoid_cardinality(g: &SkeletalGroupoid) -> BigRational {
    g.components
        .iter()
        .map(|c| BigRational::new(BigInt::from(1), BigInt::from(c.order())))
        .fold(BigRational::from_integer(BigInt::from(0)), |a, b| a + b)
}

/// All morphisms `a → b`.
pub fn hom_set(g: &SkeletalGroupoid, a: ObjectRef, b: ObjectRef) -> Result<Vec<Permutation>> {
    let lookup = |r: ObjectRef| {
        g.components
            .get(r.component)
            .and_then(|c| c.members.get(r.member))
            .ok_or(Error::UnknownObject(r.component, r.member))
    };
    let (_, ca) = lookup(a)?;
    let (_, cb) = lookup(b)?;
    if a.component != b.component {
        return Ok(Vec::new());
    }
    let ca_inv = ca.inverse();
    Ok(g.components[a.component]
        .aut
        .elements()
        .iter()
        .map(|x| cb.compose(x).compose(&ca_inv))
        .collect())
}
