//! Finite groupoids in skeletal form: permutation groups, truncations of the
//! groupoid of (coloured) finite sets, functors, natural isomorphisms and weak
//! pullbacks.

mod equivalence;
mod functor;
mod group;
mod perm;
mod pullback;
mod skeletal;

pub use equivalence::{find_group_isomorphism, groupoids_equivalent, GroupoidEquivalence};
pub(crate) use equivalence::{conjugate_iso_search, LegConstraint};
pub use functor::{GroupoidFunctor, NaturalIso};
pub use group::{extend_to_hom, group_closure, GroupHom, PermutationGroup};
pub use perm::Permutation;
pub use pullback::{TripleClass, WeakPullback};
pub use skeletal::{
    compositions, fs_truncated, groupoid_cardinality, hom_set, GroupoidComponent, GroupoidObject, Label,
    MorphismKind, ObjectRef, SkeletalGroupoid,
};

pub(crate) use functor::same_groupoid;
