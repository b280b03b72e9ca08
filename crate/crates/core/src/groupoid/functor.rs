use std::sync::Arc;

use super::group::GroupHom;
use super::perm::Permutation;
use super::skeletal::SkeletalGroupoid;
use crate::error::{Error, Result};

pub(crate) fn same_groupoid(a: &Arc<SkeletalGroupoid>, b: &Arc<SkeletalGroupoid>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A functor between skeletal groupoids.
///
/// Each source component's base is sent to the base of `object_map[i]`;
/// `morphism_map[i]` is the induced map on automorphism groups. Connecting
/// isomorphisms are absorbed into that map.
#[derive(Clone, Debug)]
pub struct GroupoidFunctor {
    pub source: Arc<SkeletalGroupoid>,
    pub target: Arc<SkeletalGroupoid>,
    pub object_map: Vec<usize>,
    pub morphism_map: Vec<GroupHom>,
}

impl PartialEq for GroupoidFunctor {
    fn eq(&self, other: &Self) -> bool {
        self.object_map == other.object_map
            && self
                .morphism_map
                .iter()
                .zip(&other.morphism_map)
                .all(|(a, b)| a.images() == b.images())
            && same_groupoid(&self.source, &other.source)
            && same_groupoid(&self.target, &other.target)
    }
}

impl GroupoidFunctor {
    pub fn identity(g: &Arc<SkeletalGroupoid>) -> Self {
        GroupoidFunctor {
            source: g.clone(),
            target: g.clone(),
            object_map: (0..g.len()).collect(),
            morphism_map: g.components.iter().map(|c| GroupHom::identity(&c.aut)).collect(),
        }
    }

    /// Builds a functor from a per-component rule giving the target component
    /// and the image of each automorphism.
    pub fn from_rule<'a>(
        source: &Arc<SkeletalGroupoid>,
        target: &Arc<SkeletalGroupoid>,
        mut rule: impl FnMut(usize) -> (usize, Box<dyn Fn(&Permutation) -> Permutation + 'a>),
    ) -> Self {
        let mut object_map = Vec::with_capacity(source.len());
        let mut morphism_map = Vec::with_capacity(source.len());
        for i in 0..source.len() {
            let (t, f) = rule(i);
            morphism_map.push(GroupHom::from_fn(source.aut(i), target.aut(t), f));
            object_map.push(t);
        }
        GroupoidFunctor {
            source: source.clone(),
            target: target.clone(),
            object_map,
            morphism_map,
        }
    }

    pub fn object(&self, i: usize) -> usize {
        self.object_map[i]
    }

    pub fn map(&self, i: usize, g: &Permutation) -> &Permutation {
        self.morphism_map[i].apply(g)
    }

    /// `self ∘ before`.
    pub fn after(&self, before: &GroupoidFunctor) -> GroupoidFunctor {
        debug_assert!(same_groupoid(&before.target, &self.source));
        let object_map = before.object_map.iter().map(|&j| self.object_map[j]).collect();
        let morphism_map = before
            .morphism_map
            .iter()
            .zip(&before.object_map)
            .map(|(h, &j)| self.morphism_map[j].after(h))
            .collect();
        GroupoidFunctor {
            source: before.source.clone(),
            target: self.target.clone(),
            object_map,
            morphism_map,
        }
    }

    /// Precomposition with the inclusion of the listed source components.
    pub fn restrict(&self, keep: &[usize], new_source: &Arc<SkeletalGroupoid>) -> GroupoidFunctor {
        GroupoidFunctor {
            source: new_source.clone(),
            target: self.target.clone(),
            object_map: keep.iter().map(|&i| self.object_map[i]).collect(),
            morphism_map: keep.iter().map(|&i| self.morphism_map[i].clone()).collect(),
        }
    }

    /// Checks that every component map is a homomorphism into the stated
    /// target automorphism group.
    pub fn validate(&self) -> Result<()> {
        if self.object_map.len() != self.source.len() {
            return Err(Error::InvalidFunctor("object map length".into()));
        }
        for (i, (&t, h)) in self.object_map.iter().zip(&self.morphism_map).enumerate() {
            if t >= self.target.len() {
                return Err(Error::InvalidFunctor(format!("component {i} maps outside the target")));
            }
            if **h.source() != **self.source.aut(i) || **h.target() != **self.target.aut(t) {
                return Err(Error::InvalidFunctor(format!("component {i} has mismatched groups")));
            }
            if !h.is_homomorphism() {
                return Err(Error::InvalidFunctor(format!("component {i} is not a homomorphism")));
            }
        }
        Ok(())
    }
}

/// A natural isomorphism between two functors with equal object maps.
///
/// `components[i]` is an automorphism of the target component `objects[i]`.
#[derive(Clone, Debug, PartialEq)]
pub struct NaturalIso {
    pub objects: Vec<usize>,
    pub components: Vec<Permutation>,
}

impl NaturalIso {
    pub fn identity(f: &GroupoidFunctor) -> Self {
        NaturalIso {
            objects: f.object_map.clone(),
            components: f
                .object_map
                .iter()
                .map(|&t| f.target.aut(t).identity().clone())
                .collect(),
        }
    }

    /// Naturality `to(g) ∘ α = α ∘ from(g)` on every generator.
    pub fn is_natural(&self, from: &GroupoidFunctor, to: &GroupoidFunctor) -> bool {
        if from.object_map != self.objects || to.object_map != self.objects {
            return false;
        }
        self.components.iter().enumerate().all(|(i, a)| {
            to.target.aut(self.objects[i]).contains(a)
                && from.source.aut(i).generators().iter().all(|g| {
                    to.map(i, g).compose(a) == a.compose(from.map(i, g))
                })
        })
    }

    pub fn inverse(&self) -> NaturalIso {
        NaturalIso {
            objects: self.objects.clone(),
            components: self.components.iter().map(Permutation::inverse).collect(),
        }
    }

    /// Vertical composite `next · self`.
    pub fn then(&self, next: &NaturalIso) -> NaturalIso {
        debug_assert_eq!(self.objects, next.objects);
        NaturalIso {
            objects: self.objects.clone(),
            components: self
                .components
                .iter()
                .zip(&next.components)
                .map(|(a, b)| b.compose(a))
                .collect(),
        }
    }

    /// `H ∗ α`, applying `h` to every component.
    pub fn whisker_left(h: &GroupoidFunctor, alpha: &NaturalIso) -> NaturalIso {
        NaturalIso {
            objects: alpha.objects.iter().map(|&t| h.object(t)).collect(),
            components: alpha
                .components
                .iter()
                .zip(&alpha.objects)
                .map(|(a, &t)| h.map(t, a).clone())
                .collect(),
        }
    }

    /// `α ∗ F`, reading α at the images of `f`.
    pub fn whisker_right(alpha: &NaturalIso, f: &GroupoidFunctor) -> NaturalIso {
        NaturalIso {
            objects: f.object_map.iter().map(|&j| alpha.objects[j]).collect(),
            components: f.object_map.iter().map(|&j| alpha.components[j].clone()).collect(),
        }
    }

    pub fn restrict(&self, keep: &[usize]) -> NaturalIso {
        NaturalIso {
            objects: keep.iter().map(|&i| self.objects[i]).collect(),
            components: keep.iter().map(|&i| self.components[i].clone()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::skeletal::fs_truncated;

    #[test]
    fn identity_functor_is_valid() {
        let g = Arc::new(fs_truncated(3, 1));
        let id = GroupoidFunctor::identity(&g);
        id.validate().unwrap();
        assert_eq!(id.after(&id), id);
        assert!(NaturalIso::identity(&id).is_natural(&id, &id));
    }

    #[test]
    fn central_components_are_natural() {
        let g = Arc::new(fs_truncated(2, 1));
        let id = GroupoidFunctor::identity(&g);
        let mut alpha = NaturalIso::identity(&id);
        // The swap is central in S_2, so it is a natural endo-transformation.
        alpha.components[2] = Permutation::transposition(2, 0, 1);
        assert!(alpha.is_natural(&id, &id));
        let g3 = Arc::new(fs_truncated(3, 1));
        let id3 = GroupoidFunctor::identity(&g3);
        let mut beta = NaturalIso::identity(&id3);
        beta.components[3] = Permutation::transposition(3, 0, 1);
        assert!(!beta.is_natural(&id3, &id3));
    }
}
