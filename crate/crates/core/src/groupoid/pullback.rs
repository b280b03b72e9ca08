//! Weak pullbacks (iso-comma groupoids) in skeletal form.
//!
//! For `F: X → B` and `G: Y → B`, objects are triples `(x, y, f: F(x) → G(y))`
//! and a morphism `(a, b): (x, y, f) → (x, y, f')` satisfies
//! `f' ∘ F(a) = G(b) ∘ f`. Classes over a fixed pair `(x, y)` are therefore the
//! double cosets `G(Aut y) \ Aut(b) / F(Aut x)`, and the automorphism group of
//! a class is the stabilizer of its representative inside `Aut x × Aut y`,
//! acting on the disjoint union of the two carriers.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use super::functor::{same_groupoid, GroupoidFunctor, NaturalIso};
use super::group::PermutationGroup;
use super::perm::Permutation;
use super::skeletal::{GroupoidComponent, GroupoidObject, Label, MorphismKind, SkeletalGroupoid};
use crate::error::{Error, Result};

/// Representative data of one pullback class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleClass {
    pub first: usize,
    pub second: usize,
    pub map: Permutation,
}

/// Where an arbitrary triple lands: its class and an isomorphism `(g, h)`
/// from the triple to the class representative.
#[derive(Clone, Debug)]
struct Canon {
    class: usize,
    g: Permutation,
    h: Permutation,
}

#[derive(Debug)]
pub struct WeakPullback {
    pub groupoid: Arc<SkeletalGroupoid>,
    pub first: GroupoidFunctor,
    pub second: GroupoidFunctor,
    pub proj_first: GroupoidFunctor,
    pub proj_second: GroupoidFunctor,
    /// `F ∘ π₁ ⇒ G ∘ π₂`, with component `f` at the class `(x, y, f)`.
    pub iso: NaturalIso,
    pub classes: Vec<TripleClass>,
    tables: HashMap<(usize, usize), HashMap<Permutation, Canon>>,
}

impl WeakPullback {
    pub fn new(first: &GroupoidFunctor, second: &GroupoidFunctor) -> Result<Self> {
        if !same_groupoid(&first.target, &second.target) {
            return Err(Error::BoundaryMismatch("weak pullback legs have different targets".into()));
        }
        let x_grp = &first.source;
        let y_grp = &second.source;
        let b_grp = &first.target;
        let mut components = Vec::new();
        let mut classes = Vec::new();
        let mut tables = HashMap::new();
        for x in 0..x_grp.len() {
            let b = first.object(x);
            let aut_x = x_grp.aut(x);
            let fx = &first.morphism_map[x];
            for y in 0..y_grp.len() {
                if second.object(y) != b {
                    continue;
                }
                let aut_y = y_grp.aut(y);
                let gy = &second.morphism_map[y];
                let g_pre = gy.preimages();
                let aut_b = b_grp.aut(b);
                let mut table: HashMap<Permutation, Canon> = HashMap::with_capacity(aut_b.order());
                let inv_fx: Vec<Permutation> =
                    aut_x.generators().iter().map(|a| fx.apply(a).inverse()).collect();
                for rep in aut_b.elements() {
                    if table.contains_key(rep) {
                        continue;
                    }
                    let class = classes.len();
                    table.insert(
                        rep.clone(),
                        Canon {
                            class,
                            g: aut_x.identity().clone(),
                            h: aut_y.identity().clone(),
                        },
                    );
                    let mut queue = VecDeque::from([rep.clone()]);
                    while let Some(f) = queue.pop_front() {
                        let Canon { g, h, .. } = table[&f].clone();
                        for (a, fa_inv) in aut_x.generators().iter().zip(&inv_fx) {
                            let next = f.compose(fa_inv);
                            if !table.contains_key(&next) {
                                let canon = Canon {
                                    class,
                                    g: g.compose(&a.inverse()),
                                    h: h.clone(),
                                };
                                table.insert(next.clone(), canon);
                                queue.push_back(next);
                            }
                        }
                        for bgen in aut_y.generators() {
                            let next = gy.apply(bgen).compose(&f);
                            if !table.contains_key(&next) {
                                let canon = Canon {
                                    class,
                                    g: g.clone(),
                                    h: h.compose(&bgen.inverse()),
                                };
                                table.insert(next.clone(), canon);
                                queue.push_back(next);
                            }
                        }
                    }
                    // Stabilizer: pairs (a, b) with G(b) ∘ f = f ∘ F(a).
                    let rep_inv = rep.inverse();
                    let mut stab = Vec::new();
                    for a in aut_x.elements() {
                        let want = rep.compose(fx.apply(a)).compose(&rep_inv);
                        if let Some(bs) = g_pre.get(&want) {
                            for &bi in bs {
                                stab.push(a.direct_sum(&aut_y.elements()[bi]));
                            }
                        }
                    }
                    let aut = Arc::new(PermutationGroup::from_closed_elements(
                        aut_x.degree() + aut_y.degree(),
                        stab,
                    ));
                    let base = GroupoidObject {
                        label: Label::Triple {
                            first: x,
                            second: y,
                            map: rep.clone(),
                        },
                        profile: b_grp.profile(b).to_vec(),
                    };
                    components.push(GroupoidComponent::new(base, aut));
                    classes.push(TripleClass {
                        first: x,
                        second: y,
                        map: rep.clone(),
                    });
                }
                tables.insert((x, y), table);
            }
        }
        let groupoid = Arc::new(SkeletalGroupoid {
            components,
            kind: MorphismKind::PairOfMorphisms,
        });
        let proj_first = GroupoidFunctor::from_rule(&groupoid, x_grp, |c| {
            let dx = x_grp.aut(classes[c].first).degree();
            (classes[c].first, Box::new(move |s: &Permutation| s.block(0, dx)))
        });
        let proj_second = GroupoidFunctor::from_rule(&groupoid, y_grp, |c| {
            let dx = x_grp.aut(classes[c].first).degree();
            let dy = y_grp.aut(classes[c].second).degree();
            (classes[c].second, Box::new(move |s: &Permutation| s.block(dx, dy)))
        });
        let iso = NaturalIso {
            objects: classes.iter().map(|c| first.object(c.first)).collect(),
            components: classes.iter().map(|c| c.map.clone()).collect(),
        };
        Ok(WeakPullback {
            groupoid,
            first: first.clone(),
            second: second.clone(),
            proj_first,
            proj_second,
            iso,
            classes,
            tables,
        })
    }

    /// Class of the triple `(x, y, f)` and an isomorphism `(g, h)` from it to
    /// the representative, i.e. `f_c ∘ F(g) = G(h) ∘ f`.
    pub fn canonicalize(&self, x: usize, y: usize, f: &Permutation) -> Option<(usize, Permutation, Permutation)> {
        let canon = self.tables.get(&(x, y))?.get(f)?;
        Some((canon.class, canon.g.clone(), canon.h.clone()))
    }

    /// The functor `⟨U, V, θ⟩: Z → P` induced by `θ: F∘U ⇒ G∘V`, with the
    /// natural isomorphisms `U ⇒ π₁∘⟨U,V,θ⟩` and `V ⇒ π₂∘⟨U,V,θ⟩`.
    pub fn pair(
        &self,
        u: &GroupoidFunctor,
        v: &GroupoidFunctor,
        theta: &NaturalIso,
    ) -> Result<(GroupoidFunctor, NaturalIso, NaturalIso)> {
        let z_grp = &u.source;
        let mut object_map = Vec::with_capacity(z_grp.len());
        let mut zeta1 = Vec::with_capacity(z_grp.len());
        let mut zeta2 = Vec::with_capacity(z_grp.len());
        for z in 0..z_grp.len() {
            let (x, y) = (u.object(z), v.object(z));
            let (c, g, h) = self.canonicalize(x, y, &theta.components[z]).ok_or_else(|| {
                Error::BoundaryMismatch(format!("pairing component {z} does not land in the pullback"))
            })?;
            object_map.push(c);
            zeta1.push(g);
            zeta2.push(h);
        }
        let functor = GroupoidFunctor::from_rule(z_grp, &self.groupoid, |z| {
            let (g, h) = (zeta1[z].clone(), zeta2[z].clone());
            let (gi, hi) = (g.inverse(), h.inverse());
            (
                object_map[z],
                Box::new(move |s: &Permutation| {
                    g.compose(u.map(z, s))
                        .compose(&gi)
                        .direct_sum(&h.compose(v.map(z, s)).compose(&hi))
                }),
            )
        });
        let objects1 = object_map.iter().map(|&c| self.classes[c].first).collect();
        let objects2 = object_map.iter().map(|&c| self.classes[c].second).collect();
        Ok((
            functor,
            NaturalIso {
                objects: objects1,
                components: zeta1,
            },
            NaturalIso {
                objects: objects2,
                components: zeta2,
            },
        ))
    }
}
