use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use super::perm::Permutation;
use crate::error::{Error, Result};

/// A finite permutation group with its full element list cached.
///
/// Elements are kept in lexicographic order of their image sequences, so the
/// identity is always `elements()[0]`.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl PartialEq for PermutationGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermutationGroup {}

/// Closure of a generating set. All generators must share `degree`.
pub fn group_closure(degree: usize, generators: &[Permutation]) -> Result<PermutationGroup> {
    if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
        return Err(Error::DegreeMismatch {
            expected: degree,
            found: bad.degree(),
        });
    }
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = g.compose(&x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut elements: Vec<Permutation> = seen.into_iter().collect();
    elements.sort();
    let gens = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
    Ok(PermutationGroup::assemble(degree, gens, elements))
}

impl PermutationGroup {
    fn assemble(degree: usize, generators: Vec<Permutation>, elements: Vec<Permutation>) -> Self {
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        PermutationGroup {
            degree,
            generators,
            elements,
            index,
        }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::assemble(degree, Vec::new(), vec![Permutation::identity(degree)])
    }

    /// The full symmetric group on `n` points.
    pub fn symmetric(n: usize) -> Self {
        Self::young_subgroup(&[n])
    }

    /// `S_{k₁} × … × S_{k_c}` acting on consecutive blocks of sizes `kᵢ`.
    pub fn young_subgroup(blocks: &[usize]) -> Self {
        let degree: usize = blocks.iter().sum();
        let mut gens = Vec::new();
        let mut start = 0;
        for &k in blocks {
            for i in start..start + k.saturating_sub(1) {
                gens.push(Permutation::transposition(degree, i, i + 1));
            }
            start += k;
        }
        group_closure(degree, &gens).expect("generators built with a common degree")
    }

    /// Builds a group from a list already known to be closed.
    ///
    /// A generating set is chosen greedily in element order.
    pub fn from_closed_elements(degree: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        elements.dedup();
        let mut generators: Vec<Permutation> = Vec::new();
        let mut reached: HashSet<Permutation> = HashSet::from([Permutation::identity(degree)]);
        for e in &elements {
            if reached.contains(e) {
                continue;
            }
            generators.push(e.clone());
            let g = group_closure(degree, &generators).expect("subgroup elements share a degree");
            reached = g.elements.into_iter().collect();
            if reached.len() == elements.len() {
                break;
            }
        }
        debug_assert_eq!(reached.len(), elements.len(), "element list is not closed");
        Self::assemble(degree, generators, elements)
    }

    /// The direct product acting on `self.degree() + other.degree()` points.
    pub fn direct_product(&self, other: &PermutationGroup) -> Self {
        let degree = self.degree + other.degree;
        let mut gens: Vec<Permutation> = self
            .generators
            .iter()
            .map(|g| g.direct_sum(&Permutation::identity(other.degree)))
            .collect();
        gens.extend(
            other
                .generators
                .iter()
                .map(|h| Permutation::identity(self.degree).direct_sum(h)),
        );
        let mut elements = Vec::with_capacity(self.order() * other.order());
        for g in &self.elements {
            for h in &other.elements {
                elements.push(g.direct_sum(h));
            }
        }
        elements.sort();
        Self::assemble(degree, gens, elements)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn identity(&self) -> &Permutation {
        &self.elements[0]
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.index.contains_key(g)
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// Sorted multiset of element orders, an isomorphism invariant.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut orders: Vec<usize> = self.elements.iter().map(Permutation::order).collect();
        orders.sort_unstable();
        orders
    }
}

/// A homomorphism between permutation groups, tabulated on every element.
#[derive(Clone, Debug)]
pub struct GroupHom {
    source: Arc<PermutationGroup>,
    target: Arc<PermutationGroup>,
    images: Vec<Permutation>,
}

impl PartialEq for GroupHom {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images && *self.source == *other.source && *self.target == *other.target
    }
}

impl GroupHom {
    pub fn from_fn(
        source: &Arc<PermutationGroup>,
        target: &Arc<PermutationGroup>,
        f: impl Fn(&Permutation) -> Permutation,
    ) -> Self {
        let images = source.elements().iter().map(f).collect();
        GroupHom {
            source: source.clone(),
            target: target.clone(),
            images,
        }
    }

    pub fn identity(group: &Arc<PermutationGroup>) -> Self {
        Self::from_fn(group, group, Clone::clone)
    }

    /// The homomorphism into the trivial group of degree 0.
    pub fn to_trivial(source: &Arc<PermutationGroup>, target: &Arc<PermutationGroup>) -> Self {
        let id = target.identity().clone();
        Self::from_fn(source, target, |_| id.clone())
    }

    pub fn source(&self) -> &Arc<PermutationGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<PermutationGroup> {
        &self.target
    }

    pub fn images(&self) -> &[Permutation] {
        &self.images
    }

    pub fn apply(&self, g: &Permutation) -> &Permutation {
        let i = self
            .source
            .index_of(g)
            .unwrap_or_else(|| panic!("{g:?} is not in the source group"));
        &self.images[i]
    }

    /// `self ∘ before`.
    pub fn after(&self, before: &GroupHom) -> GroupHom {
        let images = before.images.iter().map(|x| self.apply(x).clone()).collect();
        GroupHom {
            source: before.source.clone(),
            target: self.target.clone(),
            images,
        }
    }

    /// `x ↦ c · self(x) · c⁻¹` for `c` in the target group.
    pub fn conjugated(&self, c: &Permutation) -> GroupHom {
        let ci = c.inverse();
        let images = self.images.iter().map(|y| c.compose(y).compose(&ci)).collect();
        GroupHom {
            source: self.source.clone(),
            target: self.target.clone(),
            images,
        }
    }

    /// Exhaustive check on generator × element products.
    pub fn is_homomorphism(&self) -> bool {
        if self.images.iter().any(|y| !self.target.contains(y)) {
            return false;
        }
        self.source.generators().iter().all(|g| {
            let fg = self.apply(g);
            self.source
                .elements()
                .iter()
                .zip(&self.images)
                .all(|(x, fx)| self.apply(&g.compose(x)) == &fg.compose(fx))
        })
    }

    pub fn is_injective(&self) -> bool {
        let distinct: HashSet<&Permutation> = self.images.iter().collect();
        distinct.len() == self.images.len()
    }

    /// Preimage table: target element ↦ indices of source elements.
    pub fn preimages(&self) -> HashMap<Permutation, Vec<usize>> {
        let mut table: HashMap<Permutation, Vec<usize>> = HashMap::new();
        for (i, y) in self.images.iter().enumerate() {
            table.entry(y.clone()).or_default().push(i);
        }
        table
    }
}

/// Extends an assignment on the source generators to a homomorphism, if one
/// exists, by walking the Cayley graph.
pub fn extend_to_hom(
    source: &Arc<PermutationGroup>,
    target: &Arc<PermutationGroup>,
    generator_images: &[Permutation],
) -> Option<GroupHom> {
    let gens = source.generators();
    debug_assert_eq!(gens.len(), generator_images.len());
    let n = source.order();
    let mut images: Vec<Option<Permutation>> = vec![None; n];
    images[0] = Some(target.identity().clone());
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let x = &source.elements()[i];
        let fx = images[i].clone().expect("queued elements are mapped");
        for (g, fg) in gens.iter().zip(generator_images) {
            let j = source.index_of(&g.compose(x)).expect("group is closed");
            let fy = fg.compose(&fx);
            match &images[j] {
                Some(existing) if *existing != fy => return None,
                Some(_) => {}
                None => {
                    images[j] = Some(fy);
                    queue.push_back(j);
                }
            }
        }
    }
    Some(GroupHom {
        source: source.clone(),
        target: target.clone(),
        images: images.into_iter().map(|y| y.expect("Cayley graph is connected")).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_orders() {
        let s = Permutation::transposition(3, 0, 1);
        let t = Permutation::transposition(3, 1, 2);
        assert_eq!(group_closure(3, &[s.clone()]).unwrap().order(), 2);
        assert_eq!(group_closure(3, &[s, t]).unwrap().order(), 6);
        assert_eq!(group_closure(4, &[]).unwrap().order(), 1);
    }

    #[test]
    fn closure_rejects_mixed_degrees() {
        let err = group_closure(3, &[Permutation::identity(3), Permutation::identity(2)]).unwrap_err();
        assert!(err.to_string().contains("degree mismatch"));
    }

    #[test]
    fn elements_sorted_identity_first() {
        let g = PermutationGroup::symmetric(4);
        assert_eq!(g.order(), 24);
        assert!(g.identity().is_identity());
        assert!(g.elements().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn young_subgroup_and_products() {
        let g = PermutationGroup::young_subgroup(&[2, 3]);
        assert_eq!(g.order(), 12);
        let p = PermutationGroup::symmetric(2).direct_product(&PermutationGroup::symmetric(3));
        assert_eq!(p, g);
    }

    #[test]
    fn subgroup_from_elements_regenerates() {
        let s4 = PermutationGroup::symmetric(4);
        let stab: Vec<Permutation> = s4.elements().iter().filter(|p| p.apply(3) == 3).cloned().collect();
        let h = PermutationGroup::from_closed_elements(4, stab);
        assert_eq!(h.order(), 6);
        let again = group_closure(4, h.generators()).unwrap();
        assert_eq!(again, h);
    }

    #[test]
    fn extension_detects_non_homomorphisms() {
        let s3 = Arc::new(PermutationGroup::symmetric(3));
        let c2 = Arc::new(PermutationGroup::symmetric(2));
        let sign: Vec<Permutation> = s3
            .generators()
            .iter()
            .map(|_| Permutation::transposition(2, 0, 1))
            .collect();
        let h = extend_to_hom(&s3, &c2, &sign).unwrap();
        assert!(h.is_homomorphism());
        let bad = vec![Permutation::transposition(2, 0, 1), Permutation::identity(2)];
        assert!(extend_to_hom(&s3, &c2, &bad).is_none());
    }
}
