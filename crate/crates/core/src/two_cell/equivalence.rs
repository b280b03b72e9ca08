use super::TwoCell;
use crate::groupoid::{conjugate_iso_search, same_groupoid, GroupHom, LegConstraint, Permutation};
use crate::matching::perfect_matching;

/// An equivalence `U` of 2-cell apexes with natural isomorphisms
/// `σ: P ⇒ P'∘U` and `τ: Q ⇒ Q'∘U` under which `μ` and `ν` paste to `μ'`
/// and `ν'`.
#[derive(Clone, Debug)]
pub struct TwoCellEquivalenceWitness {
    pub component_map: Vec<usize>,
    pub group_isos: Vec<GroupHom>,
    pub sigma: Vec<Permutation>,
    pub tau: Vec<Permutation>,
}

impl TwoCellEquivalenceWitness {
    /// Re-checks the pasting conditions and naturality of `σ`, `τ`.
    pub fn verify(&self, a: &TwoCell, b: &TwoCell) -> bool {
        self.component_map.len() == a.apex.len()
            && self.component_map.iter().enumerate().all(|(z, &w)| {
                let psi = &self.group_isos[z];
                let (s, t) = (&self.sigma[z], &self.tau[z]);
                pastes(a, b, z, w, s, t)
                    && a.apex.aut(z).generators().iter().all(|g| {
                        b.to_source.map(w, psi.apply(g)).compose(s) == s.compose(a.to_source.map(z, g))
                            && b.to_target.map(w, psi.apply(g)).compose(t) == t.compose(a.to_target.map(z, g))
                    })
            })
    }
}

fn pastes(a: &TwoCell, b: &TwoCell, z: usize, w: usize, sigma: &Permutation, tau: &Permutation) -> bool {
    let (x, y) = (a.to_source.object(z), a.to_target.object(z));
    let (s, t) = (&a.source, &a.target);
    let mu = t.left.map(y, tau).compose(&a.mu.components[z]).compose(&s.left.map(x, sigma).inverse());
    if mu != b.mu.components[w] {
        return false;
    }
    let nu = t.right.map(y, tau).compose(&a.nu.components[z]).compose(&s.right.map(x, sigma).inverse());
    nu == b.nu.components[w]
}

type Signature = (usize, usize, usize, Vec<usize>);

fn signature(a: &TwoCell, z: usize) -> Signature {
    (
        a.to_source.object(z),
        a.to_target.object(z),
        a.apex.aut(z).order(),
        a.apex.aut(z).order_profile(),
    )
}

/// A group isomorphism between matched components and the conjugators
/// that make the legs agree.
type Candidate = (GroupHom, Vec<Permutation>);

/// Decides whether two 2-cells between the same spans are equivalent.
///
/// Classes are matched by signature first; each candidate pair is settled
/// by a search over conjugators and generator images.
pub fn equivalent_two_cells(a: &TwoCell, b: &TwoCell) -> Option<TwoCellEquivalenceWitness> {
    if !same_groupoid(&a.source.apex, &b.source.apex) || !same_groupoid(&a.target.apex, &b.target.apex) {
        return None;
    }
    let n = a.apex.len();
    if n != b.apex.len() {
        return None;
    }
    let sig_b: Vec<Signature> = (0..n).map(|w| signature(b, w)).collect();
    let mut found: Vec<Vec<Option<Candidate>>> = vec![vec![None; n]; n];
    for z in 0..n {
        let sig = signature(a, z);
        let (x, y) = (sig.0, sig.1);
        for w in (0..n).filter(|&w| sig_b[w] == sig) {
            let legs = [
                LegConstraint {
                    src_leg: &a.to_source.morphism_map[z],
                    tgt_leg: &b.to_source.morphism_map[w],
                    group: a.source.apex.aut(x),
                },
                LegConstraint {
                    src_leg: &a.to_target.morphism_map[z],
                    tgt_leg: &b.to_target.morphism_map[w],
                    group: a.target.apex.aut(y),
                },
            ];
            let accept = |c: &[Permutation]| pastes(a, b, z, w, &c[0], &c[1]);
            found[z][w] = conjugate_iso_search(a.apex.aut(z), b.apex.aut(w), &legs, &accept);
        }
    }
    let matching = perfect_matching(n, n, |z, w| found[z][w].is_some())?;
    let mut group_isos = Vec::with_capacity(n);
    let mut sigma = Vec::with_capacity(n);
    let mut tau = Vec::with_capacity(n);
    for (z, &w) in matching.iter().enumerate() {
        let (psi, conj) = found[z][w].take().expect("matched pairs carry a witness");
        group_isos.push(psi);
        sigma.push(conj[0].clone());
        tau.push(conj[1].clone());
    }
    Some(TwoCellEquivalenceWitness {
        component_map: matching,
        group_isos,
        sigma,
        tau,
    })
}
