//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the library's group or pullback machinery; spans and functors are only
//! read as input data.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use heisenberg_spans::groupoid::GroupoidFunctor;
use heisenberg_spans::span::{Letter, Span};

pub type Perm = Vec<usize>;

/// `a ∘ b`: apply `b` first.
pub fn after(a: &Perm, b: &Perm) -> Perm {
    b.iter().map(|&i| a[i]).collect()
}

pub fn inverse(a: &Perm) -> Perm {
    let mut out = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        out[j] = i;
    }
    out
}

fn identity(n: usize) -> Perm {
    (0..n).collect()
}

/// Pairs `(g, F(g))` for every `g` generated from `gens`, by breadth-first
/// search over words in the generators.
pub fn graph_closure(n_src: usize, n_tgt: usize, gens: &[(Perm, Perm)]) -> Vec<(Perm, Perm)> {
    let start = (identity(n_src), identity(n_tgt));
    let mut seen: BTreeSet<Perm> = BTreeSet::from([start.0.clone()]);
    let mut out = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    while let Some((g, fg)) = queue.pop_front() {
        for (h, fh) in gens {
            let next = (after(h, &g), after(fh, &fg));
            if seen.insert(next.0.clone()) {
                out.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    out
}

/// `(g, F(g))` for the whole automorphism group of object `x`.
fn functor_graph(f: &GroupoidFunctor, x: usize) -> Vec<(Perm, Perm)> {
    let aut = f.source.aut(x);
    let b = f.object(x);
    let gens: Vec<(Perm, Perm)> = aut.generators().iter().map(|g| (g.images(), f.map(x, g).images())).collect();
    graph_closure(aut.degree(), f.target.aut(b).degree(), &gens)
}

/// Classes of raw triples `(x, y, φ: F(x) → G(y))` under `(g, h)·φ = G(h) φ F(g)⁻¹`,
/// as sorted `(x, y, stabilizer order)`.
pub fn raw_triple_classes(f: &GroupoidFunctor, g: &GroupoidFunctor) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for x in 0..f.source.len() {
        let fx = functor_graph(f, x);
        for y in 0..g.source.len() {
            let b = f.object(x);
            if g.object(y) != b {
                continue;
            }
            let gy = functor_graph(g, y);
            let base = f.target.aut(b);
            let base_gens: Vec<(Perm, Perm)> = base.generators().iter().map(|p| (p.images(), p.images())).collect();
            let isos: Vec<Perm> = graph_closure(base.degree(), base.degree(), &base_gens).into_iter().map(|p| p.0).collect();
            let mut unvisited: BTreeSet<Perm> = isos.into_iter().collect();
            while let Some(phi) = unvisited.pop_first() {
                let mut orbit = BTreeSet::from([phi.clone()]);
                let mut queue = VecDeque::from([phi]);
                while let Some(p) = queue.pop_front() {
                    let moves = fx.iter().map(|(_, fg)| after(&p, &inverse(fg))).chain(gy.iter().map(|(_, gh)| after(gh, &p)));
                    for q in moves {
                        if orbit.insert(q.clone()) {
                            unvisited.remove(&q);
                            queue.push_back(q);
                        }
                    }
                }
                out.push((x, y, fx.len() * gy.len() / orbit.len()));
            }
        }
    }
    out.sort();
    out
}

/// The classes the library built for a composite, in the same shape.
pub fn pullback_classes(composite: &Span) -> Vec<(usize, usize, usize)> {
    let pb = composite.pullback.as_ref().expect("composites carry their pullback");
    let mut out: Vec<_> = pb
        .classes
        .iter()
        .enumerate()
        .map(|(c, t)| (t.first, t.second, pb.groupoid.aut(c).order()))
        .collect();
    out.sort();
    out
}

/// `D(A)` and `D(A†)` written down directly: `a zⁿ = n zⁿ⁻¹`, `a† zⁿ = zⁿ⁺¹`.
pub fn ladder(letter: Letter, max_card: usize) -> Vec<Vec<i64>> {
    let n = max_card + 1;
    let mut m = vec![vec![0; n]; n];
    for j in 0..n {
        match letter {
            Letter::Raise if j + 1 < n => m[j + 1][j] = 1,
            Letter::Lower if j > 0 => m[j - 1][j] = j as i64,
            _ => {}
        }
    }
    m
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let (r, k, c) = (a.len(), b.len(), b[0].len());
    (0..r).map(|i| (0..c).map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum()).collect()).collect()
}

/// Product of the ladder matrices of `word`, leftmost factor last.
pub fn word_matrix(word: &[Letter], max_card: usize) -> Vec<Vec<i64>> {
    let n = max_card + 1;
    let mut m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for x in word {
        m = mat_mul(&m, &ladder(*x, max_card));
    }
    m
}

/// Every word over `{A, A†}` of length at most `len`.
pub fn all_words(len: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<Letter>| {
                [Letter::Lower, Letter::Raise].into_iter().map(move |x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// `(2k − 1)!!`, the number of perfect matchings of `2k` points.
pub fn perfect_matchings(k: u64) -> u64 {
    (1..=k).map(|i| 2 * i - 1).product()
}
