//! Property tests over groups, spans, 2-cells, Young's lattice and the
//! linearizations.

mod common;

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use heisenberg_spans::groupoid::{fs_truncated, group_closure, groupoid_cardinality, groupoids_equivalent, Permutation};
use heisenberg_spans::linearize::{degroupoidify_span, number_block, path_block, vacuum_moment};
use heisenberg_spans::span::{
    annihilation_span, compose, creation_span, dagger, plus_one, restrict_to_source, spans_isomorphic, word_height,
    word_span, Letter, Span,
};
use heisenberg_spans::two_cell::{converse_two_cell, equivalent_two_cells, generator_two_cell, vertical_compose, Generator};
use heisenberg_spans::verifier::{eval_two_cell, TwoCellTerm};
use heisenberg_spans::young::{
    branch_down, class_representative, classes_of, mn_character, partitions_of, path_count, specht_generators,
    tensor_with_permutation_rep, Partition, SkewShape, SPECHT_BOUND,
};

const GENERATORS: [Generator; 8] = [
    Generator::IId,
    Generator::IIdDagger,
    Generator::IAdagA,
    Generator::IAdagADagger,
    Generator::EtaR,
    Generator::EpsL,
    Generator::Sym(Letter::Lower),
    Generator::Sym(Letter::Raise),
];

fn letter(raise: bool) -> Letter {
    if raise {
        Letter::Raise
    } else {
        Letter::Lower
    }
}

fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).expect("a shuffle is a permutation"))
}

fn word_strategy(max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(any::<bool>().prop_map(letter), 0..=max_len)
}

/// A layered term grown from `start` by picking among the layers that fit.
fn build_term(start: Vec<Letter>, picks: &[usize]) -> TwoCellTerm {
    let mut term = TwoCellTerm::identity(start.clone());
    let mut word = start;
    for &p in picks {
        let mut options = Vec::new();
        for g in GENERATORS {
            let src = g.source_word();
            if src.len() > word.len() || word.len() - src.len() + g.target_word().len() > 4 {
                continue;
            }
            for off in 0..=word.len() - src.len() {
                if word[off..off + src.len()] == src[..] {
                    options.push((off, g));
                }
            }
        }
        if options.is_empty() {
            break;
        }
        let (off, g) = options[p % options.len()];
        word.splice(off..off + g.source_word().len(), g.target_word());
        term = term.then(off, g);
    }
    term
}

fn safe(s: &Span, word: &[Letter], max_card: usize) -> Span {
    restrict_to_source(s, max_card - word_height(word))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closure_is_a_fixed_point(
        (n, gens) in (1usize..=5).prop_flat_map(|n| (Just(n), prop::collection::vec(perm_strategy(n), 0..3)))
    ) {
        let g = group_closure(n, &gens).unwrap();
        let again = group_closure(n, g.elements()).unwrap();
        prop_assert_eq!(g.order(), again.order());
        let factorial: usize = (1..=n).product();
        prop_assert_eq!(factorial % g.order(), 0);
    }

    #[test]
    fn composition_is_associative(a in word_strategy(1), b in word_strategy(1), c in word_strategy(1)) {
        let m = 5;
        let (sa, sb, sc) = (word_span(&a, m).unwrap(), word_span(&b, m).unwrap(), word_span(&c, m).unwrap());
        let left = compose(&compose(&sa, &sb).unwrap(), &sc).unwrap();
        let right = compose(&sa, &compose(&sb, &sc).unwrap()).unwrap();
        let word: Vec<Letter> = a.iter().chain(&b).chain(&c).copied().collect();
        prop_assert!(spans_isomorphic(&safe(&left, &word, m), &safe(&right, &word, m)).is_some());
    }

    #[test]
    fn dagger_reverses_composition(s in word_strategy(2), t in word_strategy(2)) {
        let m = 5;
        let (ss, st) = (word_span(&s, m).unwrap(), word_span(&t, m).unwrap());
        let lhs = dagger(&compose(&st, &ss).unwrap());
        let rhs = compose(&dagger(&ss), &dagger(&st)).unwrap();
        let word: Vec<Letter> = t.iter().chain(&s).copied().collect();
        let mirrored: Vec<Letter> = word.iter().rev().map(|x| x.dual()).collect();
        let bound = m - word_height(&word).max(word_height(&mirrored));
        let (l, r) = (restrict_to_source(&lhs, bound), restrict_to_source(&rhs, bound));
        prop_assert!(spans_isomorphic(&l, &r).is_some());
    }

    #[test]
    fn degroupoidification_is_functorial(a in word_strategy(2), b in word_strategy(2)) {
        let m = 6;
        let whole: Vec<Letter> = a.iter().chain(&b).copied().collect();
        let d = degroupoidify_span(&word_span(&whole, m).unwrap()).unwrap().matrix;
        let da = degroupoidify_span(&word_span(&a, m).unwrap()).unwrap().matrix;
        let db = degroupoidify_span(&word_span(&b, m).unwrap()).unwrap().matrix;
        let product = &da * &db;
        for col in 0..=m - word_height(&whole) {
            for row in 0..=m {
                prop_assert_eq!(d.get(row, col), product.get(row, col));
            }
        }
    }

    #[test]
    fn truncation_is_stable(word in word_strategy(4)) {
        let w = 5;
        let small = degroupoidify_span(&word_span(&word, w).unwrap()).unwrap().matrix;
        let large = degroupoidify_span(&word_span(&word, w + 1).unwrap()).unwrap().matrix;
        for col in 0..=w - word_height(&word) {
            for row in 0..=w {
                prop_assert_eq!(small.get(row, col), large.get(row, col));
            }
        }
    }

    #[test]
    fn evaluation_respects_converse(start in word_strategy(2), picks in prop::collection::vec(0usize..16, 1..4)) {
        let term = build_term(start, &picks);
        let m = 5;
        let cell = eval_two_cell(&term, m).unwrap();
        let mirrored = eval_two_cell(&term.mirror().unwrap(), m).unwrap();
        prop_assert!(equivalent_two_cells(&mirrored, &converse_two_cell(&cell)).is_some(), "{}", term);
    }

    #[test]
    fn specht_traces_are_characters(
        (n, sigma) in (1usize..=5).prop_flat_map(|n| (Just(n), perm_strategy(n))),
        pick in 0usize..16,
    ) {
        let shapes = partitions_of(n);
        let lambda = &shapes[pick % shapes.len()];
        let gens = specht_generators(lambda, SPECHT_BOUND).unwrap();
        let m = gens.matrix_of(&sigma).unwrap();
        let trace: i64 = (0..m.len()).map(|i| m[i][i]).sum();
        let class = Partition::new(sigma.cycle_type()).unwrap();
        prop_assert_eq!(trace, mn_character(&SkewShape::straight(lambda.clone()), &class).unwrap());
    }
}

#[test]
fn functors_respect_products() {
    for m in 2..=4 {
        let f = plus_one(m, 1, 0).unwrap();
        for x in 0..f.source.len() {
            let gens = f.source.aut(x).generators().to_vec();
            let mut words: Vec<Permutation> = gens.clone();
            for a in &gens {
                for b in &gens {
                    words.push(a.compose(b));
                }
            }
            for g in &words {
                for h in &gens {
                    let lhs = f.map(x, &g.compose(h)).clone();
                    let rhs = f.map(x, g).compose(f.map(x, h));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn equivalence_is_reflexive_and_symmetric() {
    let m = 4;
    let apexes: Vec<Arc<_>> = vec![
        Arc::new(fs_truncated(m, 1)),
        compose(&annihilation_span(m), &creation_span(m)).unwrap().apex,
        compose(&creation_span(m), &annihilation_span(m)).unwrap().apex,
        word_span(&[Letter::Raise, Letter::Raise], m).unwrap().apex.clone(),
    ];
    for g in &apexes {
        assert!(groupoids_equivalent(g, g).is_some());
        for h in &apexes {
            assert_eq!(groupoids_equivalent(g, h).is_some(), groupoids_equivalent(h, g).is_some());
        }
    }
}

#[test]
fn fs_cardinality_is_truncated_exponential() {
    let mut want = BigRational::from_integer(0.into());
    let mut fact = BigInt::from(1);
    for n in 0..=7usize {
        if n > 0 {
            fact *= n;
        }
        want += BigRational::new(1.into(), fact.clone());
        assert_eq!(groupoid_cardinality(&fs_truncated(n, 1)), want);
    }
}

#[test]
fn converse_reverses_vertical_composition() {
    let m = 4;
    let cells: Vec<_> = GENERATORS.iter().map(|g| generator_two_cell(*g, m).unwrap()).collect();
    for a in &cells {
        assert!(equivalent_two_cells(a, a).is_some());
        for b in &cells {
            let Ok(ba) = vertical_compose(b, a) else { continue };
            let lhs = converse_two_cell(&ba);
            let rhs = vertical_compose(&converse_two_cell(a), &converse_two_cell(b)).unwrap();
            assert!(equivalent_two_cells(&lhs, &rhs).is_some());
        }
    }
}

#[test]
fn young_lattice_counts() {
    for n in 0..=6 {
        let mut sum_sq = 0u64;
        for lambda in partitions_of(n) {
            let f = path_count(&Partition::empty(), &lambda);
            sum_sq += f * f;
            let ones = Partition::new(vec![1; n]).unwrap();
            if n > 0 {
                assert_eq!(f as i64, mn_character(&SkewShape::straight(lambda.clone()), &ones).unwrap());
                let total: u64 = tensor_with_permutation_rep(&lambda)
                    .unwrap()
                    .0
                    .iter()
                    .map(|(mu, c)| c * path_count(&Partition::empty(), mu))
                    .sum();
                assert_eq!(total, n as u64 * f);
            }
            for mu in (0..n).flat_map(partitions_of).filter(|mu| lambda.contains(mu)) {
                let via: u64 = branch_down(&lambda)
                    .iter()
                    .filter(|nu| nu.contains(&mu))
                    .map(|nu| path_count(&mu, nu))
                    .sum();
                assert_eq!(path_count(&mu, &lambda), via);
            }
        }
        assert_eq!(sum_sq, (1..=n as u64).product::<u64>());
    }
    assert_eq!(classes_of(4).len(), 5);
    assert_eq!(class_representative(&Partition::new(vec![2, 1]).unwrap()).cycle_type(), vec![2, 1]);
}

#[test]
fn blocks_compose_and_commute() {
    for i in 0..4 {
        for j in i + 1..=5 {
            let mut prod = path_block(i, i + 1).unwrap();
            for s in i + 1..j {
                prod = prod.then(&path_block(s, s + 1).unwrap()).unwrap();
            }
            assert_eq!(prod, path_block(i, j).unwrap());
        }
    }
    for n in 1..=5 {
        let nb = number_block(n);
        assert_eq!(nb.transpose(), nb);
        let up = path_block(n, n + 1).unwrap();
        let down = path_block(n - 1, n).unwrap();
        let lower_raise = up.then(&up.transpose()).unwrap();
        let raise_lower = down.transpose().then(&down).unwrap();
        let id = heisenberg_spans::linearize::DimBlock::identity(n);
        assert_eq!(lower_raise, raise_lower.plus(&id).unwrap());
    }
}

#[test]
fn moments_count_perfect_matchings() {
    for k in 0..=4u64 {
        let want = BigRational::from_integer(common::perfect_matchings(k).into());
        assert_eq!(vacuum_moment(2 * k as usize, 8).unwrap(), want);
        assert_eq!(vacuum_moment(2 * k as usize + 1, 9).unwrap(), BigRational::from_integer(0.into()));
    }
}
