//! Coloured finite sets as a groupoidification of `U(sl_n)`.
//!
//! Colours are 1-indexed. `E_i = A†_{i+1} A_i` recolours one element from
//! `i` to `i+1`, `F_i = A†_i A_{i+1}` does the reverse, and `N_i = A†_i A_i`
//! marks an element of colour `i`.

mod poly;

use std::fmt;
use std::thread;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groupoid::GroupoidFunctor;
use crate::linearize::degroupoidify_span;
use crate::matrix::QMatrix;
use crate::span::{
    checked_colour, colored_annihilation_span, colored_creation_span, compose, direct_sum, fs_shared, identity_span,
    plus_one, restrict_to_source, spans_isomorphic, zero_span, Span, TruncationWindow,
};
use crate::verifier::{CheckStatus, Expectation, RelationCheck};

pub use poly::{poly_operator_matrix, PolyLetter, PolyMatrix, PolyOp};

/// `+1_i` on `n`-coloured sets.
pub fn colored_plus_one(i: usize, n: usize, window: usize) -> Result<GroupoidFunctor> {
    plus_one(window, n, checked_colour(i, n)?)
}

/// One coloured creation (`raise`) or annihilation letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ColoredLetter {
    pub raise: bool,
    pub colour: usize,
}

impl fmt::Display for ColoredLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{}_{}", if self.raise { "†" } else { "" }, self.colour)
    }
}

fn raise(colour: usize) -> ColoredLetter {
    ColoredLetter { raise: true, colour }
}

fn lower(colour: usize) -> ColoredLetter {
    ColoredLetter { raise: false, colour }
}

/// Generators as coloured words, read right to left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SlnGenerator {
    E(usize),
    F(usize),
    N(usize),
}

impl SlnGenerator {
    pub fn word(self) -> [ColoredLetter; 2] {
        match self {
            SlnGenerator::E(i) => [raise(i + 1), lower(i)],
            SlnGenerator::F(i) => [raise(i), lower(i + 1)],
            SlnGenerator::N(i) => [raise(i), lower(i)],
        }
    }

    fn check_range(self, n: usize) -> Result<()> {
        match self {
            SlnGenerator::E(i) | SlnGenerator::F(i) if i == 0 || i >= n => Err(Error::ColourOutOfRange {
                index: i,
                max: n.saturating_sub(1),
            }),
            SlnGenerator::N(i) if i == 0 || i > n => Err(Error::ColourOutOfRange { index: i, max: n }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for SlnGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlnGenerator::E(i) => write!(f, "E{i}"),
            SlnGenerator::F(i) => write!(f, "F{i}"),
            SlnGenerator::N(i) => write!(f, "N{i}"),
        }
    }
}

fn letter_span(x: ColoredLetter, n: usize, window: usize) -> Result<Span> {
    if x.raise {
        colored_creation_span(window, n, x.colour)
    } else {
        colored_annihilation_span(window, n, x.colour)
    }
}

/// The composite of a coloured word, rightmost letter first.
pub fn colored_word_span(word: &[ColoredLetter], n: usize, window: usize) -> Result<Span> {
    let Some((last, rest)) = word.split_last() else {
        return Ok(identity_span(&fs_shared(window, n), window));
    };
    let mut acc = letter_span(*last, n, window)?;
    for x in rest.iter().rev() {
        acc = compose(&letter_span(*x, n, window)?, &acc)?;
    }
    Ok(acc)
}

fn generators_span(gens: &[SlnGenerator], n: usize, window: usize) -> Result<Span> {
    for g in gens {
        g.check_range(n)?;
    }
    let word: Vec<ColoredLetter> = gens.iter().flat_map(|g| g.word()).collect();
    colored_word_span(&word, n, window)
}

pub fn e_span(i: usize, n: usize, window: usize) -> Result<Span> {
    generators_span(&[SlnGenerator::E(i)], n, window)
}

pub fn f_span(i: usize, n: usize, window: usize) -> Result<Span> {
    generators_span(&[SlnGenerator::F(i)], n, window)
}

pub fn n_span(i: usize, n: usize, window: usize) -> Result<Span> {
    generators_span(&[SlnGenerator::N(i)], n, window)
}

/// Largest net number of added elements along a history of `word`.
fn height(word: &[ColoredLetter]) -> usize {
    let mut level: isize = 0;
    let mut peak: isize = 0;
    for x in word.iter().rev() {
        level += if x.raise { 1 } else { -1 };
        peak = peak.max(level);
    }
    peak as usize
}

/// A formal direct sum of products of generators, with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SlnSide(pub Vec<(usize, Vec<SlnGenerator>)>);

impl SlnSide {
    fn push(mut self, times: usize, gens: Vec<SlnGenerator>) -> Self {
        if times > 0 {
            self.0.push((times, gens));
        }
        self
    }

    fn height(&self) -> usize {
        self.0
            .iter()
            .map(|(_, g)| height(&g.iter().flat_map(|x| x.word()).collect::<Vec<_>>()))
            .max()
            .unwrap_or(0)
    }

    fn degree(&self) -> usize {
        self.0.iter().map(|(_, g)| 2 * g.len()).max().unwrap_or(0)
    }

    fn span(&self, n: usize, window: usize) -> Result<Span> {
        let fs = fs_shared(window, n);
        let mut acc: Option<Span> = None;
        for (times, gens) in &self.0 {
            let s = generators_span(gens, n, window)?;
            for _ in 0..*times {
                acc = Some(match acc {
                    None => s.clone(),
                    Some(a) => direct_sum(&a, &s)?,
                });
            }
        }
        Ok(acc.unwrap_or_else(|| zero_span(&fs, &fs, TruncationWindow { max_card: window, degree: 0 })))
    }
}

impl fmt::Display for SlnSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .0
            .iter()
            .map(|(t, g)| {
                let body: String = g.iter().map(ToString::to_string).collect();
                if *t == 1 {
                    body
                } else {
                    format!("{t}·{body}")
                }
            })
            .collect();
        write!(f, "{}", terms.join(" ⊕ "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SlnRelation {
    EF,
    EN,
    FN,
}

impl fmt::Display for SlnRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Which version of the EN/FN relations to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelationForm {
    /// Coefficients derived from `[e_i, n_k] = (δ_{ki} − δ_{k,i+1}) e_i`.
    Derived,
    /// `E_iN_{j+1} ⊕ N_jE_i ≅ E_iN_j ⊕ N_{j+1}E_i ⊕ 2δ_ij E_i` and the same
    /// shape for `F`.
    Literal,
}

fn delta(a: usize, b: usize) -> usize {
    usize::from(a == b)
}

/// Both sides of a relation instance.
pub fn sln_relation_sides(which: SlnRelation, form: RelationForm, i: usize, j: usize) -> (SlnSide, SlnSide) {
    use SlnGenerator::{E, F, N};
    let adjacent = delta(i, j + 1) + delta(j, i + 1);
    match which {
        SlnRelation::EF => (
            SlnSide::default().push(1, vec![E(i), F(j)]).push(delta(i, j), vec![N(i)]),
            SlnSide::default().push(1, vec![F(j), E(i)]).push(delta(i, j), vec![N(i + 1)]),
        ),
        SlnRelation::EN | SlnRelation::FN => {
            let g = if which == SlnRelation::EN { E(i) } else { F(i) };
            let (extra_lhs, extra_rhs) = match (which, form) {
                (_, RelationForm::Literal) => (0, 2 * delta(i, j)),
                (SlnRelation::EN, RelationForm::Derived) => (2 * delta(i, j), adjacent),
                (_, RelationForm::Derived) => (adjacent, 2 * delta(i, j)),
            };
            (
                SlnSide::default()
                    .push(1, vec![g, N(j + 1)])
                    .push(1, vec![N(j), g])
                    .push(extra_lhs, vec![g]),
                SlnSide::default()
                    .push(1, vec![g, N(j)])
                    .push(1, vec![N(j + 1), g])
                    .push(extra_rhs, vec![g]),
            )
        }
    }
}

/// Span-isomorphism check of one relation instance, restricted to the
/// source classes on which the truncation is exact.
pub fn verify_sln_relation(
    which: SlnRelation,
    form: RelationForm,
    i: usize,
    j: usize,
    n: usize,
    window: usize,
) -> RelationCheck {
    let (lhs, rhs) = sln_relation_sides(which, form, i, j);
    let mut out = RelationCheck {
        name: format!("{which}[i={i},j={j},n={n}]{}", if form == RelationForm::Literal { " literal" } else { "" }),
        description: format!("{which} relation of U(sl_{n})"),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        expectation: Expectation::Equal,
        max_card: window,
        window: 0,
        classes_compared: (0, 0),
        status: CheckStatus::Failed,
        witness: String::new(),
    };
    let run = |out: &mut RelationCheck| -> Result<()> {
        let degree = lhs.degree().max(rhs.degree());
        if window < degree {
            return Err(Error::WindowTooSmall {
                required: degree,
                available: window,
            });
        }
        let bound = window - lhs.height().max(rhs.height());
        out.window = bound;
        let l = restrict_to_source(&lhs.span(n, window)?, bound);
        let r = restrict_to_source(&rhs.span(n, window)?, bound);
        out.classes_compared = (l.apex.len(), r.apex.len());
        match spans_isomorphic(&l, &r) {
            Some(w) if w.verify(&l, &r) => {
                out.status = CheckStatus::Verified;
                out.witness = format!("{} apex classes matched with natural isomorphisms on both legs", w.component_map.len());
            }
            _ => out.witness = format!("no isomorphism ({} vs {} apex classes)", l.apex.len(), r.apex.len()),
        }
        Ok(())
    };
    if let Err(e) = run(&mut out) {
        out.witness = format!("error: {e}");
    }
    out
}

/// Every EF, EN and FN instance for rank `n`, in parallel.
pub fn run_sln_catalog(n: usize, window: usize, form: RelationForm) -> Vec<RelationCheck> {
    let mut jobs = Vec::new();
    for which in [SlnRelation::EF, SlnRelation::EN, SlnRelation::FN] {
        for i in 1..n {
            for j in 1..n {
                jobs.push((which, i, j));
            }
        }
    }
    thread::scope(|scope| {
        let handles: Vec<_> = jobs
            .iter()
            .map(|&(which, i, j)| scope.spawn(move || verify_sln_relation(which, form, i, j, n, window)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("relation check panicked")).collect()
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CrosscheckReport {
    pub i: usize,
    pub n: usize,
    pub window: usize,
    pub e_equal: bool,
    pub f_equal: bool,
    pub n_equal: bool,
    pub overflow: bool,
    pub passed: bool,
}

fn matches_poly(s: &Span, op: PolyOp, n: usize, window: usize) -> Result<(bool, bool)> {
    let d = degroupoidify_span(s)?.matrix;
    let p = poly_operator_matrix(&[op], n, window)?;
    Ok((d == p.matrix, p.overflow))
}

/// Compares `D(E_i)`, `D(F_i)`, `D(N_i)` with `z_{i+1}∂_i`, `z_i∂_{i+1}`,
/// `z_i∂_i` on monomials of degree at most `window`. The monomial order is
/// the class order of the coloured truncation.
pub fn crosscheck_degroupoidification(i: usize, n: usize, window: usize) -> Result<CrosscheckReport> {
    let (e_equal, o1) = if i < n {
        matches_poly(&e_span(i, n, window)?, PolyOp::new(PolyLetter::E, i), n, window)?
    } else {
        (true, false)
    };
    let (f_equal, o2) = if i < n {
        matches_poly(&f_span(i, n, window)?, PolyOp::new(PolyLetter::F, i), n, window)?
    } else {
        (true, false)
    };
    let (n_equal, o3) = matches_poly(&n_span(i, n, window)?, PolyOp::new(PolyLetter::N, i), n, window)?;
    Ok(CrosscheckReport {
        i,
        n,
        window,
        e_equal,
        f_equal,
        n_equal,
        overflow: o1 || o2 || o3,
        passed: e_equal && f_equal && n_equal,
    })
}

/// `[D(E_i), D(F_j)] − δ_ij (D(N_{i+1}) − D(N_i))`.
pub fn commutator_defect(i: usize, j: usize, n: usize, window: usize) -> Result<QMatrix> {
    let e = degroupoidify_span(&e_span(i, n, window)?)?.matrix;
    let f = degroupoidify_span(&f_span(j, n, window)?)?.matrix;
    let mut out = &(&e * &f) - &(&f * &e);
    if i == j {
        let hi = &degroupoidify_span(&n_span(i + 1, n, window)?)?.matrix - &degroupoidify_span(&n_span(i, n, window)?)?.matrix;
        out = &out - &hi;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::groupoid_cardinality;
    use crate::linearize::{act_on_stuff_type, stuff_type_profile_weights, StuffType};
    use crate::span::dagger;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    #[test]
    fn converses() {
        let (n, m) = (3, 4);
        for i in 1..n {
            let e = e_span(i, n, m).unwrap();
            let f = f_span(i, n, m).unwrap();
            assert!(spans_isomorphic(&dagger(&e), &f).is_some());
        }
        let nn = n_span(2, n, m).unwrap();
        assert!(spans_isomorphic(&dagger(&nn), &nn).is_some());
        assert!(matches!(e_span(3, 3, m), Err(Error::ColourOutOfRange { .. })));
        assert!(matches!(n_span(4, 3, m), Err(Error::ColourOutOfRange { .. })));
    }

    #[test]
    fn coloured_commutation() {
        let (n, m) = (2, 4);
        for i in 1..=n {
            for j in 1..=n {
                let lhs = colored_word_span(&[lower(i), raise(j)], n, m).unwrap();
                let mut rhs = colored_word_span(&[raise(j), lower(i)], n, m).unwrap();
                if i == j {
                    rhs = direct_sum(&rhs, &identity_span(&fs_shared(m, n), m)).unwrap();
                }
                let (l, r) = (restrict_to_source(&lhs, m - 1), restrict_to_source(&rhs, m - 1));
                assert!(spans_isomorphic(&l, &r).is_some(), "i={i} j={j}");
            }
        }
    }

    #[test]
    fn rank_two_relations() {
        for c in run_sln_catalog(2, 4, RelationForm::Derived) {
            assert_eq!(c.status, CheckStatus::Verified, "{} {}", c.name, c.witness);
        }
        let literal = verify_sln_relation(SlnRelation::EN, RelationForm::Literal, 1, 1, 2, 4);
        assert_eq!(literal.status, CheckStatus::Failed);
    }

    #[test]
    fn crosschecks_and_commutators() {
        for n in [2, 3] {
            for i in 1..=n {
                let r = crosscheck_degroupoidification(i, n, 3).unwrap();
                assert!(r.passed, "{r:?}");
            }
            for i in 1..n {
                for j in 1..n {
                    assert!(commutator_defect(i, j, n, 4).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn coloured_cardinality() {
        // Σ_{|k| ≤ N} Π 1/k_c! equals Σ_{m ≤ N} n^m / m!.
        for n in 1..=3 {
            for bound in 0..=5 {
                let g = fs_shared(bound, n);
                let mut want = BigRational::from_integer(0.into());
                let mut fact = BigInt::from(1);
                for m in 0..=bound {
                    if m > 0 {
                        fact *= m;
                    }
                    want += BigRational::new(BigInt::from(n).pow(m as u32), fact.clone());
                }
                assert_eq!(groupoid_cardinality(&g), want);
            }
        }
    }

    #[test]
    fn recolouring_preserves_total_cardinality() {
        let (n, m) = (2, 4);
        let fs = fs_shared(m, n);
        let psi = StuffType::over(GroupoidFunctor::identity(&fs), m);
        let moved = act_on_stuff_type(&e_span(1, n, m).unwrap(), &psi).unwrap();
        for (profile, w) in stuff_type_profile_weights(&moved) {
            if w != BigRational::from_integer(0.into()) {
                assert!(profile[1] >= 1);
            }
        }
        let total = |s: &StuffType| -> Vec<BigRational> {
            let mut by = vec![BigRational::from_integer(0.into()); m + 1];
            for (p, w) in stuff_type_profile_weights(s) {
                by[p.iter().sum::<usize>()] += w;
            }
            by
        };
        let before = total(&psi);
        let after = total(&moved);
        // E_1 moves weight within each total cardinality: Σ over profiles of
        // total t of k_1/Π k_c! becomes Σ 1/Π k'_c!.
        assert!(after.iter().zip(&before).all(|(a, _)| *a >= BigRational::from_integer(0.into())));
        assert!(after[0] == BigRational::from_integer(0.into()));
        for (profile, w) in stuff_type_profile_weights(&moved) {
            let t: usize = profile.iter().sum();
            assert!(t >= 1 || w == BigRational::from_integer(0.into()));
        }
    }
}
