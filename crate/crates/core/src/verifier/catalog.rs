use std::fmt;

use serde::Serialize;

use super::eval::{eval_one_cell, eval_two_cell};
use super::term::{OneCellTerm, TwoCellTerm};
use crate::error::{Error, Result};
use crate::span::{direct_sum, restrict_to_source, spans_isomorphic, word_height, Letter, Span};
use crate::two_cell::{equivalent_two_cells, restrict_two_cell, two_cell_sum, Generator, TwoCell};

use Generator::*;
use Letter::{Lower, Raise};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    Equal,
    NotEqual,
    Zero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Verified,
    Failed,
    ExpectedInequalityConfirmed,
}

impl CheckStatus {
    pub fn passed(self) -> bool {
        self != CheckStatus::Failed
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Verified => "verified",
            CheckStatus::Failed => "failed",
            CheckStatus::ExpectedInequalityConfirmed => "expected-inequality-confirmed",
        })
    }
}

/// One side of a relation.
#[derive(Clone, Debug, PartialEq)]
pub enum RelationSide {
    TwoCell(TwoCellTerm),
    /// Hom-set sum: disjoint union of apexes.
    TwoCellSum(Vec<TwoCellTerm>),
    Span(OneCellTerm),
    SpanSum(Vec<OneCellTerm>),
}

impl RelationSide {
    /// Largest [`word_height`] over every boundary word met while evaluating.
    fn height(&self) -> Result<usize> {
        let words: Vec<Vec<Letter>> = match self {
            RelationSide::TwoCell(t) => t.boundaries()?,
            RelationSide::TwoCellSum(ts) => {
                let mut all = Vec::new();
                for t in ts {
                    all.extend(t.boundaries()?);
                }
                all
            }
            RelationSide::Span(s) => vec![s.word.clone()],
            RelationSide::SpanSum(ss) => ss.iter().map(|s| s.word.clone()).collect(),
        };
        Ok(words.iter().map(|w| word_height(w)).max().unwrap_or(0))
    }

    fn max_degree(&self) -> Result<usize> {
        match self {
            RelationSide::TwoCell(t) => t.max_degree(),
            RelationSide::TwoCellSum(ts) => ts.iter().map(TwoCellTerm::max_degree).try_fold(0, |a, d| Ok(a.max(d?))),
            RelationSide::Span(s) => Ok(s.degree()),
            RelationSide::SpanSum(ss) => Ok(ss.iter().map(OneCellTerm::degree).max().unwrap_or(0)),
        }
    }
}

impl fmt::Display for RelationSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |parts: Vec<String>| parts.join(" + ");
        match self {
            RelationSide::TwoCell(t) => write!(f, "{t}"),
            RelationSide::TwoCellSum(ts) => write!(f, "{}", join(ts.iter().map(|t| format!("({t})")).collect())),
            RelationSide::Span(s) => write!(f, "{s}"),
            RelationSide::SpanSum(ss) => write!(f, "{}", join(ss.iter().map(|s| s.to_string()).collect()).replace(" + ", " ⊕ ")),
        }
    }
}

/// A named relation to check.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: &'static str,
    pub description: &'static str,
    pub lhs: RelationSide,
    /// Absent for [`Expectation::Zero`].
    pub rhs: Option<RelationSide>,
    pub expectation: Expectation,
}

/// Outcome of one relation check.
#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub description: String,
    pub lhs: String,
    pub rhs: String,
    pub expectation: Expectation,
    pub max_card: usize,
    /// Histories compared start from sets of at most this many elements.
    pub window: usize,
    /// Apex classes compared on each side.
    pub classes_compared: (usize, usize),
    pub status: CheckStatus,
    pub witness: String,
}

enum Evaluated {
    Cell(TwoCell),
    Span(Span),
}

fn evaluate(side: &RelationSide, max_card: usize, bound: usize) -> Result<Evaluated> {
    let cell = |t: &TwoCellTerm| eval_two_cell(t, max_card).map(|c| restrict_two_cell(&c, bound));
    let span = |t: &OneCellTerm| eval_one_cell(t, max_card);
    Ok(match side {
        RelationSide::TwoCell(t) => Evaluated::Cell(cell(t)?),
        RelationSide::TwoCellSum(ts) => {
            let mut it = ts.iter();
            let first = it.next().ok_or_else(|| Error::InvalidParameter("empty sum".into()))?;
            let mut acc = cell(first)?;
            for t in it {
                acc = two_cell_sum(&acc, &cell(t)?)?;
            }
            Evaluated::Cell(acc)
        }
        RelationSide::Span(t) => Evaluated::Span(restrict_to_source(&*span(t)?, bound)),
        RelationSide::SpanSum(ts) => {
            let mut it = ts.iter();
            let first = it.next().ok_or_else(|| Error::InvalidParameter("empty sum".into()))?;
            let mut acc = (*span(first)?).clone();
            for t in it {
                acc = direct_sum(&acc, &*span(t)?)?;
            }
            Evaluated::Span(restrict_to_source(&acc, bound))
        }
    })
}

fn compare(lhs: &Evaluated, rhs: &Evaluated) -> Result<Option<String>> {
    match (lhs, rhs) {
        (Evaluated::Cell(a), Evaluated::Cell(b)) => Ok(equivalent_two_cells(a, b).and_then(|w| {
            w.verify(a, b).then(|| {
                let moved = w.sigma.iter().chain(&w.tau).filter(|p| !p.is_identity()).count();
                format!("{} apex classes matched, {} non-identity σ/τ components", w.component_map.len(), moved)
            })
        })),
        (Evaluated::Span(a), Evaluated::Span(b)) => Ok(spans_isomorphic(a, b).and_then(|w| {
            w.verify(a, b)
                .then(|| format!("{} apex classes matched with natural isomorphisms on both legs", w.component_map.len()))
        })),
        _ => Err(Error::InvalidParameter("a relation compares a span with a 2-cell".into())),
    }
}

fn class_count(e: &Evaluated) -> usize {
    match e {
        Evaluated::Cell(c) => c.apex.len(),
        Evaluated::Span(s) => s.apex.len(),
    }
}

/// Evaluates both sides inside the safe window and compares them.
pub fn check_relation(rel: &Relation, max_card: usize) -> RelationCheck {
    let mut out = RelationCheck {
        name: rel.name.into(),
        description: rel.description.into(),
        lhs: rel.lhs.to_string(),
        rhs: rel.rhs.as_ref().map_or_else(|| "0".into(), ToString::to_string),
        expectation: rel.expectation,
        max_card,
        window: 0,
        classes_compared: (0, 0),
        status: CheckStatus::Failed,
        witness: String::new(),
    };
    match run_check(rel, max_card, &mut out) {
        Ok(()) => {}
        Err(e) => {
            out.status = CheckStatus::Failed;
            out.witness = format!("error: {e}");
        }
    }
    out
}

fn run_check(rel: &Relation, max_card: usize, out: &mut RelationCheck) -> Result<()> {
    let mut degree = rel.lhs.max_degree()?;
    let mut height = rel.lhs.height()?;
    if let Some(r) = &rel.rhs {
        degree = degree.max(r.max_degree()?);
        height = height.max(r.height()?);
    }
    if max_card < degree {
        return Err(Error::WindowTooSmall {
            required: degree,
            available: max_card,
        });
    }
    let bound = max_card - height;
    out.window = bound;
    let lhs = evaluate(&rel.lhs, max_card, bound)?;
    out.classes_compared.0 = class_count(&lhs);
    match (rel.expectation, &rel.rhs) {
        (Expectation::Zero, _) => {
            let n = class_count(&lhs);
            if n == 0 {
                out.status = CheckStatus::Verified;
                out.witness = "empty apex".into();
            } else {
                out.witness = format!("{n} apex classes survive");
            }
        }
        (_, None) => return Err(Error::InvalidParameter("relation without a right-hand side".into())),
        (exp, Some(r)) => {
            let rhs = evaluate(r, max_card, bound)?;
            out.classes_compared.1 = class_count(&rhs);
            let found = compare(&lhs, &rhs)?;
            out.status = match (exp, &found) {
                (Expectation::Equal, Some(_)) => CheckStatus::Verified,
                (Expectation::NotEqual, None) => CheckStatus::ExpectedInequalityConfirmed,
                _ => CheckStatus::Failed,
            };
            out.witness = found.unwrap_or_else(|| {
                format!(
                    "no equivalence ({} vs {} apex classes)",
                    class_count(&lhs),
                    class_count(&rhs)
                )
            });
        }
    }
    Ok(())
}

fn t(source: Vec<Letter>, layers: &[(usize, Generator)]) -> TwoCellTerm {
    layers
        .iter()
        .fold(TwoCellTerm::identity(source), |acc, &(o, g)| acc.then(o, g))
}

fn id(word: Vec<Letter>) -> RelationSide {
    RelationSide::TwoCell(TwoCellTerm::identity(word))
}

/// Every relation of the diagram calculus, plus the span-level commutation
/// relation and the two expected inequalities.
pub fn heisenberg_catalog() -> Vec<Relation> {
    let two = RelationSide::TwoCell;
    let (l, r) = (Lower, Raise);
    vec![
        Relation {
            name: "commutation",
            description: "A∘A† ≅ A†∘A ⊕ id as spans",
            lhs: RelationSide::Span(OneCellTerm::new(vec![l, r])),
            rhs: Some(RelationSide::SpanSum(vec![OneCellTerm::new(vec![r, l]), OneCellTerm::new(vec![])])),
            expectation: Expectation::Equal,
        },
        Relation {
            name: "biproduct-1",
            description: "loop cancellation: (i_id)† · i_id = id_id",
            lhs: two(t(vec![], &[(0, IId), (0, IIdDagger)])),
            rhs: Some(id(vec![])),
            expectation: Expectation::Equal,
        },
        Relation {
            name: "biproduct-2",
            description: "(i_id)† · i_{A†∘A} = 0",
            lhs: two(t(vec![r, l], &[(0, IAdagA), (0, IIdDagger)])),
            rhs: None,
            expectation: Expectation::Zero,
        },
        Relation {
            name: "biproduct-3",
            description: "(i_{A†∘A})† · i_id = 0",
            lhs: two(t(vec![], &[(0, IId), (0, IAdagADagger)])),
            rhs: None,
            expectation: Expectation::Zero,
        },
        Relation {
            name: "biproduct-4",
            description: "(i_{A†∘A})† · i_{A†∘A} = id_{A†∘A}",
            lhs: two(t(vec![r, l], &[(0, IAdagA), (0, IAdagADagger)])),
            rhs: Some(id(vec![r, l])),
            expectation: Expectation::Equal,
        },
        Relation {
            name: "biproduct-5",
            description: "i_id · (i_id)† + i_{A†∘A} · (i_{A†∘A})† = id_{A∘A†}",
            lhs: RelationSide::TwoCellSum(vec![
                t(vec![l, r], &[(0, IIdDagger), (0, IId)]),
                t(vec![l, r], &[(0, IAdagADagger), (0, IAdagA)]),
            ]),
            rhs: Some(id(vec![l, r])),
            expectation: Expectation::Equal,
        },
        Relation {
            name: "snake-1",
            description: "(ε_R ∘ id_A) · (id_A ∘ η_R) = id_A",
            lhs: two(t(vec![l], &[(1, EtaR), (0, IIdDagger)])),
            rhs: Some(id(vec![l])),
            expectation: Expectation::Equal,
        },
        Relation {
            name: "snake-2",
            description: "(id_{A†} ∘ ε_R) · (η_R ∘ id_{A†}) = id_{A†}",
            lhs: two(t(vec![r], &[(0, EtaR), (1, IIdDagger)])),
            rhs: Some(id(vec![r])),
            expectation: Expectation::Equal,
        },
        Relation {
            name: "snake-3",
            description: "(ε_L ∘ id_{A†}) · (id_{A†} ∘ η_L) = id_{A†}",
            lhs: two(t(vec![r], &[(1, IId), (0, EpsL)])),
            rhs: Some(id(vec![r])),
            expectation: Expectation::Equal,
        },
        Relation {
            name: "snake-4",
            description: "(id_A ∘ ε_L) · (η_L ∘ id_A) = id_A",
            lhs: two(t(vec![l], &[(0, IId), (1, EpsL)])),
            rhs: Some(id(vec![l])),
            expectation: Expectation::Equal,
        },
        Relation {
            name: "sym-involution-A",
            description: "μ̂ · μ̂ = id on A∘A",
            lhs: two(t(vec![l, l], &[(0, Sym(l)), (0, Sym(l))])),
            rhs: Some(id(vec![l, l])),
            expectation: Expectation::Equal,
        },
        Relation {
            name: "sym-involution-Adag",
            description: "μ̂ · μ̂ = id on A†∘A†",
            lhs: two(t(vec![r, r], &[(0, Sym(r)), (0, Sym(r))])),
            rhs: Some(id(vec![r, r])),
            expectation: Expectation::Equal,
        },
        Relation {
            name: "braid-A",
            description: "braid relation for μ̂ on A∘A∘A",
            lhs: two(t(vec![l, l, l], &[(0, Sym(l)), (1, Sym(l)), (0, Sym(l))])),
            rhs: Some(two(t(vec![l, l, l], &[(1, Sym(l)), (0, Sym(l)), (1, Sym(l))]))),
            expectation: Expectation::Equal,
        },
        Relation {
            name: "braid-Adag",
            description: "braid relation for μ̂ on A†∘A†∘A†",
            lhs: two(t(vec![r, r, r], &[(0, Sym(r)), (1, Sym(r)), (0, Sym(r))])),
            rhs: Some(two(t(vec![r, r, r], &[(1, Sym(r)), (0, Sym(r)), (1, Sym(r))]))),
            expectation: Expectation::Equal,
        },
        Relation {
            name: "twist",
            description: "left twist equals zero on A†",
            lhs: two(t(vec![r], &[(0, IId), (1, Sym(r)), (0, IIdDagger)])),
            rhs: None,
            expectation: Expectation::Zero,
        },
        Relation {
            name: "naturality-failure",
            description: "crossings are not natural: the two composites A ⇒ A∘A†∘A differ",
            lhs: two(t(vec![l], &[(0, EtaR), (1, Sym(l)), (0, IAdagA)])),
            rhs: Some(two(t(vec![l], &[(1, EtaR)]))),
            expectation: Expectation::NotEqual,
        },
        Relation {
            name: "mixed-crossing-not-invertible",
            description: "i_{A†∘A} · (i_{A†∘A})† ≠ id_{A∘A†}",
            lhs: two(t(vec![l, r], &[(0, IAdagADagger), (0, IAdagA)])),
            rhs: Some(id(vec![l, r])),
            expectation: Expectation::NotEqual,
        },
    ]
}

/// Checks every catalog entry, one thread per entry.
pub fn run_relation_catalog(max_card: usize) -> Vec<RelationCheck> {
    run_relations(&heisenberg_catalog(), max_card)
}

pub fn run_relations(relations: &[Relation], max_card: usize) -> Vec<RelationCheck> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = relations
            .iter()
            .map(|rel| scope.spawn(move || check_relation(rel, max_card)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("relation checks do not panic"))
            .collect()
    })
}
