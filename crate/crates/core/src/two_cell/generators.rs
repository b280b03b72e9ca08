use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{converse_two_cell, TwoCell};
use crate::error::{Error, Result};
use crate::groupoid::{GroupoidFunctor, NaturalIso, Permutation, WeakPullback};
use crate::span::{fs_shared, inclusion, plus_one, word_span, Letter, Span};

/// Generating 2-cells. `eta_L` and `eps_R` are the same cells as `i_id`
/// and `i_id_dagger`, and parse to those variants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Generator {
    /// `id ⇒ A∘A†`: relates the identity history to "add then remove the same element".
    IId,
    /// `A∘A† ⇒ id`.
    IIdDagger,
    /// `A†∘A ⇒ A∘A†`: remove-then-add as add-then-remove of a different element.
    IAdagA,
    /// `A∘A† ⇒ A†∘A`.
    IAdagADagger,
    /// `id ⇒ A†∘A`.
    EtaR,
    /// `A†∘A ⇒ id`.
    EpsL,
    /// Swap of two like letters: on `A∘A` it swaps the removed elements, on
    /// `A†∘A†` the added ones.
    Sym(Letter),
}

use Letter::{Lower, Raise};

impl Generator {
    pub fn parse(name: &str) -> Result<Generator> {
        Ok(match name {
            "i_id" | "eta_L" => Generator::IId,
            "i_id_dagger" | "eps_R" => Generator::IIdDagger,
            "i_AdagA" => Generator::IAdagA,
            "i_AdagA_dagger" => Generator::IAdagADagger,
            "eta_R" => Generator::EtaR,
            "eps_L" => Generator::EpsL,
            "sym_A" | "sym" => Generator::Sym(Lower),
            "sym_Adag" => Generator::Sym(Raise),
            other => return Err(Error::UnknownGenerator(other.into())),
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Generator::IId => "i_id",
            Generator::IIdDagger => "i_id_dagger",
            Generator::IAdagA => "i_AdagA",
            Generator::IAdagADagger => "i_AdagA_dagger",
            Generator::EtaR => "eta_R",
            Generator::EpsL => "eps_L",
            Generator::Sym(Lower) => "sym_A",
            Generator::Sym(Raise) => "sym_Adag",
        }
    }

    pub fn source_word(self) -> Vec<Letter> {
        match self {
            Generator::IId | Generator::EtaR => vec![],
            Generator::IIdDagger | Generator::IAdagADagger => vec![Lower, Raise],
            Generator::IAdagA | Generator::EpsL => vec![Raise, Lower],
            Generator::Sym(x) => vec![x, x],
        }
    }

    pub fn target_word(self) -> Vec<Letter> {
        self.converse().source_word()
    }

    pub fn converse(self) -> Generator {
        match self {
            Generator::IId => Generator::IIdDagger,
            Generator::IIdDagger => Generator::IId,
            Generator::IAdagA => Generator::IAdagADagger,
            Generator::IAdagADagger => Generator::IAdagA,
            Generator::EtaR => Generator::EpsL,
            Generator::EpsL => Generator::EtaR,
            Generator::Sym(x) => Generator::Sym(x),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn pullback(s: &Span) -> &WeakPullback {
    s.pullback.as_deref().expect("two-letter words are composites")
}

/// Builds a generating 2-cell on the truncation `max_card`. Apex classes
/// whose histories leave the truncation are dropped.
pub fn generator_two_cell(generator: Generator, max_card: usize) -> Result<TwoCell> {
    let required = generator.source_word().len().max(generator.target_word().len());
    if max_card < required {
        return Err(Error::WindowTooSmall {
            required,
            available: max_card,
        });
    }
    match generator {
        Generator::IId => unit(max_card, true),
        Generator::EtaR => unit(max_card, false),
        Generator::IAdagA => mixed_crossing(max_card),
        Generator::Sym(x) => crossing(max_card, x),
        g => Ok(converse_two_cell(&generator_two_cell(g.converse(), max_card)?)),
    }
}

/// `id ⇒ A∘A†` (`left`) or `id ⇒ A†∘A`, with apex the smaller truncation
/// mapped diagonally into the composite.
fn unit(m: usize, left: bool) -> Result<TwoCell> {
    let source = word_span(&[], m)?;
    let target = word_span(if left { &[Lower, Raise] } else { &[Raise, Lower] }, m)?;
    let pb = pullback(&target);
    let z = fs_shared(m - 1, 1);
    let id = GroupoidFunctor::identity(&z);
    let p = if left { inclusion(m, 1) } else { plus_one(m, 1, 0)? };
    let (q, zx, zy) = pb.pair(&id, &id, &NaturalIso::identity(&pb.first))?;
    let lift = |c: &Vec<Permutation>| -> Vec<Permutation> {
        c.iter().enumerate().map(|(i, g)| p.map(i, g).clone()).collect()
    };
    let objects = p.object_map.clone();
    Ok(TwoCell {
        source,
        target: target.clone(),
        apex: z,
        mu: NaturalIso {
            objects: objects.clone(),
            components: lift(&zy.components),
        },
        nu: NaturalIso {
            objects,
            components: lift(&zx.components),
        },
        to_source: p,
        to_target: q,
    })
}

/// `A†∘A ⇒ A∘A†`: the removed element `n` of an `(n+1)`-set and the added
/// element are exchanged, so the composite removes a different element than
/// it adds.
fn mixed_crossing(m: usize) -> Result<TwoCell> {
    let source = word_span(&[Raise, Lower], m)?;
    let target = word_span(&[Lower, Raise], m)?;
    let pb = pullback(&target);
    let keep: Vec<usize> = (0..source.apex.len())
        .filter(|&x| source.target().cardinality_of(source.left.object(x)) < m)
        .collect();
    let z = Arc::new(source.apex.restrict(&keep));
    let small = fs_shared(m - 1, 1);
    let leg = |f: &GroupoidFunctor| {
        GroupoidFunctor::from_rule(&z, &small, |i| {
            let x = keep[i];
            (f.object(x), Box::new(move |g: &Permutation| f.map(x, g).clone()))
        })
    };
    let (u, v) = (leg(&source.right), leg(&source.left));
    let theta = NaturalIso {
        objects: u.object_map.iter().map(|&o| pb.first.object(o)).collect(),
        components: u
            .object_map
            .iter()
            .map(|&o| {
                let n = small.cardinality_of(o);
                Permutation::transposition(n + 1, n - 1, n)
            })
            .collect(),
    };
    let (q, zx, zy) = pb.pair(&u, &v, &theta)?;
    Ok(TwoCell {
        to_source: GroupoidFunctor::identity(&source.apex).restrict(&keep, &z),
        to_target: q,
        apex: z,
        mu: NaturalIso {
            objects: v.object_map.clone(),
            components: zy.components,
        },
        nu: NaturalIso {
            objects: u.object_map.clone(),
            components: zx.components,
        },
        source,
        target,
    })
}

/// Swap of the two elements removed by `A∘A` or added by `A†∘A†`.
fn crossing(m: usize, x: Letter) -> Result<TwoCell> {
    let span = word_span(&[x, x], m)?;
    let pb = pullback(&span);
    let swaps: Vec<Permutation> = pb
        .classes
        .iter()
        .map(|c| match x {
            // (x, y, f: x → y+1); the source boundary is x+1.
            Lower => {
                let n = pb.first.source.cardinality_of(c.first);
                Permutation::transposition(n + 1, n, c.map.inverse().apply(n - 1))
            }
            // (x, y, f: x+1 → y); the target boundary is y+1.
            Raise => {
                let n = pb.second.source.cardinality_of(c.second);
                Permutation::transposition(n + 1, n, c.map.apply(n - 1))
            }
        })
        .collect();
    let id = GroupoidFunctor::identity(&span.apex);
    let (mut mu, mut nu) = (NaturalIso::identity(&span.left), NaturalIso::identity(&span.right));
    match x {
        Lower => nu.components = swaps,
        Raise => mu.components = swaps,
    }
    Ok(TwoCell {
        source: span.clone(),
        target: span.clone(),
        apex: span.apex.clone(),
        to_source: id.clone(),
        to_target: id,
        mu,
        nu,
    })
}
