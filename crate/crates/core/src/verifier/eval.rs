use std::sync::Arc;

use super::term::{OneCellTerm, TwoCellTerm};
use crate::error::{Error, Result};
use crate::span::{compose, word_span, Letter, Span};
use crate::two_cell::{
    associator_with, converse_two_cell, generator_two_cell, identity_two_cell, left_unitor_with, right_unitor_with,
    vertical_compose, whisker_left_with, whisker_right_with, Generator, TwoCell,
};

/// The span of a word; the empty word gives the identity span.
pub fn eval_one_cell(term: &OneCellTerm, max_card: usize) -> Result<Arc<Span>> {
    word_span(&term.word, max_card)
}

/// Folds the layers of `term` by vertical composition. Every intermediate
/// boundary is the right-nested span of its word.
pub fn eval_two_cell(term: &TwoCellTerm, max_card: usize) -> Result<TwoCell> {
    let words = term.boundaries()?;
    let required = words.iter().map(Vec::len).max().unwrap_or(0);
    if max_card < required {
        return Err(Error::WindowTooSmall {
            required,
            available: max_card,
        });
    }
    let mut acc: Option<TwoCell> = None;
    for (i, layer) in term.layers.iter().enumerate() {
        let cell = layer_cell(&words[i], layer.offset, layer.generator, max_card)?;
        acc = Some(match acc {
            None => cell,
            Some(prev) => vertical_compose(&cell, &prev)?,
        });
    }
    match acc {
        Some(cell) => Ok(cell),
        None => Ok(identity_two_cell(&word_span(&term.source, max_card)?)),
    }
}

fn concat(a: &[Letter], b: &[Letter]) -> Vec<Letter> {
    a.iter().chain(b).copied().collect()
}

/// `compose(word_span(w), word_span(suffix))`, shared with the canonical span
/// when the two coincide.
fn right_composite(w: &[Letter], suffix: &[Letter], m: usize) -> Result<Arc<Span>> {
    if w.len() == 1 {
        word_span(&concat(w, suffix), m)
    } else {
        Ok(Arc::new(compose(&*word_span(w, m)?, &*word_span(suffix, m)?)?))
    }
}

/// A 2-cell from `composite = w ∘ suffix` to the right-nested span of
/// `w ++ suffix`, or `None` when they already coincide.
fn normalizer(w: &[Letter], suffix: &[Letter], composite: &Arc<Span>, m: usize) -> Result<Option<TwoCell>> {
    match w {
        [] => Ok(Some(left_unitor_with(&word_span(suffix, m)?, composite)?)),
        [_] => Ok(None),
        [x, y] => {
            let (t, s) = (word_span(&[*x], m)?, word_span(&[*y], m)?);
            let r = word_span(suffix, m)?;
            let sr = word_span(&concat(&[*y], suffix), m)?;
            let t_sr = word_span(&concat(w, suffix), m)?;
            Ok(Some(associator_with(&t, &s, &r, &*word_span(w, m)?, composite, &sr, &t_sr)?))
        }
        _ => Err(Error::InvalidParameter("generator boundaries have at most two letters".into())),
    }
}

/// The generator at `offset` inside `word`, whiskered by identity strands.
fn layer_cell(word: &[Letter], offset: usize, generator: Generator, m: usize) -> Result<TwoCell> {
    let src = generator.source_word();
    let tgt = generator.target_word();
    let prefix = &word[..offset];
    let suffix = &word[offset + src.len()..];
    let mut cell = generator_two_cell(generator, m)?;
    if !suffix.is_empty() {
        let r = word_span(suffix, m)?;
        let src_c = right_composite(&src, suffix, m)?;
        let tgt_c = right_composite(&tgt, suffix, m)?;
        cell = whisker_right_with(&cell, &r, &src_c, &tgt_c)?;
        if let Some(fix) = normalizer(&src, suffix, &src_c, m)? {
            cell = vertical_compose(&cell, &converse_two_cell(&fix))?;
        }
        if let Some(fix) = normalizer(&tgt, suffix, &tgt_c, m)? {
            cell = vertical_compose(&fix, &cell)?;
        }
    }
    let mut cur_src = concat(&src, suffix);
    let mut cur_tgt = concat(&tgt, suffix);
    for &p in prefix.iter().rev() {
        let r = word_span(&[p], m)?;
        let side = |cur: &[Letter]| -> Result<Arc<Span>> {
            if cur.is_empty() {
                Ok(Arc::new(compose(&r, &*word_span(&[], m)?)?))
            } else {
                word_span(&concat(&[p], cur), m)
            }
        };
        let (src_c, tgt_c) = (side(&cur_src)?, side(&cur_tgt)?);
        cell = whisker_left_with(&r, &cell, &src_c, &tgt_c)?;
        if cur_src.is_empty() {
            cell = vertical_compose(&cell, &converse_two_cell(&right_unitor_with(&r, &src_c)?))?;
        }
        if cur_tgt.is_empty() {
            cell = vertical_compose(&right_unitor_with(&r, &tgt_c)?, &cell)?;
        }
        cur_src.insert(0, p);
        cur_tgt.insert(0, p);
    }
    Ok(cell)
}
