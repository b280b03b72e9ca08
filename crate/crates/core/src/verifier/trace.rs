use serde::Serialize;

use super::eval::eval_two_cell;
use super::term::TwoCellTerm;
use crate::error::{Error, Result};
use crate::span::{word_span, Letter, Span};

/// The histories of a 2-cell's source span starting from one boundary class,
/// each with the target histories it is related to.
#[derive(Clone, Debug, Serialize)]
pub struct HistoryTrace {
    pub term: String,
    pub boundary_cardinality: usize,
    pub entries: Vec<TraceEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceEntry {
    pub history: String,
    /// Empty when the history is related to nothing.
    pub related: Vec<String>,
}

impl HistoryTrace {
    pub fn to_text(&self) -> String {
        let mut out = format!("{} on a {}-element set\n", self.term, self.boundary_cardinality);
        for e in &self.entries {
            if e.related.is_empty() {
                out.push_str(&format!("  {} -> related to nothing\n", e.history));
            }
            for r in &e.related {
                out.push_str(&format!("  {} -> {}\n", e.history, r));
            }
        }
        out
    }
}

fn fresh_label(k: usize) -> String {
    let letters = b"abcdefghijklmnopqrstuvwxyz";
    if k < letters.len() {
        (letters[k] as char).to_string()
    } else {
        format!("e{k}")
    }
}

/// Replays the apex class `class` of the right-nested span of `word`.
///
/// `labels` names the elements of the starting set in position order. Returns
/// the steps and the labels of the final set in position order.
fn replay(word: &[Letter], span: &Span, class: usize, labels: Vec<String>, fresh: &mut usize) -> (Vec<String>, Vec<String>) {
    match word {
        [] => (Vec::new(), labels),
        [Letter::Lower] => {
            let k = span.apex.cardinality_of(class);
            let removed = labels[k].clone();
            (vec![format!("remove {removed}")], labels[..k].to_vec())
        }
        [Letter::Raise] => {
            let name = fresh_label(*fresh);
            *fresh += 1;
            let mut out = labels;
            out.push(name.clone());
            (vec![format!("add {name}")], out)
        }
        [x, rest @ ..] => {
            let pb = span.pullback.as_ref().expect("composite spans carry their pullback");
            let c = &pb.classes[class];
            let inner = pb.first.source.clone();
            let rest_span = Span {
                apex: inner,
                left: pb.first.clone(),
                right: span.right.clone(),
                window: span.window,
                pullback: None,
                notes: Vec::new(),
            };
            let rest_span = match word_span(rest, span.window.max_card) {
                Ok(s) => (*s).clone(),
                Err(_) => rest_span,
            };
            let (mut steps, mid) = replay(rest, &rest_span, c.first, labels, fresh);
            let mut moved = vec![String::new(); mid.len()];
            for (i, name) in mid.into_iter().enumerate() {
                moved[c.map.apply(i)] = name;
            }
            let letter = x.span(span.window.max_card);
            let (more, out) = replay(&[*x], &letter, c.second, moved, fresh);
            steps.extend(more);
            (steps, out)
        }
    }
}

fn describe(steps: &[String]) -> String {
    if steps.is_empty() {
        "nothing happens".into()
    } else {
        steps.join("; ")
    }
}

/// Lists the source histories of `term` that start from a set of
/// `boundary_cardinality` elements, with the target histories they are
/// related to. Elements of the starting set are named `1, 2, …`; added
/// elements are named `a, b, …`.
pub fn trace_histories(term: &TwoCellTerm, boundary_cardinality: usize, max_card: usize) -> Result<HistoryTrace> {
    let degree = term.max_degree()?;
    if boundary_cardinality + degree > max_card {
        return Err(Error::OutsideWindow(format!(
            "a {boundary_cardinality}-element set with degree {degree} needs max-card {}",
            boundary_cardinality + degree
        )));
    }
    let cell = eval_two_cell(term, max_card)?;
    let target_word = term.target()?;
    let (s, t) = (&cell.source, &cell.target);
    let start: Vec<String> = (1..=boundary_cardinality).map(|i| i.to_string()).collect();
    let mut entries = Vec::new();
    for x in 0..s.apex.len() {
        if s.source().cardinality_of(s.right.object(x)) != boundary_cardinality {
            continue;
        }
        let mut fresh = 0;
        let (steps, _) = replay(&term.source, s, x, start.clone(), &mut fresh);
        let mut related = Vec::new();
        for z in (0..cell.apex.len()).filter(|&z| cell.to_source.object(z) == x) {
            // ν_z carries the starting set of the source history onto that of the target one.
            let nu = &cell.nu.components[z];
            let mut labels = vec![String::new(); boundary_cardinality];
            for (i, name) in start.iter().enumerate() {
                labels[nu.apply(i)] = name.clone();
            }
            let mut fresh_t = 0;
            let (steps_t, _) = replay(&target_word, t, cell.to_target.object(z), labels, &mut fresh_t);
            related.push(describe(&steps_t));
        }
        entries.push(TraceEntry {
            history: describe(&steps),
            related,
        });
    }
    Ok(HistoryTrace {
        term: term.to_string(),
        boundary_cardinality,
        entries,
    })
}
