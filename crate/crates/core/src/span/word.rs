use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use super::{annihilation_span, compose, creation_span, fs_shared, identity_span, Span};
use crate::error::{Error, Result};

/// One letter of a 1-cell word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    /// `A†`, adjoin an element.
    Raise,
    /// `A`, remove an element.
    Lower,
}

impl Letter {
    pub fn span(self, max_card: usize) -> Span {
        match self {
            Letter::Raise => creation_span(max_card),
            Letter::Lower => annihilation_span(max_card),
        }
    }

    pub fn dual(self) -> Letter {
        match self {
            Letter::Raise => Letter::Lower,
            Letter::Lower => Letter::Raise,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::Raise => "A†",
            Letter::Lower => "A",
        })
    }
}

/// Writes a word as an operator product, e.g. `A∘A†`; the empty word is `id`.
pub fn format_word(word: &[Letter]) -> String {
    if word.is_empty() {
        return "id".into();
    }
    word.iter().map(Letter::to_string).collect::<Vec<_>>().join("∘")
}

type WordKey = (Vec<Letter>, usize);

/// The span of a word, built right-nested: `w[0] ∘ (w[1] ∘ (… ∘ w[k-1]))`.
/// The last letter acts first. Results are shared, so equal words give
/// pointer-equal spans.
pub fn word_span(word: &[Letter], max_card: usize) -> Result<Arc<Span>> {
    static CACHE: OnceLock<Mutex<HashMap<WordKey, Arc<Span>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (word.to_vec(), max_card);
    if let Some(s) = cache.lock().unwrap_or_else(|e| e.into_inner()).get(&key) {
        return Ok(s.clone());
    }
    if max_card < word.len() {
        return Err(Error::WindowTooSmall {
            required: word.len(),
            available: max_card,
        });
    }
    let span = match word {
        [] => identity_span(&fs_shared(max_card, 1), max_card),
        [x] => x.span(max_card),
        [x, rest @ ..] => compose(&x.span(max_card), &*word_span(rest, max_card)?)?,
    };
    let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
    Ok(guard.entry(key).or_insert_with(|| Arc::new(span)).clone())
}

/// Largest net number of added elements at any stage of a history of
/// `word`. A history starting from an `n`-set stays inside the truncation
/// `max_card` exactly when `n + word_height(word) ≤ max_card`.
pub fn word_height(word: &[Letter]) -> usize {
    let mut level: isize = 0;
    let mut peak: isize = 0;
    for x in word.iter().rev() {
        level += match x {
            Letter::Raise => 1,
            Letter::Lower => -1,
        };
        peak = peak.max(level);
    }
    peak as usize
}
