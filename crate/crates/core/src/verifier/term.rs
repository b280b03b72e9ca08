use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::span::{format_word, Letter};
use crate::two_cell::Generator;

/// A word in `A` and `A†`; `word[0]` is the leftmost factor and acts last.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OneCellTerm {
    pub word: Vec<Letter>,
}

impl OneCellTerm {
    pub fn new(word: Vec<Letter>) -> Self {
        OneCellTerm { word }
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }
}

impl fmt::Display for OneCellTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.word))
    }
}

/// One generator placed at `offset` with identity strands on either side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Layer {
    pub offset: usize,
    pub generator: Generator,
}

/// A diagram in generic position: layers applied bottom to top starting at
/// the `source` word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoCellTerm {
    pub source: Vec<Letter>,
    pub layers: Vec<Layer>,
}

impl TwoCellTerm {
    pub fn identity(word: Vec<Letter>) -> Self {
        TwoCellTerm {
            source: word,
            layers: Vec::new(),
        }
    }

    pub fn generator(generator: Generator) -> Self {
        TwoCellTerm {
            source: generator.source_word(),
            layers: vec![Layer { offset: 0, generator }],
        }
    }

    /// Appends a layer on top.
    pub fn then(mut self, offset: usize, generator: Generator) -> Self {
        self.layers.push(Layer { offset, generator });
        self
    }

    /// The boundary word below each layer followed by the final target.
    pub fn boundaries(&self) -> Result<Vec<Vec<Letter>>> {
        let mut words = vec![self.source.clone()];
        for (i, layer) in self.layers.iter().enumerate() {
            let cur = words.last().expect("nonempty");
            let src = layer.generator.source_word();
            let end = layer.offset + src.len();
            if end > cur.len() {
                return Err(Error::IllFormedTerm {
                    layer: i,
                    reason: format!("{} does not fit in {}", layer.generator, format_word(cur)),
                });
            }
            if cur[layer.offset..end] != src[..] {
                return Err(Error::IllFormedTerm {
                    layer: i,
                    reason: format!(
                        "{} expects {} but the strands read {}",
                        layer.generator,
                        format_word(&src),
                        format_word(&cur[layer.offset..end])
                    ),
                });
            }
            let mut next = cur[..layer.offset].to_vec();
            next.extend(layer.generator.target_word());
            next.extend_from_slice(&cur[end..]);
            words.push(next);
        }
        Ok(words)
    }

    pub fn target(&self) -> Result<Vec<Letter>> {
        Ok(self.boundaries()?.pop().expect("nonempty"))
    }

    /// Longest boundary word, which fixes the safe comparison window.
    pub fn max_degree(&self) -> Result<usize> {
        Ok(self.boundaries()?.iter().map(Vec::len).max().unwrap_or(0))
    }

    /// `beta · alpha`: stacks `beta` on top of `alpha`.
    pub fn vertical(beta: &TwoCellTerm, alpha: &TwoCellTerm) -> Result<TwoCellTerm> {
        let mid = alpha.target()?;
        if mid != beta.source {
            return Err(Error::IllFormedTerm {
                layer: alpha.layers.len(),
                reason: format!("{} does not meet {}", format_word(&mid), format_word(&beta.source)),
            });
        }
        let mut layers = alpha.layers.clone();
        layers.extend(beta.layers.iter().copied());
        Ok(TwoCellTerm {
            source: alpha.source.clone(),
            layers,
        })
    }

    /// `beta ∘ alpha`: `beta` on the left strands, `alpha` on the right;
    /// `alpha` is drawn first.
    pub fn horizontal(beta: &TwoCellTerm, alpha: &TwoCellTerm) -> Result<TwoCellTerm> {
        let shift = beta.source.len();
        let mut source = beta.source.clone();
        source.extend_from_slice(&alpha.source);
        let mut layers: Vec<Layer> = alpha
            .layers
            .iter()
            .map(|l| Layer {
                offset: l.offset + shift,
                generator: l.generator,
            })
            .collect();
        layers.extend(beta.layers.iter().copied());
        let term = TwoCellTerm { source, layers };
        term.boundaries()?;
        Ok(term)
    }

    /// The diagram reflected top to bottom.
    pub fn mirror(&self) -> Result<TwoCellTerm> {
        let source = self.target()?;
        let layers = self
            .layers
            .iter()
            .rev()
            .map(|l| Layer {
                offset: l.offset,
                generator: l.generator.converse(),
            })
            .collect();
        Ok(TwoCellTerm { source, layers })
    }
}

impl fmt::Display for TwoCellTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.layers.is_empty() {
            return write!(f, "id[{}]", format_word(&self.source));
        }
        let parts: Vec<String> = self
            .layers
            .iter()
            .rev()
            .map(|l| format!("{}@{}", l.generator, l.offset))
            .collect();
        write!(f, "{} on {}", parts.join(" · "), format_word(&self.source))
    }
}
