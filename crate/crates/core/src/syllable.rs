//! Word tokenization and akshara segmentation of roman text.
//!
//! Segmentation is orthographic: every consonant token between two vowels
//! attaches to the following vowel, so a conjunct stays with its syllable
//! ("padmavibhUShaN^" splits as pa dma vi bhU Sha N^). Anusvara and
//! visarga attach to the syllable just closed; a trailing consonant
//! cluster closed by "^" forms a final vowel-less syllable.

use crate::error::Error;
use crate::lexer::{lex_word, TokenKind};
use crate::mapping::MappingTable;

/// One orthographic syllable: consonant onset, optional vowel nucleus,
/// and trailing markers ("M", "H", or "^").
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Akshara {
    pub onset: Vec<String>,
    pub nucleus: Option<String>,
    pub coda: Vec<String>,
}

impl Akshara {
    fn new() -> Akshara {
        Akshara {
            onset: Vec::new(),
            nucleus: None,
            coda: Vec::new(),
        }
    }

    fn is_blank(&self) -> bool {
        self.onset.is_empty() && self.nucleus.is_none() && self.coda.is_empty()
    }

    /// Onset, nucleus, and coda concatenated back to the written form.
    pub fn surface(&self) -> String {
        let mut s = String::new();
        for c in &self.onset {
            s.push_str(c);
        }
        if let Some(n) = &self.nucleus {
            s.push_str(n);
        }
        for m in &self.coda {
            s.push_str(m);
        }
        s
    }
}

/// A whitespace-free word together with its syllables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    pub surface: String,
    pub syllables: Vec<Akshara>,
}

impl Word {
    /// Segment a word surface into syllables.
    pub fn segment(surface: &str, table: &MappingTable) -> Result<Word, Error> {
        let syllables = syllabify(surface, table)?;
        Ok(Word {
            surface: surface.to_string(),
            syllables,
        })
    }

    pub fn syllable_count(&self) -> usize {
        self.syllables.len()
    }
}

/// What to do with a word shorter than the window size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ShortWordPolicy {
    /// Emit the whole word as a single window.
    #[default]
    WholeWord,
    /// Emit nothing for the word.
    Skip,
}

/// Window size and short-word handling for n-syllable windows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowSpec {
    pub n: usize,
    pub short_word_policy: ShortWordPolicy,
}

impl WindowSpec {
    pub fn new(n: usize) -> WindowSpec {
        assert!(n >= 1, "window size must be at least 1");
        WindowSpec {
            n,
            short_word_policy: ShortWordPolicy::WholeWord,
        }
    }

    pub fn with_policy(mut self, policy: ShortWordPolicy) -> WindowSpec {
        self.short_word_policy = policy;
        self
    }
}

impl Default for WindowSpec {
    fn default() -> WindowSpec {
        WindowSpec::new(1)
    }
}

/// Split text into word surfaces. Anything outside the roman word
/// alphabet (ASCII letters and '^') separates words, which drops
/// punctuation and digits.
pub fn tokenize(text: &str) -> Vec<&str> {
    text.split(|c: char| !(c.is_ascii_alphabetic() || c == '^'))
        .filter(|t| !t.is_empty())
        .collect()
}

/// Segment one word into aksharas. The concatenation of the returned
/// surfaces is exactly the input.
pub fn syllabify(word: &str, table: &MappingTable) -> Result<Vec<Akshara>, Error> {
    let tokens = lex_word(word, table)?;
    let mut out: Vec<Akshara> = Vec::new();
    let mut cur = Akshara::new();
    for tok in &tokens {
        match tok.kind {
            TokenKind::Consonant => {
                if cur.nucleus.is_some() || !cur.coda.is_empty() {
                    out.push(std::mem::replace(&mut cur, Akshara::new()));
                }
                cur.onset.push(tok.text.to_string());
            }
            TokenKind::Vowel => {
                if cur.nucleus.is_some() || !cur.coda.is_empty() {
                    out.push(std::mem::replace(&mut cur, Akshara::new()));
                }
                cur.nucleus = Some(tok.text.to_string());
            }
            TokenKind::Anusvara | TokenKind::Visarga => {
                if cur.nucleus.is_some() {
                    cur.coda.push(tok.text.to_string());
                } else if cur.is_blank() {
                    match out.last_mut() {
                        // after a "^"-closed syllable the marker joins its coda
                        Some(last) => last.coda.push(tok.text.to_string()),
                        None => {
                            return Err(Error::OrphanMarker {
                                marker: tok.text.chars().next().unwrap_or('?'),
                                offset: tok.offset,
                            });
                        }
                    }
                } else {
                    // marker after a bare consonant onset
                    return Err(Error::OrphanMarker {
                        marker: tok.text.chars().next().unwrap_or('?'),
                        offset: tok.offset,
                    });
                }
            }
            TokenKind::Caret => {
                if !cur.onset.is_empty() && cur.nucleus.is_none() {
                    cur.coda.push("^".to_string());
                    out.push(std::mem::replace(&mut cur, Akshara::new()));
                } else {
                    return Err(Error::OrphanMarker {
                        marker: '^',
                        offset: tok.offset,
                    });
                }
            }
        }
    }
    if !cur.is_blank() {
        if cur.nucleus.is_none() {
            // trailing consonants with neither vowel nor "^"
            return Err(Error::UndecodableSequence {
                char_offset: word.chars().count(),
            });
        }
        out.push(cur);
    }
    Ok(out)
}

/// Overlapping n-syllable windows of a word, stride one syllable, never
/// crossing the word boundary.
pub fn windows(word: &Word, spec: &WindowSpec) -> Vec<String> {
    let s = word.syllables.len();
    if s == 0 {
        return Vec::new();
    }
    if s < spec.n {
        return match spec.short_word_policy {
            ShortWordPolicy::WholeWord => vec![word.surface.clone()],
            ShortWordPolicy::Skip => Vec::new(),
        };
    }
    let surfaces: Vec<String> = word.syllables.iter().map(|a| a.surface()).collect();
    (0..=s - spec.n)
        .map(|i| surfaces[i..i + spec.n].concat())
        .collect()
}
