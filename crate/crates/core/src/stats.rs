//! Corpus ingestion and descriptive statistics.
//!
//! Ingestion transliterates each document, optionally truncates the roman
//! stream at the last whole word inside a character budget (spaces
//! included), then tokenizes and segments what is left.

use std::path::Path;

use crate::entropy::{roman_char_counts, FrequencyTable};
use crate::error::Error;
use crate::mapping::MappingTable;
use crate::syllable::{tokenize, Word};
use crate::translit::to_roman;

/// One input text after transliteration and segmentation.
#[derive(Debug, Clone)]
pub struct Document {
    pub id: String,
    /// The raw input, exactly as read.
    pub raw: String,
    /// Roman stream used for analysis. Equal to `to_roman(raw)` unless a
    /// character budget truncated it.
    pub roman: String,
    pub words: Vec<Word>,
}

/// A set of documents ready for analysis.
#[derive(Debug, Clone, Default)]
pub struct Corpus {
    pub documents: Vec<Document>,
    pub char_budget: Option<usize>,
}

impl Corpus {
    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.documents.iter().flat_map(|d| d.words.iter())
    }

    pub fn word_count(&self) -> usize {
        self.documents.iter().map(|d| d.words.len()).sum()
    }

    /// All documents' roman text joined with single newlines.
    pub fn roman_text(&self) -> String {
        let parts: Vec<&str> = self.documents.iter().map(|d| d.roman.as_str()).collect();
        parts.join("\n")
    }

    pub fn is_empty(&self) -> bool {
        self.word_count() == 0
    }
}

/// Read, transliterate, and segment the given files.
pub fn ingest(
    paths: &[impl AsRef<Path>],
    table: &MappingTable,
    char_budget: Option<usize>,
) -> Result<Corpus, Error> {
    let mut texts = Vec::with_capacity(paths.len());
    for p in paths {
        let path = p.as_ref();
        let id = path.display().to_string();
        let raw = std::fs::read_to_string(path).map_err(|e| Error::io(id.clone(), e))?;
        texts.push((id, raw));
    }
    ingest_texts(&texts, table, char_budget)
}

/// [`ingest`] over in-memory texts.
pub fn ingest_texts(
    texts: &[(String, String)],
    table: &MappingTable,
    char_budget: Option<usize>,
) -> Result<Corpus, Error> {
    let mut documents = Vec::with_capacity(texts.len());
    // budget counts every roman character, with one separator between
    // documents
    let mut remaining = char_budget;
    for (id, raw) in texts {
        let roman_full = to_roman(raw, table).map_err(|e| Error::in_file(id.clone(), e))?;
        let roman = match &mut remaining {
            None => roman_full,
            Some(rem) => {
                if !documents.is_empty() {
                    *rem = rem.saturating_sub(1);
                }
                let kept = truncate_at_word(&roman_full, *rem);
                *rem -= kept.len();
                kept.to_string()
            }
        };
        // tokens that do not segment under the roman grammar (passthrough
        // Latin, stray symbols) stay in the roman stream for character
        // statistics but contribute no words
        let words = tokenize(&roman)
            .into_iter()
            .filter_map(|w| Word::segment(w, table).ok())
            .collect();
        documents.push(Document {
            id: id.clone(),
            raw: raw.clone(),
            roman,
            words,
        });
    }
    Ok(Corpus {
        documents,
        char_budget,
    })
}

/// Longest prefix of whole words whose character count fits the budget.
/// Roman text is ASCII, so bytes and characters coincide.
fn truncate_at_word(roman: &str, budget: usize) -> &str {
    if roman.len() <= budget {
        return roman;
    }
    let is_word_char = |b: u8| b.is_ascii_alphabetic() || b == b'^';
    let bytes = roman.as_bytes();
    let mut end = budget;
    // budget may fall inside a word; back up to the end of the previous one
    while end > 0 && is_word_char(bytes[end - 1]) && is_word_char(bytes[end]) {
        end -= 1;
    }
    &roman[..end]
}

/// One row of the letter-frequency table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LetterFrequencyRow {
    pub symbol: char,
    /// Percentage rounded to two decimals.
    pub percent: f64,
}

/// Case-sensitive letter percentages over a-z, space, A-Z, and '^', in
/// that order. Zero rows are kept so the table always has 54 rows, laid
/// out for side-by-side lower/upper presentation.
pub fn letter_table(corpus: &Corpus) -> Result<Vec<LetterFrequencyRow>, Error> {
    let counts = roman_char_counts(&corpus.roman_text());
    if counts.is_empty() {
        return Err(Error::EmptyTable);
    }
    let total = counts.total() as f64;
    let percent_of = |c: char| {
        let p = 100.0 * counts.get(&c) as f64 / total;
        (p * 100.0).round() / 100.0
    };
    let mut rows = Vec::with_capacity(54);
    for c in 'a'..='z' {
        rows.push(LetterFrequencyRow {
            symbol: c,
            percent: percent_of(c),
        });
    }
    rows.push(LetterFrequencyRow {
        symbol: ' ',
        percent: percent_of(' '),
    });
    for c in 'A'..='Z' {
        rows.push(LetterFrequencyRow {
            symbol: c,
            percent: percent_of(c),
        });
    }
    rows.push(LetterFrequencyRow {
        symbol: '^',
        percent: percent_of('^'),
    });
    Ok(rows)
}

/// Unit for measuring word length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LengthUnit {
    Akshara,
    Char,
}

/// Word-length distribution as fractions that sum to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct LengthHistogram {
    /// length -> word count
    pub counts: std::collections::BTreeMap<usize, u64>,
    pub total_words: u64,
}

impl LengthHistogram {
    /// length -> fraction of words, ascending by length.
    pub fn fractions(&self) -> Vec<(usize, f64)> {
        self.counts
            .iter()
            .map(|(&len, &c)| (len, c as f64 / self.total_words as f64))
            .collect()
    }

    /// Fraction of words strictly shorter than `threshold`, summed in
    /// ascending length order.
    pub fn fraction_below(&self, threshold: usize) -> f64 {
        self.counts
            .iter()
            .take_while(|(&len, _)| len < threshold)
            .map(|(_, &c)| c as f64 / self.total_words as f64)
            .sum()
    }
}

/// Histogram of word lengths over the whole corpus.
pub fn word_length_histogram(corpus: &Corpus, unit: LengthUnit) -> Result<LengthHistogram, Error> {
    let mut counts = std::collections::BTreeMap::new();
    let mut total = 0u64;
    for word in corpus.words() {
        let len = match unit {
            LengthUnit::Akshara => word.syllables.len(),
            LengthUnit::Char => word.surface.chars().count(),
        };
        *counts.entry(len).or_insert(0) += 1;
        total += 1;
    }
    if total == 0 {
        return Err(Error::EmptyTable);
    }
    Ok(LengthHistogram {
        counts,
        total_words: total,
    })
}

/// Character-count table of the corpus roman stream; the letter table is
/// one rounding step away from these counts.
pub fn corpus_char_counts(corpus: &Corpus) -> FrequencyTable<char> {
    roman_char_counts(&corpus.roman_text())
}
