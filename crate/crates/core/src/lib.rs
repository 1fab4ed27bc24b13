//! Telugu text analysis: transliteration to a case-sensitive roman
//! scheme, akshara segmentation, n-syllable window statistics, plug-in
//! Shannon entropy, and deterministic interior jumbling.
//!
//! The numeric layer is generic over the floating-point scalar (see
//! [`Real`]); the aliases below fix `f64` as the default precision used
//! by the CLI and most tests.

pub mod entropy;
pub mod error;
pub mod jumble;
mod lexer;
pub mod mapping;
pub mod stats;
pub mod syllable;
pub mod synth;
pub mod translit;

pub use entropy::{
    char_entropy, report_from_table, roman_char_counts, shannon_entropy, syllable_ngram_entropy,
    to_distribution, FrequencyTable, Mode, Real,
};
pub use error::Error;
pub use jumble::{
    compare_entropy, jumble_text, jumble_word, segment_all, Granularity, JumbleConfig, SplitMix64,
};
pub use mapping::{load_mapping, Category, MappingEntry, MappingTable};
pub use stats::{
    corpus_char_counts, ingest, ingest_texts, letter_table, word_length_histogram, Corpus,
    Document, LengthHistogram, LengthUnit, LetterFrequencyRow,
};
pub use syllable::{syllabify, tokenize, windows, Akshara, ShortWordPolicy, WindowSpec, Word};
pub use translit::{to_roman, to_telugu};

/// Default scalar for entropy values.
pub type Scalar = f64;

/// Entropy report at the default precision.
pub type EntropyReport = entropy::EntropyReport<Scalar>;

/// Probability distribution at the default precision.
pub type Distribution<S> = entropy::ProbabilityDistribution<S, Scalar>;

/// Original-versus-jumbled comparison at the default precision.
pub type EntropyComparison = jumble::EntropyComparison<Scalar>;
