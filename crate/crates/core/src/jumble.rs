//! Deterministic interior shuffling of words.
//!
//! A word's first and last symbol stay fixed; the interior is permuted by
//! a Fisher-Yates shuffle driven by a SplitMix64 generator with rejection
//! sampling, so a given `(corpus, config)` always produces the same
//! bytes on every platform. All words of a text share one generator in
//! document order; words short enough to stay untouched draw nothing.
//! An identity permutation draw is kept, not redrawn.

use crate::entropy::{char_entropy, syllable_ngram_entropy, EntropyReport, Mode, Real};
use crate::error::Error;
use crate::mapping::MappingTable;
use crate::syllable::{syllabify, WindowSpec, Word};

/// SplitMix64 (Steele, Lea, Flood 2014). Small, portable, and stable.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Unbiased draw from `0..bound` by rejection.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "bound must be positive");
        let min = bound.wrapping_neg() % bound;
        loop {
            let x = self.next_u64();
            if x >= min {
                return x % bound;
            }
        }
    }

    /// Uniform draw from [0, 1) with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Symbol unit the jumbler permutes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Granularity {
    /// Roman characters.
    Char,
    /// Aksharas.
    Syllable,
}

impl Granularity {
    pub fn as_str(&self) -> &'static str {
        match self {
            Granularity::Char => "char",
            Granularity::Syllable => "syllable",
        }
    }
}

/// Seed, symbol unit, and the minimum word length that gets shuffled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JumbleConfig {
    pub seed: u64,
    pub granularity: Granularity,
    /// Words shorter than this stay untouched. Values below 3 behave as 3,
    /// since a length-2 word has no interior.
    pub min_length: usize,
}

impl JumbleConfig {
    pub fn new(seed: u64, granularity: Granularity) -> JumbleConfig {
        JumbleConfig {
            seed,
            granularity,
            min_length: 4,
        }
    }

    pub fn with_min_length(mut self, min_length: usize) -> JumbleConfig {
        self.min_length = min_length.max(3);
        self
    }
}

/// Shuffle the interior of one symbol sequence in place. First and last
/// symbol never move; sequences shorter than `cfg.min_length` are left
/// alone and consume no randomness.
pub fn jumble_word<T>(symbols: &mut [T], cfg: &JumbleConfig, rng: &mut SplitMix64) {
    let len = symbols.len();
    if len < cfg.min_length.max(3) {
        return;
    }
    let interior = &mut symbols[1..len - 1];
    for i in (1..interior.len()).rev() {
        let j = rng.next_below(i as u64 + 1) as usize;
        interior.swap(i, j);
    }
}

/// Jumble every word of a text with a single seeded generator, keeping
/// word order and all separators byte for byte.
///
/// At [`Granularity::Syllable`] each word is segmented first; a token
/// that does not segment (stray punctuation inside a word, non-roman
/// letters) passes through untouched.
pub fn jumble_text(text: &str, cfg: &JumbleConfig, table: &MappingTable) -> String {
    let mut rng = SplitMix64::new(cfg.seed);
    let mut out = String::with_capacity(text.len());
    let mut word = String::new();
    for c in text.chars() {
        if c.is_ascii_alphabetic() || c == '^' {
            word.push(c);
        } else {
            if !word.is_empty() {
                out.push_str(&jumble_one(&word, cfg, table, &mut rng));
                word.clear();
            }
            out.push(c);
        }
    }
    if !word.is_empty() {
        out.push_str(&jumble_one(&word, cfg, table, &mut rng));
    }
    out
}

fn jumble_one(
    word: &str,
    cfg: &JumbleConfig,
    table: &MappingTable,
    rng: &mut SplitMix64,
) -> String {
    match cfg.granularity {
        Granularity::Char => {
            let mut chars: Vec<char> = word.chars().collect();
            jumble_word(&mut chars, cfg, rng);
            chars.into_iter().collect()
        }
        Granularity::Syllable => match syllabify(word, table) {
            Ok(aksharas) => {
                let mut surfaces: Vec<String> = aksharas.iter().map(|a| a.surface()).collect();
                jumble_word(&mut surfaces, cfg, rng);
                surfaces.concat()
            }
            Err(_) => word.to_string(),
        },
    }
}

/// Entropy reports for an original and a jumbled corpus, plus their
/// absolute difference.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyComparison<F> {
    pub original: EntropyReport<F>,
    pub jumbled: EntropyReport<F>,
    pub delta: F,
}

/// Compare entropies of two texts under one mode. For
/// [`Mode::Syllable`] both texts are tokenized and segmented here.
pub fn compare_entropy<F: Real>(
    original: &str,
    jumbled: &str,
    mode: Mode,
    spec: &WindowSpec,
    table: &MappingTable,
    base: F,
) -> Result<EntropyComparison<F>, Error> {
    let (o, j) = match mode {
        Mode::Char => (char_entropy(original, base)?, char_entropy(jumbled, base)?),
        Mode::Syllable => {
            let ow = segment_all(original, table)?;
            let jw = segment_all(jumbled, table)?;
            (
                syllable_ngram_entropy(&ow, spec, base)?,
                syllable_ngram_entropy(&jw, spec, base)?,
            )
        }
    };
    Ok(EntropyComparison {
        original: o,
        jumbled: j,
        delta: (o.entropy_bits - j.entropy_bits).abs(),
    })
}

/// Tokenize and segment a whole text.
pub fn segment_all(text: &str, table: &MappingTable) -> Result<Vec<Word>, Error> {
    crate::syllable::tokenize(text)
        .into_iter()
        .map(|w| Word::segment(w, table))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syllable::tokenize;
    use std::collections::BTreeMap;

    fn table() -> &'static MappingTable {
        MappingTable::builtin()
    }

    fn cfg(seed: u64, granularity: Granularity) -> JumbleConfig {
        JumbleConfig::new(seed, granularity)
    }

    #[test]
    fn short_words_untouched() {
        let c = cfg(9, Granularity::Char);
        let mut rng = SplitMix64::new(c.seed);
        let mut chars: Vec<char> = "abc".chars().collect();
        jumble_word(&mut chars, &c, &mut rng);
        assert_eq!(chars.iter().collect::<String>(), "abc");
    }

    #[test]
    fn interior_permutation_contract() {
        // first stays 'a', last stays 'd', interior is a permutation of {b, c}
        for seed in 0..32 {
            let c = cfg(seed, Granularity::Char);
            let mut rng = SplitMix64::new(c.seed);
            let mut chars: Vec<char> = "abcd".chars().collect();
            jumble_word(&mut chars, &c, &mut rng);
            let s: String = chars.iter().collect();
            assert!(s == "abcd" || s == "acbd", "unexpected {s}");
        }
    }

    #[test]
    fn syllable_interior_permutation() {
        // kA and yaM fixed, {ryA, la} permuted: both orders are the only
        // possible outputs
        let mut seen = std::collections::BTreeSet::new();
        for seed in 0..64 {
            let c = cfg(seed, Granularity::Syllable);
            let out = jumble_text("kAryAlayaM", &c, table());
            assert!(
                out == "kAryAlayaM" || out == "kAlaryAyaM",
                "unexpected {out}"
            );
            seen.insert(out);
        }
        assert_eq!(seen.len(), 2, "both permutations should occur");
    }

    #[test]
    fn deterministic_per_seed() {
        let text = "padmavibhUShaN^ kAryAlayaM sAdhyamainaMta vayassu";
        for granularity in [Granularity::Char, Granularity::Syllable] {
            let c = cfg(7, granularity);
            assert_eq!(
                jumble_text(text, &c, table()),
                jumble_text(text, &c, table())
            );
        }
    }

    #[test]
    fn short_word_corpus_is_noop() {
        let text = "ka ri mU\n na, ta!";
        for granularity in [Granularity::Char, Granularity::Syllable] {
            let c = cfg(11, granularity);
            assert_eq!(jumble_text(text, &c, table()), text);
        }
    }

    #[test]
    fn corpus_symbol_multiset_preserved() {
        let text = "pratipAdiMcinaTlu\tpadmavibhUShaN^  sAdhyamainaMta";
        let c = cfg(123, Granularity::Char);
        let out = jumble_text(text, &c, table());
        let count = |s: &str| {
            let mut m: BTreeMap<char, usize> = BTreeMap::new();
            for ch in s.chars() {
                *m.entry(ch).or_insert(0) += 1;
            }
            m
        };
        assert_eq!(count(text), count(&out));
        // separators stay in place
        assert_eq!(out.find('\t'), text.find('\t'));
        assert!(out.contains("  "));
    }

    #[test]
    fn word_shape_preserved_per_word() {
        let text = "pratipAdiMcinaTlu padmavibhUShaN^ sAdhyamainaMta";
        let c = cfg(5, Granularity::Syllable);
        let out = jumble_text(text, &c, table());
        let before = tokenize(text);
        let after = tokenize(&out);
        assert_eq!(before.len(), after.len());
        for (b, a) in before.iter().zip(after.iter()) {
            let sb: Vec<String> = syllabify(b, table())
                .unwrap()
                .iter()
                .map(|x| x.surface())
                .collect();
            let sa: Vec<String> = syllabify(a, table())
                .unwrap()
                .iter()
                .map(|x| x.surface())
                .collect();
            assert_eq!(sb.len(), sa.len());
            assert_eq!(sb.first(), sa.first());
            assert_eq!(sb.last(), sa.last());
            let mut mb = sb.clone();
            let mut ma = sa.clone();
            mb.sort();
            ma.sort();
            assert_eq!(mb, ma);
        }
    }

    #[test]
    fn unsegmentable_tokens_pass_through() {
        // 'f' and 'x' are not roman tokens
        let text = "fax kAryAlayaM";
        let c = cfg(3, Granularity::Syllable);
        let out = jumble_text(text, &c, table());
        assert!(out.starts_with("fax "));
    }

    #[test]
    fn min_length_clamps_to_three() {
        let c = JumbleConfig::new(1, Granularity::Char).with_min_length(0);
        assert_eq!(c.min_length, 3);
    }

    #[test]
    fn char_mode_unigram_delta_is_zero() {
        let text = "pratipAdiMcinaTlu padmavibhUShaN^ sAdhyamainaMta kAryAlayaM";
        let c = cfg(99, Granularity::Char);
        let out = jumble_text(text, &c, table());
        let cmp = compare_entropy::<f64>(text, &out, Mode::Char, &WindowSpec::new(1), table(), 2.0)
            .unwrap();
        assert_eq!(cmp.delta, 0.0);
        assert_eq!(cmp.original.entropy_bits, cmp.jumbled.entropy_bits);
    }

    #[test]
    fn syllable_mode_unigram_delta_is_zero() {
        let text = "pratipAdiMcinaTlu padmavibhUShaN^ sAdhyamainaMta kAryAlayaM";
        let c = cfg(42, Granularity::Syllable);
        let out = jumble_text(text, &c, table());
        let cmp = compare_entropy::<f64>(
            text,
            &out,
            Mode::Syllable,
            &WindowSpec::new(1),
            table(),
            2.0,
        )
        .unwrap();
        assert_eq!(cmp.delta, 0.0);
    }

    #[test]
    fn rejection_sampling_is_in_range() {
        let mut rng = SplitMix64::new(77);
        for bound in [1u64, 2, 3, 7, 100] {
            for _ in 0..200 {
                assert!(rng.next_below(bound) < bound);
            }
        }
        for _ in 0..200 {
            let f = rng.next_f64();
            assert!((0.0..1.0).contains(&f));
        }
    }
}
